#include "strtop/pairing.hpp"

#include <array>
#include <functional>

#include "strtop/fineness.hpp"

namespace strtop {

namespace {

std::vector<int> positions(const SimplicialComplex& K) {
    std::vector<int> pos(K.num_simplices());
    for (int d = 0; d <= K.dim(); ++d) {
        const auto& v = K.of_dim(d);
        for (std::size_t i = 0; i < v.size(); ++i) pos[v[i]] = static_cast<int>(i);
    }
    return pos;
}

const std::vector<int>& of_dim_or_empty(const SimplicialComplex& K, int d) {
    static const std::vector<int> none;
    return d < 0 || d > K.dim() ? none : K.of_dim(d);
}

// simplices containing each vertex
std::vector<std::vector<int>> vertex_stars(const SimplicialComplex& K) {
    std::vector<std::vector<int>> st(K.num_vertices());
    for (int s = 0; s < K.num_simplices(); ++s)
        for (int v : K.vertices(s)) st[v].push_back(s);
    return st;
}

bool meet(const SimplicialComplex& K, int a, int b) {
    const auto& x = K.vertices(a);
    const auto& y = K.vertices(b);
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) return true;
        if (x[i] < y[j]) ++i;
        else ++j;
    }
    return false;
}

Scalar evaluate(const Chain<int>& cochain, const Chain<int>& chain) {
    Scalar s(0);
    for (const auto& [k, c] : chain) s += c * cochain.coeff(k);
    return s;
}

// sparse affine system with keyed rows
struct System {
    std::map<std::array<int, 3>, int> rows;
    std::vector<std::map<int, Scalar>> cols;
    int row(int a, int b, int c) { return rows.emplace(std::array<int, 3>{a, b, c}, static_cast<int>(rows.size())).first->second; }
    int column() {
        cols.emplace_back();
        return static_cast<int>(cols.size()) - 1;
    }
    void add(int col, int r, const Scalar& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = cols[col].try_emplace(r, v);
        if (!fresh) it->second += v;
    }
    std::optional<SparseVec> solve(const std::map<int, Scalar>& rhs, const Ring& ring) const {
        Eliminator E(static_cast<int>(rows.size()), ring);
        for (const auto& c : cols) {
            SparseVec v;
            for (const auto& [r, x] : c)
                if (!x.in(ring).is_zero()) v.push_back({r, x.in(ring)});
            E.add_column(v);
        }
        SparseVec b;
        for (const auto& [r, x] : rhs)
            if (!x.in(ring).is_zero()) b.push_back({r, x.in(ring)});
        auto x = E.solve(b);
        if (!x) return x;
        // residual check on the assembled system
        std::map<int, Scalar> res;
        for (const auto& [j, c] : *x)
            for (const auto& [r, a] : cols[j]) res[r] += (a * c).in(ring);
        for (const auto& [r, v] : rhs) res[r] -= v.in(ring);
        for (const auto& [r, v] : res)
            if (!v.is_zero()) throw std::logic_error("linear system solution failed re-verification");
        return x;
    }
};

}  // namespace

Scalar LocalPairing::operator()(int a, int b) const {
    auto it = table.find({a, b});
    return it == table.end() ? Scalar(0) : it->second;
}

bool pairing_is_local(const SimplicialComplex& K, const LocalPairing& th) {
    for (const auto& [p, c] : th.table)
        if (!c.is_zero() && (!meet(K, p.first, p.second) || K.dim(p.first) + K.dim(p.second) != th.n)) return false;
    return true;
}

std::vector<SimplexPair> pairing_cocycle_defects(const SimplicialComplex& K, const LocalPairing& th) {
    std::map<SimplexPair, Scalar> rows;
    for (const auto& [p, c] : th.table) {
        const auto [s, t] = p;
        for (int a : K.cofaces(s)) rows[{a, t}] += c * Scalar(K.incidence(s, a));
        for (int b : K.cofaces(t)) rows[{s, b}] += c * Scalar(K.incidence(t, b) * sgn(K.dim(s)));
    }
    std::vector<SimplexPair> out;
    for (const auto& [p, v] : rows)
        if (!v.in(th.ring).is_zero()) out.push_back(p);
    return out;
}

std::vector<HomologyBasis> homology_bases(const SimplicialComplex& K, const Ring& ring) {
    if (!ring.is_field()) throw NonFieldCoefficients();
    const auto pos = positions(K);
    std::vector<HomologyBasis> out(K.dim() + 1);
    for (int p = 0; p <= K.dim(); ++p) {
        const auto& Sp = K.of_dim(p);
        const auto& Sdown = of_dim_or_empty(K, p - 1);
        const auto& Sup = of_dim_or_empty(K, p + 1);
        Eliminator Z(std::max<int>(1, Sdown.size()), ring);
        for (int s : Sp) {
            SparseVec col;
            if (p > 0)
                for (int f : K.faces(s)) col.push_back({pos[f], Scalar(ring, K.incidence(f, s))});
            std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
            Z.add_column(col);
        }
        Eliminator B(Sp.size(), ring, false);
        for (int e : Sup) {
            SparseVec col;
            for (int f : K.faces(e)) col.push_back({pos[f], Scalar(ring, K.incidence(f, e))});
            std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
            B.add_column(col);
        }
        for (const SparseVec& z : Z.kernel())
            if (B.add_column(z)) {
                Chain<int> c;
                for (const auto& [i, v] : z) c.add(Sp[i], v);
                out[p].cycles.push_back(std::move(c));
            }
        // dual cocycles: u(∂e) = 0 for all e, u(z_j) = δ_ij
        const int r = static_cast<int>(out[p].cycles.size());
        const int nrows = static_cast<int>(Sup.size()) + r;
        Eliminator U(std::max(1, nrows), ring);
        for (int s : Sp) {
            SparseVec col;
            for (int e : K.cofaces(s)) col.push_back({pos[e], Scalar(ring, K.incidence(s, e))});
            for (int j = 0; j < r; ++j) {
                Scalar v = out[p].cycles[j].coeff(s);
                if (!v.is_zero()) col.push_back({static_cast<int>(Sup.size()) + j, v});
            }
            std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
            U.add_column(col);
        }
        for (int i = 0; i < r; ++i) {
            auto x = U.solve({{static_cast<int>(Sup.size()) + i, Scalar(ring, 1)}});
            if (!x) throw std::logic_error("no dual cocycle for a homology class");
            Chain<int> u;
            for (const auto& [j, v] : *x) u.add(Sp[j], v);
            out[p].cocycles.push_back(std::move(u));
        }
    }
    return out;
}

std::vector<int> betti_numbers(const SimplicialComplex& K, const Ring& ring) {
    std::vector<int> b;
    for (const auto& h : homology_bases(K, ring)) b.push_back(static_cast<int>(h.cycles.size()));
    return b;
}

Chain<int> default_fundamental_chain(const SimplicialComplex& K, const Ring& ring) {
    const int n = K.dim();
    Chain<int> o;
    if (n < 0) return o;
    const auto pos = positions(K);
    const auto& Sn = K.of_dim(n);
    Eliminator Z(std::max<int>(1, of_dim_or_empty(K, n - 1).size()), ring);
    for (int s : Sn) {
        SparseVec col;
        if (n > 0)
            for (int f : K.faces(s)) col.push_back({pos[f], Scalar(ring, K.incidence(f, s))});
        std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
        Z.add_column(col);
    }
    if (Z.kernel().size() == 1) {
        const SparseVec& z = Z.kernel().front();
        Scalar inv = z.front().second.inverse();
        for (const auto& [i, v] : z) o.add(Sn[i], v * inv);
        return o;
    }
    for (int s : Sn) o.add(s, Scalar(ring, 1));
    return o;
}

// ---- caps -------------------------------------------------------------------

Chain<int> whitney_cap(const SimplicialComplex& K, const Chain<int>& c, int rho) {
    Chain<int> out;
    const int p = K.dim(rho);
    for (const auto& [s, v] : c) {
        const int q = K.dim(s);
        if (q < p) continue;
        const auto& vs = K.vertices(s);
        std::vector<int> back(vs.begin() + (q - p), vs.end());
        if (K.find(back) != rho) continue;
        out.add(K.find(std::vector<int>(vs.begin(), vs.begin() + (q - p) + 1)), v);
    }
    return out;
}

Chain<int> subdivide_chain(const SimplicialComplex& K, const SimplicialComplex& Kp, const Chain<int>& c) {
    std::map<int, Chain<int>> memo;
    std::function<const Chain<int>&(int)> sd = [&](int s) -> const Chain<int>& {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        Chain<int> r;
        const int j = K.dim(s);
        if (j == 0) {
            r.add(s, Scalar(1));
        } else {
            for (int i = 0; i <= j; ++i)
                for (const auto& [t, v] : sd(K.faces(s)[i])) {
                    std::vector<int> vs = Kp.vertices(t);
                    vs.push_back(s);  // barycentre of s has the largest id
                    int u = Kp.find(vs);
                    if (u < 0) throw std::logic_error("sd: cone simplex missing");
                    r.add(u, v * Scalar(sgn(i + j)));
                }
        }
        return memo.emplace(s, std::move(r)).first->second;
    };
    Chain<int> out;
    for (const auto& [s, v] : c) out.add(sd(s), v);
    return out;
}

Chain<int> coboundary(const SimplicialComplex& K, int rho) {
    Chain<int> out;
    for (int a : K.cofaces(rho)) out.add(a, Scalar(K.incidence(rho, a)));
    return out;
}

Chain<int> coboundary(const SimplicialComplex& K, const Chain<int>& phi) {
    Chain<int> out;
    for (const auto& [r, v] : phi) out.add(coboundary(K, r), v);
    return out;
}

CapMaps::CapMaps(ComplexPtr K, Chain<int> c) : K_(std::move(K)), c_(std::move(c)) {
    Kp_ = std::make_shared<const SimplicialComplex>(barycentric_subdivide_once(K_));
    k_ = c_.empty() ? 0 : K_->dim(c_.begin()->first);
    for (const auto& [s, v] : c_)
        if (K_->dim(s) != k_) throw std::invalid_argument("cap: chain is not homogeneous");
}

int CapMaps::carrier_top(int t) const { return Kp_->vertices(t).back(); }

int CapMaps::whitney_sign(int k, int p) { return sgn(static_cast<long long>(k) * p - p * (p - 1) / 2 + k * (k + 1) / 2); }

Chain<int> CapMaps::flexner(int rho) const {
    const SimplicialComplex& K = *K_;
    Chain<int> out;
    for (const auto& [s, v] : c_) {
        if (!K.is_face(rho, s)) continue;
        std::vector<int> flag{rho};
        std::function<void(int)> walk = [&](int coef) {
            int cur = flag.back();
            if (cur == s) {
                out.add(Kp_->find(flag), v * Scalar(coef));
                return;
            }
            for (int a : K.cofaces(cur)) {
                if (!K.is_face(a, s)) continue;
                flag.push_back(a);
                walk(coef * K.incidence(cur, a));
                flag.pop_back();
            }
        };
        walk(1);
    }
    return out;
}

Chain<int> CapMaps::flexner(const Chain<int>& phi) const {
    Chain<int> out;
    for (const auto& [r, v] : phi) out.add(flexner(r), v);
    return out;
}

Chain<int> CapMaps::whitney(int rho) const {
    return subdivide_chain(*K_, *Kp_, whitney_cap(*K_, c_, rho)) * Scalar(whitney_sign(k_, K_->dim(rho)));
}

Chain<int> CapMaps::whitney(const Chain<int>& phi) const {
    Chain<int> out;
    for (const auto& [r, v] : phi) out.add(whitney(r), v);
    return out;
}

CapMaps::Report CapMaps::verify_flexner_chain_map() const {
    Report r;
    for (int rho = 0; rho < K_->num_simplices(); ++rho) {
        ++r.checked;
        if (Kp_->boundary(flexner(rho)) != flexner(coboundary(*K_, rho))) {
            r.ok = false;
            r.failures.push_back("Flexner cap is not a chain map at " + K_->describe_simplex(rho));
        }
    }
    return r;
}

CapMaps::Report CapMaps::verify_whitney_chain_map() const {
    Report r;
    for (int rho = 0; rho < K_->num_simplices(); ++rho) {
        ++r.checked;
        if (Kp_->boundary(whitney(rho)) != whitney(coboundary(*K_, rho))) {
            r.ok = false;
            r.failures.push_back("subdivided cap is not a chain map at " + K_->describe_simplex(rho));
        }
    }
    return r;
}

CapMaps::Report CapMaps::verify_flexner_local() const {
    Report r;
    for (int rho = 0; rho < K_->num_simplices(); ++rho)
        for (const auto& [t, v] : flexner(rho)) {
            ++r.checked;
            if (!K_->is_face(rho, Kp_->vertices(t).front())) {
                r.ok = false;
                r.failures.push_back("Flexner image of " + K_->describe_simplex(rho) + " leaves the dual cells above it");
            }
        }
    return r;
}

CapMaps::Homotopy CapMaps::find_local_homotopy(const Ring& ring) const {
    if (!ring.is_field()) throw NonFieldCoefficients();
    const SimplicialComplex& K = *K_;
    const SimplicialComplex& Kp = *Kp_;
    Homotopy H;
    if (c_.empty()) return H;
    auto stars = vertex_stars(K);
    // K' simplices indexed by (dimension, carrier)
    std::map<std::pair<int, int>, std::vector<int>> by_top;
    for (int t = 0; t < Kp.num_simplices(); ++t) by_top[{Kp.dim(t), carrier_top(t)}].push_back(t);
    SolverConfig cfg;
    cfg.ring = ring;
    cfg.start_len = cfg.max_len = 0;
    for (int p = std::min(k_, K.dim()); p >= 0; --p)
        for (int rho : K.of_dim(p)) {
            Chain<int> r = flexner(rho) - whitney(rho);
            for (const auto& [a, v] : coboundary(K, rho)) {
                auto it = H.h.find(a);
                if (it != H.h.end()) r.add(it->second, -v);
            }
            if (r.empty()) continue;
            std::set<int> near;
            for (int v : K.vertices(rho)) near.insert(stars[v].begin(), stars[v].end());
            std::vector<int> cand;
            for (int s : near) {
                auto it = by_top.find({k_ - p + 1, s});
                if (it != by_top.end()) cand.insert(cand.end(), it->second.begin(), it->second.end());
            }
            std::sort(cand.begin(), cand.end());
            auto res = solve_primitive<int>(
                r, [&](int) { return cand; }, [&](int t) { return Kp.boundary(t); }, cfg);
            H.ranks.insert(H.ranks.end(), res.ranks.begin(), res.ranks.end());
            if (!res.found) throw SolverExhausted("no local homotopy at " + K.describe_simplex(rho), 0);
            if (!res.y.empty()) H.h[rho] = res.y;
        }
    return H;
}

CapMaps::Report CapMaps::verify_homotopy(const Homotopy& H) const {
    Report r;
    const SimplicialComplex& K = *K_;
    auto h = [&](int rho) {
        auto it = H.h.find(rho);
        return it == H.h.end() ? Chain<int>() : it->second;
    };
    for (int rho = 0; rho < K.num_simplices(); ++rho) {
        ++r.checked;
        Chain<int> lhs = Kp_->boundary(h(rho));
        for (const auto& [a, v] : coboundary(K, rho)) lhs.add(h(a), v);
        if (lhs != flexner(rho) - whitney(rho)) {
            r.ok = false;
            r.failures.push_back("homotopy equation fails at " + K.describe_simplex(rho));
        }
        for (const auto& [t, v] : h(rho))
            if (!meet(K, carrier_top(t), rho)) {
                r.ok = false;
                r.failures.push_back("homotopy not 1-local at " + K.describe_simplex(rho));
            }
    }
    return r;
}

std::vector<int> CapMaps::cone_homology(const Ring& ring) const {
    // Cone_j = C^{k-j+1}(K) ⊕ C_j(K'),  d(a, b) = (−δ* a, F a + ∂' b)
    const SimplicialComplex& K = *K_;
    const SimplicialComplex& Kp = *Kp_;
    const auto posK = positions(K);
    const auto posP = positions(Kp);
    const int top = std::max(k_ + 1, Kp.dim() + 1);
    auto A = [&](int j) -> const std::vector<int>& { return of_dim_or_empty(K, k_ - j + 1); };
    auto B = [&](int j) -> const std::vector<int>& { return of_dim_or_empty(Kp, j); };
    auto size = [&](int j) { return static_cast<int>(A(j).size() + B(j).size()); };
    std::vector<int> rank(top + 2, 0);
    for (int j = 1; j <= top; ++j) {
        const int off = static_cast<int>(A(j - 1).size());
        Eliminator E(std::max(1, size(j - 1)), ring, false);
        auto push = [&](Chain<int> a_part, Chain<int> b_part) {
            SparseVec col;
            for (const auto& [s, v] : a_part) col.push_back({posK[s], v.in(ring)});
            for (const auto& [t, v] : b_part) col.push_back({off + posP[t], v.in(ring)});
            std::sort(col.begin(), col.end(), [](auto& x, auto& y) { return x.first < y.first; });
            SparseVec clean;
            for (auto& e : col)
                if (!e.second.is_zero()) clean.push_back(e);
            E.add_column(clean);
        };
        for (int a : A(j)) push(coboundary(K, a) * Scalar(-1), flexner(a));
        for (int b : B(j)) push({}, Kp.boundary(b));
        rank[j] = E.rank();
    }
    std::vector<int> h;
    for (int j = 0; j <= top; ++j) h.push_back(size(j) - rank[j] - rank[j + 1]);
    return h;
}

CapMaps::ControlledInverse CapMaps::find_controlled_inverse(const Ring& ring, long max_unknowns) const {
    // f: C_j(K') -> C^{k-j}(K), f(s) on τ ≥ first(s); h: C_j(K') -> C_{j+1}(K') on
    // chains starting above first(s). Local maps into cochains of lower degree
    // vanish, so the cochain-side homotopy is zero and f F = id exactly.
    const SimplicialComplex& K = *K_;
    const SimplicialComplex& Kp = *Kp_;
    ControlledInverse out;
    std::vector<std::vector<int>> above(K.num_simplices());
    for (int a = 0; a < K.num_simplices(); ++a)
        for (int b = 0; b < K.num_simplices(); ++b)
            if (K.is_face(a, b)) above[a].push_back(b);
    std::map<std::pair<int, int>, std::vector<int>> kp_by_first;  // (dim, first) -> K' simplices
    for (int t = 0; t < Kp.num_simplices(); ++t) kp_by_first[{Kp.dim(t), Kp.vertices(t).front()}].push_back(t);
    // count first
    long count = 0;
    for (int s = 0; s < Kp.num_simplices(); ++s) {
        int first = Kp.vertices(s).front();
        for (int tau : above[first])
            if (K.dim(tau) == k_ - Kp.dim(s)) ++count;
        for (int tau : above[first]) {
            auto it = kp_by_first.find({Kp.dim(s) + 1, tau});
            if (it != kp_by_first.end()) count += static_cast<long>(it->second.size());
        }
    }
    out.unknowns = count;
    if (count > max_unknowns) return out;
    out.attempted = true;
    // F as a table: K' simplex -> (ρ, coefficient)
    std::vector<std::vector<std::pair<int, Scalar>>> Fin(Kp.num_simplices());
    std::vector<Chain<int>> Fout(K.num_simplices());
    for (int rho = 0; rho < K.num_simplices(); ++rho) {
        Fout[rho] = flexner(rho);
        for (const auto& [t, v] : Fout[rho]) Fin[t].push_back({rho, v});
    }
    System S;
    enum { ChainMap = 0, LeftInverse = 1, RightHomotopy = 2 };
    std::vector<std::tuple<char, int, int>> var;
    std::map<int, Scalar> rhs;
    for (int s = 0; s < Kp.num_simplices(); ++s) {
        const int first = Kp.vertices(s).front();
        for (int tau : above[first]) {
            if (K.dim(tau) != k_ - Kp.dim(s)) continue;
            int c = S.column();
            var.emplace_back('f', s, tau);
            // f ∂' = δ* f
            for (int u : Kp.cofaces(s)) S.add(c, S.row(ChainMap, u, tau), Scalar(Kp.incidence(s, u)));
            for (int a : K.cofaces(tau)) S.add(c, S.row(ChainMap, s, a), Scalar(-K.incidence(tau, a)));
            // f F (ρ∨) = ρ∨
            for (const auto& [rho, v] : Fin[s]) S.add(c, S.row(LeftInverse, rho, tau), v);
            // F f − id = ∂' h + h ∂'
            for (const auto& [t, v] : Fout[tau]) S.add(c, S.row(RightHomotopy, s, t), v);
        }
        for (int tau : above[first]) {
            auto it = kp_by_first.find({Kp.dim(s) + 1, tau});
            if (it == kp_by_first.end()) continue;
            for (int u : it->second) {
                int c = S.column();
                var.emplace_back('h', s, u);
                for (int t : Kp.faces(u)) S.add(c, S.row(RightHomotopy, s, t), Scalar(-Kp.incidence(t, u)));
                for (int w : Kp.cofaces(s)) S.add(c, S.row(RightHomotopy, w, u), Scalar(-Kp.incidence(s, w)));
            }
        }
    }
    for (int rho = 0; rho < K.num_simplices(); ++rho)
        if (K.dim(rho) <= k_) rhs[S.row(LeftInverse, rho, rho)] = Scalar(1);
    for (int s = 0; s < Kp.num_simplices(); ++s) rhs[S.row(RightHomotopy, s, s)] = Scalar(1);
    auto x = S.solve(rhs, ring);
    if (!x) return out;
    out.found = true;
    for (const auto& [j, v] : *x) {
        auto [kind, a, b] = var[j];
        (kind == 'f' ? out.f : out.g)[a].add(b, v);
    }
    return out;
}

// ---- nondegeneracy ----------------------------------------------------------

namespace {

int sign_kappa(int n, int ds, int dt) { return sgn(static_cast<long long>(dt) * (n - ds)); }

}  // namespace

Chain<SimplexPair> cap_with_product(const SimplicialComplex& K, const LocalPairing& th, const Chain<int>& o) {
    Chain<SimplexPair> out;
    std::map<int, Chain<int>> caps;
    auto cap = [&](int s) -> const Chain<int>& {
        auto it = caps.find(s);
        if (it == caps.end()) it = caps.emplace(s, whitney_cap(K, o, s)).first;
        return it->second;
    };
    for (const auto& [p, v] : th.table) {
        const Scalar k = v * Scalar(sign_kappa(th.n, K.dim(p.first), K.dim(p.second)));
        for (const auto& [a, x] : cap(p.first))
            for (const auto& [b, y] : cap(p.second)) out.add(SimplexPair{a, b}, k * x * y);
    }
    return out;
}

Chain<SimplexPair> diagonal_class(const SimplicialComplex& K, const Chain<int>& o) {
    Chain<SimplexPair> out;
    for (const auto& [s, v] : o) {
        const auto& vs = K.vertices(s);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            int a = K.find(std::vector<int>(vs.begin(), vs.begin() + i + 1));
            int b = K.find(std::vector<int>(vs.begin() + i, vs.end()));
            out.add(SimplexPair{a, b}, v);
        }
    }
    return out;
}

Chain<SimplexPair> tensor_boundary(const SimplicialComplex& K, const Chain<SimplexPair>& x) {
    Chain<SimplexPair> out;
    for (const auto& [p, v] : x) {
        for (const auto& [a, c] : K.boundary(p.first)) out.add(SimplexPair{a, p.second}, v * c);
        for (const auto& [b, c] : K.boundary(p.second)) out.add(SimplexPair{p.first, b}, v * c * Scalar(sgn(K.dim(p.first))));
    }
    return out;
}

namespace {

// rows of the nondegeneracy condition: for each pair of dual cocycles (u_i, u_j)
// with |u_i| + |u_j| = n, the linear functional θ ↦ (u_i ⊗ u_j)(θ ⌢ o⊗o)
struct NondegRows {
    std::vector<std::pair<const Chain<int>*, const Chain<int>*>> rows;
    std::vector<Scalar> target;  // (u_i ⊗ u_j)(diag o)
};

NondegRows nondeg_rows(const SimplicialComplex& K, const std::vector<HomologyBasis>& hb, const Chain<int>& o, int n) {
    NondegRows R;
    Chain<SimplexPair> dg = diagonal_class(K, o);
    for (int a = 0; a <= n; ++a) {
        if (a >= static_cast<int>(hb.size()) || n - a >= static_cast<int>(hb.size())) continue;
        for (const auto& ui : hb[a].cocycles)
            for (const auto& uj : hb[n - a].cocycles) {
                R.rows.push_back({&ui, &uj});
                Scalar t(0);
                for (const auto& [p, v] : dg) t += v * ui.coeff(p.first) * uj.coeff(p.second);
                R.target.push_back(t);
            }
    }
    return R;
}

}  // namespace

NondegeneracyReport verify_nondegenerate(const SimplicialComplex& K, const LocalPairing& th, const Chain<int>& o) {
    NondegeneracyReport r;
    if (!pairing_cocycle_defects(K, th).empty()) throw NotCocycle("pairing is not a cocycle");
    r.cocycle = true;
    r.local = pairing_is_local(K, th);
    auto hb = homology_bases(K, th.ring);
    auto R = nondeg_rows(K, hb, o, th.n);
    Chain<SimplexPair> X = cap_with_product(K, th, o);
    r.nondegenerate = true;
    for (std::size_t i = 0; i < R.rows.size(); ++i) {
        Scalar v(0);
        for (const auto& [p, c] : X) v += c * R.rows[i].first->coeff(p.first) * R.rows[i].second->coeff(p.second);
        r.lhs.push_back(v.in(th.ring));
        r.rhs.push_back(R.target[i].in(th.ring));
        if (r.lhs.back() != r.rhs.back()) r.nondegenerate = false;
    }
    return r;
}

LocalPairing find_local_pairing(ComplexPtr Kp, const Chain<int>& o, int n, const Ring& ring) {
    const SimplicialComplex& K = *Kp;
    if (!ring.is_field()) throw NonFieldCoefficients();
    {
        FinenessCertificate F(Kp, 1);
        auto rep = F.verify_exhaustive();
        if (!rep.ok) throw NotFine("complex is not 1-fine: " + rep.failure, rep.witness);
        if (!rep.exhaustive) {
            const int depth = K.subdivision ? K.subdivision->depth : 0;
            if (depth < 2) throw NotFine("complex too large to certify and not subdivided twice", {});
        }
    }
    for (const auto& [s, v] : o)
        if (K.dim(s) != n) throw Infeasible("fundamental chain has the wrong dimension");
    for (const auto& [s, v] : K.boundary(o))
        if (!v.in(ring).is_zero()) throw Infeasible("fundamental chain is not a cycle");
    auto stars = vertex_stars(K);
    System S;
    std::vector<SimplexPair> var;
    for (int s = 0; s < K.num_simplices(); ++s) {
        if (K.dim(s) > n) continue;
        std::set<int> near;
        for (int v : K.vertices(s)) near.insert(stars[v].begin(), stars[v].end());
        for (int t : near)
            if (K.dim(t) == n - K.dim(s)) var.push_back({s, t});
    }
    enum { Cocycle = 0, Nondeg = 1 };
    auto hb = homology_bases(K, ring);
    auto R = nondeg_rows(K, hb, o, n);
    std::map<int, Chain<int>> caps;
    for (int s = 0; s < K.num_simplices(); ++s) caps[s] = whitney_cap(K, o, s);
    for (const auto& [s, t] : var) {
        int c = S.column();
        for (int a : K.cofaces(s)) S.add(c, S.row(Cocycle, a, t), Scalar(K.incidence(s, a)));
        for (int b : K.cofaces(t)) S.add(c, S.row(Cocycle, s, b), Scalar(K.incidence(t, b) * sgn(K.dim(s))));
        const Scalar kappa(sign_kappa(n, K.dim(s), K.dim(t)));
        for (std::size_t i = 0; i < R.rows.size(); ++i) {
            Scalar v = kappa * evaluate(*R.rows[i].first, caps[s]) * evaluate(*R.rows[i].second, caps[t]);
            S.add(c, S.row(Nondeg, static_cast<int>(i), 0), v);
        }
    }
    std::map<int, Scalar> rhs;
    for (std::size_t i = 0; i < R.rows.size(); ++i) rhs[S.row(Nondeg, static_cast<int>(i), 0)] = R.target[i];
    auto x = S.solve(rhs, ring);
    if (!x) throw Infeasible("no nondegenerate local pairing: the fundamental chain is not K-controlled");
    LocalPairing th;
    th.n = n;
    th.ring = ring;
    for (const auto& [j, v] : *x) th.table[var[j]] = v;
    auto rep = verify_nondegenerate(K, th, o);
    if (!rep.local || !rep.nondegenerate) throw std::logic_error("pairing failed re-verification");
    return th;
}

DualityReport verify_controlled_duality(ComplexPtr K, const Chain<int>& o, const Ring& ring, bool try_inverse) {
    DualityReport r;
    CapMaps M(K, o);
    r.chain_map = !o.empty() && M.verify_flexner_chain_map().ok;
    r.local = M.verify_flexner_local().ok;
    // the cone is only a complex when F is a chain map
    if (r.chain_map) r.cone_homology = M.cone_homology(ring);
    r.quasi_isomorphism = r.chain_map && std::all_of(r.cone_homology.begin(), r.cone_homology.end(), [](int h) { return h == 0; });
    if (try_inverse) r.inverse = M.find_controlled_inverse(ring);
    return r;
}

LiftedPairing::LiftedPairing(CoalgebraPtr C, LocalPairing th) : C_(std::move(C)), th_(std::move(th)) {}

std::pair<int, int> LiftedPairing::reduce(int g) const {
    const GenInfo& gi = C_->info(g);
    if (gi.kind == GenKind::Simplex) return {gi.base, 1};
    if (gi.kind == GenKind::InvY && gi.level == 1) return {gi.base, -1};
    return {-1, 0};
}

Scalar LiftedPairing::operator()(int a, int b) const {
    auto [s, es] = reduce(a);
    auto [t, et] = reduce(b);
    if (!es || !et) return Scalar(0);
    return th_(s, t) * Scalar(es * et);
}

}  // namespace strtop
