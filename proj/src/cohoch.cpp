#include "strtop/cohoch.hpp"

#include <sstream>

namespace strtop {

Necklace make_necklace(const Coalgebra& C, int marked, std::vector<int> letters) {
    int at = C.target(marked);
    for (int g : letters) {
        if (C.degree(g) < 1) throw std::invalid_argument("necklace letters must have degree >= 1");
        if (C.source(g) != at) throw EndpointMismatch("necklace beads do not compose at " + C.describe(g));
        at = C.target(g);
    }
    if (at != C.source(marked)) throw EndpointMismatch("necklace does not close up at " + C.describe(marked));
    return Necklace{marked, std::move(letters)};
}

int necklace_degree(const Coalgebra& C, const Necklace& x) {
    return C.degree(x.marked) + letters_degree(C, x.letters, 0, x.letters.size());
}

Word necklace_word(const Coalgebra& C, const Necklace& x) {
    return Word{C.target(x.marked), C.source(x.marked), x.letters};
}

CoHochElem attach(const Coalgebra& C, int marked, const CobarElem& a) {
    CoHochElem out;
    for (const auto& [w, c] : a) {
        if (w.src != C.target(marked) || w.tgt != C.source(marked))
            throw EndpointMismatch("word does not close the necklace at " + C.describe(marked));
        out.add(Necklace{marked, w.letters}, c);
    }
    return out;
}

// τ carries the rotation terms. Relative to the printed rotation signs, the
// first term has an extra −(−1)^{|x0''|} and the second an extra −(−1)^{|x0'|}:
// this is the only choice (with d_C ⊠ id and (−1)^{|x0|} id ⊠ d_Ω unchanged)
// that squares to zero together with the x²/y² cobar identities and the edge
// formula for ι.
CoHochElem cohoch_d(const Coalgebra& C, const Necklace& x) {
    CoHochElem out;
    const int x0 = x.marked;
    const int dx0 = C.degree(x0);
    for (const auto& t : C.differential(x0)) out.add(Necklace{t.g, x.letters}, Scalar(t.c));
    const Word w = necklace_word(C, x);
    for (const auto& [v, c] : cobar_d(C, w)) out.add(Necklace{x0, v.letters}, c * sign_of(dx0));
    const int wdeg = word_degree(C, w);
    for (const auto& t : C.coproduct(x0)) {
        const int da = C.degree(t.a), db = C.degree(t.b);
        if (db >= 1) {
            Necklace n{t.a, {t.b}};
            n.letters.insert(n.letters.end(), x.letters.begin(), x.letters.end());
            out.add(std::move(n), Scalar(t.c * sgn(dx0)));
        }
        if (da >= 1) {
            Necklace n{t.b, x.letters};
            n.letters.push_back(t.a);
            out.add(std::move(n), Scalar(-t.c * sgn((da + 1) * (db + wdeg) + da)));
        }
    }
    return out;
}

CoHochElem cohoch_d(const Coalgebra& C, const CoHochElem& x) {
    CoHochElem out;
    for (const auto& [n, c] : x) out.add(cohoch_d(C, n), c);
    return out;
}

std::set<int> support_vertices(const Coalgebra& C, const Necklace& x) {
    std::set<int> s;
    add_support(C, x.marked, s);
    for (int g : x.letters) add_support(C, g, s);
    return s;
}

std::set<int> support_vertices(const Coalgebra& C, const CoHochElem& x) {
    std::set<int> s;
    for (const auto& [n, c] : x) s.merge(support_vertices(C, n));
    return s;
}

bool necklace_in(const Coalgebra& C, const Necklace& x, const Subcomplex& Z) {
    if (!gen_in(C, x.marked, Z)) return false;
    for (int g : x.letters)
        if (!gen_in(C, g, Z)) return false;
    return true;
}

bool is_m_local(const Coalgebra& C, const Necklace& x, int m) {
    auto s = support_vertices(C, x);
    return vertex_set_diameter(C.complex(), {s.begin(), s.end()}) <= m;
}

bool is_m_local(const Coalgebra& C, const CoHochElem& x, int m) {
    for (const auto& [n, c] : x)
        if (!is_m_local(C, n, m)) return false;
    return true;
}

std::vector<Necklace> enumerate_necklaces(const Coalgebra& C, int degree, int max_len, const Subcomplex* Z) {
    std::vector<Necklace> out;
    for (int g = 0; g < C.num_gens(); ++g) {
        const int dg = C.degree(g);
        if (dg > degree) continue;
        if (Z && !gen_in(C, g, *Z)) continue;
        for (Word& w : enumerate_words(C, C.target(g), C.source(g), degree - dg, max_len, Z))
            out.push_back(Necklace{g, std::move(w.letters)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Necklace> local_basis(const Coalgebra& C, int degree, int max_len, int m) {
    std::vector<Necklace> out;
    for (auto& n : enumerate_necklaces(C, degree, max_len))
        if (is_m_local(C, n, m)) out.push_back(std::move(n));
    return out;
}

CoalgebraReport verify_cohoch_dsquare(const Coalgebra& C, int degree_bound, int word_bound) {
    CoalgebraReport r;
    for (int d = 0; d <= degree_bound; ++d)
        for (const Necklace& n : enumerate_necklaces(C, d, word_bound)) {
            ++r.checked;
            CoHochElem dd = cohoch_d(C, cohoch_d(C, n));
            if (!dd.empty()) r.failures.push_back("∂² ≠ 0 on " + describe(C, n) + ": " + describe(C, dd));
        }
    return r;
}

CoalgebraReport verify_support_monotone(const Coalgebra& C, int degree_bound, int word_bound) {
    CoalgebraReport r;
    for (int d = 0; d <= degree_bound; ++d)
        for (const Necklace& n : enumerate_necklaces(C, d, word_bound)) {
            ++r.checked;
            auto s = support_vertices(C, n);
            for (int v : support_vertices(C, cohoch_d(C, n)))
                if (!s.count(v)) {
                    r.failures.push_back("∂ enlarges support of " + describe(C, n));
                    break;
                }
        }
    return r;
}

std::string describe(const Coalgebra& C, const Necklace& x) {
    std::ostringstream os;
    os << C.describe(x.marked) << "{";
    for (std::size_t i = 0; i < x.letters.size(); ++i) os << (i ? "|" : "") << C.describe(x.letters[i]);
    os << "}";
    return os.str();
}

std::string describe(const Coalgebra& C, const CoHochElem& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : x) {
        os << (first ? "" : " + ") << c.str() << "*" << describe(C, n);
        first = false;
    }
    return os.str();
}

PrimitiveResult<Necklace> supported_primitive(const Coalgebra& C, const CoHochElem& z, const Subcomplex& Z,
                                              const SolverConfig& cfg) {
    if (z.empty()) return PrimitiveResult<Necklace>{true, {}, {}, 0};
    if (!cohoch_d(C, z).empty()) throw NotClosed("supported_primitive: input is not a cycle");
    const int deg = necklace_degree(C, z.begin()->first) + 1;
    return solve_primitive<Necklace>(
        z,
        [&](int L) {
            // short words first, so pivots (and hence solutions) prefer them
            auto v = enumerate_necklaces(C, deg, L, &Z);
            std::stable_sort(v.begin(), v.end(), [](const Necklace& a, const Necklace& b) { return a.letters.size() < b.letters.size(); });
            return v;
        },
        [&](const Necklace& n) { return cohoch_d(C, n); }, cfg);
}

CoHochElem require_primitive(const Coalgebra& C, const CoHochElem& z, const Subcomplex& Z, const SolverConfig& cfg) {
    auto r = supported_primitive(C, z, Z, cfg);
    if (!r.found) throw SolverExhausted("no supported primitive with words up to " + std::to_string(r.word_bound), r.word_bound, r.ranks);
    return r.y;
}

// ---- constant loops -------------------------------------------------------

int transport_gen(const Coalgebra& from, const Coalgebra& to, const std::vector<int>& vm, int g) {
    const SimplicialComplex& A = from.complex();
    const SimplicialComplex& B = to.complex();
    const GenInfo& gi = from.info(g);
    std::vector<int> vs;
    for (int v : A.vertices(gi.base)) vs.push_back(vm.at(v));
    int s = B.find(vs);
    if (s < 0) throw std::logic_error("transport: image simplex missing");
    if (gi.kind == GenKind::Simplex) return to.simplex_gen(s);
    return to.inverted_gen(s, gi.kind == GenKind::InvX ? 'x' : 'y', gi.level);
}

namespace {

CoHochElem transport(const Coalgebra& from, const Coalgebra& to, const std::vector<int>& vm, const CoHochElem& x) {
    CoHochElem out;
    for (const auto& [n, c] : x) {
        Necklace m{transport_gen(from, to, vm, n.marked), {}};
        for (int g : n.letters) m.letters.push_back(transport_gen(from, to, vm, g));
        out.add(std::move(m), c);
    }
    return out;
}

CoHochElem iota_low(const Coalgebra& C, int s) {
    const SimplicialComplex& K = C.complex();
    if (K.dim(s) == 0) return CoHochElem(Necklace{C.vertex_gen(s), {}});
    int v = K.vertices(s)[0], w = K.vertices(s)[1];
    CoHochElem out(Necklace{C.simplex_gen(s), {C.check(s)}});
    out.add(Necklace{C.vertex_gen(v), {C.inverted_gen(s, 'x', 2)}}, Scalar(1));
    out.add(Necklace{C.vertex_gen(w), {C.inverted_gen(s, 'y', 2)}}, Scalar(1));
    return out;
}

}  // namespace

ConstantLoops::ConstantLoops(CoalgebraPtr C, SolverConfig cfg) : C_(std::move(C)), cfg_(cfg) {
    if (!C_->inverted()) throw std::invalid_argument("constant loops need the edge-inverted coalgebra");
}

const std::pair<CoalgebraPtr, CoHochElem>& ConstantLoops::standard(int dim) const {
    auto it = standard_.find(dim);
    if (it != standard_.end()) return it->second;
    auto S = std::make_shared<const SimplicialComplex>(bundled::simplex(dim));
    CoalgebraPtr Cs = std::make_shared<const Coalgebra>(S, true, C_->max_level());
    const int top = S->num_simplices() - 1;
    CoHochElem target;
    if (dim <= 1) {
        target = iota_low(*Cs, top);
    } else {
        // ι(δ top), faces transported from the standard (dim-1)-simplex
        const auto& [Cf, yf] = standard(dim - 1);
        const auto& faces = S->faces(top);
        CoHochElem rhs;
        for (int i = 0; i <= dim; ++i) {
            std::vector<int> vm = S->vertices(faces[i]);
            rhs.add(transport(*Cf, *Cs, vm, yf), sign_of(i));
        }
        Subcomplex Z = Subcomplex::whole(*S);
        SolverConfig cfg = cfg_;
        cfg.ring = Ring::rationals();
        auto res = supported_primitive(*Cs, rhs, Z, cfg);
        log_[dim] = res.ranks;
        if (!res.found) throw SolverExhausted("constant loops: no primitive on the standard " + std::to_string(dim) + "-simplex", cfg.max_len);
        for (const auto& [n, c] : res.y)
            if (!c.is_integral()) throw std::logic_error("constant loops: non-integral solution");
        // store with plain integer coefficients
        for (const auto& [n, c] : res.y) target.add(n, Scalar(c.to_int()));
    }
    return standard_.emplace(dim, std::make_pair(Cs, std::move(target))).first->second;
}

CoHochElem ConstantLoops::operator()(int s) const {
    const SimplicialComplex& K = C_->complex();
    if (K.dim(s) <= 1) return iota_low(*C_, s);
    std::lock_guard<std::mutex> lock(mu_);
    const auto& [Cs, y] = standard(K.dim(s));
    return transport(*Cs, *C_, K.vertices(s), y);
}

CoHochElem ConstantLoops::apply(const Chain<int>& c) const {
    CoHochElem out;
    for (const auto& [s, k] : c) out.add((*this)(s), k);
    return out;
}

// ---- local retraction -----------------------------------------------------

LocalRetraction::LocalRetraction(const ConstantLoops& iota, const FinenessCertificate& cert, Ring ring)
    : iota_(iota), cert_(cert), ring_(std::move(ring)) {}

const Subcomplex& LocalRetraction::zone(const Necklace& x) const {
    const auto v = support_vertices(iota_.coalgebra(), x);
    return cert_.Z_of_vertices(std::vector<int>(v.begin(), v.end())).Z;
}

Chain<int> LocalRetraction::simplicial(const Necklace& x) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(x);
        if (it != memo_.end()) return it->second;
    }
    const Coalgebra& C = iota_.coalgebra();
    const SimplicialComplex& K = C.complex();
    const int k = necklace_degree(C, x);
    Chain<int> c;
    if (k == 0) {
        c.add(C.source(x.marked), Scalar(1));
    } else if (k == 1) {
        const GenInfo& g = C.info(x.marked);
        if (g.level == 1 && g.kind == GenKind::Simplex) c.add(g.base, Scalar(1));
        if (g.level == 1 && g.kind == GenKind::InvY) c.add(g.base, Scalar(-1));
    } else {
        const Chain<int> b = simplicial(cohoch_d(C, x));
        if (!b.empty()) {
            const Subcomplex& Z = zone(x);
            std::vector<int> cols;
            for (int s : Z.simplices())
                if (K.dim(s) == k) cols.push_back(s);
            std::map<int, int> row;
            int n = 0;
            for (const auto& [f, v] : b) row.emplace(f, 0);
            for (int s : cols)
                for (const auto& [f, v] : K.boundary(s)) row.emplace(f, 0);
            for (auto& [f, i] : row) i = n++;
            Eliminator E(n, ring_);
            for (int s : cols) {
                SparseVec col;
                for (const auto& [f, v] : K.boundary(s)) col.push_back({row[f], v.in(ring_)});
                std::sort(col.begin(), col.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
                E.add_column(col);
            }
            SparseVec rhs;
            for (const auto& [f, v] : b) rhs.push_back({row[f], v.in(ring_)});
            std::sort(rhs.begin(), rhs.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
            auto sol = E.solve(rhs);
            if (!sol) throw SolverExhausted("no simplicial primitive of g(∂x) in Z_{Supp x} for " + describe(C, x), k);
            for (const auto& [j, v] : *sol) c.add(cols[j], v);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(x, std::move(c)).first->second;
}

Chain<int> LocalRetraction::simplicial(const CoHochElem& x) const {
    Chain<int> out;
    for (const auto& [n, c] : x) out.add(simplicial(n), c);
    return out;
}

CoHochElem LocalRetraction::operator()(const Necklace& x) const { return iota_.apply(simplicial(x)); }

CoHochElem LocalRetraction::operator()(const CoHochElem& x) const { return iota_.apply(simplicial(x)); }

std::vector<Necklace> LocalRetraction::verify(const std::vector<Necklace>& xs) const {
    const Coalgebra& C = iota_.coalgebra();
    std::vector<Necklace> bad;
    for (const Necklace& x : xs) {
        const CoHochElem gx = (*this)(x);
        bool ok = cohoch_d(C, gx) == (*this)(cohoch_d(C, x));
        if (ok && !gx.empty()) {
            const Subcomplex& Z = zone(x);
            for (const auto& [y, c] : gx)
                if (!necklace_in(C, y, Z)) ok = false;
        }
        if (!ok) bad.push_back(x);
    }
    return bad;
}

}  // namespace strtop
