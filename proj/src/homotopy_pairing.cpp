#include "strtop/homotopy_pairing.hpp"

#include <random>
#include <sstream>

#include "strtop/fineness.hpp"

namespace strtop {

int pair_degree(const Coalgebra& C, const WordPair& p) { return word_degree(C, p.a) + word_degree(C, p.b); }

TensorElem tensor_d(const Coalgebra& C, const WordPair& p) {
    TensorElem out;
    for (const auto& [w, c] : cobar_d(C, p.a)) out.add(WordPair{w, p.b}, c);
    const Scalar s = sign_of(word_degree(C, p.a));
    for (const auto& [w, c] : cobar_d(C, p.b)) out.add(WordPair{p.a, w}, c * s);
    return out;
}

TensorElem tensor_d(const Coalgebra& C, const TensorElem& x) {
    TensorElem out;
    for (const auto& [p, c] : x) out.add(tensor_d(C, p), c);
    return out;
}

bool pair_in(const Coalgebra& C, const WordPair& p, const Subcomplex& Z) { return word_in(C, p.a, Z) && word_in(C, p.b, Z); }

std::string describe(const Coalgebra& C, const TensorElem& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : x) {
        os << (first ? "" : " + ") << c.str() << "*" << describe(C, p.a) << "⊗" << describe(C, p.b);
        first = false;
    }
    return os.str();
}

HomElement::HomElement(CoalgebraPtr C, int degree, int max_input_degree)
    : C_(std::move(C)), degree_(degree), max_input_(max_input_degree) {}

const TensorElem& HomElement::operator()(int x, int y) const {
    static const TensorElem zero;
    auto it = table_.find({x, y});
    return it == table_.end() ? zero : it->second;
}

void HomElement::set(int x, int y, TensorElem v) {
    if (v.empty()) table_.erase({x, y});
    else table_[{x, y}] = std::move(v);
}

HomElement HomElement::operator-(const HomElement& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("hom elements of different degrees");
    HomElement r(C_, degree_, std::min(max_input_, o.max_input_));
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : table_) keys.insert(k);
    for (const auto& [k, v] : o.table_) keys.insert(k);
    for (const auto& k : keys) r.set(k.first, k.second, (*this)(k.first, k.second) - o(k.first, k.second));
    return r;
}

namespace {

Word prepend(const Coalgebra& C, int g, const Word& w) {
    Word r{C.source(g), w.tgt, {g}};
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

Word append(const Coalgebra& C, const Word& w, int g) {
    Word r{w.src, C.target(g), w.letters};
    r.letters.push_back(g);
    return r;
}

}  // namespace

TensorElem hom_rest(const HomElement& phi, int x, int y) {
    const Coalgebra& C = phi.coalgebra();
    const int k = phi.degree();
    const int dx = C.degree(x), dy = C.degree(y);
    TensorElem out;
    // −(−1)^φ φ(d_{C⊗C}(x, y))
    for (const auto& t : C.differential(x)) out.add(phi(t.g, y), Scalar(-sgn(k) * t.c));
    for (const auto& t : C.differential(y)) out.add(phi(x, t.g), Scalar(-sgn(k + dx) * t.c));
    for (const auto& t : C.coproduct(x)) {
        const int d1 = C.degree(t.a), d2 = C.degree(t.b);
        // −(−1)^{φ x'} {x'} φ(x'', y)' ⊗ φ(x'', y)''
        if (d1 >= 1)
            for (const auto& [p, c] : phi(t.b, y))
                out.add(WordPair{prepend(C, t.a, p.a), p.b}, c * Scalar(-sgn(k * d1) * t.c));
        // +(−1)^{x'' y + x' + y + φ} φ(x', y)' ⊗ φ(x', y)'' {x''}
        if (d2 >= 1)
            for (const auto& [p, c] : phi(t.a, y))
                out.add(WordPair{p.a, append(C, p.b, t.b)}, c * Scalar(sgn(d2 * dy + d1 + dy + k) * t.c));
    }
    for (const auto& t : C.coproduct(y)) {
        const int d1 = C.degree(t.a), d2 = C.degree(t.b);
        // +(−1)^{φ(x,y')'' y'' + φ(x,y')'} φ(x, y')' {y''} ⊗ φ(x, y')''
        if (d2 >= 1)
            for (const auto& [p, c] : phi(x, t.a)) {
                const int A = word_degree(C, p.a), B = word_degree(C, p.b);
                out.add(WordPair{append(C, p.a, t.b), p.b}, c * Scalar(sgn(B * d2 + A) * t.c));
            }
        // −(−1)^{y' y'' + φ(x,y'')'' y' + φ(x,y'')'} φ(x, y'')' ⊗ {y'} φ(x, y'')''
        if (d1 >= 1)
            for (const auto& [p, c] : phi(x, t.b)) {
                const int A = word_degree(C, p.a), B = word_degree(C, p.b);
                out.add(WordPair{p.a, prepend(C, t.a, p.b)}, c * Scalar(-sgn(d1 * d2 + B * d1 + A) * t.c));
            }
    }
    return out;
}

TensorElem hom_differential(const HomElement& phi, int x, int y) {
    const Coalgebra& C = phi.coalgebra();
    if (C.degree(x) + C.degree(y) > phi.max_input_degree())
        throw OutOfBounds("hom differential evaluated above the input degree bound");
    // d_{Ω⊗Ω} enters with a minus sign against the other five families
    TensorElem out = tensor_d(C, phi(x, y)) * Scalar(-1);
    out.add(hom_rest(phi, x, y));
    return out;
}

bool generators_meet(const Coalgebra& C, int x, int y) {
    const auto& K = C.complex();
    const auto& a = K.vertices(C.base_simplex(x));
    const auto& b = K.vertices(C.base_simplex(y));
    for (int v : a)
        if (std::binary_search(b.begin(), b.end(), v)) return true;
    return false;
}

Subcomplex pair_support(const Coalgebra& C, int x, int y) {
    return Subcomplex(&C.complex(), {C.base_simplex(x), C.base_simplex(y)});
}

std::vector<std::pair<int, int>> generator_pairs(const Coalgebra& C, int lo, int hi, bool overlapping_only) {
    std::vector<std::vector<int>> by_deg(std::max(hi, 0) + 1);
    for (int g = 0; g < C.num_gens(); ++g)
        if (C.degree(g) <= hi) by_deg[C.degree(g)].push_back(g);
    std::vector<std::pair<int, int>> out;
    for (int N = std::max(lo, 0); N <= hi; ++N)
        for (int d = 0; d <= N; ++d)
            for (int x : by_deg[d])
                for (int y : by_deg[N - d])
                    if (!overlapping_only || generators_meet(C, x, y)) out.push_back({x, y});
    return out;
}

PrimitiveResult<WordPair> tensor_primitive(const Coalgebra& C, const TensorElem& z, int src_a, int tgt_a, int src_b,
                                           int tgt_b, const Subcomplex& Z, const SolverConfig& cfg, unsigned seed) {
    if (z.empty()) return PrimitiveResult<WordPair>{true, {}, {}, 0};
    const int deg = pair_degree(C, z.begin()->first) + 1;
    std::size_t longest = 0;
    for (const auto& [p, c] : z) longest = std::max(longest, p.a.letters.size() + p.b.letters.size());
    SolverConfig c2 = cfg;
    c2.start_len = std::max(cfg.start_len, static_cast<int>(longest) - 1);
    c2.max_len = std::max(cfg.max_len, c2.start_len);
    auto candidates = [&](int L) {
            std::vector<WordPair> cand;
            for (int da = 0; da <= deg; ++da) {
                auto As = enumerate_words(C, src_a, tgt_a, da, L, &Z);
                if (As.empty()) continue;
                auto Bs = enumerate_words(C, src_b, tgt_b, deg - da, L, &Z);
                for (const Word& a : As)
                    for (const Word& b : Bs)
                        if (static_cast<int>(a.letters.size() + b.letters.size()) <= L) cand.push_back(WordPair{a, b});
            }
            auto len = [](const WordPair& p) { return p.a.letters.size() + p.b.letters.size(); };
            std::stable_sort(cand.begin(), cand.end(), [&](const WordPair& p, const WordPair& q) { return len(p) < len(q); });
            if (seed) {
                std::mt19937 rng(seed);
                for (auto it = cand.begin(); it != cand.end();) {
                    auto jt = std::find_if(it, cand.end(), [&](const WordPair& p) { return len(p) != len(*it); });
                    std::shuffle(it, jt, rng);
                    it = jt;
                }
            }
            return cand;
        };
    auto d = [&](const WordPair& p) { return tensor_d(C, p); };
    auto res = solve_primitive<WordPair>(z, candidates, d, c2);
    if (!seed || !res.found || res.word_bound >= c2.max_len) return res;
    // a nonzero seed also breaks ties among primitives: add a seeded
    // combination of supported cycles at the minimal length, or slightly above when there are none
    std::vector<WordPair> cand;
    std::vector<SparseVec> kernel;
    for (int L = res.word_bound; L <= std::min(c2.max_len, res.word_bound + 2) && kernel.empty(); ++L) {
        cand = candidates(L);
        std::map<WordPair, int> row;
        std::vector<TensorElem> images;
        for (const WordPair& p : cand) {
            images.push_back(d(p));
            for (const auto& [r, c] : images.back()) row.emplace(r, 0);
        }
        int nrows = 0;
        for (auto& [k, i] : row) i = nrows++;
        Eliminator E(nrows, cfg.ring);
        for (const auto& im : images) {
            SparseVec col;
            for (const auto& [r, c] : im) col.push_back({row[r], c});
            E.add_column(col);
        }
        kernel = E.kernel();
    }
    std::mt19937 rng(seed);
    TensorElem y = res.y;
    if (!kernel.empty()) {
        const SparseVec& k = kernel[rng() % kernel.size()];
        const long long r = rng() % 2 ? 1 : -1;
        for (const auto& [j, c] : k) y.add(cand[j], c * Scalar(r));
    }
    TensorElem check;
    for (const auto& [p, c] : y) check.add(d(p), c);
    TensorElem zz, cc;
    for (const auto& [k, c] : z) zz.add(k, c.in(cfg.ring));
    for (const auto& [k, c] : check) cc.add(k, c.in(cfg.ring));
    if (cc != zz) throw std::logic_error("perturbed primitive failed re-verification");
    res.y = std::move(y);
    return res;
}

namespace {

TensorElem base_value(const Coalgebra& C, int x, int y, const Scalar& coef, unsigned seed) {
    if (coef.is_zero()) return {};
    Subcomplex Z = pair_support(C, x, y);
    Word p1 = path_representative(C, C.source(x), C.target(y), Z, seed);
    Word p2 = path_representative(C, C.source(y), C.target(x), Z, seed);
    return TensorElem(WordPair{p1, p2}, coef);
}

void check_bounds(const Coalgebra& C, int D) {
    if (!C.inverted()) throw std::invalid_argument("homotopy pairings live on the edge-inverted coalgebra");
    if (C.max_level() < D) throw std::invalid_argument("coalgebra truncated below the input degree bound");
}

}  // namespace

HomotopyPairing construct_alpha(const LiftedPairing& th, const AlphaBounds& bounds) {
    const Coalgebra& C = th.coalgebra();
    const int n = th.n();
    const int D = bounds.max_degree;
    check_bounds(C, D);
    {
        auto K = std::shared_ptr<const SimplicialComplex>(&C.complex(), [](const SimplicialComplex*) {});
        FinenessCertificate F(K, 1);
        auto rep = F.verify_exhaustive();
        if (!rep.ok && rep.exhaustive) throw NotFine("construct_alpha: complex is not 1-fine: " + rep.failure, rep.witness);
    }
    HomotopyPairing A;
    A.theta = th.base();
    A.bounds = bounds;
    A.alpha = HomElement(th.coalgebra_ptr(), n, D);
    for (const auto& [x, y] : generator_pairs(C, n, D, true)) {
        const int N = C.degree(x) + C.degree(y);
        if (N == n) {
            A.alpha.set(x, y, base_value(C, x, y, th(x, y), bounds.seed));
            continue;
        }
        TensorElem rhs = hom_rest(A.alpha, x, y);
        if (rhs.empty()) continue;
        if (!tensor_d(C, rhs).empty())
            throw RHSNotClosed("right-hand side not closed at (" + C.describe(x) + ", " + C.describe(y) + ")");
        Subcomplex Z = pair_support(C, x, y);
        auto res = tensor_primitive(C, rhs, C.source(x), C.target(y), C.source(y), C.target(x), Z, bounds.solver, bounds.seed);
        if (!res.found)
            throw SolverExhausted("no supported primitive for α(" + C.describe(x) + ", " + C.describe(y) + ")", res.word_bound, res.ranks);
        const RankStep& last = res.ranks.back();
        A.solves.push_back({x, y, res.word_bound, last.unknowns, last.rank});
        A.alpha.set(x, y, std::move(res.y));
    }
    return A;
}

AlphaReport verify_alpha(const HomotopyPairing& A, const LiftedPairing& th) {
    AlphaReport r;
    const Coalgebra& C = A.alpha.coalgebra();
    const int n = A.n();
    for (const auto& [key, v] : A.alpha.table()) {
        const auto [x, y] = key;
        if (!generators_meet(C, x, y)) {
            r.local = false;
            r.failures.push_back("α nonzero on disjoint pair (" + C.describe(x) + ", " + C.describe(y) + ")");
        }
        Subcomplex Z = pair_support(C, x, y);
        for (const auto& [p, c] : v)
            if (!pair_in(C, p, Z)) {
                r.supported = false;
                r.failures.push_back("α(" + C.describe(x) + ", " + C.describe(y) + ") leaves the support of its inputs");
                break;
            }
    }
    for (const auto& [x, y] : generator_pairs(C, n, A.bounds.max_degree, true)) {
        ++r.pairs_checked;
        if (!hom_differential(A.alpha, x, y).empty()) {
            r.closed = false;
            r.failures.push_back("dα ≠ 0 at (" + C.describe(x) + ", " + C.describe(y) + ")");
        }
        if (C.degree(x) + C.degree(y) == n && A.alpha(x, y) != base_value(C, x, y, th(x, y), A.bounds.seed)) {
            r.lifts = false;
            r.failures.push_back("base value differs from θ̃·p⊗p at (" + C.describe(x) + ", " + C.describe(y) + ")");
        }
    }
    return r;
}

HomElement homotopy_between(const HomotopyPairing& a1, const HomotopyPairing& a2, const SolverConfig& cfg,
                            const LocalPairing* xi) {
    const Coalgebra& C = a1.alpha.coalgebra();
    const int n = a1.n();
    const int D = std::min(a1.bounds.max_degree, a2.bounds.max_degree);
    // β has output degree one above α's, so its primitives reach level D + 1
    check_bounds(C, D + 1);
    HomElement beta(a1.alpha.coalgebra_ptr(), n - 1, D);
    std::optional<LiftedPairing> xt;
    if (xi) xt.emplace(a1.alpha.coalgebra_ptr(), *xi);
    for (const auto& [x, y] : generator_pairs(C, std::max(n - 1, 0), D, true)) {
        const int N = C.degree(x) + C.degree(y);
        if (N == n - 1) {
            // θ2 = θ1 + δξ is absorbed by β = (−1)^{n−1} ξ̃ · p ⊗ p
            if (xt) beta.set(x, y, base_value(C, x, y, (*xt)(x, y) * sign_of(n - 1), 0));
            continue;
        }
        TensorElem rhs = a2.alpha(x, y) - a1.alpha(x, y);
        rhs.add(hom_rest(beta, x, y));
        if (rhs.empty()) continue;
        if (!tensor_d(C, rhs).empty())
            throw RHSNotClosed("homotopy right-hand side not closed at (" + C.describe(x) + ", " + C.describe(y) + ")");
        auto res = tensor_primitive(C, rhs, C.source(x), C.target(y), C.source(y), C.target(x), pair_support(C, x, y), cfg, 0);
        if (!res.found)
            throw SolverExhausted("no supported primitive for β(" + C.describe(x) + ", " + C.describe(y) + ")", res.word_bound, res.ranks);
        beta.set(x, y, std::move(res.y));
    }
    return beta;
}

std::vector<std::pair<int, int>> verify_homotopy_between(const HomElement& beta, const HomotopyPairing& a1,
                                                         const HomotopyPairing& a2) {
    const Coalgebra& C = beta.coalgebra();
    std::vector<std::pair<int, int>> bad;
    for (const auto& [x, y] : generator_pairs(C, std::max(beta.degree(), 0), beta.max_input_degree(), true))
        if (hom_differential(beta, x, y) != a1.alpha(x, y) - a2.alpha(x, y)) bad.push_back({x, y});
    return bad;
}

}  // namespace strtop
