#include "strtop/string_ops.hpp"

#include <sstream>

namespace strtop {

namespace {

Word slice(const Coalgebra& C, const std::vector<int>& letters, std::size_t from, std::size_t to, int src) {
    Word w{src, src, {}};
    for (std::size_t i = from; i < to; ++i) w.letters.push_back(letters[i]);
    if (!w.letters.empty()) {
        w.src = C.source(w.letters.front());
        w.tgt = C.target(w.letters.back());
    }
    return w;
}

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

// sign of moving items of the given degrees into the order `to`
int koszul(const std::vector<int>& deg, const std::vector<int>& to) {
    int s = 0;
    for (std::size_t i = 0; i < to.size(); ++i)
        for (std::size_t j = i + 1; j < to.size(); ++j)
            if (to[i] > to[j]) s += deg[to[i]] * deg[to[j]];
    return sgn(s);
}

}  // namespace

// ---- marked paths -----------------------------------------------------------

int marked_degree(const Coalgebra& C, const MarkedPath& p) {
    return word_degree(C, p.a) + C.degree(p.c) + word_degree(C, p.b);
}

// Relative to d_Ω a, the other four displayed terms enter with the opposite
// sign (the same relative flip as in the Hom differential).
MarkedElem marked_d(const Coalgebra& C, const MarkedPath& p) {
    MarkedElem out;
    const int da = word_degree(C, p.a), dc = C.degree(p.c);
    for (const auto& [w, c] : cobar_d(C, p.a)) out.add(MarkedPath{w, p.c, p.b}, c);
    for (const auto& t : C.differential(p.c)) out.add(MarkedPath{p.a, t.g, p.b}, Scalar(-t.c * sgn(da)));
    for (const auto& [w, c] : cobar_d(C, p.b)) out.add(MarkedPath{p.a, p.c, w}, c * sign_of(da + dc));
    for (const auto& t : C.coproduct(p.c)) {
        const int d1 = C.degree(t.a), d2 = C.degree(t.b);
        if (d1 >= 1) out.add(MarkedPath{append(C, p.a, t.a), t.b, p.b}, Scalar(-t.c * sgn(da)));
        if (d2 >= 1) out.add(MarkedPath{p.a, t.a, prepend(C, t.b, p.b)}, Scalar(t.c * sgn(da + d1)));
    }
    return out;
}

MarkedElem marked_d(const Coalgebra& C, const MarkedElem& x) {
    MarkedElem out;
    for (const auto& [p, c] : x) out.add(marked_d(C, p), c);
    return out;
}

std::string describe(const Coalgebra& C, const MarkedElem& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << describe(C, p.a) << "⊗" << C.describe(p.c) << "⊗" << describe(C, p.b);
    }
    return os.str();
}

// Σ_i (−1)^{|[c1|...|c_{i−1}]|} [c1|...|c_{i−1}] ⊗ c_i ⊗ [c_{i+1}|...|cN]: one term
// per bead, the last one signed like the middle ones
MarkedElem scan(const Coalgebra& C, const Word& w) {
    MarkedElem out;
    const auto& L = w.letters;
    const std::size_t N = L.size();
    for (std::size_t i = 0; i < N; ++i)
        out.add(MarkedPath{slice(C, L, 0, i, w.src), L[i], slice(C, L, i + 1, N, C.target(L[i]))},
                sign_of(letters_degree(C, L, 0, i)));
    return out;
}

MarkedElem scan(const Coalgebra& C, const CobarElem& x) {
    MarkedElem out;
    for (const auto& [w, c] : x) out.add(scan(C, w), c);
    return out;
}

MarkedElem scan_failure(const Coalgebra& C, const Word& w) {
    MarkedElem out;
    out.add(MarkedPath{identity_word(w.src), C.vertex_gen(w.src), w}, Scalar(1));
    out.add(MarkedPath{w, C.vertex_gen(w.tgt), identity_word(w.tgt)}, Scalar(-1));
    return out;
}

// ---- necklace pairs -----------------------------------------------------------

CoHochPair pair_d(const Coalgebra& C, const CoHochPair& x) {
    CoHochPair out;
    for (const auto& [p, c] : x) {
        for (const auto& [a, ca] : cohoch_d(C, p.a)) out.add(NecklacePair{a, p.b}, c * ca);
        const Scalar s = c * sign_of(necklace_degree(C, p.a));
        for (const auto& [b, cb] : cohoch_d(C, p.b)) out.add(NecklacePair{p.a, b}, s * cb);
    }
    return out;
}

std::string describe(const Coalgebra& C, const CoHochPair& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*(" << describe(C, p.a) << ")⊗(" << describe(C, p.b) << ")";
    }
    return os.str();
}

bool in_local_ideal(const Coalgebra& C, const CoHochPair& x, int m) {
    for (const auto& [p, c] : x)
        if (!is_m_local(C, p.a, m) && !is_m_local(C, p.b, m)) return false;
    return true;
}

std::set<int> support_vertices(const Coalgebra& C, const CoHochPair& x) {
    std::set<int> out;
    for (const auto& [p, c] : x) {
        auto a = support_vertices(C, p.a);
        auto b = support_vertices(C, p.b);
        out.insert(a.begin(), a.end());
        out.insert(b.begin(), b.end());
    }
    return out;
}

// ---- μ_α and λ_α ------------------------------------------------------------------

StringOps::StringOps(const HomElement& alpha) : alpha_(alpha) {}

const TensorElem& StringOps::alpha_at(int x, int y) const {
    const Coalgebra& C = coalgebra();
    if (C.degree(x) + C.degree(y) > alpha_.max_input_degree())
        throw AlphaBoundsExceeded("α needed at (" + C.describe(x) + ", " + C.describe(y) + "), above the degree bound " +
                                  std::to_string(alpha_.max_input_degree()));
    return alpha_(x, y);
}

CoHochElem StringOps::product(const Necklace& x, const Necklace& y) const {
    const Coalgebra& C = coalgebra();
    const int nn = n();
    CoHochElem out;
    const Word a1 = necklace_word(C, x), a2 = necklace_word(C, y);
    const int da1 = word_degree(C, a1), da2 = word_degree(C, a2);
    for (const auto& t : C.coproduct(x.marked)) {
        const int p = C.degree(t.a), q = C.degree(t.b);
        if (p + C.degree(y.marked) < nn) continue;
        for (const auto& [w, c] : alpha_at(t.a, y.marked)) {
            // the displayed exponent plus |c1'| + |c2|
            const int s = nn + p * q + p * da1 + nn * q + nn * da1 + da2 * word_degree(C, w.b) + p + C.degree(y.marked);
            Word word = compose(compose(compose(a1, w.a), a2), w.b);
            out.add(Necklace{t.b, std::move(word.letters)}, c * Scalar(t.c * sgn(s)));
        }
    }
    return out;
}

CoHochElem StringOps::product(const CoHochElem& x, const CoHochElem& y) const {
    CoHochElem out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add(product(a, b), ca * cb);
    return out;
}

CoHochPair StringOps::coproduct_along(int marked, const MarkedElem& m, int parity) const {
    const Coalgebra& C = coalgebra();
    const int nn = n();
    const int dc = C.degree(marked);
    CoHochPair out;
    for (const auto& t : C.coproduct(marked))
        for (const auto& u : C.coproduct(t.a)) {
            const int c1 = u.a, c2 = u.b, c3 = t.b;
            const int d1 = C.degree(c1), d3 = C.degree(c3);
            const int coef = t.c * u.c;
            for (const auto& [mp, cm] : m) {
                const int dm = C.degree(mp.c);
                if (C.degree(c2) + dm < nn) continue;
                const int dl = word_degree(C, mp.a), dr = word_degree(C, mp.b);
                for (const auto& [w, cw] : alpha_at(c2, mp.c)) {
                    // s past c, m past c3 (and past l for the scan), α past c1,
                    // then (c1, A', A'', c3, l, r) -> (c3, l, A'', c1, A', r)
                    const int e = nn + dc + parity * (dc + dm * dl) + dm * d3 + nn * d1 + d1 + d3;
                    const std::vector<int> deg{d1, word_degree(C, w.a), word_degree(C, w.b), d3, dl, dr};
                    const int k = koszul(deg, {3, 4, 2, 0, 1, 5});
                    Word left = compose(mp.a, w.b), right = compose(w.a, mp.b);
                    out.add(NecklacePair{Necklace{c3, std::move(left.letters)}, Necklace{c1, std::move(right.letters)}},
                            cm * cw * Scalar(coef * sgn(e) * k));
                }
            }
        }
    return out;
}

CoHochPair StringOps::coproduct(const Necklace& x) const {
    const Coalgebra& C = coalgebra();
    return coproduct_along(x.marked, scan(C, necklace_word(C, x)), 1);
}

CoHochPair StringOps::coproduct(const CoHochElem& x) const {
    CoHochPair out;
    for (const auto& [a, c] : x) out.add(coproduct(a), c);
    return out;
}

CoHochPair StringOps::coproduct_defect(const Necklace& x) const {
    const Coalgebra& C = coalgebra();
    CoHochPair out = pair_d(C, coproduct(x));
    out.add(coproduct(cohoch_d(C, x)), sign_of(n()));
    return out;
}

// Σ over Δc = c'⊗c'' of λ with the marked bead c' cut against c'' at the start
// of the word, and c'' cut against c' at its end. The terms with c'' = t(c),
// resp. c' = s(c), are the scan failure end terms; the others come from
// scanning the bead that the rotation terms of ∂ move into the word.
CoHochPair StringOps::coproduct_failure(const Necklace& x, FailureTerms which) const {
    const Coalgebra& C = coalgebra();
    const int nn = n();
    const Word a = necklace_word(C, x);
    CoHochPair out;
    for (const auto& t : C.coproduct(x.marked)) {
        const int d1 = C.degree(t.a), d2 = C.degree(t.b);
        const bool first_end = d2 == 0, last_end = d1 == 0;
        if (which == FailureTerms::all || (which == FailureTerms::ends) == first_end)
            out.add(coproduct_along(t.a, MarkedElem(MarkedPath{identity_word(C.source(t.b)), t.b, a}), 0),
                    Scalar(t.c * sgn(nn + d2)));
        if (which == FailureTerms::all || (which == FailureTerms::ends) == last_end)
            out.add(coproduct_along(t.b, MarkedElem(MarkedPath{a, t.a, identity_word(C.target(t.a))}), 0),
                    Scalar(t.c * sgn(1 + nn + d1 + d1 * d2)));
    }
    return out;
}

CoHochElem leibniz_defect(const StringOps& ops, const Necklace& x, const Necklace& y) {
    const Coalgebra& C = ops.coalgebra();
    CoHochElem out = cohoch_d(C, ops.product(CoHochElem(x), CoHochElem(y)));
    const Scalar s = sign_of(ops.n());
    out.add(ops.product(cohoch_d(C, x), CoHochElem(y)), s * Scalar(-1));
    out.add(ops.product(CoHochElem(x), cohoch_d(C, y)), s * sign_of(necklace_degree(C, x) + 1));
    return out;
}

}  // namespace strtop
