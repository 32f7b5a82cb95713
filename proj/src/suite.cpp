#include "strtop/suite.hpp"

#include <algorithm>

namespace strtop {

void CheckResult::fail(std::string what) {
    ++failed;
    if (examples.size() < 5) examples.push_back(std::move(what));
}

CheckResult from_report(std::string name, const CoalgebraReport& r, std::vector<std::pair<std::string, int>> bounds) {
    CheckResult c{std::move(name), r.checked, 0, {}, std::move(bounds)};
    for (const auto& f : r.failures) c.fail(f);
    return c;
}

std::vector<Necklace> necklaces_upto(const Coalgebra& C, int max_deg, int max_len) {
    std::vector<Necklace> out;
    for (int d = 0; d <= max_deg; ++d)
        for (Necklace& x : enumerate_necklaces(C, d, max_len)) out.push_back(std::move(x));
    return out;
}

CheckResult check_curvature(const Coalgebra& C, int deg) {
    return from_report("curvature", verify_curvature(C, deg), {{"degree", deg}});
}
CheckResult check_coassociativity(const Coalgebra& C, int deg) {
    return from_report("coassociativity", verify_coassociativity(C, deg), {{"degree", deg}});
}
CheckResult check_counit(const Coalgebra& C, int deg) {
    return from_report("counit", verify_counit(C, deg), {{"degree", deg}});
}
CheckResult check_eta_d(const Coalgebra& C, int deg) {
    return from_report("eta_d", verify_eta_d(C, deg), {{"degree", deg}});
}

CheckResult check_cobar_identities(const Coalgebra& C) {
    CheckResult r{"cobar_x2_y2"};
    const SimplicialComplex& K = C.complex();
    for (int e : K.of_dim(1)) {
        const int s = K.vertices(e)[0], t = K.vertices(e)[1];
        const int sig = C.simplex_gen(e), chk = C.check(e);
        CobarElem want_x(make_word(C, {sig, chk}));
        want_x.add(identity_word(s), Scalar(-1));
        CobarElem want_y(make_word(C, {chk, sig}), Scalar(-1));
        want_y.add(identity_word(t), Scalar(1));
        r.checked += 2;
        if (cobar_d(C, make_word(C, {C.inverted_gen(e, 'x', 2)})) != want_x) r.fail("d{x²} on " + K.describe_simplex(e));
        if (cobar_d(C, make_word(C, {C.inverted_gen(e, 'y', 2)})) != want_y) r.fail("d{y²} on " + K.describe_simplex(e));
    }
    return r;
}

CheckResult check_cobar_dsquare(const Coalgebra& C, int deg, int len) {
    return from_report("cobar_d2", verify_cobar_dsquare(C, deg, len), {{"degree", deg}, {"words", len}});
}
CheckResult check_cobar_leibniz(const Coalgebra& C, int deg, int len) {
    return from_report("cobar_leibniz", verify_cobar_leibniz(C, deg, len), {{"degree", deg}, {"words", len}});
}
CheckResult check_cohoch_dsquare(const Coalgebra& C, int deg, int len) {
    return from_report("cohoch_d2", verify_cohoch_dsquare(C, deg, len), {{"degree", deg}, {"words", len}});
}
CheckResult check_support_monotone(const Coalgebra& C, int deg, int len) {
    return from_report("cohoch_support", verify_support_monotone(C, deg, len), {{"degree", deg}, {"words", len}});
}

CheckResult check_constant_loops(const ConstantLoops& iota) {
    const Coalgebra& C = iota.coalgebra();
    const SimplicialComplex& K = C.complex();
    CheckResult r{"constant_loops"};
    for (int s = 0; s < K.num_simplices(); ++s) {
        ++r.checked;
        const CoHochElem x = iota(s);
        const std::string name = K.describe_simplex(s);
        if (cohoch_d(C, x) != iota.apply(K.boundary(s))) r.fail("∂ι ≠ ιδ on " + name);
        const auto supp = support_vertices(C, x);
        const auto& vs = K.vertices(s);
        if (!std::includes(vs.begin(), vs.end(), supp.begin(), supp.end())) r.fail("Supp ι(σ) ⊄ σ̄ on " + name);
        if (K.dim(s) == 0 && x != CoHochElem(Necklace{C.vertex_gen(s), {}})) r.fail("ι(v) ≠ v·id_v on " + name);
        if (K.dim(s) == 1) {
            CoHochElem want(Necklace{C.simplex_gen(s), {C.check(s)}});
            want.add(Necklace{C.vertex_gen(vs[0]), {C.inverted_gen(s, 'x', 2)}}, Scalar(1));
            want.add(Necklace{C.vertex_gen(vs[1]), {C.inverted_gen(s, 'y', 2)}}, Scalar(1));
            if (x != want) r.fail("edge formula fails on " + name);
        }
    }
    return r;
}

CheckResult check_scan_failure(const Coalgebra& C, int deg, int len) {
    CheckResult r{"scan_failure", 0, 0, {}, {{"degree", deg}, {"words", len}}};
    const int nv = C.complex().num_vertices();
    for (int v = 0; v < nv; ++v)
        for (int d = 0; d <= deg; ++d)
            for (const Word& w : enumerate_words(C, v, -1, d, len)) {
                ++r.checked;
                MarkedElem lhs = marked_d(C, scan(C, w));
                lhs.add(scan(C, cobar_d(C, w)));
                if (lhs != scan_failure(C, w)) r.fail("d𝓈 + 𝓈d ≠ end terms on " + describe(C, w));
            }
    return r;
}

namespace {

template <class F>
void for_pairs(const StringOps& ops, int deg_sum, int len, F f) {
    const Coalgebra& C = ops.coalgebra();
    const auto xs = necklaces_upto(C, deg_sum, len);
    for (const Necklace& x : xs)
        for (const Necklace& y : xs)
            if (necklace_degree(C, x) + necklace_degree(C, y) <= deg_sum &&
                static_cast<int>(x.letters.size() + y.letters.size()) <= len)
                f(x, y);
}

}  // namespace

CheckResult check_leibniz(const StringOps& ops, int deg_sum, int len) {
    const Coalgebra& C = ops.coalgebra();
    CheckResult r{"product_leibniz", 0, 0, {}, {{"degree_sum", deg_sum}, {"words", len}}};
    for_pairs(ops, deg_sum, len, [&](const Necklace& x, const Necklace& y) {
        ++r.checked;
        if (!leibniz_defect(ops, x, y).empty()) r.fail("Leibniz fails on " + describe(C, x) + " , " + describe(C, y));
    });
    return r;
}

CheckResult check_product_support(const StringOps& ops, int deg_sum, int len) {
    const Coalgebra& C = ops.coalgebra();
    CheckResult r{"product_support", 0, 0, {}, {{"degree_sum", deg_sum}, {"words", len}}};
    for_pairs(ops, deg_sum, len, [&](const Necklace& x, const Necklace& y) {
        ++r.checked;
        std::set<int> allowed = support_vertices(C, x);
        for (int v : support_vertices(C, y)) allowed.insert(v);
        const auto s = support_vertices(C, ops.product(x, y));
        if (!std::includes(allowed.begin(), allowed.end(), s.begin(), s.end()))
            r.fail("Supp μ ⊄ Supp x ∪ Supp y on " + describe(C, x) + " , " + describe(C, y));
    });
    return r;
}

CheckResult check_coproduct_failure(const StringOps& ops, int deg, int len) {
    const Coalgebra& C = ops.coalgebra();
    CheckResult r{"coproduct_failure", 0, 0, {}, {{"degree", deg}, {"words", len}}};
    for (const Necklace& x : necklaces_upto(C, deg, len)) {
        ++r.checked;
        if (ops.coproduct_defect(x) != ops.coproduct_failure(x)) r.fail("failure identity fails on " + describe(C, x));
    }
    return r;
}

CheckResult check_coproduct_locality(const StringOps& ops, int deg, int len) {
    using FT = StringOps::FailureTerms;
    const Coalgebra& C = ops.coalgebra();
    CheckResult r{"coproduct_locality", 0, 0, {}, {{"degree", deg}, {"words", len}}};
    for (const Necklace& x : necklaces_upto(C, deg, len)) {
        ++r.checked;
        if (!in_local_ideal(C, ops.coproduct_defect(x), 1) || !in_local_ideal(C, ops.coproduct_failure(x, FT::ends), 1) ||
            !in_local_ideal(C, ops.coproduct_failure(x, FT::rotated), 1))
            r.fail("defect not 1-local on " + describe(C, x));
        if (is_m_local(C, x, 1) && !in_local_ideal(C, ops.coproduct(x), 1)) r.fail("λ of a 1-local chain is not 1-local: " + describe(C, x));
    }
    return r;
}

}  // namespace strtop
