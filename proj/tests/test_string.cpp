#include <iostream>

#include "doctest.h"
#include "strtop/string_ops.hpp"

using namespace strtop;

namespace {

struct Setup {
    ComplexPtr K;
    CoalgebraPtr C;
    LocalPairing theta;
    HomotopyPairing A;
};

const Setup& circle() {
    static Setup S = [] {
        auto base = std::make_shared<const SimplicialComplex>(bundled::by_name("boundary2"));
        auto K = std::make_shared<const SimplicialComplex>(barycentric_subdivide(base, 2));
        const Ring Q = Ring::rationals();
        LocalPairing th = find_local_pairing(K, default_fundamental_chain(*K, Q), 1, Q);
        auto C = invert_edges(K, 5);
        AlphaBounds b;
        b.max_degree = 5;
        HomotopyPairing A = construct_alpha(LiftedPairing(C, th), b);
        return Setup{K, C, th, std::move(A)};
    }();
    return S;
}

std::vector<Word> all_words(const Coalgebra& C, int max_deg, int max_len) {
    std::vector<Word> out;
    const int nv = C.complex().num_vertices();
    for (int v = 0; v < nv; ++v)
        for (int w = 0; w < nv; ++w)
            for (int d = 0; d <= max_deg; ++d)
                for (const Word& x : enumerate_words(C, v, w, d, max_len)) out.push_back(x);
    return out;
}

}  // namespace

TEST_CASE("marked path differential squares to zero") {
    const Coalgebra& C = *circle().C;
    int bad = 0, total = 0;
    for (const Word& a : all_words(C, 2, 2)) {
        for (int g = 0; g < C.num_gens(); ++g) {
            if (C.source(g) != a.tgt || C.degree(g) > 3) continue;
            for (const Word& b : enumerate_words(C, C.target(g), a.src, 0, 1)) {
                MarkedPath p{a, g, b};
                ++total;
                if (!marked_d(C, marked_d(C, p)).empty()) {
                    if (!bad) std::cerr << describe(C, MarkedElem(p)) << " -> " << describe(C, marked_d(C, marked_d(C, p))) << "\n";
                    ++bad;
                }
            }
        }
    }
    std::cerr << "marked d2: " << bad << "/" << total << "\n";
    CHECK(bad == 0);
}

TEST_CASE("scan failure") {
    const Coalgebra& C = *circle().C;
    int bad = 0, total = 0;
    for (const Word& w : all_words(C, 3, 3)) {
        MarkedElem lhs = marked_d(C, scan(C, w));
        lhs.add(scan(C, cobar_d(C, w)));
        ++total;
        if (lhs != scan_failure(C, w)) {
            if (bad < 3) std::cerr << describe(C, w) << ": lhs " << describe(C, lhs) << "\n   rhs " << describe(C, scan_failure(C, w)) << "\n";
            ++bad;
        }
    }
    std::cerr << "scan failure: " << bad << "/" << total << "\n";
    CHECK(bad == 0);
}

TEST_CASE("leibniz") {
    const Setup& S = circle();
    const Coalgebra& C = *S.C;
    StringOps ops(S.A.alpha);
    std::vector<Necklace> ns;
    for (int d = 0; d <= 3; ++d)
        for (const Necklace& x : enumerate_necklaces(C, d, 2)) ns.push_back(x);
    int bad = 0, total = 0, nonzero = 0;
    for (const Necklace& x : ns)
        for (const Necklace& y : ns) {
            if (necklace_degree(C, x) + necklace_degree(C, y) > 4) continue;
            ++total;
            if (!ops.product(x, y).empty()) ++nonzero;
            CoHochElem d = leibniz_defect(ops, x, y);
            if (!d.empty()) {
                if (bad < 3) std::cerr << describe(C, x) << " , " << describe(C, y) << ": " << describe(C, d) << "\n";
                ++bad;
            }
        }
    std::cerr << "leibniz: " << bad << "/" << total << " nonzero products " << nonzero << "\n";
    CHECK(bad == 0);
}

TEST_CASE("coproduct failure") {
    const Setup& S = circle();
    const Coalgebra& C = *S.C;
    StringOps ops(S.A.alpha);
    using FT = StringOps::FailureTerms;
    int bad = 0, total = 0, nonzero = 0, rotated = 0, nonlocal = 0;
    for (int d = 0; d <= 3; ++d)
        for (const Necklace& x : enumerate_necklaces(C, d, 2)) {
            ++total;
            CoHochPair lhs = ops.coproduct_defect(x);
            CoHochPair rhs = ops.coproduct_failure(x);
            if (!lhs.empty()) ++nonzero;
            if (lhs != rhs) {
                if (bad < 3) std::cerr << describe(C, x) << ":\n lhs " << describe(C, lhs) << "\n rhs " << describe(C, rhs) << "\n";
                ++bad;
            }
            CoHochPair ends = ops.coproduct_failure(x, FT::ends), rot = ops.coproduct_failure(x, FT::rotated);
            CHECK(ends + rot == rhs);
            if (!rot.empty()) ++rotated;
            if (!in_local_ideal(C, lhs, 1) || !in_local_ideal(C, ends, 1) || !in_local_ideal(C, rot, 1)) ++nonlocal;
        }
    std::cerr << "coproduct failure: " << bad << "/" << total << " nonzero " << nonzero << " with rotated terms " << rotated << "\n";
    CHECK(bad == 0);
    CHECK(nonlocal == 0);
    CHECK(nonzero > 0);
}

TEST_CASE("product and coproduct in low degree") {
    const Setup& S = circle();
    const Coalgebra& C = *S.C;
    StringOps ops(S.A.alpha);
    // |x| + |y| < n
    CHECK(ops.product(Necklace{0, {}}, Necklace{0, {}}).empty());
    // nothing to scan on a single bead
    for (int g = 0; g < C.num_gens(); ++g)
        if (C.source(g) == C.target(g) && C.degree(g) <= 3) CHECK(ops.coproduct(Necklace{g, {}}).empty());

    // on a point α(v, v) = θ(v, v) id ⊗ id, and μ(v·id, v·id) = ±θ(v, v) v·id
    auto P = std::make_shared<const SimplicialComplex>(bundled::point());
    LocalPairing th = find_local_pairing(P, Chain<int>(0), 0, Ring::rationals());
    th.table.begin()->second = Scalar(3);
    auto CP = invert_edges(P, 2);
    AlphaBounds b;
    b.max_degree = 2;
    HomotopyPairing A = construct_alpha(LiftedPairing(CP, th), b);
    CHECK(A.alpha(0, 0) == TensorElem(WordPair{identity_word(0), identity_word(0)}, Scalar(3)));
    StringOps point_ops(A.alpha);
    auto mu = point_ops.product(Necklace{0, {}}, Necklace{0, {}});
    CHECK((mu == CoHochElem(Necklace{0, {}}, Scalar(3)) || mu == CoHochElem(Necklace{0, {}}, Scalar(-3))));
}

TEST_CASE("degrees and supports of μ and λ") {
    const Setup& S = circle();
    const Coalgebra& C = *S.C;
    StringOps ops(S.A.alpha);
    const int n = ops.n();
    std::vector<Necklace> ns;
    for (int d = 0; d <= 3; ++d)
        for (const Necklace& x : enumerate_necklaces(C, d, 2)) ns.push_back(x);
    int checked = 0;
    for (const Necklace& x : ns) {
        const int dx = necklace_degree(C, x);
        for (const auto& [p, c] : ops.coproduct(x))
            CHECK(necklace_degree(C, p.a) + necklace_degree(C, p.b) == dx + 1 - n);
        // λ never leaves the 1-local ideal on 1-local input
        if (is_m_local(C, x, 1)) CHECK(in_local_ideal(C, ops.coproduct(x), 1));
        for (const Necklace& y : ns) {
            if (dx + necklace_degree(C, y) > n + 3) continue;
            const CoHochElem mu = ops.product(x, y);
            std::set<int> allowed = support_vertices(C, x);
            for (int v : support_vertices(C, y)) allowed.insert(v);
            for (const auto& [z, c] : mu) {
                CHECK(necklace_degree(C, z) == dx + necklace_degree(C, y) - n);
                auto s = support_vertices(C, z);
                CHECK(std::includes(allowed.begin(), allowed.end(), s.begin(), s.end()));
            }
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("constant loops vanish in the local quotient") {
    const Setup& S = circle();
    const Coalgebra& C = *S.C;
    ConstantLoops iota(S.C);
    for (int s = 0; s < S.K->num_simplices(); ++s) CHECK(is_m_local(C, iota(s), 1));
}
