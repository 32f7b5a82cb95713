#include "doctest.h"
#include "strtop/cohoch.hpp"

using namespace strtop;

namespace {
ComplexPtr make(const std::string& name, int k = 0) {
    auto K = std::make_shared<const SimplicialComplex>(bundled::by_name(name));
    if (k == 0) return K;
    return std::make_shared<const SimplicialComplex>(barycentric_subdivide(K, k));
}

CoHochElem iota_edge(const Coalgebra& C, int s) {
    const auto& K = C.complex();
    const int v = K.vertices(s)[0], w = K.vertices(s)[1];
    CoHochElem e(Necklace{s, {C.check(s)}});
    e.add(Necklace{v, {C.inverted_gen(s, 'x', 2)}}, Scalar(1));
    e.add(Necklace{w, {C.inverted_gen(s, 'y', 2)}}, Scalar(1));
    return e;
}

// the loop once around a subdivided circle, starting at v, as a degree-0 necklace
Necklace winding_loop(const Coalgebra& C, int v) {
    const auto& K = C.complex();
    std::vector<int> letters;
    int prev = -1, cur = v;
    do {
        int next = -1;
        for (int u : K.neighbors(cur))
            if (u != prev) {
                next = u;
                break;
            }
        const int e = K.edge(cur, next);
        letters.push_back(cur < next ? e : C.check(e));
        prev = cur;
        cur = next;
    } while (cur != v);
    return Necklace{v, letters};
}
}  // namespace

TEST_CASE("coHochschild differential") {
    auto K = make("boundary2");
    auto C = invert_edges(K, 5);
    CHECK(cohoch_d(*C, Necklace{0, {}}).empty());
    for (int s : K->of_dim(1)) {
        const int v = K->vertices(s)[0], w = K->vertices(s)[1];
        CoHochElem expect(Necklace{w, {}});
        expect.add(Necklace{v, {}}, Scalar(-1));
        CHECK(cohoch_d(*C, iota_edge(*C, s)) == expect);
    }
    auto r = verify_cohoch_dsquare(*C, 5, 4);
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK(verify_support_monotone(*C, 5, 4).ok());
}

TEST_CASE("∂² = 0 on the other test complexes") {
    for (const auto& name : {"simplex2", "boundary3", "torus7"}) {
        auto C = invert_edges(make(name), 4);
        INFO(name);
        CHECK(verify_cohoch_dsquare(*C, 3, 3).ok());
        CHECK(verify_support_monotone(*C, 3, 3).ok());
    }
}

TEST_CASE("constant loops") {
    auto K = make("simplex2");
    auto C = invert_edges(K, 6);
    ConstantLoops iota(C);
    CHECK(iota(1) == CoHochElem(Necklace{1, {}}));
    for (int s : K->of_dim(1)) CHECK(iota(s) == iota_edge(*C, s));
    for (int s = 0; s < K->num_simplices(); ++s) {
        INFO(K->describe_simplex(s));
        CHECK(cohoch_d(*C, iota(s)) == iota.apply(K->boundary(s)));
        auto supp = support_vertices(*C, iota(s));
        const auto& vs = K->vertices(s);
        CHECK(std::includes(vs.begin(), vs.end(), supp.begin(), supp.end()));
        CHECK(is_m_local(*C, iota(s), 1));
    }
    // transported to every triangle of the torus
    auto T = make("torus7");
    auto CT = invert_edges(T, 6);
    ConstantLoops iotaT(CT);
    for (int s : T->of_dim(2)) CHECK(cohoch_d(*CT, iotaT(s)) == iotaT.apply(T->boundary(s)));
}

TEST_CASE("locality") {
    auto K = make("boundary2", 2);
    auto C = invert_edges(K, 3);
    CHECK(is_m_local(*C, Necklace{0, {}}, 1));
    // beads on far-apart edges: the loop once around
    const Necklace far = winding_loop(*C, 0);
    CHECK_FALSE(is_m_local(*C, far, 1));
    const int e = K->of_dim(1)[0];
    const int v = K->vertices(e)[0];
    CHECK(is_m_local(*C, Necklace{v, {e, C->check(e)}}, 1));
    for (const Necklace& x : local_basis(*C, 1, 2, 1)) CHECK(is_m_local(*C, x, 1));
}

TEST_CASE("supported primitives") {
    auto K = make("boundary2", 1);
    auto C = invert_edges(K, 4);
    SolverConfig cfg;
    cfg.max_len = 3;
    auto r0 = supported_primitive(*C, CoHochElem(), Subcomplex::whole(*K), cfg);
    CHECK(r0.found);
    CHECK(r0.y.empty());

    const int e = K->of_dim(1)[0];
    const int v = K->vertices(e)[0], w = K->vertices(e)[1];
    CoHochElem z(Necklace{w, {}});
    z.add(Necklace{v, {}}, Scalar(-1));
    auto Z = Subcomplex::closure_of(*K, {e});
    auto r = supported_primitive(*C, z, Z, cfg);
    REQUIRE(r.found);
    CHECK(cohoch_d(*C, r.y) == z);
    for (const auto& [n, c] : r.y) CHECK(necklace_in(*C, n, Z));

    CoHochElem open(Necklace{e, {C->check(e)}});
    CHECK_THROWS_AS(supported_primitive(*C, open, Z, cfg), NotClosed);
}

TEST_CASE("winding number obstructs primitives") {
    auto K = make("boundary2", 2);
    auto C = invert_edges(K, 3);
    const auto Z = Subcomplex::whole(*K);
    SolverConfig cfg;
    cfg.start_len = 1;
    cfg.max_len = 6;

    const int v = 0, w = K->num_vertices() / 2;
    CoHochElem z1(winding_loop(*C, v));
    z1.add(Necklace{v, {}}, Scalar(-1));
    REQUIRE(cohoch_d(*C, z1).empty());
    auto r1 = supported_primitive(*C, z1, Z, cfg);
    CHECK_FALSE(r1.found);
    REQUIRE(!r1.ranks.empty());
    CHECK(r1.ranks.back().word_bound == 6);
    for (const auto& st : r1.ranks) CHECK_FALSE(st.consistent);

    CoHochElem z0(Necklace{v, {}});
    z0.add(Necklace{w, {}}, Scalar(-1));
    auto r0 = supported_primitive(*C, z0, Z, cfg);
    REQUIRE(r0.found);
    CHECK(cohoch_d(*C, r0.y) == z0);
}

TEST_CASE("local retraction") {
    auto K = make("boundary2", 2);
    auto C = invert_edges(K, 4);
    ConstantLoops iota(C);
    FinenessCertificate cert(K, 1);
    LocalRetraction g(iota, cert);

    const int e = K->of_dim(1)[0];
    const int v = K->vertices(e)[0], w = K->vertices(e)[1];
    CHECK(g(Necklace{v, {e, C->check(e)}}) == CoHochElem(Necklace{v, {}}));
    CHECK(g(Necklace{w, {C->check(e), e}}) == CoHochElem(Necklace{w, {}}));
    // degree 1, endpoint classes differ: marked τ0 from v to w
    CHECK(g(Necklace{e, {C->check(e)}}) == iota(e));
    CHECK(g(Necklace{C->check(e), {e}}) == iota(e) * Scalar(-1));
    // degree 1, v = w
    CHECK(g(Necklace{v, {C->inverted_gen(e, 'x', 2)}}).empty());

    for (int d = 0; d <= 3; ++d) {
        auto xs = local_basis(*C, d, 3, 1);
        INFO("degree " << d << ", " << xs.size() << " generators");
        CHECK(!xs.empty());
        auto bad = g.verify(xs);
        CHECK(bad.empty());
        for (const Necklace& x : xs)
            for (const auto& [y, c] : g(x)) CHECK(is_m_local(*C, y, 1));
    }
}
