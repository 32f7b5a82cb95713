#include "doctest.h"
#include "strtop/complex.hpp"

using namespace strtop;

namespace {
ComplexPtr make(const std::string& name) { return std::make_shared<const SimplicialComplex>(bundled::by_name(name)); }

std::vector<int> counts(const SimplicialComplex& K) { return K.counts_by_dim(); }
}  // namespace

TEST_CASE("barycentric subdivision counts") {
    auto K1 = barycentric_subdivide(make("simplex1"), 1);
    CHECK(counts(K1) == std::vector<int>{3, 2});
    auto C1 = barycentric_subdivide(make("boundary2"), 1);
    CHECK(counts(C1) == std::vector<int>{6, 6});
    auto T1 = barycentric_subdivide(make("simplex2"), 1);
    CHECK(counts(T1) == std::vector<int>{7, 12, 6});
    // vertices of K' are the simplices of K
    CHECK(T1.num_vertices() == make("simplex2")->num_simplices());
}

TEST_CASE("subdivision preserves the Euler characteristic") {
    for (const auto& name : bundled::names()) {
        auto K = make(name);
        for (int k = 1; k <= 2; ++k) {
            if (k == 2 && K->num_simplices() > 20) continue;
            auto Kk = barycentric_subdivide(K, k);
            INFO(name << " k=" << k);
            CHECK(Kk.euler_characteristic() == K->euler_characteristic());
        }
    }
    CHECK(make("torus7")->euler_characteristic() == 0);
    CHECK(make("boundary3")->euler_characteristic() == 2);
}

TEST_CASE("diameter") {
    auto C = make("boundary2");
    CHECK(diameter(*C, Subcomplex::closure_of(*C, {0})) == 0);
    int e01 = C->edge(0, 1), e12 = C->edge(1, 2);
    CHECK(diameter(*C, Subcomplex::closure_of(*C, {e01})) == 1);
    auto T = make("simplex2");
    CHECK(diameter(*T, Subcomplex::closure_of(*T, {T->num_simplices() - 1})) == 1);

    // two edges sharing a vertex: linking sequences inside the pair need both edges
    auto two = Subcomplex::closure_of(*C, {e01, e12});
    CHECK(diameter(*C, two, LinkScope::Intrinsic) == 2);
    CHECK(diameter(*C, two, LinkScope::Ambient) == 1);

    // two vertices of Δ¹'' with nothing between them in A
    SimplicialComplex two_pts = SimplicialComplex::from_simplices({"a", "b"}, {{0}, {1}});
    CHECK_THROWS_AS(diameter(two_pts, Subcomplex::whole(two_pts)), DisconnectedSupport);
}

TEST_CASE("incidence numbers") {
    auto T = make("simplex2");
    const int top = T->find({0, 1, 2});
    CHECK(T->incidence(T->find({0, 2}), top) == -1);
    CHECK(T->incidence(T->find({1, 2}), top) == 1);
    CHECK(T->incidence(T->find({0, 1}), top) == 1);
    auto S = make("boundary3");
    CHECK(S->incidence(S->find({0}), S->find({1, 2, 3})) == 0);
    CHECK(S->incidence(S->find({0}), S->find({0, 1, 2})) == 0);  // codimension 2
}

TEST_CASE("boundary squares to zero over the integers") {
    for (const auto& name : bundled::names()) {
        auto K = make(name);
        auto Kp = barycentric_subdivide(K, 1);
        for (const SimplicialComplex* X : {K.get(), static_cast<const SimplicialComplex*>(&Kp)})
            for (int s = 0; s < X->num_simplices(); ++s) CHECK(X->boundary(X->boundary(s)).empty());
    }
}

TEST_CASE("ordered faces") {
    auto T = make("simplex2");
    const int top = T->find({0, 1, 2});
    CHECK(T->faces(top)[1] == T->find({0, 2}));
    CHECK(T->faces(top)[0] == T->find({1, 2}));
    CHECK(T->of_dim(1).size() == 3u);
    CHECK(make("boundary2")->of_dim(1).size() == 3u);
    CHECK(make("boundary2")->of_dim(2).empty());

    // the barycenter of Δ¹ is vertex 2 of its subdivision, so both edges point to it
    auto I = make("simplex1");
    auto Ip = barycentric_subdivide_once(I);
    for (int e : Ip.of_dim(1)) CHECK(Ip.vertices(e).back() == I->find({0, 1}));
}

TEST_CASE("dual cells") {
    auto T = make("simplex2");
    auto Tp = barycentric_subdivide_once(T);
    const int top = T->find({0, 1, 2});
    auto D = dual_cell(*T, Tp, top);
    CHECK(D.simplices() == std::set<int>{top});

    auto I = make("simplex1");
    auto Ip = barycentric_subdivide_once(I);
    auto Dv = dual_cell(*I, Ip, 0);
    CHECK(Dv.simplices() == std::set<int>{0, 2, Ip.find({0, 2})});

    const int e = T->find({0, 1});
    auto De = dual_cell(*T, Tp, e);
    CHECK(De.simplices() == std::set<int>{e, top, Tp.find({e, top})});

    // every simplex of K' lies in the dual cell of the first simplex of its chain
    for (auto* pair : {&T, &I}) {
        const auto& K = **pair;
        auto Kp = barycentric_subdivide_once(*pair);
        std::vector<int> hits(Kp.num_simplices(), 0);
        for (int s = 0; s < K.num_simplices(); ++s) {
            const auto D = dual_cell(K, Kp, s);
            for (int t : D.simplices())
                if (Kp.vertices(t).front() == s) ++hits[t];
        }
        for (int h : hits) CHECK(h == 1);
    }
}

TEST_CASE("json-style construction closes under faces") {
    auto K = SimplicialComplex::from_simplices({"a", "b", "c", "d"}, {{2, 0, 1}, {3, 2}});
    CHECK(counts(K) == std::vector<int>{4, 4, 1});
    CHECK(K.find({0, 1, 2}) >= 0);
    CHECK(K.connected());
}
