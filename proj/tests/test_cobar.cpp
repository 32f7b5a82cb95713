#include "doctest.h"
#include "strtop/cobar.hpp"

using namespace strtop;

namespace {
ComplexPtr make(const std::string& name, int k = 0) {
    auto K = std::make_shared<const SimplicialComplex>(bundled::by_name(name));
    if (k == 0) return K;
    return std::make_shared<const SimplicialComplex>(barycentric_subdivide(K, k));
}
}  // namespace

TEST_CASE("x² and y² identities") {
    auto K = make("boundary2");
    auto C = invert_edges(K, 4);
    for (int s : K->of_dim(1)) {
        const int v = K->vertices(s)[0], w = K->vertices(s)[1], chk = C->check(s);
        CobarElem ex;
        ex.add(make_word(*C, {s, chk}), Scalar(1));
        ex.add(identity_word(v), Scalar(-1));
        CHECK(cobar_d(*C, make_word(*C, {C->inverted_gen(s, 'x', 2)})) == ex);
        CobarElem ey;
        ey.add(make_word(*C, {chk, s}), Scalar(-1));
        ey.add(identity_word(w), Scalar(1));
        CHECK(cobar_d(*C, make_word(*C, {C->inverted_gen(s, 'y', 2)})) == ey);
    }
    CHECK(cobar_d(*C, identity_word(0)).empty());
    CHECK_NOTHROW(cobar_self_check(*C));
}

TEST_CASE("composition") {
    auto K = make("simplex2");
    auto C = invert_edges(K, 3);
    const int a = K->find({0, 1}), b = K->find({1, 2});
    const Word wa = make_word(*C, {a});
    CHECK(compose(wa, identity_word(1)) == wa);
    CHECK(compose(identity_word(0), wa) == wa);
    CHECK(compose(wa, make_word(*C, {b})) == make_word(*C, {a, b}));
    CHECK_THROWS_AS(compose(wa, wa), EndpointMismatch);
    CHECK_THROWS_AS(make_word(*C, {b, a}), EndpointMismatch);
}

TEST_CASE("d² = 0 and Leibniz") {
    for (const auto& [name, deg, len] : {std::tuple{"boundary2", 4, 4}, std::tuple{"simplex3", 4, 3}}) {
        auto K = make(name);
        for (bool inv : {true, false}) {
            auto C = inv ? invert_edges(K, deg) : chains_coalgebra(K);
            INFO(name << (inv ? " inverted" : ""));
            auto r = verify_cobar_dsquare(*C, deg, len);
            CHECK(r.ok());
            CHECK(r.checked > 0);
            CHECK(verify_cobar_leibniz(*C, deg, std::min(len, 3)).ok());
        }
    }
}

TEST_CASE("degree bookkeeping") {
    auto C = invert_edges(make("boundary2"), 4);
    for (int deg = 0; deg <= 3; ++deg)
        for (int v = 0; v < 3; ++v)
            for (const Word& w : enumerate_words(*C, v, -1, deg, 3)) {
                CHECK(word_degree(*C, w) == deg);
                for (const auto& [x, c] : cobar_d(*C, w)) CHECK(word_degree(*C, x) == deg - 1);
            }
}

TEST_CASE("path representatives") {
    auto K = make("boundary2", 1);
    auto C = invert_edges(K, 2);
    auto Z = Subcomplex::whole(*K);
    CHECK(path_representative(*C, 4, 4, Z).is_identity());
    for (int e : K->of_dim(1)) {
        const int v = K->vertices(e)[0], w = K->vertices(e)[1];
        CHECK(path_representative(*C, v, w, Z) == make_word(*C, {e}));
        CHECK(path_representative(*C, w, v, Z) == make_word(*C, {C->check(e)}));
    }
    for (int v = 0; v < K->num_vertices(); ++v)
        for (int w = 0; w < K->num_vertices(); ++w) {
            Word p = path_representative(*C, v, w, Z, 3);
            CHECK(p.src == v);
            CHECK(p.tgt == w);
            CHECK(word_degree(*C, p) == 0);
            CHECK(cobar_d(*C, p).empty());
            CHECK(word_in(*C, p, Z));
        }
    // a closed edge cannot reach the rest of the circle
    const int e0 = K->of_dim(1)[0];
    auto e = Subcomplex::closure_of(*K, {e0});
    int far = 0;
    while (e.contains(far)) ++far;
    CHECK_THROWS_AS(path_representative(*C, K->vertices(e0)[0], far, e), DisconnectedSupport);
}
