#include <chrono>
#include <iostream>

#include "doctest.h"
#include "strtop/fineness.hpp"

using namespace strtop;

namespace {
ComplexPtr sub(const std::string& name, int k) {
    auto K = std::make_shared<const SimplicialComplex>(bundled::by_name(name));
    if (k == 0) return K;
    return std::make_shared<const SimplicialComplex>(barycentric_subdivide(K, k));
}
}  // namespace

TEST_CASE("unsubdivided circle is not 1-fine") {
    FinenessCertificate F(sub("boundary2", 0), 1);
    auto r = F.verify_exhaustive();
    CHECK_FALSE(r.ok);
    CHECK(!r.witness.empty());
}

TEST_CASE("a simplex is its own star") {
    auto K = sub("simplex2", 0);
    FinenessCertificate F(K, 1);
    auto r = F.verify_exhaustive();
    CHECK(r.ok);
    const auto& a = F.Z(Subcomplex::whole(*K));
    CHECK(a.Z.simplices().size() == 7u);
}

TEST_CASE("subdivided boundaries are fine") {
    struct Case { std::string name; int k, m; };
    for (const Case& c : {Case{"boundary2", 2, 1}, Case{"boundary2", 3, 3}, Case{"boundary3", 2, 1}, Case{"boundary3", 3, 3}}) {
        auto t0 = std::chrono::steady_clock::now();
        FinenessCertificate F(sub(c.name, c.k), c.m);
        auto r = F.verify_exhaustive();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        INFO(c.name << " k=" << c.k << " m=" << c.m << ": " << r.failure);
        CHECK(r.ok);
        CHECK(r.exhaustive);
        std::cerr << c.name << "^(" << c.k << ") m=" << c.m << " cliques=" << r.subcomplexes << " stars=" << r.distinct_stars
                  << " pairs=" << r.monotone_pairs << " " << s << "s\n";
    }
}

TEST_CASE("queried assignments are monotone and contain their input") {
    auto K = sub("boundary3", 2);
    FinenessCertificate F(K, 1);
    for (int e : K->of_dim(1)) {
        const auto& a = F.Z(Subcomplex(K.get(), {e}));
        CHECK(a.Z.contains(e));
        for (int v : K->vertices(e)) CHECK(a.Z.contains(F.Z(Subcomplex(K.get(), {v})).Z));
    }
    CHECK(F.verify_queried().ok);
}
