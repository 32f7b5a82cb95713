#include <chrono>
#include <iostream>

#include "doctest.h"
#include "strtop/homotopy_pairing.hpp"

using namespace strtop;

namespace {

struct CircleSetup {
    ComplexPtr K;
    CoalgebraPtr C;
    LocalPairing theta;
};

CircleSetup circle(int max_level) {
    auto base = std::make_shared<const SimplicialComplex>(bundled::by_name("boundary2"));
    auto K = std::make_shared<const SimplicialComplex>(barycentric_subdivide(base, 2));
    const Ring Q = Ring::rationals();
    LocalPairing th = find_local_pairing(K, default_fundamental_chain(*K, Q), 1, Q);
    return {K, invert_edges(K, max_level), th};
}

}  // namespace

TEST_CASE("alpha on the subdivided circle") {
    const int D = std::stoi(std::getenv("ALPHA_D") ? std::getenv("ALPHA_D") : "5");
    auto S = circle(D);
    LiftedPairing th(S.C, S.theta);
    AlphaBounds b;
    b.max_degree = D;
    auto t0 = std::chrono::steady_clock::now();
    HomotopyPairing A = construct_alpha(th, b);
    auto t1 = std::chrono::steady_clock::now();
    AlphaReport r = verify_alpha(A, th);
    auto t2 = std::chrono::steady_clock::now();
    std::cerr << "D=" << D << " solves=" << A.solves.size() << " construct "
              << std::chrono::duration<double>(t1 - t0).count() << "s verify "
              << std::chrono::duration<double>(t2 - t1).count() << "s\n";
    std::map<int, int> nz;
    for (const auto& [k, v] : A.alpha.table())
        if (!v.empty()) nz[S.C->degree(k.first) + S.C->degree(k.second)]++;
    for (auto [d, c] : nz) std::cerr << "deg " << d << ": " << c << " nonzero\n";
    int maxw = 0;
    for (const auto& s : A.solves) maxw = std::max(maxw, s.word_bound);
    std::cerr << "max word bound " << maxw << "\n";
    for (size_t i = 0; i < r.failures.size() && i < 5; ++i) std::cerr << r.failures[i] << "\n";
    CHECK(r.ok());
}

TEST_CASE("homotopy between seeds") {
    auto S = circle(6);
    LiftedPairing th(S.C, S.theta);
    AlphaBounds b0, b1;
    b0.max_degree = b1.max_degree = 5;
    b1.seed = 7;
    HomotopyPairing A0 = construct_alpha(th, b0), A1 = construct_alpha(th, b1);
    int differ = 0;
    for (const auto& [k, v] : A0.alpha.table())
        if (A1.alpha(k.first, k.second) != v) ++differ;
    std::cerr << "entries differing between seeds: " << differ << "\n";
    CHECK(differ > 0);
    CHECK(verify_alpha(A1, th).ok());
    HomElement beta = homotopy_between(A0, A1, SolverConfig{});
    CHECK(verify_homotopy_between(beta, A0, A1).empty());
}

TEST_CASE("homotopy between cohomologous pairings") {
    auto S = circle(6);
    const SimplicialComplex& K = *S.K;
    // ξ local of total degree n−1 = 0: supported on (v, v)
    LocalPairing xi;
    xi.n = 0;
    xi.table[{0, 0}] = Scalar(1);
    xi.table[{3, 3}] = Scalar(-2);
    LocalPairing th2 = S.theta;
    th2.table.clear();
    for (int a = 0; a < K.num_simplices(); ++a)
        for (int b = 0; b < K.num_simplices(); ++b) {
            if (K.dim(a) + K.dim(b) != 1) continue;
            // (δξ)(a, b) = ξ(∂a, b) + (−1)^{|a|} ξ(a, ∂b)
            Scalar v = S.theta(a, b);
            for (const auto& [f, c] : K.boundary(a)) v = v + c * xi(f, b);
            for (const auto& [f, c] : K.boundary(b)) v = v + sign_of(K.dim(a)) * c * xi(a, f);
            if (!v.is_zero()) th2.table[{a, b}] = v;
        }
    CHECK(pairing_cocycle_defects(K, th2).empty());
    LiftedPairing l1(S.C, S.theta), l2(S.C, th2);
    AlphaBounds b;
    b.max_degree = 5;
    HomotopyPairing A1 = construct_alpha(l1, b), A2 = construct_alpha(l2, b);
    HomElement beta = homotopy_between(A1, A2, SolverConfig{}, &xi);
    auto bad = verify_homotopy_between(beta, A1, A2);
    CHECK(bad.empty());
}
