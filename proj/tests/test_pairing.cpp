#include <chrono>
#include <iostream>

#include "doctest.h"
#include "strtop/pairing.hpp"

using namespace strtop;

namespace {

ComplexPtr sub(const std::string& name, int k) {
    auto K = std::make_shared<const SimplicialComplex>(bundled::by_name(name));
    if (k == 0) return K;
    return std::make_shared<const SimplicialComplex>(barycentric_subdivide(K, k));
}

// x ∈ im ∂ in C⊗C of total degree deg(x)+1, by direct elimination
bool tensor_boundary_of_something(const SimplicialComplex& K, const Chain<SimplexPair>& x, int deg, const Ring& ring) {
    std::map<SimplexPair, int> row;
    std::vector<Chain<SimplexPair>> cols;
    for (int a = 0; a < K.num_simplices(); ++a)
        for (int b = 0; b < K.num_simplices(); ++b)
            if (K.dim(a) + K.dim(b) == deg + 1) cols.push_back(tensor_boundary(K, Chain<SimplexPair>(SimplexPair{a, b})));
    for (const auto& c : cols)
        for (const auto& [p, v] : c) row.emplace(p, 0);
    for (const auto& [p, v] : x) row.emplace(p, 0);
    int n = 0;
    for (auto& [p, i] : row) i = n++;
    Eliminator E(n, ring);
    for (const auto& c : cols) {
        SparseVec col;
        for (const auto& [p, v] : c)
            if (!v.in(ring).is_zero()) col.push_back({row[p], v.in(ring)});
        E.add_column(col);
    }
    SparseVec b;
    for (const auto& [p, v] : x)
        if (!v.in(ring).is_zero()) b.push_back({row[p], v.in(ring)});
    return E.in_span(b);
}

}  // namespace

TEST_CASE("caps on the interval") {
    auto K = sub("simplex1", 0);
    Chain<int> edge(2);
    CapMaps M(K, edge);
    // ρ = vertex 0: the half edge (0 < 01) with [0:01] = −1
    auto f = M.flexner(0);
    REQUIRE(f.size() == 1u);
    CHECK(M.subdivision().vertices(f.begin()->first) == std::vector<int>{0, 2});
    CHECK(f.begin()->second == Scalar(-1));
    CHECK(M.flexner(2).size() == 1u);
    auto H = M.find_local_homotopy(Ring::rationals());
    CHECK(M.verify_homotopy(H).ok);
    auto dual = verify_controlled_duality(K, edge, Ring::rationals(), false);
    CHECK_FALSE(dual.chain_map);
    CHECK_FALSE(dual.quasi_isomorphism);
    CHECK_THROWS_AS(find_local_pairing(K, edge, 1, Ring::rationals()), Infeasible);
}

TEST_CASE("point pairing") {
    auto K = sub("point", 0);
    auto th = find_local_pairing(K, Chain<int>(0), 0, Ring::rationals());
    CHECK(th(0, 0) == Scalar(1));
}

TEST_CASE("circle pairing pipeline") {
    const Ring Q = Ring::rationals();
    auto K = sub("boundary2", 2);
    Chain<int> o = default_fundamental_chain(*K, Q);
    CHECK(K->boundary(o).empty());
    auto th = find_local_pairing(K, o, 1, Q);
    auto rep = verify_nondegenerate(*K, th, o);
    CHECK(rep.local);
    CHECK(rep.nondegenerate);
    auto X = cap_with_product(*K, th, o);
    CHECK(tensor_boundary(*K, X).empty());
    CHECK(tensor_boundary_of_something(*K, X - diagonal_class(*K, o), 1, Q));
    LocalPairing twice = th;
    for (auto& [p, v] : twice.table) v = v * Scalar(2);
    CHECK_FALSE(verify_nondegenerate(*K, twice, o).nondegenerate);

    CapMaps M(K, o);
    CHECK(M.verify_flexner_chain_map().ok);
    CHECK(M.verify_whitney_chain_map().ok);
    CHECK(M.verify_flexner_local().ok);
    auto H = M.find_local_homotopy(Q);
    CHECK(M.verify_homotopy(H).ok);
    for (int h : M.cone_homology(Q)) CHECK(h == 0);
    auto inv = M.find_controlled_inverse(Q);
    std::cerr << "circle inverse attempted=" << inv.attempted << " found=" << inv.found << " unknowns=" << inv.unknowns << "\n";
}

TEST_CASE("sphere pairing over Z/2") {
    const Ring F2 = Ring::mod(2);
    auto t0 = std::chrono::steady_clock::now();
    auto K = sub("boundary3", 2);
    Chain<int> o = default_fundamental_chain(*K, F2);
    auto th = find_local_pairing(K, o, 2, F2);
    auto rep = verify_nondegenerate(*K, th, o);
    CHECK(rep.nondegenerate);
    CHECK(rep.local);
    CapMaps M(K, o);
    CHECK(M.verify_flexner_chain_map().ok);
    CHECK(M.verify_flexner_local().ok);
    for (int h : M.cone_homology(F2)) CHECK(h == 0);
    auto H = M.find_local_homotopy(F2);
    CHECK(M.verify_homotopy(H).ok);
    std::cerr << "sphere pipeline " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
}
