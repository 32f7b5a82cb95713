#include <random>

#include "doctest.h"
#include "strtop/homotopy_pairing.hpp"

using namespace strtop;

namespace {

HomElement random_hom(CoalgebraPtr C, int k, int D, unsigned seed) {
    std::mt19937 rng(seed);
    HomElement phi(C, k, D);
    for (const auto& [x, y] : generator_pairs(*C, 0, D, false)) {
        const int out = C->degree(x) + C->degree(y) - k;
        if (out < 0) continue;
        std::vector<WordPair> cand;
        for (int da = 0; da <= out; ++da)
            for (const Word& a : enumerate_words(*C, C->source(x), C->target(y), da, 2))
                for (const Word& b : enumerate_words(*C, C->source(y), C->target(x), out - da, 2)) cand.push_back({a, b});
        if (cand.empty()) continue;
        TensorElem v;
        for (int i = 0; i < 2; ++i) v.add(cand[rng() % cand.size()], Scalar(static_cast<long long>(rng() % 5) - 2));
        phi.set(x, y, v);
    }
    return phi;
}

HomElement apply_d(const HomElement& phi) {
    HomElement out(phi.coalgebra_ptr(), phi.degree() + 1, phi.max_input_degree());
    for (const auto& [x, y] : generator_pairs(phi.coalgebra(), 0, phi.max_input_degree(), false))
        out.set(x, y, hom_differential(phi, x, y));
    return out;
}

}  // namespace

TEST_CASE("hom differential squares to zero") {
    auto X = std::make_shared<const SimplicialComplex>(bundled::simplex(2));
    auto C = invert_edges(X, 3);
    for (int k : {0, 1, 2})
        for (unsigned seed : {1u, 2u, 3u}) {
            HomElement phi = random_hom(C, k, 3, seed);
            HomElement dd = apply_d(apply_d(phi));
            int bad = 0;
            std::string first;
            for (const auto& [key, v] : dd.table())
                if (!v.empty()) {
                    if (!bad) first = C->describe(key.first) + "," + C->describe(key.second) + ": " + describe(*C, v);
                    ++bad;
                }
            INFO("k=" << k << " seed=" << seed << " first failure " << first);
            CHECK(bad == 0);
        }
}

TEST_CASE("zero hom element is closed") {
    auto X = std::make_shared<const SimplicialComplex>(bundled::simplex(1));
    auto C = invert_edges(X, 2);
    HomElement phi(C, 1, 2);
    for (const auto& [x, y] : generator_pairs(*C, 0, 2, false)) CHECK(hom_differential(phi, x, y).empty());
}
