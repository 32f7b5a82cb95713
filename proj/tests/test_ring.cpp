#include <random>

#include "doctest.h"
#include "strtop/chain.hpp"
#include "strtop/linalg.hpp"

using namespace strtop;

namespace {
SparseMatrix circle_boundary() {
    // edges 01, 02, 12 as columns; rows are vertices
    SparseMatrix A(3, 3);
    A.set(0, 0, Scalar(-1));
    A.set(1, 0, Scalar(1));
    A.set(0, 1, Scalar(-1));
    A.set(2, 1, Scalar(1));
    A.set(1, 2, Scalar(-1));
    A.set(2, 2, Scalar(1));
    return A;
}
}  // namespace

TEST_CASE("scalar arithmetic is exact") {
    const Ring Q = Ring::rationals();
    Scalar a = Scalar::fraction(Q, 1, 3);
    CHECK((a + a + a).is_one());
    CHECK((a * Scalar(3)) == Scalar(1));
    CHECK(Scalar::fraction(Q, 2, 4) == Scalar::fraction(Q, 1, 2));
    CHECK(Scalar::fraction(Q, -6, 4).str() == "-3/2");

    // overflow promotes instead of wrapping
    Scalar big(Q, 1LL << 62);
    Scalar sq = big * big;
    CHECK(sq.str() == "21267647932558653966460912964485513216");
    CHECK((sq / big) == big);
    CHECK_THROWS(sq.to_int());

    const Ring F7 = Ring::mod(7);
    Scalar x(F7, 3);
    CHECK((x * x.inverse()).is_one());
    CHECK((x * Scalar(5)).str() == "1");
    CHECK(Scalar(F7, -1).str() == "6");
    CHECK_THROWS_AS(Ring::mod(9), std::invalid_argument);
    CHECK_THROWS(Scalar(Q, 1) / Scalar(Q, 0));
}

TEST_CASE("ring specs parse") {
    CHECK(Ring::parse("int") == Ring::integers());
    CHECK(Ring::parse("rat") == Ring::rationals());
    CHECK(Ring::parse("mod2") == Ring::mod(2));
    CHECK(Ring::parse("Z/5") == Ring::mod(5));
    CHECK_THROWS(Ring::parse("reals"));
    CHECK(Scalar::parse(Ring::rationals(), "-4/6") == Scalar::fraction(Ring::rationals(), -2, 3));
    CHECK(Scalar::parse(Ring::mod(5), "7").str() == "2");
}

TEST_CASE("solve_linear") {
    const Ring Q = Ring::rationals();
    auto x = solve_linear(SparseMatrix::identity(3), sparse_from_dense({Scalar(1), Scalar(2), Scalar(3)}), Q);
    REQUIRE(x);
    CHECK(*x == sparse_from_dense({Scalar(1), Scalar(2), Scalar(3)}));

    CHECK_FALSE(solve_linear(SparseMatrix(3, 3), sparse_from_dense({Scalar(1), Scalar(0), Scalar(0)}), Q));

    // w − v on the 3-vertex circle
    auto A = circle_boundary();
    auto b = sparse_from_dense({Scalar(-1), Scalar(0), Scalar(1)});
    auto y = solve_linear(A, b, Q);
    REQUIRE(y);
    CHECK(A.apply(*y) == b);

    CHECK_THROWS_AS(solve_linear(A, b, Ring::integers()), NonFieldCoefficients);
}

TEST_CASE("rank_and_kernel") {
    const Ring Q = Ring::rationals();
    auto r = rank_and_kernel(SparseMatrix::identity(2), Q);
    CHECK(r.rank == 2);
    CHECK(r.kernel.empty());

    auto A = circle_boundary();
    r = rank_and_kernel(A, Q);
    CHECK(r.rank == 2);
    REQUIRE(r.kernel.size() == 1u);
    CHECK(A.apply(r.kernel[0]).empty());

    r = rank_and_kernel(SparseMatrix(3, 3), Q);
    CHECK(r.rank == 0);
    CHECK(r.kernel.size() == 3u);
    CHECK_THROWS_AS(rank_and_kernel(A, Ring::integers()), NonFieldCoefficients);
}

TEST_CASE("random systems: rank-nullity and re-multiplication") {
    std::mt19937 rng(7);
    for (const Ring& R : {Ring::rationals(), Ring::mod(2), Ring::mod(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const int rows = 1 + rng() % 7, cols = 1 + rng() % 7;
            SparseMatrix A(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    if (rng() % 3 == 0) A.set(i, j, Scalar(R, static_cast<long long>(rng() % 7) - 3));
            auto rk = rank_and_kernel(A, R);
            CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == cols);
            for (const auto& v : rk.kernel) CHECK(A.apply(v).empty());

            SparseVec x;
            for (int j = 0; j < cols; ++j)
                if (rng() % 2) x.push_back({j, Scalar(R, 1 + rng() % 4)});
            SparseVec b = A.apply(x);
            auto sol = solve_linear(A, b, R);
            REQUIRE(sol);
            CHECK(A.apply(*sol) == b);
        }
    }
}

TEST_CASE("chains stay canonical") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Chain<int> a, b;
        for (int i = 0; i < 6; ++i) {
            a.add(static_cast<int>(rng() % 8), Scalar(static_cast<long long>(rng() % 5) - 2));
            b.add(static_cast<int>(rng() % 8), Scalar(static_cast<long long>(rng() % 5) - 2));
        }
        for (const auto& [k, c] : a) CHECK_FALSE(c.is_zero());
        CHECK((a + b) - b == a);
        CHECK((a + b) == (b + a));
        CHECK((a - a).empty());
        CHECK((a + b) * Scalar(3) == a * Scalar(3) + b * Scalar(3));
    }
}
