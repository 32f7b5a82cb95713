#pragma once

#include "strtop/homotopy_pairing.hpp"

namespace strtop {

struct AlphaBoundsExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a ⊗ c ⊗ b in ΩC ⊠ C ⊠ ΩC, t(a) = s(c), t(c) = s(b)
struct MarkedPath {
    Word a;
    int c = 0;
    Word b;
    auto operator<=>(const MarkedPath&) const = default;
    bool operator==(const MarkedPath&) const = default;
};
using MarkedElem = Chain<MarkedPath>;

int marked_degree(const Coalgebra& C, const MarkedPath& p);
MarkedElem marked_d(const Coalgebra& C, const MarkedPath& p);
MarkedElem marked_d(const Coalgebra& C, const MarkedElem& x);
std::string describe(const Coalgebra& C, const MarkedElem& x);

// degree +1; zero on identity words
MarkedElem scan(const Coalgebra& C, const Word& w);
MarkedElem scan(const Coalgebra& C, const CobarElem& x);
// d s + s d on w: id ⊗ s(w) ⊗ w − w ⊗ t(w) ⊗ id
MarkedElem scan_failure(const Coalgebra& C, const Word& w);

struct NecklacePair {
    Necklace a, b;
    auto operator<=>(const NecklacePair&) const = default;
    bool operator==(const NecklacePair&) const = default;
};
using CoHochPair = Chain<NecklacePair>;

// ∂ ⊗ 1 + 1 ⊗ ∂ with the Koszul sign
CoHochPair pair_d(const Coalgebra& C, const CoHochPair& x);
std::string describe(const Coalgebra& C, const CoHochPair& x);
// every term has an m-local factor, i.e. x vanishes in the quotient by the
// m-local ideal
bool in_local_ideal(const Coalgebra& C, const CoHochPair& x, int m);
std::set<int> support_vertices(const Coalgebra& C, const CoHochPair& x);

// μ_α and λ_α for a homotopy pairing α of degree n
class StringOps {
public:
    explicit StringOps(const HomElement& alpha);

    const Coalgebra& coalgebra() const { return alpha_.coalgebra(); }
    int n() const { return alpha_.degree(); }

    CoHochElem product(const Necklace& x, const Necklace& y) const;
    CoHochElem product(const CoHochElem& x, const CoHochElem& y) const;

    CoHochPair coproduct(const Necklace& x) const;
    CoHochPair coproduct(const CoHochElem& x) const;
    // λ with s(a) replaced by a marked-path element m produced by an operator
    // of the given parity
    CoHochPair coproduct_along(int marked, const MarkedElem& m, int parity) const;
    // (∂⊗1 + 1⊗∂)λ(x) − (−1)^{n−1} λ(∂x)
    CoHochPair coproduct_defect(const Necklace& x) const;
    // right-hand side of the failure identity: coproduct_defect(x) equals
    // coproduct_failure(x, all). `ends` keeps the two scan failure end terms,
    // `rotated` the marked bead cut against its own rotated piece.
    enum class FailureTerms { all, ends, rotated };
    CoHochPair coproduct_failure(const Necklace& x, FailureTerms which = FailureTerms::all) const;

private:
    const HomElement& alpha_;
    const TensorElem& alpha_at(int x, int y) const;
};

// Leibniz: ∂μ(x, y) = (−1)^n (μ(∂x, y) + (−1)^{|x|} μ(x, ∂y))
CoHochElem leibniz_defect(const StringOps& ops, const Necklace& x, const Necklace& y);

}  // namespace strtop
