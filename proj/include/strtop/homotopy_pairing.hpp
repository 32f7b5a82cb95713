#pragma once

#include <map>

#include "strtop/cohoch.hpp"
#include "strtop/pairing.hpp"

namespace strtop {

// simple tensor in ΩC ⊗ ΩC
struct WordPair {
    Word a, b;
    auto operator<=>(const WordPair&) const = default;
    bool operator==(const WordPair&) const = default;
};
using TensorElem = Chain<WordPair>;

int pair_degree(const Coalgebra& C, const WordPair& p);
// d(A ⊗ B) = dA ⊗ B + (−1)^{|A|} A ⊗ dB
TensorElem tensor_d(const Coalgebra& C, const WordPair& p);
TensorElem tensor_d(const Coalgebra& C, const TensorElem& x);
bool pair_in(const Coalgebra& C, const WordPair& p, const Subcomplex& Z);
std::string describe(const Coalgebra& C, const TensorElem& x);

struct OutOfBounds : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RHSNotClosed : std::logic_error {
    using std::logic_error::logic_error;
};

// φ(x, y) ∈ ΩC(s x, t y) ⊗ ΩC(s y, t x) for generators x, y; output degree
// |x| + |y| − degree
class HomElement {
public:
    HomElement() = default;
    HomElement(CoalgebraPtr C, int degree, int max_input_degree);

    const Coalgebra& coalgebra() const { return *C_; }
    CoalgebraPtr coalgebra_ptr() const { return C_; }
    int degree() const { return degree_; }
    int max_input_degree() const { return max_input_; }
    const TensorElem& operator()(int x, int y) const;
    void set(int x, int y, TensorElem v);
    const std::map<std::pair<int, int>, TensorElem>& table() const { return table_; }
    HomElement operator-(const HomElement& o) const;

private:
    CoalgebraPtr C_;
    int degree_ = 0;
    int max_input_ = 0;
    std::map<std::pair<int, int>, TensorElem> table_;
};

// the five families besides d_{Ω⊗Ω} ∘ φ
TensorElem hom_rest(const HomElement& phi, int x, int y);
// (dφ)(x, y) = −d_{Ω⊗Ω} φ(x, y) + hom_rest; throws OutOfBounds above the truncation
TensorElem hom_differential(const HomElement& phi, int x, int y);

// generator pairs with total degree in [lo, hi], ordered by total degree;
// optionally only those whose base simplices meet
std::vector<std::pair<int, int>> generator_pairs(const Coalgebra& C, int lo, int hi, bool overlapping_only);
bool generators_meet(const Coalgebra& C, int x, int y);
// closure of the base simplices of x and y
Subcomplex pair_support(const Coalgebra& C, int x, int y);

struct AlphaBounds {
    int max_degree = 0;  // D, total input degree
    SolverConfig solver;
    unsigned seed = 0;  // 0: canonical tie-breaking
};

struct PairSolve {
    int x = 0, y = 0;
    int word_bound = 0;
    int unknowns = 0;
    int rank = 0;
};

struct HomotopyPairing {
    HomElement alpha;
    LocalPairing theta;
    AlphaBounds bounds;
    std::vector<PairSolve> solves;
    int n() const { return theta.n; }
};

// d_{Ω⊗Ω} y = z for y supported in Z, word pairs of total length <= L
PrimitiveResult<WordPair> tensor_primitive(const Coalgebra& C, const TensorElem& z, int src_a, int tgt_a, int src_b,
                                           int tgt_b, const Subcomplex& Z, const SolverConfig& cfg, unsigned seed);

HomotopyPairing construct_alpha(const LiftedPairing& th, const AlphaBounds& bounds);

struct AlphaReport {
    bool closed = true;     // dα = 0 on all overlapping pairs within bounds
    bool local = true;      // (1)
    bool supported = true;  // (2)
    bool lifts = true;      // (3), base values
    long pairs_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return closed && local && supported && lifts; }
};
AlphaReport verify_alpha(const HomotopyPairing& A, const LiftedPairing& th);

// β of degree n−1 with dβ = α1 − α2; when the pairings differ by a
// coboundary, θ2 = θ1 + δξ, pass ξ
HomElement homotopy_between(const HomotopyPairing& a1, const HomotopyPairing& a2, const SolverConfig& cfg,
                            const LocalPairing* xi = nullptr);
// pairs within bounds where dβ ≠ α1 − α2
std::vector<std::pair<int, int>> verify_homotopy_between(const HomElement& beta, const HomotopyPairing& a1,
                                                         const HomotopyPairing& a2);

}  // namespace strtop
