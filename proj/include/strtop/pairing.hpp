#pragma once

#include <map>
#include <optional>

#include "strtop/coalgebra.hpp"
#include "strtop/cohoch.hpp"

namespace strtop {

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCocycle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using SimplexPair = std::pair<int, int>;

// θ(σ, τ), nonzero only for dim σ + dim τ = n
struct LocalPairing {
    int n = 0;
    Ring ring = Ring::rationals();
    std::map<SimplexPair, Scalar> table;

    Scalar operator()(int a, int b) const;
};

// chain-level checks on a pairing table
bool pairing_is_local(const SimplicialComplex& K, const LocalPairing& th);
// pairs (a, b) of total degree n+1 on which θ(δa, b) + (−1)^{|a|} θ(a, δb) fails
std::vector<SimplexPair> pairing_cocycle_defects(const SimplicialComplex& K, const LocalPairing& th);

// the generator of ker δ_top when it is one-dimensional (first coefficient 1),
// otherwise the sum of the top simplices
Chain<int> default_fundamental_chain(const SimplicialComplex& K, const Ring& ring);

// ---- homology with a dual cocycle basis ----------------------------------

struct HomologyBasis {
    std::vector<Chain<int>> cycles;    // by degree, representatives z_j
    std::vector<Chain<int>> cocycles;  // u_i with u_i(z_j) = δ_ij
};
std::vector<HomologyBasis> homology_bases(const SimplicialComplex& K, const Ring& ring);
std::vector<int> betti_numbers(const SimplicialComplex& K, const Ring& ring);

// ---- caps -------------------------------------------------------------------

// σ ⌢ ρ∨ = ρ∨(back face) · front face
Chain<int> whitney_cap(const SimplicialComplex& K, const Chain<int>& c, int rho);
// standard barycentric chain map C_*(K) -> C_*(K'), K' = barycentric_subdivide_once(K)
Chain<int> subdivide_chain(const SimplicialComplex& K, const SimplicialComplex& Kp, const Chain<int>& c);
// δ* ρ∨ = Σ [ρ:a] a∨
Chain<int> coboundary(const SimplicialComplex& K, int rho);
Chain<int> coboundary(const SimplicialComplex& K, const Chain<int>& phi);

// The two maps C^{k-*}(K) -> C_*(K') attached to a chain c of dimension k:
// Flexner's ρ∨ ↦ Σ_σ c_σ Σ_{ρ = σ0 < ... < σj = σ} [σ0:σ1]...[σ_{j-1}:σj] (σ0 < ... < σj),
// and the Whitney cap followed by sd, normalized by a degree sign so that both
// satisfy ∂' F = F δ* when c is a cycle and agree on top cochains.
class CapMaps {
public:
    CapMaps(ComplexPtr K, Chain<int> c);

    const SimplicialComplex& complex() const { return *K_; }
    const SimplicialComplex& subdivision() const { return *Kp_; }
    ComplexPtr subdivision_ptr() const { return Kp_; }
    int k() const { return k_; }
    const Chain<int>& chain() const { return c_; }

    Chain<int> flexner(int rho) const;
    Chain<int> flexner(const Chain<int>& phi) const;
    Chain<int> whitney(int rho) const;
    Chain<int> whitney(const Chain<int>& phi) const;
    static int whitney_sign(int k, int p);

    struct Report {
        bool ok = true;
        long checked = 0;
        std::vector<std::string> failures;
    };
    Report verify_flexner_chain_map() const;
    Report verify_whitney_chain_map() const;
    // image of ρ∨ inside the dual cells D(σ), σ ≥ ρ
    Report verify_flexner_local() const;

    struct Homotopy {
        std::map<int, Chain<int>> h;  // ρ -> chain on K' of dimension k - dim ρ + 1
        std::vector<RankStep> ranks;
    };
    // δ' h + h δ* = F − sd∘W, with h(ρ∨) on K'-simplices whose K-carrier meets ρ̄
    Homotopy find_local_homotopy(const Ring& ring) const;
    Report verify_homotopy(const Homotopy& h) const;

    // mapping cone of F, homology dimensions per degree (F must be a chain map)
    std::vector<int> cone_homology(const Ring& ring) const;

    // best effort: an (R,K)-local chain map f : C_*(K') -> C^{k-*}(K) with
    // f F = id and F f − id = ∂' g + g ∂' for an (R,K)-local g. Local maps
    // lower the cochain degree only through zero, so no homotopy is needed on
    // the cochain side. Skipped when the system exceeds max_unknowns.
    struct ControlledInverse {
        bool attempted = false;
        bool found = false;
        long unknowns = 0;
        std::map<int, Chain<int>> f;  // K' simplex -> cochain
        std::map<int, Chain<int>> g;  // K' simplex -> chain on K'
    };
    ControlledInverse find_controlled_inverse(const Ring& ring, long max_unknowns = 200000) const;

private:
    ComplexPtr K_;
    ComplexPtr Kp_;
    Chain<int> c_;
    int k_;
    int carrier_top(int kp_simplex) const;  // largest simplex of the chain
};

struct NondegeneracyReport {
    bool cocycle = false;
    bool local = false;
    bool nondegenerate = false;
    // evaluations of (u_i ⊗ u_j) on θ ⌢ o_{K×K} and on diag_* o_K
    std::vector<Scalar> lhs, rhs;
};
// Künneth: a cycle of C⊗C is determined in homology by the values of the
// products u_i ⊗ u_j of the dual cocycle bases
NondegeneracyReport verify_nondegenerate(const SimplicialComplex& K, const LocalPairing& th, const Chain<int>& o);
// θ ⌢ (o ⊗ o) in C_*(K) ⊗ C_*(K)
Chain<SimplexPair> cap_with_product(const SimplicialComplex& K, const LocalPairing& th, const Chain<int>& o);
// diag_* o through Alexander–Whitney
Chain<SimplexPair> diagonal_class(const SimplicialComplex& K, const Chain<int>& o);
Chain<SimplexPair> tensor_boundary(const SimplicialComplex& K, const Chain<SimplexPair>& x);

// solves {δθ = 0, θ local, θ nondegenerate}; needs a 1-fine K
LocalPairing find_local_pairing(ComplexPtr K, const Chain<int>& o, int n, const Ring& ring);

struct DualityReport {
    bool chain_map = false;
    bool local = false;
    bool quasi_isomorphism = false;
    std::vector<int> cone_homology;  // empty when F is not a chain map
    CapMaps::ControlledInverse inverse;
};
DualityReport verify_controlled_duality(ComplexPtr K, const Chain<int>& o, const Ring& ring, bool try_inverse);

// θ̃ on generators of C(X̃): σ̌ acts as −σ in either slot, x^k, y^k (k ≥ 2) pair to zero
class LiftedPairing {
public:
    LiftedPairing(CoalgebraPtr C, LocalPairing th);
    Scalar operator()(int a, int b) const;
    const LocalPairing& base() const { return th_; }
    const Coalgebra& coalgebra() const { return *C_; }
    CoalgebraPtr coalgebra_ptr() const { return C_; }
    int n() const { return th_.n; }

private:
    CoalgebraPtr C_;
    LocalPairing th_;
    // generator -> (simplex, sign), sign 0 for generators pairing to zero
    std::pair<int, int> reduce(int g) const;
};

}  // namespace strtop
