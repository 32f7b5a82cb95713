#pragma once

#include <memory>
#include <string>
#include <vector>

#include "strtop/complex.hpp"

namespace strtop {

enum class GenKind : std::uint8_t { Simplex, InvX, InvY };

struct GenInfo {
    GenKind kind;
    int base;    // simplex id (Simplex) or edge id (InvX / InvY)
    int level;   // dimension for Simplex, k for inverted generators
    int source;  // vertex
    int target;  // vertex
    int degree() const { return level; }
};

// structure-map terms; all structure constants are ±1
struct Term1 {
    int c;
    int g;
};
struct Term2 {
    int c;
    int a;
    int b;
};

// The categorical coalgebra C(X) of normalized chains on the ordered simplicial
// set of a complex, optionally with every edge inverted (C(X̃)).
//
// Generator ids: the simplices of X keep their simplex ids (so vertex v is
// generator v); inverted generators follow, ordered by (level, edge, flavor).
// On the inverted generators the basis is the alternating J-simplices, except
// that y^k (k >= 2) is the negative of (1010...). With this normalization the
// Alexander-Whitney coproduct reproduces the displayed formulas for σ̌, x^k and
// y^2 and the x^2 / y^2 cobar identities, while staying coassociative.
class Coalgebra {
public:
    Coalgebra(ComplexPtr X, bool inverted, int max_level);

    const SimplicialComplex& complex() const { return *X_; }
    ComplexPtr complex_ptr() const { return X_; }
    bool inverted() const { return inverted_; }
    int max_level() const { return max_level_; }
    int num_gens() const { return static_cast<int>(info_.size()); }
    const GenInfo& info(int g) const { return info_.at(g); }
    int degree(int g) const { return info_[g].level; }
    int source(int g) const { return info_[g].source; }
    int target(int g) const { return info_[g].target; }
    bool is_vertex(int g) const { return info_[g].kind == GenKind::Simplex && info_[g].level == 0; }
    // simplex of X on which g is supported
    int base_simplex(int g) const { return info_[g].base; }

    int vertex_gen(int v) const { return v; }
    int simplex_gen(int s) const { return s; }
    // flavor 'x' or 'y'; x^1 is the edge itself, y^1 is σ̌
    int inverted_gen(int edge, char flavor, int k) const;
    int check(int edge) const { return inverted_gen(edge, 'y', 1); }

    const std::vector<Term2>& coproduct(int g) const { return delta_[g]; }
    const std::vector<Term1>& differential(int g) const { return d_[g]; }
    // ordinary simplicial boundary (all faces)
    const std::vector<Term1>& boundary(int g) const { return bd_[g]; }
    int eta(int g) const { return eta_[g]; }
    int counit(int g) const { return is_vertex(g) ? 1 : 0; }
    int weight(int g) const { return degree(g) == 1 ? 1 : 0; }

    // generators of degree d with source v (d >= 1)
    const std::vector<int>& letters_from(int v, int d) const;
    std::vector<int> gens_of_degree(int d) const;
    int max_degree() const { return max_deg_; }

    std::string describe(int g) const;

    // curvature value the structure maps are built from, for reference checks:
    // the literal (e⊗e)Δ + e∘δ with the Koszul sign on e⊗e
    int eta_literal(int g) const;

private:
    ComplexPtr X_;
    bool inverted_;
    int max_level_;
    int max_deg_ = 0;
    int first_inverted_ = 0;
    int num_edges_ = 0;
    std::vector<GenInfo> info_;
    std::vector<std::vector<Term2>> delta_;
    std::vector<std::vector<Term1>> d_;
    std::vector<std::vector<Term1>> bd_;
    std::vector<int> eta_;
    std::vector<std::vector<std::vector<int>>> out_;  // [v][d]
    std::vector<int> edge_index_;                     // simplex id -> index among edges

    int alt_gen(int edge_idx, int startbit, int level) const;
    int scale(int g) const;
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;
CoalgebraPtr chains_coalgebra(ComplexPtr X, int max_level = 0);
CoalgebraPtr invert_edges(ComplexPtr X, int max_level);

struct CoalgebraReport {
    long checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
CoalgebraReport verify_curvature(const Coalgebra& C, int degree_bound);
CoalgebraReport verify_coassociativity(const Coalgebra& C, int degree_bound);
CoalgebraReport verify_counit(const Coalgebra& C, int degree_bound);
CoalgebraReport verify_eta_d(const Coalgebra& C, int degree_bound);

}  // namespace strtop
