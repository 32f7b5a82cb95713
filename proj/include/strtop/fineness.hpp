#pragma once

#include <map>
#include <mutex>
#include <set>

#include "strtop/complex.hpp"

namespace strtop {

struct NotFine : std::runtime_error {
    std::vector<int> witness;  // simplices of the offending subcomplex
    NotFine(const std::string& what, std::vector<int> w) : std::runtime_error(what), witness(std::move(w)) {}
};

// Stars of the first barycentric layer. For a subcomplex A of K = K^(k) let
// V_A be the layer vertices u with A ⊂ St(u); Z_A is the part of K carried by
// the intersection of the stars St(u), u ∈ V_A (the smallest star containing
// A when V_A spans a simplex). A ⊂ B gives V_B ⊂ V_A, hence Z_A ⊂ Z_B.
// An unsubdivided complex is its own layer.
class FinenessCertificate {
public:
    FinenessCertificate(ComplexPtr K, int m);

    struct Assignment {
        std::vector<int> star_of;  // V_A, layer vertex ids
        std::set<int> layer_part;  // layer simplices of the intersection of stars
        Subcomplex Z;
        int apex = -1;  // layer vertex over which the layer part is a cone
    };

    int m() const { return m_; }
    const SimplicialComplex& complex() const { return *K_; }
    const SimplicialComplex& layer() const { return *L_; }
    int carrier(int s) const { return carrier_.at(s); }

    // throws NotFine if A has diameter <= m but lies in no star, or the star
    // intersection is not a cone
    const Assignment& Z(const Subcomplex& A) const;
    // for the vertex set of a subcomplex (valid because the layer is flag)
    const Assignment& Z_of_vertices(const std::vector<int>& vertices) const;

    struct Report {
        bool ok = true;
        bool exhaustive = false;
        long subcomplexes = 0;      // vertex cliques / subcomplexes examined
        long distinct_stars = 0;    // distinct V_A encountered
        long monotone_pairs = 0;    // Z_A ⊂ Z_B checks performed
        std::string failure;
        std::vector<int> witness;
    };
    // every subcomplex of diameter <= m, if K has at most limit simplices
    Report verify_exhaustive(long limit = 10000) const;
    // monotonicity on all pairs of subcomplexes queried so far
    Report verify_queried() const;

private:
    ComplexPtr K_;
    ComplexPtr L_;
    int m_;
    bool flag_layer_ = false;
    std::vector<int> carrier_;  // K simplex -> layer simplex
    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, Assignment> cache_;  // keyed by V_A
    mutable std::vector<std::pair<std::vector<int>, std::vector<int>>> queries_;  // (A simplices, V_A)

    bool in_star(int layer_simplex, int u) const;
    std::vector<int> star_vertices(const std::vector<int>& simplices) const;
    const Assignment& assignment(const std::vector<int>& V, const std::vector<int>& A) const;
};

}  // namespace strtop
