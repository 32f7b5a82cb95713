#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "strtop/chain.hpp"

namespace strtop {

struct DisconnectedSupport : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Subdivision bookkeeping: every vertex of K^(k) is the barycenter of a simplex
// of K^(k-1) ("origin"), and lies in the interior of a simplex of the first
// barycentric layer K^(1) ("carrier").
struct SubdivisionInfo {
    int depth = 0;
    ComplexPtr base;    // K
    ComplexPtr parent;  // K^(k-1)
    ComplexPtr layer;   // K^(1); null means "this complex is its own layer"
    std::vector<int> vertex_origin;   // simplex id in parent
    std::vector<int> vertex_carrier;  // simplex id in layer
};

// Simplices are sorted vertex lists; ids are ordered by (dimension, lex), so the
// simplex id of vertex v is v. Vertex order = id order, which fixes the
// orientation of every simplex (the ordered simplicial set).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    // closes the given simplices under faces; vertex ids are 0..names.size()-1
    static SimplicialComplex from_simplices(std::vector<std::string> names, const std::vector<std::vector<int>>& simplices);

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_simplices() const { return static_cast<int>(verts_.size()); }
    int dim() const { return max_dim_; }
    int dim(int s) const { return static_cast<int>(verts_.at(s).size()) - 1; }
    const std::vector<int>& vertices(int s) const { return verts_.at(s); }
    const std::string& vertex_name(int v) const { return names_.at(v); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    int find(const std::vector<int>& sorted_vertices) const;
    int edge(int a, int b) const;  // id of edge {a,b} or -1
    const std::vector<int>& of_dim(int d) const;
    // faces(s)[i] = delta_i(s) for dim(s) >= 1
    const std::vector<int>& faces(int s) const { return faces_.at(s); }
    const std::vector<int>& cofaces(int s) const { return cofaces_.at(s); }
    std::vector<int> maximal_simplices() const;
    long euler_characteristic() const;
    std::vector<int> counts_by_dim() const;
    bool is_face(int a, int b) const;  // a ⊆ b
    // coefficient of a in the standard boundary of b
    int incidence(int a, int b) const;
    Chain<int> boundary(int s) const;
    Chain<int> boundary(const Chain<int>& c) const;
    // vertices adjacent to v, sorted
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    // graph distance in the 1-skeleton, -1 if disconnected
    int distance(int v, int w) const;
    bool connected() const;

    std::optional<SubdivisionInfo> subdivision;

    std::string describe_simplex(int s) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> verts_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> by_dim_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::vector<int>> cofaces_;
    std::vector<std::vector<int>> adj_;
    int max_dim_ = -1;
    mutable std::vector<std::vector<int>> dist_cache_;
    void build();
};

// relabels vertices: vertex_order[i] is the old vertex that becomes vertex i
SimplicialComplex reorder_vertices(const SimplicialComplex& K, const std::vector<int>& vertex_order);

SimplicialComplex barycentric_subdivide(const ComplexPtr& K, int k = 1);
// one step, vertices of K' are simplices of K (same ids)
SimplicialComplex barycentric_subdivide_once(const ComplexPtr& K);

// closed subcomplex as a set of simplex ids
class Subcomplex {
public:
    Subcomplex() = default;
    Subcomplex(const SimplicialComplex* K, std::set<int> simplices);  // closes under faces
    static Subcomplex closure_of(const SimplicialComplex& K, const std::vector<int>& simplices);
    static Subcomplex whole(const SimplicialComplex& K);
    bool contains(int s) const { return simplices_.count(s) > 0; }
    bool contains(const Subcomplex& o) const;
    const std::set<int>& simplices() const { return simplices_; }
    std::vector<int> vertex_list() const;
    bool empty() const { return simplices_.empty(); }
    const SimplicialComplex* complex() const { return K_; }
    bool operator==(const Subcomplex& o) const { return simplices_ == o.simplices_; }

private:
    const SimplicialComplex* K_ = nullptr;
    std::set<int> simplices_;
};

enum class LinkScope { Ambient, Intrinsic };

// max over vertex pairs of the minimal length of a linking edge sequence
int diameter(const SimplicialComplex& K, const Subcomplex& A, LinkScope scope = LinkScope::Ambient);
int vertex_set_diameter(const SimplicialComplex& K, const std::vector<int>& vertices);

// dual cell of simplex s of K inside K' = barycentric_subdivide_once(K):
// the K'-simplices (chains s0 < ... < sk) with s <= s0
Subcomplex dual_cell(const SimplicialComplex& K, const SimplicialComplex& Kp, int s);

// Bundled complexes
namespace bundled {
SimplicialComplex simplex(int n);           // Δ^n
SimplicialComplex simplex_boundary(int n);  // ∂Δ^n
SimplicialComplex torus7();                 // 7-vertex torus
SimplicialComplex point();
// name in {"simplex1","simplex2","simplex3","boundary2","boundary3","torus7","point"}
SimplicialComplex by_name(const std::string& name);
std::vector<std::string> names();
}  // namespace bundled

}  // namespace strtop
