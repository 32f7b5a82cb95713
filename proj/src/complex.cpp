#include "strtop/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace strtop {

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> names,
                                                    const std::vector<std::vector<int>>& simplices) {
    SimplicialComplex K;
    K.names_ = std::move(names);
    const int n = static_cast<int>(K.names_.size());
    std::set<std::vector<int>> all;
    for (int v = 0; v < n; ++v) all.insert({v});
    for (auto s : simplices) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("repeated vertex in simplex");
        if (s.empty()) continue;
        for (int v : s)
            if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
        if (all.count(s)) continue;
        // all nonempty subsets
        const int k = static_cast<int>(s.size());
        if (k > 20) throw std::invalid_argument("simplex too large");
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> f;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            all.insert(std::move(f));
        }
    }
    std::vector<std::vector<int>> sorted(all.begin(), all.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    K.verts_ = std::move(sorted);
    K.build();
    return K;
}

void SimplicialComplex::build() {
    index_.clear();
    max_dim_ = -1;
    for (int i = 0; i < num_simplices(); ++i) {
        index_[verts_[i]] = i;
        max_dim_ = std::max(max_dim_, dim(i));
    }
    by_dim_.assign(std::max(max_dim_ + 1, 1), {});
    faces_.assign(num_simplices(), {});
    cofaces_.assign(num_simplices(), {});
    adj_.assign(num_vertices(), {});
    for (int i = 0; i < num_simplices(); ++i) {
        by_dim_[dim(i)].push_back(i);
        if (dim(i) >= 1) {
            for (int j = 0; j <= dim(i); ++j) {
                std::vector<int> f = verts_[i];
                f.erase(f.begin() + j);
                int fid = index_.at(f);
                faces_[i].push_back(fid);
                cofaces_[fid].push_back(i);
            }
        }
        if (dim(i) == 1) {
            adj_[verts_[i][0]].push_back(verts_[i][1]);
            adj_[verts_[i][1]].push_back(verts_[i][0]);
        }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    dist_cache_.assign(num_vertices(), {});
}

int SimplicialComplex::find(const std::vector<int>& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

int SimplicialComplex::edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return find({a, b});
}

const std::vector<int>& SimplicialComplex::of_dim(int d) const {
    static const std::vector<int> empty;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[d];
}

std::vector<int> SimplicialComplex::maximal_simplices() const {
    std::vector<int> out;
    for (int i = 0; i < num_simplices(); ++i)
        if (cofaces_[i].empty()) out.push_back(i);
    return out;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int i = 0; i < num_simplices(); ++i) chi += (dim(i) % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<int> SimplicialComplex::counts_by_dim() const {
    std::vector<int> c;
    for (const auto& d : by_dim_) c.push_back(static_cast<int>(d.size()));
    return c;
}

bool SimplicialComplex::is_face(int a, int b) const {
    const auto& va = verts_.at(a);
    const auto& vb = verts_.at(b);
    return std::includes(vb.begin(), vb.end(), va.begin(), va.end());
}

int SimplicialComplex::incidence(int a, int b) const {
    if (dim(b) != dim(a) + 1 || dim(b) < 1) return 0;
    const auto& f = faces_[b];
    for (int i = 0; i < static_cast<int>(f.size()); ++i)
        if (f[i] == a) return (i % 2 == 0) ? 1 : -1;
    return 0;
}

Chain<int> SimplicialComplex::boundary(int s) const {
    Chain<int> c;
    if (dim(s) == 0) return c;
    const auto& f = faces_[s];
    for (int i = 0; i < static_cast<int>(f.size()); ++i) c.add(f[i], Scalar((i % 2 == 0) ? 1 : -1));
    return c;
}

Chain<int> SimplicialComplex::boundary(const Chain<int>& c) const {
    Chain<int> out;
    for (const auto& [s, v] : c) out.add(boundary(s), v);
    return out;
}

int SimplicialComplex::distance(int v, int w) const {
    if (v == w) return 0;
    auto& row = dist_cache_.at(v);
    if (row.empty()) {
        row.assign(num_vertices(), -1);
        std::deque<int> q{v};
        row[v] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : adj_[x])
                if (row[y] < 0) {
                    row[y] = row[x] + 1;
                    q.push_back(y);
                }
        }
    }
    return row.at(w);
}

bool SimplicialComplex::connected() const {
    for (int v = 1; v < num_vertices(); ++v)
        if (distance(0, v) < 0) return false;
    return true;
}

std::string SimplicialComplex::describe_simplex(int s) const {
    std::ostringstream os;
    os << "(";
    const auto& v = verts_.at(s);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << names_[v[i]];
    os << ")";
    return os.str();
}

SimplicialComplex reorder_vertices(const SimplicialComplex& K, const std::vector<int>& order) {
    const int n = K.num_vertices();
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("vertex order has wrong size");
    std::vector<int> pos(n, -1);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) throw std::invalid_argument("not a permutation");
        pos[order[i]] = i;
        names[i] = K.vertex_name(order[i]);
    }
    std::vector<std::vector<int>> simp;
    for (int s : K.maximal_simplices()) {
        std::vector<int> t;
        for (int v : K.vertices(s)) t.push_back(pos[v]);
        simp.push_back(t);
    }
    return SimplicialComplex::from_simplices(names, simp);
}

SimplicialComplex barycentric_subdivide_once(const ComplexPtr& Kp) {
    const SimplicialComplex& K = *Kp;
    std::vector<std::string> names;
    for (int s = 0; s < K.num_simplices(); ++s)
        names.push_back(K.dim(s) == 0 ? K.vertex_name(K.vertices(s)[0]) : "b" + K.describe_simplex(s));
    // maximal chains: start at each vertex ... walk up cofaces to maximal simplices
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    std::function<void(int)> walk = [&](int s) {
        cur.push_back(s);
        if (K.cofaces(s).empty()) chains.push_back(cur);
        for (int t : K.cofaces(s)) walk(t);
        cur.pop_back();
    };
    for (int v : K.of_dim(0)) walk(v);
    SimplicialComplex Ks = SimplicialComplex::from_simplices(names, chains);

    SubdivisionInfo info;
    info.parent = Kp;
    info.vertex_origin.resize(Ks.num_vertices());
    for (int v = 0; v < Ks.num_vertices(); ++v) info.vertex_origin[v] = v;
    if (K.subdivision) {
        const auto& pk = *K.subdivision;
        info.depth = pk.depth + 1;
        info.base = pk.base;
        info.layer = pk.layer ? pk.layer : Kp;
        const SimplicialComplex& L = *info.layer;
        info.vertex_carrier.resize(Ks.num_vertices());
        for (int v = 0; v < Ks.num_vertices(); ++v) {
            std::set<int> u;
            for (int y : K.vertices(v)) {
                int c = pk.layer ? pk.vertex_carrier[y] : y;
                for (int w : L.vertices(c)) u.insert(w);
            }
            int c = L.find(std::vector<int>(u.begin(), u.end()));
            if (c < 0) throw std::logic_error("carrier not a simplex of the layer");
            info.vertex_carrier[v] = c;
        }
    } else {
        info.depth = 1;
        info.base = Kp;
        info.layer = nullptr;  // K' is its own layer
        info.vertex_carrier.resize(Ks.num_vertices());
        for (int v = 0; v < Ks.num_vertices(); ++v) info.vertex_carrier[v] = v;
    }
    Ks.subdivision = info;
    return Ks;
}

SimplicialComplex barycentric_subdivide(const ComplexPtr& K, int k) {
    if (k < 1) throw std::invalid_argument("subdivision count must be >= 1");
    ComplexPtr cur = K;
    for (int i = 0; i < k; ++i) cur = std::make_shared<const SimplicialComplex>(barycentric_subdivide_once(cur));
    return *cur;
}

Subcomplex::Subcomplex(const SimplicialComplex* K, std::set<int> simplices) : K_(K) {
    std::vector<int> stack(simplices.begin(), simplices.end());
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        if (!simplices_.insert(s).second) continue;
        if (K_->dim(s) >= 1)
            for (int f : K_->faces(s))
                if (!simplices_.count(f)) stack.push_back(f);
    }
}

Subcomplex Subcomplex::closure_of(const SimplicialComplex& K, const std::vector<int>& s) {
    return Subcomplex(&K, std::set<int>(s.begin(), s.end()));
}

Subcomplex Subcomplex::whole(const SimplicialComplex& K) {
    std::set<int> all;
    for (int i = 0; i < K.num_simplices(); ++i) all.insert(i);
    return Subcomplex(&K, all);
}

bool Subcomplex::contains(const Subcomplex& o) const {
    return std::includes(simplices_.begin(), simplices_.end(), o.simplices_.begin(), o.simplices_.end());
}

std::vector<int> Subcomplex::vertex_list() const {
    std::vector<int> v;
    for (int s : simplices_)
        if (K_->dim(s) == 0) v.push_back(K_->vertices(s)[0]);
    return v;
}

int vertex_set_diameter(const SimplicialComplex& K, const std::vector<int>& vs) {
    int d = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            int x = K.distance(vs[i], vs[j]);
            if (x < 0) throw DisconnectedSupport("vertices " + K.vertex_name(vs[i]) + " and " + K.vertex_name(vs[j]) + " are not linked");
            d = std::max(d, x);
        }
    return d;
}

int diameter(const SimplicialComplex& K, const Subcomplex& A, LinkScope scope) {
    if (A.empty()) throw std::invalid_argument("diameter of empty subcomplex");
    std::vector<int> vs = A.vertex_list();
    if (scope == LinkScope::Ambient) return vertex_set_diameter(K, vs);
    // intrinsic: linking sequences made of edges of A
    std::map<int, std::vector<int>> adj;
    for (int s : A.simplices())
        if (K.dim(s) == 1) {
            adj[K.vertices(s)[0]].push_back(K.vertices(s)[1]);
            adj[K.vertices(s)[1]].push_back(K.vertices(s)[0]);
        }
    int d = 0;
    for (int v : vs) {
        std::map<int, int> dist{{v, 0}};
        std::deque<int> q{v};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : adj[x])
                if (!dist.count(y)) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
        }
        for (int w : vs) {
            if (!dist.count(w)) throw DisconnectedSupport("subcomplex is disconnected");
            d = std::max(d, dist[w]);
        }
    }
    return d;
}

Subcomplex dual_cell(const SimplicialComplex& K, const SimplicialComplex& Kp, int s) {
    std::set<int> out;
    for (int t = 0; t < Kp.num_simplices(); ++t) {
        int first = Kp.vertices(t).front();  // smallest simplex of the chain
        if (K.is_face(s, first)) out.insert(t);
    }
    return Subcomplex(&Kp, out);
}

namespace bundled {

SimplicialComplex simplex(int n) {
    std::vector<std::string> names;
    std::vector<int> all;
    for (int i = 0; i <= n; ++i) {
        names.push_back("v" + std::to_string(i));
        all.push_back(i);
    }
    return SimplicialComplex::from_simplices(names, {all});
}

SimplicialComplex simplex_boundary(int n) {
    std::vector<std::string> names;
    std::vector<std::vector<int>> facets;
    for (int i = 0; i <= n; ++i) names.push_back("v" + std::to_string(i));
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> f;
        for (int i = 0; i <= n; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(f);
    }
    return SimplicialComplex::from_simplices(names, facets);
}

SimplicialComplex torus7() {
    std::vector<std::string> names;
    std::vector<std::vector<int>> tri;
    for (int i = 0; i < 7; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < 7; ++i) {
        tri.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tri.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_simplices(names, tri);
}

SimplicialComplex point() { return SimplicialComplex::from_simplices({"v0"}, {{0}}); }

std::vector<std::string> names() { return {"point", "simplex1", "simplex2", "simplex3", "boundary2", "boundary3", "torus7"}; }

SimplicialComplex by_name(const std::string& name) {
    if (name == "point") return point();
    if (name == "simplex1") return simplex(1);
    if (name == "simplex2") return simplex(2);
    if (name == "simplex3") return simplex(3);
    if (name == "boundary2") return simplex_boundary(2);
    if (name == "boundary3") return simplex_boundary(3);
    if (name == "torus7") return torus7();
    throw std::invalid_argument("unknown bundled complex '" + name + "'");
}

}  // namespace bundled

}  // namespace strtop
