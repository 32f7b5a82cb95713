#include "strtop/fineness.hpp"

#include <algorithm>
#include <functional>

namespace strtop {

namespace {

bool is_flag(const SimplicialComplex& L) {
    // every clique of the 1-skeleton spans a simplex
    const int n = L.num_vertices();
    std::vector<std::set<int>> adj(n);
    for (int e : L.of_dim(1)) {
        adj[L.vertices(e)[0]].insert(L.vertices(e)[1]);
        adj[L.vertices(e)[1]].insert(L.vertices(e)[0]);
    }
    std::vector<int> cur;
    bool ok = true;
    std::function<void(int)> grow = [&](int last) {
        if (!ok) return;
        if (cur.size() >= 3 && L.find(cur) < 0) {
            ok = false;
            return;
        }
        if (static_cast<int>(cur.size()) > L.dim() + 1) return;
        for (int y : adj[last]) {
            if (y <= last) continue;
            bool all = true;
            for (int x : cur)
                if (!adj[x].count(y)) all = false;
            if (!all) continue;
            cur.push_back(y);
            grow(y);
            cur.pop_back();
        }
    };
    for (int v = 0; v < n && ok; ++v) {
        cur = {v};
        grow(v);
    }
    return ok;
}

}  // namespace

FinenessCertificate::FinenessCertificate(ComplexPtr K, int m) : K_(std::move(K)), m_(m) {
    if (m < 1) throw std::invalid_argument("fineness parameter must be positive");
    const SimplicialComplex& Kr = *K_;
    const bool deep = Kr.subdivision && Kr.subdivision->layer;
    L_ = deep ? Kr.subdivision->layer : K_;
    carrier_.resize(Kr.num_simplices());
    for (int s = 0; s < Kr.num_simplices(); ++s) {
        if (!deep) {
            carrier_[s] = s;
            continue;
        }
        std::set<int> u;
        for (int v : Kr.vertices(s))
            for (int w : L_->vertices(Kr.subdivision->vertex_carrier[v])) u.insert(w);
        int c = L_->find(std::vector<int>(u.begin(), u.end()));
        if (c < 0) throw std::logic_error("carrier is not a simplex of the layer");
        carrier_[s] = c;
    }
    flag_layer_ = is_flag(*L_);
}

bool FinenessCertificate::in_star(int F, int u) const {
    std::vector<int> vs = L_->vertices(F);
    if (std::find(vs.begin(), vs.end(), u) != vs.end()) return true;
    vs.insert(std::upper_bound(vs.begin(), vs.end(), u), u);
    return L_->find(vs) >= 0;
}

std::vector<int> FinenessCertificate::star_vertices(const std::vector<int>& simplices) const {
    std::set<int> carriers;
    for (int s : simplices) carriers.insert(carrier_[s]);
    std::vector<int> V;
    for (int u = 0; u < L_->num_vertices(); ++u) {
        bool all = true;
        for (int F : carriers)
            if (!in_star(F, u)) {
                all = false;
                break;
            }
        if (all) V.push_back(u);
    }
    return V;
}

const FinenessCertificate::Assignment& FinenessCertificate::assignment(const std::vector<int>& V,
                                                                       const std::vector<int>& A) const {
    auto it = cache_.find(V);
    if (it != cache_.end()) return it->second;
    if (V.empty()) throw NotFine("subcomplex of diameter <= " + std::to_string(m_) + " lies in no star of the layer", A);
    Assignment a;
    a.star_of = V;
    for (int F = 0; F < L_->num_simplices(); ++F) {
        bool all = true;
        for (int u : V)
            if (!in_star(F, u)) {
                all = false;
                break;
            }
        if (all) a.layer_part.insert(F);
    }
    // cone witness: a vertex c with F ∪ c in the layer part for every F
    std::vector<int> cands = V;
    for (int F : a.layer_part)
        if (L_->dim(F) == 0 && !std::binary_search(V.begin(), V.end(), L_->vertices(F)[0])) cands.push_back(L_->vertices(F)[0]);
    for (int c : cands) {
        bool cone = true;
        for (int F : a.layer_part) {
            std::vector<int> vs = L_->vertices(F);
            if (!std::binary_search(vs.begin(), vs.end(), c)) vs.insert(std::upper_bound(vs.begin(), vs.end(), c), c);
            int G = L_->find(vs);
            if (G < 0 || !a.layer_part.count(G)) {
                cone = false;
                break;
            }
        }
        if (cone) {
            a.apex = c;
            break;
        }
    }
    if (a.apex < 0) throw NotFine("star intersection is not a cone", A);
    std::set<int> zs;
    for (int s = 0; s < K_->num_simplices(); ++s)
        if (a.layer_part.count(carrier_[s])) zs.insert(s);
    a.Z = Subcomplex(K_.get(), zs);
    return cache_.emplace(V, std::move(a)).first->second;
}

const FinenessCertificate::Assignment& FinenessCertificate::Z(const Subcomplex& A) const {
    if (A.empty()) throw std::invalid_argument("fineness: empty subcomplex");
    if (diameter(*K_, A) > m_) throw std::invalid_argument("fineness: subcomplex has diameter above m");
    std::vector<int> simp(A.simplices().begin(), A.simplices().end());
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<int> V = star_vertices(simp);
    const Assignment& a = assignment(V, simp);
    queries_.push_back({simp, V});
    return a;
}

const FinenessCertificate::Assignment& FinenessCertificate::Z_of_vertices(const std::vector<int>& vs) const {
    std::set<int> all;
    for (int s = 0; s < K_->num_simplices(); ++s) {
        const auto& sv = K_->vertices(s);
        if (std::all_of(sv.begin(), sv.end(), [&](int v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }))
            all.insert(s);
    }
    return Z(Subcomplex(K_.get(), all));
}

FinenessCertificate::Report FinenessCertificate::verify_queried() const {
    std::lock_guard<std::mutex> lock(mu_);
    Report r;
    for (const auto& [a, va] : queries_)
        for (const auto& [b, vb] : queries_) {
            if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
            ++r.monotone_pairs;
            if (!cache_.at(vb).Z.contains(cache_.at(va).Z)) {
                r.ok = false;
                r.failure = "monotonicity fails";
                r.witness = b;
                return r;
            }
        }
    r.subcomplexes = static_cast<long>(queries_.size());
    r.distinct_stars = static_cast<long>(cache_.size());
    return r;
}

FinenessCertificate::Report FinenessCertificate::verify_exhaustive(long limit) const {
    Report r;
    const SimplicialComplex& K = *K_;
    if (K.num_simplices() > limit) {
        r.failure = "complex exceeds the exhaustive size limit";
        return r;
    }
    r.exhaustive = true;
    std::lock_guard<std::mutex> lock(mu_);
    std::set<std::vector<int>> stars;
    auto fail = [&](const NotFine& e) {
        r.ok = false;
        r.failure = e.what();
        r.witness = e.witness;
    };
    try {
        if (K.num_simplices() <= 16) {
            // every subcomplex, directly
            std::vector<char> in(K.num_simplices(), 0);
            std::function<void(int)> rec = [&](int s) {
                if (!r.ok) return;
                if (s == K.num_simplices()) {
                    std::vector<int> A;
                    for (int i = 0; i < K.num_simplices(); ++i)
                        if (in[i]) A.push_back(i);
                    if (A.empty()) return;
                    if (diameter(K, Subcomplex(&K, {A.begin(), A.end()})) > m_) return;
                    ++r.subcomplexes;
                    auto V = star_vertices(A);
                    const Assignment& a = assignment(V, A);
                    for (int x : A)
                        if (!a.Z.contains(x)) throw NotFine("subcomplex not contained in its star", A);
                    stars.insert(V);
                    return;
                }
                rec(s + 1);
                bool faces_in = true;
                if (K.dim(s) >= 1)
                    for (int f : K.faces(s))
                        if (!in[f]) faces_in = false;
                if (faces_in) {
                    in[s] = 1;
                    rec(s + 1);
                    in[s] = 0;
                }
            };
            rec(0);
        } else {
            if (!flag_layer_) {
                r.ok = false;
                r.failure = "exhaustive mode needs a flag layer";
                return r;
            }
            // In a flag layer, A ⊂ St(u) iff every vertex of A is, so V_A and
            // diam(A) only depend on the vertex set: it suffices to run over
            // vertex sets of pairwise distance <= m. Stars of subsets are the
            // intersections of the per-vertex stars.
            const int n = K.num_vertices();
            std::vector<std::vector<int>> Vx(n);
            for (int x = 0; x < n; ++x) Vx[x] = star_vertices({x});
            std::vector<std::vector<int>> nb(n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (x != y && K.distance(x, y) >= 0 && K.distance(x, y) <= m_) nb[x].push_back(y);
            auto meet = [](const std::vector<int>& a, const std::vector<int>& b) {
                std::vector<int> c;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
                return c;
            };
            // Bron–Kerbosch with pivoting over maximal vertex cliques
            std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
                [&](std::vector<int>& R, std::vector<int> P, std::vector<int> X) {
                    if (!r.ok) return;
                    if (P.empty() && X.empty()) {
                        ++r.subcomplexes;
                        std::set<std::vector<int>> sub;
                        for (int x : R) {
                            std::set<std::vector<int>> next = sub;
                            next.insert(Vx[x]);
                            for (const auto& s : sub) next.insert(meet(s, Vx[x]));
                            sub.swap(next);
                        }
                        std::vector<int> full = Vx[R[0]];
                        for (int x : R) full = meet(full, Vx[x]);
                        std::vector<int> wit;
                        for (int x : R) wit.push_back(x);
                        if (full.empty()) throw NotFine("vertex set of diameter <= " + std::to_string(m_) + " lies in no star", wit);
                        stars.insert(sub.begin(), sub.end());
                        return;
                    }
                    int pivot = !P.empty() ? P[0] : X[0];
                    std::vector<int> PU = P;
                    PU.insert(PU.end(), X.begin(), X.end());
                    std::size_t best = 0;
                    for (int u : PU) {
                        std::size_t c = 0;
                        for (int v : P)
                            if (std::binary_search(nb[u].begin(), nb[u].end(), v)) ++c;
                        if (c >= best) {
                            best = c;
                            pivot = u;
                        }
                    }
                    std::vector<int> cand;
                    for (int v : P)
                        if (!std::binary_search(nb[pivot].begin(), nb[pivot].end(), v)) cand.push_back(v);
                    for (int v : cand) {
                        std::vector<int> P2, X2;
                        for (int w : P)
                            if (std::binary_search(nb[v].begin(), nb[v].end(), w)) P2.push_back(w);
                        for (int w : X)
                            if (std::binary_search(nb[v].begin(), nb[v].end(), w)) X2.push_back(w);
                        R.push_back(v);
                        bk(R, P2, X2);
                        R.pop_back();
                        P.erase(std::find(P.begin(), P.end(), v));
                        X.insert(std::upper_bound(X.begin(), X.end(), v), v);
                    }
                };
            std::vector<int> R, P(n), X;
            for (int i = 0; i < n; ++i) P[i] = i;
            bk(R, P, X);
            // the star of every sub-vertex-set is a cone containing it
            for (const auto& V : stars) {
                const Assignment& a = assignment(V, {});
                for (int x = 0; x < n; ++x)
                    if (std::includes(Vx[x].begin(), Vx[x].end(), V.begin(), V.end()) && !a.Z.contains(x))
                        throw NotFine("vertex outside its star", {x});
            }
        }
        r.distinct_stars = static_cast<long>(stars.size());
        // monotonicity: V ⊇ V' means the second is reached from a larger subcomplex
        for (const auto& V : stars)
            for (const auto& W : stars) {
                if (&V == &W || !std::includes(V.begin(), V.end(), W.begin(), W.end())) continue;
                ++r.monotone_pairs;
                if (!cache_.at(W).Z.contains(cache_.at(V).Z)) {
                    r.ok = false;
                    r.failure = "monotonicity fails";
                    r.witness = W;
                    return r;
                }
            }
    } catch (const NotFine& e) {
        fail(e);
    }
    return r;
}

}  // namespace strtop
