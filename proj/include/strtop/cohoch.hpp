#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "strtop/cobar.hpp"
#include "strtop/fineness.hpp"
#include "strtop/linalg.hpp"

namespace strtop {

// Closed necklace: marked bead x0 followed by the word [x1|...|xN], cyclically
// composable. The word runs from t(x0) to s(x0).
struct Necklace {
    int marked = 0;
    std::vector<int> letters;

    auto operator<=>(const Necklace&) const = default;
    bool operator==(const Necklace&) const = default;
};

using CoHochElem = Chain<Necklace>;

Necklace make_necklace(const Coalgebra& C, int marked, std::vector<int> letters);
int necklace_degree(const Coalgebra& C, const Necklace& x);
Word necklace_word(const Coalgebra& C, const Necklace& x);
// the element (x0, a) for a cobar element a from t(x0) to s(x0)
CoHochElem attach(const Coalgebra& C, int marked, const CobarElem& a);

CoHochElem cohoch_d(const Coalgebra& C, const Necklace& x);
CoHochElem cohoch_d(const Coalgebra& C, const CoHochElem& x);

std::set<int> support_vertices(const Coalgebra& C, const Necklace& x);
std::set<int> support_vertices(const Coalgebra& C, const CoHochElem& x);
bool necklace_in(const Coalgebra& C, const Necklace& x, const Subcomplex& Z);
bool is_m_local(const Coalgebra& C, const Necklace& x, int m);
bool is_m_local(const Coalgebra& C, const CoHochElem& x, int m);

// necklaces of the given degree with word length <= max_len, supported in Z
std::vector<Necklace> enumerate_necklaces(const Coalgebra& C, int degree, int max_len, const Subcomplex* Z = nullptr);
// same, keeping only m-local ones
std::vector<Necklace> local_basis(const Coalgebra& C, int degree, int max_len, int m);

CoalgebraReport verify_cohoch_dsquare(const Coalgebra& C, int degree_bound, int word_bound);
CoalgebraReport verify_support_monotone(const Coalgebra& C, int degree_bound, int word_bound);

std::string describe(const Coalgebra& C, const Necklace& x);
std::string describe(const Coalgebra& C, const CoHochElem& x);

// ---- supported primitives ----------------------------------------------

struct RankStep {
    int word_bound = 0;
    int unknowns = 0;
    int equations = 0;
    int rank = 0;
    bool consistent = false;
};

struct SolverExhausted : std::runtime_error {
    int word_bound;
    std::vector<RankStep> ranks;  // one inconsistent system per bound tried, when known
    explicit SolverExhausted(const std::string& what, int L, std::vector<RankStep> r = {})
        : std::runtime_error(what), word_bound(L), ranks(std::move(r)) {}
};
struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Key>
struct PrimitiveResult {
    bool found = false;
    Chain<Key> y;
    std::vector<RankStep> ranks;
    int word_bound = 0;
};

struct SolverConfig {
    Ring ring = Ring::rationals();
    int start_len = 0;
    int max_len = 10;
    int step = 1;
};

// Solve d y = z with y a combination of candidates(L), escalating L. The output
// is re-verified against d before it is returned.
template <class Key, class Candidates, class Diff>
PrimitiveResult<Key> solve_primitive(const Chain<Key>& z, Candidates candidates, Diff d, const SolverConfig& cfg) {
    PrimitiveResult<Key> res;
    if (z.empty()) {
        res.found = true;
        return res;
    }
    for (int L = cfg.start_len;; L = std::min(L + cfg.step, cfg.max_len)) {
        std::vector<Key> cand = candidates(L);
        std::map<Key, int> row;
        for (const auto& [k, c] : z) row.emplace(k, 0);
        std::vector<Chain<Key>> images;
        images.reserve(cand.size());
        for (const Key& k : cand) {
            images.push_back(d(k));
            for (const auto& [r, c] : images.back()) row.emplace(r, 0);
        }
        int n = 0;
        for (auto& [k, i] : row) i = n++;
        Eliminator E(n, cfg.ring);
        for (const auto& im : images) {
            SparseVec col;
            for (const auto& [r, c] : im) col.push_back({row[r], c});
            E.add_column(col);
        }
        SparseVec b;
        for (const auto& [k, c] : z) b.push_back({row[k], c});
        auto x = E.solve(b);
        res.ranks.push_back({L, static_cast<int>(cand.size()), n, E.rank(), x.has_value()});
        if (x) {
            Chain<Key> y;
            for (const auto& [j, c] : *x) y.add(cand[j], c);
            Chain<Key> check;
            for (const auto& [k, c] : y) check.add(d(k), c);
            Chain<Key> zz;
            for (const auto& [k, c] : z) zz.add(k, c.in(cfg.ring));
            Chain<Key> cc;
            for (const auto& [k, c] : check) cc.add(k, c.in(cfg.ring));
            if (cc != zz) throw std::logic_error("primitive failed re-verification");
            res.found = true;
            res.y = std::move(y);
            res.word_bound = L;
            return res;
        }
        if (L >= cfg.max_len) break;
    }
    res.word_bound = cfg.max_len;
    return res;
}

PrimitiveResult<Necklace> supported_primitive(const Coalgebra& C, const CoHochElem& z, const Subcomplex& Z,
                                              const SolverConfig& cfg);
// as above; throws SolverExhausted carrying the rank of every system tried
CoHochElem require_primitive(const Coalgebra& C, const CoHochElem& z, const Subcomplex& Z, const SolverConfig& cfg);

// ---- constant loops -------------------------------------------------------

// ι : C_*(X) -> coCH(C(X̃)). Degrees 0 and 1 use the closed formulas; higher
// simplices are solved once on the standard simplex and transported.
class ConstantLoops {
public:
    explicit ConstantLoops(CoalgebraPtr C, SolverConfig cfg = {});
    CoHochElem operator()(int simplex) const;
    CoHochElem apply(const Chain<int>& c) const;
    const Coalgebra& coalgebra() const { return *C_; }
    // solver records for the standard simplices
    const std::map<int, std::vector<RankStep>>& solver_log() const { return log_; }

private:
    CoalgebraPtr C_;
    SolverConfig cfg_;
    mutable std::mutex mu_;
    mutable std::map<int, std::pair<CoalgebraPtr, CoHochElem>> standard_;  // by dimension
    mutable std::map<int, std::vector<RankStep>> log_;
    const std::pair<CoalgebraPtr, CoHochElem>& standard(int dim) const;
};

// g from 1-local chains onto Im(ι). g(v{...}) = ι(v); in degree 1 a marked
// edge τ goes to ι(τ), a marked τ̌ to −ι(τ) and a marked vertex to 0; above
// that g(z) = ι(c) with δc = c(∂z) solved among simplices of Z_{Supp z}.
class LocalRetraction {
public:
    LocalRetraction(const ConstantLoops& iota, const FinenessCertificate& cert, Ring ring = Ring::rationals());
    // the simplicial chain c with g(x) = ι(c)
    Chain<int> simplicial(const Necklace& x) const;
    Chain<int> simplicial(const CoHochElem& x) const;
    CoHochElem operator()(const Necklace& x) const;
    CoHochElem operator()(const CoHochElem& x) const;
    // generators among xs where ∂g ≠ g∂ or Supp g(x) ⊄ Z_{Supp x}
    std::vector<Necklace> verify(const std::vector<Necklace>& xs) const;

private:
    const ConstantLoops& iota_;
    const FinenessCertificate& cert_;
    Ring ring_;
    mutable std::mutex mu_;
    mutable std::map<Necklace, Chain<int>> memo_;
    const Subcomplex& zone(const Necklace& x) const;
};

// maps generators of C(Δ̃^j) into C(X̃) along the vertices of simplex s
int transport_gen(const Coalgebra& from, const Coalgebra& to, const std::vector<int>& vertex_map, int g);

}  // namespace strtop
