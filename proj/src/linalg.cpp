#include "strtop/linalg.hpp"

#include <stdexcept>

namespace strtop {

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.columns[i].push_back({i, Scalar(1)});
    return m;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix index");
    auto& col = columns[c];
    auto it = col.begin();
    while (it != col.end() && it->first < r) ++it;
    if (it != col.end() && it->first == r) {
        if (v.is_zero()) col.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        col.insert(it, {r, v});
    }
}

Scalar SparseMatrix::at(int r, int c) const {
    for (const auto& [i, v] : columns.at(c))
        if (i == r) return v;
    return Scalar(0);
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    SparseVec y;
    for (const auto& [j, v] : x) axpy(y, v, columns.at(j));
    return y;
}

SparseVec sparse_from_dense(const std::vector<Scalar>& v) {
    SparseVec s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!v[i].is_zero()) s.push_back({i, v[i]});
    return s;
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    auto i = y.begin();
    auto j = x.begin();
    while (i != y.end() || j != x.end()) {
        if (j == x.end() || (i != y.end() && i->first < j->first)) {
            out.push_back(std::move(*i));
            ++i;
        } else if (i == y.end() || j->first < i->first) {
            out.push_back({j->first, a * j->second});
            ++j;
        } else {
            Scalar s = i->second + a * j->second;
            if (!s.is_zero()) out.push_back({i->first, std::move(s)});
            ++i;
            ++j;
        }
    }
    y.swap(out);
}

Eliminator::Eliminator(int rows, const Ring& ring, bool track_combinations)
    : nrows_(rows), ring_(ring), track_(track_combinations), pivot_slot_(rows, -1) {
    if (!ring.is_field()) throw NonFieldCoefficients();
}

bool Eliminator::add_column(const SparseVec& col) {
    SparseVec v;
    v.reserve(col.size());
    for (const auto& [r, c] : col) {
        Scalar x = c.in(ring_);
        if (!x.is_zero()) v.push_back({r, x});
    }
    SparseVec combo;
    if (track_) combo.push_back({ncols_, Scalar(ring_, 1)});
    ++ncols_;
    while (!v.empty()) {
        int lead = v.front().first;
        if (lead < 0 || lead >= nrows_) throw std::out_of_range("row index");
        int slot = pivot_slot_[lead];
        if (slot < 0) {
            // normalize so the pivot entry is 1
            Scalar inv = v.front().second.inverse();
            for (auto& e : v) e.second *= inv;
            if (track_)
                for (auto& e : combo) e.second *= inv;
            pivot_slot_[lead] = static_cast<int>(reduced_.size());
            reduced_.push_back(std::move(v));
            if (track_) combo_.push_back(std::move(combo));
            ++pivots_;
            return true;
        }
        Scalar f = -v.front().second;
        axpy(v, f, reduced_[slot]);
        if (track_) axpy(combo, f, combo_[slot]);
    }
    if (track_) kernel_.push_back(std::move(combo));
    return false;
}

std::optional<SparseVec> Eliminator::solve(const SparseVec& b) const {
    if (!track_) throw std::logic_error("solve needs combination tracking");
    SparseVec r;
    for (const auto& [i, c] : b) {
        Scalar x = c.in(ring_);
        if (!x.is_zero()) r.push_back({i, x});
    }
    SparseVec x;
    while (!r.empty()) {
        int lead = r.front().first;
        if (lead < 0 || lead >= nrows_) return std::nullopt;
        int slot = pivot_slot_[lead];
        if (slot < 0) return std::nullopt;
        Scalar f = r.front().second;
        axpy(r, -f, reduced_[slot]);
        axpy(x, f, combo_[slot]);
    }
    return x;
}

bool Eliminator::in_span(const SparseVec& b) const {
    SparseVec r;
    for (const auto& [i, c] : b) {
        Scalar x = c.in(ring_);
        if (!x.is_zero()) r.push_back({i, x});
    }
    while (!r.empty()) {
        int lead = r.front().first;
        if (lead < 0 || lead >= nrows_) return false;
        int slot = pivot_slot_[lead];
        if (slot < 0) return false;
        axpy(r, -r.front().second, reduced_[slot]);
    }
    return true;
}

std::optional<SparseVec> solve_linear(const SparseMatrix& A, const SparseVec& b, const Ring& ring) {
    Eliminator e(A.rows, ring);
    for (const auto& c : A.columns) e.add_column(c);
    auto x = e.solve(b);
    if (!x) return x;
    // never trust the elimination: re-multiply
    SparseVec check = A.apply(*x);
    SparseVec bb;
    for (const auto& [i, c] : b)
        if (!c.in(ring).is_zero()) bb.push_back({i, c.in(ring)});
    axpy(check, Scalar(-1), bb);
    if (!check.empty()) throw std::logic_error("solve_linear: verification failed");
    return x;
}

RankKernel rank_and_kernel(const SparseMatrix& A, const Ring& ring) {
    Eliminator e(A.rows, ring);
    for (const auto& c : A.columns) e.add_column(c);
    RankKernel out;
    out.rank = e.rank();
    out.kernel = e.kernel();
    return out;
}

}  // namespace strtop
