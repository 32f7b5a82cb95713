#pragma once

#include <optional>
#include <vector>

#include "strtop/scalar.hpp"

namespace strtop {

// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, Scalar>>;

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> columns;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
    static SparseMatrix identity(int n);
    void set(int r, int c, const Scalar& v);
    Scalar at(int r, int c) const;
    SparseVec apply(const SparseVec& x) const;
};

SparseVec sparse_from_dense(const std::vector<Scalar>& v);
// y += a * x
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);

// Column-by-column Gaussian elimination over a field. The pivot of a column is
// its first nonzero row, columns are processed in index order, so the output is
// a deterministic function of the input.
class Eliminator {
public:
    Eliminator(int rows, const Ring& ring, bool track_combinations = true);

    // returns true if the column is independent of the previous ones
    bool add_column(const SparseVec& col);
    int rank() const { return static_cast<int>(pivots_); }
    int columns() const { return ncols_; }
    // combinations of original columns spanning the kernel
    const std::vector<SparseVec>& kernel() const { return kernel_; }
    // x with A x = b, if b lies in the column span
    std::optional<SparseVec> solve(const SparseVec& b) const;
    bool in_span(const SparseVec& b) const;

private:
    int nrows_;
    int ncols_ = 0;
    Ring ring_;
    bool track_;
    std::size_t pivots_ = 0;
    std::vector<int> pivot_slot_;      // row -> index into reduced_, or -1
    std::vector<SparseVec> reduced_;   // reduced pivot columns
    std::vector<SparseVec> combo_;     // reduced_[i] = A * combo_[i]
    std::vector<SparseVec> kernel_;
};

std::optional<SparseVec> solve_linear(const SparseMatrix& A, const SparseVec& b, const Ring& ring);

struct RankKernel {
    int rank = 0;
    std::vector<SparseVec> kernel;
};
RankKernel rank_and_kernel(const SparseMatrix& A, const Ring& ring);

}  // namespace strtop
