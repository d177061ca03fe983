#pragma once

#include "hf/poly.hpp"

#include <vector>

namespace hf {

/// Dense square matrix of polynomials, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * size) {}

    int size() const { return size_; }
    Poly& operator()(int i, int j) { return entries_[index(i, j)]; }
    const Poly& operator()(int i, int j) const { return entries_[index(i, j)]; }

    /// The matrix with row `row` and column `col` removed.
    PolyMatrix minor(int row, int col) const;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * size_ + j; }

    int size_ = 0;
    std::vector<Poly> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination over Q[x].
///
/// Every division is exact by Sylvester's identity; a remainder would raise
/// ExactDivisionError. A zero pivot is replaced by a row swap (sign tracked);
/// a column that is zero from the pivot down makes the determinant zero.
/// The empty matrix has determinant 1.
Poly bareiss_determinant(PolyMatrix m);

}  // namespace hf
