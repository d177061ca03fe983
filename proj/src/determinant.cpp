#include "hf/determinant.hpp"

#include <utility>

namespace hf {

PolyMatrix PolyMatrix::minor(int row, int col) const {
    PolyMatrix out(size_ - 1);
    for (int i = 0, oi = 0; i < size_; ++i) {
        if (i == row) continue;
        for (int j = 0, oj = 0; j < size_; ++j) {
            if (j == col) continue;
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

Poly bareiss_determinant(PolyMatrix m) {
    const int n = m.size();
    if (n == 0) return Poly(1);
    int sign = 1;
    Poly previous(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!m(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return Poly();
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        const Poly& pivot = m(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly v = pivot * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = divide_exact(v, previous);
            }
            m(i, k) = Poly();
        }
        previous = pivot;
    }
    Poly det = std::move(m(n - 1, n - 1));
    return sign < 0 ? -det : det;
}

}  // namespace hf
