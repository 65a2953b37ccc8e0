#pragma once

// Determinant and rank kernels shared by every exact scalar type in the
// library (Rational, CycloElement, MultiPolynomial). Matrices are passed as
// row-major vectors; the scalar type only needs +, -, * and a free
// `is_zero`. The field kernels also need a free `inverse`.

#include <cstddef>
#include <utility>
#include <vector>

#include "cyclogab/error.hpp"
#include "cyclogab/rational.hpp"

namespace cyclogab::elim {

/// Laplace expansion along the first row. Division-free, so it also works
/// over polynomial rings. `one` fixes the scalar's context for n = 0.
template <class T>
T det_cofactor(const std::vector<T>& a, std::size_t n, const T& one) {
  if (a.size() != n * n) throw DomainError("det_cofactor: entry count does not match n*n");
  if (n == 0) return one;
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  T zero = one;
  zero -= one;
  T total = zero;
  std::vector<T> minor;
  minor.reserve((n - 1) * (n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    if (is_zero(a[col])) continue;
    minor.clear();
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) minor.push_back(a[r * n + c]);
      }
    }
    T term = a[col] * det_cofactor(minor, n - 1, one);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Fraction-free (Bareiss) elimination. Each division by the previous pivot
/// is exact, so intermediate entries stay minors of the input.
template <class T>
T det_bareiss(std::vector<T> a, std::size_t n, const T& one) {
  if (a.size() != n * n) throw DomainError("det_bareiss: entry count does not match n*n");
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k * n + k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(a[swap_row * n + k])) ++swap_row;
      if (swap_row == n) {
        T zero = one;
        zero -= one;
        return zero;
      }
      for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
      negate = !negate;
    }
    const T& pivot = a[k * n + k];
    const T prev_inv = inverse(prev);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = pivot * a[i * n + j];
        v -= a[i * n + k] * a[k * n + j];
        a[i * n + j] = v * prev_inv;
      }
    }
    prev = a[k * n + k];
  }
  T result = std::move(a[n * n - 1]);
  if (negate) result = -result;
  return result;
}

/// Rank by Gaussian elimination with exact pivot-zero tests.
template <class T>
std::size_t rank(std::vector<T> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw DomainError("rank: entry count does not match rows*cols");
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = r;
    while (pivot_row < rows && is_zero(a[pivot_row * cols + c])) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[r * cols + j], a[pivot_row * cols + j]);
    }
    const T inv = inverse(a[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(a[i * cols + c])) continue;
      const T factor = a[i * cols + c] * inv;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= factor * a[r * cols + j];
    }
    ++r;
  }
  return r;
}

}  // namespace cyclogab::elim
