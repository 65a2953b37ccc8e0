#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclogab/cyclotomic.hpp"
#include "cyclogab/elimination.hpp"
#include "cyclogab/error.hpp"

namespace cyclogab {

/// Dense row-major matrix over Q(zeta_p).
class ExactMatrix {
 public:
  ExactMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, CycloElement(ctx_)) {}

  ExactMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols, std::vector<CycloElement> entries)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DomainError("matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                        std::to_string(entries_.size()) + " entries");
    }
    for (const auto& e : entries_) {
      if (!(*e.context() == *ctx_)) throw ContextMismatch("matrix entry from a different field");
    }
  }

  static ExactMatrix identity(const ContextPtr& ctx, std::size_t n) {
    ExactMatrix id(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = CycloElement::one(ctx);
    return id;
  }

  const ContextPtr& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<CycloElement>& entries() const { return entries_; }

  CycloElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const CycloElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Submatrix keeping the listed columns (0-based), in the given order.
  ExactMatrix select_columns(std::span<const std::size_t> cols) const {
    ExactMatrix out(ctx_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = at_checked(i, cols[j]);
    }
    return out;
  }

  /// Submatrix keeping the listed rows (0-based), in the given order.
  ExactMatrix select_rows(std::span<const std::size_t> rows) const {
    ExactMatrix out(ctx_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = at_checked(rows[i], j);
    }
    return out;
  }

  /// The leading `r` x `c` block.
  ExactMatrix leading_block(std::size_t r, std::size_t c) const {
    if (r > rows_ || c > cols_) throw DomainError("leading block larger than matrix");
    ExactMatrix out(ctx_, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i, j);
    }
    return out;
  }

  ExactMatrix transpose() const {
    ExactMatrix out(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    ExactMatrix out(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t t = 0; t < a.cols_; ++t) {
        const auto& lhs = a(i, t);
        if (lhs.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += lhs * b(t, j);
      }
    }
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.ctx_ == *b.ctx_ && a.entries_ == b.entries_;
  }

 private:
  const CycloElement& at_checked(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
    return (*this)(i, j);
  }

  ContextPtr ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycloElement> entries_;
};

/// Exact determinant: cofactor expansion up to 4x4, Bareiss elimination above.
inline CycloElement det(const ExactMatrix& m) {
  if (!m.is_square()) {
    throw DomainError("determinant of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                      " matrix");
  }
  const auto one = CycloElement::one(m.context());
  if (m.rows() <= 4) return elim::det_cofactor(m.entries(), m.rows(), one);
  return elim::det_bareiss(m.entries(), m.rows(), one);
}

inline std::size_t rank(const ExactMatrix& m) { return elim::rank(m.entries(), m.rows(), m.cols()); }

/// For a k x (k-1) matrix A returns (det[e_1 | A], ..., det[e_k | A]).
/// This is the first row of adj([0 | A]); its product with A vanishes.
inline std::vector<CycloElement> bordered_minor_row(const ExactMatrix& a) {
  const std::size_t k = a.rows();
  if (a.cols() + 1 != k) {
    throw DomainError("bordered_minor_row needs a k x (k-1) matrix, got " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()));
  }
  const auto one = CycloElement::one(a.context());
  std::vector<CycloElement> out;
  out.reserve(k);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < k; ++j) {
    keep.clear();
    for (std::size_t r = 0; r < k; ++r) {
      if (r != j) keep.push_back(r);
    }
    // Expanding det[e_j | A] along its first column.
    CycloElement minor = det(a.select_rows(keep));
    if (j % 2 == 1) minor = -minor;
    out.push_back(std::move(minor));
  }
  return out;
}

}  // namespace cyclogab
