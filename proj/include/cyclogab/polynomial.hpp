#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cyclogab/error.hpp"
#include "cyclogab/rational.hpp"

namespace cyclogab {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored.
class MultiPolynomial {
 public:
  using Monomial = std::vector<std::uint32_t>;

  explicit MultiPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static MultiPolynomial constant(std::size_t num_vars, const Rational& c) {
    MultiPolynomial f(num_vars);
    f.add_term(Monomial(num_vars, 0), c);
    return f;
  }

  /// The polynomial c * x_var.
  static MultiPolynomial variable(std::size_t num_vars, std::size_t var, const Rational& c = 1) {
    if (var >= num_vars) throw DomainError("variable index out of range");
    Monomial mono(num_vars, 0);
    mono[var] = 1;
    MultiPolynomial f(num_vars);
    f.add_term(std::move(mono), c);
    return f;
  }

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t total_degree() const {
    std::size_t best = 0;
    for (const auto& [mono, c] : terms_) {
      std::size_t d = 0;
      for (auto e : mono) d += e;
      best = std::max(best, d);
    }
    return best;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != num_vars_) throw DomainError("evaluation point has wrong dimension");
    Rational total = 0;
    Rational term;
    for (const auto& [mono, c] : terms_) {
      term = c;
      for (std::size_t v = 0; v < num_vars_; ++v) {
        for (std::uint32_t e = 0; e < mono[v]; ++e) term *= point[v];
      }
      total += term;
    }
    return total;
  }

  MultiPolynomial& operator+=(const MultiPolynomial& rhs) {
    check_same(rhs);
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
  }

  MultiPolynomial& operator-=(const MultiPolynomial& rhs) {
    check_same(rhs);
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
  }

  MultiPolynomial operator-() const {
    MultiPolynomial r(*this);
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
  }

  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }

  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    a.check_same(b);
    MultiPolynomial out(a.num_vars_);
    Monomial mono(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t v = 0; v < a.num_vars_; ++v) mono[v] = ma[v] + mb[v];
        out.add_term(mono, ca * cb);
      }
    }
    return out;
  }

  MultiPolynomial& operator*=(const MultiPolynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& mono, const Rational& c) {
    if (cyclogab::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (inserted) return;
    it->second += c;
    if (cyclogab::is_zero(it->second)) terms_.erase(it);
  }

  void check_same(const MultiPolynomial& other) const {
    if (num_vars_ != other.num_vars_) throw DomainError("polynomials over different variable sets");
  }

  std::size_t num_vars_;
  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const MultiPolynomial& f) { return f.is_zero(); }

}  // namespace cyclogab
