#pragma once

// The cyclotomic field E = Q(zeta_p) for an odd prime p, viewed as a cyclic
// Galois extension of F = Q of degree m = p - 1.
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{m-1}. The
// generator automorphism theta is sigma_g : zeta -> zeta^g for the smallest
// primitive root g modulo p, so theta^e maps zeta^i to zeta^{g^e i mod p}.
// Exponents reaching p - 1 are folded back with
//   zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cyclogab/error.hpp"
#include "cyclogab/rational.hpp"

namespace cyclogab {

class GaloisContext;
using ContextPtr = std::shared_ptr<const GaloisContext>;

class GaloisContext {
 public:
  /// Builds the context for Q(zeta_p). Throws DomainError unless p is an odd prime.
  static ContextPtr make(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  /// Degree m = p - 1 of E over Q.
  std::size_t degree() const { return p_ - 1; }
  /// Smallest primitive root modulo p; theta = sigma_g.
  std::uint32_t generator() const { return g_; }
  /// g^e mod p, with e taken modulo m.
  std::uint32_t generator_power(std::int64_t e) const {
    const auto m = static_cast<std::int64_t>(degree());
    return powers_[static_cast<std::size_t>(((e % m) + m) % m)];
  }

  bool operator==(const GaloisContext& other) const { return p_ == other.p_; }

 private:
  GaloisContext(std::uint32_t p, std::uint32_t g, std::vector<std::uint32_t> powers)
      : p_(p), g_(g), powers_(std::move(powers)) {}

  std::uint32_t p_;
  std::uint32_t g_;
  std::vector<std::uint32_t> powers_;
};

namespace detail {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

inline std::uint32_t smallest_primitive_root(std::uint32_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t rest = p - 1;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) factors.push_back(rest);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool generates = true;
    for (auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw InternalError("no primitive root modulo " + std::to_string(p));
}

}  // namespace detail

inline ContextPtr GaloisContext::make(std::uint32_t p) {
  if (p == 2) throw DomainError("p = 2 gives the trivial extension Q(zeta_2) = Q");
  if (!detail::is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  const std::uint32_t g = detail::smallest_primitive_root(p);
  std::vector<std::uint32_t> powers(p - 1);
  std::uint64_t acc = 1;
  for (auto& pw : powers) {
    pw = static_cast<std::uint32_t>(acc);
    acc = acc * g % p;
  }
  return ContextPtr(new GaloisContext(p, g, std::move(powers)));
}

inline ContextPtr make_context(std::uint32_t p) { return GaloisContext::make(p); }

/// An element of Q(zeta_p): m rational coordinates in the power basis.
class CycloElement {
 public:
  explicit CycloElement(ContextPtr ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->degree()) {}

  CycloElement(ContextPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ctx_->degree()) {
      throw DomainError("element of Q(zeta_" + std::to_string(ctx_->prime()) + ") needs " +
                        std::to_string(ctx_->degree()) + " coefficients, got " + std::to_string(coeffs_.size()));
    }
    // mpq_class(num, den) does not reduce; equality relies on lowest terms.
    for (auto& c : coeffs_) c.canonicalize();
  }

  static CycloElement zero(const ContextPtr& ctx) { return CycloElement(ctx); }
  static CycloElement one(const ContextPtr& ctx) { return from_rational(ctx, Rational(1)); }

  static CycloElement from_rational(const ContextPtr& ctx, const Rational& q) {
    CycloElement e(ctx);
    e.coeffs_[0] = q;
    return e;
  }

  /// zeta^e for any integer e.
  static CycloElement zeta_power(const ContextPtr& ctx, std::int64_t e) {
    const auto p = static_cast<std::int64_t>(ctx->prime());
    std::vector<Rational> folded(static_cast<std::size_t>(p));
    folded[static_cast<std::size_t>(((e % p) + p) % p)] = 1;
    return CycloElement(ctx, reduce_cyclic(std::move(folded)));
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!cyclogab::is_zero(c)) return false;
    }
    return true;
  }

  /// True iff the element lies in the base field Q.
  bool in_base_field() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (!cyclogab::is_zero(coeffs_[i])) return false;
    }
    return true;
  }

  CycloElement& operator+=(const CycloElement& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }

  CycloElement& operator-=(const CycloElement& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  CycloElement& operator*=(const CycloElement& rhs) {
    check_same(rhs);
    const std::size_t p = ctx_->prime();
    const std::size_t m = coeffs_.size();
    std::vector<Rational> acc(p);
    Rational term;
    for (std::size_t i = 0; i < m; ++i) {
      if (cyclogab::is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (cyclogab::is_zero(rhs.coeffs_[j])) continue;
        std::size_t idx = i + j;
        if (idx >= p) idx -= p;
        term = coeffs_[i] * rhs.coeffs_[j];
        acc[idx] += term;
      }
    }
    coeffs_ = reduce_cyclic(std::move(acc));
    return *this;
  }

  CycloElement& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
  }

  CycloElement& operator/=(const CycloElement& rhs) { return *this *= rhs.inverse(); }

  CycloElement operator-() const {
    CycloElement r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
  friend CycloElement operator*(CycloElement a, const Rational& q) { return a *= q; }
  friend CycloElement operator*(const Rational& q, CycloElement a) { return a *= q; }
  friend CycloElement operator/(CycloElement a, const CycloElement& b) { return a /= b; }

  friend bool operator==(const CycloElement& a, const CycloElement& b) {
    return *a.ctx_ == *b.ctx_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm of the
  /// coefficient polynomial against the p-th cyclotomic polynomial.
  CycloElement inverse() const;

  /// theta^e applied to this element; e is reduced modulo m.
  CycloElement apply_aut(std::int64_t e) const {
    const std::uint64_t h = ctx_->generator_power(e);
    const std::size_t p = ctx_->prime();
    std::vector<Rational> acc(p);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!cyclogab::is_zero(coeffs_[i])) acc[h * i % p] = coeffs_[i];
    }
    return CycloElement(ctx_, reduce_cyclic(std::move(acc)));
  }

  /// Coefficients modulo x^p - 1 (length p) folded into the power basis.
  static std::vector<Rational> reduce_cyclic(std::vector<Rational> acc) {
    const std::size_t m = acc.size() - 1;
    const Rational top = acc[m];
    acc.pop_back();
    if (!cyclogab::is_zero(top)) {
      for (std::size_t i = 0; i < m; ++i) acc[i] -= top;
    }
    return acc;
  }

 private:
  void check_same(const CycloElement& other) const {
    if (!(*ctx_ == *other.ctx_)) {
      throw ContextMismatch("Q(zeta_" + std::to_string(ctx_->prime()) + ") vs Q(zeta_" +
                            std::to_string(other.ctx_->prime()) + ")");
    }
  }

  ContextPtr ctx_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const CycloElement& a) { return a.is_zero(); }
inline CycloElement inverse(const CycloElement& a) { return a.inverse(); }

namespace detail {

// Dense univariate polynomials over Q, low degree first, no trailing zeros.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& f) {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
}

// Returns (quotient, remainder) of a / b with b nonzero.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const Rational lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

inline QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly r(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (is_zero(q[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  }
  trim(r);
  return r;
}

}  // namespace detail

inline CycloElement CycloElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(zeta_" + std::to_string(ctx_->prime()) + ")");
  const std::size_t p = ctx_->prime();
  detail::QPoly r0(p, Rational(1));  // Phi_p = 1 + x + ... + x^{p-1}
  detail::QPoly r1 = coeffs_;
  detail::trim(r1);
  detail::QPoly s0;
  detail::QPoly s1{Rational(1)};
  // Invariant: s_i * a == r_i (mod Phi_p).
  while (r1.size() > 1) {
    auto [q, r] = detail::divmod(r0, r1);
    detail::QPoly s2 = detail::sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_p is irreducible, so the last remainder is a nonzero constant.
  const Rational c = r1.at(0);
  std::vector<Rational> acc(p);
  for (std::size_t i = 0; i < s1.size(); ++i) acc[i % p] += s1[i] / c;
  return CycloElement(ctx_, reduce_cyclic(std::move(acc)));
}

inline std::ostream& operator<<(std::ostream& os, const CycloElement& a) {
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (is_zero(a[i])) continue;
    if (!first) os << " + ";
    os << "(" << a[i].get_str() << ")";
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os;
}

}  // namespace cyclogab
