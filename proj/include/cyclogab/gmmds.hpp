#pragma once

// Polynomial oracle for the intersection condition. For a completed pattern
// (every |Z_i| = k - 1) row i of the k x k matrix P holds the coefficients of
//
//   prod_{t in Z_i} (X - alpha_t) = sum_j P_ij X^{j-1},
//
// so P_ij is the elementary symmetric polynomial e_{k-j} of {-alpha_t}. The
// condition holds iff det P is not the zero polynomial in alpha_1..alpha_n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclogab/elimination.hpp"
#include "cyclogab/error.hpp"
#include "cyclogab/polynomial.hpp"
#include "cyclogab/random.hpp"
#include "cyclogab/rational.hpp"
#include "cyclogab/support.hpp"

namespace cyclogab {

enum class OracleMode { kSymbolic, kRandomized };

inline const char* to_string(OracleMode mode) { return mode == OracleMode::kSymbolic ? "symbolic" : "randomized"; }

inline OracleMode parse_oracle_mode(const std::string& s) {
  if (s == "symbolic") return OracleMode::kSymbolic;
  if (s == "randomized") return OracleMode::kRandomized;
  throw DomainError("unknown oracle mode '" + s + "' (expected symbolic or randomized)");
}

/// Largest k for which det P is expanded symbolically.
inline constexpr std::size_t kMaxSymbolicRows = 6;

struct PolyMatrix {
  std::size_t k = 0;
  std::vector<MultiPolynomial> entries;  // row-major

  const MultiPolynomial& operator()(std::size_t i, std::size_t j) const { return entries[i * k + j]; }
};

struct OracleResult {
  bool nonzero = false;
  OracleMode mode = OracleMode::kSymbolic;
  /// Point alpha_1..alpha_n with det P(alpha) != 0; randomized mode only.
  std::optional<std::vector<std::uint64_t>> witness;
};

namespace detail {

inline void require_completed(const SupportSpec& spec) {
  if (!spec.is_complete()) throw DomainError("the P matrix needs every zero set of size k-1");
}

// Coefficients (low degree first) of prod (X - r) over the given roots.
template <class T>
std::vector<T> monic_from_roots(std::span<const T> roots, const T& one) {
  std::vector<T> coeffs{one};
  for (const auto& r : roots) {
    std::vector<T> next(coeffs.size() + 1, one - one);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= r * coeffs[d];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace detail

/// Symbolic P over variables alpha_1..alpha_n.
inline PolyMatrix build_p_matrix(const SupportSpec& spec) {
  detail::require_completed(spec);
  const std::size_t n = spec.n();
  const std::size_t k = spec.k();
  const auto one = MultiPolynomial::constant(n, 1);
  PolyMatrix p{k, {}};
  p.entries.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<MultiPolynomial> roots;
    for (auto t : spec.zeros(i)) roots.push_back(MultiPolynomial::variable(n, t));
    auto row = detail::monic_from_roots<MultiPolynomial>(roots, one);
    for (auto& c : row) p.entries.push_back(std::move(c));
  }
  return p;
}

/// P evaluated at alpha (one value per column of the pattern), row-major.
inline std::vector<Rational> evaluate_p_matrix(const SupportSpec& spec, std::span<const Rational> alpha) {
  detail::require_completed(spec);
  if (alpha.size() != spec.n()) throw DomainError("evaluation point needs one value per column");
  std::vector<Rational> out;
  out.reserve(spec.k() * spec.k());
  for (std::size_t i = 0; i < spec.k(); ++i) {
    std::vector<Rational> roots;
    for (auto t : spec.zeros(i)) roots.push_back(alpha[t]);
    auto row = detail::monic_from_roots<Rational>(roots, Rational(1));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

inline MultiPolynomial det_p(const SupportSpec& spec) {
  if (spec.k() > kMaxSymbolicRows) {
    throw GuardExceeded("symbolic det P limited to k <= " + std::to_string(kMaxSymbolicRows));
  }
  const auto p = build_p_matrix(spec);
  return elim::det_cofactor(p.entries, p.k, MultiPolynomial::constant(spec.n(), 1));
}

/// Size of the integer sample set {0..N-1} used by randomized mode; a
/// nonzero det P of total degree <= k(k-1)/2 vanishes at a random point with
/// probability <= 1/100.
inline std::uint64_t oracle_sample_size(std::size_t k) {
  const std::uint64_t degree = static_cast<std::uint64_t>(k) * (k - 1) / 2;
  return 100 * (degree == 0 ? 1 : degree);
}

/// Decides whether det P is a nonzero polynomial. Randomized mode only errs
/// towards "zero", each trial with probability <= 1/100.
inline OracleResult det_p_is_nonzero(const SupportSpec& spec, OracleMode mode, std::uint64_t seed = 0,
                                     std::size_t trials = 16) {
  detail::require_completed(spec);
  OracleResult result;
  result.mode = mode;
  if (mode == OracleMode::kSymbolic) {
    result.nonzero = !det_p(spec).is_zero();
    return result;
  }
  Rng rng(seed);
  const std::uint64_t set_size = oracle_sample_size(spec.k());
  std::vector<std::uint64_t> point(spec.n());
  std::vector<Rational> alpha(spec.n());
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (std::size_t t = 0; t < spec.n(); ++t) {
      point[t] = uniform_below(rng, set_size);
      alpha[t] = Rational(static_cast<unsigned long>(point[t]));
    }
    const auto values = evaluate_p_matrix(spec, alpha);
    if (!is_zero(elim::det_bareiss(values, spec.k(), Rational(1)))) {
      result.nonzero = true;
      result.witness = point;
      return result;
    }
  }
  return result;
}

}  // namespace cyclogab
