#pragma once

// Randomized construction of Gabidulin generator matrices with prescribed
// zeros over Q(zeta_p).
//
// Evaluation points x_i = sum_j gamma_ij zeta^{j-1} have coordinates drawn
// uniformly from S = {0, ..., |S|-1}. A is the k x n Moore matrix
// [theta^{i-1}(x_j)], row i of T is (det[e_j | A_{:,Z_i}])_j, and G = T A.
// A draw is accepted when det T * det M_{[n],[n]} != 0, i.e. when T is
// invertible and the x_i are Q-linearly independent; otherwise the points
// are redrawn from the next sub-seed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclogab/cyclotomic.hpp"
#include "cyclogab/error.hpp"
#include "cyclogab/matrix.hpp"
#include "cyclogab/random.hpp"
#include "cyclogab/rational.hpp"
#include "cyclogab/support.hpp"

namespace cyclogab {

struct EvaluationPoints {
  std::vector<CycloElement> x;
  /// n x m coordinates, row-major: x_i = sum_j gamma[i*m + j] zeta^j.
  std::vector<std::uint64_t> gamma;
  std::uint64_t sample_set_size = 0;
  std::uint64_t seed = 0;
};

struct ConstructionResult {
  /// Completed pattern the matrices were built for.
  SupportSpec spec;
  ExactMatrix a;
  ExactMatrix t;
  ExactMatrix g;
  EvaluationPoints points;
  /// Number of rejected draws before the accepted one.
  std::size_t retries = 0;
};

inline constexpr std::size_t kDefaultMaxRetries = 64;

/// r x n matrix with entry (i, j) = theta^i(x_j), 0-based.
inline ExactMatrix moore_matrix(const ContextPtr& ctx, std::span<const CycloElement> x, std::size_t rows) {
  const std::size_t m = ctx->degree();
  if (rows > m) throw DomainError("Moore matrix has at most m=" + std::to_string(m) + " rows");
  if (x.size() > m) throw DomainError("at most m=" + std::to_string(m) + " evaluation points");
  ExactMatrix out(ctx, rows, x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    CycloElement v = x[j];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i > 0) v = v.apply_aut(1);
      out(i, j) = v;
    }
  }
  return out;
}

inline ExactMatrix moore_matrix(const EvaluationPoints& points, std::size_t rows) {
  if (points.x.empty()) throw DomainError("Moore matrix of zero points needs an explicit context");
  return moore_matrix(points.x.front().context(), points.x, rows);
}

/// det of the leading n x n block of the m x n Moore matrix.
inline CycloElement moore_minor(const ContextPtr& ctx, std::span<const CycloElement> x) {
  return det(moore_matrix(ctx, x, x.size()));
}

/// Q-linear independence of x_1..x_n through the non-vanishing of the
/// leading n x n Moore minor.
inline bool is_independent(const ContextPtr& ctx, std::span<const CycloElement> x) {
  if (x.size() > ctx->degree()) throw DomainError("more than m points are always dependent; n > m rejected");
  for (const auto& xi : x) {
    if (xi.is_zero()) return false;
  }
  return !moore_minor(ctx, x).is_zero();
}

/// Points from an explicit n x m coordinate matrix (row-major).
inline EvaluationPoints points_from_gamma(const ContextPtr& ctx, std::size_t n, std::vector<std::uint64_t> gamma,
                                          std::uint64_t sample_set_size = 0, std::uint64_t seed = 0) {
  const std::size_t m = ctx->degree();
  if (gamma.size() != n * m) throw DomainError("gamma must have n*m entries");
  EvaluationPoints pts;
  pts.x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> coeffs(m);
    for (std::size_t j = 0; j < m; ++j) coeffs[j] = Rational(static_cast<unsigned long>(gamma[i * m + j]));
    pts.x.emplace_back(ctx, std::move(coeffs));
  }
  pts.gamma = std::move(gamma);
  pts.sample_set_size = sample_set_size;
  pts.seed = seed;
  return pts;
}

/// Draws gamma row-major from a mt19937_64 seeded with `seed`.
inline EvaluationPoints sample_points(const ContextPtr& ctx, std::size_t n, std::uint64_t s_size, std::uint64_t seed) {
  if (s_size == 0) throw DomainError("sample set must be nonempty");
  if (n > ctx->degree()) throw DomainError("n=" + std::to_string(n) + " exceeds m=" + std::to_string(ctx->degree()));
  Rng rng(seed);
  std::vector<std::uint64_t> gamma(n * ctx->degree());
  for (auto& g : gamma) g = uniform_below(rng, s_size);
  return points_from_gamma(ctx, n, std::move(gamma), s_size, seed);
}

/// Smallest |S| with (n + k(k-1)) / |S| <= epsilon, computed exactly.
/// epsilon = 1 is accepted and gives the degenerate bound |S| = n + k(k-1).
inline std::uint64_t required_sample_size(std::size_t n, std::size_t k, const Rational& epsilon) {
  if (sgn(epsilon) <= 0 || epsilon > 1) throw DomainError("epsilon must lie in (0, 1]");
  const Rational degree(static_cast<unsigned long>(n + k * (k - 1)));
  const Integer size = ceil(Rational(degree / epsilon));
  if (!size.fits_ulong_p()) throw DomainError("required sample set size overflows 64 bits");
  return size.get_ui();
}

/// Overload for floating-point epsilon; uses the shortest decimal that
/// round-trips the double, so 0.01 means exactly 1/100.
inline std::uint64_t required_sample_size(std::size_t n, std::size_t k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in (0, 1]");
  return required_sample_size(n, k, decimal_value(epsilon));
}

/// T for the given A and completed pattern: row i is bordered_minor_row(A_{:,Z_i}).
inline ExactMatrix combination_matrix(const ExactMatrix& a, const SupportSpec& completed) {
  const std::size_t k = completed.k();
  ExactMatrix t(a.context(), k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = bordered_minor_row(a.select_columns(completed.zeros(i)));
    for (std::size_t j = 0; j < k; ++j) t(i, j) = row[j];
  }
  return t;
}

struct DrawOutcome {
  ExactMatrix a;
  ExactMatrix t;
  bool t_invertible;
  bool points_independent;
};

/// One pass of the construction for fixed points; no acceptance decision.
inline DrawOutcome build_for_points(const ContextPtr& ctx, const EvaluationPoints& points, const SupportSpec& completed) {
  ExactMatrix a = moore_matrix(ctx, points.x, completed.k());
  ExactMatrix t = combination_matrix(a, completed);
  const bool invertible = !det(t).is_zero();
  const bool independent = is_independent(ctx, points.x);
  return {std::move(a), std::move(t), invertible, independent};
}

/// Las Vegas construction: up to 1 + max_retries draws, the r-th using
/// sub-seed derive_seed(seed, r).
inline ConstructionResult construct(const SupportSpec& spec, const ContextPtr& ctx, std::uint64_t s_size,
                                    std::uint64_t seed, std::size_t max_retries = kDefaultMaxRetries) {
  if (spec.n() > ctx->degree()) {
    throw DomainError("n=" + std::to_string(spec.n()) + " exceeds the field degree m=" + std::to_string(ctx->degree()));
  }
  const auto report = check_condition(spec);
  if (!report.holds) throw ConditionViolated("zero pattern violates the intersection condition");
  const SupportSpec completed = spec.is_complete() ? spec : complete_sets(spec);
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    EvaluationPoints points = sample_points(ctx, spec.n(), s_size, derive_seed(seed, attempt));
    auto draw = build_for_points(ctx, points, completed);
    if (!draw.t_invertible || !draw.points_independent) continue;
    ExactMatrix g = draw.t * draw.a;
    return ConstructionResult{completed, std::move(draw.a), std::move(draw.t), std::move(g), std::move(points), attempt};
  }
  throw RetriesExhausted("no accepted draw in " + std::to_string(max_retries + 1) + " attempts with |S|=" +
                         std::to_string(s_size));
}

}  // namespace cyclogab
