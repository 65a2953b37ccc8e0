#pragma once

// Exact verification of constructed generator matrices.
//
// Rank distance over an infinite field cannot be enumerated, so it is
// certified from premises that are each checked exactly: the zeros are in
// place, T is invertible, the evaluation points are Q-linearly independent
// and G = T A for the Moore matrix A of those points. Together with the MRD
// property of Gabidulin codes over cyclic extensions these give
// d_R = n - k + 1. The Hamming distance, which bounds d_R from above, is
// measured directly from the column-rank profile of G.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclogab/cyclotomic.hpp"
#include "cyclogab/error.hpp"
#include "cyclogab/gabidulin.hpp"
#include "cyclogab/matrix.hpp"
#include "cyclogab/support.hpp"

namespace cyclogab {

inline constexpr const char* kBasisGabidulin = "gabidulin-mrd";
inline constexpr const char* kBasisSubcode = "padded-gabidulin-subcode";

/// Budget on column subsets examined by the Hamming-distance sweep.
inline constexpr std::uint64_t kDefaultSubsetBudget = 2'000'000;

/// Minor sweep runs by default up to this many columns.
inline constexpr std::size_t kDefaultMinorSweepMaxColumns = 12;

struct Certificate {
  std::size_t n = 0;
  std::size_t k = 0;
  bool support_ok = false;
  bool t_invertible = false;
  bool points_independent = false;
  /// G equals T times the Moore matrix rebuilt from the stored points.
  bool generator_consistent = false;
  std::optional<std::size_t> hamming_distance;
  std::optional<std::size_t> claimed_rank_distance;
  std::string rank_distance_basis;
  std::optional<std::size_t> ell;
  std::uint64_t checked_minors = 0;

  /// Every exact check passed and the measured distance matches the claim.
  bool passed() const {
    if (!(support_ok && t_invertible && points_independent && generator_consistent)) return false;
    if (!claimed_rank_distance) return false;
    return !hamming_distance || *hamming_distance == *claimed_rank_distance;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline bool verify_support(const ExactMatrix& g, const SupportSpec& spec) {
  if (g.rows() != spec.k() || g.cols() != spec.n()) throw DomainError("generator shape does not match the zero pattern");
  for (std::size_t i = 0; i < spec.k(); ++i) {
    for (auto j : spec.zeros(i)) {
      if (!g(i, j).is_zero()) return false;
    }
  }
  return true;
}

struct HammingSweep {
  std::size_t distance = 0;
  /// Number of k x k minors evaluated.
  std::uint64_t checked_minors = 0;
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out = out * (n - r + i) / i;
    if (out > (std::uint64_t{1} << 62)) return out;
  }
  return out;
}

// Advances a sorted r-combination of [0, n) in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Minimum Hamming weight of the row space of a full-rank k x n matrix:
/// n - t + 1 for the smallest t such that every t columns have rank k.
/// With t = k this is the sweep over all maximal minors.
inline HammingSweep hamming_sweep(const ExactMatrix& g, std::uint64_t budget = kDefaultSubsetBudget) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k == 0 || rank(g) != k) throw DomainError("Hamming distance needs a full-row-rank generator matrix");
  if (detail::binomial(n, k) > budget) {
    throw GuardExceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") column subsets exceed the budget");
  }
  HammingSweep out;
  std::uint64_t examined = 0;
  for (std::size_t t = k; t <= n; ++t) {
    std::vector<std::size_t> cols(t);
    for (std::size_t i = 0; i < t; ++i) cols[i] = i;
    bool all_full = true;
    do {
      if (++examined > budget) throw GuardExceeded("Hamming-distance sweep exceeded its subset budget");
      const auto sub = g.select_columns(cols);
      bool full;
      if (t == k) {
        ++out.checked_minors;
        full = !det(sub).is_zero();
      } else {
        full = rank(sub) == k;
      }
      if (!full) {
        all_full = false;
        break;
      }
    } while (detail::next_combination(cols, n));
    if (all_full) {
      out.distance = n - t + 1;
      return out;
    }
  }
  throw InternalError("full-rank matrix without a full-rank column set");
}

inline std::size_t hamming_distance(const ExactMatrix& g) { return hamming_sweep(g).distance; }

namespace detail {

inline void fill_premises(Certificate& cert, const ConstructionResult& result) {
  const auto& ctx = result.g.context();
  cert.t_invertible = result.t.is_square() && !det(result.t).is_zero();
  cert.points_independent = result.points.x.size() <= ctx->degree() && is_independent(ctx, result.points.x);
  if (result.points.x.size() == result.g.cols() && result.t.rows() <= ctx->degree()) {
    const auto a = moore_matrix(ctx, result.points.x, result.t.rows());
    cert.generator_consistent = result.t.cols() == a.rows() && result.t * a == result.g;
  }
}

}  // namespace detail

/// Certifies an MRD construction against the pattern it must satisfy.
inline Certificate certify_mrd(const ConstructionResult& result, const SupportSpec& spec, bool check_minors) {
  Certificate cert;
  cert.n = spec.n();
  cert.k = spec.k();
  cert.support_ok = result.g.rows() == spec.k() && result.g.cols() == spec.n() && verify_support(result.g, spec);
  detail::fill_premises(cert, result);
  if (cert.support_ok && cert.t_invertible && cert.points_independent && cert.generator_consistent) {
    cert.claimed_rank_distance = spec.n() - spec.k() + 1;
    cert.rank_distance_basis = kBasisGabidulin;
    if (check_minors) {
      const auto sweep = hamming_sweep(result.g);
      cert.hamming_distance = sweep.distance;
      cert.checked_minors = sweep.checked_minors;
    }
  }
  return cert;
}

inline Certificate certify_mrd(const ConstructionResult& result, const SupportSpec& spec) {
  return certify_mrd(result, spec, spec.n() <= kDefaultMinorSweepMaxColumns);
}

struct SubcodeResult {
  /// First k rows of the padded construction's generator.
  ExactMatrix g_sub;
  Certificate certificate;
  /// The ell-dimensional construction the subcode was cut from.
  ConstructionResult padded;
};

/// Pads the pattern with empty zero sets up to ell rows, builds the
/// ell-dimensional code and keeps its first k rows. Patterns that already
/// satisfy the condition take the ordinary path.
inline SubcodeResult build_subcode(const SupportSpec& spec, const ContextPtr& ctx, std::uint64_t s_size,
                                   std::uint64_t seed, std::size_t max_retries = kDefaultMaxRetries) {
  const std::size_t ell = compute_ell(spec);
  if (ell <= spec.k()) {
    auto result = construct(spec, ctx, s_size, seed, max_retries);
    Certificate cert = certify_mrd(result, spec, true);
    cert.ell = ell;
    ExactMatrix g = result.g;
    return {std::move(g), std::move(cert), std::move(result)};
  }
  if (ell > spec.n()) {
    throw DomainError("ell=" + std::to_string(ell) + " exceeds n=" + std::to_string(spec.n()) +
                      ": no code of dimension k meets this zero pattern");
  }
  std::vector<ColumnSet> zeros = spec.zeros();
  zeros.resize(ell);
  const SupportSpec padded(spec.n(), ell, std::move(zeros));
  if (!check_condition(padded).holds) throw InternalError("padded pattern violates the condition at dimension ell");

  auto result = construct(padded, ctx, s_size, seed, max_retries);
  std::vector<std::size_t> head(spec.k());
  for (std::size_t i = 0; i < head.size(); ++i) head[i] = i;
  ExactMatrix g_sub = result.g.select_rows(head);

  Certificate cert;
  cert.n = spec.n();
  cert.k = spec.k();
  cert.ell = ell;
  cert.support_ok = verify_support(g_sub, spec);
  detail::fill_premises(cert, result);
  if (cert.support_ok && cert.t_invertible && cert.points_independent && cert.generator_consistent) {
    cert.claimed_rank_distance = spec.n() - ell + 1;
    cert.rank_distance_basis = kBasisSubcode;
    const auto sweep = hamming_sweep(g_sub);
    cert.hamming_distance = sweep.distance;
    cert.checked_minors = sweep.checked_minors;
  }
  return {std::move(g_sub), std::move(cert), std::move(result)};
}

/// Re-certifies a stored subcode: the padded construction plus the rows kept.
inline Certificate certify_subcode(const ConstructionResult& padded, const SupportSpec& spec) {
  const std::size_t ell = compute_ell(spec);
  if (ell <= spec.k()) {
    Certificate cert = certify_mrd(padded, spec, true);
    cert.ell = ell;
    return cert;
  }
  Certificate cert;
  cert.n = spec.n();
  cert.k = spec.k();
  cert.ell = ell;
  if (padded.g.rows() < spec.k() || padded.g.cols() != spec.n()) return cert;
  std::vector<std::size_t> head(spec.k());
  for (std::size_t i = 0; i < head.size(); ++i) head[i] = i;
  const ExactMatrix g_sub = padded.g.select_rows(head);
  cert.support_ok = verify_support(g_sub, spec) && verify_support(padded.g, padded.spec);
  detail::fill_premises(cert, padded);
  if (cert.support_ok && cert.t_invertible && cert.points_independent && cert.generator_consistent &&
      padded.g.rows() == ell) {
    cert.claimed_rank_distance = spec.n() - ell + 1;
    cert.rank_distance_basis = kBasisSubcode;
    const auto sweep = hamming_sweep(g_sub);
    cert.hamming_distance = sweep.distance;
    cert.checked_minors = sweep.checked_minors;
  }
  return cert;
}

}  // namespace cyclogab
