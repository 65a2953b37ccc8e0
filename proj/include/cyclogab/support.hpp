#pragma once

// Zero patterns Z_1..Z_k over the columns of a k x n generator matrix and the
// intersection condition
//
//   |cap_{i in Omega} Z_i| + |Omega| <= k   for every nonempty Omega in [k].
//
// Indices are 0-based in memory and 1-based at the I/O boundary.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cyclogab/error.hpp"

namespace cyclogab {

using ColumnSet = std::vector<std::size_t>;  // sorted, unique, 0-based

class SupportSpec {
 public:
  SupportSpec(std::size_t n, std::size_t k, std::vector<ColumnSet> zeros) : n_(n), k_(k), zeros_(std::move(zeros)) {
    if (k_ == 0) throw DomainError("support spec needs k >= 1");
    if (k_ > n_) throw DomainError("support spec needs k <= n (k=" + std::to_string(k_) + ", n=" + std::to_string(n_) + ")");
    if (zeros_.size() != k_) {
      throw DomainError("support spec has " + std::to_string(zeros_.size()) + " zero sets for k=" + std::to_string(k_));
    }
    for (auto& z : zeros_) {
      std::sort(z.begin(), z.end());
      if (std::adjacent_find(z.begin(), z.end()) != z.end()) throw DomainError("duplicate column in a zero set");
      if (!z.empty() && z.back() >= n_) throw DomainError("zero-set column exceeds n=" + std::to_string(n_));
    }
  }

  /// All-empty pattern.
  SupportSpec(std::size_t n, std::size_t k) : SupportSpec(n, k, std::vector<ColumnSet>(k)) {}

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const std::vector<ColumnSet>& zeros() const { return zeros_; }
  const ColumnSet& zeros(std::size_t row) const { return zeros_.at(row); }

  /// Every zero set has exactly k - 1 elements.
  bool is_complete() const {
    return std::all_of(zeros_.begin(), zeros_.end(), [&](const ColumnSet& z) { return z.size() + 1 == k_; });
  }

  bool contains(std::size_t row, std::size_t col) const {
    return std::binary_search(zeros_[row].begin(), zeros_[row].end(), col);
  }

  friend bool operator==(const SupportSpec&, const SupportSpec&) = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<ColumnSet> zeros_;
};

/// Largest k the subset enumeration accepts.
inline constexpr std::size_t kMaxEnumeratedRows = 24;

struct ConditionReport {
  bool holds = true;
  /// Rows (0-based, ascending) of the first violating Omega found.
  std::optional<std::vector<std::size_t>> witness;
};

namespace detail {

// Identical zero sets are merged: a subset of distinct rows with multiplicity
// dominates every Omega using only part of a group, because the intersection
// is the same while |Omega| grows.
struct RowGroups {
  std::vector<boost::dynamic_bitset<>> masks;
  std::vector<std::vector<std::size_t>> members;
};

inline RowGroups group_rows(const SupportSpec& spec) {
  RowGroups g;
  std::vector<const ColumnSet*> seen;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const ColumnSet& z = spec.zeros(i);
    auto it = std::find_if(seen.begin(), seen.end(), [&](const ColumnSet* s) { return *s == z; });
    if (it != seen.end()) {
      g.members[static_cast<std::size_t>(it - seen.begin())].push_back(i);
      continue;
    }
    seen.push_back(&z);
    boost::dynamic_bitset<> mask(spec.n());
    for (auto c : z) mask.set(c);
    g.masks.push_back(std::move(mask));
    g.members.push_back({i});
  }
  return g;
}

// Depth-first walk of the subset lattice over row groups. The intersection is
// carried down the recursion so each node costs one bitset AND. The visitor
// receives (|intersection|, |Omega|, chosen group indices) and returns false
// to stop the walk.
template <class Visitor>
bool walk_subsets(const RowGroups& groups, std::size_t start, const boost::dynamic_bitset<>& acc, std::size_t omega,
                  std::vector<std::size_t>& chosen, Visitor& visit) {
  for (std::size_t g = start; g < groups.masks.size(); ++g) {
    boost::dynamic_bitset<> next = chosen.empty() ? groups.masks[g] : (acc & groups.masks[g]);
    const std::size_t size = omega + groups.members[g].size();
    chosen.push_back(g);
    if (!visit(next.count(), size, chosen)) return false;
    if (!walk_subsets(groups, g + 1, next, size, chosen, visit)) return false;
    chosen.pop_back();
  }
  return true;
}

inline void check_guard(const SupportSpec& spec) {
  if (spec.k() > kMaxEnumeratedRows) {
    throw GuardExceeded("subset enumeration limited to k <= " + std::to_string(kMaxEnumeratedRows) + ", got k=" +
                        std::to_string(spec.k()));
  }
}

}  // namespace detail

/// Tests the intersection condition over all nonempty row subsets.
inline ConditionReport check_condition(const SupportSpec& spec) {
  detail::check_guard(spec);
  const auto groups = detail::group_rows(spec);
  ConditionReport report;
  std::vector<std::size_t> chosen;
  auto visit = [&](std::size_t common, std::size_t omega, const std::vector<std::size_t>& picked) {
    if (common + omega <= spec.k()) return true;
    std::vector<std::size_t> rows;
    for (auto g : picked) rows.insert(rows.end(), groups.members[g].begin(), groups.members[g].end());
    std::sort(rows.begin(), rows.end());
    report.holds = false;
    report.witness = std::move(rows);
    return false;
  };
  detail::walk_subsets(groups, 0, boost::dynamic_bitset<>(spec.n()), 0, chosen, visit);
  return report;
}

/// ell = max over nonempty Omega of |cap Z_i| + |Omega|.
inline std::size_t compute_ell(const SupportSpec& spec) {
  detail::check_guard(spec);
  const auto groups = detail::group_rows(spec);
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto visit = [&](std::size_t common, std::size_t omega, const std::vector<std::size_t>&) {
    best = std::max(best, common + omega);
    return true;
  };
  detail::walk_subsets(groups, 0, boost::dynamic_bitset<>(spec.n()), 0, chosen, visit);
  return best;
}

/// Greedily enlarges every zero set to k - 1 elements while keeping the
/// condition: rows in increasing order, and for each row the smallest column
/// whose addition still satisfies the condition.
inline SupportSpec complete_sets(const SupportSpec& spec) {
  if (!check_condition(spec).holds) throw ConditionViolated("complete_sets requires a condition-satisfying pattern");
  std::vector<ColumnSet> zeros = spec.zeros();
  for (std::size_t i = 0; i < spec.k(); ++i) {
    while (zeros[i].size() + 1 < spec.k()) {
      bool extended = false;
      for (std::size_t c = 0; c < spec.n() && !extended; ++c) {
        if (std::binary_search(zeros[i].begin(), zeros[i].end(), c)) continue;
        std::vector<ColumnSet> trial = zeros;
        trial[i].insert(std::lower_bound(trial[i].begin(), trial[i].end(), c), c);
        SupportSpec candidate(spec.n(), spec.k(), trial);
        if (check_condition(candidate).holds) {
          zeros = std::move(trial);
          extended = true;
        }
      }
      if (!extended) {
        throw InternalError("no column extends zero set " + std::to_string(i + 1) + " without violating the condition");
      }
    }
  }
  return SupportSpec(spec.n(), spec.k(), std::move(zeros));
}

}  // namespace cyclogab
