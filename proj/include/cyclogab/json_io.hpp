#pragma once

// JSON encodings of the library's values.
//
//   rational        "num/den" in lowest terms
//   element         [m rationals], power-basis coordinates
//   context         {"p": p}
//   matrix          {"rows": r, "cols": c, "entries": [element, ...]}   (row-major)
//   zero pattern    {"n": n, "k": k, "zeros": [[col, ...], ...]}         (1-based)
//   points          {"x": [element, ...], "gamma": [[int, ...], ...], "sample_set_size": s, "seed": s}
//
// Object keys are emitted sorted, so equal values serialize to equal bytes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclogab/certify.hpp"
#include "cyclogab/cyclotomic.hpp"
#include "cyclogab/error.hpp"
#include "cyclogab/gabidulin.hpp"
#include "cyclogab/gmmds.hpp"
#include "cyclogab/matrix.hpp"
#include "cyclogab/rational.hpp"
#include "cyclogab/support.hpp"

namespace cyclogab::json_io {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

inline std::uint64_t unsigned_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw DomainError(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace detail

inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("rational must be a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

inline Json to_json(const CycloElement& a) {
  Json out = Json::array();
  for (const auto& c : a.coeffs()) out.push_back(to_json(c));
  return out;
}

inline CycloElement element_from_json(const ContextPtr& ctx, const Json& j) {
  if (!j.is_array()) throw DomainError("field element must be an array of rationals");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return CycloElement(ctx, std::move(coeffs));
}

inline Json context_to_json(const ContextPtr& ctx) { return Json{{"p", ctx->prime()}}; }

inline ContextPtr context_from_json(const Json& j) {
  const auto p = detail::unsigned_field(j, "p");
  if (p > 0xFFFFFFFFull) throw DomainError("prime out of range");
  return make_context(static_cast<std::uint32_t>(p));
}

inline Json to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ExactMatrix matrix_from_json(const ContextPtr& ctx, const Json& j) {
  const auto rows = detail::unsigned_field(j, "rows");
  const auto cols = detail::unsigned_field(j, "cols");
  const Json& entries = detail::field(j, "entries");
  if (!entries.is_array()) throw DomainError("matrix entries must be an array");
  std::vector<CycloElement> elems;
  for (const auto& e : entries) elems.push_back(element_from_json(ctx, e));
  return ExactMatrix(ctx, rows, cols, std::move(elems));
}

inline Json to_json(const SupportSpec& spec) {
  Json zeros = Json::array();
  for (const auto& z : spec.zeros()) {
    Json row = Json::array();
    for (auto c : z) row.push_back(c + 1);
    zeros.push_back(std::move(row));
  }
  return Json{{"n", spec.n()}, {"k", spec.k()}, {"zeros", std::move(zeros)}};
}

inline SupportSpec spec_from_json(const Json& j) {
  const auto n = detail::unsigned_field(j, "n");
  const auto k = detail::unsigned_field(j, "k");
  const Json& zeros = detail::field(j, "zeros");
  if (!zeros.is_array()) throw DomainError("'zeros' must be an array of column lists");
  std::vector<ColumnSet> sets;
  for (const auto& row : zeros) {
    if (!row.is_array()) throw DomainError("each zero set must be an array of 1-based columns");
    ColumnSet set;
    for (const auto& c : row) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 1) throw DomainError("columns are 1-based positive integers");
      set.push_back(c.get<std::size_t>() - 1);
    }
    sets.push_back(std::move(set));
  }
  return SupportSpec(n, k, std::move(sets));
}

inline Json to_json(const EvaluationPoints& pts) {
  Json x = Json::array();
  for (const auto& e : pts.x) x.push_back(to_json(e));
  Json gamma = Json::array();
  const std::size_t n = pts.x.size();
  const std::size_t m = n == 0 ? 0 : pts.gamma.size() / n;
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m; ++j) row.push_back(pts.gamma[i * m + j]);
    gamma.push_back(std::move(row));
  }
  return Json{{"x", std::move(x)}, {"gamma", std::move(gamma)}, {"sample_set_size", pts.sample_set_size},
              {"seed", pts.seed}};
}

inline EvaluationPoints points_from_json(const ContextPtr& ctx, const Json& j) {
  EvaluationPoints pts;
  for (const auto& e : detail::field(j, "x")) pts.x.push_back(element_from_json(ctx, e));
  for (const auto& row : detail::field(j, "gamma")) {
    if (row.size() != ctx->degree()) throw DomainError("gamma rows need m entries");
    for (const auto& g : row) pts.gamma.push_back(g.get<std::uint64_t>());
  }
  if (pts.gamma.size() != pts.x.size() * ctx->degree()) throw DomainError("gamma needs one row per point");
  pts.sample_set_size = detail::unsigned_field(j, "sample_set_size");
  pts.seed = detail::unsigned_field(j, "seed");
  return pts;
}

/// `inputs` echoes whatever produced the result (parameters, original pattern).
inline Json to_json(const ConstructionResult& r, Json inputs = Json::object()) {
  return Json{{"context", context_to_json(r.g.context())},
              {"inputs", std::move(inputs)},
              {"spec", to_json(r.spec)},
              {"A", to_json(r.a)},
              {"T", to_json(r.t)},
              {"G", to_json(r.g)},
              {"points", to_json(r.points)},
              {"retries", r.retries}};
}

inline ConstructionResult result_from_json(const Json& j) {
  const auto ctx = context_from_json(detail::field(j, "context"));
  return ConstructionResult{spec_from_json(detail::field(j, "spec")),
                            matrix_from_json(ctx, detail::field(j, "A")),
                            matrix_from_json(ctx, detail::field(j, "T")),
                            matrix_from_json(ctx, detail::field(j, "G")),
                            points_from_json(ctx, detail::field(j, "points")),
                            static_cast<std::size_t>(detail::unsigned_field(j, "retries"))};
}

inline Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json to_json(const Certificate& c) {
  Json claim = nullptr;
  if (c.claimed_rank_distance) {
    claim = Json{{"value", *c.claimed_rank_distance}, {"basis", c.rank_distance_basis}};
  }
  return Json{{"n", c.n},
              {"k", c.k},
              {"support_ok", c.support_ok},
              {"t_invertible", c.t_invertible},
              {"points_independent", c.points_independent},
              {"generator_consistent", c.generator_consistent},
              {"hamming_distance", optional_json(c.hamming_distance)},
              {"claimed_rank_distance", std::move(claim)},
              {"ell", optional_json(c.ell)},
              {"checked_minors", c.checked_minors},
              {"passed", c.passed()}};
}

inline Certificate certificate_from_json(const Json& j) {
  auto optional_size = [&](const char* key) -> std::optional<std::size_t> {
    const Json& v = detail::field(j, key);
    if (v.is_null()) return std::nullopt;
    return v.get<std::size_t>();
  };
  Certificate c;
  c.n = detail::unsigned_field(j, "n");
  c.k = detail::unsigned_field(j, "k");
  c.support_ok = detail::field(j, "support_ok").get<bool>();
  c.t_invertible = detail::field(j, "t_invertible").get<bool>();
  c.points_independent = detail::field(j, "points_independent").get<bool>();
  c.generator_consistent = detail::field(j, "generator_consistent").get<bool>();
  c.hamming_distance = optional_size("hamming_distance");
  const Json& claim = detail::field(j, "claimed_rank_distance");
  if (!claim.is_null()) {
    c.claimed_rank_distance = detail::unsigned_field(claim, "value");
    c.rank_distance_basis = detail::field(claim, "basis").get<std::string>();
  }
  c.ell = optional_size("ell");
  c.checked_minors = detail::unsigned_field(j, "checked_minors");
  return c;
}

inline Json condition_report_json(const ConditionReport& report, std::size_t ell) {
  Json out{{"condition", report.holds}, {"ell", ell}};
  if (report.witness) {
    Json omega = Json::array();
    for (auto r : *report.witness) omega.push_back(r + 1);
    out["witness_omega"] = std::move(omega);
  }
  return out;
}

inline Json oracle_report_json(bool condition, const OracleResult& r) {
  Json witness = nullptr;
  if (r.witness) witness = *r.witness;
  return Json{{"condition", condition},
              {"det_p_nonzero", r.nonzero},
              {"mode", to_string(r.mode)},
              {"witness_point", std::move(witness)}};
}

}  // namespace cyclogab::json_io
