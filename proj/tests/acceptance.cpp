// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion N] [--cli PATH] [--workdir DIR]
//
// Without --criterion every criterion runs. Exit status is 0 iff every
// selected criterion passed.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cyclogab/cyclogab.hpp"

namespace fs = std::filesystem;
using namespace cyclogab;

namespace {

// Pinned tolerances.
constexpr double kOracleSweepMaxSeconds = 60.0;
constexpr double kSuccessRateMaxFailure = 0.01 + 0.03;
constexpr int kSuccessRateTrials = 200;
constexpr int kCertifyMinConstructions = 50;
constexpr int kMooreTriples = 100;
constexpr int kMooreMinNonzeroUnplanted = 97;
constexpr int kCompletionSpecs = 500;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Config {
  std::string cli;
  fs::path workdir = fs::temp_directory_path() / "cyclogab_acceptance";
};

SupportSpec pattern(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>> one_based) {
  std::vector<ColumnSet> zeros;
  for (auto& row : one_based) {
    ColumnSet z;
    for (auto c : row) z.push_back(c - 1);
    zeros.push_back(std::move(z));
  }
  zeros.resize(k);
  return SupportSpec(n, k, std::move(zeros));
}

Outcome oracle_sweep(const Config&) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ColumnSet> pairs;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) pairs.push_back({a, b});
  }
  int families = 0, agree = 0, holds = 0;
  for (const auto& z1 : pairs) {
    for (const auto& z2 : pairs) {
      for (const auto& z3 : pairs) {
        const SupportSpec spec(4, 3, {z1, z2, z3});
        const bool cond = check_condition(spec).holds;
        agree += cond == det_p_is_nonzero(spec, OracleMode::kSymbolic).nonzero;
        holds += cond;
        ++families;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << agree << "/" << families << " families agree (" << holds << " satisfy the condition), " << secs << " s";
  return {families == 216 && agree == families && secs < kOracleSweepMaxSeconds, d.str()};
}

Outcome success_rate(const Config&) {
  auto ctx = make_context(11);
  const auto spec = pattern(6, 3, {{1, 2}, {3, 4}, {5, 6}});
  const std::uint64_t s_size = required_sample_size(6, 3, Rational(1, 100));
  int failures = 0;
  for (int seed = 1; seed <= kSuccessRateTrials; ++seed) {
    const auto pts = sample_points(ctx, 6, s_size, static_cast<std::uint64_t>(seed));
    const auto draw = build_for_points(ctx, pts, spec);
    failures += !(draw.t_invertible && draw.points_independent);
  }
  const double rate = static_cast<double>(failures) / kSuccessRateTrials;
  std::ostringstream d;
  d << "|S|=" << s_size << ", " << failures << "/" << kSuccessRateTrials << " single draws failed (rate " << rate
    << ", limit " << kSuccessRateMaxFailure << ")";
  return {s_size == 1200 && rate <= kSuccessRateMaxFailure, d.str()};
}

Outcome exact_certification(const Config&) {
  auto ctx = make_context(11);
  const std::vector<SupportSpec> specs{
      pattern(6, 3, {{1, 2}, {3, 4}, {5, 6}}), pattern(5, 3, {{1, 2}, {2, 3}, {4, 5}}),
      pattern(6, 3, {{1}, {}, {6}}),           pattern(4, 2, {{1}, {4}}),
      pattern(6, 2, {{3}, {4}}),               pattern(3, 1, {}),
  };
  int built = 0, good = 0;
  std::string first_bad;
  for (const auto& spec : specs) {
    const auto s_size = required_sample_size(spec.n(), spec.k(), Rational(1, 100));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto r = construct(spec, ctx, s_size, seed);
      const auto cert = certify_mrd(r, spec, true);
      ++built;
      const bool ok = cert.support_ok && cert.t_invertible && cert.points_independent && cert.generator_consistent &&
                      cert.hamming_distance == spec.n() - spec.k() + 1 &&
                      cert.checked_minors == detail::binomial(spec.n(), spec.k()) && cert.passed();
      good += ok;
      if (!ok && first_bad.empty()) first_bad = " first failure at n=" + std::to_string(spec.n()) + " seed " + std::to_string(seed);
    }
  }
  std::ostringstream d;
  d << good << "/" << built << " constructions fully certified with all maximal minors nonzero" << first_bad;
  return {built >= kCertifyMinConstructions && good == built, d.str()};
}

Outcome moore_equivalence(const Config&) {
  auto ctx = make_context(5);
  Rng rng(2024);
  int planted_zero = 0;
  for (int t = 0; t < kMooreTriples; ++t) {
    auto pts = sample_points(ctx, 3, 7, 5000 + static_cast<std::uint64_t>(t));
    long a = 0, b = 0;
    while (a == 0 && b == 0) {
      a = static_cast<long>(uniform_below(rng, 7)) - 3;
      b = static_cast<long>(uniform_below(rng, 7)) - 3;
    }
    pts.x[2] = pts.x[0] * Rational(a) + pts.x[1] * Rational(b);
    planted_zero += moore_minor(ctx, pts.x).is_zero();
  }
  int nonzero = 0, consistent = 0;
  for (int t = 0; t < kMooreTriples; ++t) {
    const auto pts = sample_points(ctx, 3, 7, 9000 + static_cast<std::uint64_t>(t));
    const bool nz = !moore_minor(ctx, pts.x).is_zero();
    const bool full_rank = rank(moore_matrix(ctx, pts.x, ctx->degree())) == 3;
    nonzero += nz;
    consistent += nz == full_rank;
  }
  std::ostringstream d;
  d << "planted: " << planted_zero << "/" << kMooreTriples << " zero; unplanted: " << nonzero << "/" << kMooreTriples
    << " nonzero, minor vs Moore rank consistent in " << consistent << "/" << kMooreTriples;
  return {planted_zero == kMooreTriples && nonzero >= kMooreMinNonzeroUnplanted && consistent == kMooreTriples,
          d.str()};
}

Outcome completion(const Config&) {
  Rng rng(77);
  int tested = 0, good = 0;
  while (tested < kCompletionSpecs) {
    const std::size_t n = 2 + uniform_below(rng, 7);
    const std::size_t k = 1 + uniform_below(rng, std::min<std::size_t>(n, 4));
    std::vector<ColumnSet> zeros(k);
    for (auto& z : zeros) {
      const std::size_t size = uniform_below(rng, k);
      for (std::size_t c = 0; c < n; ++c) {
        if (z.size() < size && uniform_below(rng, 2) == 1) z.push_back(c);
      }
    }
    const SupportSpec spec(n, k, zeros);
    if (!check_condition(spec).holds) continue;
    ++tested;
    const auto done = complete_sets(spec);
    bool ok = done.is_complete() && check_condition(done).holds && complete_sets(done) == done;
    for (std::size_t i = 0; ok && i < k; ++i) {
      ok = done.zeros(i).size() == k - 1 && std::includes(done.zeros(i).begin(), done.zeros(i).end(),
                                                           spec.zeros(i).begin(), spec.zeros(i).end());
    }
    good += ok;
  }
  std::ostringstream d;
  d << good << "/" << tested << " satisfying patterns complete to valid, idempotent supersets";
  return {good == tested, d.str()};
}

Outcome subcode_desk_scale(const Config&) {
  std::ostringstream d;
  bool pass = true;
  {
    auto ctx = make_context(5);
    const auto spec = pattern(4, 2, {{1, 2}, {1, 2}});
    const auto sub = build_subcode(spec, ctx, 1000, 1);
    const bool ok = sub.certificate.ell == 4u && sub.certificate.hamming_distance == 1u && sub.certificate.passed();
    d << "(a) k=2 n=4: ell=" << *sub.certificate.ell << " d_H=" << *sub.certificate.hamming_distance
      << (ok ? " ok" : " MISMATCH");
    pass = pass && ok;
  }
  {
    auto ctx = make_context(7);
    const auto spec = pattern(5, 3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
    const std::size_t ell = compute_ell(spec);
    d << "; (b) k=3 n=5 all {1,2,3}: expected ell=4 d_H=2, ell=" << ell;
    if (ell != 4) pass = false;
    try {
      const auto sub = build_subcode(spec, ctx, 1000, 1);
      const bool ok = sub.certificate.hamming_distance == 2u && sub.certificate.passed();
      d << " d_H=" << *sub.certificate.hamming_distance;
      pass = pass && ok;
    } catch (const Error& e) {
      d << ", subcode refused: " << e.what();
      pass = false;
    }
  }
  return {pass, d.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome reproducibility(const Config& cfg) {
  if (cfg.cli.empty()) return {false, "no --cli binary given"};
  fs::create_directories(cfg.workdir);
  const auto zeros = cfg.workdir / "zeros.json";
  std::ofstream(zeros) << R"({"n": 6, "k": 3, "zeros": [[1, 2], [3, 4], [5, 6]]})";
  int codes[2];
  const fs::path out[2] = {cfg.workdir / "run_a", cfg.workdir / "run_b"};
  for (int i = 0; i < 2; ++i) {
    fs::remove_all(out[i]);
    const std::string cmd = "\"" + cfg.cli + "\" construct --prime 11 --zeros \"" + zeros.string() +
                            "\" --epsilon 0.01 --seed 1 --out \"" + out[i].string() + "\"";
    codes[i] = std::system(cmd.c_str());
  }
  bool same = true;
  for (const char* f : {"result.json", "certificate.json"}) {
    const auto a = slurp(out[0] / f);
    same = same && !a.empty() && a == slurp(out[1] / f);
  }
  std::ostringstream d;
  d << "exit codes " << codes[0] << "," << codes[1] << "; result.json and certificate.json "
    << (same ? "byte-identical" : "DIFFER");
  return {codes[0] == 0 && codes[1] == 0 && same, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  Config cfg;
  std::string workdir;
  app.add_option("--criterion", only, "run one criterion (1-7)")->check(CLI::Range(1, 7));
  app.add_option("--cli", cfg.cli, "path to the cyclogab binary");
  app.add_option("--workdir", workdir, "scratch directory for CLI output");
  CLI11_PARSE(app, argc, argv);
  if (!workdir.empty()) cfg.workdir = workdir;

  const std::vector<std::pair<const char*, std::function<Outcome(const Config&)>>> criteria{
      {"exhaustive oracle equivalence", oracle_sweep},
      {"construction success rate", success_rate},
      {"exact certification", exact_certification},
      {"Moore minor equivalence", moore_equivalence},
      {"completion correctness", completion},
      {"subcode at desk scale", subcode_desk_scale},
      {"CLI reproducibility", reproducibility},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second(cfg);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << ": "
              << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
