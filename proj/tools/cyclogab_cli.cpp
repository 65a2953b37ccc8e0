// cyclogab: command-line front end.
//
// Exit codes: 0 success or condition true, 1 condition false or failed
// certificate, 2 usage or input error.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclogab/cyclogab.hpp"
#include "cyclogab/json_io.hpp"

namespace fs = std::filesystem;
using cyclogab::json_io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::uint64_t prime = 0;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::string zeros_file;
  std::string epsilon;
  std::optional<std::uint64_t> s_size;
  std::uint64_t seed = 1;
  std::size_t max_retries = cyclogab::kDefaultMaxRetries;
  std::optional<bool> check_minors;
  std::string mode = "symbolic";
  std::string out_dir;
  std::string result_file;
  bool sweep = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cyclogab::DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw cyclogab::InternalError("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

// Stable text form: sorted keys, two-space indent, trailing newline.
std::string render(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw cyclogab::DomainError("cannot write " + path.string());
  out << text;
}

// The zero pattern comes from --zeros (either {"n","k","zeros"} or a bare list
// of 1-based column lists) or, absent a file, is empty with --n/--k.
cyclogab::SupportSpec load_spec(const Options& o) {
  if (o.zeros_file.empty()) {
    if (!o.n || !o.k) throw cyclogab::DomainError("need --zeros <file> or both --n and --k");
    return cyclogab::SupportSpec(*o.n, *o.k);
  }
  Json j = Json::parse(read_file(o.zeros_file));
  if (j.is_array()) {
    if (!o.n) throw cyclogab::DomainError("a bare zeros list needs --n");
    j = Json{{"n", *o.n}, {"k", o.k.value_or(j.size())}, {"zeros", j}};
  }
  auto spec = cyclogab::json_io::spec_from_json(j);
  if (o.n && *o.n != spec.n()) throw cyclogab::DomainError("--n disagrees with the zeros file");
  if (o.k && *o.k != spec.k()) throw cyclogab::DomainError("--k disagrees with the zeros file");
  return spec;
}

cyclogab::ContextPtr load_context(const Options& o, const cyclogab::SupportSpec& spec) {
  if (o.prime == 0) throw cyclogab::DomainError("--prime is required");
  auto ctx = cyclogab::make_context(o.prime);
  if (spec.n() > ctx->degree()) {
    throw cyclogab::DomainError("n=" + std::to_string(spec.n()) + " exceeds p-1=" + std::to_string(ctx->degree()));
  }
  return ctx;
}

// Exactly one of --epsilon and --s-size.
std::uint64_t sample_size(const Options& o, std::size_t n, std::size_t k) {
  if (o.epsilon.empty() == !o.s_size.has_value()) {
    throw cyclogab::DomainError("give exactly one of --epsilon and --s-size");
  }
  if (o.s_size) return *o.s_size;
  return cyclogab::required_sample_size(n, k, cyclogab::parse_decimal(o.epsilon));
}

Json job_inputs(const Options& o, const cyclogab::SupportSpec& spec, std::uint64_t s_size, const char* command) {
  Json inputs{{"command", command},
              {"p", o.prime},
              {"pattern", cyclogab::json_io::to_json(spec)},
              {"s_size", s_size},
              {"seed", o.seed},
              {"max_retries", o.max_retries}};
  inputs["epsilon"] = o.epsilon.empty() ? Json(nullptr) : Json(o.epsilon);
  return inputs;
}

// Writes result.json and certificate.json into --out, or prints both.
void emit(const Options& o, const std::string& result_text, Json certificate) {
  certificate["provenance"] = {{"result_sha256", sha256_hex(result_text)}};
  if (o.out_dir.empty()) {
    std::cout << render(Json{{"result", Json::parse(result_text)}, {"certificate", certificate}});
    return;
  }
  fs::create_directories(o.out_dir);
  write_file(fs::path(o.out_dir) / "result.json", result_text);
  write_file(fs::path(o.out_dir) / "certificate.json", render(certificate));
}

Json with_inputs_hash(Json certificate, const Json& inputs) {
  certificate["inputs_sha256"] = sha256_hex(inputs.dump());
  return certificate;
}

int cmd_check(const Options& o) {
  const auto spec = load_spec(o);
  const auto report = cyclogab::check_condition(spec);
  std::cout << render(cyclogab::json_io::condition_report_json(report, cyclogab::compute_ell(spec)));
  return report.holds ? kExitOk : kExitNegative;
}

int cmd_construct(const Options& o) {
  const auto spec = load_spec(o);
  const auto ctx = load_context(o, spec);
  if (!cyclogab::check_condition(spec).holds) {
    std::cerr << "zero pattern violates the intersection condition; use `cyclogab subcode` for the largest-distance "
                 "subcode\n";
    return kExitNegative;
  }
  const auto s_size = sample_size(o, spec.n(), spec.k());
  const auto result = cyclogab::construct(spec, ctx, s_size, o.seed, o.max_retries);
  const bool sweep = o.check_minors.value_or(spec.n() <= cyclogab::kDefaultMinorSweepMaxColumns);
  const auto cert = cyclogab::certify_mrd(result, spec, sweep);
  const Json inputs = job_inputs(o, spec, s_size, "construct");
  emit(o, render(cyclogab::json_io::to_json(result, inputs)),
       with_inputs_hash(cyclogab::json_io::to_json(cert), inputs));
  return cert.passed() ? kExitOk : kExitNegative;
}

int cmd_subcode(const Options& o) {
  const auto spec = load_spec(o);
  const auto ctx = load_context(o, spec);
  const std::size_t ell = cyclogab::compute_ell(spec);
  const auto s_size = sample_size(o, spec.n(), std::max(ell, spec.k()));
  const auto sub = cyclogab::build_subcode(spec, ctx, s_size, o.seed, o.max_retries);
  const Json inputs = job_inputs(o, spec, s_size, "subcode");
  Json result = cyclogab::json_io::to_json(sub.padded, inputs);
  result["G_sub"] = cyclogab::json_io::to_json(sub.g_sub);
  emit(o, render(result), with_inputs_hash(cyclogab::json_io::to_json(sub.certificate), inputs));
  return sub.certificate.passed() ? kExitOk : kExitNegative;
}

// Re-certifies a stored result against the pattern echoed in its inputs.
int cmd_certify(const Options& o) {
  if (o.result_file.empty()) throw cyclogab::DomainError("--result <file> is required");
  const Json j = Json::parse(read_file(o.result_file));
  const auto result = cyclogab::json_io::result_from_json(j);
  const Json& inputs = j.at("inputs");
  const auto spec = inputs.contains("pattern") ? cyclogab::json_io::spec_from_json(inputs.at("pattern")) : result.spec;
  cyclogab::Certificate cert;
  if (inputs.value("command", "") == "subcode") {
    cert = cyclogab::certify_subcode(result, spec);
  } else {
    cert = cyclogab::certify_mrd(result, spec, o.check_minors.value_or(spec.n() <= cyclogab::kDefaultMinorSweepMaxColumns));
  }
  std::cout << render(with_inputs_hash(cyclogab::json_io::to_json(cert), inputs));
  return cert.passed() ? kExitOk : kExitNegative;
}

// All 216 families of three 2-subsets of {1,2,3,4}.
int oracle_sweep(const Options& o) {
  const auto mode = cyclogab::parse_oracle_mode(o.mode);
  std::vector<cyclogab::ColumnSet> pairs;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) pairs.push_back({a, b});
  }
  std::size_t agree = 0, both_true = 0, both_false = 0;
  Json disagreements = Json::array();
  for (const auto& z1 : pairs) {
    for (const auto& z2 : pairs) {
      for (const auto& z3 : pairs) {
        const cyclogab::SupportSpec spec(4, 3, {z1, z2, z3});
        const bool cond = cyclogab::check_condition(spec).holds;
        const bool det = cyclogab::det_p_is_nonzero(spec, mode, o.seed).nonzero;
        if (cond == det) {
          ++agree;
          (cond ? both_true : both_false) += 1;
        } else {
          disagreements.push_back(cyclogab::json_io::to_json(spec));
        }
      }
    }
  }
  const std::size_t total = pairs.size() * pairs.size() * pairs.size();
  std::cout << render(Json{{"families", total},
                           {"mode", cyclogab::to_string(mode)},
                           {"agree", agree},
                           {"condition_true_det_nonzero", both_true},
                           {"condition_false_det_zero", both_false},
                           {"disagreements", disagreements}});
  return agree == total ? kExitOk : kExitNegative;
}

int cmd_oracle(const Options& o) {
  if (o.sweep) return oracle_sweep(o);
  auto spec = load_spec(o);
  const auto report = cyclogab::check_condition(spec);
  const bool condition = report.holds;
  // The oracle needs |Z_i| = k-1; completion exists only when the condition holds.
  if (!spec.is_complete()) {
    if (!condition) {
      std::cout << render(Json{{"condition", false},
                               {"det_p_nonzero", nullptr},
                               {"mode", o.mode},
                               {"note", "pattern cannot be completed; det P is zero for every completion"}});
      return kExitNegative;
    }
    spec = cyclogab::complete_sets(spec);
  }
  const auto r = cyclogab::det_p_is_nonzero(spec, cyclogab::parse_oracle_mode(o.mode), o.seed);
  Json out = cyclogab::json_io::oracle_report_json(condition, r);
  out["completed_pattern"] = cyclogab::json_io::to_json(spec);
  std::cout << render(out);
  return r.nonzero ? kExitOk : kExitNegative;
}

int cmd_bound(const Options& o) {
  if (!o.n || !o.k || o.epsilon.empty()) throw cyclogab::DomainError("bound needs --n, --k and --epsilon");
  const auto s = cyclogab::required_sample_size(*o.n, *o.k, cyclogab::parse_decimal(o.epsilon));
  std::cout << render(Json{{"n", *o.n}, {"k", *o.k}, {"epsilon", o.epsilon}, {"s_size", s}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabidulin codes with prescribed zeros over Q(zeta_p)"};
  app.require_subcommand(1);
  Options o;

  auto add_pattern = [&](CLI::App* sub) {
    sub->add_option("--zeros", o.zeros_file, "JSON zero pattern, 1-based columns");
    sub->add_option("--n", o.n, "code length");
    sub->add_option("--k", o.k, "code dimension");
  };
  auto add_construction = [&](CLI::App* sub) {
    add_pattern(sub);
    sub->add_option("--prime", o.prime, "odd prime p; the field is Q(zeta_p)")->required();
    sub->add_option("--epsilon", o.epsilon, "target failure probability, exact decimal");
    sub->add_option("--s-size", o.s_size, "sample set size |S|");
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--max-retries", o.max_retries, "redraws after the first attempt");
    sub->add_option("--out", o.out_dir, "directory for result.json and certificate.json");
  };

  auto* check = app.add_subcommand("check", "test the intersection condition and report ell");
  add_pattern(check);
  auto* construct = app.add_subcommand("construct", "build and certify a generator matrix");
  add_construction(construct);
  construct->add_flag("--check-minors,!--no-check-minors", o.check_minors, "run the maximal-minor sweep");
  auto* subcode = app.add_subcommand("subcode", "best subcode for a violating pattern");
  add_construction(subcode);
  auto* certify = app.add_subcommand("certify", "re-certify a stored result.json");
  certify->add_option("--result", o.result_file, "result.json to check")->required();
  certify->add_flag("--check-minors,!--no-check-minors", o.check_minors, "run the maximal-minor sweep");
  auto* oracle = app.add_subcommand("oracle", "GM-MDS determinant test");
  add_pattern(oracle);
  oracle->add_option("--mode", o.mode, "symbolic or randomized");
  oracle->add_option("--seed", o.seed, "seed for randomized mode");
  oracle->add_flag("--sweep", o.sweep, "agreement table over all three 2-subsets of [4]");
  auto* bound = app.add_subcommand("bound", "sample set size for a failure probability");
  bound->add_option("--n", o.n)->required();
  bound->add_option("--k", o.k)->required();
  bound->add_option("--epsilon", o.epsilon)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (construct->parsed()) return cmd_construct(o);
    if (subcode->parsed()) return cmd_subcode(o);
    if (certify->parsed()) return cmd_certify(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (bound->parsed()) return cmd_bound(o);
  } catch (const cyclogab::RetriesExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const cyclogab::ConditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const cyclogab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
