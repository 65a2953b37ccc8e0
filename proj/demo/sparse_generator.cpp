// Builds a 3 x 6 generator over Q(zeta_11) with two prescribed zeros per row
// and prints it together with its certificate.

#include <iostream>

#include "cyclogab/cyclogab.hpp"

int main() {
  using namespace cyclogab;
  auto ctx = make_context(11);
  const SupportSpec spec(6, 3, {{0, 1}, {2, 3}, {4, 5}});

  const auto check = check_condition(spec);
  std::cout << "condition holds: " << std::boolalpha << check.holds << "\n";

  const auto s_size = required_sample_size(spec.n(), spec.k(), Rational(1, 100));
  const auto result = construct(spec, ctx, s_size, /*seed=*/1);
  std::cout << "|S| = " << s_size << ", retries = " << result.retries << "\n\nG =\n";
  for (std::size_t i = 0; i < result.g.rows(); ++i) {
    for (std::size_t j = 0; j < result.g.cols(); ++j) std::cout << "  [" << j + 1 << "] " << result.g(i, j) << "\n";
    std::cout << "\n";
  }

  const auto cert = certify_mrd(result, spec, true);
  std::cout << "hamming distance " << *cert.hamming_distance << ", rank distance " << *cert.claimed_rank_distance
            << " (" << cert.rank_distance_basis << "), passed " << cert.passed() << "\n";
  return cert.passed() ? 0 : 1;
}
