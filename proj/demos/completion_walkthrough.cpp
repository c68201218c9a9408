// Walkthrough: take a system that falls one pair short of reconstructing,
// measure the gap, repair it minimally, and certify the result. Prints every
// step, then shows the same flow for a complex tightness target.

#include <complex>
#include <cstdio>

#include "asf/asf.hpp"

using namespace asf;

int main() {
  const std::size_t d = 5;
  const Exponent p(2);
  const Tolerances tol;

  // A shift-built system: f_n reads coordinate n+1, tau_n writes it back.
  // Every vector reconstructs except along the first coordinate.
  const auto sys = example_one_system<double>(d, p);
  std::printf("shift-built system: dim %zu, %zu pairs, p = %g\n", sys.dim(),
              sys.size(), p.value());

  const auto s = frame_operator(sys);
  std::printf("frame operator diagonal:");
  for (std::size_t i = 0; i < d; ++i) std::printf(" %g", s(i, i));
  std::printf("\n");

  const auto before = classify(sys, tol);
  std::printf("classified: %s\n",
              before.is_asf ? "approximate Schauder frame"
                            : "not a frame (operator is singular)");

  // How many pairs must any 1-tight expansion add, and the minimal repair.
  const std::size_t bound = completion_lower_bound(sys, 1.0, tol);
  std::printf("lower bound for a 1-tight completion: %zu pair(s)\n", bound);

  const auto completion = minimal_tight_completion(sys, 1.0, tol);
  std::printf("minimal completion added %zu pair(s), residual %g\n",
              completion.count_added, completion.residual);
  for (const auto& pr : completion.added_pairs) {
    std::printf("  added f = [");
    for (std::size_t i = 0; i < d; ++i) std::printf(" %g", pr.f[i]);
    std::printf(" ], tau = [");
    for (std::size_t i = 0; i < d; ++i) std::printf(" %g", pr.tau[i]);
    std::printf(" ]\n");
  }

  const auto after = classify(completion.expanded, tol);
  if (after.tight_lambda.has_value()) {
    std::printf("expanded system is tight with lambda = %g\n",
                *after.tight_lambda);
  }

  // Certified factorization: analysis into the coefficient space and
  // synthesis back compose to the identity, with operator norms attached.
  const auto cert = p_asf_expansion(sys, tol);
  std::printf("certificate: ||analysis|| = %g, ||synthesis|| = %g, "
              "factorization residual = %g, certified = %s\n",
              cert.analysis_norm, cert.synthesis_norm,
              cert.factorization_residual, cert.certified ? "yes" : "no");

  // The same machinery over the complex field, aiming at lambda = 0.5 + 0.5i.
  using Cx = std::complex<double>;
  const Cx lambda(0.5, 0.5);
  const auto noisy = random_system<Cx>(4, 9, p, /*seed=*/7);
  const std::size_t cx_bound = completion_lower_bound(noisy, lambda, tol);
  const auto cx_completion = minimal_tight_completion(noisy, lambda, tol);
  const auto cx_after = classify(cx_completion.expanded, tol);
  std::printf("complex target 0.5+0.5i: bound %zu, added %zu, residual %g\n",
              cx_bound, cx_completion.count_added, cx_completion.residual);
  if (cx_after.tight_lambda.has_value()) {
    std::printf("recovered lambda = %g + %gi\n", cx_after.tight_lambda->real(),
                cx_after.tight_lambda->imag());
  }

  // Reports serialize deterministically; this is the exchange format the
  // command-line tool emits.
  std::printf("\ncompletion report:\n%s\n",
              io::expansion_to_json(completion).c_str());
  return 0;
}
