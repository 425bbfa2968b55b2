#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "octobil/bilinear_map.hpp"
#include "octobil/report.hpp"

namespace octobil {

/// Default seed used by the CLI when --seed is omitted.
inline constexpr uint64_t kDefaultSeed = 0xC0DA;

enum class Side { Left, Right };
enum class WitnessStrategy { Diagonal, Random, RandomizedKernel };

/// Thread count for trial-parallel campaigns: OCTOBIL_THREADS if set, else
/// hardware concurrency. Results never depend on it.
int verification_threads();

/// Samples x, y with integer coordinates uniform in [-bound, bound]
/// (all-zero vectors resampled) and records every pair with an exactly zero
/// image. Passes iff no failures. Fuzzing cannot prove nonsingularity; a pass
/// means no counterexample under this budget.
VerificationReport fuzz_nonsingularity(const BilinearMap& map, uint64_t trials, uint64_t seed,
                                       int64_t bound, int threads = 0);

/// Exact rank of the fixed-argument matrix at sampled nonzero points; a pass
/// requires full rank (s for Left, r for Right) at every sample. Rank-deficient
/// samples are reported with an exact kernel witness pair.
VerificationReport rank_profile(const BilinearMap& map, Side side, uint64_t samples, uint64_t seed,
                                int64_t bound, int threads = 0);

/// Searches for nonzero (x, y) with f(x, y) = 0. Absence of a witness within
/// the budget is a valid outcome.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> find_kernel_pair(
    const BilinearMap& map, WitnessStrategy strategy, uint64_t budget, uint64_t seed = kDefaultSeed,
    int64_t bound = 5);

/// find_kernel_pair as a report; a found witness is recorded as a failure.
VerificationReport witness_report(const BilinearMap& map, WitnessStrategy strategy, uint64_t budget,
                                  uint64_t seed = kDefaultSeed, int64_t bound = 5);

/// Samples exact pairs and fails if any image value is a nonzero multiple of
/// z. For poly_mul(2,2) (or intro_f_deg1) with z = (1,0,1) the exact sign
/// check also runs: whenever output coords 0 and 2 are positive, coord 1 must
/// be nonzero.
VerificationReport verify_not_in_image(const BilinearMap& map, const std::vector<Rational>& z,
                                       uint64_t trials, uint64_t seed, int64_t bound,
                                       int threads = 0);

/// Floating-point upper bound on the nonsingularity margin
/// min{|f(x,y)| : |x| = |y| = 1} by alternating least-singular-vector descent
/// from seeded random unit starts. Deterministic for fixed inputs.
VerificationReport margin_estimate(const BilinearMap& map, int restarts, int max_iters, double tol,
                                   uint64_t seed = kDefaultSeed, int threads = 0);

}  // namespace octobil
