#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sublat/oracle.hpp"
#include "sublat/rational.hpp"
#include "sublat/report.hpp"

namespace sublat {

// Theorem verification sweeps over parameter ranges. Each runs its
// checks over every applicable type within the bounds and reports one
// CheckResult per item, failures carrying witnesses. `progress`, when
// set, receives one line per unit of work.
using ProgressFn = std::function<void(const std::string&)>;

// s_k = 1 (mod p) for 0 < k < n, every type.
VerificationReport suite_congruence(const std::vector<Int>& ps, unsigned n_max,
                                    const ProgressFn& progress = {});

// s_k = 1 + p (mod p^2) for 0 < k < n, odd primes, non-cyclic types.
VerificationReport suite_congruence2(const std::vector<Int>& ps, unsigned n_max,
                                     const ProgressFn& progress = {});

// s_k = s_{n-k} as polynomials in p; prime-independent.
VerificationReport suite_duality(unsigned n_max, const ProgressFn& progress = {});

// s_k - s_{k-1} has non-negative coefficients up to the middle.
VerificationReport suite_unimodal(unsigned n_max, const ProgressFn& progress = {});

// Strict decrease of beta along rank-2 types, both routes compared.
VerificationReport suite_rank2mono(const std::vector<Int>& ps, unsigned n_max,
                                   const ProgressFn& progress = {});

// Second-minimum classification for 3 <= n <= n_max.
VerificationReport suite_secondmin(const std::vector<Int>& ps, unsigned n_max,
                                   const ProgressFn& progress = {});

// Third-minimum classification for odd p, 4 <= n <= n_max.
VerificationReport suite_thirdmin(const std::vector<Int>& ps, unsigned n_max,
                                  const ProgressFn& progress = {});

// Exhaustive hereditary beta <= 1 against the rank/prime classification.
VerificationReport suite_hereditary(const std::vector<Int>& ps, unsigned n_max,
                                    const ProgressFn& progress = {});

// Image-size classification (|Im beta| = 1 and 2 cases).
VerificationReport suite_image(const std::vector<Int>& ps, unsigned n_max,
                               const ProgressFn& progress = {});

// s_{n-1} = (p^rank - 1)/(p - 1) for every type.
VerificationReport suite_frattini(const std::vector<Int>& ps, unsigned n_max,
                                  const ProgressFn& progress = {});

// Formula-vs-enumeration ground truth for all types with p^n <= order
// cap. Types whose predicted lattice size exceeds the subgroup cap are
// reported as skipped. `threads` > 1 enumerates types concurrently;
// the report order is deterministic either way.
VerificationReport suite_oracle(const std::vector<Int>& ps, const OracleLimits& limits,
                                unsigned threads = 1, const ProgressFn& progress = {});

}  // namespace sublat
