#pragma once

#include <map>
#include <optional>
#include <string>

#include "dlcodes/bundle_codes.hpp"

namespace dlcodes::mindist {

inline constexpr long long kDefaultBudget = 1LL << 24;

struct WeightReport {
    std::string method;      // "exhaustive" or "sampled"
    long long min_weight = 0;
    std::optional<std::map<long long, long long>> distribution;  // weight -> codeword count
    long long samples = 0;   // sampled method only
    long long enumerated = 0;  // projective representatives visited (exhaustive)
    std::optional<std::pair<long long, bool>> verified_bound;  // (bound, min_weight >= bound)
};

/// Number of projective message representatives (q^k - 1)/(q - 1), clamped
/// to LLONG_MAX on overflow.
long long representative_count(long long q, int k);

/// Exact minimum Hamming weight over the nonzero codewords, by Gray-code
/// enumeration of one representative per scalar class (one scaled row
/// addition per step).  Throws BudgetExceeded when the representative count
/// exceeds the budget.  The optional distribution covers all q^k codewords.
WeightReport exact_min_distance(const bundle_codes::LinearCode& code,
                                long long budget = kDefaultBudget,
                                bool want_distribution = false);

/// Minimum weight over `trials` pseudo-random nonzero codewords: an upper
/// bound on the distance, plus a falsification check against an optional
/// claimed lower bound.  Deterministic for a given seed; the generator is
/// std::mt19937_64 with unbiased rejection sampling of message digits.
WeightReport sampled_min_weight(const bundle_codes::LinearCode& code, long long trials,
                                uint64_t seed,
                                std::optional<long long> claimed_lower = std::nullopt);

struct VerifyEvidence {
    bool pass = false;
    WeightReport report;
};

/// Checks the claimed lower bound with the exact method when in budget,
/// falling back to sampled falsification.
VerifyEvidence verify_bound(const bundle_codes::LinearCode& code, long long d_lower,
                            long long budget = kDefaultBudget, long long trials = 1000,
                            uint64_t seed = 0xD15EA5E);

}  // namespace dlcodes::mindist
