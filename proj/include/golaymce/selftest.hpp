#pragma once

// Built-in invariant suite: codeword census, self-duality, exhaustive
// correction radius, detection sampling, oracle equivalence, a multi-key
// round-trip battery, and keygen telemetry.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "golaymce/gf2.hpp"
#include "golaymce/mceliece.hpp"

namespace golaymce {

struct CheckResult {
    std::string name;
    bool pass = false;
    double millis = 0.0;
    std::string detail;  // failure description or a short note
};

/// Raw keygen-attempt statistics for one permutation-sampling mode.
struct TelemetrySample {
    std::size_t draws = 0;
    std::size_t systematization_failures = 0;
    std::size_t systematized = 0;
    std::size_t certification_failures = 0;  // among systematized draws
};

struct SelftestOptions {
    std::uint64_t seed = 0x676F6C617924ull;
    std::size_t battery_keys = 20;
    std::size_t battery_messages = 100;
    std::size_t detection_samples = 10000;
    std::size_t telemetry_draws = 200;
    /// Test hook: run the battery against a codec whose embedded block A
    /// has one flipped bit, to prove the checks are sensitive.
    bool corrupt_block_a = false;
};

struct SelftestReport {
    std::vector<CheckResult> checks;
    std::string leader_census_line;  // e.g. "0:1 1:24 2:276 3:2024 4:1771"
    TelemetrySample structured;
    TelemetrySample uniform;

    bool all_pass() const;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

/// Raw keygen attempts (no retry loop): how often systematization fails,
/// and how often a systematized draw fails decoder certification.
TelemetrySample measure_keygen_telemetry(PermutationSampling sampling,
                                         std::size_t draws, std::uint64_t seed);

/// PASS/FAIL table with timings, the leader-weight census line, and the
/// measured resampling fractions.
void print_report(std::ostream& out, const SelftestReport& report);

}  // namespace golaymce
