#include "golaymce/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <set>

#include "golaymce/golay.hpp"
#include "golaymce/mceliece.hpp"
#include "golaymce/oracle.hpp"

namespace golaymce {

namespace {

using Clock = std::chrono::steady_clock;

std::string census_to_string(const std::map<std::size_t, std::size_t>& census)
{
    std::string out;
    for (const auto& [w, count] : census) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(w) + ":" + std::to_string(count);
    }
    return out;
}

/// Runs one named check, catching anything it throws.
CheckResult run_check(const std::string& name, const std::function<std::string()>& body)
{
    CheckResult result;
    result.name = name;
    const auto start = Clock::now();
    try {
        result.detail = body();  // empty string = pass
        result.pass = result.detail.empty();
    } catch (const std::exception& ex) {
        result.pass = false;
        result.detail = ex.what();
    }
    result.millis =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

std::string check_codeword_census(const GolayCodec& codec)
{
    const auto words = enumerate_codewords(codec.gen);
    std::set<std::uint64_t> distinct;
    std::map<std::size_t, std::size_t> histogram;
    for (const auto& w : words) {
        distinct.insert(w.to_uint());
        ++histogram[w.weight()];
    }
    if (distinct.size() != 4096)
        return "expected 4096 distinct codewords, got " + std::to_string(distinct.size());
    for (const auto& [w, count] : histogram)
        if (w % 4 != 0)
            return "weight " + std::to_string(w) + " is not a multiple of 4";
    const std::map<std::size_t, std::size_t> expected{
        {0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    if (histogram != expected)
        return "weight histogram mismatch: got " + census_to_string(histogram);
    if (min_distance(codec.gen) != 8)
        return "minimum distance is not 8";
    return {};
}

std::string check_self_duality(const GolayCodec& codec)
{
    if (!codec.self_dual())
        return "G*Gt != 0";
    const BitMatrix h = codec.parity_check();
    for (std::size_t i = 0; i < codec.gen.rows(); ++i)
        for (std::size_t j = 0; j < h.rows(); ++j)
            if (dot(codec.gen.row(i), h.row(j)))
                return "G*Ht != 0";
    if (codec.block_a != codec.block_a.transposed())
        return "A is not symmetric";
    if (!(codec.block_a * codec.block_a.transposed()).is_identity())
        return "A*At != I";
    return {};
}

std::string check_correction_radius(const GolayCodec& codec)
{
    // syndromes depend only on the error, so one codeword suffices
    for (const auto& e : vectors_of_weight_up_to(24, 3)) {
        auto decoded = decode_error(e, codec.gen);
        if (!decoded || *decoded != e)
            return "failed to recover error " + e.to_string();
    }
    return {};
}

std::string check_detection(const GolayCodec& codec, std::size_t samples,
                            std::uint64_t seed)
{
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const BitVector m = BitVector::from_uint(rng.next_u64(), 12);
        const BitVector e = random_error_vector(rng, 1 + rng.below(7));
        const BitVector c = encode(m, codec) ^ e;
        if (syndrome(c, codec.gen).is_zero())
            return "error " + e.to_string() + " was silently accepted";
    }
    return {};
}

std::string check_oracle_equivalence(const GolayCodec& codec, std::string& census_line)
{
    const CosetTable table = build_coset_table(codec.gen);
    const auto census = table.weight_census();
    census_line = census_to_string(census);
    const std::map<std::size_t, std::size_t> expected{
        {0, 1}, {1, 24}, {2, 276}, {3, 2024}, {4, 1771}};
    if (census != expected)
        return "leader weight census mismatch: got " + census_line;
    for (const auto& leader : table.leaders) {
        auto decoded = decode_error(leader, codec.gen);
        if (leader.weight() <= 3) {
            if (!decoded || *decoded != leader)
                return "fast decoder disagrees with the oracle on leader " +
                       leader.to_string();
        } else if (decoded) {
            return "expected retransmission for leader " + leader.to_string();
        }
    }
    return {};
}

std::string check_key_battery(std::size_t keys, std::size_t messages,
                              std::uint64_t seed)
{
    Rng rng(seed);
    for (std::size_t i = 0; i < keys; ++i) {
        const KeyPair pair = keygen(rng);
        if (pair.pub.g_m.rank() != 12)
            return "public key rank is not 12";
        if (pair.priv.s * pair.priv.g2 != pair.pub.g_m)
            return "G_m != S*G2";
        if (!(pair.priv.s * pair.priv.s_inv).is_identity())
            return "S*Sinv != I";
        if (!pair.priv.p.is_permutation())
            return "P is not a permutation";
        for (std::size_t j = 0; j < messages; ++j) {
            const BitVector m = BitVector::from_uint(rng.next_u64(), 12);
            const Encrypted enc = encrypt(pair.pub, m, rng);
            auto back = decrypt(pair.priv, enc.ciphertext);
            if (!back || *back != m)
                return "round trip failed for key " + std::to_string(i);
            // the two message-solve routes must agree
            const BitVector y1 = enc.ciphertext ^ enc.error;
            if (solve_message(pair.priv.g2, y1) !=
                solve_message_row_reduce(pair.priv.g2, y1))
                return "solve routes disagree for key " + std::to_string(i);
        }
    }
    return {};
}

}  // namespace

TelemetrySample measure_keygen_telemetry(PermutationSampling sampling,
                                         std::size_t draws, std::uint64_t seed)
{
    const GolayCodec codec = canonical_codec();
    const BitMatrix i12 = BitMatrix::identity(12);
    Rng rng(seed);
    TelemetrySample sample;
    sample.draws = draws;
    for (std::size_t i = 0; i < draws; ++i) {
        // one raw keygen attempt, S fixed to I (certification ignores S)
        const BitMatrix p = sampling == PermutationSampling::uniform
                                ? random_permutation(24, rng)
                                : structured_permutation(rng);
        auto sys = systematize(codec.gen * p);
        if (!sys) {
            ++sample.systematization_failures;
            continue;
        }
        ++sample.systematized;
        PublicKey pub{sys->result, GolayCodec::correctable};
        PrivateKey priv{i12, i12, std::move(sys->result), p};
        if (!certify(pub, priv))
            ++sample.certification_failures;
    }
    return sample;
}

bool SelftestReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

SelftestReport run_selftest(const SelftestOptions& options)
{
    GolayCodec codec = canonical_codec();
    if (options.corrupt_block_a) {
        BitMatrix a = golay_block_a();
        a.set(0, 0, !a.get(0, 0));
        codec = GolayCodec::from_block(std::move(a));
    }

    SelftestReport report;
    report.checks.push_back(run_check(
        "codeword census", [&] { return check_codeword_census(codec); }));
    report.checks.push_back(run_check(
        "self-duality", [&] { return check_self_duality(codec); }));
    report.checks.push_back(run_check(
        "correction radius (2325 patterns)",
        [&] { return check_correction_radius(codec); }));
    report.checks.push_back(run_check("7-bit error detection", [&] {
        return check_detection(codec, options.detection_samples, options.seed);
    }));
    report.checks.push_back(run_check("oracle equivalence", [&] {
        return check_oracle_equivalence(codec, report.leader_census_line);
    }));
    report.checks.push_back(run_check("key round-trip battery", [&] {
        return check_key_battery(options.battery_keys, options.battery_messages,
                                 options.seed + 1);
    }));
    report.structured = measure_keygen_telemetry(
        PermutationSampling::structured, options.telemetry_draws, options.seed + 2);
    report.uniform = measure_keygen_telemetry(PermutationSampling::uniform,
                                              options.telemetry_draws, options.seed + 3);
    report.checks.push_back(run_check("keygen telemetry", [&] {
        if (report.structured.draws == 0 || report.uniform.draws == 0)
            return std::string("no telemetry collected");
        return std::string{};
    }));
    return report;
}

void print_report(std::ostream& out, const SelftestReport& report)
{
    for (const auto& check : report.checks) {
        out << (check.pass ? "PASS" : "FAIL") << "  " << check.name << "  ("
            << check.millis << " ms)";
        if (!check.detail.empty())
            out << "  -- " << check.detail;
        out << '\n';
    }
    out << "leader weight census: " << report.leader_census_line << '\n';
    const auto print_sample = [&](const char* label, const TelemetrySample& s) {
        out << "telemetry (" << label << " P, " << s.draws
            << " raw draws): systematization failures " << s.systematization_failures;
        if (s.draws > 0)
            out << " (" << 100.0 * s.systematization_failures / s.draws << "%)";
        out << ", certification failures " << s.certification_failures << "/"
            << s.systematized << " systematized";
        if (s.systematized > 0)
            out << " (" << 100.0 * s.certification_failures / s.systematized << "%)";
        out << '\n';
    };
    print_sample("structured", report.structured);
    print_sample("uniform", report.uniform);
    out << (report.all_pass() ? "ALL CHECKS PASSED" : "SELFTEST FAILED") << '\n';
}

}  // namespace golaymce
