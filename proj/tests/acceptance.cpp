// Acceptance suite: one check per criterion, each printed as a PASS/FAIL
// line with its runtime and held to the stated budget. Pass --cli <path>
// to exercise the real binary for the file-level round trip (ctest does).

#include <bit>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "golaymce/fileops.hpp"
#include "golaymce/golay.hpp"
#include "golaymce/keyio.hpp"
#include "golaymce/mceliece.hpp"
#include "golaymce/oracle.hpp"
#include "golaymce/selftest.hpp"

namespace {

using namespace golaymce;
namespace fs = std::filesystem;

constexpr std::uint64_t acceptance_seed = 20240812;

struct Outcome {
    bool pass = true;
    std::string detail;
};

bool run_criterion(int number, const std::string& name, double budget_ms,
                   const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& ex) {
        outcome.pass = false;
        outcome.detail = ex.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (outcome.pass && ms > budget_ms) {
        outcome.pass = false;
        outcome.detail = "exceeded the " + std::to_string(budget_ms) + " ms budget";
    }
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << number << ": "
              << name << "  (" << ms << " ms)";
    if (!outcome.detail.empty())
        std::cout << "  -- " << outcome.detail;
    std::cout << std::endl;
    return outcome.pass;
}

Outcome fail(std::string detail)
{
    return Outcome{false, std::move(detail)};
}

const std::map<std::size_t, std::size_t> golay_histogram{
    {0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
const std::map<std::size_t, std::size_t> leader_histogram{
    {0, 1}, {1, 24}, {2, 276}, {3, 2024}, {4, 1771}};

Outcome criterion_code_parameters()
{
    const GolayCodec codec = canonical_codec();

    // route one: message-space iteration
    std::set<std::uint64_t> by_messages;
    std::map<std::size_t, std::size_t> histogram;
    std::size_t min_weight = 24;
    for (const auto& w : enumerate_codewords(codec.gen)) {
        by_messages.insert(w.to_uint());
        ++histogram[w.weight()];
        if (!w.is_zero())
            min_weight = std::min(min_weight, w.weight());
        if (w.weight() % 4 != 0)
            return fail("codeword weight not a multiple of 4");
    }

    // route two: Gray-code row-combination iteration
    std::set<std::uint64_t> by_rows;
    BitVector acc(24);
    by_rows.insert(acc.to_uint());
    for (std::uint32_t i = 1; i < 4096; ++i) {
        acc ^= codec.gen.row(static_cast<std::size_t>(std::countr_zero(i)));
        by_rows.insert(acc.to_uint());
    }

    if (by_messages.size() != 4096)
        return fail("message-space route found " + std::to_string(by_messages.size()) +
                    " codewords");
    if (by_rows != by_messages)
        return fail("the two enumeration routes disagree");
    if (min_weight != 8)
        return fail("minimum nonzero weight is " + std::to_string(min_weight));
    if (histogram != golay_histogram)
        return fail("weight histogram mismatch");
    return {};
}

Outcome criterion_self_duality()
{
    const GolayCodec codec = canonical_codec();
    const BitMatrix h = codec.parity_check();
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            if (dot(codec.gen.row(i), codec.gen.row(j)))
                return fail("G*Gt != 0");
            if (dot(codec.gen.row(i), h.row(j)))
                return fail("G*Ht != 0");
        }
    if (codec.block_a != codec.block_a.transposed())
        return fail("A != At");
    if (!(codec.block_a * codec.block_a.transposed()).is_identity())
        return fail("A*At != I12");
    return {};
}

Outcome criterion_correction_radius()
{
    const auto patterns = vectors_of_weight_up_to(24, 3);
    if (patterns.size() != 2325)
        return fail("expected 2325 patterns");

    const GolayCodec codec = canonical_codec();
    const BitVector canonical_word = encode(BitVector::from_string("101101001011"), codec);
    for (const auto& e : patterns) {
        auto decoded = decode_error(canonical_word ^ e, codec.gen);
        if (!decoded || *decoded != e)
            return fail("canonical codec failed on " + e.to_string());
    }

    Rng rng(acceptance_seed);
    for (int key = 0; key < 20; ++key) {
        const KeyPair pair = keygen(rng);
        const BitVector word =
            BitVector::from_string("110010011101") * pair.pub.g_m;
        for (const auto& e : patterns) {
            auto decoded = decode_error(word ^ e, pair.priv.g2);
            if (!decoded || *decoded != e)
                return fail("key " + std::to_string(key) + " failed on " +
                            e.to_string());
        }
    }
    return {};
}

Outcome criterion_detection()
{
    const GolayCodec codec = canonical_codec();
    Rng rng(acceptance_seed + 1);
    for (int i = 0; i < 10000; ++i) {
        const BitVector m = BitVector::from_uint(rng.next_u64(), 12);
        const BitVector e = random_error_vector(rng, 1 + rng.below(7));
        if (syndrome(encode(m, codec) ^ e, codec.gen).is_zero())
            return fail("a weight-" + std::to_string(e.weight()) +
                        " error produced a zero syndrome");
    }
    return {};
}

Outcome criterion_oracle_equivalence()
{
    const GolayCodec codec = canonical_codec();
    const CosetTable table = build_coset_table(codec.gen);
    if (table.weight_census() != leader_histogram)
        return fail("coset-leader census mismatch");

    std::size_t retransmissions = 0;
    for (const auto& leader : table.leaders) {
        auto decoded = decode_error(leader, codec.gen);
        if (leader.weight() <= 3) {
            if (!decoded || *decoded != ml_decode(leader, table))
                return fail("fast path disagrees with ml_decode on " +
                            leader.to_string());
        } else {
            if (decoded)
                return fail("expected retransmission on " + leader.to_string());
            ++retransmissions;
        }
    }
    if (retransmissions != 1771)
        return fail("retransmission count " + std::to_string(retransmissions));
    return {};
}

bool run_cli(const std::string& command)
{
    return std::system(command.c_str()) == 0;
}

Outcome cli_file_round_trip(const std::string& cli)
{
    const fs::path dir =
        fs::temp_directory_path() /
        ("golaymce-acceptance-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    const std::string pub = (dir / "key.pub").string();
    const std::string priv = (dir / "key.priv").string();
    const std::string plain = (dir / "plain.bin").string();
    const std::string ct = (dir / "data.ct").string();
    const std::string back = (dir / "back.bin").string();

    std::vector<char> payload(1024);
    std::mt19937_64 gen(acceptance_seed);
    for (auto& b : payload)
        b = static_cast<char>(gen() & 0xFF);
    {
        std::ofstream out(plain, std::ios::binary);
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    }

    Outcome outcome;
    if (!run_cli(cli + " keygen --seed 424242 --pub " + pub + " --priv " + priv +
                 " > /dev/null"))
        outcome = fail("cli keygen failed");
    else if (!run_cli(cli + " encrypt --pub " + pub + " --in " + plain + " --out " +
                      ct + " --seed 99 > /dev/null"))
        outcome = fail("cli encrypt failed");
    else if (!run_cli(cli + " decrypt --priv " + priv + " --in " + ct + " --out " +
                      back))
        outcome = fail("cli decrypt failed");
    else {
        std::ifstream in(back, std::ios::binary);
        std::vector<char> recovered((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
        if (recovered != payload)
            outcome = fail("file round trip is not byte-exact");
    }
    fs::remove_all(dir);
    return outcome;
}

Outcome criterion_end_to_end(const std::string& cli)
{
    Rng rng(acceptance_seed + 2);
    for (int key = 0; key < 20; ++key) {
        const KeyPair pair = keygen(rng);
        for (int i = 0; i < 1000; ++i) {
            const BitVector m = BitVector::from_uint(rng.next_u64(), 12);
            const Encrypted enc = encrypt(pair.pub, m, rng);
            auto back = decrypt(pair.priv, enc.ciphertext);
            if (!back || *back != m)
                return fail("round trip failed at key " + std::to_string(key));
        }
    }

    if (!cli.empty())
        return cli_file_round_trip(cli);

    // no binary supplied: drive the same file pipeline in-process
    Rng file_rng(acceptance_seed + 3);
    const KeyPair pair = keygen(file_rng);
    std::vector<std::uint8_t> payload(1024);
    for (auto& b : payload)
        b = static_cast<std::uint8_t>(file_rng.below(256));
    const EncryptedFile enc = encrypt_bytes(pair.pub, payload, 99);
    if (decrypt_text(pair.priv, enc.text) != payload)
        return fail("library file round trip is not byte-exact");
    return Outcome{true, "library file path (pass --cli to drive the binary)"};
}

Outcome criterion_solve_consistency()
{
    Rng rng(acceptance_seed + 4);
    const KeyPair pair = keygen(rng);
    for (int i = 0; i < 10000; ++i) {
        const BitVector x = BitVector::from_uint(rng.next_u64(), 12);
        const BitVector y = x * pair.priv.g2;
        if (solve_message(pair.priv.g2, y) != solve_message_row_reduce(pair.priv.g2, y))
            return fail("solve routes disagree on " + y.to_string());
    }
    return {};
}

Outcome criterion_telemetry()
{
    const auto structured = measure_keygen_telemetry(PermutationSampling::structured,
                                                     200, acceptance_seed + 5);
    const auto uniform = measure_keygen_telemetry(PermutationSampling::uniform, 200,
                                                  acceptance_seed + 6);
    std::cout << "  resampling report (structured P): "
              << structured.systematization_failures << "/" << structured.draws
              << " systematization failures, " << structured.certification_failures
              << "/" << structured.systematized << " certification failures\n";
    std::cout << "  resampling report (uniform P):    "
              << uniform.systematization_failures << "/" << uniform.draws
              << " systematization failures, " << uniform.certification_failures
              << "/" << uniform.systematized << " certification failures\n";
    if (structured.draws != 200 || uniform.draws != 200)
        return fail("telemetry report not produced");

    // the keys keygen actually returns must always pass certification
    Rng rng(acceptance_seed + 7);
    for (int i = 0; i < 5; ++i) {
        const KeyPair pair = keygen(rng);
        if (pair.stats.certification_failures != 0 || !certify(pair.pub, pair.priv))
            return fail("a returned key was not certified");
    }
    return {};
}

}  // namespace

int main(int argc, char** argv)
{
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            cli = argv[i + 1];

    bool all = true;
    all &= run_criterion(1, "code parameters, dual-route census", 1000,
                         criterion_code_parameters);
    all &= run_criterion(2, "self-duality", 1000, criterion_self_duality);
    all &= run_criterion(3, "correction radius, canonical + 20 keys", 5000,
                         criterion_correction_radius);
    all &= run_criterion(4, "7-bit error detection", 5000, criterion_detection);
    all &= run_criterion(5, "oracle equivalence", 2000, criterion_oracle_equivalence);
    all &= run_criterion(6, "end-to-end experiment + file round trip", 10000,
                         [&] { return criterion_end_to_end(cli); });
    all &= run_criterion(7, "message-solve route consistency", 5000,
                         criterion_solve_consistency);
    all &= run_criterion(8, "keygen certification telemetry", 30000,
                         criterion_telemetry);

    std::cout << (all ? "ACCEPTANCE: all criteria passed"
                      : "ACCEPTANCE: at least one criterion failed")
              << std::endl;
    return all ? 0 : 1;
}
