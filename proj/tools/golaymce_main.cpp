// Command-line front end: key generation, encryption, decryption, plain
// Golay FEC, the built-in selftest, key inspection, and the coset-table dump.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "golaymce/fileops.hpp"
#include "golaymce/golay.hpp"
#include "golaymce/keyio.hpp"
#include "golaymce/mceliece.hpp"
#include "golaymce/oracle.hpp"
#include "golaymce/selftest.hpp"

namespace {

using namespace golaymce;

std::vector<std::uint8_t> read_file_bytes(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(path + ": cannot open for reading");
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad())
        throw std::runtime_error(path + ": read failed");
    return data;
}

std::string read_file_text(const std::string& path)
{
    auto bytes = read_file_bytes(path);
    return std::string(bytes.begin(), bytes.end());
}

void write_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes)
{
    write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                      bytes.size()));
}

std::uint64_t seed_or_entropy(const std::optional<std::uint64_t>& seed)
{
    if (seed)
        return *seed;
    std::random_device dev;
    return (std::uint64_t{dev()} << 32) | dev();
}

int cmd_keygen(const std::optional<std::uint64_t>& seed_opt, const std::string& pub_path,
               const std::string& priv_path)
{
    const std::uint64_t seed = seed_or_entropy(seed_opt);
    Rng rng(seed);
    const KeyPair pair = keygen(rng);
    write_file(pub_path, write_public_key(pair.pub));
    write_file(priv_path, write_private_key(pair.priv));
    std::cout << "seed=" << seed << '\n'
              << "attempts=" << pair.stats.attempts
              << " systematization_failures=" << pair.stats.systematization_failures
              << " certification_failures=" << pair.stats.certification_failures
              << '\n'
              << "certified: yes (2325/2325 error patterns)\n";
    return 0;
}

int cmd_encrypt(const std::string& pub_path, const std::string& in_path,
                const std::string& out_path, const std::optional<std::uint64_t>& seed_opt,
                bool audit)
{
    const PublicKey pub = parse_public_key(read_file_text(pub_path));
    const auto data = read_file_bytes(in_path);
    const std::uint64_t seed = seed_or_entropy(seed_opt);
    const EncryptedFile enc = encrypt_bytes(pub, data, seed);
    write_file(out_path, enc.text);
    std::cout << "seed=" << seed << " blocks=" << enc.block_errors.size() << '\n';

    std::size_t zero_blocks = 0;
    const MessageFraming framing = frame_bytes(data);
    for (const auto& block : framing.blocks)
        if (block.is_zero())
            ++zero_blocks;
    if (zero_blocks > 0)
        std::cerr << "note: " << zero_blocks
                  << " all-zero plaintext block(s); their ciphertexts equal the bare "
                     "error vectors\n";
    if (audit)
        for (std::size_t i = 0; i < enc.block_errors.size(); ++i)
            std::cerr << "block " << i << " error " << enc.block_errors[i].to_string()
                      << '\n';
    return 0;
}

int cmd_decrypt(const std::string& priv_path, const std::string& in_path,
                const std::string& out_path)
{
    const PrivateKey priv = parse_private_key(read_file_text(priv_path));
    write_file(out_path, decrypt_text(priv, read_file_text(in_path)));
    return 0;
}

int cmd_codec(const std::string& mode, const std::string& in_path,
              const std::string& out_path)
{
    if (mode == "encode") {
        write_file(out_path, fec_encode_bytes(read_file_bytes(in_path)));
        return 0;
    }
    const FecDecoded decoded = fec_decode_text(read_file_text(in_path));
    write_file(out_path, decoded.data);
    for (std::size_t i = 0; i < decoded.corrected_weights.size(); ++i)
        std::cerr << "block " << i << " corrected_weight="
                  << decoded.corrected_weights[i] << '\n';
    return 0;
}

int cmd_selftest(bool corrupt_a)
{
    SelftestOptions options;
    options.corrupt_block_a = corrupt_a;
    const SelftestReport report = run_selftest(options);
    print_report(std::cout, report);
    return report.all_pass() ? 0 : 1;
}

int cmd_inspect(const std::string& key_path, bool constants)
{
    if (constants) {
        std::cout << "block A (12x12):\n"
                  << golay_block_a().to_string() << "g1 (coefficients, constant first): "
                  << GeneratorPolynomial::g1().coeffs.to_string() << '\n'
                  << "g2 (coefficients, constant first): "
                  << GeneratorPolynomial::g2().coeffs.to_string() << '\n';
        if (key_path.empty())
            return 0;
    }
    const std::string text = read_file_text(key_path);
    if (detect_key_kind(text) == KeyKind::public_key) {
        const PublicKey pub = parse_public_key(text);
        std::cout << "type: public\n"
                  << "G_m: 12x24\n"
                  << "rank=" << pub.g_m.rank() << " t=" << pub.t << '\n';
        return 0;
    }
    const PrivateKey priv = parse_private_key(text);
    const bool self_dual = [&] {
        for (std::size_t i = 0; i < priv.g2.rows(); ++i)
            for (std::size_t j = i; j < priv.g2.rows(); ++j)
                if (dot(priv.g2.row(i), priv.g2.row(j)))
                    return false;
        return true;
    }();
    std::cout << "type: private\n"
              << "S: 12x12, G2: 12x24, P: 24x24\n"
              << "S invertible: yes, G2 self-dual: " << (self_dual ? "yes" : "no")
              << '\n'
              << "P is permutation: " << (priv.p.is_permutation() ? "yes" : "no")
              << '\n';
    const PublicKey pub{priv.s * priv.g2, GolayCodec::correctable};
    std::cout << "certified: " << (certify(pub, priv) ? "yes" : "no")
              << " (exhaustive weight<=3 battery)\n";
    return 0;
}

int cmd_dump_table(const std::optional<std::string>& out_path)
{
    const std::string table = dump_table(build_coset_table(canonical_codec().gen));
    if (out_path)
        write_file(*out_path, table);
    else
        std::cout << table;
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"McEliece cryptosystem over the extended binary Golay code "
                 "[24,12,8]. Teaching-scale: 12-bit messages are brute-forceable; "
                 "this is not a production cryptosystem."};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    std::string pub_path, priv_path, in_path, out_path, mode, key_path;
    bool audit = false;
    bool corrupt_a = false;
    std::optional<std::string> dump_out;

    auto* keygen_cmd = app.add_subcommand("keygen", "Generate a certified keypair");
    keygen_cmd->add_option("--seed", seed, "64-bit RNG seed (default: OS entropy)");
    keygen_cmd->add_option("--pub", pub_path, "public key output path")->required();
    keygen_cmd->add_option("--priv", priv_path, "private key output path")->required();

    auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a file blockwise");
    encrypt_cmd->add_option("--pub", pub_path, "public key path")->required();
    encrypt_cmd->add_option("--in", in_path, "plaintext input path")->required();
    encrypt_cmd->add_option("--out", out_path, "ciphertext output path")->required();
    encrypt_cmd->add_option("--seed", seed, "64-bit error-sampling seed");
    encrypt_cmd->add_flag("--audit", audit,
                          "emit per-block error vectors on standard error");

    auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
    decrypt_cmd->add_option("--priv", priv_path, "private key path")->required();
    decrypt_cmd->add_option("--in", in_path, "ciphertext input path")->required();
    decrypt_cmd->add_option("--out", out_path, "plaintext output path")->required();

    auto* codec_cmd =
        app.add_subcommand("codec", "Plain Golay FEC without cryptography");
    codec_cmd->add_option("mode", mode, "encode or decode")
        ->required()
        ->check(CLI::IsMember({"encode", "decode"}));
    codec_cmd->add_option("--in", in_path, "input path")->required();
    codec_cmd->add_option("--out", out_path, "output path")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite");
    selftest_cmd->add_flag("--corrupt-a", corrupt_a,
                           "test hook: flip one bit of the embedded block A");

    bool constants = false;
    auto* inspect_cmd = app.add_subcommand("inspect", "Describe a key file");
    inspect_cmd->add_option("keyfile", key_path, "key file path");
    inspect_cmd->add_flag("--constants", constants,
                          "print the embedded block A and generator polynomials");

    auto* dump_cmd =
        app.add_subcommand("dump-table", "Dump the canonical coset-leader table");
    dump_cmd->add_option("--out", dump_out, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (keygen_cmd->parsed())
            return cmd_keygen(seed, pub_path, priv_path);
        if (encrypt_cmd->parsed())
            return cmd_encrypt(pub_path, in_path, out_path, seed, audit);
        if (decrypt_cmd->parsed())
            return cmd_decrypt(priv_path, in_path, out_path);
        if (codec_cmd->parsed())
            return cmd_codec(mode, in_path, out_path);
        if (selftest_cmd->parsed())
            return cmd_selftest(corrupt_a);
        if (inspect_cmd->parsed()) {
            if (key_path.empty() && !constants) {
                std::cerr << "error: inspect needs a key file or --constants\n";
                return 1;
            }
            return cmd_inspect(key_path, constants);
        }
        if (dump_cmd->parsed())
            return cmd_dump_table(dump_out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
