#include "golaymce/keyio.hpp"

#include <charconv>

namespace golaymce {

namespace {

constexpr std::string_view public_magic = "GOLAY-MCELIECE PUBLIC v1";
constexpr std::string_view private_magic = "GOLAY-MCELIECE PRIVATE v1";
constexpr std::string_view ct_magic = "GOLAY-MCELIECE CT v1";
constexpr std::string_view fec_magic = "GOLAY-MCELIECE FEC v1";

/// Strict cursor over newline-terminated lines.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::size_t line_number() const noexcept { return line_; }

    /// Next line without its '\n'; the newline itself is mandatory.
    std::string_view next_line()
    {
        if (pos_ >= text_.size())
            throw ParseError(line_, 1, "unexpected end of file");
        const std::size_t nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos)
            throw ParseError(line_, text_.size() - pos_ + 1,
                             "missing trailing newline");
        std::string_view line = text_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        ++line_;
        return line;
    }

    void expect_literal(std::string_view expected, const std::string& what)
    {
        const std::size_t at = line_;
        const std::string_view line = next_line();
        if (line != expected) {
            std::size_t col = 1;
            while (col <= line.size() && col <= expected.size() &&
                   line[col - 1] == expected[col - 1])
                ++col;
            throw ParseError(at, col, "expected " + what);
        }
    }

    BitVector expect_bits(std::size_t width)
    {
        const std::size_t at = line_;
        const std::string_view line = next_line();
        if (line.size() != width)
            throw ParseError(at, line.size() + 1,
                             "expected a row of " + std::to_string(width) + " bits");
        for (std::size_t i = 0; i < line.size(); ++i)
            if (line[i] != '0' && line[i] != '1')
                throw ParseError(at, i + 1, "expected '0' or '1'");
        return BitVector::from_string(line);
    }

    BitMatrix expect_matrix(std::size_t rows, std::size_t cols)
    {
        std::vector<BitVector> out;
        out.reserve(rows);
        for (std::size_t r = 0; r < rows; ++r)
            out.push_back(expect_bits(cols));
        return BitMatrix::from_rows(std::move(out));
    }

    void expect_end()
    {
        if (pos_ < text_.size())
            throw ParseError(line_, 1, "unexpected trailing data");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

std::uint64_t expect_bits_header(LineReader& reader)
{
    const std::size_t at = reader.line_number();
    const std::string_view line = reader.next_line();
    constexpr std::string_view prefix = "bits=";
    if (!line.starts_with(prefix))
        throw ParseError(at, 1, "expected bits=<count>");
    const std::string_view digits = line.substr(prefix.size());
    std::uint64_t value = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
        throw ParseError(at, prefix.size() + 1, "expected an unsigned bit count");
    return value;
}

std::size_t block_count_for(std::uint64_t bit_count)
{
    return static_cast<std::size_t>((bit_count + 11) / 12);
}

std::string write_block_file(std::string_view magic, const BlockFile& file)
{
    std::string out;
    out += magic;
    out += "\nbits=";
    out += std::to_string(file.bit_count);
    out += '\n';
    for (const auto& block : file.blocks) {
        out += block.to_string();
        out += '\n';
    }
    return out;
}

BlockFile parse_block_file(std::string_view magic, const std::string& what,
                           std::string_view text)
{
    LineReader reader(text);
    reader.expect_literal(magic, what);
    BlockFile file;
    file.bit_count = expect_bits_header(reader);
    // every block costs 25 bytes of file, so an oversized count can be
    // rejected before any allocation
    if (file.bit_count / 12 > text.size() / 25 + 1)
        throw ParseError(2, 6, "bit count exceeds the file size");
    const std::size_t count = block_count_for(file.bit_count);
    file.blocks.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        file.blocks.push_back(reader.expect_bits(24));
    reader.expect_end();
    return file;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

KeyKind detect_key_kind(std::string_view text)
{
    LineReader reader(text);
    const std::string_view line = reader.next_line();
    if (line == public_magic)
        return KeyKind::public_key;
    if (line == private_magic)
        return KeyKind::private_key;
    throw ParseError(1, 1, "not a GOLAY-MCELIECE key file");
}

std::string write_public_key(const PublicKey& pub)
{
    std::string out;
    out += public_magic;
    out += "\nt=3\n";
    out += pub.g_m.to_string();
    return out;
}

std::string write_private_key(const PrivateKey& priv)
{
    std::string out;
    out += private_magic;
    out += "\nt=3\n";
    out += priv.s.to_string();
    out += '\n';
    out += priv.g2.to_string();
    out += '\n';
    out += priv.p.to_string();
    return out;
}

PublicKey parse_public_key(std::string_view text)
{
    LineReader reader(text);
    reader.expect_literal(public_magic, "the public key magic line");
    reader.expect_literal("t=3", "t=3");
    PublicKey pub{reader.expect_matrix(12, 24), 3};
    reader.expect_end();
    return pub;
}

PrivateKey parse_private_key(std::string_view text)
{
    LineReader reader(text);
    reader.expect_literal(private_magic, "the private key magic line");
    reader.expect_literal("t=3", "t=3");
    const std::size_t s_line = reader.line_number();
    BitMatrix s = reader.expect_matrix(12, 12);
    reader.expect_literal("", "a blank separator line");
    BitMatrix g2 = reader.expect_matrix(12, 24);
    reader.expect_literal("", "a blank separator line");
    BitMatrix p = reader.expect_matrix(24, 24);
    reader.expect_end();

    auto s_inv = s.inverse();
    if (!s_inv)
        throw ParseError(s_line, 1, "scrambler S is not invertible");
    return PrivateKey{std::move(s), std::move(*s_inv), std::move(g2), std::move(p)};
}

std::string write_ciphertext(const BlockFile& file)
{
    return write_block_file(ct_magic, file);
}

BlockFile parse_ciphertext(std::string_view text)
{
    return parse_block_file(ct_magic, "the ciphertext magic line", text);
}

std::string write_fec(const BlockFile& file)
{
    return write_block_file(fec_magic, file);
}

BlockFile parse_fec(std::string_view text)
{
    return parse_block_file(fec_magic, "the FEC magic line", text);
}

}  // namespace golaymce
