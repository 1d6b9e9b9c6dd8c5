#pragma once

// Line-oriented text serialization for keys, ciphertexts, and plain-FEC
// containers. The grammar is exact: '0'/'1' rows of fixed width, a required
// trailing newline, and any other byte is a parse error carrying line and
// column.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "golaymce/mceliece.hpp"

namespace golaymce {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class KeyKind { public_key, private_key };

/// Peeks at the first line; throws ParseError for an unknown magic.
KeyKind detect_key_kind(std::string_view text);

std::string write_public_key(const PublicKey& pub);
std::string write_private_key(const PrivateKey& priv);
PublicKey parse_public_key(std::string_view text);
/// Recomputes S^-1; a singular S is a ParseError at the S block.
PrivateKey parse_private_key(std::string_view text);

/// Framed 24-bit blocks with the original bit length recorded in the
/// header; shared by ciphertext ("CT") and plain-FEC ("FEC") files.
struct BlockFile {
    std::uint64_t bit_count = 0;
    std::vector<BitVector> blocks;  // ceil(bit_count / 12) entries, 24 bits each
};

std::string write_ciphertext(const BlockFile& file);
BlockFile parse_ciphertext(std::string_view text);

std::string write_fec(const BlockFile& file);
BlockFile parse_fec(std::string_view text);

}  // namespace golaymce
