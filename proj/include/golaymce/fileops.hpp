#pragma once

// Byte-stream framing into 12-bit message blocks and the file-level
// encrypt / decrypt / plain-FEC operations behind the CLI.

#include <cstdint>
#include <span>
#include <vector>

#include "golaymce/keyio.hpp"
#include "golaymce/mceliece.hpp"

namespace golaymce {

/// A byte stream split into 12-bit blocks. Bit k of the stream is bit
/// (7 - k%8) of byte k/8 (most significant bit first); the final block is
/// zero-padded and the exact bit length is kept alongside.
struct MessageFraming {
    std::uint64_t bit_count = 0;
    std::vector<BitVector> blocks;  // 12 bits each
};

MessageFraming frame_bytes(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> unframe(const MessageFraming& framing);

/// Raised when one 24-bit block cannot be decoded; carries the block index
/// for the operator-facing diagnostic.
class BlockDecodeFailure : public std::runtime_error {
public:
    explicit BlockDecodeFailure(std::size_t block_index);
    std::size_t block_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

struct EncryptedFile {
    std::string text;                     // serialized ciphertext file
    std::vector<BitVector> block_errors;  // audit trail, one per block
};

/// Encrypts each 12-bit block with an independent exact-weight-3 error;
/// block i draws from derive_seed(master_seed, i).
EncryptedFile encrypt_bytes(const PublicKey& pub, std::span<const std::uint8_t> data,
                            std::uint64_t master_seed);

/// Parses and decrypts a ciphertext file; throws ParseError on bad syntax
/// and BlockDecodeFailure when a block requests retransmission.
std::vector<std::uint8_t> decrypt_text(const PrivateKey& priv, std::string_view ct_text);

/// Plain Golay FEC (canonical codec, no errors added).
std::string fec_encode_bytes(std::span<const std::uint8_t> data);

struct FecDecoded {
    std::vector<std::uint8_t> data;
    std::vector<std::size_t> corrected_weights;  // per block
};

FecDecoded fec_decode_text(std::string_view fec_text);

}  // namespace golaymce
