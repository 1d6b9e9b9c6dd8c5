#include "golaymce/fileops.hpp"

#include "golaymce/golay.hpp"

namespace golaymce {

MessageFraming frame_bytes(std::span<const std::uint8_t> data)
{
    MessageFraming framing;
    framing.bit_count = std::uint64_t{data.size()} * 8;
    const std::size_t block_count =
        static_cast<std::size_t>((framing.bit_count + 11) / 12);
    framing.blocks.reserve(block_count);
    std::uint64_t k = 0;
    for (std::size_t b = 0; b < block_count; ++b) {
        BitVector block(12);
        for (std::size_t i = 0; i < 12 && k < framing.bit_count; ++i, ++k)
            block.set(i, (data[k / 8] >> (7 - k % 8)) & 1u);
        framing.blocks.push_back(block);
    }
    return framing;
}

std::vector<std::uint8_t> unframe(const MessageFraming& framing)
{
    if (framing.bit_count % 8 != 0)
        throw std::invalid_argument("framed streams carry whole bytes");
    if (framing.blocks.size() !=
        static_cast<std::size_t>((framing.bit_count + 11) / 12))
        throw std::invalid_argument("block count does not match the bit count");
    std::vector<std::uint8_t> data(framing.bit_count / 8, 0);
    for (std::uint64_t k = 0; k < framing.bit_count; ++k)
        if (framing.blocks[k / 12].get(k % 12))
            data[k / 8] |= std::uint8_t{1} << (7 - k % 8);
    return data;
}

BlockDecodeFailure::BlockDecodeFailure(std::size_t block_index)
    : std::runtime_error("retransmission requested for block " +
                         std::to_string(block_index)),
      index_(block_index)
{
}

EncryptedFile encrypt_bytes(const PublicKey& pub, std::span<const std::uint8_t> data,
                            std::uint64_t master_seed)
{
    const MessageFraming framing = frame_bytes(data);
    BlockFile out;
    out.bit_count = framing.bit_count;
    out.blocks.reserve(framing.blocks.size());
    EncryptedFile result;
    result.block_errors.reserve(framing.blocks.size());
    for (std::size_t i = 0; i < framing.blocks.size(); ++i) {
        Rng block_rng(derive_seed(master_seed, i));
        Encrypted enc = encrypt(pub, framing.blocks[i], block_rng);
        out.blocks.push_back(std::move(enc.ciphertext));
        result.block_errors.push_back(std::move(enc.error));
    }
    result.text = write_ciphertext(out);
    return result;
}

std::vector<std::uint8_t> decrypt_text(const PrivateKey& priv, std::string_view ct_text)
{
    const BlockFile file = parse_ciphertext(ct_text);
    MessageFraming framing;
    framing.bit_count = file.bit_count;
    framing.blocks.reserve(file.blocks.size());
    for (std::size_t i = 0; i < file.blocks.size(); ++i) {
        auto message = decrypt(priv, file.blocks[i]);
        if (!message)
            throw BlockDecodeFailure(i);
        framing.blocks.push_back(std::move(*message));
    }
    return unframe(framing);
}

std::string fec_encode_bytes(std::span<const std::uint8_t> data)
{
    const GolayCodec codec = canonical_codec();
    const MessageFraming framing = frame_bytes(data);
    BlockFile out;
    out.bit_count = framing.bit_count;
    out.blocks.reserve(framing.blocks.size());
    for (const auto& block : framing.blocks)
        out.blocks.push_back(encode(block, codec));
    return write_fec(out);
}

FecDecoded fec_decode_text(std::string_view fec_text)
{
    const GolayCodec codec = canonical_codec();
    const BlockFile file = parse_fec(fec_text);
    MessageFraming framing;
    framing.bit_count = file.bit_count;
    framing.blocks.reserve(file.blocks.size());
    FecDecoded result;
    result.corrected_weights.reserve(file.blocks.size());
    for (std::size_t i = 0; i < file.blocks.size(); ++i) {
        auto corrected = correct(file.blocks[i], codec);
        if (!corrected)
            throw BlockDecodeFailure(i);
        result.corrected_weights.push_back(
            hamming_distance(corrected->codeword, file.blocks[i]));
        framing.blocks.push_back(std::move(corrected->message));
    }
    result.data = unframe(framing);
    return result;
}

}  // namespace golaymce
