#include "golaymce/golay.hpp"

#include <bit>
#include <stdexcept>

namespace golaymce {

namespace {

// GF(2) polynomials as bit masks, coefficient of x^i at bit i.

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m)
{
    const int dm = 63 - std::countl_zero(m);
    while (a != 0) {
        const int da = 63 - std::countl_zero(a);
        if (da < dm)
            break;
        a ^= m << (da - dm);
    }
    return a;
}

constexpr std::uint64_t x23_plus_1 = (std::uint64_t{1} << 23) | 1u;

BitMatrix validated_decoder_input(const BitMatrix& gen)
{
    if (gen.rows() != GolayCodec::k || gen.cols() != GolayCodec::n)
        throw std::invalid_argument("decode_error expects a 12x24 generator");
    if (!gen.columns(0, GolayCodec::k).is_identity())
        throw std::invalid_argument("decode_error expects a systematic generator");
    for (std::size_t i = 0; i < gen.rows(); ++i)
        for (std::size_t j = i; j < gen.rows(); ++j)
            if (dot(gen.row(i), gen.row(j)))
                throw std::invalid_argument("decode_error expects a self-dual generator");
    return gen.columns(GolayCodec::k, GolayCodec::k);
}

}  // namespace

BitMatrix GolayCodec::parity_check() const
{
    return block_a.augmented(BitMatrix::identity(k));
}

bool GolayCodec::self_dual() const
{
    for (std::size_t i = 0; i < gen.rows(); ++i)
        for (std::size_t j = i; j < gen.rows(); ++j)
            if (dot(gen.row(i), gen.row(j)))
                return false;
    return true;
}

GolayCodec GolayCodec::from_block(BitMatrix a)
{
    BitMatrix gen = BitMatrix::identity(k).augmented(a);
    return GolayCodec{std::move(a), std::move(gen)};
}

BitMatrix golay_block_a()
{
    return BitMatrix::from_strings({
        "110111000101",
        "101110001011",
        "011100010111",
        "111000101101",
        "110001011011",
        "100010110111",
        "000101101111",
        "001011011101",
        "010110111001",
        "101101110001",
        "011011100011",
        "111111111110",
    });
}

GolayCodec canonical_codec()
{
    return GolayCodec::from_block(golay_block_a());
}

GeneratorPolynomial GeneratorPolynomial::g1()
{
    return {BitVector::from_string("110001110101")};
}

GeneratorPolynomial GeneratorPolynomial::g2()
{
    return {BitVector::from_string("101011100011")};
}

BitMatrix g23_from_polynomial(const GeneratorPolynomial& g)
{
    if (g.coeffs.size() != 12)
        throw std::invalid_argument("generator polynomial needs 12 coefficients");
    const std::uint64_t bits = g.coeffs.to_uint();
    if (!(bits & 1) || !(bits >> 11))
        throw std::invalid_argument("generator polynomial must have degree exactly 11");
    if (poly_mod(x23_plus_1, bits) != 0)
        throw std::invalid_argument("generator polynomial does not divide x^23 - 1");

    std::vector<BitVector> rows;
    rows.reserve(12);
    for (std::size_t i = 0; i < 12; ++i)
        rows.push_back(BitVector::from_uint(bits << i, 23));
    auto sys = systematize(BitMatrix::from_rows(std::move(rows)));
    // g0 = 1 makes the leading block triangular with unit diagonal
    if (!sys)
        throw std::logic_error("cyclic generator unexpectedly not systematizable");
    return std::move(sys->result);
}

BitVector extend_parity(const BitVector& c23)
{
    if (c23.size() != 23)
        throw std::invalid_argument("extend_parity expects 23 bits");
    BitVector parity(1);
    parity.set(0, c23.weight() % 2 != 0);
    return c23.concat(parity);
}

BitVector encode(const BitVector& message, const GolayCodec& codec)
{
    return message * codec.gen;
}

BitVector syndrome(const BitVector& received, const BitMatrix& gen)
{
    return mul_transposed(received, gen);
}

std::optional<BitVector> decode_error(const BitVector& received, const BitMatrix& gen)
{
    const BitMatrix block = validated_decoder_input(gen);
    if (received.size() != GolayCodec::n)
        throw std::invalid_argument("decode_error expects a 24-bit word");

    const BitVector zero12(12);
    const BitVector s1 = syndrome(received, gen);
    if (s1.weight() <= 3)
        return s1.concat(zero12);
    for (std::size_t i = 0; i < 12; ++i)
        if (hamming_distance(s1, block.row(i)) <= 2)
            return (s1 ^ block.row(i)).concat(BitVector::unit(12, i));

    const BitVector s2 = s1 * block;
    if (s2.weight() <= 3)
        return zero12.concat(s2);
    for (std::size_t i = 0; i < 12; ++i)
        if (hamming_distance(s2, block.row(i)) <= 2)
            return BitVector::unit(12, i).concat(s2 ^ block.row(i));

    return std::nullopt;  // retransmission requested
}

std::optional<Corrected> correct(const BitVector& received, const GolayCodec& codec)
{
    auto error = decode_error(received, codec.gen);
    if (!error)
        return std::nullopt;
    BitVector codeword = received ^ *error;
    BitVector message = codeword.slice(0, GolayCodec::k);
    return Corrected{std::move(codeword), std::move(message)};
}

}  // namespace golaymce
