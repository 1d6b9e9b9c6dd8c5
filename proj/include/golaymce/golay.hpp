#pragma once

// Extended binary Golay code [24,12,8]: construction from the canonical
// 12x12 block A or from a degree-11 generator polynomial of the perfect
// [23,12,7] code, plus the arithmetic syndrome decoder.

#include <optional>

#include "golaymce/gf2.hpp"

namespace golaymce {

/// Systematic codec for a self-dual [24,12,8] code G = [I12 | A].
struct GolayCodec {
    BitMatrix block_a;   // 12x12 right block
    BitMatrix gen;       // 12x24 = [I12 | block_a]

    static constexpr std::size_t n = 24;
    static constexpr std::size_t k = 12;
    static constexpr std::size_t min_distance = 8;
    static constexpr std::size_t correctable = 3;

    /// H = [A | I12].
    BitMatrix parity_check() const;
    /// G * Gt == 0.
    bool self_dual() const;

    /// No validation; lets tests feed a corrupted block through the
    /// same code paths the selftest sensitivity check exercises.
    static GolayCodec from_block(BitMatrix a);
};

/// The canonical 12x12 block A (hard-coded constant).
BitMatrix golay_block_a();

/// Codec over [I12 | A] with the canonical A.
GolayCodec canonical_codec();

/// Degree-11 generator polynomial of the perfect [23,12,7] code,
/// coefficients constant-term-first.
struct GeneratorPolynomial {
    BitVector coeffs;  // length 12

    static GeneratorPolynomial g1();  // x^11+x^9+x^7+x^6+x^5+x+1
    static GeneratorPolynomial g2();  // x^11+x^10+x^6+x^5+x^4+x^2+1
};

/// Systematic 12x23 generator of the cyclic code <g>: rows x^i*g(x) for
/// i = 0..11, row-reduced to [I12 | A23']. Throws std::invalid_argument if
/// g does not divide x^23 - 1.
BitMatrix g23_from_polynomial(const GeneratorPolynomial& g);

/// Appends the bit that makes the total weight even.
BitVector extend_parity(const BitVector& c23);

/// c = m * G; systematic, so the first 12 bits equal m.
BitVector encode(const BitVector& message, const GolayCodec& codec);

/// s = c * gen^T. Valid as a syndrome because the code is self-dual
/// (the generator doubles as a parity check).
BitVector syndrome(const BitVector& received, const BitMatrix& gen);

/// Arithmetic syndrome decoder over a systematic self-dual [I12 | A'].
/// Returns the error vector, or nullopt when the error pattern cannot be
/// determined and retransmission is requested (a protocol outcome, not a
/// fault). Ties in the row scans resolve to the smallest index.
/// Throws std::invalid_argument unless gen is 12x24, systematic, self-dual.
std::optional<BitVector> decode_error(const BitVector& received, const BitMatrix& gen);

struct Corrected {
    BitVector codeword;  // received xor error
    BitVector message;   // first 12 bits of the codeword
};

/// decode_error + systematic truncation; nullopt propagates retransmission.
std::optional<Corrected> correct(const BitVector& received, const GolayCodec& codec);

}  // namespace golaymce
