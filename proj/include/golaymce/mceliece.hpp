#pragma once

// McEliece over the extended binary Golay code: key generation with
// per-key decoder certification, encryption with an exact-weight-3 error,
// and decryption through the arithmetic syndrome decoder.

#include <optional>
#include <stdexcept>

#include "golaymce/gf2.hpp"
#include "golaymce/golay.hpp"

namespace golaymce {

struct PublicKey {
    BitMatrix g_m;          // 12x24 encoding matrix S*G2
    std::size_t t = 3;      // error weight
};

struct PrivateKey {
    BitMatrix s;      // 12x12 scrambler
    BitMatrix s_inv;  // 12x12
    BitMatrix g2;     // 12x24 systematic self-dual generator
    BitMatrix p;      // 24x24 permutation, kept for the audit path
};

struct KeygenStats {
    std::size_t attempts = 0;                  // P draws, including the final one
    std::size_t systematization_failures = 0;
    std::size_t certification_failures = 0;
};

struct KeyPair {
    PublicKey pub;
    PrivateKey priv;
    KeygenStats stats;
};

/// How keygen draws the column permutation P.
///
/// The syndrome decoder over a systematized [I12 | A'] is exhaustively
/// certified per key; certification passes exactly when A' is symmetric
/// (self-duality already forces A'*A't = I). `structured` draws P from
/// pairedSwaps(T) . halfSwap^b . diag(Q,Q), whose systematizable members
/// all yield a symmetric A'. `uniform` draws P uniformly over S24 as the
/// construction is usually stated; measured, such keys essentially never
/// certify, so this mode exists for telemetry and for exercising the
/// exhaustion path.
enum class PermutationSampling {
    structured,
    uniform,
};

class KeyGenerationExhausted : public std::runtime_error {
public:
    KeyGenerationExhausted(std::size_t systematization_failures,
                           std::size_t certification_failures);

    std::size_t systematization_failures() const noexcept { return syst_; }
    std::size_t certification_failures() const noexcept { return cert_; }

private:
    std::size_t syst_;
    std::size_t cert_;
};

/// Raised when a word handed to the message solver is not in the row space
/// of G2 — i.e. the upstream decoder returned an inconsistent error.
class InconsistentSystem : public std::runtime_error {
public:
    InconsistentSystem() : std::runtime_error("word is not in the row space of G2") {}
};

constexpr std::size_t keygen_max_attempts = 64;

/// Key generation. S is drawn once; each attempt draws a fresh
/// P, systematizes G*P, and exhaustively certifies the keypair against all
/// 2325 error patterns of weight <= 3 before returning it.
/// Throws KeyGenerationExhausted after keygen_max_attempts failed draws.
KeyPair keygen(Rng& rng, PermutationSampling sampling = PermutationSampling::structured);

/// One draw from keygen's structured P family:
/// pairedSwaps(T) . halfSwap^b . diag(Q,Q).
BitMatrix structured_permutation(Rng& rng);

/// P = I, S = I: the public key equals the plain Golay generator.
KeyPair degenerate_keypair();

/// Exhaustive wt<=3 round-trip check of decrypt against a fixed probe
/// message (syndrome decoding depends only on the error pattern).
bool certify(const PublicKey& pub, const PrivateKey& priv);

/// Exactly `weight` distinct positions set, uniform over the C(24, w) supports.
BitVector random_error_vector(Rng& rng, std::size_t weight);

struct Encrypted {
    BitVector ciphertext;  // 24 bits
    BitVector error;       // audit only; never serialized with the ciphertext
};

/// c = m*G_m + e with wt(e) = t, e freshly sampled.
Encrypted encrypt(const PublicKey& pub, const BitVector& message, Rng& rng);

/// Test/audit entry: caller supplies the error vector.
BitVector encrypt_with_error(const PublicKey& pub, const BitVector& message,
                             const BitVector& error);

/// Solve x * g2 = codeword via the systematic shortcut: x is the first 12
/// bits; verified against g2, throws InconsistentSystem on mismatch.
BitVector solve_message(const BitMatrix& g2, const BitVector& codeword);

/// Same equation solved by row reducing [g2^T | codeword^T]; the audit
/// route that must agree with the shortcut.
BitVector solve_message_row_reduce(const BitMatrix& g2, const BitVector& codeword);

/// Decryption. nullopt = retransmission requested by the
/// decoder. InconsistentSystem escapes only for uncertified keys.
std::optional<BitVector> decrypt(const PrivateKey& priv, const BitVector& ciphertext);

}  // namespace golaymce
