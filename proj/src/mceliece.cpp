#include "golaymce/mceliece.hpp"

#include <numeric>
#include <string>

namespace golaymce {

namespace {

BitMatrix permutation_from_map(const std::vector<std::size_t>& sigma)
{
    BitMatrix p(sigma.size(), sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        p.set(i, sigma[i], true);  // column i of G lands in column sigma[i]
    return p;
}

const BitVector& probe_message()
{
    static const BitVector m0 = BitVector::from_string("100000000000");
    return m0;
}

}  // namespace

// pairedSwaps(T) . halfSwap^b . diag(Q,Q): permutes both halves by the
// same Q, optionally swaps the halves, then swaps columns i <-> 12+i for
// i in T. Systematizable draws yield a symmetric right block, which is
// exactly what the syndrome decoder needs.
BitMatrix structured_permutation(Rng& rng)
{
    std::vector<std::size_t> q(12);
    std::iota(q.begin(), q.end(), std::size_t{0});
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        std::swap(q[i], q[i + rng.below(q.size() - i)]);
    const bool swap_halves = rng.next_bit();
    std::uint64_t paired = 0;
    for (std::size_t i = 0; i < 12; ++i)
        paired |= std::uint64_t{rng.next_bit()} << i;

    std::vector<std::size_t> sigma(24);
    for (std::size_t i = 0; i < 24; ++i) {
        std::size_t target = i < 12 ? q[i] : 12 + q[i - 12];
        if (swap_halves)
            target = (target + 12) % 24;
        if ((paired >> (target % 12)) & 1u)
            target = (target + 12) % 24;
        sigma[i] = target;
    }
    return permutation_from_map(sigma);
}

KeyGenerationExhausted::KeyGenerationExhausted(std::size_t systematization_failures,
                                               std::size_t certification_failures)
    : std::runtime_error("key generation exhausted after " +
                         std::to_string(keygen_max_attempts) + " attempts (" +
                         std::to_string(systematization_failures) +
                         " systematization failures, " +
                         std::to_string(certification_failures) +
                         " certification failures)"),
      syst_(systematization_failures),
      cert_(certification_failures)
{
}

KeyPair keygen(Rng& rng, PermutationSampling sampling)
{
    const GolayCodec codec = canonical_codec();
    // drawn once: retries resample P and only P
    const BitMatrix s = random_invertible(12, rng);
    const BitMatrix s_inv = *s.inverse();

    KeygenStats stats;
    while (stats.attempts < keygen_max_attempts) {
        ++stats.attempts;
        const BitMatrix p = sampling == PermutationSampling::structured
                                ? structured_permutation(rng)
                                : random_permutation(24, rng);
        const BitMatrix g1 = codec.gen * p;
        auto sys = systematize(g1);
        if (!sys) {
            ++stats.systematization_failures;
            continue;
        }
        PublicKey pub{s * sys->result, GolayCodec::correctable};
        PrivateKey priv{s, s_inv, std::move(sys->result), p};
        if (!certify(pub, priv)) {
            ++stats.certification_failures;
            continue;
        }
        return KeyPair{std::move(pub), std::move(priv), stats};
    }
    throw KeyGenerationExhausted(stats.systematization_failures,
                                 stats.certification_failures);
}

KeyPair degenerate_keypair()
{
    const GolayCodec codec = canonical_codec();
    const BitMatrix i12 = BitMatrix::identity(12);
    return KeyPair{
        PublicKey{codec.gen, GolayCodec::correctable},
        PrivateKey{i12, i12, codec.gen, BitMatrix::identity(24)},
        KeygenStats{},
    };
}

bool certify(const PublicKey& pub, const PrivateKey& priv)
{
    const BitVector& m0 = probe_message();
    const BitVector c0 = m0 * pub.g_m;
    for (const auto& e : vectors_of_weight_up_to(24, 3)) {
        try {
            auto m = decrypt(priv, c0 ^ e);
            if (!m || *m != m0)
                return false;
        } catch (const InconsistentSystem&) {
            return false;
        }
    }
    return true;
}

BitVector random_error_vector(Rng& rng, std::size_t weight)
{
    if (weight > 24)
        throw std::invalid_argument("error weight exceeds the block length");
    std::vector<std::size_t> pos(24);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    BitVector e(24);
    for (std::size_t i = 0; i < weight; ++i) {
        std::swap(pos[i], pos[i + rng.below(24 - i)]);
        e.set(pos[i], true);
    }
    return e;
}

Encrypted encrypt(const PublicKey& pub, const BitVector& message, Rng& rng)
{
    BitVector e = random_error_vector(rng, pub.t);
    BitVector c = encrypt_with_error(pub, message, e);
    return Encrypted{std::move(c), std::move(e)};
}

BitVector encrypt_with_error(const PublicKey& pub, const BitVector& message,
                             const BitVector& error)
{
    if (message.size() != 12)
        throw std::invalid_argument("plaintext blocks are 12 bits");
    if (error.size() != 24)
        throw std::invalid_argument("error vectors are 24 bits");
    return (message * pub.g_m) ^ error;
}

BitVector solve_message(const BitMatrix& g2, const BitVector& codeword)
{
    const BitVector x = codeword.slice(0, 12);
    if (x * g2 != codeword)
        throw InconsistentSystem();
    return x;
}

BitVector solve_message_row_reduce(const BitMatrix& g2, const BitVector& codeword)
{
    if (codeword.size() != g2.cols())
        throw std::invalid_argument("codeword length does not match the generator");
    // [g2^T | codeword^T]: n equations in k unknowns
    const std::size_t n = g2.cols();
    const std::size_t k = g2.rows();
    BitMatrix rhs(n, 1);
    for (std::size_t j = 0; j < n; ++j)
        rhs.set(j, 0, codeword.get(j));
    BitMatrix aug = g2.transposed().augmented(rhs);

    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_of_col(k, n);
    for (std::size_t c = 0; c < k && pivot_row < n; ++c) {
        std::size_t r = pivot_row;
        while (r < n && !aug.get(r, c))
            ++r;
        if (r == n)
            continue;
        if (r != pivot_row) {
            const BitVector tmp = aug.row(pivot_row);
            aug.set_row(pivot_row, aug.row(r));
            aug.set_row(r, tmp);
        }
        for (std::size_t rr = 0; rr < n; ++rr)
            if (rr != pivot_row && aug.get(rr, c))
                aug.set_row(rr, aug.row(rr) ^ aug.row(pivot_row));
        pivot_of_col[c] = pivot_row;
        ++pivot_row;
    }
    // any leftover row of the form 0...0 | 1 marks an inconsistent system
    for (std::size_t r = pivot_row; r < n; ++r)
        if (aug.get(r, k))
            throw InconsistentSystem();

    BitVector x(k);
    for (std::size_t c = 0; c < k; ++c)
        if (pivot_of_col[c] < n)
            x.set(c, aug.get(pivot_of_col[c], k));
    return x;
}

std::optional<BitVector> decrypt(const PrivateKey& priv, const BitVector& ciphertext)
{
    auto error = decode_error(ciphertext, priv.g2);
    if (!error)
        return std::nullopt;  // retransmission requested
    const BitVector y1 = ciphertext ^ *error;
    const BitVector ms = solve_message(priv.g2, y1);
    return ms * priv.s_inv;
}

}  // namespace golaymce
