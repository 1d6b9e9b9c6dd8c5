#pragma once

// Dense bit-packed linear algebra over GF(2), sized for short block codes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace golaymce {

/// Fixed-length vector over GF(2).
///
/// Position 0 is the leftmost bit of the printed form; internally bits are
/// packed little-position-first into a single 64-bit word, which caps the
/// length at 64 (everything in this library is at most 24 wide).
class BitVector {
public:
    static constexpr std::size_t max_len = 64;

    explicit BitVector(std::size_t len);
    static BitVector from_string(std::string_view text);          // '0'/'1' only
    static BitVector from_uint(std::uint64_t bits, std::size_t len);
    static BitVector unit(std::size_t len, std::size_t pos);      // single 1 at pos

    std::size_t size() const noexcept { return len_; }
    bool get(std::size_t pos) const;
    void set(std::size_t pos, bool value);

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept { return bits_ == 0; }
    std::uint64_t to_uint() const noexcept { return bits_; }

    BitVector slice(std::size_t from, std::size_t count) const;
    BitVector concat(const BitVector& tail) const;

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs)
    {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const BitVector&) const = default;

    std::string to_string() const;

private:
    BitVector() = default;

    std::uint64_t bits_ = 0;
    std::size_t len_ = 0;
};

std::size_t hamming_weight(const BitVector& v) noexcept;
std::size_t hamming_distance(const BitVector& x, const BitVector& y);

/// GF(2) inner product <x, y>.
bool dot(const BitVector& x, const BitVector& y);

/// Dense k x n matrix over GF(2), stored as one BitVector per row.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix identity(std::size_t k);
    static BitMatrix from_rows(std::vector<BitVector> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    const BitVector& row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);

    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix& rhs) const;
    bool operator==(const BitMatrix&) const = default;

    /// Column block [from, from+count).
    BitMatrix columns(std::size_t from, std::size_t count) const;
    /// [this | right] side by side.
    BitMatrix augmented(const BitMatrix& right) const;

    std::size_t rank() const;
    std::optional<BitMatrix> inverse() const;

    bool is_identity() const;
    bool is_zero() const;
    bool is_permutation() const;

    /// One row per line, characters '0'/'1', no separators.
    std::string to_string() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Result of putting a k x n matrix (k <= n) into systematic form.
struct Systematized {
    BitMatrix transform;  // invertible k x k
    BitMatrix result;     // transform * input, left block = identity
};

/// Gauss-Jordan restricted to the leading k columns, no column swaps.
/// Fails (nullopt) iff the leading square block is singular; callers
/// typically resample the permutation and retry.
std::optional<Systematized> systematize(const BitMatrix& m);

/// v (1 x k) times m (k x n).
BitVector operator*(const BitVector& v, const BitMatrix& m);

/// v (1 x n) times m-transposed (n x k), i.e. bit i = <v, row i of m>.
BitVector mul_transposed(const BitVector& v, const BitMatrix& m);

/// Deterministic random source. std::mt19937_64 underneath, so a seed
/// reproduces the identical stream everywhere; bounded draws use rejection
/// on the raw 64-bit output (std::uniform_int_distribution is
/// implementation-defined and would break the reproducibility contract).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }
    bool next_bit();
    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 gen_;
    std::uint64_t reservoir_ = 0;
    unsigned reservoir_bits_ = 0;
};

/// splitmix64 finalizer over the master seed offset by the index; gives each
/// block of a framed file its own independent deterministic stream.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform over GF(2)^{k x k} conditioned on invertibility, by rejection.
BitMatrix random_invertible(std::size_t k, Rng& rng);

/// Uniform permutation matrix via Fisher-Yates.
BitMatrix random_permutation(std::size_t n, Rng& rng);

/// All vectors of length n with weight exactly w, supports in lexicographic
/// order (ascending position tuples).
std::vector<BitVector> vectors_of_weight(std::size_t n, std::size_t w);

/// Weight 0, then 1, ... up to w_max, each class in support-lexicographic order.
std::vector<BitVector> vectors_of_weight_up_to(std::size_t n, std::size_t w_max);

}  // namespace golaymce
