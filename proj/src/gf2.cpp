#include "golaymce/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace golaymce {

namespace {

[[noreturn]] void throw_dim(const std::string& what)
{
    throw std::invalid_argument(what);
}

std::uint64_t mask_for(std::size_t len)
{
    return len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

}  // namespace

BitVector::BitVector(std::size_t len)
{
    if (len == 0 || len > max_len)
        throw_dim("BitVector length must be in [1, 64]");
    len_ = len;
}

BitVector BitVector::from_string(std::string_view text)
{
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            v.bits_ |= std::uint64_t{1} << i;
        else if (text[i] != '0')
            throw_dim("BitVector string must contain only '0'/'1'");
    }
    return v;
}

BitVector BitVector::from_uint(std::uint64_t bits, std::size_t len)
{
    BitVector v(len);
    v.bits_ = bits & mask_for(len);
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t pos)
{
    BitVector v(len);
    v.set(pos, true);
    return v;
}

bool BitVector::get(std::size_t pos) const
{
    if (pos >= len_)
        throw_dim("BitVector position out of range");
    return (bits_ >> pos) & 1u;
}

void BitVector::set(std::size_t pos, bool value)
{
    if (pos >= len_)
        throw_dim("BitVector position out of range");
    if (value)
        bits_ |= std::uint64_t{1} << pos;
    else
        bits_ &= ~(std::uint64_t{1} << pos);
}

std::size_t BitVector::weight() const noexcept
{
    return static_cast<std::size_t>(std::popcount(bits_));
}

BitVector BitVector::slice(std::size_t from, std::size_t count) const
{
    if (from + count > len_)
        throw_dim("BitVector slice out of range");
    return from_uint(bits_ >> from, count);
}

BitVector BitVector::concat(const BitVector& tail) const
{
    if (len_ + tail.len_ > max_len)
        throw_dim("BitVector concat exceeds capacity");
    BitVector v(len_ + tail.len_);
    v.bits_ = bits_ | (tail.bits_ << len_);
    return v;
}

BitVector& BitVector::operator^=(const BitVector& rhs)
{
    if (len_ != rhs.len_)
        throw_dim("BitVector xor length mismatch");
    bits_ ^= rhs.bits_;
    return *this;
}

std::string BitVector::to_string() const
{
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if ((bits_ >> i) & 1u)
            s[i] = '1';
    return s;
}

std::size_t hamming_weight(const BitVector& v) noexcept
{
    return v.weight();
}

std::size_t hamming_distance(const BitVector& x, const BitVector& y)
{
    if (x.size() != y.size())
        throw_dim("hamming_distance length mismatch");
    return static_cast<std::size_t>(std::popcount(x.to_uint() ^ y.to_uint()));
}

bool dot(const BitVector& x, const BitVector& y)
{
    if (x.size() != y.size())
        throw_dim("dot length mismatch");
    return std::popcount(x.to_uint() & y.to_uint()) & 1;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols)
{
    if (rows == 0)
        throw_dim("BitMatrix needs at least one row");
    rows_.assign(rows, BitVector(cols));  // BitVector validates cols
}

BitMatrix BitMatrix::identity(std::size_t k)
{
    BitMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        m.rows_[i].set(i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows)
{
    if (rows.empty())
        throw_dim("BitMatrix needs at least one row");
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw_dim("BitMatrix rows must share one length");
    BitMatrix m(rows.size(), cols);
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows)
{
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (auto s : rows)
        parsed.push_back(BitVector::from_string(s));
    return from_rows(std::move(parsed));
}

bool BitMatrix::get(std::size_t r, std::size_t c) const
{
    return row(r).get(c);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value)
{
    if (r >= rows())
        throw_dim("BitMatrix row out of range");
    rows_[r].set(c, value);
}

const BitVector& BitMatrix::row(std::size_t r) const
{
    if (r >= rows())
        throw_dim("BitMatrix row out of range");
    return rows_[r];
}

void BitMatrix::set_row(std::size_t r, const BitVector& v)
{
    if (r >= rows())
        throw_dim("BitMatrix row out of range");
    if (v.size() != cols_)
        throw_dim("BitMatrix row length mismatch");
    rows_[r] = v;
}

BitMatrix BitMatrix::transposed() const
{
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        const std::uint64_t bits = rows_[r].to_uint();
        for (std::size_t c = 0; c < cols_; ++c)
            if ((bits >> c) & 1u)
                t.rows_[c].set(r, true);
    }
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const
{
    if (cols_ != rhs.rows())
        throw_dim("BitMatrix multiply: inner dimensions differ");
    BitMatrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        BitVector acc(rhs.cols());
        std::uint64_t bits = rows_[r].to_uint();
        while (bits) {
            const int l = std::countr_zero(bits);
            bits &= bits - 1;
            acc ^= rhs.rows_[static_cast<std::size_t>(l)];
        }
        out.rows_[r] = acc;
    }
    return out;
}

BitMatrix BitMatrix::columns(std::size_t from, std::size_t count) const
{
    BitMatrix out(rows(), count);
    for (std::size_t r = 0; r < rows(); ++r)
        out.rows_[r] = rows_[r].slice(from, count);
    return out;
}

BitMatrix BitMatrix::augmented(const BitMatrix& right) const
{
    if (right.rows() != rows())
        throw_dim("BitMatrix augment: row counts differ");
    BitMatrix out(rows(), cols_ + right.cols_);
    for (std::size_t r = 0; r < rows(); ++r)
        out.rows_[r] = rows_[r].concat(right.rows_[r]);
    return out;
}

std::size_t BitMatrix::rank() const
{
    std::vector<std::uint64_t> work;
    work.reserve(rows());
    for (const auto& r : rows_)
        work.push_back(r.to_uint());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < work.size(); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        std::size_t pivot = rank;
        while (pivot < work.size() && !(work[pivot] & bit))
            ++pivot;
        if (pivot == work.size())
            continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != rank && (work[r] & bit))
                work[r] ^= work[rank];
        ++rank;
    }
    return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const
{
    if (rows() != cols_)
        throw_dim("inverse requires a square matrix");
    auto sys = golaymce::systematize(*this);
    if (!sys)
        return std::nullopt;
    return std::move(sys->transform);
}

bool BitMatrix::is_identity() const
{
    return rows() == cols_ && *this == identity(rows());
}

bool BitMatrix::is_zero() const
{
    return std::all_of(rows_.begin(), rows_.end(),
                       [](const BitVector& r) { return r.is_zero(); });
}

bool BitMatrix::is_permutation() const
{
    if (rows() != cols_)
        return false;
    BitVector column_cover(cols_);
    for (const auto& r : rows_) {
        if (r.weight() != 1)
            return false;
        column_cover ^= r;
    }
    return column_cover.weight() == cols_;
}

std::string BitMatrix::to_string() const
{
    std::string out;
    out.reserve(rows() * (cols_ + 1));
    for (const auto& r : rows_) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

std::optional<Systematized> systematize(const BitMatrix& m)
{
    const std::size_t k = m.rows();
    if (k > m.cols())
        throw_dim("systematize requires rows <= cols");
    BitMatrix result = m;
    BitMatrix transform = BitMatrix::identity(k);
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && !result.get(pivot, c))
            ++pivot;
        if (pivot == k)
            return std::nullopt;  // leading block singular; caller resamples
        if (pivot != c) {
            const BitVector tmp_r = result.row(c);
            result.set_row(c, result.row(pivot));
            result.set_row(pivot, tmp_r);
            const BitVector tmp_t = transform.row(c);
            transform.set_row(c, transform.row(pivot));
            transform.set_row(pivot, tmp_t);
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r != c && result.get(r, c)) {
                result.set_row(r, result.row(r) ^ result.row(c));
                transform.set_row(r, transform.row(r) ^ transform.row(c));
            }
        }
    }
    return Systematized{std::move(transform), std::move(result)};
}

BitVector operator*(const BitVector& v, const BitMatrix& m)
{
    if (v.size() != m.rows())
        throw_dim("vector-matrix multiply: dimensions differ");
    BitVector acc(m.cols());
    std::uint64_t bits = v.to_uint();
    while (bits) {
        const int l = std::countr_zero(bits);
        bits &= bits - 1;
        acc ^= m.row(static_cast<std::size_t>(l));
    }
    return acc;
}

BitVector mul_transposed(const BitVector& v, const BitMatrix& m)
{
    if (v.size() != m.cols())
        throw_dim("vector-transposed multiply: dimensions differ");
    BitVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (dot(v, m.row(i)))
            out.set(i, true);
    return out;
}

bool Rng::next_bit()
{
    if (reservoir_bits_ == 0) {
        reservoir_ = next_u64();
        reservoir_bits_ = 64;
    }
    const bool b = reservoir_ & 1u;
    reservoir_ >>= 1;
    --reservoir_bits_;
    return b;
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw_dim("Rng::below requires bound >= 1");
    // rejection from the top to keep the draw unbiased
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    for (;;) {
        const std::uint64_t x = next_u64();
        if (x <= limit)
            return x % bound;
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

BitMatrix random_invertible(std::size_t k, Rng& rng)
{
    if (k == 0 || k > BitVector::max_len)
        throw_dim("random_invertible dimension out of range");
    for (;;) {
        std::vector<BitVector> rows;
        rows.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            rows.push_back(BitVector::from_uint(rng.next_u64(), k));
        BitMatrix m = BitMatrix::from_rows(std::move(rows));
        if (m.rank() == k)
            return m;
    }
}

BitMatrix random_permutation(std::size_t n, Rng& rng)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t j = i + rng.below(n - i);
        std::swap(perm[i], perm[j]);
    }
    BitMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        p.set(i, perm[i], true);
    return p;
}

std::vector<BitVector> vectors_of_weight(std::size_t n, std::size_t w)
{
    std::vector<BitVector> out;
    if (w > n)
        return out;
    if (w == 0) {
        out.push_back(BitVector(n));
        return out;
    }
    std::vector<std::size_t> pos(w);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    for (;;) {
        BitVector v(n);
        for (std::size_t p : pos)
            v.set(p, true);
        out.push_back(v);
        // advance the support tuple lexicographically
        std::size_t i = w;
        while (i > 0 && pos[i - 1] == n - w + i - 1)
            --i;
        if (i == 0)
            break;
        ++pos[i - 1];
        for (std::size_t j = i; j < w; ++j)
            pos[j] = pos[j - 1] + 1;
    }
    return out;
}

std::vector<BitVector> vectors_of_weight_up_to(std::size_t n, std::size_t w_max)
{
    std::vector<BitVector> out;
    for (std::size_t w = 0; w <= w_max; ++w) {
        auto cls = vectors_of_weight(n, w);
        out.insert(out.end(), cls.begin(), cls.end());
    }
    return out;
}

}  // namespace golaymce
