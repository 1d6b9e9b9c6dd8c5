#include "golaymce/oracle.hpp"

#include <stdexcept>

#include "golaymce/golay.hpp"

namespace golaymce {

const BitVector& CosetTable::leader_for(const BitVector& syndrome12) const
{
    if (syndrome12.size() != 12)
        throw std::invalid_argument("coset table is keyed by 12-bit syndromes");
    return leaders.at(syndrome12.to_uint());
}

std::map<std::size_t, std::size_t> CosetTable::weight_census() const
{
    std::map<std::size_t, std::size_t> census;
    for (const auto& leader : leaders)
        ++census[leader.weight()];
    return census;
}

std::vector<BitVector> enumerate_codewords(const BitMatrix& gen)
{
    const std::size_t k = gen.rows();
    if (k > 20)
        throw std::invalid_argument("enumerate_codewords: message space too large");
    if (gen.rank() != k)
        throw std::invalid_argument("enumerate_codewords requires a full-rank generator");
    std::vector<BitVector> words;
    words.reserve(std::size_t{1} << k);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m)
        words.push_back(BitVector::from_uint(m, k) * gen);
    return words;
}

std::size_t min_distance(const BitMatrix& gen)
{
    std::size_t best = gen.cols() + 1;
    for (const auto& w : enumerate_codewords(gen))
        if (!w.is_zero() && w.weight() < best)
            best = w.weight();
    return best;
}

CosetTable build_coset_table(const BitMatrix& gen)
{
    if (gen.rows() != 12 || gen.cols() != 24)
        throw std::invalid_argument("build_coset_table expects a 12x24 generator");
    constexpr std::size_t slots = 4096;
    CosetTable table{gen, std::vector<BitVector>(slots, BitVector(24))};
    std::vector<bool> filled(slots, false);
    std::size_t remaining = slots;
    for (std::size_t w = 0; w <= 24 && remaining > 0; ++w) {
        for (const auto& e : vectors_of_weight(24, w)) {
            const std::uint64_t s = syndrome(e, gen).to_uint();
            if (!filled[s]) {
                filled[s] = true;
                table.leaders[s] = e;
                if (--remaining == 0)
                    break;
            }
        }
    }
    return table;
}

BitVector ml_decode(const BitVector& received, const CosetTable& table)
{
    return table.leader_for(syndrome(received, table.generator));
}

std::string dump_table(const CosetTable& table)
{
    std::string out;
    out.reserve(table.leaders.size() * 38);
    for (std::size_t s = 0; s < table.leaders.size(); ++s) {
        out += BitVector::from_uint(s, 12).to_string();
        out += ' ';
        out += table.leaders[s].to_string();
        out += '\n';
    }
    return out;
}

}  // namespace golaymce
