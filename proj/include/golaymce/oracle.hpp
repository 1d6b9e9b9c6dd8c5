#pragma once

// Brute-force reference implementations: full codeword enumeration and
// coset-leader (maximum-likelihood) decoding. These certify the fast
// syndrome decoder; they are never on the decrypt path.

#include <map>
#include <string>
#include <vector>

#include "golaymce/gf2.hpp"

namespace golaymce {

/// Map from every 12-bit syndrome to a minimum-weight coset leader.
/// Built by enumerating error vectors in order of increasing weight
/// (support-lexicographic within a weight class); the first writer to a
/// syndrome slot wins, which certifies minimality by construction order.
struct CosetTable {
    BitMatrix generator;             // 12x24, self-dual
    std::vector<BitVector> leaders;  // 4096 entries indexed by syndrome value

    const BitVector& leader_for(const BitVector& syndrome12) const;
    /// weight -> number of leaders of that weight
    std::map<std::size_t, std::size_t> weight_census() const;
};

/// All 2^k codewords m * gen, by message-space iteration. Throws on rank
/// deficiency (the map would not be injective).
std::vector<BitVector> enumerate_codewords(const BitMatrix& gen);

/// Minimum nonzero codeword weight (= minimum distance for linear codes).
std::size_t min_distance(const BitMatrix& gen);

CosetTable build_coset_table(const BitMatrix& gen);

/// Complete decoder: subtract the coset leader of the received word's
/// syndrome. Total (never requests retransmission), unlike the
/// bounded-distance syndrome decoder.
BitVector ml_decode(const BitVector& received, const CosetTable& table);

/// 4096 lines "<syndrome> <leader>" sorted by syndrome value.
std::string dump_table(const CosetTable& table);

}  // namespace golaymce
