#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "golaymce/mceliece.hpp"
#include "golaymce/oracle.hpp"

using namespace golaymce;

TEST_SUITE("oracle")
{
    TEST_CASE("codeword enumeration")
    {
        const GolayCodec codec = canonical_codec();
        const auto words = enumerate_codewords(codec.gen);
        CHECK(words.size() == 4096);

        std::set<std::uint64_t> distinct;
        std::map<std::size_t, std::size_t> histogram;
        bool has_zero = false;
        for (const auto& w : words) {
            distinct.insert(w.to_uint());
            ++histogram[w.weight()];
            has_zero = has_zero || w.is_zero();
        }
        CHECK(has_zero);
        CHECK(distinct.size() == 4096);
        const std::map<std::size_t, std::size_t> expected{
            {0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
        CHECK(histogram == expected);
    }

    TEST_CASE("enumeration rejects rank-deficient generators")
    {
        BitMatrix degenerate(12, 24);
        for (std::size_t r = 0; r < 12; ++r)
            degenerate.set(r, 0, true);  // every row equal
        CHECK_THROWS_AS(enumerate_codewords(degenerate), std::invalid_argument);
    }

    TEST_CASE("minimum distance")
    {
        CHECK(min_distance(canonical_codec().gen) == 8);
        CHECK(min_distance(g23_from_polynomial(GeneratorPolynomial::g1())) == 7);

        Rng rng(15);
        const KeyPair pair = keygen(rng);
        CHECK(min_distance(pair.priv.g2) == 8);  // permutations preserve weight
    }

    TEST_CASE("coset table census and construction order")
    {
        const GolayCodec codec = canonical_codec();
        const CosetTable table = build_coset_table(codec.gen);
        CHECK(table.leaders.size() == 4096);
        CHECK(table.leaders[0].is_zero());

        const std::map<std::size_t, std::size_t> expected{
            {0, 1}, {1, 24}, {2, 276}, {3, 2024}, {4, 1771}};
        CHECK(table.weight_census() == expected);

        // weight-1 errors are their own unique leaders
        for (std::size_t p = 0; p < 24; ++p) {
            const BitVector e = BitVector::unit(24, p);
            CHECK(table.leader_for(syndrome(e, codec.gen)) == e);
        }

        std::size_t max_weight = 0;
        for (const auto& leader : table.leaders)
            max_weight = std::max(max_weight, leader.weight());
        CHECK(max_weight == 4);  // the covering radius

        CHECK(build_coset_table(codec.gen).leaders == table.leaders);
    }

    TEST_CASE("ml_decode always lands on a codeword")
    {
        const GolayCodec codec = canonical_codec();
        const CosetTable table = build_coset_table(codec.gen);
        CHECK(ml_decode(encode(BitVector::from_string("101010101010"), codec), table)
                  .is_zero());

        Rng rng(16);
        for (int i = 0; i < 300; ++i) {
            const BitVector v = BitVector::from_uint(rng.next_u64(), 24);
            const BitVector e = ml_decode(v, table);
            CHECK(syndrome(v ^ e, codec.gen).is_zero());
        }
    }

    TEST_CASE("fast decoder agrees with the oracle on every syndrome")
    {
        const GolayCodec codec = canonical_codec();
        const CosetTable table = build_coset_table(codec.gen);
        std::size_t retransmissions = 0;
        for (const auto& leader : table.leaders) {
            auto decoded = decode_error(leader, codec.gen);
            if (leader.weight() <= 3) {
                REQUIRE(decoded.has_value());
                CHECK(*decoded == leader);
            } else {
                CHECK_FALSE(decoded.has_value());
                ++retransmissions;
            }
        }
        CHECK(retransmissions == 1771);
    }

    TEST_CASE("oracle agreement holds for a certified key's generator")
    {
        Rng rng(21);
        const KeyPair pair = keygen(rng);
        const CosetTable table = build_coset_table(pair.priv.g2);
        const std::map<std::size_t, std::size_t> expected{
            {0, 1}, {1, 24}, {2, 276}, {3, 2024}, {4, 1771}};
        CHECK(table.weight_census() == expected);
        for (const auto& leader : table.leaders) {
            auto decoded = decode_error(leader, pair.priv.g2);
            if (leader.weight() <= 3) {
                REQUIRE(decoded.has_value());
                CHECK(*decoded == leader);
            } else {
                CHECK_FALSE(decoded.has_value());
            }
        }
    }

    TEST_CASE("row operations preserve the row space")
    {
        Rng rng(22);
        const KeyPair pair = keygen(rng);
        const BitMatrix g1 = canonical_codec().gen * pair.priv.p;

        std::set<std::uint64_t> from_g2, from_g1;
        for (const auto& w : enumerate_codewords(pair.priv.g2))
            from_g2.insert(w.to_uint());
        for (const auto& w : enumerate_codewords(g1))
            from_g1.insert(w.to_uint());
        CHECK(from_g2 == from_g1);
    }

    TEST_CASE("dump format")
    {
        const CosetTable table = build_coset_table(canonical_codec().gen);
        const std::string text = dump_table(table);
        std::istringstream lines(text);
        std::string line;
        std::size_t count = 0;
        while (std::getline(lines, line)) {
            REQUIRE(line.size() == 37);
            REQUIRE(line[12] == ' ');
            ++count;
        }
        CHECK(count == 4096);
        CHECK(text.substr(0, 37) == "000000000000 000000000000000000000000");
    }
}
