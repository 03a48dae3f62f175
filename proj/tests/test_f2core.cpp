#include "codecert/code.hpp"
#include "codecert/code_io.hpp"
#include "codecert/golay.hpp"
#include "codecert/rational.hpp"
#include "codecert/word.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace codecert;

namespace {

const Word d_row1 = Word::from_string("00001111111111111111");
const Word d_row2 = Word::from_string("11110000111111111111");

}  // namespace

TEST_CASE("word weight and distance") {
    CHECK(weight(Word::zero(20)) == 0);
    CHECK(weight(d_row1) == 16);
    CHECK(hamming_distance(d_row1, d_row1) == 0);
    CHECK(hamming_distance(d_row1, d_row2) == 8);
    CHECK(hamming_distance(d_row1, d_row1.complement()) == 20);
    CHECK_THROWS_AS(hamming_distance(Word::zero(3), Word::zero(4)), LengthMismatch);
}

TEST_CASE("word string round trip and ordering") {
    const Word w = Word::from_string("0110");
    CHECK(w.to_string() == "0110");
    CHECK(w.bit(1));
    CHECK_FALSE(w.bit(0));
    CHECK(Word::from_string("0111") < Word::from_string("1000"));
    CHECK_THROWS(Word::from_string("01a"));
}

TEST_CASE("intersection weight") {
    const IntersectionWeight z = intersection_weight(d_row1, Word::zero(20));
    CHECK(z.count == 0);
    CHECK(z.parity == 0);
    const IntersectionWeight r = intersection_weight(d_row1, d_row2);
    CHECK(r.count == 12);
    CHECK(r.parity == 0);
    const Word eleven = Word::from_string("11111111111000000000");
    CHECK(intersection_weight(eleven, eleven).count == 11);
    CHECK(intersection_weight(eleven, eleven).parity == 1);
}

TEST_CASE("parity theorem instances") {
    // weight 10, distance 14: intersection 3
    const Word a = Word::from_string("1111111111000000000000");
    const Word b = Word::from_string("1110000000111111100000");
    CHECK(hamming_distance(a, b) == 14);
    CHECK(parity_distance_check(a, b, 10));
    // weight 11, distance 14: intersection 4
    const Word c = Word::from_string("1111111111100000000000");
    const Word d = Word::from_string("1111000000011111110000");
    CHECK(hamming_distance(c, d) == 14);
    CHECK(parity_distance_check(c, d, 11));
    CHECK_THROWS_AS(parity_distance_check(a, c, 10), std::invalid_argument);
}

TEST_CASE("distance identity and parity theorem, exhaustive n <= 12") {
    std::size_t identity_failures = 0, parity_failures = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        const std::uint64_t top = std::uint64_t{1} << n;
        std::vector<std::vector<Word>> by_weight(n + 1);
        for (std::uint64_t x = 0; x < top; ++x) by_weight[static_cast<std::size_t>(std::popcount(x))].emplace_back(n, x);
        for (std::uint64_t x = 0; x < top; ++x)
            for (std::uint64_t y = 0; y < top; ++y) {
                const Word u(n, x), v(n, y);
                if (hamming_distance(u, v) != weight(u) + weight(v) - 2 * intersection_weight(u, v).count) ++identity_failures;
            }
        for (std::size_t w = 0; w <= n; ++w)
            for (const Word& u : by_weight[w])
                for (const Word& v : by_weight[w])
                    if (!parity_distance_check(u, v, w)) ++parity_failures;
    }
    CHECK(identity_failures == 0);
    CHECK(parity_failures == 0);
}

TEST_CASE("bilinear form is symmetric and additive") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> bits(0, Word::mask(24));
    for (int k = 0; k < 2000; ++k) {
        const Word u(24, bits(rng)), v(24, bits(rng)), z(24, bits(rng));
        CHECK(intersection_weight(u, v).parity == intersection_weight(v, u).parity);
        CHECK(intersection_weight(u + v, z).parity == (intersection_weight(u, z).parity ^ intersection_weight(v, z).parity));
        CHECK(hamming_distance(u, v) == weight(u) + weight(v) - 2 * intersection_weight(u, v).count);
    }
}

TEST_CASE("code set semantics") {
    const Code c(4, {Word::from_string("1000"), Word::from_string("0001"), Word::from_string("1000")});
    CHECK(c.size() == 2);
    CHECK(c[0] == Word::from_string("0001"));
    CHECK_THROWS(Code(4, {Word::from_string("100")}));
}

TEST_CASE("min distance") {
    CHECK_FALSE(min_distance(Code(5, {Word::from_string("10101")})).has_value());
    const Code d(20, {d_row1, d_row2, Word::from_string("11111111000011111111"), Word::from_string("11111111111100001111"),
                      Word::from_string("11111111111111110000")});
    CHECK(min_distance(d) == 8);
    CHECK(min_distance(golay::build_extended_golay().to_code()) == 8);
}

TEST_CASE("distance distribution agrees with naive counting") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 14);
        const Code c = testing::random_code(rng, n, 1 + static_cast<std::size_t>(rng() % 60));
        const DistanceDistribution dd = distance_distribution(c);
        const auto naive = testing::naive_pair_counts(c);
        REQUIRE(dd.ordered_pairs.size() == naive.size());
        for (std::size_t i = 0; i < naive.size(); ++i) {
            CHECK(dd.ordered_pairs[i] == naive[i]);
            Rational expect(static_cast<unsigned long>(naive[i]), static_cast<unsigned long>(c.size()));
            expect.canonicalize();
            CHECK(dd.a[i] == expect);
        }
        CHECK(dd.satisfies_invariants());
    }
}

TEST_CASE("distance distributions of the named codes") {
    const DistanceDistribution b = distance_distribution(golay::build_shortened(4).to_code());
    CHECK(b.a[0] == 1);
    CHECK(b.a[8] == 130);
    CHECK(b.a[12] == 120);
    CHECK(b.a[16] == 5);
    CHECK(b.a[20] == 0);
    const DistanceDistribution p = distance_distribution(golay::build_prefix_replacement_code());
    CHECK(p.a[0] == 1);
    CHECK(p.a[1] == 0);
    CHECK(p.a[8] == 126);
    CHECK(p.a[10] == 16);
    CHECK(p.a[12] == 96);
    CHECK(p.a[14] == 16);
    CHECK(p.a[16] == 1);
    const DistanceDistribution one = distance_distribution(Code(7, {Word::zero(7)}));
    CHECK(one.a[0] == 1);
    CHECK(one.satisfies_invariants());
    CHECK_THROWS_AS(distance_distribution(Code(7)), std::invalid_argument);
}

TEST_CASE("distribution invariants hold on every constructed code") {
    const golay::GolayFamily f = golay::build_family();
    std::vector<Code> codes{f.extended24.to_code(), f.punctured23.to_code(), golay::build_prefix_replacement_code()};
    for (const auto& [i, l] : f.shortened) codes.push_back(l.to_code());
    for (auto [n, d, w] : {std::array{24, 8, 12}, std::array{23, 8, 11}, std::array{22, 8, 11}, std::array{22, 8, 10}})
        codes.push_back(golay::build_optimal_cw(n, d, w));
    for (const Code& c : golay::build_prefix_replacement().constituents) codes.push_back(c);
    for (const Code& c : codes) CHECK(distance_distribution(c).satisfies_invariants());

    DistanceDistribution broken = distance_distribution(codes.back());
    broken.a[8] += Rational(1, 1000);
    CHECK_FALSE(broken.satisfies_invariants());
}

TEST_CASE("weight enumerator") {
    const WeightEnumerator g = weight_enumerator(golay::build_extended_golay().to_code());
    CHECK(g.counts[12] == 2576);
    CHECK(g.counts[8] == 759);
    CHECK(g.total() == 4096);
    const WeightEnumerator z = weight_enumerator(Code(6, {Word::zero(6)}));
    CHECK(z.counts[0] == 1);
    CHECK(z.total() == 1);
}

TEST_CASE("span and dual") {
    const LinearCode g = golay::build_extended_golay();
    const Code twelve = transform(g.to_code(), op::SliceWeight{12});
    CHECK(twelve.size() == 2576);
    CHECK(span(twelve) == g);
    CHECK(dual(g) == g);
    CHECK(span(Code(5, {Word::zero(5)})).dimension() == 0);
    CHECK(dual(LinearCode(7)).dimension() == 7);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const Code c = testing::random_code(rng, 14, 6);
        const LinearCode s = span(c);
        for (const Word& w : c) CHECK(s.contains(w));
        CHECK(span(s.to_code()) == s);
        const LinearCode dl = dual(s);
        CHECK(dl.dimension() + s.dimension() == 14);
        CHECK(dual(dl) == s);
        for (const Word& u : s.basis())
            for (const Word& v : dl.basis()) CHECK(intersection_weight(u, v).parity == 0);
    }
}

TEST_CASE("self orthogonality") {
    CHECK(self_orthogonality(golay::build_extended_golay().to_code()).self_orthogonal);
    const SelfOrthogonality s = self_orthogonality(Code(4, {Word::zero(4), Word::from_string("0100")}));
    CHECK_FALSE(s.self_orthogonal);
    REQUIRE(s.odd_pairs.size() == 1);
    CHECK(s.odd_pairs[0].first == Word::from_string("0100"));

    const Code c672 = golay::build_optimal_cw(22, 8, 11);
    CHECK_FALSE(self_orthogonality(c672).self_orthogonal);
    CHECK(self_orthogonality(transform(c672, op::ExtendWithBit{true})).self_orthogonal);
}

TEST_CASE("greedy orthogonal subcode") {
    const Code g = golay::build_extended_golay().to_code();
    CHECK(greedy_orthogonal_subcode(g, g[5], 0) == g);
    const Code two(3, {Word::from_string("100"), Word::from_string("110")});
    CHECK_FALSE(self_orthogonality(two).self_orthogonal);
    CHECK(greedy_orthogonal_subcode(two, two[0], 0).size() == 1);
    CHECK_THROWS_AS(greedy_orthogonal_subcode(two, Word::from_string("111"), 0), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Code c = testing::random_code(rng, 10 + static_cast<std::size_t>(trial % 13), 40);
        const Word seed = c[static_cast<std::size_t>(rng() % c.size())];
        const unsigned parity = static_cast<unsigned>(trial & 1);
        const Code out = greedy_orthogonal_subcode(c, seed, parity);
        CHECK(out.contains(seed));
        CHECK(out == greedy_orthogonal_subcode(c, seed, parity));
        bool pairwise = true;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                pairwise = pairwise && intersection_weight(out[i], out[j]).parity == parity;
        CHECK(pairwise);
        for (const Word& w : out) CHECK(c.contains(w));
        if (parity == 0) {
            std::size_t odd = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) odd += intersection_weight(c[i], c[j]).parity;
            CHECK(out.size() + odd >= c.size());
        }
    }
}

TEST_CASE("transforms") {
    const Code g = golay::build_extended_golay().to_code();
    CHECK(transform(g, op::Shorten{{0, 1, 2, 3}}).size() == 256);
    CHECK(transform(g, op::Translate{Word::zero(24)}) == g);
    CHECK(transform(g, op::Complement{}) == g);
    const Code p = transform(g, op::Puncture{{0}});
    CHECK(p.length() == 23);
    CHECK(p.size() == 4096);
    const Code e = transform(Code(2, {Word::from_string("01")}), op::ExtendWithBit{true});
    CHECK(e[0] == Word::from_string("011"));
    CHECK_THROWS_AS(transform(g, op::Shorten{{24}}), std::invalid_argument);
    CHECK_THROWS(transform(g, op::Translate{Word::zero(23)}));
}

TEST_CASE("code text format") {
    std::istringstream in("# comment\nn=4\n0110\n\n1001  # trailing\n");
    const Code c = read_code(in, "mem");
    CHECK(c.size() == 2);
    std::ostringstream out;
    write_code(out, c);
    CHECK(out.str() == "n=4\n0110\n1001\n");

    std::istringstream dup("n=3\n101\n101\n");
    CHECK_THROWS_AS(read_code(dup), ParseError);
    std::istringstream bad_len("n=3\n1010\n");
    CHECK_THROWS_AS(read_code(bad_len), ParseError);
    std::istringstream no_header("101\n");
    CHECK_THROWS_AS(read_code(no_header), ParseError);
    try {
        std::istringstream bad("n=3\n101\n1x1\n");
        read_code(bad, "f.code");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("f.code:3") != std::string::npos);
    }
}

TEST_CASE("exact rationals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-1.25e-3") == Rational(-1, 800));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(to_string(Rational(58121, 41)) == "58121/41");
    CHECK(to_decimal(Rational(58121, 41), 5) == "1417.58536");
    CHECK(parse_group_order("23!") == factorial(23));
    CHECK(binomial(24, 12) == 2704156);
}
