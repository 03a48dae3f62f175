#include "codecert/golay.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <string_view>

namespace codecert::golay {

namespace {

// Right half of the [I | A] generator. Row 0 is 0 followed by eleven 1s; rows
// 1..11 are a 1 followed by the cyclic shifts of the quadratic-residue pattern mod 11.
constexpr std::array<std::string_view, 12> kRightHalf = {
    "011111111111", "111011100010", "110111000101", "101110001011", "111100010110", "111000101101",
    "110001011011", "100010110111", "100101101110", "101011011100", "110110111000", "101101110001",
};

void require(bool ok, const std::string& what) {
    if (!ok) throw VerificationFailure("golay: " + what);
}

std::vector<std::size_t> leading(std::size_t count) {
    std::vector<std::size_t> v(count);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

LinearCode build_extended_golay() {
    std::vector<Word> rows;
    for (std::size_t i = 0; i < kRightHalf.size(); ++i) {
        std::string left(12, '0');
        left[i] = '1';
        rows.push_back(Word::from_string(left + std::string(kRightHalf[i])));
    }
    LinearCode g(24, rows);
    require(g.dimension() == 12, "dimension is not 12");
    require(dual(g) == g, "code is not self-dual");
    const auto we = weight_enumerator(g.to_code());
    for (std::size_t w = 1; w <= 24; ++w)
        require(we.counts[w] == 0 || w % 4 == 0, "weight " + std::to_string(w) + " is not divisible by 4");
    require(we.counts[4] == 0, "minimum distance below 8");
    require(we.counts[8] > 0, "minimum distance above 8");
    return g;
}

LinearCode build_punctured_golay() {
    const Code punctured = transform(build_extended_golay().to_code(), op::Puncture{{0}});
    LinearCode p = span(punctured);
    require(p.dimension() == 12, "punctured code lost dimension");
    require(min_distance(punctured) == 7, "punctured code does not have minimum distance 7");
    return p;
}

LinearCode build_shortened(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("shortening count must be in 1..4");
    const Code shortened = transform(build_extended_golay().to_code(), op::Shorten{leading(static_cast<std::size_t>(i))});
    require(shortened.size() == (std::size_t{1} << (12 - i)), "shortened code has the wrong size");
    require(min_distance(shortened) == 8, "shortened code does not have minimum distance 8");
    return span(shortened);
}

GolayFamily build_family() {
    GolayFamily f{build_extended_golay(), build_punctured_golay(), {}};
    for (int i = 1; i <= 4; ++i) f.shortened.emplace(i, build_shortened(i));
    return f;
}

Code build_optimal_cw(int n, int d, int w) {
    if (d != 8) throw std::invalid_argument("only d = 8 constructions are available");
    const Code extended = build_extended_golay().to_code();
    const Code twelve = transform(extended, op::SliceWeight{12});

    // Weight-12 Golay words whose leading coordinates match `prefix`, with those
    // coordinates deleted.
    const auto with_prefix = [&](std::string_view prefix) {
        std::vector<Word> out;
        std::vector<std::size_t> drop = leading(prefix.size());
        for (const Word& x : twelve) {
            bool match = true;
            for (std::size_t k = 0; k < prefix.size(); ++k) match = match && x.bit(k) == (prefix[k] == '1');
            if (match) out.push_back(delete_coordinates(x, drop));
        }
        return Code(24 - prefix.size(), std::move(out));
    };

    Code result(24);
    std::size_t expected = 0;
    if (n == 24 && w == 12) {
        result = twelve;
        expected = 2576;
    } else if (n == 23 && w == 11) {
        // Weight-11 words of the punctured code all come from weight-12 words with a 1 at coordinate 0.
        result = transform(build_punctured_golay().to_code(), op::SliceWeight{11});
        expected = 1288;
    } else if (n == 22 && w == 11) {
        result = with_prefix("10");
        expected = 672;
    } else if (n == 22 && w == 10) {
        result = with_prefix("11");
        expected = 616;
    } else {
        throw std::invalid_argument("no construction for (" + std::to_string(n) + "," + std::to_string(d) + "," +
                                    std::to_string(w) + ")");
    }
    require(result.size() == expected, "constant weight code has the wrong size");
    require(min_distance(result).value_or(99) >= 8, "constant weight code has minimum distance below 8");
    return result;
}

PrefixReplacement build_prefix_replacement() {
    const Code golay = build_extended_golay().to_code();

    // Move the lexicographically largest octad to the front; other coordinates keep their order.
    const Code octads = transform(golay, op::SliceWeight{8});
    const Word octad = octads[octads.size() - 1];
    std::vector<std::size_t> source;
    for (std::size_t i = 0; i < 24; ++i)
        if (octad.bit(i)) source.push_back(i);
    for (std::size_t i = 0; i < 24; ++i)
        if (!octad.bit(i)) source.push_back(i);
    const Code arranged = permute_coordinates(golay, source);

    constexpr std::array<std::string_view, 8> kPrefixes = {"00000000", "11000000", "10100000", "10010000",
                                                           "10001000", "10000100", "10000010", "10000001"};
    constexpr std::array<std::string_view, 8> kReplacements = {"0000", "1100", "1010", "1001",
                                                               "0110", "0101", "0011", "1111"};
    const std::vector<std::size_t> first_eight = leading(8);

    PrefixReplacement out{{}, Code(20)};
    std::vector<Word> words;
    for (std::size_t k = 0; k < kPrefixes.size(); ++k) {
        const Word prefix = Word::from_string(kPrefixes[k]);
        std::vector<Word> tails;
        for (const Word& x : arranged)
            if ((x.bits() >> 16) == prefix.bits()) tails.push_back(delete_coordinates(x, first_eight));
        Code constituent(16, tails);
        require(constituent.size() == 32, "octad coset does not have 32 words");
        require(min_distance(constituent).value_or(99) >= 8, "octad coset has minimum distance below 8");
        const std::uint64_t head = Word::from_string(kReplacements[k]).bits() << 16;
        for (const Word& t : constituent) words.emplace_back(20, head | t.bits());
        out.constituents.push_back(std::move(constituent));
    }
    out.code = Code(20, std::move(words));
    require(out.code.size() == 256, "prefix replacement code does not have 256 words");
    require(min_distance(out.code).value_or(99) >= 8, "prefix replacement code has minimum distance below 8");
    return out;
}

Code build_prefix_replacement_code() { return build_prefix_replacement().code; }

}  // namespace codecert::golay
