#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace codecert {

class LengthMismatch : public std::invalid_argument {
public:
    LengthMismatch(std::size_t a, std::size_t b);
};

/// A binary word of fixed length n <= 64, packed into one machine word.
///
/// Coordinate 0 is stored in the most significant of the n low bits, so the
/// integer order of two words of equal length is the lexicographic order of
/// their printed strings.
class Word {
public:
    static constexpr std::size_t kMaxLength = 64;

    Word() = default;
    Word(std::size_t length, std::uint64_t bits);

    static Word zero(std::size_t length) { return Word(length, 0); }
    static Word ones(std::size_t length) { return Word(length, mask(length)); }
    /// Parses a string of '0'/'1' characters; coordinate 0 is the first character.
    static Word from_string(std::string_view text);

    std::size_t length() const { return length_; }
    std::uint64_t bits() const { return bits_; }

    bool bit(std::size_t coordinate) const;
    Word with_bit(std::size_t coordinate, bool value) const;

    std::string to_string() const;

    Word complement() const { return Word(length_, ~bits_ & mask(length_)); }

    friend Word operator+(const Word& u, const Word& v);
    friend Word operator&(const Word& u, const Word& v);
    Word& operator+=(const Word& v) { return *this = *this + v; }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

    static constexpr std::uint64_t mask(std::size_t length) {
        return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
    }

private:
    // Order of members matters for the defaulted <=>: length first, then bits.
    std::size_t length_ = 0;
    std::uint64_t bits_ = 0;
};

inline std::size_t weight(const Word& w) { return static_cast<std::size_t>(std::popcount(w.bits())); }

std::size_t hamming_distance(const Word& u, const Word& v);

struct IntersectionWeight {
    std::size_t count = 0;
    /// The bilinear form (u, v) = wt(u & v) mod 2.
    unsigned parity = 0;
};

IntersectionWeight intersection_weight(const Word& u, const Word& v);

/// For two words of weight w: d(u,v) = 2 (mod 4) iff wt(u & v) != w (mod 2).
/// Returns true when the two sides agree. It always should; exposed as a test oracle.
/// Throws std::invalid_argument if either word does not have weight w.
bool parity_distance_check(const Word& u, const Word& v, std::size_t w);

}  // namespace codecert
