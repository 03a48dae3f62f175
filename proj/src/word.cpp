#include "codecert/word.hpp"

namespace codecert {

LengthMismatch::LengthMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("word length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

Word::Word(std::size_t length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length == 0 || length > kMaxLength)
        throw std::invalid_argument("word length must be in 1..64, got " + std::to_string(length));
    if ((bits & ~mask(length)) != 0) throw std::invalid_argument("bits set beyond word length");
}

Word Word::from_string(std::string_view text) {
    if (text.empty() || text.size() > kMaxLength)
        throw std::invalid_argument("word string must have 1..64 characters");
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("word string contains '" + std::string(1, c) + "'");
        bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Word(text.size(), bits);
}

bool Word::bit(std::size_t coordinate) const {
    if (coordinate >= length_) throw std::out_of_range("coordinate out of range");
    return (bits_ >> (length_ - 1 - coordinate)) & 1U;
}

Word Word::with_bit(std::size_t coordinate, bool value) const {
    if (coordinate >= length_) throw std::out_of_range("coordinate out of range");
    const std::uint64_t m = std::uint64_t{1} << (length_ - 1 - coordinate);
    return Word(length_, value ? (bits_ | m) : (bits_ & ~m));
}

std::string Word::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if ((bits_ >> (length_ - 1 - i)) & 1U) s[i] = '1';
    return s;
}

Word operator+(const Word& u, const Word& v) {
    if (u.length_ != v.length_) throw LengthMismatch(u.length_, v.length_);
    Word r;
    r.length_ = u.length_;
    r.bits_ = u.bits_ ^ v.bits_;
    return r;
}

Word operator&(const Word& u, const Word& v) {
    if (u.length_ != v.length_) throw LengthMismatch(u.length_, v.length_);
    Word r;
    r.length_ = u.length_;
    r.bits_ = u.bits_ & v.bits_;
    return r;
}

std::size_t hamming_distance(const Word& u, const Word& v) {
    if (u.length() != v.length()) throw LengthMismatch(u.length(), v.length());
    return static_cast<std::size_t>(std::popcount(u.bits() ^ v.bits()));
}

IntersectionWeight intersection_weight(const Word& u, const Word& v) {
    if (u.length() != v.length()) throw LengthMismatch(u.length(), v.length());
    const auto count = static_cast<std::size_t>(std::popcount(u.bits() & v.bits()));
    return {count, static_cast<unsigned>(count & 1U)};
}

bool parity_distance_check(const Word& u, const Word& v, std::size_t w) {
    if (weight(u) != w || weight(v) != w)
        throw std::invalid_argument("parity_distance_check: words must both have weight " + std::to_string(w));
    const bool distance_is_2_mod_4 = hamming_distance(u, v) % 4 == 2;
    const bool parity_differs = intersection_weight(u, v).parity != (w & 1U);
    return distance_is_2_mod_4 == parity_differs;
}

}  // namespace codecert
