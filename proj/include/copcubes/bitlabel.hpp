#ifndef COPCUBES_BITLABEL_HPP
#define COPCUBES_BITLABEL_HPP

#include <bit>
#include <cstdint>
#include <string>

#include "copcubes/errors.hpp"

namespace copcubes {

// A vertex label is a binary string x_1 x_2 ... x_n stored as a bit mask with
// x_1 at bit 0, x_2 at bit 1, and so on.  The empty label (n = 0) is mask 0.
using Label = std::uint32_t;

constexpr int kMaxDimension = 24; // default generator cap: 2^24 labels

inline int hamming(Label a, Label b) { return std::popcount(a ^ b); }

// True if the string contains two consecutive 1s ("11" substring).
inline bool has_adjacent_ones(Label m) { return (m & (m >> 1)) != 0; }

// Fibonacci-string test: no "11" substring.
inline bool fibonacci_ok(Label m) { return !has_adjacent_ones(m); }

// Lucas-string test: no "11" substring and not (first bit and last bit both 1).
inline bool lucas_ok(Label m, int n) {
    if (has_adjacent_ones(m)) return false;
    if (n >= 2 && (m & 1u) && (m >> (n - 1)) & 1u) return false;
    if (n == 1 && (m & 1u)) return false; // "1" starts and ends with 1
    return true;
}

// Render as the string x_1 x_2 ... x_n (leftmost character is x_1).
inline std::string label_to_string(Label m, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline Label parse_label(const std::string& s) {
    Label m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') m |= Label{1} << i;
        else if (s[i] != '0') throw FormatError("label contains non-binary character: " + s);
    }
    return m;
}

// Reverse the low n bits, i.e. map the mask to the integer whose binary
// representation (most significant digit first) reads as the label string.
// Iterating that integer in ascending order enumerates labels in
// lexicographic string order.
inline Label bit_reverse(Label m, int n) {
    Label r = 0;
    for (int i = 0; i < n; ++i) r = (r << 1) | ((m >> i) & 1u);
    return r;
}

// Lexicographic order on equal-length label strings: decided by the lowest
// bit index where the masks differ (leftmost differing character).
inline bool label_lex_less(Label a, Label b) {
    Label diff = a ^ b;
    if (diff == 0) return false;
    int i = std::countr_zero(diff);
    return ((a >> i) & 1u) == 0;
}

} // namespace copcubes

#endif
