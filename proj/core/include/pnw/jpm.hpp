#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pnw/binary_word.hpp"

namespace pnw {

// Per-length substring 1-count bounds of a text. For every length k the
// realizable 1-counts of length-k substrings form the full integer interval
// [min_ones[k], max_ones[k]], so the two arrays answer existence queries in
// constant time.
struct jumbled_index {
    std::size_t text_length = 0;
    std::vector<std::uint32_t> min_ones; // indexed 0..n
    std::vector<std::uint32_t> max_ones;
};

// Builds the index from the two prefix normal forms of the text: the
// ones-form maximizes and the zeros-form minimizes prefix 1-counts over all
// substring rearrangements, so their prefix counts are exactly the bounds.
jumbled_index build_index(const binary_word& text);

// Does the text have a substring with exactly x ones and y zeros?
// x + y > n is a well-formed "no"; (0, 0) is always "yes".
bool query(const jumbled_index& index, std::uint64_t x, std::uint64_t y);

// Text format: header "n=<n>", then one "k,min,max" line per k = 0..n.
void write_index(std::ostream& out, const jumbled_index& index);

// Throws std::runtime_error on malformed input.
jumbled_index read_index(std::istream& in);

}  // namespace pnw
