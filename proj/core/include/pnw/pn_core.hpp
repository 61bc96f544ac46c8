#pragma once

#include <cstdint>
#include <vector>

#include "pnw/binary_word.hpp"

namespace pnw {

// Number of 1s in the length-i prefix w_1..w_i.
// Throws std::out_of_range for i > |w|.
std::size_t prefix_ones(const binary_word& w, std::size_t i);

// Table p with p[i] = prefix_ones(w, i) for i = 0..|w|.
std::vector<std::uint32_t> prefix_counts(const binary_word& w);

// Maximum number of 1s over all length-i substrings, by a sliding window.
// Throws std::out_of_range for i > |w|.
std::size_t max_ones(const binary_word& w, std::size_t i);

// Table f with f[i] = max_ones(w, i) for i = 0..|w|. O(n^2); this is the
// reference path, not the generation hot path.
std::vector<std::uint32_t> max_ones_table(const binary_word& w);

// A word is prefix normal when no substring has more 1s than the prefix of
// the same length. Quadratic-time check; serves as the brute-force oracle
// for the incremental generator.
bool is_prefix_normal(const binary_word& w);

// Decomposition w = 1^s 0^t gamma with gamma empty or starting with 1.
// The all-1s word gets (n, 0, empty); consumers treat t = 0 as "no children".
struct critical_prefix {
    std::size_t ones_run = 0;   // s
    std::size_t zeros_run = 0;  // t
    binary_word suffix;         // gamma

    std::size_t length() const { return ones_run + zeros_run; }
};

critical_prefix critical_prefix_of(const binary_word& w);

enum class polarity { ones, zeros };

// The unique prefix normal word sharing w's max-ones function (polarity::ones),
// or the analogous form w.r.t. 0s (computed by complementing both ways).
binary_word pnf(const binary_word& w, polarity p = polarity::ones);

}  // namespace pnw
