#include "pnw/bubble_gen.hpp"

#include <stdexcept>

namespace pnw {

binary_word swapped(const binary_word& w, std::size_t i, std::size_t j) {
    if (i >= w.size() || j >= w.size())
        throw std::out_of_range("swapped: position exceeds word size");
    binary_word out = w;
    out.swap_bits(i, j);
    return out;
}

std::optional<binary_word> swap_first_01(const binary_word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (!w.bit(i) && w.bit(i + 1)) {
            binary_word out = w;
            out.swap_bits(i, i + 1);
            return out;
        }
    }
    return std::nullopt;
}

namespace {

bool adjacent_ok(const binary_word& a, const binary_word& b, const gray_code_check& opts) {
    const std::size_t diff = hamming_distance(a, b);
    if (diff > 4) return false;
    const std::size_t da = a.count_ones();
    const std::size_t db = b.count_ones();
    if (opts.require_equal_density && da != db) return false;
    // equal density: the differing positions must pair up into swaps
    if (da == db && diff % 2 != 0) return false;
    return true;
}

}  // namespace

bool verify_gray_code(std::span<const binary_word> words, gray_code_check opts) {
    if (words.size() < 2) return true;
    for (std::size_t k = 1; k < words.size(); ++k) {
        if (words[k].size() != words[0].size()) return false;
        if (!adjacent_ok(words[k - 1], words[k], opts)) return false;
    }
    if (opts.cyclic && !adjacent_ok(words.back(), words.front(), opts)) return false;
    return true;
}

}  // namespace pnw
