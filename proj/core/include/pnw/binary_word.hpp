#pragma once

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pnw {

// Fixed-length binary word w_1...w_n, packed 64 bits per block.
// Position 0 in the API corresponds to w_1; the textual form prints w_1 first.
// Unused bits of the last block are kept zero so equality is block-wise.
class binary_word {
public:
    binary_word() = default;

    // n zeros.
    explicit binary_word(std::size_t n) : n_(n), blocks_(block_count(n), 0) {}

    // Parses a contiguous '0'/'1' string; throws std::invalid_argument otherwise.
    static binary_word from_string(std::string_view text);

    // 1^ones 0^zeros
    static binary_word ones_then_zeros(std::size_t ones, std::size_t zeros);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool bit(std::size_t i) const {
        assert(i < n_);
        return (blocks_[i >> 6] >> (i & 63)) & 1u;
    }

    void set_bit(std::size_t i, bool value) {
        assert(i < n_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            blocks_[i >> 6] |= mask;
        else
            blocks_[i >> 6] &= ~mask;
    }

    void swap_bits(std::size_t i, std::size_t j) {
        assert(i < n_ && j < n_);
        const bool bi = bit(i);
        const bool bj = bit(j);
        if (bi != bj) {
            set_bit(i, bj);
            set_bit(j, bi);
        }
    }

    // Number of 1s (the density).
    std::size_t count_ones() const;

    // Word with every bit flipped.
    binary_word complement() const;

    std::string to_string() const;
    void append_to(std::string& out) const;

    friend bool operator==(const binary_word&, const binary_word&) = default;

    const std::vector<std::uint64_t>& blocks() const { return blocks_; }

private:
    static std::size_t block_count(std::size_t n) { return (n + 63) / 64; }
    void clear_tail();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> blocks_;

    friend std::size_t hamming_distance(const binary_word&, const binary_word&);
};

// Positions the two words differ in; requires equal lengths.
std::size_t hamming_distance(const binary_word& a, const binary_word& b);

}  // namespace pnw
