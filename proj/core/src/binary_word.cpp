#include "pnw/binary_word.hpp"

#include <bit>
#include <stdexcept>

namespace pnw {

binary_word binary_word::from_string(std::string_view text) {
    binary_word w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            w.set_bit(i, true);
        else if (text[i] != '0')
            throw std::invalid_argument("binary word may contain only '0' and '1'");
    }
    return w;
}

binary_word binary_word::ones_then_zeros(std::size_t ones, std::size_t zeros) {
    binary_word w(ones + zeros);
    for (std::size_t i = 0; i < ones; ++i) w.set_bit(i, true);
    return w;
}

std::size_t binary_word::count_ones() const {
    std::size_t total = 0;
    for (std::uint64_t b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
    return total;
}

binary_word binary_word::complement() const {
    binary_word w(*this);
    for (std::uint64_t& b : w.blocks_) b = ~b;
    w.clear_tail();
    return w;
}

void binary_word::clear_tail() {
    if (n_ & 63) blocks_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
}

std::string binary_word::to_string() const {
    std::string out;
    append_to(out);
    return out;
}

void binary_word::append_to(std::string& out) const {
    out.reserve(out.size() + n_);
    for (std::size_t i = 0; i < n_; ++i) out.push_back(bit(i) ? '1' : '0');
}

std::size_t hamming_distance(const binary_word& a, const binary_word& b) {
    assert(a.size() == b.size());
    std::size_t diff = 0;
    for (std::size_t k = 0; k < a.blocks_.size(); ++k)
        diff += static_cast<std::size_t>(std::popcount(a.blocks_[k] ^ b.blocks_[k]));
    return diff;
}

}  // namespace pnw
