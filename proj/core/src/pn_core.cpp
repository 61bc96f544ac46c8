#include "pnw/pn_core.hpp"

#include <stdexcept>

namespace pnw {

std::size_t prefix_ones(const binary_word& w, std::size_t i) {
    if (i > w.size()) throw std::out_of_range("prefix_ones: length exceeds word size");
    std::size_t ones = 0;
    for (std::size_t k = 0; k < i; ++k) ones += w.bit(k);
    return ones;
}

std::vector<std::uint32_t> prefix_counts(const binary_word& w) {
    std::vector<std::uint32_t> p(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        p[i + 1] = p[i] + static_cast<std::uint32_t>(w.bit(i));
    return p;
}

std::size_t max_ones(const binary_word& w, std::size_t i) {
    if (i > w.size()) throw std::out_of_range("max_ones: length exceeds word size");
    if (i == 0) return 0;
    std::size_t ones = 0;
    for (std::size_t k = 0; k < i; ++k) ones += w.bit(k);
    std::size_t best = ones;
    for (std::size_t k = i; k < w.size(); ++k) {
        ones += w.bit(k);
        ones -= w.bit(k - i);
        if (ones > best) best = ones;
    }
    return best;
}

std::vector<std::uint32_t> max_ones_table(const binary_word& w) {
    std::vector<std::uint32_t> f(w.size() + 1, 0);
    for (std::size_t i = 1; i <= w.size(); ++i)
        f[i] = static_cast<std::uint32_t>(max_ones(w, i));
    return f;
}

bool is_prefix_normal(const binary_word& w) {
    std::size_t prefix = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        prefix += w.bit(i - 1);
        if (max_ones(w, i) != prefix) return false;
    }
    return true;
}

critical_prefix critical_prefix_of(const binary_word& w) {
    const std::size_t n = w.size();
    std::size_t s = 0;
    while (s < n && w.bit(s)) ++s;
    std::size_t t = 0;
    while (s + t < n && !w.bit(s + t)) ++t;
    binary_word suffix(n - s - t);
    for (std::size_t k = s + t; k < n; ++k) suffix.set_bit(k - s - t, w.bit(k));
    return critical_prefix{s, t, std::move(suffix)};
}

binary_word pnf(const binary_word& w, polarity p) {
    if (p == polarity::zeros) return pnf(w.complement(), polarity::ones).complement();
    const auto f = max_ones_table(w);
    binary_word out(w.size());
    for (std::size_t i = 1; i <= w.size(); ++i)
        if (f[i] > f[i - 1]) out.set_bit(i - 1, true);
    return out;
}

}  // namespace pnw
