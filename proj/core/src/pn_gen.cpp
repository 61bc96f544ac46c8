#include "pnw/pn_gen.hpp"

#include <stdexcept>

#include "pnw/pn_core.hpp"

namespace pnw {

std::size_t pn_f_table::update(const binary_word& w, std::size_t suffix_start, std::size_t bound) {
    assert(bound < f_.size());
    frames_.push_back(journal_.size());
    const std::size_t n = w.size();
    std::uint32_t ones = 0;
    for (std::size_t len = 1; len <= bound; ++len) {
        const std::size_t pos = suffix_start + len - 1;
        if (pos < n && w.bit(pos)) ++ones;
        if (ones > f_[len]) {
            journal_.emplace_back(static_cast<std::uint32_t>(len), f_[len]);
            f_[len] = ones;
        }
    }
    return bound;
}

std::size_t pn_f_table::restore() {
    if (frames_.empty())
        throw std::logic_error("pn_f_table::restore without a matching update");
    const std::size_t mark = frames_.back();
    frames_.pop_back();
    const std::size_t replayed = journal_.size() - mark;
    while (journal_.size() > mark) {
        const auto [len, previous] = journal_.back();
        journal_.pop_back();
        f_[len] = previous;
    }
    return replayed;
}

std::size_t z_counter::init(const binary_word& w, const gen_node& v) {
    suffix_start_ = v.suffix_start;
    len_ = static_cast<std::ptrdiff_t>(v.ones_run) - static_cast<std::ptrdiff_t>(v.zeros_run);
    z_ = 0;
    std::size_t steps = 0;
    for (std::ptrdiff_t offset = 0; offset < len_; ++offset, ++steps)
        z_ += padded_bit(w, offset);
    return steps;
}

void z_counter::advance(const binary_word& w) {
    // tracked prefix never outgrows the node's critical length
    assert(len_ + 2 <= static_cast<std::ptrdiff_t>(w.size()));
    if (len_ >= 0) {
        z_ += padded_bit(w, len_);
        z_ += padded_bit(w, len_ + 1);
    } else if (len_ == -1) {
        z_ += padded_bit(w, 0);
    }
    len_ += 2;
}

namespace {

// from-scratch F of the padded suffix, for the test-mode cross-checks
std::vector<std::uint32_t> scratch_padded_f(const binary_word& w, std::size_t suffix_start,
                                            std::size_t bound) {
    const std::size_t tail = w.size() - suffix_start;
    binary_word gamma_padded(tail + bound);
    for (std::size_t k = 0; k < tail; ++k) gamma_padded.set_bit(k, w.bit(suffix_start + k));
    std::vector<std::uint32_t> f(bound + 1, 0);
    for (std::size_t len = 1; len <= bound; ++len)
        f[len] = static_cast<std::uint32_t>(max_ones(gamma_padded, len));
    return f;
}

std::uint64_t scratch_z(const binary_word& w, std::size_t suffix_start, std::ptrdiff_t len) {
    std::uint64_t ones = 0;
    for (std::ptrdiff_t offset = 0; offset < len; ++offset) {
        const std::size_t pos = suffix_start + static_cast<std::size_t>(offset);
        if (pos < w.size() && w.bit(pos)) ++ones;
    }
    return ones;
}

}  // namespace

void pn_oracle::enter(const binary_word& w, const gen_node& v) {
    const std::size_t steps = table_.update(w, v.suffix_start, v.critical_length());
    z_stack_.emplace_back();
    const std::size_t z_steps = z_stack_.back().init(w, v);
    if (opts_.counters) {
        opts_.counters->update_steps += steps;
        opts_.counters->z_init_steps += z_steps;
    }
    if (opts_.check_table) {
        const auto expect = scratch_padded_f(w, v.suffix_start, v.critical_length());
        for (std::size_t len = 1; len <= v.critical_length(); ++len)
            if (table_.value(len) != expect[len])
                throw std::logic_error("pn_f_table diverged from recomputation");
    }
}

bool pn_oracle::accept_child(const binary_word& w, const gen_node& v, std::size_t i) {
    if (opts_.counters) ++opts_.counters->membership_tests;
    const z_counter& z = z_stack_.back();
    if (opts_.check_z && z.value() != scratch_z(w, v.suffix_start, z.prefix_length()))
        throw std::logic_error("z counter diverged from recomputation");
    return is_pn_child(v.ones_run, v.zeros_run, i, table_.values(), z.value());
}

void pn_oracle::leave(const binary_word&, const gen_node&) {
    z_stack_.pop_back();
    const std::size_t steps = table_.restore();
    if (opts_.counters) opts_.counters->restore_steps += steps;
}

std::uint64_t count_pn_fixed_density(std::size_t n, std::size_t d, const gen_options& opts) {
    return generate_pn_fixed_density(n, d, [](const binary_word&, const gen_node&) {}, opts);
}

std::uint64_t count_pn_all(std::size_t n, const gen_options& opts) {
    return generate_pn_all(n, listing_order::density_increasing,
                           [](const binary_word&, const gen_node&) {}, opts);
}

}  // namespace pnw
