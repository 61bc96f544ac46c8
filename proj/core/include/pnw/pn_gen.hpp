#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pnw/binary_word.hpp"
#include "pnw/bubble_gen.hpp"

namespace pnw {

// Work counters for the amortized-cost accounting of the generator.
struct gen_counters {
    std::uint64_t update_steps = 0;     // table entries touched by updates
    std::uint64_t restore_steps = 0;    // journal entries replayed
    std::uint64_t z_init_steps = 0;     // suffix positions scanned for z
    std::uint64_t membership_tests = 0; // child tests
    std::uint64_t words = 0;            // words visited

    std::uint64_t total_work() const {
        return update_steps + restore_steps + z_init_steps + membership_tests;
    }
};

struct gen_options {
    gen_counters* counters = nullptr;
    // Validation hooks for tests: cross-check the incremental state against
    // from-scratch recomputation at every node / child test. Both throw
    // std::logic_error on divergence.
    bool check_table = false;
    bool check_z = false;
};

// Max-ones table of the current node's padded suffix: entry len holds the
// maximum 1-count over length-len substrings of gamma 0^{s+t}, valid for
// len = 1..s+t. Maintained incrementally: descending to a child merges the
// child suffix's prefix counts into the inherited table (a substring of the
// new suffix either is one of its prefixes or avoids the fresh leading 1 and
// so already occurs in the parent suffix); overwritten entries are journaled
// per recursion level and replayed on restore.
class pn_f_table {
public:
    explicit pn_f_table(std::size_t n) : f_(n + 1, 0) {}

    std::uint32_t value(std::size_t len) const {
        assert(len < f_.size());
        return f_[len];
    }

    std::span<const std::uint32_t> values() const { return f_; }

    // Recomputes entries 1..bound for the suffix starting at suffix_start in
    // w (positions past the end of w read as padding zeros). Opens a journal
    // frame; returns the number of entries touched (== bound).
    std::size_t update(const binary_word& w, std::size_t suffix_start, std::size_t bound);

    // Reverts the most recent update exactly; returns the number of entries
    // replayed. Throws std::logic_error when no update frame is open.
    std::size_t restore();

    std::size_t open_frames() const { return frames_.size(); }

private:
    std::vector<std::uint32_t> f_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> journal_; // (len, previous)
    std::vector<std::size_t> frames_;                              // journal marks
};

// Running 1-count of the prefix of the padded suffix spanned by the
// straddling substring of the current child candidate: at child i of node
// (s, t) the tracked prefix length is s + 2(i-1) - t, a prefix of negative
// length counting as empty. Advancing to the next child extends the prefix
// by exactly two positions.
class z_counter {
public:
    // Returns the number of suffix positions scanned (max(0, s - t)).
    std::size_t init(const binary_word& w, const gen_node& v);

    void advance(const binary_word& w);

    std::uint64_t value() const { return z_; }
    std::ptrdiff_t prefix_length() const { return len_; }

private:
    bool padded_bit(const binary_word& w, std::ptrdiff_t offset) const {
        const std::size_t pos = suffix_start_ + static_cast<std::size_t>(offset);
        return pos < w.size() && w.bit(pos);
    }

    std::uint64_t z_ = 0;
    std::ptrdiff_t len_ = 0;
    std::size_t suffix_start_ = 0;
};

// Constant-time membership test for child i of a prefix normal node
// 1^s 0^t gamma: the swapped word stays prefix normal unless the padded
// suffix has a substring of length s+i-1 holding at least s ones
// (f_padded_suffix entry), or the substring straddling the moved 1 holds at
// least s ones (z >= s-1).
inline bool is_pn_child(std::size_t s, std::size_t t, std::size_t i,
                        std::span<const std::uint32_t> f_padded_suffix, std::uint64_t z) {
    assert(s >= 1 && i >= 1 && i <= t);
    assert(s + i - 1 < f_padded_suffix.size());
    (void)t;
    if (f_padded_suffix[s + i - 1] >= s) return false;
    if (z >= s - 1) return false;
    return true;
}

// Child-cut oracle realizing the prefix normal language: an F table updated
// on entry and restored on exit, plus one z counter per open node.
class pn_oracle {
public:
    explicit pn_oracle(std::size_t n, const gen_options& opts = {})
        : table_(n), opts_(opts) {}

    void enter(const binary_word& w, const gen_node& v);
    bool accept_child(const binary_word& w, const gen_node& v, std::size_t i);
    void after_child(const binary_word& w, const gen_node&, std::size_t) {
        z_stack_.back().advance(w);
    }
    void leave(const binary_word&, const gen_node&);

    const pn_f_table& table() const { return table_; }

private:
    pn_f_table table_;
    std::vector<z_counter> z_stack_;
    gen_options opts_;
};

// Emits exactly the prefix normal words of length n and density d, in
// cool-lex post-order. The visitor receives the shared working word and the
// node (whose critical length is s + t); it must not retain the view.
template <typename V>
std::uint64_t generate_pn_fixed_density(std::size_t n, std::size_t d, V&& visit,
                                        const gen_options& opts = {}) {
    assert(d <= n);
    pn_oracle oracle(n, opts);
    gen_counters* counters = opts.counters;
    auto counted = [&](const binary_word& w, const gen_node& v) {
        if (counters) ++counters->words;
        visit(w, v);
    };
    return generate_fixed_density(n, d, oracle, counted);
}

enum class listing_order {
    density_increasing, // d = 0, 1, ..., n
    cyclic_odd_even,    // odd d ascending, then even d descending; cyclic Gray code
};

// All prefix normal words of length n, as the concatenation of fixed-density
// blocks. Each block starts from a fresh all-zero F table.
template <typename V>
std::uint64_t generate_pn_all(std::size_t n, listing_order order, V&& visit,
                              const gen_options& opts = {}) {
    std::uint64_t total = 0;
    if (order == listing_order::density_increasing) {
        for (std::size_t d = 0; d <= n; ++d)
            total += generate_pn_fixed_density(n, d, visit, opts);
    } else {
        for (std::size_t d = 1; d <= n; d += 2)
            total += generate_pn_fixed_density(n, d, visit, opts);
        for (std::size_t d = n - (n % 2); ; d -= 2) {
            total += generate_pn_fixed_density(n, d, visit, opts);
            if (d < 2) break;
        }
    }
    return total;
}

// Counting runs: no per-word work at all.
std::uint64_t count_pn_fixed_density(std::size_t n, std::size_t d,
                                     const gen_options& opts = {});
std::uint64_t count_pn_all(std::size_t n, const gen_options& opts = {});

}  // namespace pnw
