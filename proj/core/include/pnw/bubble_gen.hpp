#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>

#include "pnw/binary_word.hpp"

namespace pnw {

// Node of the recursive swap computation tree: the working word at this node
// is 1^s 0^t gamma, and gamma stays fixed throughout the node's subtree.
// Child i (1 <= i <= t) is 1^{s-1} 0^i 1 0^{t-i} gamma.
struct gen_node {
    std::size_t ones_run = 0;      // s
    std::size_t zeros_run = 0;     // t
    std::size_t suffix_start = 0;  // 0-based index where gamma begins

    std::size_t critical_length() const { return ones_run + zeros_run; }
};

// Child-cut oracle driving the traversal. accept_child is called with
// increasing i; the engine stops the child loop at the first rejection, so a
// monotone oracle (left siblings of an accepted child are accepted) cuts
// exactly its language's subtree. enter/after_child/leave let an oracle keep
// incremental per-node state.
template <typename O>
concept child_oracle = requires(O o, const binary_word& w, const gen_node& v, std::size_t i) {
    { o.enter(w, v) } -> std::same_as<void>;
    { o.accept_child(w, v, i) } -> std::same_as<bool>;
    { o.after_child(w, v, i) } -> std::same_as<void>;
    { o.leave(w, v) } -> std::same_as<void>;
};

// Keeps the full tree: generates all of B_d^n in cool-lex order.
struct accept_all_oracle {
    void enter(const binary_word&, const gen_node&) {}
    bool accept_child(const binary_word&, const gen_node&, std::size_t) { return true; }
    void after_child(const binary_word&, const gen_node&, std::size_t) {}
    void leave(const binary_word&, const gen_node&) {}
};

// Materializes each candidate child and asks a membership predicate.
// Test scaffolding for languages without an incremental test.
template <typename Pred>
struct brute_force_oracle {
    Pred in_language;

    void enter(const binary_word&, const gen_node&) {}
    bool accept_child(const binary_word& w, const gen_node& v, std::size_t i) {
        binary_word child = w;
        child.swap_bits(v.ones_run - 1, v.ones_run + i - 1);
        return in_language(child);
    }
    void after_child(const binary_word&, const gen_node&, std::size_t) {}
    void leave(const binary_word&, const gen_node&) {}
};

template <typename Pred>
brute_force_oracle(Pred) -> brute_force_oracle<Pred>;

namespace detail {

template <typename O, typename V>
std::uint64_t generate_rec(binary_word& w, const gen_node& v, O& oracle, V& visit) {
    std::uint64_t visited = 0;
    const std::size_t s = v.ones_run;
    const std::size_t t = v.zeros_run;
    if (s > 0 && t > 0) {
        oracle.enter(w, v);
        for (std::size_t i = 1; i <= t; ++i) {
            if (!oracle.accept_child(w, v, i)) break;
            const gen_node child{s - 1, i, s + i - 1};
            assert(child.critical_length() < v.critical_length());
            w.swap_bits(s - 1, s + i - 1);
            visited += generate_rec(w, child, oracle, visit);
            oracle.after_child(w, v, i);
            // undo with the pre-increment index or the word is corrupted
            w.swap_bits(s - 1, s + i - 1);
        }
        oracle.leave(w, v);
    }
    visit(static_cast<const binary_word&>(w), v);
    return visited + 1;
}

}  // namespace detail

// Post-order traversal of the subtree rooted at the current word, which must
// have the shape 1^s 0^t gamma. The word is mutated in place during the
// traversal and restored to its initial state before returning. Visitors get
// a read-only view of the shared word; they must not retain it.
// (Visiting before the child loop instead would emit co-lex order; only the
// post-order form is exposed.)
template <child_oracle O, typename V>
std::uint64_t generate_subtree(binary_word& w, std::size_t s, std::size_t t, O&& oracle, V&& visit) {
#ifndef NDEBUG
    assert(s + t <= w.size());
    for (std::size_t k = 0; k < s; ++k) assert(w.bit(k));
    for (std::size_t k = s; k < s + t; ++k) assert(!w.bit(k));
#endif
    return detail::generate_rec(w, gen_node{s, t, s + t}, oracle, visit);
}

// Full fixed-density run from the root 1^d 0^{n-d}; with accept_all_oracle
// this emits all of B_d^n in cool-lex order and returns binomial(n, d).
template <child_oracle O, typename V>
std::uint64_t generate_fixed_density(std::size_t n, std::size_t d, O&& oracle, V&& visit) {
    assert(d <= n);
    binary_word w = binary_word::ones_then_zeros(d, n - d);
    return generate_subtree(w, d, n - d, oracle, visit);
}

// The word with positions i and j (0-based) exchanged.
// Throws std::out_of_range on invalid positions.
binary_word swapped(const binary_word& w, std::size_t i, std::size_t j);

// Replaces the first occurrence of 01 by 10 (the bubble move); empty result
// when w contains no 01. Bubble languages are closed under this move.
std::optional<binary_word> swap_first_01(const binary_word& w);

struct gray_code_check {
    bool cyclic = false;                // also check last-to-first
    bool require_equal_density = false; // fixed-density listing
};

// True when every adjacent pair differs in at most 4 positions (reachable by
// two swaps when densities match, which additionally forces an even count of
// differing positions). Words must all have the same length.
bool verify_gray_code(std::span<const binary_word> words, gray_code_check opts = {});

}  // namespace pnw
