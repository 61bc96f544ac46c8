// Acceptance suite: end-to-end checks of the generator, the Gray-code
// structure, the constant-time child test, the index, and the counting
// experiments, each against an independent brute-force route. Prints one
// PASS/FAIL line per criterion and exits nonzero when anything fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"
#include "pnw/bubble_gen.hpp"
#include "pnw/jpm.hpp"
#include "pnw/pn_core.hpp"
#include "pnw/pn_gen.hpp"
#include "pnw/stats.hpp"

namespace {

using pnw::binary_word;

struct outcome {
    bool ok = true;
    std::string detail;

    static outcome pass() { return {}; }
    static outcome fail(std::string why) { return {false, std::move(why)}; }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ------------------------------------------------------------ shared data

const std::vector<std::string>& brute_pn_words(int n) {
    static std::map<int, std::vector<std::string>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, oracle::pn_words(n)).first;
    return it->second;
}

const std::vector<pnw::pnw_series_row>& series26() {
    static const std::vector<pnw::pnw_series_row> rows = pnw::series(26);
    return rows;
}

std::vector<std::string> generated_listing(std::size_t n, std::size_t d) {
    std::vector<std::string> out;
    pnw::generate_pn_fixed_density(n, d, [&](const binary_word& w, const pnw::gen_node&) {
        out.push_back(w.to_string());
    });
    return out;
}

// -------------------------------------------------------------- criteria

outcome run_cli_listing() {
    const std::string expected =
        "00000\n10000\n10100\n10010\n10001\n11000\n11010\n10101\n11001\n"
        "11100\n11011\n11101\n11110\n11111\n";
    const auto start = std::chrono::steady_clock::now();
    const std::string command = std::string(PNW_CLI_PATH) + " generate --n 5 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return outcome::fail("could not spawn the CLI");
    std::string output;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    const double elapsed = seconds_since(start);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        return outcome::fail("CLI exited with a nonzero status");
    if (output != expected) return outcome::fail("listing differs from the expected 14 words");
    if (elapsed >= 1.0)
        return outcome::fail("took " + std::to_string(elapsed) + "s, budget is 1s");
    return outcome::pass();
}

outcome run_length5_classes() {
    const std::map<std::string, std::set<std::string>> expected = {
        {"11111", {"11111"}},
        {"11110", {"01111", "11110"}},
        {"11101", {"10111", "11101"}},
        {"11100", {"00111", "01110", "11100"}},
        {"11011", {"11011"}},
        {"11010", {"01011", "01101", "10110", "11010"}},
        {"11001", {"10011", "11001"}},
        {"11000", {"00011", "00110", "01100", "11000"}},
        {"10101", {"10101"}},
        {"10100", {"00101", "01010", "10100"}},
        {"10010", {"01001", "10010"}},
        {"10001", {"10001"}},
        {"10000", {"00001", "00010", "00100", "01000", "10000"}},
        {"00000", {"00000"}},
    };
    std::map<std::string, std::set<std::string>> classes;
    for (const std::string& w : oracle::all_words(5))
        classes[pnw::pnf(binary_word::from_string(w)).to_string()].insert(w);
    if (classes.size() != 14)
        return outcome::fail("expected 14 classes, got " + std::to_string(classes.size()));
    if (classes != expected) return outcome::fail("class contents differ from the known table");
    return outcome::pass();
}

outcome run_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 0; n <= 16; ++n) {
        const auto& normal = brute_pn_words(n);
        for (int d = 0; d <= n; ++d) {
            std::vector<std::string> expected;
            for (const auto& w : normal)
                if (oracle::prefix_ones(w, n) == d) expected.push_back(w);
            auto generated = generated_listing(static_cast<std::size_t>(n),
                                               static_cast<std::size_t>(d));
            std::sort(generated.begin(), generated.end());
            std::sort(expected.begin(), expected.end());
            if (generated != expected)
                return outcome::fail("n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                     ": generated " + std::to_string(generated.size()) +
                                     " words, brute force " + std::to_string(expected.size()));
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0)
        return outcome::fail("took " + std::to_string(elapsed) + "s, budget is 60s");
    return outcome::pass();
}

outcome run_gray_codes() {
    for (std::size_t n = 1; n <= 14; ++n) {
        std::vector<binary_word> all;
        for (std::size_t d = 0; d <= n; ++d) {
            std::vector<binary_word> block;
            pnw::generate_pn_fixed_density(n, d, [&](const binary_word& w, const pnw::gen_node&) {
                block.push_back(w);
                all.push_back(w);
            });
            if (!pnw::verify_gray_code(block, {.cyclic = false, .require_equal_density = true}))
                return outcome::fail("fixed-density block n=" + std::to_string(n) +
                                     " d=" + std::to_string(d));
        }
        if (!pnw::verify_gray_code(all, {}))
            return outcome::fail("concatenated listing n=" + std::to_string(n));
        std::vector<binary_word> cyclic;
        pnw::generate_pn_all(n, pnw::listing_order::cyclic_odd_even,
                             [&](const binary_word& w, const pnw::gen_node&) {
                                 cyclic.push_back(w);
                             });
        if (!pnw::verify_gray_code(cyclic, {.cyclic = true, .require_equal_density = false}))
            return outcome::fail("cyclic odd-even listing n=" + std::to_string(n) +
                                 " (including wraparound)");
    }
    return outcome::pass();
}

outcome run_bubble_closure() {
    std::uint64_t checked = 0;
    for (int n = 2; n <= 14; ++n) {
        for (const std::string& text : brute_pn_words(n)) {
            const binary_word w = binary_word::from_string(text);
            const auto moved = pnw::swap_first_01(w);
            if (!moved) continue;
            ++checked;
            if (!pnw::is_prefix_normal(*moved))
                return outcome::fail(text + " -> " + moved->to_string() + " left the language");
        }
    }
    if (checked == 0) return outcome::fail("no words with a 01 were found");
    return outcome::pass();
}

outcome run_child_test_crosscheck() {
    std::uint64_t tested = 0;
    for (int n = 1; n <= 16; ++n) {
        for (const std::string& text : brute_pn_words(n)) {
            const binary_word w = binary_word::from_string(text);
            const auto cp = pnw::critical_prefix_of(w);
            const std::size_t s = cp.ones_run;
            const std::size_t t = cp.zeros_run;
            if (s == 0 || t == 0) continue;
            // padded suffix and its max-ones table, straight from the scans
            binary_word padded(w.size());
            for (std::size_t k = 0; k < cp.suffix.size(); ++k)
                padded.set_bit(k, cp.suffix.bit(k));
            const auto f = pnw::max_ones_table(padded);
            for (std::size_t i = 1; i <= t; ++i) {
                const std::ptrdiff_t len = static_cast<std::ptrdiff_t>(s) +
                                           2 * (static_cast<std::ptrdiff_t>(i) - 1) -
                                           static_cast<std::ptrdiff_t>(t);
                const std::size_t z =
                    len <= 0 ? 0
                             : pnw::prefix_ones(padded, std::min(static_cast<std::size_t>(len),
                                                                 padded.size()));
                const bool fast = pnw::is_pn_child(s, t, i, f, z);
                const bool brute = pnw::is_prefix_normal(pnw::swapped(w, s - 1, s + i - 1));
                ++tested;
                if (fast != brute)
                    return outcome::fail("disagreement at " + text + " child " +
                                         std::to_string(i));
            }
        }
    }
    if (tested == 0) return outcome::fail("no children were tested");
    return outcome::pass();
}

outcome run_quantitative_counts() {
    for (const auto& row : series26()) {
        if (row.pnw < (std::uint64_t{1} << (row.n / 2)))
            return outcome::fail("count at n=" + std::to_string(row.n) +
                                 " fell below 2^(n/2)");
        if (!(row.ratio > 1.0 && row.ratio <= 2.0))
            return outcome::fail("growth ratio out of (1,2] at n=" + std::to_string(row.n));
    }
    // extended budget: exact count at n=30 stays under 5% of all words
    const auto counts = pnw::count_pnw(30, pnw::extended_max_n);
    const double fraction =
        static_cast<double>(counts.total) / static_cast<double>(std::uint64_t{1} << 30);
    if (!(fraction < 0.05))
        return outcome::fail("pnw(30)/2^30 = " + std::to_string(fraction) + ", expected < 0.05");
    return outcome::pass();
}

outcome run_index_example() {
    const auto index = pnw::build_index(binary_word::from_string("10011011001001"));
    if (index.min_ones[6] != 2 || index.max_ones[6] != 4)
        return outcome::fail("length-6 bounds are (" + std::to_string(index.min_ones[6]) + "," +
                             std::to_string(index.max_ones[6]) + "), expected (2,4)");
    for (const auto& [x, y] : {std::pair{4, 2}, {3, 3}, {2, 4}})
        if (!pnw::query(index, static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y)))
            return outcome::fail("query (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") answered no");
    for (const auto& [x, y] : {std::pair{5, 1}, {1, 5}})
        if (pnw::query(index, static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y)))
            return outcome::fail("query (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") answered yes");
    return outcome::pass();
}

outcome run_index_oracle_equivalence() {
    std::mt19937_64 rng(2026);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = rng() % 257;
        binary_word w(n);
        for (std::size_t i = 0; i < n; ++i) w.set_bit(i, rng() & 1u);
        const auto index = pnw::build_index(w);
        const binary_word flipped = w.complement();
        for (std::size_t k = 0; k <= n; ++k) {
            // sliding-window route
            const auto max_scan = static_cast<std::uint32_t>(pnw::max_ones(w, k));
            const auto min_scan =
                static_cast<std::uint32_t>(k - pnw::max_ones(flipped, k));
            if (index.max_ones[k] != max_scan || index.min_ones[k] != min_scan)
                return outcome::fail("table mismatch at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
            // realized 1-counts of length-k windows
            std::vector<char> present(k + 1, 0);
            if (k == 0) {
                present[0] = 1;
            } else if (k <= n) {
                std::size_t ones = 0;
                for (std::size_t j = 0; j < k; ++j) ones += w.bit(j);
                present[ones] = 1;
                for (std::size_t j = k; j < n; ++j) {
                    ones += w.bit(j);
                    ones -= w.bit(j - k);
                    present[ones] = 1;
                }
            }
            for (std::size_t x = 0; x <= k; ++x)
                if (pnw::query(index, x, k - x) != static_cast<bool>(present[x]))
                    return outcome::fail("query mismatch at n=" + std::to_string(n) +
                                         " k=" + std::to_string(k) + " x=" + std::to_string(x));
        }
    }
    return outcome::pass();
}

outcome run_amortized_accounting() {
    for (std::size_t n = 1; n <= 20; ++n) {
        pnw::gen_counters counters;
        pnw::gen_options opts;
        opts.counters = &counters;
        pnw::count_pn_all(n, opts);
        if (counters.total_work() > 8 * n * counters.words)
            return outcome::fail("work per word exceeded 8n at n=" + std::to_string(n));
    }
    // mean critical prefix length grows sublinearly: its fraction of n shrinks
    const auto& rows = series26();
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const double previous = rows[k - 1].mean_cr / static_cast<double>(rows[k - 1].n);
        const double current = rows[k].mean_cr / static_cast<double>(rows[k].n);
        if (current > previous + 1e-12)
            return outcome::fail("mean critical prefix fraction rose from n=" +
                                 std::to_string(rows[k - 1].n) + " to n=" +
                                 std::to_string(rows[k].n));
    }
    return outcome::pass();
}

outcome run_random_pnf_growth() {
    constexpr std::uint64_t samples = 20000;
    constexpr std::uint64_t seed = 424242;
    const auto e256 = pnw::random_pnf_experiment(256, samples, seed);
    const auto e512 = pnw::random_pnf_experiment(512, samples, seed);
    const auto e1024 = pnw::random_pnf_experiment(1024, samples, seed);
    const auto again = pnw::random_pnf_experiment(256, samples, seed);
    if (e256.mean_cr != again.mean_cr || e256.std_error != again.std_error)
        return outcome::fail("rerun with the same seed changed the estimate");
    const double step1 = e512.mean_cr - e256.mean_cr;
    const double step2 = e1024.mean_cr - e512.mean_cr;
    if (!(step1 > 0.0))
        return outcome::fail("estimate did not grow from n=256 to n=512");
    if (std::abs(step2 - step1) > 0.5 * step1)
        return outcome::fail("doubling steps " + std::to_string(step1) + " and " +
                             std::to_string(step2) + " differ by more than 50%");
    return outcome::pass();
}

}  // namespace

int main() {
    struct criterion {
        const char* name;
        std::function<outcome()> run;
    };
    const std::vector<criterion> criteria = {
        {"byte-exact `generate --n 5` listing within 1s", run_cli_listing},
        {"normal-form classes of all 32 length-5 words", run_length5_classes},
        {"generated sets equal brute-force sets for n <= 16, all densities", run_oracle_equivalence},
        {"Gray property of every listing for n <= 14 (cyclic included)", run_gray_codes},
        {"first-01 swap closure on all normal words, n <= 14", run_bubble_closure},
        {"constant-time child test vs brute force on every child, n <= 16", run_child_test_crosscheck},
        {"counts: lower bound, growth ratios, and the 5% share at n=30", run_quantitative_counts},
        {"worked index example: bounds (2,4) at k=6 and the five queries", run_index_example},
        {"index vs substring scan on 100 random words up to n=256", run_index_oracle_equivalence},
        {"amortized work <= 8n per word; mean critical prefix sublinear", run_amortized_accounting},
        {"random-word normal forms: additive growth per doubling, seeded", run_random_pnf_growth},
    };

    int failed = 0;
    std::printf("pnw acceptance suite\n");
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        const outcome result = criteria[k].run();
        const double elapsed = seconds_since(start);
        std::printf("[%2zu/%zu] %s  %s (%.2fs)\n", k + 1, criteria.size(),
                    result.ok ? "PASS" : "FAIL", criteria[k].name, elapsed);
        if (!result.ok) {
            std::printf("        %s\n", result.detail.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    if (failed == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
