#include "pnw/stats.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>

#include "pnw/pn_gen.hpp"

namespace pnw {

namespace {

void check_budget(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw budget_error("length " + std::to_string(n) + " exceeds the enumeration budget (" +
                           std::to_string(limit) + "); raise the limit explicitly for long runs");
}

binary_word random_word(std::size_t n, std::mt19937_64& rng) {
    binary_word w(n);
    for (std::size_t i = 0; i < n; i += 64) {
        std::uint64_t bits = rng();
        for (std::size_t k = 0; k < 64 && i + k < n; ++k)
            w.set_bit(i + k, (bits >> k) & 1u);
    }
    return w;
}

}  // namespace

pnw_counts count_pnw(std::size_t n, std::size_t limit) {
    check_budget(n, limit);
    pnw_counts counts;
    counts.per_density.assign(n + 1, 0);
    for (std::size_t d = 0; d <= n; ++d) {
        counts.per_density[d] = count_pn_fixed_density(n, d);
        counts.total += counts.per_density[d];
    }
    return counts;
}

std::vector<pnw_series_row> series(std::size_t max_n, std::size_t limit) {
    check_budget(max_n, limit);
    std::vector<pnw_series_row> rows;
    rows.reserve(max_n);
    std::uint64_t previous = 1; // pnw(0): the empty word
    for (std::size_t n = 1; n <= max_n; ++n) {
        pnw_series_row row;
        row.n = n;
        row.per_density.assign(n + 1, 0);
        std::uint64_t cr_sum = 0;
        for (std::size_t d = 0; d <= n; ++d) {
            std::uint64_t block = 0;
            generate_pn_fixed_density(n, d, [&](const binary_word&, const gen_node& v) {
                ++block;
                cr_sum += v.critical_length();
            });
            row.per_density[d] = block;
            row.pnw += block;
        }
        row.ratio = static_cast<double>(row.pnw) / static_cast<double>(previous);
        row.mean_cr = static_cast<double>(cr_sum) / static_cast<double>(row.pnw);
        previous = row.pnw;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t pnf_critical_length(const binary_word& w) {
    const std::size_t n = w.size();
    if (n == 0) return 0;
    std::size_t longest_run = 0;
    std::size_t run = 0;
    std::size_t density = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (w.bit(i)) {
            ++run;
            ++density;
            if (run > longest_run) longest_run = run;
        } else {
            run = 0;
        }
    }
    if (density <= longest_run) return n; // all 1s sit in one run
    // shortest window holding longest_run + 1 ones
    const std::size_t target = longest_run + 1;
    std::size_t best = n;
    std::size_t ones = 0;
    std::size_t left = 0;
    for (std::size_t right = 0; right < n; ++right) {
        ones += w.bit(right);
        while (ones == target) {
            if (right - left + 1 < best) best = right - left + 1;
            ones -= w.bit(left);
            ++left;
        }
    }
    return best - 1;
}

random_pnf_sample random_pnf_experiment(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
    assert(samples >= 1);
    std::mt19937_64 rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const binary_word w = random_word(n, rng);
        const auto cr = static_cast<double>(pnf_critical_length(w));
        sum += cr;
        sum_sq += cr * cr;
    }
    random_pnf_sample sample;
    sample.n = n;
    sample.samples = samples;
    sample.seed = seed;
    sample.mean_cr = sum / static_cast<double>(samples);
    const double variance =
        std::max(0.0, sum_sq / static_cast<double>(samples) - sample.mean_cr * sample.mean_cr);
    sample.std_error = std::sqrt(variance / static_cast<double>(samples));
    return sample;
}

namespace {

std::string fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

}  // namespace

void write_series_csv(std::ostream& out, std::span<const pnw_series_row> rows) {
    out << "n,pnw,ratio,mean_cr\n";
    for (const auto& row : rows)
        out << row.n << ',' << row.pnw << ',' << fixed6(row.ratio) << ',' << fixed6(row.mean_cr)
            << '\n';
}

void write_density_csv(std::ostream& out, std::span<const pnw_series_row> rows) {
    out << "n,d,count\n";
    for (const auto& row : rows)
        for (std::size_t d = 0; d < row.per_density.size(); ++d)
            out << row.n << ',' << d << ',' << row.per_density[d] << '\n';
}

void write_random_pnf_csv(std::ostream& out, const random_pnf_sample& sample) {
    out << "n,samples,seed,mean_cr,std_error\n";
    out << sample.n << ',' << sample.samples << ',' << sample.seed << ','
        << fixed6(sample.mean_cr) << ',' << fixed6(sample.std_error) << '\n';
}

}  // namespace pnw
