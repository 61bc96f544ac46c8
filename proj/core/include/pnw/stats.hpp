#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnw/binary_word.hpp"

namespace pnw {

// Enumeration runs grow like 2^n; callers opt into large n explicitly.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_max_n = 26;
inline constexpr std::size_t extended_max_n = 34;

struct pnw_counts {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> per_density; // indexed 0..n
};

// Exact count of prefix normal words of length n, via a counting-only
// generation run. Throws budget_error when n exceeds the limit.
pnw_counts count_pnw(std::size_t n, std::size_t limit = default_max_n);

struct pnw_series_row {
    std::size_t n = 0;
    std::uint64_t pnw = 0;
    double ratio = 0.0;   // pnw(n) / pnw(n-1), in (1, 2]
    double mean_cr = 0.0; // mean critical prefix length over all PN words
    std::vector<std::uint64_t> per_density;
};

// Rows for n = 1..max_n. Recomputing with a larger max_n reproduces earlier
// rows exactly.
std::vector<pnw_series_row> series(std::size_t max_n, std::size_t limit = default_max_n);

struct random_pnf_sample {
    std::size_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double mean_cr = 0.0;   // mean critical prefix length of the PNF
    double std_error = 0.0;
};

// Draws uniform random words of length n and records the critical prefix
// length of each word's prefix normal form. Deterministic given the seed.
random_pnf_sample random_pnf_experiment(std::size_t n, std::uint64_t samples, std::uint64_t seed);

// Critical prefix length of pnf(w, ones) without materializing the form:
// the form's leading 1-run is the longest 1-run of w, and its first 0-run
// ends one position short of the shortest window holding one more 1.
std::size_t pnf_critical_length(const binary_word& w);

// CSV emission. Headers: "n,pnw,ratio,mean_cr", "n,d,count",
// "n,samples,seed,mean_cr,std_error". Fixed 6-digit formatting keeps reruns
// byte-identical.
void write_series_csv(std::ostream& out, std::span<const pnw_series_row> rows);
void write_density_csv(std::ostream& out, std::span<const pnw_series_row> rows);
void write_random_pnf_csv(std::ostream& out, const random_pnf_sample& sample);

}  // namespace pnw
