// pnw: generation and analysis of prefix normal binary words, plus the
// jumbled-matching index they induce.
//
// Exit codes double as a scripting API:
//   0 yes / pass, 1 no / fail, 2 usage or malformed input, 3 budget exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pnw/bubble_gen.hpp"
#include "pnw/jpm.hpp"
#include "pnw/pn_core.hpp"
#include "pnw/pn_gen.hpp"
#include "pnw/stats.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::size_t generation_limit(bool extended) {
    return extended ? pnw::extended_max_n : pnw::default_max_n;
}

void check_generation_budget(std::size_t n, bool extended) {
    if (n > generation_limit(extended))
        throw pnw::budget_error("length " + std::to_string(n) +
                                " exceeds the enumeration budget (" +
                                std::to_string(generation_limit(extended)) +
                                (extended ? ")" : "); rerun with --extended for up to " +
                                                      std::to_string(pnw::extended_max_n)));
}

std::vector<std::string> read_word_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

// ---------------------------------------------------------------- generate

struct generate_args {
    std::size_t n = 0;
    std::optional<std::size_t> density;
    std::string order = "lex-density";
    std::string output;
    bool extended = false;
};

int run_generate(const generate_args& args) {
    if (args.density && *args.density > args.n) {
        std::cerr << "error: --density must be between 0 and --n\n";
        return exit_usage;
    }
    check_generation_budget(args.n, args.extended);
    std::ofstream file;
    std::ostream& out = open_output(file, args.output);

    std::string line;
    const auto emit = [&](const pnw::binary_word& w, const pnw::gen_node&) {
        line.clear();
        w.append_to(line);
        line.push_back('\n');
        out << line;
    };
    if (args.density) {
        pnw::generate_pn_fixed_density(args.n, *args.density, emit);
    } else {
        const auto order = args.order == "cyclic" ? pnw::listing_order::cyclic_odd_even
                                                  : pnw::listing_order::density_increasing;
        pnw::generate_pn_all(args.n, order, emit);
    }
    out.flush();
    return exit_ok;
}

// -------------------------------------------------------------------- test

int run_test(const std::vector<std::string>& words) {
    bool all_normal = true;
    for (const auto& text : words) {
        const bool normal = pnw::is_prefix_normal(pnw::binary_word::from_string(text));
        std::cout << (normal ? "prefix-normal" : "not-prefix-normal") << '\n';
        all_normal = all_normal && normal;
    }
    return all_normal ? exit_ok : exit_no;
}

// --------------------------------------------------------------------- pnf

int run_pnf(const std::vector<std::string>& words, const std::string& polarity, bool both) {
    for (const auto& text : words) {
        const auto w = pnw::binary_word::from_string(text);
        if (both) {
            std::cout << pnw::pnf(w, pnw::polarity::ones).to_string() << '\n';
            std::cout << pnw::pnf(w, pnw::polarity::zeros).to_string() << '\n';
        } else {
            const auto p = polarity == "zeros" ? pnw::polarity::zeros : pnw::polarity::ones;
            std::cout << pnw::pnf(w, p).to_string() << '\n';
        }
    }
    return exit_ok;
}

// --------------------------------------------------------------------- jpm

int run_jpm_build(const std::string& text, const std::string& file, const std::string& out_path) {
    std::string word_text = text;
    if (!file.empty()) {
        const auto lines = read_word_lines(file);
        if (lines.empty()) throw std::runtime_error(file + " is empty");
        word_text = lines.front();
    }
    const auto index = pnw::build_index(pnw::binary_word::from_string(word_text));
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    pnw::write_index(out, index);
    return exit_ok;
}

int run_jpm_query(const std::string& text, const std::string& index_path, std::uint64_t x,
                  std::uint64_t y) {
    pnw::jumbled_index index;
    if (!index_path.empty()) {
        std::ifstream in(index_path);
        if (!in) throw std::runtime_error("cannot open index " + index_path);
        index = pnw::read_index(in);
    } else {
        index = pnw::build_index(pnw::binary_word::from_string(text));
    }
    const bool hit = pnw::query(index, x, y);
    std::cout << (hit ? "yes" : "no") << '\n';
    return hit ? exit_ok : exit_no;
}

// ------------------------------------------------------------------ verify

std::vector<std::string> brute_force_pn_words(std::size_t n, std::size_t density) {
    std::vector<std::string> words;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != density) continue;
        pnw::binary_word w(n);
        for (std::size_t k = 0; k < n; ++k)
            if ((mask >> (n - 1 - k)) & 1u) w.set_bit(k, true);
        if (pnw::is_prefix_normal(w)) words.push_back(w.to_string());
    }
    return words;
}

int run_verify(std::size_t n, const std::string& mode) {
    const std::size_t guard = (mode == "oracle" || mode == "bubble") ? 20 : 26;
    if (n > guard)
        throw pnw::budget_error("verify --mode " + mode + " is limited to n <= " +
                                std::to_string(guard));

    if (mode == "oracle") {
        for (std::size_t d = 0; d <= n; ++d) {
            std::vector<std::string> generated;
            pnw::generate_pn_fixed_density(n, d,
                                           [&](const pnw::binary_word& w, const pnw::gen_node&) {
                                               generated.push_back(w.to_string());
                                           });
            auto expected = brute_force_pn_words(n, d);
            std::vector<std::string> sorted = generated;
            std::sort(sorted.begin(), sorted.end());
            std::sort(expected.begin(), expected.end());
            if (sorted != expected) {
                std::cout << "FAIL oracle n=" << n << " d=" << d << ": generated "
                          << sorted.size() << " words, brute force " << expected.size() << '\n';
                return exit_no;
            }
            for (const auto& text : generated)
                if (!pnw::is_prefix_normal(pnw::binary_word::from_string(text))) {
                    std::cout << "FAIL oracle n=" << n << ": emitted non-normal word " << text
                              << '\n';
                    return exit_no;
                }
        }
        std::cout << "oracle n=" << n << ": generated sets match brute force for every density\n";
        return exit_ok;
    }

    if (mode == "graycode") {
        std::vector<pnw::binary_word> all;
        for (std::size_t d = 0; d <= n; ++d) {
            std::vector<pnw::binary_word> block;
            pnw::generate_pn_fixed_density(n, d,
                                           [&](const pnw::binary_word& w, const pnw::gen_node&) {
                                               block.push_back(w);
                                               all.push_back(w);
                                           });
            if (!pnw::verify_gray_code(block, {.cyclic = false, .require_equal_density = true})) {
                std::cout << "FAIL graycode n=" << n << " d=" << d << ": fixed-density block\n";
                return exit_no;
            }
        }
        if (!pnw::verify_gray_code(all, {})) {
            std::cout << "FAIL graycode n=" << n << ": concatenated listing\n";
            return exit_no;
        }
        std::vector<pnw::binary_word> cyclic;
        pnw::generate_pn_all(n, pnw::listing_order::cyclic_odd_even,
                             [&](const pnw::binary_word& w, const pnw::gen_node&) {
                                 cyclic.push_back(w);
                             });
        if (!pnw::verify_gray_code(cyclic, {.cyclic = true, .require_equal_density = false})) {
            std::cout << "FAIL graycode n=" << n << ": cyclic odd-even listing\n";
            return exit_no;
        }
        std::cout << "graycode n=" << n << ": all listings within two swaps per step\n";
        return exit_ok;
    }

    if (mode == "bubble") {
        std::uint64_t checked = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            pnw::binary_word w(n);
            for (std::size_t k = 0; k < n; ++k)
                if ((mask >> (n - 1 - k)) & 1u) w.set_bit(k, true);
            if (!pnw::is_prefix_normal(w)) continue;
            const auto moved = pnw::swap_first_01(w);
            if (!moved) continue;
            ++checked;
            if (!pnw::is_prefix_normal(*moved)) {
                std::cout << "FAIL bubble n=" << n << ": " << w.to_string() << " -> "
                          << moved->to_string() << " left the language\n";
                return exit_no;
            }
        }
        std::cout << "bubble n=" << n << ": first-01 swaps stay in the language (" << checked
                  << " words checked)\n";
        return exit_ok;
    }

    if (mode == "amortized") {
        pnw::gen_counters counters;
        pnw::gen_options opts;
        opts.counters = &counters;
        pnw::count_pn_all(n, opts);
        const double per_word =
            static_cast<double>(counters.total_work()) / static_cast<double>(counters.words);
        std::cout << "amortized n=" << n << ": " << counters.words << " words, "
                  << counters.total_work() << " work units, " << per_word << " per word (budget "
                  << 8 * n << ")\n";
        if (counters.total_work() > 8 * n * counters.words) {
            std::cout << "FAIL amortized n=" << n << ": work per word exceeds 8n\n";
            return exit_no;
        }
        return exit_ok;
    }

    std::cerr << "error: unknown verify mode " << mode << '\n';
    return exit_usage;
}

// ------------------------------------------------------------------- stats

int run_stats(std::size_t max_n, bool extended, const std::string& out_path,
              const std::string& density_path) {
    const auto rows = pnw::series(max_n, generation_limit(extended));
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    pnw::write_series_csv(out, rows);
    out.flush();
    if (!density_path.empty()) {
        std::ofstream density_file(density_path);
        if (!density_file) throw std::runtime_error("cannot write " + density_path);
        pnw::write_density_csv(density_file, rows);
    }
    return exit_ok;
}

int run_random_pnf(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                   const std::string& out_path) {
    const auto sample = pnw::random_pnf_experiment(n, samples, seed);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    pnw::write_random_pnf_csv(out, sample);
    out.flush();
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prefix normal word toolkit: Gray-code generation, normality "
                 "testing, normal forms, jumbled-matching index, verification "
                 "suites and counting experiments"};
    app.require_subcommand(1);

    generate_args gen;
    auto* generate = app.add_subcommand("generate", "stream prefix normal words, one per line");
    generate->add_option("--n", gen.n, "word length")->required();
    auto* density_opt =
        generate->add_option("--density", gen.density, "restrict to one density (count of 1s)");
    auto* order_opt = generate->add_option("--order", gen.order, "block order for the full listing")
                          ->check(CLI::IsMember({"lex-density", "cyclic"}))
                          ->capture_default_str();
    generate->add_option("--output", gen.output, "write to a file instead of stdout");
    generate->add_flag("--extended", gen.extended, "allow long runs (up to n=34)");
    density_opt->excludes(order_opt);

    std::string test_word;
    std::string test_file;
    auto* test = app.add_subcommand("test", "check words for prefix normality");
    auto* test_word_opt = test->add_option("word", test_word, "word of 0s and 1s");
    auto* test_file_opt = test->add_option("--file", test_file, "read words, one per line");
    test_word_opt->excludes(test_file_opt);

    std::string pnf_word;
    std::string pnf_file;
    std::string pnf_polarity = "ones";
    bool pnf_both = false;
    auto* pnf_cmd = app.add_subcommand("pnf", "print prefix normal forms");
    auto* pnf_word_opt = pnf_cmd->add_option("word", pnf_word, "word of 0s and 1s");
    auto* pnf_file_opt = pnf_cmd->add_option("--file", pnf_file, "read words, one per line");
    pnf_cmd->add_option("--polarity", pnf_polarity, "normal form w.r.t. 1s or 0s")
        ->check(CLI::IsMember({"ones", "zeros"}))
        ->capture_default_str();
    pnf_cmd->add_flag("--both", pnf_both, "print the ones form then the zeros form");
    pnf_word_opt->excludes(pnf_file_opt);

    auto* jpm = app.add_subcommand("jpm", "jumbled pattern matching index");
    jpm->require_subcommand(1);
    std::string jpm_text, jpm_file, jpm_out, jpm_index;
    std::uint64_t jpm_x = 0, jpm_y = 0;
    auto* jpm_build = jpm->add_subcommand("build", "build an index and write it to a file");
    auto* jb_text = jpm_build->add_option("--text", jpm_text, "the text word");
    auto* jb_file = jpm_build->add_option("--file", jpm_file, "read the text word from a file");
    jpm_build->add_option("--out", jpm_out, "index output path")->required();
    jb_text->excludes(jb_file);
    auto* jpm_query = jpm->add_subcommand("query", "ask for a substring with x 1s and y 0s");
    auto* jq_text = jpm_query->add_option("--text", jpm_text, "the text word");
    auto* jq_index = jpm_query->add_option("--index", jpm_index, "a previously built index file");
    jpm_query->add_option("--x", jpm_x, "number of 1s")->required();
    jpm_query->add_option("--y", jpm_y, "number of 0s")->required();
    jq_text->excludes(jq_index);

    std::size_t verify_n = 0;
    std::string verify_mode;
    auto* verify = app.add_subcommand("verify", "run a self-check suite");
    verify->add_option("--n", verify_n, "word length")->required();
    verify->add_option("--mode", verify_mode, "oracle | graycode | bubble | amortized")
        ->required()
        ->check(CLI::IsMember({"oracle", "graycode", "bubble", "amortized"}));

    std::size_t stats_max_n = 0;
    bool stats_extended = false;
    std::string stats_out, stats_density_out;
    auto* stats = app.add_subcommand("stats", "count prefix normal words up to a length (CSV)");
    stats->add_option("--max-n", stats_max_n, "largest length")->required();
    stats->add_flag("--extended", stats_extended, "allow long runs (up to n=34)");
    stats->add_option("--out", stats_out, "CSV output path (default stdout)");
    stats->add_option("--density-out", stats_density_out, "also write per-density counts");

    std::size_t rp_n = 0;
    std::uint64_t rp_samples = 10000;
    std::uint64_t rp_seed = 1;
    std::string rp_out;
    auto* random_pnf =
        app.add_subcommand("random-pnf", "critical prefix length of random-word normal forms");
    random_pnf->add_option("--n", rp_n, "word length")->required();
    random_pnf->add_option("--samples", rp_samples, "number of random words")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    random_pnf->add_option("--seed", rp_seed, "RNG seed")->capture_default_str();
    random_pnf->add_option("--out", rp_out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (generate->parsed()) return run_generate(gen);
        if (test->parsed()) {
            if (test_file_opt->count() > 0) return run_test(read_word_lines(test_file));
            if (test_word_opt->count() == 0) {
                std::cerr << "error: give a word or --file\n";
                return exit_usage;
            }
            return run_test({test_word});
        }
        if (pnf_cmd->parsed()) {
            if (pnf_file_opt->count() > 0)
                return run_pnf(read_word_lines(pnf_file), pnf_polarity, pnf_both);
            if (pnf_word_opt->count() == 0) {
                std::cerr << "error: give a word or --file\n";
                return exit_usage;
            }
            return run_pnf({pnf_word}, pnf_polarity, pnf_both);
        }
        if (jpm_build->parsed()) {
            if (jb_text->count() == 0 && jb_file->count() == 0) {
                std::cerr << "error: give --text or --file\n";
                return exit_usage;
            }
            return run_jpm_build(jpm_text, jpm_file, jpm_out);
        }
        if (jpm_query->parsed()) {
            if (jq_text->count() == 0 && jq_index->count() == 0) {
                std::cerr << "error: give --text or --index\n";
                return exit_usage;
            }
            return run_jpm_query(jpm_text, jpm_index, jpm_x, jpm_y);
        }
        if (verify->parsed()) return run_verify(verify_n, verify_mode);
        if (stats->parsed())
            return run_stats(stats_max_n, stats_extended, stats_out, stats_density_out);
        if (random_pnf->parsed()) return run_random_pnf(rp_n, rp_samples, rp_seed, rp_out);
    } catch (const pnw::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
