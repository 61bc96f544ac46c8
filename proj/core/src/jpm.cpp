#include "pnw/jpm.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pnw/pn_core.hpp"

namespace pnw {

jumbled_index build_index(const binary_word& text) {
    jumbled_index index;
    index.text_length = text.size();
    index.max_ones = prefix_counts(pnf(text, polarity::ones));
    index.min_ones = prefix_counts(pnf(text, polarity::zeros));
    return index;
}

bool query(const jumbled_index& index, std::uint64_t x, std::uint64_t y) {
    if (x > index.text_length || y > index.text_length) return false;
    const std::uint64_t k = x + y;
    if (k > index.text_length) return false;
    return index.min_ones[k] <= x && x <= index.max_ones[k];
}

void write_index(std::ostream& out, const jumbled_index& index) {
    out << "n=" << index.text_length << '\n';
    for (std::size_t k = 0; k <= index.text_length; ++k)
        out << k << ',' << index.min_ones[k] << ',' << index.max_ones[k] << '\n';
}

jumbled_index read_index(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
        throw std::runtime_error("jumbled index: missing n= header");
    jumbled_index index;
    try {
        index.text_length = std::stoul(line.substr(2));
    } catch (const std::exception&) {
        throw std::runtime_error("jumbled index: bad length in header");
    }
    index.min_ones.assign(index.text_length + 1, 0);
    index.max_ones.assign(index.text_length + 1, 0);
    for (std::size_t k = 0; k <= index.text_length; ++k) {
        if (!std::getline(in, line))
            throw std::runtime_error("jumbled index: truncated table");
        std::istringstream row(line);
        std::size_t key = 0;
        std::uint32_t lo = 0, hi = 0;
        char c1 = 0, c2 = 0;
        if (!(row >> key >> c1 >> lo >> c2 >> hi) || c1 != ',' || c2 != ',' || key != k)
            throw std::runtime_error("jumbled index: malformed row");
        if (lo > hi || hi > k)
            throw std::runtime_error("jumbled index: inconsistent bounds");
        index.min_ones[k] = lo;
        index.max_ones[k] = hi;
    }
    return index;
}

}  // namespace pnw
