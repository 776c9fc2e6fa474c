#include "fll/word.hpp"

#include <charconv>
#include <stdexcept>

namespace fll {

namespace {

void check_alphabet(unsigned q) {
    if (q < 2 || q > 65536)
        throw std::domain_error("alphabet size must be in [2, 65536], got " + std::to_string(q));
}

Symbol parse_symbol(std::string_view token, unsigned q) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument("bad symbol '" + std::string(token) + "'");
    if (value >= q)
        throw std::invalid_argument("symbol " + std::to_string(value) +
                                    " out of range for alphabet size " + std::to_string(q));
    return static_cast<Symbol>(value);
}

}  // namespace

Word::Word(unsigned q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
    check_alphabet(q_);
    for (Symbol s : symbols_)
        if (s >= q_)
            throw std::invalid_argument("symbol " + std::to_string(s) +
                                        " out of range for alphabet size " + std::to_string(q_));
}

Word Word::parse(std::string_view text, unsigned q) {
    check_alphabet(q);
    std::vector<Symbol> symbols;
    if (q <= 10) {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument(std::string("bad symbol character '") + c + "'");
            symbols.push_back(parse_symbol(std::string_view(&c, 1), q));
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : comma - pos);
            symbols.push_back(parse_symbol(token, q));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return Word(q, std::move(symbols));
}

std::string Word::str() const {
    std::string out;
    if (q_ <= 10) {
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(symbols_[i]);
        }
    }
    return out;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = q_ <=> other.q_; c != 0) return c;
    if (auto c = symbols_.size() <=> other.symbols_.size(); c != 0) return c;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (auto c = symbols_[i] <=> other.symbols_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::int64_t SegmentProfile::length_sum() const {
    std::int64_t total = 0;
    for (int s : segment_lengths) total += s;
    return total;
}

std::int64_t SegmentProfile::length_square_sum() const {
    std::int64_t total = 0;
    for (int s : segment_lengths) total += std::int64_t(s) * s;
    return total;
}

int runs(const Word& w) {
    if (w.empty()) throw std::domain_error("runs: empty word");
    int r = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] != w[i - 1]) ++r;
    return r;
}

SegmentProfile alternating_profile(const Word& w) {
    if (w.empty()) throw std::domain_error("alternating_profile: empty word");
    const std::size_t n = w.size();
    SegmentProfile p;
    p.runs = runs(w);
    for (std::size_t i = 1; i < n; ++i)
        if (w[i] == w[i - 1]) ++p.zeros_of_diff;

    std::size_t i = 0;
    while (true) {
        std::size_t j = i;
        if (j + 1 < n && w[j + 1] != w[j]) {
            ++j;
            while (j + 1 < n && w[j + 1] == w[j - 1]) ++j;
        }
        p.segment_lengths.push_back(static_cast<int>(j - i + 1));
        if (j + 1 >= n) break;
        // A repeat ends the segment outright; a third symbol means the
        // alternation continues with a new symbol pair, overlapping at j.
        i = (w[j + 1] == w[j]) ? j + 1 : j;
    }
    return p;
}

Word difference_vector(const Word& w) {
    if (w.empty()) throw std::domain_error("difference_vector: empty word");
    std::vector<Symbol> diff;
    diff.reserve(w.size() - 1);
    for (std::size_t i = 1; i < w.size(); ++i) {
        unsigned d = (unsigned(w[i]) + w.q() - w[i - 1]) % w.q();
        diff.push_back(static_cast<Symbol>(d));
    }
    return Word(w.q(), std::move(diff));
}

Word make_constant(unsigned q, Symbol symbol, std::size_t n) {
    check_alphabet(q);
    if (symbol >= q) throw std::invalid_argument("make_constant: symbol out of range");
    return Word(q, std::vector<Symbol>(n, symbol));
}

Word make_alternating(unsigned q, Symbol a, Symbol b, std::size_t n) {
    check_alphabet(q);
    if (a >= q || b >= q) throw std::invalid_argument("make_alternating: symbol out of range");
    if (a == b && n > 1) throw std::invalid_argument("make_alternating: symbols must differ");
    std::vector<Symbol> symbols(n);
    for (std::size_t i = 0; i < n; ++i) symbols[i] = (i % 2 == 0) ? a : b;
    return Word(q, std::move(symbols));
}

Word make_cyclic(std::size_t n, unsigned q) {
    check_alphabet(q);
    std::vector<Symbol> symbols(n);
    for (std::size_t i = 0; i < n; ++i) symbols[i] = static_cast<Symbol>(i % q);
    return Word(q, std::move(symbols));
}

Word make_balanced(std::size_t n, int alpha) {
    if (n == 0) throw std::domain_error("make_balanced: n must be positive");
    if (alpha < 1 || static_cast<std::size_t>(alpha) > n)
        throw std::domain_error("make_balanced: alpha must be in [1, n]");
    const std::size_t a = static_cast<std::size_t>(alpha);
    const std::size_t c = (n + a - 1) / a;        // ceil(n/alpha)
    const std::size_t k = ((n - 1) % a) + 1;      // k == alpha exactly when alpha | n
    std::vector<Symbol> symbols;
    symbols.reserve(n);
    for (std::size_t seg = 0; seg < a; ++seg) {
        const std::size_t len = seg < k ? c : c - 1;
        const Symbol start = symbols.empty() ? Symbol{0} : symbols.back();
        for (std::size_t i = 0; i < len; ++i)
            symbols.push_back((i % 2 == 0) ? start : Symbol(1 - start));
    }
    return Word(2, std::move(symbols));
}

std::uint64_t word_index(const Word& w) {
    std::uint64_t index = 0;
    for (Symbol s : w) {
        if (index > (std::uint64_t(1) << 63) / w.q())
            throw std::overflow_error("word_index: q^n exceeds 2^63");
        index = index * w.q() + s;
    }
    return index;
}

Word word_from_index(std::uint64_t index, std::size_t n, unsigned q) {
    check_alphabet(q);
    std::vector<Symbol> symbols(n);
    for (std::size_t i = n; i-- > 0;) {
        symbols[i] = static_cast<Symbol>(index % q);
        index /= q;
    }
    if (index != 0) throw std::domain_error("word_from_index: index out of range");
    return Word(q, std::move(symbols));
}

}  // namespace fll
