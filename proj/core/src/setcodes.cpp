#include "fll/setcodes.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "fll/combinatorics.hpp"
#include "fll/errors.hpp"
#include "fll/metric.hpp"

namespace fll {

WordSet::WordSet(unsigned n, unsigned q) : n_(n), q_(q) {
    if (q < 2) throw std::domain_error("WordSet: alphabet size must be at least 2");
}

WordSet::WordSet(unsigned n, unsigned q, std::vector<Word> words) : WordSet(n, q) {
    for (Word& w : words) insert(std::move(w));
}

void WordSet::insert(Word w) {
    if (w.q() != q_) throw std::invalid_argument("WordSet::insert: alphabet mismatch");
    if (w.size() != n_) throw std::invalid_argument("WordSet::insert: length mismatch");
    auto pos = std::lower_bound(words_.begin(), words_.end(), w);
    if (pos == words_.end() || *pos != w) words_.insert(pos, std::move(w));
}

bool WordSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

void WordSet::write(std::ostream& out) const {
    out << "n=" << n_ << " q=" << q_ << "\n";
    for (const Word& w : words_) out << w.str() << "\n";
}

WordSet WordSet::read(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("WordSet::read: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    unsigned n = 0, q = 0;
    if (std::sscanf(line.c_str(), "n=%u q=%u", &n, &q) != 2)
        throw std::invalid_argument("WordSet::read: bad header '" + line + "'");
    WordSet s(n, q);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        s.insert(Word::parse(line, q));
    }
    return s;
}

int diameter(const WordSet& s) {
    if (s.empty()) throw std::domain_error("diameter: empty set");
    int d = 0;
    const auto& words = s.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            d = std::max(d, fll_distance(words[i], words[j]));
    return d;
}

bool is_maximal_anticode(const WordSet& s, int d) {
    if (diameter(s) > d) throw std::domain_error("is_maximal_anticode: set exceeds the diameter");
    const std::uint64_t space = upow_capped(s.q(), s.n(), std::uint64_t(1) << 20);
    if (space == 0)
        throw resource_limit_error("is_maximal_anticode: q^n exceeds the 2^20 scan guard");
    for (std::uint64_t index = 0; index < space; ++index) {
        Word y = word_from_index(index, s.n(), s.q());
        if (s.contains(y)) continue;
        bool joins = true;
        for (const Word& x : s)
            if (fll_distance(x, y) > d) {
                joins = false;
                break;
            }
        if (joins) return false;
    }
    return true;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct CliqueCollector {
    unsigned n;
    unsigned q;
    const std::vector<Word>& vocabulary;
    AnticodeSearchResult& result;

    void record(const std::vector<std::size_t>& clique) {
        ++result.total_maximal;
        std::vector<Word> members;
        members.reserve(clique.size());
        for (std::size_t v : clique) members.push_back(vocabulary[v]);
        WordSet s(n, q, std::move(members));
        if (clique.size() > result.max_size) {
            result.max_size = clique.size();
            result.max_witnesses.clear();
        }
        if (clique.size() == result.max_size) result.max_witnesses.push_back(s);
        if (clique.size() < result.min_size) {
            result.min_size = clique.size();
            result.min_witnesses.clear();
        }
        if (clique.size() == result.min_size) result.min_witnesses.push_back(std::move(s));
    }
};

void bron_kerbosch(std::vector<std::size_t>& r, Bits p, Bits x, const std::vector<Bits>& adj,
                   CliqueCollector& out) {
    if (p.none() && x.none()) {
        out.record(r);
        return;
    }
    // Pivot on the vertex of P|X covering most of P; only non-neighbours of
    // the pivot need to branch.
    std::size_t pivot = Bits::npos;
    std::size_t best = 0;
    Bits px = p | x;
    for (std::size_t u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
        const std::size_t covered = (p & adj[u]).count();
        if (pivot == Bits::npos || covered > best) {
            pivot = u;
            best = covered;
        }
    }
    Bits candidates = p & ~adj[pivot];
    for (std::size_t v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
        r.push_back(v);
        bron_kerbosch(r, p & adj[v], x & adj[v], adj, out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

AnticodeSearchResult search_maximal_anticodes(unsigned n, unsigned q, int d) {
    if (d < 0) throw std::domain_error("search_maximal_anticodes: negative diameter");
    const std::uint64_t space = upow_capped(q, n, std::uint64_t(1) << 14);
    if (space == 0)
        throw resource_limit_error("search_maximal_anticodes: q^n exceeds the 2^14 vertex guard");
    const std::size_t count = static_cast<std::size_t>(space);
    std::vector<Word> vocabulary;
    vocabulary.reserve(count);
    for (std::uint64_t index = 0; index < space; ++index)
        vocabulary.push_back(word_from_index(index, n, q));

    std::vector<Bits> adj(count, Bits(count));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (fll_distance(vocabulary[i], vocabulary[j]) <= d) {
                adj[i].set(j);
                adj[j].set(i);
            }

    AnticodeSearchResult result;
    result.n = n;
    result.q = q;
    result.diam = d;
    result.min_size = std::numeric_limits<std::size_t>::max();
    CliqueCollector collector{n, q, vocabulary, result};
    std::vector<std::size_t> r;
    Bits p(count), x(count);
    p.set();
    bron_kerbosch(r, std::move(p), std::move(x), adj, collector);
    if (result.total_maximal == 0) result.min_size = 0;
    return result;
}

AnticodePair extremal_anticodes(unsigned n) {
    if (n < 3) throw std::domain_error("extremal_anticodes: requires n >= 3");
    if (n > 20)
        throw resource_limit_error("extremal_anticodes: maximality check guarded to n <= 20");
    WordSet large(n, 2);
    large.insert(make_constant(2, 0, n));
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Symbol> symbols(n, 0);
        symbols[i] = 1;
        large.insert(Word(2, std::move(symbols)));
    }
    WordSet small(n, 2);
    for (unsigned pattern : {0b010u, 0b011u, 0b101u, 0b110u}) {
        std::vector<Symbol> symbols(n, 0);
        for (unsigned b = 0; b < 3; ++b) symbols[n - 3 + b] = (pattern >> (2 - b)) & 1u;
        small.insert(Word(2, std::move(symbols)));
    }
    if (!is_maximal_anticode(large, 1) || !is_maximal_anticode(small, 1))
        throw std::logic_error("extremal_anticodes: construction failed the maximality check");
    return {std::move(large), std::move(small)};
}

WordSet puncture(const WordSet& s) {
    if (s.n() < 2) throw std::domain_error("puncture: requires word length at least 2");
    WordSet out(s.n() - 1, s.q());
    for (const Word& w : s) {
        std::vector<Symbol> symbols(w.symbols().begin(), w.symbols().end() - 1);
        out.insert(Word(s.q(), std::move(symbols)));
    }
    return out;
}

namespace {

bool sets_disjoint(const std::set<Word>& a, const std::set<Word>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return false;
    }
    return true;
}

template <typename SphereFn>
bool pairwise_disjoint(const WordSet& c, SphereFn&& sphere) {
    std::vector<std::set<Word>> spheres;
    spheres.reserve(c.size());
    for (const Word& w : c) spheres.push_back(sphere(w));
    for (std::size_t i = 0; i < spheres.size(); ++i)
        for (std::size_t j = i + 1; j < spheres.size(); ++j)
            if (!sets_disjoint(spheres[i], spheres[j])) return false;
    return true;
}

}  // namespace

bool is_deletion_correcting(const WordSet& c, unsigned t) {
    if (t > c.n()) throw std::domain_error("is_deletion_correcting: t exceeds word length");
    return pairwise_disjoint(c, [t](const Word& w) { return deletion_sphere(w, t); });
}

bool is_insertion_correcting(const WordSet& c, unsigned t) {
    return pairwise_disjoint(c, [t](const Word& w) { return insertion_sphere(w, t); });
}

bool is_di_correcting(const WordSet& c, unsigned t1, unsigned t2) {
    if (t1 > c.n()) throw std::domain_error("is_di_correcting: t1 exceeds word length");
    return pairwise_disjoint(c,
                             [t1, t2](const Word& w) { return deletion_insertion_ball(w, t1, t2); });
}

bool EquivalenceReport::all_agree() const {
    for (const auto& [split, verdict] : splits)
        if (verdict != di) return false;
    return deletion == di && insertion == di && min_distance == di;
}

EquivalenceReport equivalence_harness(const WordSet& c, unsigned t1, unsigned t2) {
    const unsigned s = t1 + t2;
    if (s > c.n()) throw std::domain_error("equivalence_harness: t1 + t2 exceeds word length");
    EquivalenceReport report;
    report.t1 = t1;
    report.t2 = t2;
    report.di = is_di_correcting(c, t1, t2);
    report.deletion = is_deletion_correcting(c, s);
    report.insertion = is_insertion_correcting(c, s);
    for (unsigned a = 0; a <= s; ++a)
        report.splits.push_back({{a, s - a}, is_di_correcting(c, a, s - a)});
    report.min_pairwise_distance = static_cast<int>(c.n()) + 1;
    const auto& words = c.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            report.min_pairwise_distance =
                std::min(report.min_pairwise_distance, fll_distance(words[i], words[j]));
    report.min_distance = report.min_pairwise_distance >= static_cast<int>(s) + 1;
    return report;
}

}  // namespace fll
