#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fll/average.hpp"
#include "fll/errors.hpp"
#include "fll/extremal.hpp"
#include "fll/metric.hpp"
#include "fll/setcodes.hpp"
#include "fll/sweep.hpp"
#include "fll/word.hpp"

namespace fll::cli {
namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

const char* yn(bool b) { return b ? "true" : "false"; }

template <typename Range>
std::string join_words(const Range& words) {
    std::string out;
    for (const Word& w : words) {
        if (!out.empty()) out += ' ';
        out += w.str();
    }
    return out;
}

int cmd_dist(const std::string& xs, const std::string& ys, unsigned q, std::ostream& out) {
    const Word x = Word::parse(xs, q);
    const Word y = Word::parse(ys, q);
    if (x.size() == y.size()) out << "fll=" << fll_distance(x, y) << "\n";
    out << "levenshtein=" << levenshtein_distance(x, y) << "\n";
    if (x.size() == y.size()) out << "hamming=" << hamming_distance(x, y) << "\n";
    return kOk;
}

int cmd_ball(const std::string& xs, unsigned t, unsigned q, bool list, std::ostream& out) {
    const Word x = Word::parse(xs, q);
    const BallReport ball = fll_ball(x, t, list);
    out << "size=" << ball.enumerated_size << "\n";
    int code = kOk;
    if (t == 1 && !x.empty()) {
        const std::int64_t formula = l1_size_formula(x);
        out << "formula=" << formula << "\n";
        if (formula != ball.enumerated_size) {
            out << "MISMATCH: formula and enumeration disagree\n";
            code = kMismatch;
        }
    }
    if (list && ball.members)
        for (const Word& w : *ball.members) out << w.str() << "\n";
    return code;
}

int cmd_sphere(const std::string& xs, unsigned t, unsigned q, bool del, bool ins,
               bool list, std::ostream& out) {
    if (del == ins)
        throw std::invalid_argument("sphere: pass exactly one of --del and --ins");
    const Word x = Word::parse(xs, q);
    const std::set<Word> sphere = del ? deletion_sphere(x, t) : insertion_sphere(x, t);
    const auto size = static_cast<std::uint64_t>(sphere.size());
    out << "size=" << size << "\n";
    int code = kOk;
    if (del) {
        const std::uint64_t largest =
            max_deletion_sphere_size(static_cast<unsigned>(x.size()), q, t);
        out << "max_over_centers=" << largest << "\n";
        if (size > largest) {
            out << "MISMATCH: sphere exceeds the claimed maximum\n";
            code = kMismatch;
        }
        if (!x.empty() && t <= static_cast<unsigned>(runs(x))) {
            const auto [lo, hi] = deletion_sphere_bounds(x, t);
            out << "bounds=[" << lo << "," << hi << "]\n";
            if (size < lo || size > hi) {
                out << "MISMATCH: sphere size escapes its run-count bounds\n";
                code = kMismatch;
            }
        }
    } else {
        const std::uint64_t predicted =
            insertion_sphere_size(static_cast<unsigned>(x.size()), q, t);
        out << "predicted=" << predicted << "\n";
        if (size != predicted) {
            out << "MISMATCH: enumerated insertion sphere deviates from the formula\n";
            code = kMismatch;
        }
    }
    if (list)
        for (const Word& w : sphere) out << w.str() << "\n";
    return code;
}

int cmd_formula(const std::string& xs, unsigned q, std::ostream& out) {
    const Word x = Word::parse(xs, q);
    const SegmentProfile p = alternating_profile(x);
    out << "rho=" << p.runs << "\n";
    out << "profile=(";
    for (std::size_t i = 0; i < p.segment_lengths.size(); ++i)
        out << (i ? "," : "") << p.segment_lengths[i];
    out << ")\n";
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    const std::int64_t base = p.runs * (n * (q - 1) - 1) + 2;
    std::int64_t correction = 0;
    for (int s : p.segment_lengths) correction += std::int64_t(s - 1) * (s - 2);
    correction /= 2;
    out << "base=" << base << "\n";
    out << "correction=" << correction << "\n";
    out << "size=" << l1_size_formula(x) << "\n";
    return kOk;
}

int cmd_extremal(bool want_min, unsigned n, unsigned q, unsigned t, std::ostream& out) {
    if (want_min) {
        const ExtremalResult r = min_ball_size(n, q, t);
        out << "min_size=" << r.size << "\n";
        out << "witnesses=" << join_words(r.witnesses) << "\n";
        return kOk;
    }
    if (t != 1)
        throw std::invalid_argument("extremal --max: only radius 1 is supported");
    if (q == 2) {
        const ExtremalResult r = max_ball_binary(n);
        out << "max_size=" << r.size << "\n";
        out << "alpha={";
        for (std::size_t i = 0; i < r.alpha_set.size(); ++i)
            out << (i ? "," : "") << r.alpha_set[i];
        out << "} k=" << r.k << "\n";
        out << "witnesses=" << join_words(r.witnesses) << "\n";
        out << "asymptotic=" << max_ball_binary_asymptotic(n) << "\n";
    } else {
        const ExtremalResult r = max_ball_nonbinary(n, q);
        out << "max_size=" << r.size << "\n";
        out << "witnesses=" << join_words(r.witnesses) << "\n";
    }
    return kOk;
}

int cmd_avg(unsigned n, unsigned q, std::ostream& out) {
    const ExpectedStats st = expected_stats(static_cast<int>(n), q);
    out << "e_runs=" << st.e_runs << "\n";
    out << "e_segments=" << st.e_segments << "\n";
    out << "e_sum_s=" << st.e_sum_s << "\n";
    out << "e_sum_s2_exact=" << st.e_sum_s2_exact << "\n";
    out << "e_sum_s2_closed=" << st.e_sum_s2_closed << "\n";
    const AverageBallSize a = average_ball_size(static_cast<int>(n), q);
    out << "avg_exact=" << a.exact << "\n";
    out << "avg_closed=" << a.closed << "\n";
    out << "delta=" << a.delta() << "\n";
    return kOk;
}

// Flat key=value manifest for the sweep options. Values apply only where the
// command line stayed silent, so flags always win. Blank lines and '#'
// comments are allowed.
void apply_sweep_config(const std::string& path, const CLI::App& cmd,
                        std::string& oracle, SweepOptions& options,
                        std::string& format, std::string& output) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("sweep: cannot open config '" + path + "'");
    const auto given = [&cmd](const std::string& flag) {
        return cmd.get_option(flag)->count() > 0;
    };
    const auto as_u64 = [](const std::string& key, const std::string& value) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            return static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("sweep config: bad number for '" + key +
                                        "': " + value);
        }
    };
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("sweep config: expected key=value, got '" +
                                        line + "'");
        const std::string key = line.substr(first, eq - first);
        const std::string value = line.substr(eq + 1);
        if (key == "oracle") {
            if (!given("--oracle")) oracle = value;
        } else if (key == "workers") {
            if (!given("--workers"))
                options.workers = static_cast<unsigned>(as_u64(key, value));
        } else if (key == "witness-cap" || key == "witness_cap") {
            if (!given("--witness-cap"))
                options.witness_cap = static_cast<std::size_t>(as_u64(key, value));
        } else if (key == "formula-guard" || key == "formula_guard") {
            if (!given("--formula-guard")) options.formula_guard = as_u64(key, value);
        } else if (key == "enum-guard" || key == "enum_guard") {
            if (!given("--enum-guard")) options.enumeration_guard = as_u64(key, value);
        } else if (key == "format") {
            if (value != "json" && value != "csv")
                throw std::invalid_argument("sweep config: format must be json or csv");
            if (!given("--format")) format = value;
        } else if (key == "output") {
            if (!given("--output")) output = value;
        } else {
            throw std::invalid_argument("sweep config: unknown key '" + key + "'");
        }
    }
}

int cmd_sweep(unsigned n, unsigned q, unsigned t, const std::string& oracle_name,
              const SweepOptions& options, const std::string& format,
              const std::string& output, std::ostream& out) {
    const SweepOracle oracle =
        oracle_name == "auto"
            ? (t == 1 ? SweepOracle::both : SweepOracle::enumeration)
            : sweep_oracle_from_string(oracle_name);
    const SweepSummary s = sweep(n, q, t, oracle, options);
    std::string report = format == "csv" ? sweep_summary_to_csv(s)
                                         : sweep_summary_to_json(s) + "\n";
    if (output.empty()) {
        out << report;
    } else {
        std::ofstream file(output);
        if (!file) throw std::invalid_argument("sweep: cannot open '" + output + "'");
        file << report;
        out << "count=" << s.count << " min=" << s.min_size << " max=" << s.max_size
            << " avg=" << s.avg_size << " mismatches=" << s.mismatch_count << " -> "
            << output << "\n";
    }
    return s.mismatch_count == 0 ? kOk : kMismatch;
}

int cmd_anticode(unsigned n, unsigned q, bool construct, std::ostream& out) {
    if (construct) {
        if (q != 2)
            throw std::invalid_argument(
                "anticode --construct: the explicit constructions are binary");
        const AnticodePair p = extremal_anticodes(n);
        out << "large size=" << p.large.size() << ": " << join_words(p.large.words())
            << "\n";
        out << "small size=" << p.small.size() << ": " << join_words(p.small.words())
            << "\n";
        return kOk;
    }
    const AnticodeSearchResult r = search_maximal_anticodes(n, q, 1);
    out << "total=" << r.total_maximal << "\n";
    out << "max_size=" << r.max_size << " count=" << r.max_witnesses.size() << "\n";
    out << "min_size=" << r.min_size << " count=" << r.min_witnesses.size() << "\n";
    for (const WordSet& s : r.max_witnesses) out << "max: " << join_words(s.words()) << "\n";
    for (const WordSet& s : r.min_witnesses) out << "min: " << join_words(s.words()) << "\n";
    return kOk;
}

int cmd_code_check(const std::string& path, unsigned t1, unsigned t2, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("code-check: cannot open '" + path + "'");
    const WordSet code = WordSet::read(in);
    const EquivalenceReport r = equivalence_harness(code, t1, t2);
    const unsigned s = t1 + t2;
    out << "n=" << code.n() << " q=" << code.q() << " size=" << code.size() << "\n";
    out << "s=" << s << "\n";
    out << "di(" << t1 << "," << t2 << ")=" << yn(r.di) << "\n";
    out << "deletion_" << s << "=" << yn(r.deletion) << "\n";
    out << "insertion_" << s << "=" << yn(r.insertion) << "\n";
    for (const auto& [split, verdict] : r.splits)
        out << "split(" << split.first << "," << split.second << ")=" << yn(verdict)
            << "\n";
    out << "min_distance=" << r.min_pairwise_distance << " threshold=" << s + 1
        << " satisfied=" << yn(r.min_distance) << "\n";
    const bool agree = r.all_agree();
    out << "agree=" << (agree ? "yes" : "no") << "\n";
    return agree ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for the fixed-length Levenshtein metric on Z_q^n"};
    app.require_subcommand(1);
    int exit_code = kOk;

    struct {
        std::string x, y;
        unsigned q = 2;
    } dist;
    auto* dist_cmd = app.add_subcommand("dist", "distances between two words");
    dist_cmd->add_option("x", dist.x, "first word")->required();
    dist_cmd->add_option("y", dist.y, "second word")->required();
    dist_cmd->add_option("--q", dist.q, "alphabet size")->capture_default_str();
    dist_cmd->callback([&] { exit_code = cmd_dist(dist.x, dist.y, dist.q, out); });

    struct {
        std::string x;
        unsigned t = 1, q = 2;
        bool list = false;
    } ball;
    auto* ball_cmd =
        app.add_subcommand("ball", "fixed-length ball size, checked against the formula");
    ball_cmd->add_option("x", ball.x, "center word")->required();
    ball_cmd->add_option("t", ball.t, "radius")->required();
    ball_cmd->add_option("--q", ball.q, "alphabet size")->capture_default_str();
    ball_cmd->add_flag("--list", ball.list, "print the members");
    ball_cmd->callback(
        [&] { exit_code = cmd_ball(ball.x, ball.t, ball.q, ball.list, out); });

    struct {
        std::string x;
        unsigned t = 1, q = 2;
        bool del = false, ins = false, list = false;
    } sphere;
    auto* sphere_cmd = app.add_subcommand("sphere", "deletion or insertion sphere");
    sphere_cmd->add_option("x", sphere.x, "center word")->required();
    sphere_cmd->add_option("t", sphere.t, "number of edits")->required();
    sphere_cmd->add_option("--q", sphere.q, "alphabet size")->capture_default_str();
    sphere_cmd->add_flag("--del", sphere.del, "deletion sphere");
    sphere_cmd->add_flag("--ins", sphere.ins, "insertion sphere");
    sphere_cmd->add_flag("--list", sphere.list, "print the members");
    sphere_cmd->callback([&] {
        exit_code = cmd_sphere(sphere.x, sphere.t, sphere.q, sphere.del, sphere.ins,
                               sphere.list, out);
    });

    struct {
        std::string x;
        unsigned q = 2;
    } formula;
    auto* formula_cmd =
        app.add_subcommand("formula", "radius-1 ball size from the word structure");
    formula_cmd->add_option("x", formula.x, "word")->required();
    formula_cmd->add_option("--q", formula.q, "alphabet size")->capture_default_str();
    formula_cmd->callback([&] { exit_code = cmd_formula(formula.x, formula.q, out); });

    struct {
        unsigned n = 0, q = 0, t = 0;
        bool min = false, max = false;
    } extremal;
    auto* extremal_cmd =
        app.add_subcommand("extremal", "extreme ball sizes over all centers");
    extremal_cmd->add_flag("--min", extremal.min, "minimize");
    extremal_cmd->add_flag("--max", extremal.max, "maximize");
    extremal_cmd->add_option("n", extremal.n, "word length")->required();
    extremal_cmd->add_option("q", extremal.q, "alphabet size")->required();
    extremal_cmd->add_option("t", extremal.t, "radius")->required();
    extremal_cmd->callback([&] {
        if (extremal.min == extremal.max)
            throw std::invalid_argument("extremal: pass exactly one of --min and --max");
        exit_code = cmd_extremal(extremal.min, extremal.n, extremal.q, extremal.t, out);
    });

    struct {
        unsigned n = 0, q = 0;
    } avg;
    auto* avg_cmd =
        app.add_subcommand("avg", "average ball size and expectation breakdown");
    avg_cmd->add_option("n", avg.n, "word length")->required();
    avg_cmd->add_option("q", avg.q, "alphabet size")->required();
    avg_cmd->callback([&] { exit_code = cmd_avg(avg.n, avg.q, out); });

    struct {
        unsigned n = 0, q = 0, t = 0;
        std::string oracle = "auto";
        SweepOptions options;
        std::string format = "json";
        std::string output;
        std::string config;
    } sw;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "exhaustive ball-size sweep over Z_q^n");
    sweep_cmd->add_option("n", sw.n, "word length")->required();
    sweep_cmd->add_option("q", sw.q, "alphabet size")->required();
    sweep_cmd->add_option("t", sw.t, "radius")->required();
    sweep_cmd
        ->add_option("--oracle", sw.oracle,
                     "formula, enumeration or both (default: both at t=1, "
                     "enumeration otherwise)")
        ->capture_default_str();
    sweep_cmd->add_option("--workers", sw.options.workers,
                          "worker threads; 0 means FLL_WORKERS or the hardware count");
    sweep_cmd->add_option("--witness-cap", sw.options.witness_cap,
                          "stored witnesses per extreme");
    sweep_cmd->add_option("--formula-guard", sw.options.formula_guard,
                          "largest q^n the formula oracle accepts");
    sweep_cmd->add_option("--enum-guard", sw.options.enumeration_guard,
                          "largest q^n the enumeration oracle accepts");
    sweep_cmd->add_option("--format", sw.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sweep_cmd->add_option("--output", sw.output, "write the report to this file");
    sweep_cmd->add_option("--config", sw.config,
                          "flat key=value file with these options; flags win");
    sweep_cmd->callback([&] {
        if (!sw.config.empty())
            apply_sweep_config(sw.config, *sweep_cmd, sw.oracle, sw.options, sw.format,
                               sw.output);
        exit_code =
            cmd_sweep(sw.n, sw.q, sw.t, sw.oracle, sw.options, sw.format, sw.output, out);
    });

    struct {
        unsigned n = 0, q = 0;
        bool search = false, construct = false;
    } anticode;
    auto* anticode_cmd =
        app.add_subcommand("anticode", "maximal diameter-1 anticodes of Z_q^n");
    anticode_cmd->add_option("n", anticode.n, "word length")->required();
    anticode_cmd->add_option("q", anticode.q, "alphabet size")->required();
    anticode_cmd->add_flag("--search", anticode.search,
                           "exhaustive maximal-clique search (default)");
    anticode_cmd->add_flag("--construct", anticode.construct,
                           "the two explicit extremal constructions");
    anticode_cmd->callback([&] {
        if (anticode.search && anticode.construct)
            throw std::invalid_argument("anticode: --search and --construct conflict");
        exit_code = cmd_anticode(anticode.n, anticode.q, anticode.construct, out);
    });

    struct {
        std::string file;
        unsigned t1 = 0, t2 = 0;
    } check;
    auto* check_cmd = app.add_subcommand(
        "code-check", "equivalent correcting-code characterizations of a word set");
    check_cmd->add_option("file", check.file, "word-set file (n=<n> q=<q> header)")
        ->required();
    check_cmd->add_option("t1", check.t1, "deletions")->required();
    check_cmd->add_option("t2", check.t2, "insertions")->required();
    check_cmd->callback(
        [&] { exit_code = cmd_code_check(check.file, check.t1, check.t2, out); });

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("fll");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        // Internal cross-checks raise logic_error; that is a verification
        // failure, not a usage problem.
        err << "internal check failed: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return exit_code;
}

int run(int argc, const char* const* argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace fll::cli
