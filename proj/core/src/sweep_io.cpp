#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fll/sweep.hpp"
#include "json.hpp"

namespace fll {

const char* const kSweepCsvHeader = "n,q,t,count,min,max,sum,avg_num,avg_den,mismatches";

namespace {

using nlohmann::json;

json words_to_json(const std::vector<Word>& words) {
    json arr = json::array();
    for (const Word& w : words) arr.push_back(w.str());
    return arr;
}

std::vector<Word> words_from_json(const json& arr, unsigned q) {
    std::vector<Word> out;
    out.reserve(arr.size());
    for (const auto& item : arr) out.push_back(Word::parse(item.get<std::string>(), q));
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    return out;
}

}  // namespace

std::string sweep_summary_to_json(const SweepSummary& s) {
    json j;
    j["n"] = s.n;
    j["q"] = s.q;
    j["t"] = s.radius;
    j["count"] = s.count;
    j["min"] = s.min_size;
    j["max"] = s.max_size;
    // Big values travel as decimal strings so nothing is rounded through
    // JSON's double-backed numbers.
    j["sum"] = s.sum_size.str();
    j["avg_num"] = numerator(s.avg_size).str();
    j["avg_den"] = denominator(s.avg_size).str();
    j["argmin"] = words_to_json(s.argmin);
    j["argmax"] = words_to_json(s.argmax);
    j["argmin_count"] = s.argmin_count;
    j["argmax_count"] = s.argmax_count;
    json mism = json::array();
    for (const SweepMismatch& m : s.mismatches)
        mism.push_back({{"word", m.word.str()},
                        {"formula", m.formula_value},
                        {"oracle", m.oracle_value}});
    j["mismatches"] = mism;
    j["mismatch_count"] = s.mismatch_count;
    return j.dump(2);
}

SweepSummary sweep_summary_from_json(const std::string& text) {
    const json j = json::parse(text);
    SweepSummary s;
    s.n = j.at("n").get<unsigned>();
    s.q = j.at("q").get<unsigned>();
    s.radius = j.at("t").get<unsigned>();
    s.count = j.at("count").get<std::uint64_t>();
    s.min_size = j.at("min").get<std::int64_t>();
    s.max_size = j.at("max").get<std::int64_t>();
    s.sum_size = BigInt(j.at("sum").get<std::string>());
    s.avg_size = Rational(BigInt(j.at("avg_num").get<std::string>()),
                          BigInt(j.at("avg_den").get<std::string>()));
    s.argmin = words_from_json(j.at("argmin"), s.q);
    s.argmax = words_from_json(j.at("argmax"), s.q);
    s.argmin_count = j.at("argmin_count").get<std::uint64_t>();
    s.argmax_count = j.at("argmax_count").get<std::uint64_t>();
    for (const auto& item : j.at("mismatches"))
        s.mismatches.push_back({Word::parse(item.at("word").get<std::string>(), s.q),
                                item.at("formula").get<std::int64_t>(),
                                item.at("oracle").get<std::int64_t>()});
    s.mismatch_count = j.at("mismatch_count").get<std::uint64_t>();
    return s;
}

std::string sweep_summary_to_csv_row(const SweepSummary& s) {
    std::ostringstream out;
    out << s.n << ',' << s.q << ',' << s.radius << ',' << s.count << ',' << s.min_size
        << ',' << s.max_size << ',' << s.sum_size.str() << ','
        << numerator(s.avg_size).str() << ',' << denominator(s.avg_size).str() << ','
        << s.mismatch_count;
    return out.str();
}

std::string sweep_summary_to_csv(const SweepSummary& s) {
    return std::string(kSweepCsvHeader) + "\n" + sweep_summary_to_csv_row(s) + "\n";
}

SweepSummary sweep_summary_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    std::string row;
    if (!std::getline(in, header) || header != kSweepCsvHeader)
        throw std::invalid_argument(std::string("sweep CSV must start with the header '") +
                                    kSweepCsvHeader + "'");
    if (!std::getline(in, row) || row.empty())
        throw std::invalid_argument("sweep CSV is missing the data row");
    const std::vector<std::string> fields = split_fields(row);
    if (fields.size() != 10)
        throw std::invalid_argument("sweep CSV row must have 10 fields, got " +
                                    std::to_string(fields.size()));
    SweepSummary s;
    s.n = static_cast<unsigned>(std::stoul(fields[0]));
    s.q = static_cast<unsigned>(std::stoul(fields[1]));
    s.radius = static_cast<unsigned>(std::stoul(fields[2]));
    s.count = std::stoull(fields[3]);
    s.min_size = std::stoll(fields[4]);
    s.max_size = std::stoll(fields[5]);
    s.sum_size = BigInt(fields[6]);
    s.avg_size = Rational(BigInt(fields[7]), BigInt(fields[8]));
    s.mismatch_count = std::stoull(fields[9]);
    return s;
}

bool csv_fields_equal(const SweepSummary& a, const SweepSummary& b) {
    return a.n == b.n && a.q == b.q && a.radius == b.radius && a.count == b.count &&
           a.min_size == b.min_size && a.max_size == b.max_size &&
           a.sum_size == b.sum_size && a.avg_size == b.avg_size &&
           a.mismatch_count == b.mismatch_count;
}

}  // namespace fll
