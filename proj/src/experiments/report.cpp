#include "polysparse/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace polysparse::experiments {

namespace {

constexpr double z99 = 2.5758293035489004;

Json frequency_json(const Frequency& f)
{
    Json j;
    j["type"] = "frequency";
    j["name"] = f.name;
    j["hits"] = f.hits;
    j["trials"] = f.trials;
    j["estimate"] = f.estimate;
    j["ci99"] = Json::array({f.ci_low, f.ci_high});
    if (f.has_bound) {
        j["bound_label"] = f.bound_label;
        j["bound"] = f.bound;
    }
    return j;
}

Json check_json(const Check& c)
{
    Json j;
    j["type"] = "check";
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty())
        j["detail"] = c.detail;
    return j;
}

Json header_json(const ExperimentReport& r)
{
    Json j;
    j["type"] = "header";
    j["experiment"] = r.name;
    j["params"] = r.params;
    if (!r.notes.empty())
        j["notes"] = r.notes;
    return j;
}

Json summary_json(const ExperimentReport& r)
{
    Json j;
    j["type"] = "summary";
    j["experiment"] = r.name;
    j["passed"] = r.passed();
    std::size_t failed = 0;
    for (const auto& c : r.checks)
        failed += c.pass ? 0 : 1;
    j["checks"] = r.checks.size();
    j["failed_checks"] = failed;
    for (const auto& [key, value] : r.summary.items())
        j[key] = value;
    return j;
}

std::string csv_cell(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty())
                out += ' ';
            out += csv_cell(x);
        }
        return out;
    }
    return v.dump();
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

bool ExperimentReport::passed() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

void ExperimentReport::add_check(std::string check_name, bool pass, std::string detail)
{
    checks.push_back(Check{std::move(check_name), pass, std::move(detail)});
}

std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials)
{
    if (trials == 0)
        return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z99 * z99;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z99 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

Frequency make_frequency(std::string name, std::size_t hits, std::size_t trials)
{
    Frequency f;
    f.name = std::move(name);
    f.hits = hits;
    f.trials = trials;
    f.estimate = trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials);
    std::tie(f.ci_low, f.ci_high) = wilson_interval(hits, trials);
    return f;
}

std::string to_jsonl(const ExperimentReport& r)
{
    std::string out = header_json(r).dump() + "\n";
    for (const auto& rec : r.records)
        out += rec.dump() + "\n";
    for (const auto& f : r.frequencies)
        out += frequency_json(f).dump() + "\n";
    for (const auto& c : r.checks)
        out += check_json(c).dump() + "\n";
    return out + summary_json(r).dump() + "\n";
}

std::string to_json(const ExperimentReport& r)
{
    Json j;
    j["experiment"] = r.name;
    j["params"] = r.params;
    j["notes"] = r.notes;
    j["records"] = r.records;
    Json freqs = Json::array();
    for (const auto& f : r.frequencies)
        freqs.push_back(frequency_json(f));
    j["frequencies"] = freqs;
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(check_json(c));
    j["checks"] = checks;
    if (!r.histogram.empty()) {
        Json h = Json::array();
        for (const auto& b : r.histogram)
            h.push_back(Json{{"low", b.low}, {"high", b.high}, {"count", b.count}});
        j["histogram"] = Json{{"label", r.histogram_label}, {"bins", h}};
    }
    j["summary"] = summary_json(r);
    return j.dump(2) + "\n";
}

std::string to_csv(const ExperimentReport& r)
{
    std::ostringstream out;
    if (!r.histogram.empty()) {
        out << "bin_low,bin_high,count\n";
        for (const auto& b : r.histogram)
            out << Json(b.low).dump() << ',' << Json(b.high).dump() << ',' << b.count << '\n';
        return out.str();
    }
    std::vector<std::string> columns;
    for (const auto& rec : r.records)
        for (const auto& [key, value] : rec.items())
            if (std::find(columns.begin(), columns.end(), key) == columns.end())
                columns.push_back(key);
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << csv_escape(columns[i]);
    out << '\n';
    for (const auto& rec : r.records) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i)
                out << ',';
            if (rec.contains(columns[i]))
                out << csv_escape(csv_cell(rec[columns[i]]));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace polysparse::experiments
