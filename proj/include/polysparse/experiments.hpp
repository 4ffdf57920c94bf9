#pragma once

#include "polysparse/polytope.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polysparse::experiments {

using Json = nlohmann::ordered_json;

/// Raised when a request exceeds what the exact pipelines can handle.
class ResourceRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A named pass/fail check inside a report.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Empirical frequency with its Wilson interval and, when one exists, the
/// theoretical bound it is compared with.
struct Frequency {
    std::string name;
    std::size_t hits = 0;
    std::size_t trials = 0;
    double estimate = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::string bound_label;
    double bound = 0;
    bool has_bound = false;
};

struct HistogramBin {
    double low;
    double high;
    std::size_t count;
};

/**
 * Seeded, reproducible summary of one experiment. Serialization covers every
 * field except wall_seconds, so equal (params, seed) give byte-identical output.
 */
struct ExperimentReport {
    std::string name;
    Json params = Json::object();
    std::vector<std::string> notes;
    std::vector<Json> records;
    std::vector<Frequency> frequencies;
    std::vector<Check> checks;
    Json summary = Json::object();
    std::vector<HistogramBin> histogram;
    std::string histogram_label;
    double wall_seconds = 0;

    bool passed() const;
    void add_check(std::string name, bool pass, std::string detail = {});
};

std::string to_jsonl(const ExperimentReport& r);
std::string to_json(const ExperimentReport& r);
/// Histogram rows when the report has one, otherwise one row per record.
std::string to_csv(const ExperimentReport& r);

/// Two-sided 99% Wilson score interval.
std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials);
Frequency make_frequency(std::string name, std::size_t hits, std::size_t trials);

/// Exact Hausdorff distance between P_{n/2,n} and P^k cut by Q_n, for every
/// k <= n/2, plus the integer-hull check; n even, n <= 6.
ExperimentReport run_lp_relax(std::size_t n);

struct DenseBudgetParams {
    std::size_t n = 100;
    std::size_t k = 25;
    std::size_t d = 50;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    /// Enumerate all 2^n sign vectors instead of sampling (n <= 16).
    bool exhaustive = false;
    /// When nonempty, these cuts replace the generated ones.
    std::vector<LinIneq> cuts;
    std::size_t workers = 1;
};

/**
 * Samples X uniform on {-1,1}^n and tests whether (2/3)X satisfies every cut of
 * D (generated with integer Dirichlet-like weights and random signs, right-hand
 * side equal to the exact support over the symmetrized half cube). Reports the
 * survival frequency, per-cut violation frequencies against Bernstein tails and
 * an exact distance certificate for the first survivor.
 */
ExperimentReport run_dense_budget(const DenseBudgetParams& p);

/// Random dense cuts valid for the symmetrized half cube in R^n.
std::vector<LinIneq> generate_dense_cuts(std::size_t n, std::size_t d, std::uint64_t seed);

struct RotationParams {
    std::size_t n = 3;
    std::size_t t = 1;
    std::size_t k = 2;
    std::size_t rotations = 20;
    std::uint64_t seed = 1;
    long long skew_entry_bound = 2;
    std::size_t permutations = 3;
    std::size_t workers = 1;
};

/// Exact squared distance between R(P) and its k-sparse closure for Cayley
/// rotations R of the symmetrized budget-t family; n <= 5.
ExperimentReport run_rotation(const RotationParams& p);

struct DirectionalParams {
    std::size_t n = 1000;
    std::size_t t = 100;
    std::size_t k = 100;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    /// Directions re-evaluated exactly against the LP oracle (n <= 20 only).
    std::size_t cross_check = 100;
    std::size_t bins = 40;
    /// Emit one JSONL record per sample.
    bool per_sample_records = true;
};

/// Monte Carlo estimate of Pr(gap(G/||G||) >= sqrt(n)/20) for Gaussian G with
/// the auxiliary concentration frequencies; 10 | n, t = n/10, k <= t.
ExperimentReport run_directional(const DirectionalParams& p);

struct VerifyParams {
    std::size_t max_n = 4;
    std::uint64_t seed = 1;
    std::size_t gap_samples = 1000;
    /// Test-only: flips the sign of one coefficient in the first simplex-family input.
    bool inject_bug = false;
};

/// Runs every exact oracle-equivalence suite up to dimension max_n (<= 6).
ExperimentReport verify_suite(const VerifyParams& p);

} // namespace polysparse::experiments
