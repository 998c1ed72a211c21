#ifndef LEVRECON_HARNESS_HPP
#define LEVRECON_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace levrecon::harness {

enum class ExperimentKind { Table1, Table2, Custom };
enum class Metric { MajorityEqual, Verifiable };

std::string to_string(ExperimentKind k);
std::string to_string(Metric m);

struct Cell {
    int n = 0;
    int t = 0;
    int e = 0;
    int N = 0;
    Metric metric = Metric::MajorityEqual;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Custom;
    std::vector<Cell> cells;
    long samples = 100000;
    std::uint64_t master_seed = 1;
    int worker_count = 1; // never affects estimates, only wall time
};

/// n=28, t=5, N in {11,21,31,41,101}, probability that the vote returns the
/// transmitted word exactly.
ExperimentConfig table1_config(long samples = 100000, std::uint64_t seed = 1, int workers = 1);
/// n=24, t=7, e in {2,3,4} x N in {11,21,31,41}, probability that the
/// verifiability inequality certifies radius e.
ExperimentConfig table2_config(long samples = 100000, std::uint64_t seed = 1, int workers = 1);

struct CellResult {
    Cell cell;
    double estimate = 0.0;
    double stderr_estimate = 0.0; // sqrt(p(1-p)/samples)
    double bound_thm_recursive = 0.0;
    double bound_thm_simple = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<CellResult> rows;
    std::uint64_t config_hash = 0;
};

/// Fraction of trials in which the per-coordinate majority over N uniform
/// B_t(x) channel outputs equals x exactly (any tie counts as failure). The
/// transmitted word is fixed to all-zero; the channel and the vote are
/// translation invariant.
double mc_majority_equal(int n, int t, int N, long samples, std::uint64_t seed, int workers = 1);

/// Fraction of trials in which the verifiability inequality holds for
/// radius e (equivalently, verify_radius returns some k <= e).
double mc_verifiable(int n, int t, int e, int N, long samples, std::uint64_t seed, int workers = 1);

/// Runs every cell. Deterministic: per-trial generators are derived from
/// (master_seed, cell index, trial index), so results do not depend on
/// worker_count.
ExperimentResult run(const ExperimentConfig& config);

/// CSV columns: kind,n,t,e,N,samples,estimate,stderr,bound_thm13,bound_thm14,seed
void write_csv(const ExperimentResult& result, std::ostream& out);
void write_json(const ExperimentResult& result, std::ostream& out);
void write_csv_file(const ExperimentResult& result, const std::string& path);
void write_json_file(const ExperimentResult& result, const std::string& path);

} // namespace levrecon::harness

#endif
