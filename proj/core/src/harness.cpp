#include "levrecon/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "levrecon/ball.hpp"
#include "levrecon/errors.hpp"
#include "levrecon/majority.hpp"
#include "levrecon/rng.hpp"

namespace levrecon::harness {

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Table1: return "table1";
        case ExperimentKind::Table2: return "table2";
        case ExperimentKind::Custom: return "custom";
    }
    return "unknown";
}

std::string to_string(Metric m) {
    return m == Metric::MajorityEqual ? "majority_equal" : "verifiable";
}

ExperimentConfig table1_config(long samples, std::uint64_t seed, int workers) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::Table1;
    cfg.samples = samples;
    cfg.master_seed = seed;
    cfg.worker_count = workers;
    for (int N : {11, 21, 31, 41, 101}) cfg.cells.push_back(Cell{28, 5, 0, N, Metric::MajorityEqual});
    return cfg;
}

ExperimentConfig table2_config(long samples, std::uint64_t seed, int workers) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::Table2;
    cfg.samples = samples;
    cfg.master_seed = seed;
    cfg.worker_count = workers;
    for (int e : {2, 3, 4})
        for (int N : {11, 21, 31, 41}) cfg.cells.push_back(Cell{24, 7, e, N, Metric::Verifiable});
    return cfg;
}

namespace {

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t cell_index) {
    return master_seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(cell_index) + 1));
}

/// One channel use: draws the error weight, then flips that many distinct
/// coordinates, bumping the per-coordinate flip counters. Consumes the rng
/// exactly like BallSampler::sample so composed and fused paths agree.
void accumulate_channel(const BallSampler& sampler, int n, Rng& rng, std::array<std::uint16_t, kMaxWordLength>& scratch,
                        std::vector<int>& flip_counts) {
    const int r = sampler.sample_weight(rng);
    for (int i = 0; i < n; ++i) scratch[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i + 1);
    for (int j = 0; j < r; ++j) {
        const int pick = j + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - j)));
        std::swap(scratch[static_cast<std::size_t>(j)], scratch[static_cast<std::size_t>(pick)]);
        ++flip_counts[static_cast<std::size_t>(scratch[static_cast<std::size_t>(j)]) - 1];
    }
}

long run_trials(long samples, int workers, const std::function<bool(std::uint64_t)>& trial) {
    workers = std::max(1, workers);
    if (workers == 1) {
        long hits = 0;
        for (long i = 0; i < samples; ++i) hits += trial(static_cast<std::uint64_t>(i)) ? 1 : 0;
        return hits;
    }
    std::vector<long> partial(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    const long chunk = (samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long lo = static_cast<long>(w) * chunk;
        const long hi = std::min(samples, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            long hits = 0;
            for (long i = lo; i < hi; ++i) hits += trial(static_cast<std::uint64_t>(i)) ? 1 : 0;
            partial[static_cast<std::size_t>(w)] = hits;
        });
    }
    for (auto& th : pool) th.join();
    long hits = 0;
    for (long p : partial) hits += p;
    return hits;
}

} // namespace

double mc_majority_equal(int n, int t, int N, long samples, std::uint64_t seed, int workers) {
    if (samples < 1) throw precondition_error("samples must be >= 1");
    const BallSampler sampler(n, t);
    auto trial = [&](std::uint64_t index) {
        Rng rng = Rng::for_stream(seed, index);
        thread_local std::array<std::uint16_t, kMaxWordLength> scratch;
        thread_local std::vector<int> flips;
        flips.assign(static_cast<std::size_t>(n), 0);
        for (int ch = 0; ch < N; ++ch) accumulate_channel(sampler, n, rng, scratch, flips);
        for (int i = 0; i < n; ++i)
            if (2 * flips[static_cast<std::size_t>(i)] >= N) return false; // wrong symbol or tie
        return true;
    };
    return static_cast<double>(run_trials(samples, workers, trial)) / static_cast<double>(samples);
}

double mc_verifiable(int n, int t, int e, int N, long samples, std::uint64_t seed, int workers) {
    if (samples < 1) throw precondition_error("samples must be >= 1");
    if (e < 1) return 0.0; // the certificate radius is a positive integer
    const BallSampler sampler(n, t);
    auto trial = [&](std::uint64_t index) {
        Rng rng = Rng::for_stream(seed, index);
        thread_local std::array<std::uint16_t, kMaxWordLength> scratch;
        thread_local std::vector<int> flips;
        thread_local std::vector<int> minority;
        flips.assign(static_cast<std::size_t>(n), 0);
        for (int ch = 0; ch < N; ++ch) accumulate_channel(sampler, n, rng, scratch, flips);
        minority.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            minority[static_cast<std::size_t>(i)] = std::min(flips[static_cast<std::size_t>(i)], N - flips[static_cast<std::size_t>(i)]);
        std::sort(minority.begin(), minority.end(), std::greater<int>());
        // condition at k = e; the left side is nondecreasing in k, so this
        // decides whether any k <= e works
        long total = 0;
        for (int v : minority) total += v;
        const int head = std::min(e + 1, n);
        long head_sum = 0;
        for (int i = 0; i < head; ++i) head_sum += minority[static_cast<std::size_t>(i)];
        const long lhs = static_cast<long>(head) * N - 2 * head_sum + total;
        return lhs > static_cast<long>(t) * N;
    };
    return static_cast<double>(run_trials(samples, workers, trial)) / static_cast<double>(samples);
}

ExperimentResult run(const ExperimentConfig& config) {
    ExperimentResult result;
    result.config = config;
    for (std::size_t idx = 0; idx < config.cells.size(); ++idx) {
        const Cell& cell = config.cells[idx];
        CellResult row;
        row.cell = cell;
        row.samples = config.samples;
        row.seed = cell_seed(config.master_seed, idx);
        row.estimate = cell.metric == Metric::MajorityEqual
                           ? mc_majority_equal(cell.n, cell.t, cell.N, config.samples, row.seed, config.worker_count)
                           : mc_verifiable(cell.n, cell.t, cell.e, cell.N, config.samples, row.seed,
                                           config.worker_count);
        row.stderr_estimate = std::sqrt(row.estimate * (1.0 - row.estimate) / static_cast<double>(config.samples));
        if (cell.N >= 3) {
            row.bound_thm_recursive = majority_success_lb(cell.n, cell.t, cell.N, CtMethod::Recursive);
            row.bound_thm_simple = majority_success_lb(cell.n, cell.t, cell.N, CtMethod::Simple);
        }
        result.rows.push_back(std::move(row));
    }
    // FNV-1a over the canonical config line
    std::string canon = to_string(config.kind) + "|" + std::to_string(config.samples) + "|" +
                        std::to_string(config.master_seed);
    for (const Cell& cell : config.cells)
        canon += "|" + std::to_string(cell.n) + "," + std::to_string(cell.t) + "," + std::to_string(cell.e) + "," +
                 std::to_string(cell.N) + "," + to_string(cell.metric);
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (char c : canon) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001B3ULL;
    }
    result.config_hash = hash;
    return result;
}

namespace {

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

void write_csv(const ExperimentResult& result, std::ostream& out) {
    out << "kind,n,t,e,N,samples,estimate,stderr,bound_thm13,bound_thm14,seed\n";
    for (const CellResult& row : result.rows) {
        out << to_string(result.config.kind) << ',' << row.cell.n << ',' << row.cell.t << ',' << row.cell.e << ','
            << row.cell.N << ',' << row.samples << ',' << fixed6(row.estimate) << ',' << fixed6(row.stderr_estimate)
            << ',' << fixed6(row.bound_thm_recursive) << ',' << fixed6(row.bound_thm_simple) << ',' << row.seed
            << '\n';
    }
}

void write_json(const ExperimentResult& result, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CellResult& row : result.rows) {
        rows.push_back({{"n", row.cell.n},
                        {"t", row.cell.t},
                        {"e", row.cell.e},
                        {"N", row.cell.N},
                        {"metric", to_string(row.cell.metric)},
                        {"samples", row.samples},
                        {"estimate", row.estimate},
                        {"stderr", row.stderr_estimate},
                        {"bound_thm13", row.bound_thm_recursive},
                        {"bound_thm14", row.bound_thm_simple},
                        {"seed", row.seed}});
    }
    const nlohmann::json doc{{"kind", to_string(result.config.kind)},
                             {"samples", result.config.samples},
                             {"master_seed", result.config.master_seed},
                             {"config_hash", result.config_hash},
                             {"rows", rows}};
    out << doc.dump(2) << '\n';
}

void write_csv_file(const ExperimentResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_csv(result, out);
}

void write_json_file(const ExperimentResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_json(result, out);
}

} // namespace levrecon::harness
