#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "levrecon/bounds.hpp"
#include "levrecon/harness.hpp"
#include "levrecon/io.hpp"
#include "levrecon/majority.hpp"
#include "levrecon/rng.hpp"

namespace levrecon::cli {

namespace {

using nlohmann::json;

json bigint_to_json(const Bigint& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LEVRECON_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw precondition_error("LEVRECON_SEED must be an unsigned integer");
        }
    }
    return 1;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    } else {
        std::ofstream file(out_path);
        if (!file) throw precondition_error("cannot open " + out_path);
        file << text;
        if (!text.empty() && text.back() != '\n') file << '\n';
    }
}

struct SimArgs {
    int n = 0, e = 0, l = 1, workers = 1;
    long samples = 100000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path, format = "csv";
};

void add_common_sim_flags(CLI::App* cmd, SimArgs& args) {
    cmd->add_option("--samples", args.samples, "Monte Carlo samples per cell")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "master seed (default: LEVRECON_SEED or 1)")
        ->each([&args](const std::string&) { args.seed_given = true; });
    cmd->add_option("--workers", args.workers, "worker threads (never changes results)")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--out", args.out_path, "output file (default stdout)");
    cmd->add_option("--format", args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void emit_experiment(const harness::ExperimentResult& result, const SimArgs& args, std::ostream& out) {
    std::ostringstream buffer;
    if (args.format == "json")
        harness::write_json(result, buffer);
    else
        harness::write_csv(result, buffer);
    emit(buffer.str(), args.out_path, out);
}

int run_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds, list decoders, and Monte Carlo experiments for sequence "
                 "reconstruction from multiple noisy reads under a substitution budget"};
    app.require_subcommand(1);

    // --- bounds ------------------------------------------------------------
    struct {
        int n = 0, e = 0, l = 1;
        std::optional<int> h, a, R;
        std::optional<long> M;
        std::optional<std::string> N;
        std::string out_path;
    } bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every applicable channel-count/list-size bound");
    bounds_cmd->add_option("--n", bounds_args.n, "word length")->required()->check(CLI::Range(1, 512));
    bounds_cmd->add_option("--e", bounds_args.e, "code error-correcting capability")->required()->check(CLI::NonNegativeNumber);
    bounds_cmd->add_option("--l", bounds_args.l, "error excess; t = e + l")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--h", bounds_args.h, "target list threshold (3..l+1)");
    bounds_cmd->add_option("--a", bounds_args.a, "ball-radius slack for the shattering bound");
    bounds_cmd->add_option("--R", bounds_args.R, "covering radius");
    bounds_cmd->add_option("--M", bounds_args.M, "max codewords per (e+a)-ball");
    bounds_cmd->add_option("--N", bounds_args.N, "channel count to test the thresholds against");
    bounds_cmd->add_option("--out", bounds_args.out_path, "output file (default stdout)");

    // --- oracle ------------------------------------------------------------
    struct {
        int n = 0, e = 0, l = 1, h = 3;
        std::string out_path;
    } oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force maximum output-set size keeping h codewords feasible");
    oracle_cmd->add_option("--n", oracle_args.n, "word length")->required()->check(CLI::Range(1, 16));
    oracle_cmd->add_option("--e", oracle_args.e, "capability")->required()->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--l", oracle_args.l, "error excess; t = e + l")->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--h", oracle_args.h, "codeword count")->required()->check(CLI::Range(1, 5));
    oracle_cmd->add_option("--out", oracle_args.out_path, "output file (default stdout)");

    // --- table1 / table2 / simulate -----------------------------------------
    SimArgs table1_args;
    auto* table1_cmd = app.add_subcommand("table1", "majority-vote success grid: n=28, t=5, N in {11,21,31,41,101}");
    add_common_sim_flags(table1_cmd, table1_args);

    SimArgs table2_args;
    auto* table2_cmd = app.add_subcommand("table2", "verifiability grid: n=24, t=7, e in {2,3,4}, N in {11,21,31,41}");
    add_common_sim_flags(table2_cmd, table2_args);

    SimArgs sim_args;
    int sim_N = 1;
    std::string sim_metric = "equal";
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate for one parameter cell");
    sim_cmd->add_option("--n", sim_args.n, "word length")->required()->check(CLI::Range(1, 512));
    sim_cmd->add_option("--e", sim_args.e, "capability")->required()->check(CLI::NonNegativeNumber);
    sim_cmd->add_option("--l", sim_args.l, "error excess; t = e + l")->required()->check(CLI::PositiveNumber);
    sim_cmd->add_option("--N", sim_N, "channel count")->required()->check(CLI::PositiveNumber);
    sim_cmd->add_option("--metric", sim_metric, "equal: vote returns the word; verify: radius-e certificate holds")
        ->check(CLI::IsMember({"equal", "verify"}));
    add_common_sim_flags(sim_cmd, sim_args);

    // --- transmit ------------------------------------------------------------
    struct {
        int n = 0, e = 0, l = 1, N = 1;
        std::string model = "uniform_ball";
        std::string x;
        std::uint64_t seed = 0;
        bool seed_given = false;
        std::string out_path;
    } tx_args;
    auto* tx_cmd = app.add_subcommand("transmit", "generate an output batch JSON");
    tx_cmd->add_option("--n", tx_args.n, "word length")->required()->check(CLI::Range(1, 512));
    tx_cmd->add_option("--e", tx_args.e, "capability the batch is meant for")->required()->check(CLI::NonNegativeNumber);
    tx_cmd->add_option("--l", tx_args.l, "error excess; t = e + l")->required()->check(CLI::PositiveNumber);
    tx_cmd->add_option("--N", tx_args.N, "channel count")->required()->check(CLI::PositiveNumber);
    tx_cmd->add_option("--model", tx_args.model, "channel model")
        ->check(CLI::IsMember({"uniform_ball", "exact_weight", "adversarial_set"}));
    tx_cmd->add_option("--x", tx_args.x, "transmitted word (default all-zero)");
    tx_cmd->add_option("--seed", tx_args.seed, "seed (default: LEVRECON_SEED or 1)")
        ->each([&tx_args](const std::string&) { tx_args.seed_given = true; });
    tx_cmd->add_option("--out", tx_args.out_path, "output file (default stdout)");

    // --- decode ------------------------------------------------------------
    struct {
        std::string code_path, batch_path, method = "naive", covering_path;
        std::optional<int> a, R;
        std::string out_path;
    } decode_args;
    auto* decode_cmd = app.add_subcommand("decode", "run a list decoder on a batch");
    decode_cmd->add_option("--code", decode_args.code_path, "code file (one word per line)")->required();
    decode_cmd->add_option("--batch", decode_args.batch_path, "batch JSON file")->required();
    decode_cmd->add_option("--method", decode_args.method, "naive | shatter | covering | majority")
        ->check(CLI::IsMember({"naive", "shatter", "covering", "majority"}));
    decode_cmd->add_option("--a", decode_args.a, "shattering slack a");
    decode_cmd->add_option("--R", decode_args.R, "covering radius R");
    decode_cmd->add_option("--D", decode_args.covering_path, "generator file of the covering code D");
    decode_cmd->add_option("--out", decode_args.out_path, "output file (default stdout)");

    // --- majority ------------------------------------------------------------
    struct {
        std::string batch_path, code_path;
        int h_conf = 3;
        std::string out_path;
    } maj_args;
    auto* maj_cmd = app.add_subcommand("majority", "majority vote a batch, with the verifiability certificate");
    maj_cmd->add_option("--batch", maj_args.batch_path, "batch JSON file")->required();
    maj_cmd->add_option("--code", maj_args.code_path, "code file; enables decoding and the radius-e bound");
    maj_cmd->add_option("--h-conf", maj_args.h_conf, "confidence multiplier for the analytic bound")
        ->check(CLI::Range(1, 8));
    maj_cmd->add_option("--out", maj_args.out_path, "output file (default stdout)");

    std::vector<const char*> argv;
    argv.push_back("levrecon");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& parse_err) {
        err << "error: " << parse_err.what() << '\n';
        return 2;
    }

    if (bounds_cmd->parsed()) {
        bounds::ReconstructionParams params;
        params.n = bounds_args.n;
        params.e = bounds_args.e;
        params.l = bounds_args.l;
        params.h = bounds_args.h;
        params.a = bounds_args.a;
        params.R = bounds_args.R;
        params.M = bounds_args.M;
        std::optional<Bigint> channels;
        if (bounds_args.N) channels = Bigint(*bounds_args.N);
        const auto entries = bounds::generic_list_bounds(params, channels);
        json doc;
        doc["params"] = {{"n", params.n}, {"e", params.e}, {"l", params.l}, {"t", params.t()}};
        if (params.h) doc["params"]["h"] = *params.h;
        if (params.a) doc["params"]["a"] = *params.a;
        if (params.R) doc["params"]["R"] = *params.R;
        if (params.M) doc["params"]["M"] = *params.M;
        if (channels) doc["params"]["N"] = bigint_to_json(*channels);
        doc["levenshtein_N1"] = bigint_to_json(bounds::levenshtein_n1(params.n, params.e, params.l));
        json list = json::array();
        for (const auto& entry : entries) {
            json row;
            row["name"] = entry.name;
            row["lower_bound"] = entry.is_lower;
            if (entry.list_bound) row["list_bound"] = bigint_to_json(*entry.list_bound);
            if (entry.list_bound_real) row["list_bound_real"] = *entry.list_bound_real;
            if (entry.channel_threshold) row["channel_threshold"] = bigint_to_json(*entry.channel_threshold);
            row["applicable"] = entry.applicable;
            if (!entry.note.empty()) row["note"] = entry.note;
            list.push_back(std::move(row));
        }
        doc["bounds"] = std::move(list);
        emit(doc.dump(2), bounds_args.out_path, out);
        return 0;
    }

    if (oracle_cmd->parsed()) {
        const auto result = bounds::oracle_nprime(oracle_args.n, oracle_args.e, oracle_args.l, oracle_args.h);
        json doc;
        doc["n_prime"] = bigint_to_json(result.value);
        doc["structured_only"] = result.structured_only;
        doc["configurations"] = result.configurations;
        doc["note"] = result.note;
        emit(doc.dump(2), oracle_args.out_path, out);
        return 0;
    }

    if (table1_cmd->parsed()) {
        const std::uint64_t seed = table1_args.seed_given ? table1_args.seed : default_seed();
        emit_experiment(harness::run(harness::table1_config(table1_args.samples, seed, table1_args.workers)),
                        table1_args, out);
        return 0;
    }
    if (table2_cmd->parsed()) {
        const std::uint64_t seed = table2_args.seed_given ? table2_args.seed : default_seed();
        emit_experiment(harness::run(harness::table2_config(table2_args.samples, seed, table2_args.workers)),
                        table2_args, out);
        return 0;
    }
    if (sim_cmd->parsed()) {
        const std::uint64_t seed = sim_args.seed_given ? sim_args.seed : default_seed();
        harness::ExperimentConfig cfg;
        cfg.kind = harness::ExperimentKind::Custom;
        cfg.samples = sim_args.samples;
        cfg.master_seed = seed;
        cfg.worker_count = sim_args.workers;
        cfg.cells.push_back(harness::Cell{sim_args.n, sim_args.e + sim_args.l, sim_args.e, sim_N,
                                          sim_metric == "equal" ? harness::Metric::MajorityEqual
                                                                : harness::Metric::Verifiable});
        emit_experiment(harness::run(cfg), sim_args, out);
        return 0;
    }

    if (tx_cmd->parsed()) {
        const std::uint64_t seed = tx_args.seed_given ? tx_args.seed : default_seed();
        const Word x = tx_args.x.empty() ? Word::zeros(tx_args.n) : Word::from_string(tx_args.x);
        if (x.length() != tx_args.n) throw precondition_error("--x length differs from --n");
        Rng rng(seed);
        const OutputBatch batch =
            transmit(x, tx_args.e + tx_args.l, tx_args.N, channel_model_from_string(tx_args.model), rng);
        emit(io::batch_to_json(batch), tx_args.out_path, out);
        return 0;
    }

    if (decode_cmd->parsed()) {
        const Code code = io::read_code_file(decode_args.code_path);
        std::ifstream batch_file(decode_args.batch_path);
        if (!batch_file) throw precondition_error("cannot open " + decode_args.batch_path);
        std::stringstream buffer;
        buffer << batch_file.rdbuf();
        const OutputBatch batch = io::batch_from_json(buffer.str());
        const int t = batch.t;
        if (decode_args.method == "naive") {
            emit(io::candidates_to_json(intersect_list(code, batch, t)), decode_args.out_path, out);
        } else if (decode_args.method == "shatter") {
            if (!decode_args.a) throw precondition_error("shatter decoding needs --a");
            emit(io::candidates_to_json(shatter_decode(code, batch, t, *decode_args.a)), decode_args.out_path, out);
        } else if (decode_args.method == "covering") {
            if (!decode_args.R || decode_args.covering_path.empty())
                throw precondition_error("covering decoding needs --R and --D");
            const LinearCode d = io::read_generator_file(decode_args.covering_path);
            emit(io::candidates_to_json(covering_decode(code, batch, t, *decode_args.R, d)), decode_args.out_path,
                 out);
        } else {
            const MajorityResult vote = majority_vote(batch);
            const VerifiedDecode outcome = verified_decode(code, batch, t);
            emit(io::verified_decode_to_json(outcome, vote), decode_args.out_path, out);
        }
        return 0;
    }

    if (maj_cmd->parsed()) {
        std::ifstream batch_file(maj_args.batch_path);
        if (!batch_file) throw precondition_error("cannot open " + maj_args.batch_path);
        std::stringstream buffer;
        buffer << batch_file.rdbuf();
        const OutputBatch batch = io::batch_from_json(buffer.str());
        const MajorityResult vote = majority_vote(batch);
        const std::optional<int> k = verify_radius(vote, batch.t);
        json doc;
        doc["z"] = vote.z.to_string();
        doc["m"] = vote.minority_counts;
        if (k) doc["k"] = *k;
        json bounds_obj;
        if (batch.size() >= 3) {
            bounds_obj["thm13"] = majority_success_lb(batch.n, batch.t, batch.size(), CtMethod::Recursive);
            bounds_obj["thm14"] = majority_success_lb(batch.n, batch.t, batch.size(), CtMethod::Simple);
        }
        if (!maj_args.code_path.empty()) {
            const Code code = io::read_code_file(maj_args.code_path);
            const VerifiedDecode outcome = verified_decode(code, batch, batch.t);
            doc["outcome"] = json::parse(io::verified_decode_to_json(outcome, vote));
            try {
                const auto vb =
                    verifiable_success_lb(batch.n, batch.t, code.capability(), batch.size(), maj_args.h_conf);
                bounds_obj["cor17"] = vb.lower_bound;
                bounds_obj["cor17_alpha"] = vb.alpha;
            } catch (const precondition_error& reason) {
                bounds_obj["cor17_unavailable"] = reason.what();
            }
        }
        doc["bounds"] = std::move(bounds_obj);
        emit(doc.dump(2), maj_args.out_path, out);
        return 0;
    }

    err << "error: unknown subcommand\n";
    return 2;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_dispatch(args, out, err);
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace levrecon::cli
