#include "hybridcd/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hybridcd/bench.hpp"
#include "hybridcd/datagen.hpp"
#include "hybridcd/error.hpp"
#include "hybridcd/graph_json.hpp"
#include "hybridcd/hybrid.hpp"

namespace hcd {

namespace {

struct SimulateArgs {
    std::string structure = "fork";
    std::string noise = "uniform";
    std::uint64_t seed = 0;
    int T = 1000;
    int species = 5;
    int burn_in = 100;
    std::string out;
};

struct DiscoverArgs {
    std::string input;
    std::string method = "nbcb-w";
    int gamma = 5;
    double alpha = 0.05;
    std::string out;
};

struct EvaluateArgs {
    std::string pred;
    std::string truth;
};

struct BenchArgs {
    std::vector<std::string> methods = {"nbcb-w", "nbcb-e", "cbnb-w", "cbnb-e"};
    std::vector<std::string> structures;
    std::string noise = "uniform";
    int seeds = 20;
    int T = 1000;
    int gamma = 5;
    double alpha = 0.05;
    unsigned workers = 0;
    std::string out;
};

void make_parent(const std::string& path) {
    std::error_code ec;
    auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
}

void write_text(const std::string& path, const std::string& text) {
    make_parent(path);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot write " + path);
    f << text;
    if (!f) throw DataError("cannot write " + path);
}

Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot read " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path + ": invalid JSON: " + e.what());
    }
}

// A discovery result carries its summary under "scg"; otherwise the file is a
// graph of any type.
SummaryGraph summary_from_file(const std::string& path) {
    Json j = read_json(path);
    if (j.is_object() && j.contains("scg")) return summary_of(graph_from_json(j["scg"]));
    return summary_of(graph_from_json(j));
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    if (a.out.empty()) throw InvalidArgument("--out is required");
    if (a.structure == "ricker") {
        RickerParams p;
        p.S = a.species;
        p.T = a.T;
        p.seed = a.seed;
        p.burn_in = a.burn_in;
        auto sim = gen_ricker(p);
        make_parent(a.out + ".csv");
        write_csv(sim.data, a.out + ".csv");
        write_text(a.out + ".truth.json", to_json(sim.scg).dump(2) + "\n");
        for (const auto& w : sim.warnings) out << "warning: " << w << '\n';
    } else {
        ScmSpec spec;
        spec.structure = parse_structure(a.structure);
        spec.noise = parse_noise(a.noise);
        spec.seed = a.seed;
        spec.T = a.T;
        spec.burn_in = a.burn_in;
        auto sim = gen_structure(spec);
        make_parent(a.out + ".csv");
        write_csv(sim.data, a.out + ".csv");
        write_text(a.out + ".truth.json", to_json(sim.scg).dump(2) + "\n");
        write_text(a.out + ".wcg.json", to_json(sim.wcg).dump(2) + "\n");
    }
    out << "wrote " << a.out << ".csv\n";
    return kExitOk;
}

int cmd_discover(const DiscoverArgs& a, std::ostream& out) {
    auto [fw, variant] = parse_method(a.method);
    Dataset data = read_csv(a.input);
    DiscoveryConfig cfg;
    cfg.gamma = a.gamma;
    cfg.alpha = a.alpha;
    cfg.variant = variant;
    DiscoveryResult r = discover(fw, data, cfg);
    const std::string text = result_to_json(r, a.method).dump(2) + "\n";
    if (a.out.empty())
        out << text;
    else
        write_text(a.out, text);
    return kExitOk;
}

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
    F1Report r = f1_scg(summary_from_file(a.pred), summary_from_file(a.truth));
    Json j = {{"tp", r.tp}, {"fp", r.fp}, {"fn", r.fn}, {"f1", r.f1}};
    out << j.dump() << '\n';
    return kExitOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    BenchmarkConfig cfg;
    cfg.methods = a.methods;
    if (a.structures.empty())
        for (Structure s : all_structures()) cfg.structures.push_back(structure_name(s));
    else
        cfg.structures = a.structures;
    cfg.noise = parse_noise(a.noise);
    cfg.n_seeds = a.seeds;
    cfg.T = a.T;
    cfg.gamma = a.gamma;
    cfg.alpha = a.alpha;
    cfg.workers = a.workers;
    auto reports = run_benchmark(cfg);
    write_report_table(reports, out);
    if (!a.out.empty()) {
        std::ostringstream csv;
        write_report_csv(reports, csv);
        write_text(a.out, csv.str());
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hybrid constraint-based / noise-based causal discovery for time series", "hybridcd"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; options of a subcommand go under a [name] section");

    SimulateArgs sim;
    auto* s = app.add_subcommand("simulate", "Generate a dataset and its ground truth");
    s->add_option("--structure", sim.structure,
                  "v-structure, fork, diamond, unfaithful-diamond, cyclic-fork, cyclic-diamond or ricker")
        ->capture_default_str();
    s->add_option("--noise", sim.noise, "uniform or gaussian")->capture_default_str();
    s->add_option("--seed", sim.seed, "random seed")->capture_default_str();
    s->add_option("--T", sim.T, "number of timestamps")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_option("--species", sim.species, "species count for ricker")->capture_default_str()->check(
        CLI::PositiveNumber);
    s->add_option("--burn-in", sim.burn_in, "discarded leading steps")->capture_default_str()->check(
        CLI::NonNegativeNumber);
    s->add_option("--out", sim.out, "output prefix: writes PREFIX.csv, PREFIX.truth.json")->required();

    DiscoverArgs disc;
    auto* d = app.add_subcommand("discover", "Run NBCB or CBNB on a CSV dataset");
    d->add_option("--input", disc.input, "dataset CSV (header row of names)")->required();
    d->add_option("--method", disc.method, "nbcb-w, nbcb-e, cbnb-w or cbnb-e")->capture_default_str();
    d->add_option("--gamma", disc.gamma, "maximal lag")->capture_default_str()->check(CLI::PositiveNumber);
    d->add_option("--alpha", disc.alpha, "significance level")->capture_default_str()->check(
        CLI::Range(0.0, 1.0));
    d->add_option("--out", disc.out, "result JSON path (default: standard output)");

    EvaluateArgs ev;
    auto* e = app.add_subcommand("evaluate", "F1 of a predicted summary graph against the truth");
    e->add_option("--pred", ev.pred, "discovery result or graph JSON")->required();
    e->add_option("--truth", ev.truth, "graph JSON")->required();

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Multi-seed benchmark over simulated structures");
    b->add_option("--method", bench.methods, "methods (repeatable); also restpcmci-random")
        ->capture_default_str();
    b->add_option("--structure", bench.structures, "structures (repeatable); also ricker-5, ricker-10");
    b->add_option("--noise", bench.noise, "uniform or gaussian")->capture_default_str();
    b->add_option("--seeds", bench.seeds, "datasets per cell (seeds 0..n-1)")->capture_default_str()->check(
        CLI::PositiveNumber);
    b->add_option("--T", bench.T, "timestamps per dataset")->capture_default_str()->check(CLI::PositiveNumber);
    b->add_option("--gamma", bench.gamma, "maximal lag")->capture_default_str()->check(CLI::PositiveNumber);
    b->add_option("--alpha", bench.alpha, "significance level")->capture_default_str()->check(
        CLI::Range(0.0, 1.0));
    b->add_option("--workers", bench.workers, "worker threads (0 = all cores)")->capture_default_str();
    b->add_option("--out", bench.out, "report CSV path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }

    try {
        if (s->parsed()) return cmd_simulate(sim, out);
        if (d->parsed()) return cmd_discover(disc, out);
        if (e->parsed()) return cmd_evaluate(ev, out);
        return cmd_bench(bench, out);
    } catch (const DegenerateSeries& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitDegenerate;
    } catch (const InvalidArgument& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitData;
    }
}

}  // namespace hcd
