#include "hybridcd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <thread>

#include "hybridcd/error.hpp"
#include "hybridcd/restcb.hpp"

namespace hcd {

namespace {

bool is_ricker(const std::string& s, int* species) {
    if (s.rfind("ricker-", 0) != 0) return false;
    try {
        std::size_t used = 0;
        int n = std::stoi(s.substr(7), &used);
        if (used != s.size() - 7 || n < 1) return false;
        *species = n;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void check_method(const std::string& m) {
    if (m != kRandomBaseline) parse_method(m);
}

void check_structure(const std::string& s) {
    int species = 0;
    if (!is_ricker(s, &species)) parse_structure(s);
}

SummaryGraph random_orientation(const PartialWindowGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::bernoulli_distribution coin(0.5);
    SummaryGraph s = scg_from_partial(g);
    for (const auto& e : g.unoriented) {
        if (coin(rng))
            s.edges.insert({e.a, e.b});
        else
            s.edges.insert({e.b, e.a});
    }
    return s;
}

}  // namespace

F1Report f1_scg(const SummaryGraph& pred, const SummaryGraph& truth) {
    if (pred.vars != truth.vars) throw InvalidArgument("f1_scg: graphs are over different variables");
    F1Report r;
    for (const auto& e : pred.edges) {
        if (e.src == e.dst) continue;
        if (truth.edges.count(e))
            ++r.tp;
        else
            ++r.fp;
    }
    for (const auto& e : truth.edges)
        if (e.src != e.dst && !pred.edges.count(e)) ++r.fn;
    const int denom = 2 * r.tp + r.fp + r.fn;
    r.f1 = denom == 0 ? 1.0 : 2.0 * r.tp / denom;
    return r;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double population_sd(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size()));
}

BenchmarkDataset make_benchmark_dataset(const std::string& structure, Noise noise, std::uint64_t seed, int T) {
    int species = 0;
    if (is_ricker(structure, &species)) {
        RickerParams p;
        p.S = species;
        p.T = T;
        p.seed = seed;
        auto sim = gen_ricker(p);
        return {std::move(sim.data), std::move(sim.scg)};
    }
    ScmSpec spec;
    spec.structure = parse_structure(structure);
    spec.noise = noise;
    spec.T = T;
    spec.seed = seed;
    auto sim = gen_structure(spec);
    return {std::move(sim.data), std::move(sim.scg)};
}

SummaryGraph run_method(const std::string& method, const Dataset& data, int gamma, double alpha,
                        std::uint64_t seed) {
    if (method == kRandomBaseline) return random_orientation(rest_pcmci_plus(data, gamma, alpha, std::nullopt), seed);
    auto [fw, variant] = parse_method(method);
    DiscoveryConfig cfg;
    cfg.gamma = gamma;
    cfg.alpha = alpha;
    cfg.variant = variant;
    return discover(fw, data, cfg).scg;
}

std::vector<ExperimentReport> run_benchmark(const BenchmarkConfig& cfg) {
    if (cfg.n_seeds < 1) throw InvalidArgument("number of seeds must be >= 1");
    if (cfg.T < 1) throw InvalidArgument("T must be >= 1");
    for (const auto& m : cfg.methods) check_method(m);
    for (const auto& s : cfg.structures) check_structure(s);

    struct Task {
        std::size_t report;
        int seed;
    };
    std::vector<ExperimentReport> reports;
    std::vector<Task> tasks;
    for (const auto& m : cfg.methods) {
        for (const auto& s : cfg.structures) {
            ExperimentReport r;
            r.method = m;
            r.structure = s;
            r.noise = noise_name(cfg.noise);
            r.n = cfg.n_seeds;
            reports.push_back(r);
            for (int seed = 0; seed < cfg.n_seeds; ++seed) tasks.push_back({reports.size() - 1, seed});
        }
    }

    struct Outcome {
        double f1 = 0.0;
        double seconds = 0.0;
        std::string failure;
    };
    std::vector<Outcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            const ExperimentReport& r = reports[t.report];
            auto start = std::chrono::steady_clock::now();
            try {
                auto ds = make_benchmark_dataset(r.structure, cfg.noise, static_cast<std::uint64_t>(t.seed), cfg.T);
                SummaryGraph pred =
                    run_method(r.method, ds.data, cfg.gamma, cfg.alpha, static_cast<std::uint64_t>(t.seed));
                outcomes[i].f1 = f1_scg(pred, ds.truth).f1;
            } catch (const std::exception& e) {
                outcomes[i].f1 = 0.0;
                outcomes[i].failure = "seed " + std::to_string(t.seed) + ": " + e.what();
            }
            outcomes[i].seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    unsigned n_workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    n_workers = static_cast<unsigned>(std::min<std::size_t>(n_workers, std::max<std::size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& r = reports[tasks[i].report];
        r.f1.push_back(outcomes[i].f1);
        r.seconds += outcomes[i].seconds;
        if (!outcomes[i].failure.empty()) r.failures.push_back(outcomes[i].failure);
    }
    for (auto& r : reports) {
        r.mean_f1 = mean_of(r.f1);
        r.sd_f1 = population_sd(r.f1);
    }
    return reports;
}

void write_report_csv(const std::vector<ExperimentReport>& reports, std::ostream& out) {
    out << "method,structure,noise,n,mean_f1,sd_f1,seconds\n";
    char buf[128];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%d,%.4f,%.4f,%.3f", r.n, r.mean_f1, r.sd_f1, r.seconds);
        out << r.method << ',' << r.structure << ',' << r.noise << ',' << buf << '\n';
    }
}

void write_report_table(const std::vector<ExperimentReport>& reports, std::ostream& out) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-18s %-20s %-9s %4s %15s %9s\n", "method", "structure", "noise", "n",
                  "F1 (mean +- sd)", "seconds");
    out << buf;
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%-18s %-20s %-9s %4d %8.2f +- %4.2f %9.1f\n", r.method.c_str(),
                      r.structure.c_str(), r.noise.c_str(), r.n, r.mean_f1, r.sd_f1, r.seconds);
        out << buf;
        for (const auto& f : r.failures) out << "    failed " << f << '\n';
    }
}

}  // namespace hcd
