#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hybridcd/datagen.hpp"
#include "hybridcd/graph.hpp"
#include "hybridcd/hybrid.hpp"

namespace hcd {

struct F1Report {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    double f1 = 0.0;
};

/// Directed-pair scoring of cross edges; self loops are ignored and X <-> Y
/// counts as two pairs. Both empty gives f1 = 1. Throws InvalidArgument when
/// the variable lists differ.
F1Report f1_scg(const SummaryGraph& pred, const SummaryGraph& truth);

// RestPCMCI+ without order, each unoriented edge oriented by a fair coin.
inline constexpr const char* kRandomBaseline = "restpcmci-random";

struct BenchmarkConfig {
    std::vector<std::string> methods;     // nbcb-w, nbcb-e, cbnb-w, cbnb-e, restpcmci-random
    std::vector<std::string> structures;  // structure names, ricker-5, ricker-10
    Noise noise = Noise::Uniform;
    int n_seeds = 20;
    int T = 1000;
    int gamma = 5;
    double alpha = 0.05;
    unsigned workers = 0;  // 0 = hardware concurrency
};

struct ExperimentReport {
    std::string method;
    std::string structure;
    std::string noise;
    int n = 0;
    double mean_f1 = 0.0;
    double sd_f1 = 0.0;  // population sd
    double seconds = 0.0;
    std::vector<double> f1;
    std::vector<std::string> failures;
};

struct BenchmarkDataset {
    Dataset data;
    SummaryGraph truth;
};

// Dataset for one (structure, noise, seed); ricker-S ignores the noise id.
BenchmarkDataset make_benchmark_dataset(const std::string& structure, Noise noise, std::uint64_t seed, int T);

// Scores one method on one dataset; `seed` feeds the random baseline.
SummaryGraph run_method(const std::string& method, const Dataset& data, int gamma, double alpha,
                        std::uint64_t seed);

/// Seeds 0..n_seeds-1 per (method, structure). A failed run scores 0 and is
/// listed in `failures`. Results do not depend on the worker count.
std::vector<ExperimentReport> run_benchmark(const BenchmarkConfig& cfg);

// method,structure,noise,n,mean_f1,sd_f1,seconds
void write_report_csv(const std::vector<ExperimentReport>& reports, std::ostream& out);
void write_report_table(const std::vector<ExperimentReport>& reports, std::ostream& out);

double mean_of(const std::vector<double>& v);
double population_sd(const std::vector<double>& v);

}  // namespace hcd
