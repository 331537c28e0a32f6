#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hybridcd/dataset.hpp"
#include "hybridcd/graph.hpp"

namespace hcd {

enum class Structure { VStructure, Fork, Diamond, UnfaithfulDiamond, CyclicFork, CyclicDiamond };
enum class Noise { Uniform, Gaussian };

std::string structure_name(Structure s);
// Accepts the names produced by structure_name ("v-structure", "fork", ...).
Structure parse_structure(const std::string& id);
std::string noise_name(Noise n);
Noise parse_noise(const std::string& id);
const std::vector<Structure>& all_structures();

struct ScmSpec {
    Structure structure = Structure::Fork;
    Noise noise = Noise::Uniform;
    double noise_scale = 0.1;
    int T = 1000;
    std::uint64_t seed = 0;
    int burn_in = 100;

    // Test hooks.
    std::optional<double> fixed_coefficient;
    std::optional<int> forced_lag;
    bool zero_noise = false;
    double initial_value = 0.0;

    int max_retries = 1000;
};

/// Linear SCM over a window graph: one coefficient per edge; self causes are
/// lagged edges with src == dst.
struct LinearScm {
    WindowGraph graph;
    std::map<LaggedEdge, double> lagged;
    std::map<DirectedPair, double> inst;
};

struct SimulationOptions {
    Noise noise = Noise::Uniform;
    double noise_scale = 0.1;
    int T = 1000;
    int burn_in = 100;
    bool zero_noise = false;
    double initial_value = 0.0;
};

struct SimulatedScm {
    Dataset data;
    WindowGraph wcg;
    SummaryGraph scg;
    LinearScm scm;
};

/// Row 0 of the burn-in holds `initial_value` for every variable (so with no
/// burn-in the first returned row is the initial state); each later row is
/// evaluated along the instantaneous topological order.
Dataset simulate_linear(const LinearScm& scm, const SimulationOptions& opt, std::mt19937_64& rng);

// Largest modulus among the eigenvalues of the reduced-form companion matrix.
double spectral_radius(const LinearScm& scm);

/// Draws |a| ~ U(0.1, 1) with a random sign for every edge of `g` (or uses
/// `fixed`), redrawing until the process is stable. An unstable fixed value throws.
LinearScm sample_coefficients(const WindowGraph& g, std::mt19937_64& rng, std::optional<double> fixed = {},
                              int max_retries = 1000);

SimulatedScm gen_structure(const ScmSpec& spec);

// Window graph of the five-variable running example (X, Y, Z, W, U), gamma 2.
WindowGraph running_example_wcg();

// Realized window graph of a structure for a given rng state: lags drawn from
// {0, 1} (or forced), cyclic pairs never fully instantaneous, instantaneous
// part acyclic.
WindowGraph draw_structure(Structure s, std::mt19937_64& rng, std::optional<int> forced_lag = {});

struct RickerParams {
    int S = 5;
    int T = 1000;
    std::uint64_t seed = 0;
    double x = 0.5;
    double mu = 0.05;
    double sigma_r = 0.2;
    double sigma_y = 0.2;
    double delta_t = 0.1;
    double y_bar = 1.0;
    int burn_in = 100;
    int max_retries = 100;
    // |a| ~ U(strength_min, strength_max) for every interaction and self effect.
    double strength_min = 1.0;
    double strength_max = 3.0;

    // Test hook: no interactions at all; every species is basal with the
    // given self effect.
    bool no_interactions = false;
    double self_effect = -0.5;
};

struct RickerModel {
    int S = 0;
    std::vector<int> level;          // trophic level per species, 0 = basal
    Eigen::MatrixXd a;               // a(x, y): effect of x on y; diagonal = self effect
    std::vector<double> optimum;     // o_y
};

struct SimulatedRicker {
    Dataset data;
    SummaryGraph scg;
    RickerModel model;
    std::vector<std::string> warnings;
};

RickerModel draw_ricker_model(const RickerParams& p, std::mt19937_64& rng);
Dataset simulate_ricker(const RickerModel& m, const RickerParams& p, std::mt19937_64& rng);
SimulatedRicker gen_ricker(const RickerParams& p);

}  // namespace hcd
