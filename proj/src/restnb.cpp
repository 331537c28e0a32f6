#include "hybridcd/restnb.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "hybridcd/error.hpp"

namespace hcd {

namespace {

// Residual of y after a single-regressor fit on x (both centered).
Eigen::VectorXd regress_out(const Eigen::VectorXd& y, const Eigen::VectorXd& x, double var_x) {
    double cov = x.dot(y) / static_cast<double>(x.size());
    return y - (cov / var_x) * x;
}

}  // namespace

CausalOrder rest_vlingam(const Dataset& data, int gamma, double /*alpha*/, const std::vector<int>& targets,
                         const std::vector<LaggedNode>& past, const IndependenceMeasure& measure) {
    if (targets.empty()) throw InvalidArgument("rest_vlingam: empty target set");
    std::vector<int> remaining = targets;
    std::sort(remaining.begin(), remaining.end());
    if (std::adjacent_find(remaining.begin(), remaining.end()) != remaining.end())
        throw InvalidArgument("rest_vlingam: duplicate target");
    if (remaining.size() == 1) return {remaining};

    std::map<int, Eigen::VectorXd> resid;
    for (int v : remaining) resid[v] = residualize_on_past(data, v, past, gamma);

    auto name = [&](int v) { return data.names.at(static_cast<std::size_t>(v)); };
    CausalOrder order;
    while (remaining.size() > 1) {
        int best = -1;
        double best_h = std::numeric_limits<double>::infinity();
        for (int x : remaining) {
            const Eigen::VectorXd& xi_x = resid.at(x);
            double var_x = variance(xi_x);
            if (!(var_x > 1e-12)) throw DegenerateSeries(name(x));
            double h = 0.0;
            for (int y : remaining) {
                if (y == x) continue;
                try {
                    h += measure(xi_x, regress_out(resid.at(y), xi_x, var_x));
                } catch (const DegenerateSeries&) {
                    throw DegenerateSeries(name(y));
                }
            }
            if (h < best_h) {
                best_h = h;
                best = x;
            }
        }
        order.nodes.push_back(best);
        remaining.erase(std::find(remaining.begin(), remaining.end(), best));
        const Eigen::VectorXd xi_best = resid.at(best);
        double var_best = variance(xi_best);
        for (int y : remaining) resid[y] = regress_out(resid.at(y), xi_best, var_best);
    }
    order.nodes.push_back(remaining.front());
    return order;
}

VlingamOrderer::VlingamOrderer(const Dataset& standardized, int gamma, double alpha, IndependenceMeasure measure)
    : data_(standardized), gamma_(gamma), alpha_(alpha), measure_(std::move(measure)) {}

CausalOrder VlingamOrderer::order(const std::vector<int>& targets, const std::vector<LaggedNode>& past) {
    ++calls_;
    return rest_vlingam(data_, gamma_, alpha_, targets, past, measure_);
}

OracleOrderer::OracleOrderer(const WindowGraph& truth) : d_(truth.num_vars()), inst_(truth.inst) {}

CausalOrder OracleOrderer::order(const std::vector<int>& targets, const std::vector<LaggedNode>& /*past*/) {
    ++calls_;
    return {topological_order(d_, inst_, targets)};
}

}  // namespace hcd
