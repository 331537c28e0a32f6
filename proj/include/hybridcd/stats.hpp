#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "hybridcd/dataset.hpp"
#include "hybridcd/graph.hpp"

namespace hcd {

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

struct RegressionFit {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd residuals;
};

/// Minimum-norm least squares (pseudo-inverse semantics for rank-deficient
/// X). No intercept is added. Throws InvalidArgument on empty y or a row
/// mismatch.
RegressionFit ols_fit(const Eigen::VectorXd& y, const Eigen::MatrixXd& X);

/// Residual of `target` after an intercept-plus-lagged-columns regression over
/// rows gamma..T-1. An empty `past` returns the centered target. Every past
/// node must have 1 <= lag <= gamma.
Eigen::VectorXd residualize_on_past(const Dataset& data, int target, const std::vector<LaggedNode>& past,
                                    int gamma);

// Fisher z statistic atanh(rho) * sqrt(n - k - 3), rho clamped to
// +-(1 - 1e-12).
double fisher_z(double rho, int n, int k);
// Two-sided standard normal tail.
double normal_two_sided_p(double z);

/// Linear partial correlation of x and y given the columns of Z, from the
/// correlation of the regression residuals, with a Fisher z test. Throws
/// InsufficientSamples unless n > |Z| + 3.
TestResult ci_test_partial_corr(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Eigen::MatrixXd& Z);

/// Same partial correlation computed from a covariance matrix of centered
/// columns; `cond` indexes rows/cols of `cov`. Residual variances that vanish
/// relative to the marginal ones yield rho = 0.
double partial_corr_from_cov(const Eigen::MatrixXd& cov, int x, int y, const std::vector<int>& cond);

// Pairwise dependence estimator used by the causal ordering step.
using IndependenceMeasure = std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>;

/// Default estimator: -1/2 * sum log(1 - r^2) over correlations r between
/// nonlinear transforms f(a), g(b), f and g ranging over the identity, tanh
/// and u*exp(-u^2/2) (derivatives of the log-cosh and Gaussian entropy
/// contrasts) and log cosh itself. Inputs are standardized first. Symmetric,
/// nonnegative, invariant to affine rescaling; near zero for independent
/// inputs. Throws DegenerateSeries for a constant input and
/// InsufficientSamples below 20 points.
double independence_measure(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Standardize columns (zero-variance ones dropped), project on the top
/// principal axis and rescale to unit variance. The sign makes the loading of
/// the first surviving column nonnegative.
Eigen::VectorXd pca_first_component(const Eigen::MatrixXd& block);

// Population mean/variance helpers shared by tests and kernels.
double variance(const Eigen::VectorXd& v);
double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace hcd
