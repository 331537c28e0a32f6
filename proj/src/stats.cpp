#include "hybridcd/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hybridcd/error.hpp"

namespace hcd {

namespace {

constexpr double kRhoClamp = 1.0 - 1e-12;

Eigen::VectorXd standardized(const Eigen::VectorXd& v, const char* what) {
    Eigen::VectorXd out = v.array() - v.mean();
    double sd = std::sqrt(out.squaredNorm() / static_cast<double>(v.size()));
    if (!(sd > 1e-12)) throw DegenerateSeries(what);
    return out / sd;
}

Eigen::MatrixXd centered(const Eigen::MatrixXd& m) {
    return m.rowwise() - m.colwise().mean();
}

double residual_corr(const Eigen::VectorXd& rx, const Eigen::VectorXd& ry, double var_x, double var_y) {
    const double n = static_cast<double>(rx.size());
    double vx = rx.squaredNorm() / n;
    double vy = ry.squaredNorm() / n;
    if (vx <= 1e-12 * var_x || vy <= 1e-12 * var_y) return 0.0;
    return rx.dot(ry) / n / std::sqrt(vx * vy);
}

}  // namespace

double variance(const Eigen::VectorXd& v) {
    if (v.size() == 0) return 0.0;
    return (v.array() - v.mean()).square().mean();
}

double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::ArrayXd ca = a.array() - a.mean();
    Eigen::ArrayXd cb = b.array() - b.mean();
    double denom = std::sqrt((ca * ca).sum() * (cb * cb).sum());
    return denom > 0.0 ? (ca * cb).sum() / denom : 0.0;
}

RegressionFit ols_fit(const Eigen::VectorXd& y, const Eigen::MatrixXd& X) {
    if (y.size() == 0) throw InvalidArgument("ols_fit: empty response");
    if (X.rows() != y.size()) throw InvalidArgument("ols_fit: design has a different number of rows");
    RegressionFit fit;
    if (X.cols() == 0) {
        fit.coefficients = Eigen::VectorXd();
        fit.residuals = y;
        return fit;
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(X);
    fit.coefficients = cod.solve(y);
    fit.residuals = y - X * fit.coefficients;
    return fit;
}

Eigen::VectorXd residualize_on_past(const Dataset& data, int target, const std::vector<LaggedNode>& past,
                                    int gamma) {
    if (target < 0 || target >= data.d()) throw InvalidArgument("residualize_on_past: bad target");
    for (const auto& p : past) {
        if (p.lag < 1) throw InvalidArgument("residualize_on_past: past nodes must be strictly lagged");
        if (p.lag > gamma) throw InvalidArgument("residualize_on_past: lag exceeds gamma");
        if (p.var < 0 || p.var >= data.d()) throw InvalidArgument("residualize_on_past: bad variable");
    }
    const int rows = data.T() - gamma;
    if (rows <= 0) throw InsufficientSamples("residualize_on_past: T <= gamma");
    Eigen::VectorXd y = data.values.col(target).segment(gamma, rows);
    y.array() -= y.mean();
    if (past.empty()) return y;
    Eigen::MatrixXd X(rows, static_cast<Eigen::Index>(past.size()));
    for (std::size_t k = 0; k < past.size(); ++k)
        X.col(static_cast<Eigen::Index>(k)) = data.values.col(past[k].var).segment(gamma - past[k].lag, rows);
    return ols_fit(y, centered(X)).residuals;
}

double fisher_z(double rho, int n, int k) {
    rho = std::clamp(rho, -kRhoClamp, kRhoClamp);
    return std::atanh(rho) * std::sqrt(static_cast<double>(n - k - 3));
}

double normal_two_sided_p(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

TestResult ci_test_partial_corr(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Eigen::MatrixXd& Z) {
    const auto n = x.size();
    if (y.size() != n || (Z.cols() > 0 && Z.rows() != n))
        throw InvalidArgument("ci_test_partial_corr: length mismatch");
    const int k = static_cast<int>(Z.cols());
    if (n <= k + 3) throw InsufficientSamples("insufficient samples");

    Eigen::VectorXd cx = x.array() - x.mean();
    Eigen::VectorXd cy = y.array() - y.mean();
    Eigen::VectorXd rx = cx, ry = cy;
    if (k > 0) {
        Eigen::MatrixXd cz = centered(Z);
        rx = ols_fit(cx, cz).residuals;
        ry = ols_fit(cy, cz).residuals;
    }
    double rho = residual_corr(rx, ry, variance(x), variance(y));
    double z = fisher_z(rho, static_cast<int>(n), k);
    return {z, normal_two_sided_p(z)};
}

double partial_corr_from_cov(const Eigen::MatrixXd& cov, int x, int y, const std::vector<int>& cond) {
    const double sxx = cov(x, x), syy = cov(y, y), sxy = cov(x, y);
    if (cond.empty()) {
        if (sxx <= 0.0 || syy <= 0.0) return 0.0;
        return sxy / std::sqrt(sxx * syy);
    }
    const auto k = static_cast<Eigen::Index>(cond.size());
    Eigen::MatrixXd szz(k, k);
    Eigen::MatrixXd szr(k, 2);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) szz(i, j) = cov(cond[i], cond[j]);
        szr(i, 0) = cov(cond[i], x);
        szr(i, 1) = cov(cond[i], y);
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(szz);
    Eigen::MatrixXd beta = cod.solve(szr);
    Eigen::Matrix2d explained = szr.transpose() * beta;
    double rxx = sxx - explained(0, 0);
    double ryy = syy - explained(1, 1);
    double rxy = sxy - explained(0, 1);
    if (rxx <= 1e-12 * sxx || ryy <= 1e-12 * syy) return 0.0;
    return std::clamp(rxy / std::sqrt(rxx * ryy), -1.0, 1.0);
}

double independence_measure(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw InvalidArgument("independence_measure: length mismatch");
    if (a.size() < 20) throw InsufficientSamples("independence_measure needs at least 20 points");
    const Eigen::ArrayXd ua = standardized(a, "degenerate series").array();
    const Eigen::ArrayXd ub = standardized(b, "degenerate series").array();

    auto transforms = [](const Eigen::ArrayXd& u) {
        std::array<Eigen::ArrayXd, 4> f{
            u,
            u.tanh(),
            u * (-0.5 * u.square()).exp(),
            u.cosh().log(),
        };
        for (auto& col : f) {
            col -= col.mean();
            double norm = std::sqrt(col.square().sum());
            col = norm > 1e-12 * std::sqrt(static_cast<double>(col.size())) ? Eigen::ArrayXd(col / norm)
                                                                             : Eigen::ArrayXd::Zero(col.size());
        }
        return f;
    };
    const auto fa = transforms(ua);
    const auto fb = transforms(ub);
    double total = 0.0;
    for (const auto& x : fa) {
        for (const auto& y : fb) {
            double r = std::clamp((x * y).sum(), -kRhoClamp, kRhoClamp);
            total += -0.5 * std::log1p(-r * r);
        }
    }
    return total;
}

Eigen::VectorXd pca_first_component(const Eigen::MatrixXd& block) {
    if (block.cols() < 1) throw InvalidArgument("pca_first_component: empty block");
    const auto n = block.rows();
    std::vector<Eigen::Index> keep;
    Eigen::MatrixXd z(n, block.cols());
    for (Eigen::Index j = 0; j < block.cols(); ++j) {
        Eigen::VectorXd col = block.col(j).array() - block.col(j).mean();
        double sd = std::sqrt(col.squaredNorm() / static_cast<double>(n));
        if (!(sd > 1e-12)) continue;
        z.col(static_cast<Eigen::Index>(keep.size())) = col / sd;
        keep.push_back(j);
    }
    if (keep.empty()) throw DegenerateSeries("every column of the block is constant");
    z.conservativeResize(n, static_cast<Eigen::Index>(keep.size()));
    if (z.cols() == 1) return z.col(0);

    Eigen::MatrixXd corr = z.transpose() * z / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(corr);
    const Eigen::Index top = corr.cols() - 1;  // eigenvalues ascend
    Eigen::VectorXd axis = eig.eigenvectors().col(top);
    if (axis(0) < 0.0) axis = -axis;
    Eigen::VectorXd score = z * axis;
    double sd = std::sqrt(score.squaredNorm() / static_cast<double>(n));
    return score / sd;
}

}  // namespace hcd
