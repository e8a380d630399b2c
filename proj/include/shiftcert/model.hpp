#pragma once

#include <Eigen/Core>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace shiftcert {

struct Dataset;

// A trained linear classifier. Decision rule is sgn(<w, x>) with sgn(0) := +1.
// The support is {i : |w_i| > support_tol}.
struct LinearModel {
    Eigen::VectorXd weights;
    double support_tol = 1e-8;
    double train_error = 0.0;
    bool interpolating = false;
    std::vector<double> objective_trace;
    std::map<std::string, std::string> solver_meta;

    Eigen::Index dim() const { return weights.size(); }
    std::vector<Eigen::Index> support() const;
    // Subset of `indices` that is also in the support.
    std::vector<Eigen::Index> support_within(std::span<const Eigen::Index> indices) const;
};

double margin(const LinearModel& model, const Eigen::VectorXd& x);
double predict(const LinearModel& model, const Eigen::VectorXd& x);

// Fraction of points with predict(x_i) != labels[i] (noisy labels).
double training_error(const LinearModel& model, const Dataset& data);

// Proximal operator of t*|.|: sgn(v) * max(|v| - t, 0).
double soft_threshold(double v, double t);

}  // namespace shiftcert
