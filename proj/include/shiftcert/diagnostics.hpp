#pragma once

#include <Eigen/Core>
#include <span>

#include "shiftcert/model.hpp"
#include "shiftcert/synth.hpp"

namespace shiftcert {

// Statistics of |w_i| over the intersection of the model support with the
// nuisance index set: tau = min, big_m = max, mean_sensitivity = mean.
// size == 0 means the bounded-sensitivity condition is unsatisfiable.
struct NuisanceStats {
    double tau = 0.0;
    double big_m = 0.0;
    double mean_sensitivity = 0.0;
    Eigen::Index size = 0;
};

NuisanceStats nuisance_stats(const LinearModel& model,
                             std::span<const Eigen::Index> nuisance_indices);

// Tight negative-alignment value gamma = -sum_{i in S_k ∩ S} w_i nu_i /
// ||w_{S_k ∩ S}||_1. May be negative (alignment condition then fails).
// Throws CertificateError when the intersection is empty.
double alignment_gamma(const LinearModel& model, const ShiftSpec& shift,
                       std::span<const Eigen::Index> nuisance_indices);

// max of <w, x> over sample points with <w, x> >= 0; 0 when no point is
// positively classified (none_positive set when provided).
double max_positive_margin(const LinearModel& model, const Dataset& sample,
                           bool* none_positive = nullptr);

// Empirical C4 mass: for each yhat in {-1,+1} the fraction of points with
// yhat*<w,x> >= 0 and yhat*<w,x> <= c*tau*gamma_yhat*k_eff; returns the max.
double rho_c(const LinearModel& model, const Dataset& sample, double c, double tau,
             double gamma_pos, double gamma_neg, Eigen::Index k_eff);

struct ConditionReport {
    Eigen::Index nuisance_support_size = 0;
    double tau = 0.0;
    double big_m = 0.0;
    double mean_sensitivity = 0.0;
    double gamma = 0.0;
    double c_max = 0.0;
    double rho = 0.0;
    bool c1_ok = false;  // nuisance support nonempty
    bool c2_ok = false;  // gamma > 0
    bool c3_ok = false;  // c_max <= tau*gamma*size
    bool no_positive_margin = false;
    Eigen::Index sample_size = 0;

    bool bound_applicable() const { return c1_ok && c2_ok; }
};

// Assembles tau, M, gamma, c_max and rho (at c = 1/2) from a fresh noiseless
// sample, with the per-condition booleans.
ConditionReport check_conditions(const LinearModel& model, const ShiftSpec& shift,
                                 const Dataset& sample, const ProblemSpec& spec);

}  // namespace shiftcert
