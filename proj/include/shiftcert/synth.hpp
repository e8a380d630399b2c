#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <vector>

#include "shiftcert/model.hpp"

namespace shiftcert {

// Parameters of the synthetic binary-classification distribution: labels
// uniform on {-1,+1}, each signal coordinate a two-Gaussian mixture with
// centers c*y (weight signal_major_weight) and c*(1-y), remaining coordinates
// zero-mean Gaussian nuisance. Training labels are flipped i.i.d. with
// probability noise_rate.
struct ProblemSpec {
    int total_dim = 300;
    int signal_dim = 1;
    double signal_center = 1.0;
    double signal_variance = 0.15;
    double signal_major_weight = 0.9;
    double nuisance_variance = 0.1;
    double noise_rate = 0.2;

    void validate() const;
    std::vector<Eigen::Index> signal_indices() const;
    std::vector<Eigen::Index> nuisance_indices() const;
};

struct Dataset {
    Eigen::MatrixXd features;      // n x total_dim
    Eigen::VectorXd labels;        // +-1, possibly noisy
    Eigen::VectorXd clean_labels;  // +-1
    std::vector<bool> noise_mask;  // labels[i] == -clean_labels[i] iff mask[i]
    std::uint64_t seed = 0;

    Eigen::Index size() const { return features.rows(); }
    Eigen::Index dim() const { return features.cols(); }
};

enum class ShiftFamily { gaussian, bounded };

// A shift distribution that is oblivious to the signal coordinates: every
// sampled delta is exactly zero on signal_support. Gaussian family draws
// delta_i ~ N(mean_i, sigma^2) per non-signal coordinate; bounded family
// draws mean_i + U[-sqrt(3)*sigma, +sqrt(3)*sigma] (variance sigma^2).
struct ShiftSpec {
    Eigen::VectorXd mean;
    double sigma = 0.0;
    ShiftFamily family = ShiftFamily::gaussian;
    std::vector<Eigen::Index> signal_support;

    void validate() const;
    std::vector<Eigen::Index> shifted_indices() const;  // complement of signal_support
};

Dataset sample_dataset(const ProblemSpec& spec, Eigen::Index n, std::uint64_t seed);

// Paper-style shift: mean_i = -magnitude * sgn(w_i) on nuisance coordinates
// (sgn(0) := 0), zero on signal coordinates, sigma = sqrt(variance). Requires
// a nonempty nuisance support on the model.
ShiftSpec make_paper_shift(const LinearModel& model, double magnitude, double variance,
                           const ProblemSpec& spec);

// Shift whose mean lies in the model's nuisance-support subspace at a given
// angle to -w: mean = norm * (cos(theta) u_w + sin(theta) u_perp) with u_w the
// unit vector along -w restricted to the nuisance support and u_perp a seeded
// random orthogonal unit vector in that subspace.
ShiftSpec make_angled_shift(const LinearModel& model, double angle_deg, double norm,
                            double variance, const ProblemSpec& spec, std::uint64_t seed);

Eigen::VectorXd sample_shift(const ShiftSpec& shift, std::uint64_t seed);

// Fresh noiseless ID points (z, y) returned as (z + delta, y) with an
// independent delta per point; noise_mask all false.
Dataset sample_ood_testset(const ProblemSpec& spec, const ShiftSpec& shift, Eigen::Index n,
                           std::uint64_t seed);

// Streaming draws used by the Monte Carlo estimators. Both consume the given
// engine sequentially; the chunked-seed scheme lives in the callers.
void draw_id_point(const ProblemSpec& spec, std::mt19937_64& eng,
                   Eigen::Ref<Eigen::VectorXd> x, double& label);
void draw_shift_into(const ShiftSpec& shift, std::mt19937_64& eng,
                     Eigen::Ref<Eigen::VectorXd> delta);

}  // namespace shiftcert
