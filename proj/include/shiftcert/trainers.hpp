#pragma once

#include <Eigen/Core>

#include "shiftcert/model.hpp"

namespace shiftcert {

// Minimum-l2-norm interpolator w = X^T (X X^T)^{-1} Y, solved through a
// pivoted LDLT of the Gram matrix. Throws NumericError when the Gram matrix
// is singular beyond the condition threshold (reciprocal condition estimate
// below 1e-12) or the relative residual exceeds 1e-8.
LinearModel fit_min_l2(const Eigen::MatrixXd& X, const Eigen::VectorXd& Y);

struct LogisticOptions {
    double tol = 1e-6;        // stationarity residual at termination
    int max_iters = 50000;
    bool accelerate = true;   // FISTA momentum with a monotone safeguard
    double support_tol_scale = 1e-10;  // support_tol = scale * max|w_i|
    int check_every = 10;     // residual check cadence, iterations
};

// l1-penalised logistic regression:
//   min_w (1/n) sum_i log(1 + exp(-y_i <w, x_i>)) + lambda * ||w||_1
// solved by proximal gradient with backtracking line search. The objective
// trace is nonincreasing by construction (momentum steps that would increase
// it fall back to a plain proximal step). Non-convergence within max_iters is
// flagged in solver_meta["converged"], never silent.
LinearModel fit_l1_logistic(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda,
                            const LogisticOptions& opts = {});

// Stationarity residual of the l1-logistic objective at w:
// max over coordinates of |grad_i + lambda*sgn(w_i)| (w_i != 0) and
// max(|grad_i| - lambda, 0) (w_i == 0).
double l1_logistic_stationarity(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                const Eigen::VectorXd& w, double lambda);

// Mean logistic loss and its gradient (no penalty term).
double logistic_loss(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                     const Eigen::VectorXd& w);
Eigen::VectorXd logistic_gradient(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                  const Eigen::VectorXd& w);

}  // namespace shiftcert
