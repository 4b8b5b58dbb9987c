#pragma once

#include <vector>

#include <zetabound/hurwitz.hpp>

namespace zetabound {

struct RealArgs {
    double sigma;  // > 0, outside the pole band around 1
    double w;      // > 0
};

// (1 - sigma - w) / ((1 - sigma) * w^sigma), evaluated exactly as written.
// For sigma in (0,1) with 1 - sigma <= w this is a non-positive upper bound
// for zeta(sigma, w); for sigma > 1 it is a positive lower bound.
double theorem_bound(const RealArgs& args);

// Defect of the n-th series term against its integral comparison:
//   (n+w)^{-sigma} - integral_{n-1}^{n} (x+w)^{-sigma} dx,   n >= 1.
double lambda_term(long n, const RealArgs& args);

struct LambdaSample {
    long n;
    double lambda;  // lambda_n = sum of lambda_term(1..n)
};

// lambda_1..lambda_n_max as compensated partial sums of lambda_term; each
// step uses the closed form of its own integral slice, which keeps the
// accumulation accurate near sigma = 1 and strictly decreasing for as long
// as the steps stay resolvable in binary64.
std::vector<LambdaSample> lambda_sequence(const RealArgs& args, long n_max);

struct BoundReport {
    RealArgs args;
    double bound;
    double zeta_value;
    double margin;  // bound - zeta_value; positive when the bound holds
    std::vector<LambdaSample> lambda_tail;  // n = 1, 10, 100, 1000
    double abs_error_estimate;
    bool violation;  // margin < -abs_error_estimate; must never be true
};

BoundReport verify_inequality(const RealArgs& args, const EMConfig& cfg = {});

struct PositivityEntry {
    double sigma;
    double w;
    double bound;
    bool positive;
};

// Evaluates the closed-form bound over a sigma > 1 grid, flagging positivity
// (the bound is then a lower bound, so zeta(sigma, w) > 0 on the grid).
std::vector<PositivityEntry> positivity_grid(const std::vector<double>& sigmas,
                                             const std::vector<double>& ws);

}  // namespace zetabound
