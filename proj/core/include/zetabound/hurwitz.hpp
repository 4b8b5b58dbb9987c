#pragma once

#include <string>

#include <zetabound/complex.hpp>
#include <zetabound/errors.hpp>

namespace zetabound {

// |s - 1| below this is treated as sitting on the pole.
inline constexpr double kPoleBand = 1e-8;

// Auto-escalation caps.
inline constexpr int kMaxTerms = 1 << 20;
inline constexpr int kMaxBernoulli = 60;

// Largest w shift_reduce will reduce into (0, 1]; the strip is O(w) work.
inline constexpr double kMaxShiftW = static_cast<double>(1 << 20);

struct HurwitzArgs {
    Complex s;  // s != 1 (outside the pole band)
    double w;   // w > 0
};

struct EMConfig {
    int n_terms = 32;
    int k_bernoulli = 4;
    // Requested absolute error.  > 0 enables auto-escalation of N and K up
    // to the caps; 0 evaluates once with the given N/K.
    double target_abs_error = 1e-12;
};

struct EvalResult {
    Complex value;
    double abs_error_estimate = 0.0;
    int n_used = 0;
    int k_used = 0;
};

// The requested target_abs_error could not be met within the N/K caps; the
// most accurate result obtained is attached.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& msg, EvalResult best)
        : Error(msg), best_(best) {}

    const EvalResult& best() const { return best_; }

private:
    EvalResult best_;
};

// Hurwitz zeta via the truncated series plus Euler-Maclaurin tail:
//
//   sum_{n=0}^{N-1} (n+w)^{-s}  +  (N+w)^{1-s}/(s-1)  +  (N+w)^{-s}/2
//     + sum_{k=1}^{K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * (N+w)^{-s-2k+1}
//
// evaluated directly at the caller's w for every w > 0 (the tail only decays
// faster as w grows).  abs_error_estimate is twice the magnitude of the first
// omitted correction term plus the accumulated-rounding floor; the target
// drives the truncation component, since no choice of N or K lowers the
// floor.
EvalResult hurwitz_zeta(const HurwitzArgs& args, const EMConfig& cfg = {});

// zeta(s) = hurwitz_zeta(s, 1).
EvalResult riemann_zeta(const Complex& s, const EMConfig& cfg = {});

// Slow reference path, valid for Re(s) > 0 only:
//   sum_{n=0}^{N} (n+w)^{-s} - (N+w)^{1-s}/(1-s)
// converges to zeta(s, w) as N grows.  No error estimate; meant as an
// independent cross-check for the Euler-Maclaurin path.
Complex hurwitz_zeta_limit_oracle(const HurwitzArgs& args, long n_terms);

struct ShiftReduction {
    double reduced_w;    // in (0, 1]
    Complex correction;  // sum_{j=0}^{m-1} (reduced_w + j)^{-s}
};

// zeta(s, w) = zeta(s, reduced_w) - correction with m = ceil(w) - 1 strips.
// For w <= 1 the correction is 0 and reduced_w = w.
ShiftReduction shift_reduce(const HurwitzArgs& args);

}  // namespace zetabound
