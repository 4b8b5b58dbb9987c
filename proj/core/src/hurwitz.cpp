#include <zetabound/hurwitz.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <zetabound/bernoulli.hpp>
#include <zetabound/kahan.hpp>

namespace zetabound {

namespace {

// B_{2k}/(2k)! for k = 0..kMaxBernoulli+1, so the error estimate (first
// omitted term) is available at the largest K.
const std::vector<double>& em_coefficients() {
    static const std::vector<double> table = [] {
        BernoulliTable bt(2 * (kMaxBernoulli + 1));
        std::vector<double> v(kMaxBernoulli + 2);
        for (int k = 0; k < static_cast<int>(v.size()); ++k) {
            v[k] = bt.em_coefficient(k);
        }
        return v;
    }();
    return table;
}

void validate_args(const HurwitzArgs& args) {
    if (!is_finite(args.s)) throw DomainError("s must be finite");
    if (!std::isfinite(args.w) || !(args.w > 0.0)) {
        throw DomainError("w must be finite and positive");
    }
    if (std::abs(args.s - Complex(1.0, 0.0)) < kPoleBand) {
        throw PoleError("s inside the pole band |s - 1| < 1e-8");
    }
}

void validate_config(const EMConfig& cfg) {
    if (cfg.n_terms < 1 || cfg.n_terms > kMaxTerms) {
        throw ParameterError("n_terms must be in [1, 2^20]");
    }
    if (cfg.k_bernoulli < 0 || cfg.k_bernoulli > kMaxBernoulli) {
        throw ParameterError("k_bernoulli must be in [0, 60]");
    }
    if (!std::isfinite(cfg.target_abs_error) || cfg.target_abs_error < 0.0) {
        throw ParameterError("target_abs_error must be finite and >= 0");
    }
}

struct EMEvaluation {
    Complex value;
    double truncation_estimate;
    double rounding_estimate;
};

EMEvaluation em_evaluate(const Complex& s, double w, int n, int k) {
    KahanSum<Complex> sum;
    double sum_abs = 0.0;
    for (long i = n - 1; i >= 0; --i) {
        const Complex term = pow_real_base(static_cast<double>(i) + w, -s);
        sum.add(term);
        sum_abs += std::abs(term);
    }

    const double base = static_cast<double>(n) + w;
    const Complex tail = pow_real_base(base, 1.0 - s) / (s - 1.0);
    const Complex half = 0.5 * pow_real_base(base, -s);

    // v = s(s+1)...(s+2j-2) * base^{-s-2j+1}, advanced two factors at a time.
    Complex v = s * pow_real_base(base, -s - 1.0);
    const double inv_b2 = 1.0 / (base * base);
    const auto& coeff = em_coefficients();
    KahanSum<Complex> corrections;
    double corr_abs = 0.0;
    for (int j = 1; j <= k; ++j) {
        const Complex term = coeff[j] * v;
        corrections.add(term);
        corr_abs += std::abs(term);
        v *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j) * inv_b2;
    }

    const Complex value = sum.value() + tail + half + corrections.value();
    const double trunc = 2.0 * std::abs(coeff[k + 1] * v);
    // Accumulated rounding floor: compensated summation plus a couple of ulps
    // per pow; irreducible by raising n or k.
    const double eps = std::numeric_limits<double>::epsilon();
    const double round =
        eps * (8.0 * (sum_abs + std::abs(tail) + std::abs(half) + corr_abs) +
               4.0 * std::abs(value));
    return {value, trunc, round};
}

}  // namespace

ShiftReduction shift_reduce(const HurwitzArgs& args) {
    validate_args(args);
    if (args.w <= 1.0) return {args.w, Complex(0.0, 0.0)};
    if (args.w > kMaxShiftW) {
        throw DomainError("w too large to reduce by stripping initial terms");
    }
    const long m = static_cast<long>(std::ceil(args.w)) - 1;
    const double rw = args.w - static_cast<double>(m);
    KahanSum<Complex> corr;
    for (long j = m - 1; j >= 0; --j) {
        corr.add(pow_real_base(rw + static_cast<double>(j), -args.s));
    }
    if (!is_finite(corr.value())) {
        throw OverflowError("shift correction overflowed");
    }
    return {rw, corr.value()};
}

EvalResult hurwitz_zeta(const HurwitzArgs& args, const EMConfig& cfg) {
    validate_args(args);
    validate_config(cfg);

    const bool escalate = cfg.target_abs_error > 0.0;
    int n = cfg.n_terms;
    int k = cfg.k_bernoulli;
    if (escalate) {
        n = std::max(n, 32);
        k = std::max(k, 4);
    }

    // The correction terms only decay while sigma + 2k + 1 > 0.
    const double sigma = args.s.real();
    if (sigma + 2.0 * k + 1.0 <= 0.0) {
        const int k_min = static_cast<int>(std::floor((-sigma - 1.0) / 2.0)) + 1;
        if (escalate && k_min <= kMaxBernoulli) {
            k = k_min;
        } else {
            throw ParameterError(
                "k_bernoulli too small for re(s): need sigma + 2k + 1 > 0");
        }
    }

    // The target drives the truncation component only; the ε-scale rounding
    // floor is reported but cannot be lowered by raising n or k.
    EvalResult best;
    double best_trunc = std::numeric_limits<double>::infinity();
    for (;;) {
        const EMEvaluation ev = em_evaluate(args.s, args.w, n, k);
        const double est = ev.truncation_estimate + ev.rounding_estimate;
        if (!is_finite(ev.value) || !std::isfinite(est)) {
            throw OverflowError("euler-maclaurin evaluation overflowed");
        }
        if (ev.truncation_estimate < best_trunc) {
            best_trunc = ev.truncation_estimate;
            best = {ev.value, est, n, k};
        }
        if (!escalate || ev.truncation_estimate <= cfg.target_abs_error) {
            return {ev.value, est, n, k};
        }
        if (n >= kMaxTerms && k >= kMaxBernoulli) {
            throw PrecisionError("target absolute error unreachable within caps",
                                 best);
        }
        n = std::min(n * 2, kMaxTerms);
        k = std::min(k + 1, kMaxBernoulli);
    }
}

EvalResult riemann_zeta(const Complex& s, const EMConfig& cfg) {
    return hurwitz_zeta({s, 1.0}, cfg);
}

Complex hurwitz_zeta_limit_oracle(const HurwitzArgs& args, long n_terms) {
    validate_args(args);
    if (!(args.s.real() > 0.0)) {
        throw DomainError("limit representation requires re(s) > 0");
    }
    if (n_terms < 1) throw ParameterError("n_terms must be >= 1");
    KahanSum<Complex> sum;
    for (long i = n_terms; i >= 0; --i) {
        sum.add(pow_real_base(static_cast<double>(i) + args.w, -args.s));
    }
    const double base = static_cast<double>(n_terms) + args.w;
    const Complex v =
        sum.value() - pow_real_base(base, 1.0 - args.s) / (1.0 - args.s);
    if (!is_finite(v)) throw OverflowError("limit representation overflowed");
    return v;
}

}  // namespace zetabound
