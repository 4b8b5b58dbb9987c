#include <zetabound/certificate.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace zetabound {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void validate_point(const RealArgs& args) {
    if (!std::isfinite(args.sigma) || !(args.sigma > 0.0)) {
        throw DomainError("sigma must be finite and positive");
    }
    if (!std::isfinite(args.w) || !(args.w > 0.0)) {
        throw DomainError("w must be finite and positive");
    }
    if (std::abs(args.sigma - 1.0) < kPoleBand) {
        throw PoleError("sigma inside the pole band |sigma - 1| < 1e-8");
    }
}

}  // namespace

const char* cert_kind_label(CertKind kind) {
    switch (kind) {
        case CertKind::theorem_exact: return "theorem_exact";
        case CertKind::numeric_scan: return "numeric_scan";
        default: return "identity_transfer";
    }
}

CertifyOutcome certify_negative(const RealArgs& args) {
    validate_point(args);
    if (args.sigma >= 1.0) {
        return Refusal{"sigma = " + fmt(args.sigma) +
                       " is not in (0, 1): the negativity hypothesis fails"};
    }
    if (1.0 - args.sigma > args.w) {
        return Refusal{"hypothesis 1 - sigma <= w fails: 1 - " + fmt(args.sigma) +
                       " = " + fmt(1.0 - args.sigma) + " > w = " + fmt(args.w)};
    }

    ZeroFreeCertificate cert;
    cert.kind = CertKind::theorem_exact;
    cert.interval = {args.sigma, args.sigma, false, false};
    cert.subject = subject_id(HurwitzSubject{args.w});
    cert.conclusion = "negative";
    cert.reasoning = {
        "sigma in (0, 1) and 1 - sigma <= w, checked exactly",
        "numerator 1 - sigma - w <= 0 and denominator (1 - sigma) w^sigma > 0, "
        "so the closed-form bound is <= 0",
        "zeta(sigma, w) is strictly below the bound, hence negative",
    };
    cert.bound_samples = {{args.sigma, args.w, theorem_bound(args)}};
    return cert;
}

CertifyOutcome certify_negative_interval(double sigma_lo, double sigma_hi,
                                         bool lo_open, bool hi_open, double w) {
    if (!std::isfinite(sigma_lo) || !std::isfinite(sigma_hi) ||
        sigma_lo > sigma_hi) {
        throw DomainError("malformed sigma interval");
    }
    if (!std::isfinite(w) || !(w > 0.0)) {
        throw DomainError("w must be finite and positive");
    }
    const bool lo_ok = sigma_lo > 0.0 || (sigma_lo == 0.0 && lo_open);
    const bool hi_ok = sigma_hi < 1.0 || (sigma_hi == 1.0 && hi_open);
    if (!lo_ok || !hi_ok) {
        return Refusal{"interval [" + fmt(sigma_lo) + ", " + fmt(sigma_hi) +
                       "] is not contained in (0, 1)"};
    }
    // sup of 1 - sigma over the interval is 1 - sigma_lo
    if (1.0 - sigma_lo > w) {
        return Refusal{"hypothesis 1 - sigma <= w fails near sigma = " +
                       fmt(sigma_lo) + ": 1 - sigma approaches " +
                       fmt(1.0 - sigma_lo) + " > w = " + fmt(w)};
    }

    ZeroFreeCertificate cert;
    cert.kind = CertKind::theorem_exact;
    cert.interval = {sigma_lo, sigma_hi, lo_open, hi_open};
    cert.subject = subject_id(HurwitzSubject{w});
    cert.conclusion = "negative";
    cert.reasoning = {
        "every sigma in the interval lies in (0, 1) and satisfies "
        "1 - sigma <= w, checked exactly at the endpoints",
        "the closed-form bound (1 - sigma - w)/((1 - sigma) w^sigma) is "
        "therefore <= 0 across the interval",
        "zeta(sigma, w) is strictly below the bound, hence negative",
    };
    const double band_lo = std::max(sigma_lo, 1e-6);
    const double band_hi = std::min(sigma_hi, 1.0 - kPoleBand);
    for (double sigma : {band_lo, 0.5 * (band_lo + band_hi), band_hi}) {
        try {
            cert.bound_samples.push_back({sigma, w, theorem_bound({sigma, w})});
        } catch (const Error&) {
            // probe fell inside the pole band; the exact reasoning above
            // does not depend on it
        }
    }
    return cert;
}

ZeroFreeCertificate certify_riemann_zero_free() {
    ZeroFreeCertificate cert;
    cert.kind = CertKind::theorem_exact;
    cert.interval = {0.0, 1.0, true, true};
    cert.subject = subject_id(RiemannSubject{});
    cert.conclusion = "no zeros";
    cert.reasoning = {
        "zeta(sigma) = zeta(sigma, 1), and w = 1 satisfies 1 - sigma <= w "
        "for every sigma in (0, 1)",
        "hence zeta(sigma) < (1 - sigma - 1)/((1 - sigma)) = "
        "-sigma/(1 - sigma) < 0 on the whole interval",
        "a strictly negative function has no zeros",
    };
    for (double sigma : {0.25, 0.5, 0.75}) {
        cert.bound_samples.push_back({sigma, 1.0, theorem_bound({sigma, 1.0})});
    }
    return cert;
}

ZeroFreeCertificate scan_sign(const ScanSubject& subject, double sigma_lo,
                              double sigma_hi, double step,
                              const EMConfig& cfg) {
    validate_scan_interval(sigma_lo, sigma_hi, step);
    const auto grid = make_grid(sigma_lo, sigma_hi, step);
    const SubjectEvaluator evaluator(subject);

    std::vector<ScanRecord> records;
    records.reserve(grid.size());
    for (double sigma : grid) {
        try {
            records.push_back(evaluator.at(sigma, cfg));
        } catch (const Error& e) {
            throw ScanAborted("scan aborted at sigma = " + fmt(sigma) + ": " +
                                  e.what(),
                              std::move(records));
        }
    }

    std::vector<double> offending;
    bool constant = true;
    for (const auto& rec : records) {
        if (rec.sign == Sign::indeterminate) {
            offending.push_back(rec.sigma);
        } else if (rec.sign != records.front().sign) {
            constant = false;
        }
    }

    ZeroFreeCertificate cert;
    cert.kind = CertKind::numeric_scan;
    cert.interval = {sigma_lo, sigma_hi, false, false};
    cert.subject = subject_id(subject);
    cert.complete = offending.empty() && constant;
    if (cert.complete) {
        cert.conclusion = "no zeros";
        cert.reasoning = {
            "every grid point has |value| strictly above its error estimate",
            "the sign is " + std::string(sign_label(records.front().sign)) +
                " at all " + std::to_string(records.size()) + " points",
        };
    } else {
        cert.conclusion = "indeterminate";
        std::string note = "indeterminate or sign-changing points:";
        const size_t shown = std::min<size_t>(offending.size(), 5);
        for (size_t i = 0; i < shown; ++i) note += " " + fmt(offending[i]);
        if (!constant) note += " (sign not constant)";
        cert.reasoning = {note};
    }
    cert.scan_records = std::move(records);
    return cert;
}

}  // namespace zetabound
