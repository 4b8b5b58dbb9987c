#include <zetabound/scan.hpp>

#include <cmath>
#include <cstdio>

#include <zetabound/bound.hpp>
#include <zetabound/dirichlet.hpp>

namespace zetabound {

namespace {

std::string format_short(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string subject_id(const ScanSubject& subject) {
    if (std::holds_alternative<RiemannSubject>(subject)) return "riemann";
    if (const auto* h = std::get_if<HurwitzSubject>(&subject)) {
        return "hurwitz(w=" + format_short(h->w) + ")";
    }
    const auto& l = std::get<DirichletLSubject>(subject);
    return "L(q=" + std::to_string(l.q) + ",chi=" + std::to_string(l.chi_index) + ")";
}

const char* sign_label(Sign sign) {
    switch (sign) {
        case Sign::pos: return "pos";
        case Sign::neg: return "neg";
        default: return "indeterminate";
    }
}

Sign classify_sign(const Complex& value, double abs_error_estimate) {
    if (std::abs(value) <= abs_error_estimate) return Sign::indeterminate;
    return value.real() < 0.0 ? Sign::neg : Sign::pos;
}

void validate_scan_interval(double from, double to, double step) {
    if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) {
        throw DomainError("scan interval must be finite");
    }
    if (!(step > 0.0)) throw DomainError("scan step must be positive");
    if (from > to) throw DomainError("scan interval is empty (from > to)");
    const bool below_pole = from > 0.0 && to <= 1.0 - kPoleBand;
    const bool above_pole = from >= 1.0 + kPoleBand;
    if (!below_pole && !above_pole) {
        throw DomainError(
            "scan interval must sit inside (0, 1 - 1e-8] or [1 + 1e-8, inf)");
    }
}

std::vector<double> make_grid(double from, double to, double step) {
    const double raw = (to - from) / step;
    long n = std::llround(raw);
    if (n < 0) n = 0;
    if (std::abs(from + static_cast<double>(n) * step - to) > step * 1e-6) {
        n = static_cast<long>(std::floor(raw + 1e-9));
        if (n < 0) n = 0;
    }
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        grid.push_back(from + static_cast<double>(i) * step);
    }
    return grid;
}

SubjectEvaluator::SubjectEvaluator(ScanSubject subject)
    : subject_(std::move(subject)) {
    if (const auto* l = std::get_if<DirichletLSubject>(&subject_)) {
        auto chars = characters_mod(l->q);
        if (l->chi_index < 0 ||
            l->chi_index >= static_cast<int>(chars.size())) {
            throw ParameterError("character index out of range for modulus");
        }
        chi_ = std::make_shared<const DirichletCharacter>(
            std::move(chars[static_cast<size_t>(l->chi_index)]));
    } else if (const auto* h = std::get_if<HurwitzSubject>(&subject_)) {
        if (!std::isfinite(h->w) || !(h->w > 0.0)) {
            throw DomainError("w must be finite and positive");
        }
    }
}

SubjectEvaluator::~SubjectEvaluator() = default;

ScanRecord SubjectEvaluator::at(double sigma, const EMConfig& cfg) const {
    ScanRecord rec;
    rec.sigma = sigma;
    rec.subject = subject_id(subject_);

    const Complex s(sigma, 0.0);
    double w_for_bound = 1.0;
    if (std::holds_alternative<RiemannSubject>(subject_)) {
        const EvalResult ev = riemann_zeta(s, cfg);
        rec.value = ev.value;
        rec.abs_error_estimate = ev.abs_error_estimate;
    } else if (const auto* h = std::get_if<HurwitzSubject>(&subject_)) {
        const EvalResult ev = hurwitz_zeta({s, h->w}, cfg);
        rec.value = ev.value;
        rec.abs_error_estimate = ev.abs_error_estimate;
        w_for_bound = h->w;
    } else {
        const LDecomposition dec = dirichlet_L(*chi_, s, cfg);
        rec.value = dec.value;
        rec.abs_error_estimate = dec.abs_error_estimate;
    }

    if (!std::holds_alternative<DirichletLSubject>(subject_)) {
        try {
            rec.bound = theorem_bound({sigma, w_for_bound});
        } catch (const Error&) {
            rec.bound = std::nullopt;
        }
    }
    rec.sign = classify_sign(rec.value, rec.abs_error_estimate);
    return rec;
}

}  // namespace zetabound
