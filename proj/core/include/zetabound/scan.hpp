#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <zetabound/hurwitz.hpp>

namespace zetabound {

struct DirichletCharacter;

struct RiemannSubject {};

struct HurwitzSubject {
    double w;
};

struct DirichletLSubject {
    int q;
    int chi_index;  // position in the canonical character enumeration
};

using ScanSubject = std::variant<RiemannSubject, HurwitzSubject, DirichletLSubject>;

// Stable identifier used in report rows: "riemann", "hurwitz(w=...)",
// "L(q=...,chi=...)".
std::string subject_id(const ScanSubject& subject);

enum class Sign { pos, neg, indeterminate };

const char* sign_label(Sign sign);

// indeterminate iff |value| <= abs_error_estimate, else the sign of Re(value).
Sign classify_sign(const Complex& value, double abs_error_estimate);

struct ScanRecord {
    double sigma;
    std::string subject;
    Complex value;
    double abs_error_estimate;
    std::optional<double> bound;  // closed-form bound where defined
    Sign sign;
};

// Grid from + i*step for i = 0..n; n chosen so the grid covers [from, to],
// snapping to `to` when a whole number of steps lands there up to rounding.
std::vector<double> make_grid(double from, double to, double step);

// Throws DomainError unless step > 0, from <= to, and [from, to] avoids the
// pole band: either 0 < from and to <= 1 - band, or from >= 1 + band.
void validate_scan_interval(double from, double to, double step);

// One evaluation context per subject; character tables are prepared once so
// per-point evaluation is pure and thread-safe.
class SubjectEvaluator {
public:
    explicit SubjectEvaluator(ScanSubject subject);
    ~SubjectEvaluator();

    SubjectEvaluator(const SubjectEvaluator&) = delete;
    SubjectEvaluator& operator=(const SubjectEvaluator&) = delete;
    SubjectEvaluator(SubjectEvaluator&&) = default;
    SubjectEvaluator& operator=(SubjectEvaluator&&) = default;

    const ScanSubject& subject() const { return subject_; }

    ScanRecord at(double sigma, const EMConfig& cfg) const;

private:
    ScanSubject subject_;
    std::shared_ptr<const DirichletCharacter> chi_;  // set for L subjects
};

}  // namespace zetabound
