#pragma once

#include <string>
#include <variant>
#include <vector>

#include <zetabound/bound.hpp>
#include <zetabound/scan.hpp>

namespace zetabound {

enum class CertKind {
    theorem_exact,      // sign arithmetic on the closed-form bound, no numerics
    numeric_scan,       // grid evaluation with |value| > error estimate
    identity_transfer,  // sign carried through an exact identity
};

const char* cert_kind_label(CertKind kind);

struct SigmaInterval {
    double lo;
    double hi;
    bool lo_open;
    bool hi_open;
};

struct BoundSample {
    double sigma;
    double w;
    double bound;
};

struct ZeroFreeCertificate {
    CertKind kind;
    SigmaInterval interval;
    std::string subject;
    std::string conclusion;              // "negative", "no zeros", or a failure note
    std::vector<std::string> reasoning;  // ordered, human-checkable steps
    std::vector<BoundSample> bound_samples;
    std::vector<ScanRecord> scan_records;  // evidence for numeric_scan parts
    bool complete = true;
};

struct Refusal {
    std::string reason;
};

using CertifyOutcome = std::variant<ZeroFreeCertificate, Refusal>;

// theorem_exact certificate that zeta(sigma, w) < 0, issued only when
// sigma in (0,1) and 1 - sigma <= w; otherwise a typed refusal.
CertifyOutcome certify_negative(const RealArgs& args);

// Same hypothesis checked across a whole sigma interval (w fixed): issued
// only when every sigma in [lo, hi] satisfies it.
CertifyOutcome certify_negative_interval(double sigma_lo, double sigma_hi,
                                         bool lo_open, bool hi_open, double w);

// theorem_exact certificate that zeta(sigma) < 0 on (0, 1) (w = 1 makes the
// hypothesis hold on the whole interval), hence no real zeros there.
ZeroFreeCertificate certify_riemann_zero_free();

// A point evaluation failed mid-scan; the records gathered so far are
// attached.
class ScanAborted : public Error {
public:
    ScanAborted(const std::string& msg, std::vector<ScanRecord> partial)
        : Error(msg), partial_(std::move(partial)) {}

    const std::vector<ScanRecord>& partial() const { return partial_; }

private:
    std::vector<ScanRecord> partial_;
};

// numeric_scan certificate over the grid [lo, hi] / step.  conclusion is
// "no zeros" when every point has |value| > error estimate and the sign is
// constant; otherwise "indeterminate" with the offending points listed.
ZeroFreeCertificate scan_sign(const ScanSubject& subject, double sigma_lo,
                              double sigma_hi, double step,
                              const EMConfig& cfg = {});

struct CompositeCertificate {
    std::string subject;
    std::string conclusion;
    std::vector<ZeroFreeCertificate> parts;
    bool corroboration_ok = false;
};

}  // namespace zetabound
