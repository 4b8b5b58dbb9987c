#pragma once

#include <optional>
#include <string>
#include <vector>

#include <zetabound/bound.hpp>
#include <zetabound/certificate.hpp>
#include <zetabound/dirichlet.hpp>
#include <zetabound/scan.hpp>

namespace zetabound {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kConfigEnvVar = "ZETABOUND_CONFIG";

enum class OutputFormat { text, csv, json };

struct RunConfig {
    double target_abs_error = 1e-12;
    int n_terms = 32;
    int k_bernoulli = 4;
    OutputFormat format = OutputFormat::text;
    std::string output_path;  // empty = stdout
    int workers = 1;

    EMConfig em() const {
        return EMConfig{n_terms, k_bernoulli, target_abs_error};
    }
};

// key = value lines; '#' starts a comment; unknown keys are rejected with
// ParameterError.  Values override the corresponding fields of `base`.
RunConfig load_config_file(const std::string& path, RunConfig base);

OutputFormat parse_format(const std::string& text);

// Deterministic shortest-exact formatting helpers ("%.17g").
std::string format_double(double x);
std::string format_complex(const Complex& z);  // "a+bi" / "a-bi"

// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" (also 'j' for the unit).
Complex parse_complex(const std::string& text);

struct ScanPoint {
    double sigma;
    std::optional<ScanRecord> record;  // empty when evaluation failed
    std::string error;                 // failure note, empty otherwise
};

struct ScanRun {
    ScanSubject subject;
    double from;
    double to;
    double step;
    std::vector<ScanPoint> points;
    bool complete = true;       // every point evaluated
    bool target_met = true;     // every estimate within the requested target
    double min_abs_value = 0;   // over evaluated points
    Sign verdict = Sign::indeterminate;
};

// Full-grid scan that records per-point failures instead of aborting.
// Precision failures keep the best-effort value (flagged via target_met);
// other evaluation errors leave the point empty.  workers > 1 evaluates
// points concurrently with a deterministic, order-independent merge.
ScanRun run_scan(const ScanSubject& subject, double from, double to,
                 double step, const RunConfig& rc);

// numeric_scan certificate distilled from a completed run.
ZeroFreeCertificate scan_run_certificate(const ScanRun& run);

// CSV with the fixed header
//   sigma,subject,value_re,value_im,error,bound,sign
// one row per grid point; failed points leave the numeric fields empty.
std::string scan_to_csv(const ScanRun& run);
std::string scan_to_json(const ScanRun& run);
std::string scan_summary_line(const ScanRun& run);

std::string eval_to_json(const HurwitzArgs& args, const EvalResult& r);
std::string bound_report_to_json(const BoundReport& report);

std::string certificate_to_json(const std::string& target,
                                const ZeroFreeCertificate& cert);
std::string certificate_to_json(const std::string& target,
                                const CompositeCertificate& cert);
std::string refusal_to_json(const std::string& target, const Refusal& refusal);

std::string characters_to_text(const std::vector<DirichletCharacter>& chars);
std::string characters_to_json(const std::vector<DirichletCharacter>& chars);

}  // namespace zetabound
