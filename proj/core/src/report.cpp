#include <zetabound/report.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace zetabound {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double_strict(const std::string& text, const char* what) {
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ParameterError(std::string("cannot parse ") + what + ": " + text);
    }
    if (pos != text.size()) {
        throw ParameterError(std::string("trailing junk in ") + what + ": " + text);
    }
    return v;
}

int parse_int_strict(const std::string& text, const char* what) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw ParameterError(std::string("cannot parse ") + what + ": " + text);
    }
    if (pos != text.size() || v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max()) {
        throw ParameterError(std::string("bad integer for ") + what + ": " + text);
    }
    return static_cast<int>(v);
}

ordered_json interval_json(const SigmaInterval& iv) {
    return ordered_json{{"lo", iv.lo},
                        {"hi", iv.hi},
                        {"lo_open", iv.lo_open},
                        {"hi_open", iv.hi_open}};
}

ordered_json record_json(const ScanRecord& rec) {
    ordered_json j{{"sigma", rec.sigma},
                   {"value_re", rec.value.real()},
                   {"value_im", rec.value.imag()},
                   {"error", rec.abs_error_estimate}};
    if (rec.bound) {
        j["bound"] = *rec.bound;
    } else {
        j["bound"] = nullptr;
    }
    j["sign"] = sign_label(rec.sign);
    return j;
}

ordered_json part_json(const ZeroFreeCertificate& cert) {
    ordered_json j{{"kind", cert_kind_label(cert.kind)},
                   {"subject", cert.subject},
                   {"interval", interval_json(cert.interval)},
                   {"conclusion", cert.conclusion},
                   {"reasoning", cert.reasoning},
                   {"complete", cert.complete}};
    ordered_json samples = ordered_json::array();
    for (const auto& bs : cert.bound_samples) {
        samples.push_back(
            ordered_json{{"sigma", bs.sigma}, {"w", bs.w}, {"bound", bs.bound}});
    }
    j["bound_samples"] = std::move(samples);
    if (!cert.scan_records.empty() || cert.kind == CertKind::numeric_scan) {
        double min_abs = std::numeric_limits<double>::infinity();
        for (const auto& rec : cert.scan_records) {
            min_abs = std::min(min_abs, std::abs(rec.value));
        }
        ordered_json records = ordered_json::array();
        for (const auto& rec : cert.scan_records) records.push_back(record_json(rec));
        j["scan"] = ordered_json{
            {"points", cert.scan_records.size()},
            {"min_abs_value",
             cert.scan_records.empty() ? ordered_json() : ordered_json(min_abs)},
            {"records", std::move(records)}};
    }
    return j;
}

ordered_json certificate_header(const std::string& target, bool issued) {
    return ordered_json{{"schema_version", kSchemaVersion},
                        {"kind", "certificate"},
                        {"target", target},
                        {"issued", issued}};
}

std::optional<double> bound_for(const ScanSubject& subject, double sigma) {
    double w = 1.0;
    if (std::holds_alternative<DirichletLSubject>(subject)) return std::nullopt;
    if (const auto* h = std::get_if<HurwitzSubject>(&subject)) w = h->w;
    try {
        return theorem_bound({sigma, w});
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(const Complex& z) {
    const double im = z.imag();
    if (std::signbit(im)) {
        return format_double(z.real()) + "-" + format_double(-im) + "i";
    }
    return format_double(z.real()) + "+" + format_double(im) + "i";
}

Complex parse_complex(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ParameterError("empty complex literal");
    const char unit = t.back();
    if (unit != 'i' && unit != 'j') {
        return {parse_double_strict(t, "complex literal"), 0.0};
    }
    std::string body = t.substr(0, t.size() - 1);
    // split at the sign that separates the real part from the imaginary part:
    // the last '+'/'-' that is neither leading nor part of an exponent
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        const char ch = body[i];
        if ((ch == '+' || ch == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re_text, im_text;
    if (split == std::string::npos) {
        re_text = "0";
        im_text = body;
    } else {
        re_text = body.substr(0, split);
        im_text = body.substr(split);
    }
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    return {parse_double_strict(re_text, "complex real part"),
            parse_double_strict(im_text, "complex imaginary part")};
}

OutputFormat parse_format(const std::string& text) {
    if (text == "text") return OutputFormat::text;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw ParameterError("unknown output format: " + text +
                         " (expected text, csv, or json)");
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParameterError("config line " + std::to_string(lineno) +
                                 " is not key = value: " + stripped);
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "target_abs_error") {
            base.target_abs_error = parse_double_strict(value, "target_abs_error");
        } else if (key == "n_terms") {
            base.n_terms = parse_int_strict(value, "n_terms");
        } else if (key == "k_bernoulli") {
            base.k_bernoulli = parse_int_strict(value, "k_bernoulli");
        } else if (key == "format") {
            base.format = parse_format(value);
        } else if (key == "output_path") {
            base.output_path = value;
        } else if (key == "workers") {
            base.workers = parse_int_strict(value, "workers");
        } else {
            throw ParameterError("unknown config key: " + key);
        }
    }
    return base;
}

ScanRun run_scan(const ScanSubject& subject, double from, double to,
                 double step, const RunConfig& rc) {
    if (rc.workers < 1) throw ParameterError("workers must be >= 1");
    validate_scan_interval(from, to, step);
    const auto grid = make_grid(from, to, step);
    const SubjectEvaluator evaluator(subject);
    const EMConfig cfg = rc.em();

    ScanRun run;
    run.subject = subject;
    run.from = from;
    run.to = to;
    run.step = step;
    run.points.resize(grid.size());

    const std::string id = subject_id(subject);
    auto eval_point = [&](size_t i) {
        ScanPoint& pt = run.points[i];
        pt.sigma = grid[i];
        try {
            pt.record = evaluator.at(grid[i], cfg);
        } catch (const PrecisionError& e) {
            ScanRecord rec;
            rec.sigma = grid[i];
            rec.subject = id;
            rec.value = e.best().value;
            rec.abs_error_estimate = e.best().abs_error_estimate;
            rec.bound = bound_for(subject, grid[i]);
            rec.sign = classify_sign(rec.value, rec.abs_error_estimate);
            pt.record = rec;
            pt.error = e.what();
        } catch (const Error& e) {
            pt.error = e.what();
        } catch (const std::exception& e) {
            pt.error = std::string("unexpected error: ") + e.what();
        }
    };

    const size_t n_workers =
        std::min<size_t>(static_cast<size_t>(rc.workers), grid.size());
    if (n_workers <= 1) {
        for (size_t i = 0; i < grid.size(); ++i) eval_point(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (size_t t = 0; t < n_workers; ++t) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < grid.size();
                     i = next.fetch_add(1)) {
                    eval_point(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    run.complete = true;
    run.target_met = true;
    double min_abs = std::numeric_limits<double>::infinity();
    Sign verdict = Sign::indeterminate;
    bool first = true;
    bool constant = true;
    for (const auto& pt : run.points) {
        if (!pt.error.empty()) run.target_met = false;
        if (!pt.record) {
            run.complete = false;
            constant = false;
            continue;
        }
        if (cfg.target_abs_error > 0.0 &&
            pt.record->abs_error_estimate > cfg.target_abs_error) {
            run.target_met = false;
        }
        min_abs = std::min(min_abs, std::abs(pt.record->value));
        if (first) {
            verdict = pt.record->sign;
            first = false;
        } else if (pt.record->sign != verdict) {
            constant = false;
        }
    }
    run.min_abs_value = std::isfinite(min_abs) ? min_abs : 0.0;
    run.verdict = (constant && !first && verdict != Sign::indeterminate)
                      ? verdict
                      : Sign::indeterminate;
    return run;
}

ZeroFreeCertificate scan_run_certificate(const ScanRun& run) {
    ZeroFreeCertificate cert;
    cert.kind = CertKind::numeric_scan;
    cert.interval = {run.from, run.to, false, false};
    cert.subject = subject_id(run.subject);

    size_t indeterminate = 0;
    for (const auto& pt : run.points) {
        if (pt.record) {
            cert.scan_records.push_back(*pt.record);
            if (pt.record->sign == Sign::indeterminate) ++indeterminate;
        }
    }
    cert.complete =
        run.complete && indeterminate == 0 && run.verdict != Sign::indeterminate;
    if (cert.complete) {
        cert.conclusion = "no zeros";
        cert.reasoning = {
            "every grid point has |value| strictly above its error estimate",
            "the sign is " + std::string(sign_label(run.verdict)) + " at all " +
                std::to_string(cert.scan_records.size()) + " points",
        };
    } else {
        cert.conclusion = "indeterminate";
        cert.reasoning = {
            std::to_string(run.points.size() - cert.scan_records.size()) +
                " failed points, " + std::to_string(indeterminate) +
                " indeterminate points",
        };
    }
    return cert;
}

std::string scan_to_csv(const ScanRun& run) {
    std::string out = "sigma,subject,value_re,value_im,error,bound,sign\n";
    const std::string id = subject_id(run.subject);
    for (const auto& pt : run.points) {
        out += format_double(pt.sigma);
        out += ',';
        out += id;
        out += ',';
        if (pt.record) {
            out += format_double(pt.record->value.real());
            out += ',';
            out += format_double(pt.record->value.imag());
            out += ',';
            out += format_double(pt.record->abs_error_estimate);
            out += ',';
            if (pt.record->bound) out += format_double(*pt.record->bound);
            out += ',';
            out += sign_label(pt.record->sign);
        } else {
            out += ",,,,indeterminate";
        }
        out += '\n';
    }
    return out;
}

std::string scan_to_json(const ScanRun& run) {
    ordered_json j{{"schema_version", kSchemaVersion},
                   {"kind", "scan"},
                   {"subject", subject_id(run.subject)},
                   {"from", run.from},
                   {"to", run.to},
                   {"step", run.step},
                   {"complete", run.complete},
                   {"target_met", run.target_met},
                   {"verdict", sign_label(run.verdict)},
                   {"min_abs_value", run.min_abs_value}};
    ordered_json points = ordered_json::array();
    for (const auto& pt : run.points) {
        if (pt.record) {
            ordered_json p = record_json(*pt.record);
            if (!pt.error.empty()) p["note"] = pt.error;
            points.push_back(std::move(p));
        } else {
            points.push_back(ordered_json{{"sigma", pt.sigma}, {"note", pt.error}});
        }
    }
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

std::string scan_summary_line(const ScanRun& run) {
    std::ostringstream os;
    size_t failed = 0;
    for (const auto& pt : run.points) {
        if (!pt.record) ++failed;
    }
    os << "scan " << subject_id(run.subject) << ": " << run.points.size()
       << " points in [" << format_double(run.from) << ", "
       << format_double(run.to) << "], verdict " << sign_label(run.verdict)
       << ", min |value| = " << format_double(run.min_abs_value);
    if (!run.complete) {
        os << ", " << failed << " failed points";
    } else if (!run.target_met) {
        os << ", error target missed at some points";
    } else {
        os << ", complete";
    }
    return os.str();
}

std::string eval_to_json(const HurwitzArgs& args, const EvalResult& r) {
    ordered_json j{{"schema_version", kSchemaVersion},
                   {"kind", "eval"},
                   {"s_re", args.s.real()},
                   {"s_im", args.s.imag()},
                   {"w", args.w},
                   {"value_re", r.value.real()},
                   {"value_im", r.value.imag()},
                   {"abs_error_estimate", r.abs_error_estimate},
                   {"n_used", r.n_used},
                   {"k_used", r.k_used}};
    return j.dump(2) + "\n";
}

std::string bound_report_to_json(const BoundReport& report) {
    ordered_json lambdas = ordered_json::array();
    for (const auto& ls : report.lambda_tail) {
        lambdas.push_back(ordered_json{{"n", ls.n}, {"lambda", ls.lambda}});
    }
    ordered_json j{{"schema_version", kSchemaVersion},
                   {"kind", "bound"},
                   {"sigma", report.args.sigma},
                   {"w", report.args.w},
                   {"bound", report.bound},
                   {"zeta_value", report.zeta_value},
                   {"margin", report.margin},
                   {"abs_error_estimate", report.abs_error_estimate},
                   {"violation", report.violation},
                   {"lambda_tail", std::move(lambdas)}};
    return j.dump(2) + "\n";
}

std::string certificate_to_json(const std::string& target,
                                const ZeroFreeCertificate& cert) {
    ordered_json j = certificate_header(target, true);
    j["subject"] = cert.subject;
    j["conclusion"] = cert.conclusion;
    j["parts"] = ordered_json::array({part_json(cert)});
    return j.dump(2) + "\n";
}

std::string certificate_to_json(const std::string& target,
                                const CompositeCertificate& cert) {
    ordered_json j = certificate_header(target, true);
    j["subject"] = cert.subject;
    j["conclusion"] = cert.conclusion;
    j["corroboration_ok"] = cert.corroboration_ok;
    ordered_json parts = ordered_json::array();
    for (const auto& part : cert.parts) parts.push_back(part_json(part));
    j["parts"] = std::move(parts);
    return j.dump(2) + "\n";
}

std::string refusal_to_json(const std::string& target, const Refusal& refusal) {
    ordered_json j = certificate_header(target, false);
    j["refusal"] = ordered_json{{"reason", refusal.reason}};
    return j.dump(2) + "\n";
}

std::string characters_to_text(const std::vector<DirichletCharacter>& chars) {
    if (chars.empty()) return "";
    const auto& first = chars.front();
    const int q = first.modulus;
    const UnitGroupStructure g = unit_group(q);

    std::ostringstream os;
    os << "q = " << q << "  phi = " << g.phi << "  unity_order = "
       << first.unity_order << "  generators:";
    if (g.generators.empty()) {
        os << " (trivial group)";
    } else {
        for (const auto& [gen, order] : g.generators) {
            os << " (g=" << gen << ", ord=" << order << ")";
        }
    }
    os << "\n";
    os << "index  order  principal  primitive  conductor  values e(t/"
       << first.unity_order << ") for a = 0.." << q - 1 << "\n";
    for (const auto& chi : chars) {
        char head[96];
        std::snprintf(head, sizeof(head), "%-5d  %-5ld  %-9s  %-9s  %-9d  ",
                      chi.index, chi.order, chi.is_principal ? "yes" : "no",
                      chi.is_primitive ? "yes" : "no", chi.conductor);
        os << head;
        for (int a = 0; a < q; ++a) {
            if (a > 0) os << ' ';
            if (chi.log_table[a] < 0) {
                os << '0';
            } else {
                os << "e(" << chi.log_table[a] << '/' << chi.unity_order << ')';
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string characters_to_json(const std::vector<DirichletCharacter>& chars) {
    ordered_json j{{"schema_version", kSchemaVersion}, {"kind", "characters"}};
    if (chars.empty()) {
        j["characters"] = ordered_json::array();
        return j.dump(2) + "\n";
    }
    const int q = chars.front().modulus;
    const UnitGroupStructure g = unit_group(q);
    j["q"] = q;
    j["phi"] = g.phi;
    j["unity_order"] = chars.front().unity_order;
    ordered_json gens = ordered_json::array();
    for (const auto& [gen, order] : g.generators) {
        gens.push_back(ordered_json{{"g", gen}, {"order", order}});
    }
    j["generators"] = std::move(gens);
    ordered_json arr = ordered_json::array();
    for (const auto& chi : chars) {
        ordered_json values = ordered_json::array();
        for (const auto& v : chi.values) {
            values.push_back(ordered_json::array({v.real(), v.imag()}));
        }
        arr.push_back(ordered_json{{"index", chi.index},
                                   {"order", chi.order},
                                   {"principal", chi.is_principal},
                                   {"primitive", chi.is_primitive},
                                   {"conductor", chi.conductor},
                                   {"exponents", chi.exponents},
                                   {"log_table", chi.log_table},
                                   {"values", std::move(values)}});
    }
    j["characters"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace zetabound
