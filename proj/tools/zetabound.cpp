#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <zetabound/report.hpp>

namespace {

using namespace zetabound;

struct CommonOpts {
    std::string config_path;
    double target = 0.0;
    int n_terms = 0;
    int k_bernoulli = 0;
    std::string format;
    std::string out;
    int workers = 0;

    CLI::Option* target_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* workers_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path,
                    "key = value config file (overrides " +
                        std::string(kConfigEnvVar) + ")");
    o.target_opt = cmd->add_option(
        "--target", o.target,
        "absolute error target; 0 disables auto-escalation of N and K");
    o.n_opt = cmd->add_option("--n-terms", o.n_terms, "series terms N");
    o.k_opt = cmd->add_option("--k-bernoulli", o.k_bernoulli,
                              "correction terms K");
    o.format_opt = cmd->add_option("--format", o.format, "text | csv | json");
    o.out_opt = cmd->add_option("--out", o.out, "output file (default stdout)");
    o.workers_opt = cmd->add_option("--workers", o.workers,
                                    "parallel scan workers (default 1)");
}

RunConfig resolve_config(const CommonOpts& o) {
    RunConfig rc;
    const char* env = std::getenv(kConfigEnvVar);
    if (!o.config_path.empty()) {
        rc = load_config_file(o.config_path, rc);
    } else if (env != nullptr && *env != '\0') {
        rc = load_config_file(env, rc);
    }
    if (o.target_opt->count() > 0) rc.target_abs_error = o.target;
    if (o.n_opt->count() > 0) rc.n_terms = o.n_terms;
    if (o.k_opt->count() > 0) rc.k_bernoulli = o.k_bernoulli;
    if (o.format_opt->count() > 0) rc.format = parse_format(o.format);
    if (o.out_opt->count() > 0) rc.output_path = o.out;
    if (o.workers_opt->count() > 0) rc.workers = o.workers;
    return rc;
}

void emit(const RunConfig& rc, const std::string& payload) {
    if (rc.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(rc.output_path, std::ios::binary);
    if (!f) throw ParameterError("cannot open output file: " + rc.output_path);
    f << payload;
}

std::string one_record_csv(const ScanSubject& subject, const ScanRecord& rec) {
    ScanRun run;
    run.subject = subject;
    run.from = rec.sigma;
    run.to = rec.sigma;
    run.step = 1.0;
    run.points.push_back({rec.sigma, rec, ""});
    return scan_to_csv(run);
}

std::string eval_to_text(const EvalResult& r) {
    std::string out;
    if (r.value.imag() == 0.0) {
        out += "value = " + format_double(r.value.real()) + "\n";
    } else {
        out += "value = " + format_complex(r.value) + "\n";
    }
    out += "abs_error_estimate = " + format_double(r.abs_error_estimate) + "\n";
    out += "n_used = " + std::to_string(r.n_used) + "\n";
    out += "k_used = " + std::to_string(r.k_used) + "\n";
    return out;
}

int cmd_eval(const CommonOpts& o, const std::string& s_text, double w) {
    const RunConfig rc = resolve_config(o);
    const Complex s = parse_complex(s_text);
    const HurwitzArgs args{s, w};

    EvalResult r;
    int code = 0;
    try {
        r = hurwitz_zeta(args, rc.em());
    } catch (const PrecisionError& e) {
        r = e.best();
        std::cerr << "zetabound: " << e.what()
                  << " (best-effort result follows)\n";
        code = 4;
    }

    if (rc.format == OutputFormat::json) {
        emit(rc, eval_to_json(args, r));
    } else if (rc.format == OutputFormat::csv) {
        if (s.imag() != 0.0) {
            throw ParameterError("csv output needs real s; use --format json");
        }
        ScanRecord rec{s.real(),
                       subject_id(HurwitzSubject{w}),
                       r.value,
                       r.abs_error_estimate,
                       std::nullopt,
                       classify_sign(r.value, r.abs_error_estimate)};
        try {
            rec.bound = theorem_bound({s.real(), w});
        } catch (const Error&) {
        }
        emit(rc, one_record_csv(HurwitzSubject{w}, rec));
    } else {
        emit(rc, eval_to_text(r));
    }
    return code;
}

int cmd_bound(const CommonOpts& o, double sigma, double w) {
    const RunConfig rc = resolve_config(o);
    const BoundReport report = verify_inequality({sigma, w}, rc.em());

    if (rc.format == OutputFormat::json) {
        emit(rc, bound_report_to_json(report));
    } else if (rc.format == OutputFormat::csv) {
        const Complex value(report.zeta_value, 0.0);
        ScanRecord rec{sigma,
                       subject_id(HurwitzSubject{w}),
                       value,
                       report.abs_error_estimate,
                       report.bound,
                       classify_sign(value, report.abs_error_estimate)};
        emit(rc, one_record_csv(HurwitzSubject{w}, rec));
    } else {
        std::string out;
        out += "sigma = " + format_double(sigma) + "\n";
        out += "w = " + format_double(w) + "\n";
        out += "bound = " + format_double(report.bound) + "\n";
        out += "zeta = " + format_double(report.zeta_value) + "\n";
        out += "margin = " + format_double(report.margin) + "\n";
        out += "abs_error_estimate = " +
               format_double(report.abs_error_estimate) + "\n";
        for (const auto& ls : report.lambda_tail) {
            out += "lambda[" + std::to_string(ls.n) +
                   "] = " + format_double(ls.lambda) + "\n";
        }
        out += std::string("violation = ") + (report.violation ? "yes" : "no") +
               "\n";
        emit(rc, out);
    }
    return report.violation ? 1 : 0;
}

int cmd_certify(const CommonOpts& o, const std::string& target,
                const CLI::Option* sigma_opt, double sigma,
                const CLI::Option* w_opt, double w) {
    const RunConfig rc = resolve_config(o);
    if (target == "negative") {
        if (sigma_opt->count() == 0 || w_opt->count() == 0) {
            throw ParameterError("certify negative needs --sigma and --w");
        }
        const CertifyOutcome outcome = certify_negative({sigma, w});
        if (const auto* refusal = std::get_if<Refusal>(&outcome)) {
            emit(rc, refusal_to_json(target, *refusal));
            std::cerr << "zetabound: certificate refused: " << refusal->reason
                      << "\n";
            return 3;
        }
        emit(rc, certificate_to_json(target,
                                     std::get<ZeroFreeCertificate>(outcome)));
        return 0;
    }
    if (target == "riemann") {
        emit(rc, certificate_to_json(target, certify_riemann_zero_free()));
        return 0;
    }
    if (target == "chi2") {
        const CompositeCertificate cert = certify_chi2_zero_free(rc.em());
        emit(rc, certificate_to_json(target, cert));
        if (!cert.corroboration_ok) {
            std::cerr << "zetabound: chi2 certificate issued, but the numeric "
                         "corroboration scan did not come back clean\n";
        }
        return 0;
    }
    throw ParameterError("unknown certify target: " + target +
                         " (expected negative, riemann, or chi2)");
}

int cmd_scan(const CommonOpts& o, const std::string& subject_name,
             const CLI::Option* w_opt, double w, int q, int chi, double from,
             double to, double step, const std::string& cert_out) {
    const RunConfig rc = resolve_config(o);

    ScanSubject subject = RiemannSubject{};
    if (subject_name == "riemann") {
        subject = RiemannSubject{};
    } else if (subject_name == "hurwitz") {
        if (w_opt->count() == 0) {
            throw ParameterError("scan hurwitz needs --w");
        }
        subject = HurwitzSubject{w};
    } else if (subject_name == "L") {
        subject = DirichletLSubject{q, chi};
    } else {
        throw ParameterError("unknown scan subject: " + subject_name +
                             " (expected riemann, hurwitz, or L)");
    }

    const ScanRun run = run_scan(subject, from, to, step, rc);
    if (rc.format == OutputFormat::json) {
        emit(rc, scan_to_json(run));
    } else {
        emit(rc, scan_to_csv(run));
    }
    std::cerr << scan_summary_line(run) << "\n";

    if (!cert_out.empty()) {
        std::ofstream f(cert_out, std::ios::binary);
        if (!f) throw ParameterError("cannot open certificate file: " + cert_out);
        f << certificate_to_json("scan", scan_run_certificate(run));
    }

    if (!run.complete) return 2;
    if (!run.target_met) return 4;
    return 0;
}

int cmd_chars(const CommonOpts& o, int q) {
    const RunConfig rc = resolve_config(o);
    const auto chars = characters_mod(q);
    if (rc.format == OutputFormat::json) {
        emit(rc, characters_to_json(chars));
    } else {
        emit(rc, characters_to_text(chars));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Hurwitz zeta evaluation, closed-form sign bounds, Dirichlet "
        "characters, and zero-free-interval certificates"};
    app.require_subcommand(1);

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate zeta(s, w) for complex s away from s = 1");
    CommonOpts eval_opts;
    std::string eval_s;
    double eval_w = 1.0;
    eval->add_option("--s", eval_s, "complex s, e.g. 2 or 0.5+14.1i")
        ->required();
    eval->add_option("--w", eval_w, "shift w > 0 (default 1)");
    add_common(eval, eval_opts);

    CLI::App* bound = app.add_subcommand(
        "bound", "closed-form bound vs zeta(sigma, w), with margin");
    CommonOpts bound_opts;
    double bound_sigma = 0.0, bound_w = 0.0;
    bound->add_option("--sigma", bound_sigma, "real sigma > 0")->required();
    bound->add_option("--w", bound_w, "shift w > 0")->required();
    add_common(bound, bound_opts);

    CLI::App* certify = app.add_subcommand(
        "certify", "issue a zero-free / negativity certificate (JSON)");
    CommonOpts certify_opts;
    std::string certify_target;
    double certify_sigma = 0.0, certify_w = 0.0;
    certify->add_option("kind", certify_target, "negative | riemann | chi2")
        ->required();
    CLI::Option* certify_sigma_opt =
        certify->add_option("--sigma", certify_sigma, "sigma for `negative`");
    CLI::Option* certify_w_opt =
        certify->add_option("--w", certify_w, "w for `negative`");
    add_common(certify, certify_opts);

    CLI::App* scan = app.add_subcommand(
        "scan", "sign scan over a sigma grid (CSV rows per point)");
    CommonOpts scan_opts;
    std::string scan_subject;
    double scan_w = 0.0;
    int scan_q = 1, scan_chi = 0;
    double scan_from = 0.0, scan_to = 0.0, scan_step = 0.0;
    std::string scan_cert_out;
    scan->add_option("subject", scan_subject, "riemann | hurwitz | L")
        ->required();
    CLI::Option* scan_w_opt =
        scan->add_option("--w", scan_w, "shift w for `hurwitz`");
    scan->add_option("--q", scan_q, "modulus for `L`");
    scan->add_option("--chi", scan_chi,
                     "character index for `L` (default 0, the principal one)");
    scan->add_option("--from", scan_from, "grid start")->required();
    scan->add_option("--to", scan_to, "grid end")->required();
    scan->add_option("--step", scan_step, "grid step > 0")->required();
    scan->add_option("--cert-out", scan_cert_out,
                     "also write a numeric_scan certificate to this file");
    add_common(scan, scan_opts);

    CLI::App* chars = app.add_subcommand(
        "chars", "list the Dirichlet characters mod q");
    CommonOpts chars_opts;
    int chars_q = 0;
    chars->add_option("--q", chars_q, "modulus in [1, 10000]")->required();
    add_common(chars, chars_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand(eval)) {
            return cmd_eval(eval_opts, eval_s, eval_w);
        }
        if (app.got_subcommand(bound)) {
            return cmd_bound(bound_opts, bound_sigma, bound_w);
        }
        if (app.got_subcommand(certify)) {
            return cmd_certify(certify_opts, certify_target, certify_sigma_opt,
                               certify_sigma, certify_w_opt, certify_w);
        }
        if (app.got_subcommand(scan)) {
            return cmd_scan(scan_opts, scan_subject, scan_w_opt, scan_w, scan_q,
                            scan_chi, scan_from, scan_to, scan_step,
                            scan_cert_out);
        }
        if (app.got_subcommand(chars)) {
            return cmd_chars(chars_opts, chars_q);
        }
    } catch (const zetabound::PrecisionError& e) {
        std::cerr << "zetabound: " << e.what() << "\n";
        return 4;
    } catch (const zetabound::PoleError& e) {
        std::cerr << "zetabound: pole: " << e.what() << "\n";
        return 2;
    } catch (const zetabound::DomainError& e) {
        std::cerr << "zetabound: domain: " << e.what() << "\n";
        return 2;
    } catch (const zetabound::ParameterError& e) {
        std::cerr << "zetabound: parameter: " << e.what() << "\n";
        return 2;
    } catch (const zetabound::OverflowError& e) {
        std::cerr << "zetabound: overflow: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "zetabound: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
