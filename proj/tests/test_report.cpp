#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>
#include <zetabound/report.hpp>

using namespace zetabound;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;

    TempFile(const std::string& stem, const std::string& content) {
        const auto dir = std::filesystem::temp_directory_path();
        path = (dir / (stem + "." + std::to_string(::getpid()))).string();
        std::ofstream out(path);
        out << content;
    }

    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("format_double prints shortest-exact decimal") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.25) == "-2.25");
    CHECK(format_double(200000.0) == "200000");
    CHECK(format_double(1e300) == "1.0000000000000001e+300");
    CHECK(format_double(3.141592653589793) == "3.1415926535897931");
}

TEST_CASE("format_complex always carries both components") {
    CHECK(format_complex({2.0, 0.0}) == "2+0i");
    CHECK(format_complex({1.5, -2.25}) == "1.5-2.25i");
    CHECK(format_complex({-0.5, 3.0}) == "-0.5+3i");
    CHECK(format_complex({0.0, -1.0}) == "0-1i");
}

TEST_CASE("parse_complex accepts the documented forms") {
    CHECK(parse_complex("2") == Complex{2.0, 0.0});
    CHECK(parse_complex("-3.5") == Complex{-3.5, 0.0});
    CHECK(parse_complex("i") == Complex{0.0, 1.0});
    CHECK(parse_complex("-i") == Complex{0.0, -1.0});
    CHECK(parse_complex("3i") == Complex{0.0, 3.0});
    CHECK(parse_complex("5j") == Complex{0.0, 5.0});
    CHECK(parse_complex("1-i") == Complex{1.0, -1.0});
    CHECK(parse_complex("1+i") == Complex{1.0, 1.0});
    CHECK(parse_complex("0.5+14.134725i") == Complex{0.5, 14.134725});
    CHECK(parse_complex("2e+5i") == Complex{0.0, 2e5});
    CHECK(parse_complex("1+2e-3i") == Complex{1.0, 2e-3});
    CHECK(parse_complex(" 3i ") == Complex{0.0, 3.0});
}

TEST_CASE("parse_complex round trips formatted values") {
    const std::vector<Complex> cases = {
        {0.0, 0.0},       {1.0, 0.0},     {-1.4603545088095868, 0.0},
        {0.5, 14.134725}, {-0.25, -2e-7}, {1e300, -1e-300},
    };
    for (const auto& z : cases) {
        CAPTURE(format_complex(z));
        CHECK(parse_complex(format_complex(z)) == z);
    }
}

TEST_CASE("parse_complex rejects malformed literals") {
    CHECK_THROWS_AS((void)parse_complex(""), ParameterError);
    CHECK_THROWS_AS((void)parse_complex("abc"), ParameterError);
    CHECK_THROWS_AS((void)parse_complex("1+2x"), ParameterError);
    CHECK_THROWS_AS((void)parse_complex("1++2i"), ParameterError);
    CHECK_THROWS_AS((void)parse_complex("--i"), ParameterError);
    CHECK_THROWS_AS((void)parse_complex("2 + 3i"), ParameterError);
}

TEST_CASE("parse_format maps names to formats") {
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS_AS((void)parse_format("yaml"), ParameterError);
}

TEST_CASE("load_config_file parses keys, comments, and overrides") {
    SUBCASE("all keys") {
        TempFile f("zb_cfg_full",
                   "# full config\n"
                   "target_abs_error = 1e-10\n"
                   "n_terms = 64   # inline comment\n"
                   "k_bernoulli = 6\n"
                   "\n"
                   "format = csv\n"
                   "output_path = out.csv\n"
                   "workers = 3\n");
        const RunConfig rc = load_config_file(f.path, RunConfig{});
        CHECK(rc.target_abs_error == 1e-10);
        CHECK(rc.n_terms == 64);
        CHECK(rc.k_bernoulli == 6);
        CHECK(rc.format == OutputFormat::csv);
        CHECK(rc.output_path == "out.csv");
        CHECK(rc.workers == 3);
    }
    SUBCASE("unset keys keep the base values") {
        RunConfig base;
        base.n_terms = 128;
        base.format = OutputFormat::json;
        TempFile f("zb_cfg_partial", "target_abs_error = 1e-6\n");
        const RunConfig rc = load_config_file(f.path, base);
        CHECK(rc.target_abs_error == 1e-6);
        CHECK(rc.n_terms == 128);
        CHECK(rc.format == OutputFormat::json);
    }
    SUBCASE("unknown key") {
        TempFile f("zb_cfg_unknown", "colour = red\n");
        CHECK_THROWS_AS((void)load_config_file(f.path, RunConfig{}),
                        ParameterError);
    }
    SUBCASE("bad values") {
        TempFile a("zb_cfg_badint", "n_terms = twelve\n");
        CHECK_THROWS_AS((void)load_config_file(a.path, RunConfig{}),
                        ParameterError);
        TempFile b("zb_cfg_fracint", "workers = 3.5\n");
        CHECK_THROWS_AS((void)load_config_file(b.path, RunConfig{}),
                        ParameterError);
        TempFile c("zb_cfg_noeq", "just some text\n");
        CHECK_THROWS_AS((void)load_config_file(c.path, RunConfig{}),
                        ParameterError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(
            (void)load_config_file("/nonexistent/zetabound.cfg", RunConfig{}),
            ParameterError);
    }
}

TEST_CASE("RunConfig::em copies the evaluation knobs") {
    RunConfig rc;
    rc.target_abs_error = 1e-10;
    rc.n_terms = 48;
    rc.k_bernoulli = 7;
    const EMConfig cfg = rc.em();
    CHECK(cfg.n_terms == 48);
    CHECK(cfg.k_bernoulli == 7);
    CHECK(cfg.target_abs_error == 1e-10);
}

TEST_CASE("run_scan records every grid point") {
    RunConfig rc;
    const ScanRun run = run_scan(RiemannSubject{}, 0.2, 0.4, 0.1, rc);
    CHECK(run.points.size() == 3);
    CHECK(run.complete);
    CHECK(run.target_met);
    CHECK(run.verdict == Sign::neg);
    CHECK(run.min_abs_value > 0.0);
    for (const auto& pt : run.points) {
        REQUIRE(pt.record.has_value());
        CHECK(pt.error.empty());
        CHECK(pt.record->sign == Sign::neg);
        CHECK(pt.record->bound.has_value());
    }
    CHECK_THROWS_AS((void)run_scan(RiemannSubject{}, 0.2, 0.4, 0.1,
                                   [] {
                                       RunConfig bad;
                                       bad.workers = 0;
                                       return bad;
                                   }()),
                    ParameterError);
}

TEST_CASE("run_scan flags estimates above the requested target") {
    RunConfig rc;
    rc.target_abs_error = 1e-18;
    const ScanRun run = run_scan(RiemannSubject{}, 0.2, 0.4, 0.1, rc);
    CHECK(run.complete);
    CHECK_FALSE(run.target_met);
    const std::string line = scan_summary_line(run);
    CHECK(line.find("error target missed") != std::string::npos);
}

TEST_CASE("scan output is byte-identical across runs and worker counts") {
    RunConfig serial;
    RunConfig parallel;
    parallel.workers = 4;
    const ScanRun a = run_scan(RiemannSubject{}, 0.01, 0.99, 0.01, serial);
    const ScanRun b = run_scan(RiemannSubject{}, 0.01, 0.99, 0.01, parallel);
    CHECK(a.points.size() == 99);
    CHECK(scan_to_csv(a) == scan_to_csv(b));
    CHECK(scan_to_json(a) == scan_to_json(b));
    CHECK(scan_summary_line(a) == scan_summary_line(b));
}

TEST_CASE("scan_to_csv emits the fixed header and full rows") {
    RunConfig rc;
    const ScanRun run = run_scan(RiemannSubject{}, 0.2, 0.4, 0.1, rc);
    const std::string csv = scan_to_csv(run);
    const auto lines = split(csv, '\n');
    REQUIRE(lines.size() == 5);  // header + 3 rows + trailing newline
    CHECK(lines[0] == "sigma,subject,value_re,value_im,error,bound,sign");
    CHECK(lines[4].empty());
    for (size_t i = 1; i <= 3; ++i) {
        const auto fields = split(lines[i], ',');
        REQUIRE(fields.size() == 7);
        CHECK(fields[1] == "riemann");
        CHECK_FALSE(fields[2].empty());
        CHECK(fields[3] == "0");
        CHECK_FALSE(fields[4].empty());
        CHECK_FALSE(fields[5].empty());
        CHECK(fields[6] == "neg");
    }
    CHECK(lines[1].substr(0, lines[1].find(',')) == "0.20000000000000001");
}

TEST_CASE("serializers render failed points distinctly") {
    ScanRun run;
    run.subject = RiemannSubject{};
    run.from = 0.25;
    run.to = 0.5;
    run.step = 0.25;
    ScanPoint ok;
    ok.sigma = 0.25;
    ok.record = ScanRecord{0.25, "riemann", Complex{-1.0, 0.0}, 1e-14,
                           std::nullopt, Sign::neg};
    ScanPoint bad;
    bad.sigma = 0.5;
    bad.error = "boom";
    run.points = {ok, bad};
    run.complete = false;

    const auto lines = split(scan_to_csv(run), '\n');
    REQUIRE(lines.size() == 4);
    CHECK(lines[2] == "0.5,riemann,,,,,indeterminate");

    const json j = json::parse(scan_to_json(run));
    CHECK(j["complete"] == false);
    REQUIRE(j["points"].size() == 2);
    CHECK(j["points"][0]["sign"] == "neg");
    CHECK(j["points"][0]["bound"].is_null());
    CHECK(j["points"][1] == json({{"sigma", 0.5}, {"note", "boom"}}));

    CHECK(scan_summary_line(run).find("1 failed points") != std::string::npos);
}

TEST_CASE("scan_to_json carries the run metadata") {
    RunConfig rc;
    const ScanRun run = run_scan(HurwitzSubject{2.0}, 0.2, 0.4, 0.1, rc);
    const json j = json::parse(scan_to_json(run));
    CHECK(j["schema_version"] == "1");
    CHECK(j["kind"] == "scan");
    CHECK(j["subject"] == "hurwitz(w=2)");
    CHECK(j["from"] == 0.2);
    CHECK(j["to"] == 0.4);
    CHECK(j["step"] == 0.1);
    CHECK(j["complete"] == true);
    CHECK(j["target_met"] == true);
    REQUIRE(j["points"].size() == 3);
    for (const auto& p : j["points"]) {
        CHECK(p.contains("sigma"));
        CHECK(p.contains("value_re"));
        CHECK(p.contains("value_im"));
        CHECK(p.contains("error"));
        CHECK(p.contains("bound"));
        CHECK(p.contains("sign"));
    }
}

TEST_CASE("scan_run_certificate distills a completed run") {
    RunConfig rc;
    const ScanRun run = run_scan(RiemannSubject{}, 0.2, 0.8, 0.1, rc);
    const ZeroFreeCertificate cert = scan_run_certificate(run);
    CHECK(cert.kind == CertKind::numeric_scan);
    CHECK(cert.subject == "riemann");
    CHECK(cert.conclusion == "no zeros");
    CHECK(cert.complete);
    CHECK(cert.interval.lo == 0.2);
    CHECK(cert.interval.hi == 0.8);
    CHECK_FALSE(cert.interval.lo_open);
    CHECK_FALSE(cert.interval.hi_open);
    CHECK(cert.scan_records.size() == 7);
}

TEST_CASE("eval_to_json shape") {
    const HurwitzArgs args{{2.0, 0.0}, 1.0};
    const EvalResult r = hurwitz_zeta(args);
    const json j = json::parse(eval_to_json(args, r));
    CHECK(j["schema_version"] == "1");
    CHECK(j["kind"] == "eval");
    CHECK(j["s_re"] == 2.0);
    CHECK(j["s_im"] == 0.0);
    CHECK(j["w"] == 1.0);
    CHECK(j["value_re"].get<double>() ==
          doctest::Approx(1.6449340668482264).epsilon(1e-15));
    CHECK(j["value_im"].get<double>() == 0.0);
    CHECK(j["abs_error_estimate"].get<double>() > 0.0);
    CHECK(j["n_used"].get<long>() >= 1);
    CHECK(j["k_used"].get<int>() >= 1);
}

TEST_CASE("bound_report_to_json shape") {
    const BoundReport report = verify_inequality({0.5, 1.0});
    const json j = json::parse(bound_report_to_json(report));
    CHECK(j["schema_version"] == "1");
    CHECK(j["kind"] == "bound");
    CHECK(j["sigma"] == 0.5);
    CHECK(j["w"] == 1.0);
    CHECK(j["bound"] == -1.0);
    CHECK(j["violation"] == false);
    CHECK(j["margin"].get<double>() > 0.0);
    REQUIRE(j["lambda_tail"].size() == 4);
    CHECK(j["lambda_tail"][0]["n"] == 1);
    CHECK(j["lambda_tail"][0]["lambda"].get<double>() < 0.0);
}

TEST_CASE("certificate_to_json shape for single and composite certificates") {
    const ZeroFreeCertificate cert = certify_riemann_zero_free();
    const json j = json::parse(certificate_to_json("riemann", cert));
    CHECK(j["schema_version"] == "1");
    CHECK(j["kind"] == "certificate");
    CHECK(j["target"] == "riemann");
    CHECK(j["issued"] == true);
    CHECK(j["conclusion"] == "no zeros");
    REQUIRE(j["parts"].size() == 1);
    CHECK(j["parts"][0]["kind"] == "theorem_exact");
    CHECK(j["parts"][0]["interval"]["lo_open"] == true);
    CHECK(j["parts"][0]["interval"]["hi_open"] == true);
    CHECK(j["parts"][0]["bound_samples"].size() == 3);

    const CompositeCertificate chi2 = certify_chi2_zero_free();
    const json c = json::parse(certificate_to_json("L(q=2,chi=0)", chi2));
    CHECK(c["issued"] == true);
    CHECK(c["corroboration_ok"] == true);
    REQUIRE(c["parts"].size() == 3);
    CHECK(c["parts"][2]["kind"] == "numeric_scan");
    CHECK(c["parts"][2]["scan"]["points"] == 99);
    CHECK(c["parts"][2]["scan"]["records"].size() == 99);
}

TEST_CASE("refusal_to_json shape") {
    const json j =
        json::parse(refusal_to_json("hurwitz(w=0.5)", Refusal{"out of range"}));
    CHECK(j["schema_version"] == "1");
    CHECK(j["kind"] == "certificate");
    CHECK(j["target"] == "hurwitz(w=0.5)");
    CHECK(j["issued"] == false);
    CHECK(j["refusal"]["reason"] == "out of range");
}

TEST_CASE("character serializers cover the full table") {
    const auto chars = characters_mod(5);
    const json j = json::parse(characters_to_json(chars));
    CHECK(j["schema_version"] == "1");
    CHECK(j["kind"] == "characters");
    CHECK(j["q"] == 5);
    CHECK(j["phi"] == 4);
    CHECK(j["unity_order"] == 4);
    REQUIRE(j["characters"].size() == 4);
    CHECK(j["characters"][0]["principal"] == true);
    CHECK(j["characters"][0]["conductor"] == 1);
    for (const auto& chi : j["characters"]) {
        CHECK(chi["log_table"].size() == 5);
        CHECK(chi["values"].size() == 5);
    }

    const std::string text = characters_to_text(chars);
    CHECK(text.find("q = 5") != std::string::npos);
    CHECK(text.find("phi = 4") != std::string::npos);
    CHECK(text.find("e(1/4)") != std::string::npos);

    CHECK(characters_to_text({}).empty());
}
