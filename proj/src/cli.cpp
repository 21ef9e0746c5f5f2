#include "burniat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "burniat/errors.hpp"
#include "burniat/hypothesis_checker.hpp"
#include "burniat/scenario_registry.hpp"
#include "burniat/tables.hpp"
#include "burniat/theta_numeric.hpp"

namespace burniat {

namespace {

using json = nlohmann::ordered_json;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + path);
    f << text;
}

bool families_consistent() {
    for (const auto& name : builtin_names()) {
        if (!consistency_suite(builtin(name)).passed()) return false;
    }
    return true;
}

int cmd_verify(const std::string& family, const std::string& format, const std::string& path, std::ostream& out, std::ostream& err) {
    const Format f = parse_format(format);
    std::vector<CheckReport> reports;
    if (family.empty()) {
        for (const auto& name : builtin_names()) reports.push_back(full_report(builtin(name)));
    } else {
        reports.push_back(full_report(builtin(family)));
    }
    bool ok = true;
    for (const auto& r : reports) {
        if (!r.audit.passed()) {
            ok = false;
            for (const auto& c : r.audit.checks) {
                if (!c.passed) err << r.family << ": audit " << c.id << " failed: " << c.detail << "\n";
            }
        }
    }
    if (f == Format::json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        emit(arr.dump(2) + "\n", path, out);
    } else {
        emit(render(checker_table(reports), f), path, out);
    }
    return ok ? kExitOk : kExitFailure;
}

int cmd_tables(const std::string& which, const std::string& format, bool diff, const std::string& path, std::ostream& out,
               std::ostream& err) {
    const Format f = parse_format(format);
    const RenderedTable t = table_by_name(which);
    if (!families_consistent()) {
        err << "internal consistency checks failed; run verify for details\n";
        return kExitFailure;
    }
    if (!diff) {
        emit(render(t, f), path, out);
        return kExitOk;
    }
    const DiffReport d = diff_by_name(which);
    std::string text;
    if (f == Format::json) {
        json j;
        j["schema"] = "1";
        j["table"] = json::parse(render(t, f));
        j["diff"] = json::parse(render(d, f));
        text = j.dump(2) + "\n";
    } else {
        text = render(t, f) + "\n" + render(d, f);
    }
    emit(text, path, out);
    if (d.unwitnessed() > 0) err << d.unwitnessed() << " mismatching cells have no discriminating witness\n";
    return d.mismatches() > 0 ? kExitErrata : kExitOk;
}

int cmd_numeric(const std::array<std::string, 3>& taus, int samples, double tol, std::uint64_t seed, const std::string& format,
                const std::string& path, std::ostream& out) {
    const Format f = parse_format(format);
    NumericConfig config;
    for (std::size_t k = 0; k < 3; ++k) config.taus[k] = parse_complex(taus[k]);
    config.samples = samples;
    config.tol = tol;
    config.seed = seed;
    const NumericReport rep = run_numeric(config);
    std::ostringstream os;
    if (f == Format::json) {
        json j;
        j["schema"] = "1";
        j["taus"] = json::array({format_complex(config.taus[0]), format_complex(config.taus[1]), format_complex(config.taus[2])});
        j["samples"] = samples;
        j["tol"] = tol;
        j["seed"] = seed;
        json checks = json::array();
        for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        j["checks"] = checks;
        j["passed"] = rep.passed();
        os << j.dump(2) << "\n";
    } else if (f == Format::csv) {
        os << "check,passed,detail\n";
        for (const auto& c : rep.checks) os << c.name << "," << (c.passed ? "true" : "false") << ",\"" << c.detail << "\"\n";
    } else {
        os << "## Numeric cross-validation\n\n";
        os << "tau = (" << format_complex(config.taus[0]) << ", " << format_complex(config.taus[1]) << ", "
           << format_complex(config.taus[2]) << "), samples " << samples << ", tol " << tol << ", seed " << seed << "\n\n";
        os << "| check | result | detail |\n|---|---|---|\n";
        for (const auto& c : rep.checks) os << "| " << c.name << " | " << (c.passed ? "pass" : "FAIL") << " | " << c.detail << " |\n";
    }
    emit(os.str(), path, out);
    return rep.passed() ? kExitOk : kExitFailure;
}

int cmd_check(const std::string& file, const std::string& format, const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    const Scenario s = parse_scenario(buf.str());
    const CheckReport r = full_report(s);
    const Format f = parse_format(format);
    if (f == Format::json) {
        emit(to_json(r).dump(2) + "\n", path, out);
    } else {
        emit(render(checker_table({r}), f), path, out);
    }
    if (!r.audit.passed()) {
        for (const auto& c : r.audit.checks) {
            if (!c.passed) err << s.name << ": audit " << c.id << " failed: " << c.detail << "\n";
        }
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hodge data, character tables and hypothesis checks for generalized Burniat surfaces", "burniat"};
    app.require_subcommand(1);

    std::string format = "md", path;

    auto* verify = app.add_subcommand("verify", "run the hypothesis checker on built-in scenarios");
    std::string family;
    bool all = false;
    auto* fam_opt = verify->add_option("--family", family, "one of S1..S16 or sicilian");
    verify->add_flag("--all", all, "every built-in scenario (default)")->excludes(fam_opt);
    verify->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    verify->add_option("--out", path, "write to this file instead of standard output");

    auto* tables = app.add_subcommand("tables", "regenerate a table");
    std::string which;
    bool diff = false;
    tables->add_option("--which", which, "1, 2, 3, theta, theta-worked or hodge-x")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "theta", "theta-worked", "hodge-x"}));
    tables->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    tables->add_flag("--diff-paper", diff, "diff against the printed values");
    tables->add_option("--out", path, "write to this file instead of standard output");

    auto* numeric = app.add_subcommand("numeric", "numerical cross-validation of the theta sign model");
    std::array<std::string, 3> taus{"i", "i", "i"};
    int samples = 100;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    numeric->add_option("--tau1", taus[0], "modulus of E1 as a+bi");
    numeric->add_option("--tau2", taus[1], "modulus of E2 as a+bi");
    numeric->add_option("--tau3", taus[2], "modulus of E3 as a+bi");
    numeric->add_option("--samples", samples, "sample points per fit")->check(CLI::Range(4, 100000));
    numeric->add_option("--tol", tol, "decision tolerance")->check(CLI::PositiveNumber);
    numeric->add_option("--seed", seed, "seed for sample points");
    numeric->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    numeric->add_option("--out", path, "write to this file instead of standard output");

    auto* check = app.add_subcommand("check", "validate and check a custom scenario file");
    std::string file;
    check->add_option("FILE", file, "scenario JSON")->required();
    check->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    check->add_option("--out", path, "write to this file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitFailure;
    }

    try {
        if (verify->parsed()) return cmd_verify(family, format, path, out, err);
        if (tables->parsed()) return cmd_tables(which, format, diff, path, out, err);
        if (numeric->parsed()) return cmd_numeric(taus, samples, tol, seed, format, path, out);
        if (check->parsed()) return cmd_check(file, format, path, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace burniat
