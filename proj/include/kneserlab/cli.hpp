#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "serialize.hpp"

namespace kneserlab::cli {

enum ExitCode : int {
    ok = 0,
    internal_error = 1,
    usage = 2,
    ucep_fails = 3,
    fixture_integrity = 4,
    cross_validation_mismatch = 5,
};

struct SpecOptions {
    std::string family;
    int rank = 0;
    std::vector<int> types;
    int p = 2;
    std::string selector = "plus";
    bool allow_non_self_opposite = false;
    CLI::Option* family_opt = nullptr;
    CLI::Option* p_opt = nullptr;

    void attach(CLI::App* app)
    {
        family_opt = app->add_option("--family", family, "Diagram family: A, B, C, D or G")->check(CLI::IsMember({"A", "B", "C", "D", "G"}));
        app->add_option("--rank", rank, "Rank n of the diagram");
        app->add_option("--type", types, "Type set J, comma separated (e.g. 1,2)")->delimiter(',');
        p_opt = app->add_option("--p", p, "Prime field order: 2, 3, 5 or 7");
        app->add_option("--selector", selector, "D_n class for maximal spaces: plus or minus")->check(CLI::IsMember({"plus", "minus"}));
        app->add_flag("--allow-non-self-opposite", allow_non_self_opposite, "Accept A flag types with J^w0 != J");
    }

    bool given() const { return family_opt && family_opt->count() > 0; }

    BuildingSpec spec() const
    {
        if (!given()) throw UsageError("--family is required");
        if (rank < 1) throw UsageError("--rank is required and must be positive");
        if (types.empty()) throw UsageError("--type is required");
        BuildingSpec s{parse_family(family), rank, types, p, selector == "plus" ? DSelector::plus : DSelector::minus};
        std::sort(s.types.begin(), s.types.end());
        s.allow_non_self_opposite = allow_non_self_opposite;
        s.validate();
        return s;
    }
};

inline void emit(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    file << content;
}

inline std::string render_graph(const KneserGraph& g, const std::string& format)
{
    std::ostringstream s;
    if (format == "json") {
        s << graph_to_json(g).dump() << "\n";
    } else if (format == "dimacs") {
        write_dimacs(s, g);
    } else {
        write_text(s, g);
    }
    return s.str();
}

/// Runs the command line; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kneser graphs of spherical buildings over small prime fields"};
    app.name("kneserlab");
    app.require_subcommand(1);

    // build
    auto* build_cmd = app.add_subcommand("build", "Build a Kneser graph and its apartment");
    SpecOptions build_spec;
    build_spec.attach(build_cmd);
    std::string build_format = "json";
    std::string build_output;
    build_cmd->add_option("--format", build_format, "json, dimacs or text")->check(CLI::IsMember({"json", "dimacs", "text"}));
    build_cmd->add_option("--output,-o", build_output, "Output file (default stdout)");

    // check-ucep
    auto* ucep_cmd = app.add_subcommand("check-ucep", "Decide the unique coclique extension property");
    SpecOptions ucep_spec;
    ucep_spec.attach(ucep_cmd);
    std::string fixture_case;
    std::string mode = "all";
    int samples = 100;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool no_timing = false;
    std::string ucep_output;
    ucep_cmd->add_option("--case-from-fixture", fixture_case, "Take the spec from a known counterexample: B3_2, C3_3, D4_34, A_flags");
    ucep_cmd->add_option("--mode", mode, "all or sample")->check(CLI::IsMember({"all", "sample"}));
    ucep_cmd->add_option("--samples", samples, "Number of sampled maximal cocliques in sample mode");
    ucep_cmd->add_option("--seed", seed, "Seed for sample mode");
    ucep_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
    ucep_cmd->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for byte-stable output");
    ucep_cmd->add_option("--output,-o", ucep_output, "Report file (default stdout)");

    // verify-fixtures
    auto* fix_cmd = app.add_subcommand("verify-fixtures", "Certify the known counterexamples");
    std::vector<std::string> cases;
    std::string golden;
    std::optional<int> fixture_p;
    std::string fix_output;
    fix_cmd->add_option("--case", cases, "Restrict to these fixtures (repeatable)");
    fix_cmd->add_option("--golden", golden, "Fixture file to verify instead of the built-in one");
    fix_cmd->add_option("--p", fixture_p, "Override the characteristic of the selected fixtures");
    fix_cmd->add_option("--output,-o", fix_output, "Report file (default stdout)");

    // cross-validate
    auto* cv_cmd = app.add_subcommand("cross-validate", "Compare the apartment graph with the coset Kneser graph of W/X");
    SpecOptions cv_spec;
    cv_spec.attach(cv_cmd);
    bool cv_all = false;
    std::string cv_output;
    cv_cmd->add_flag("--all", cv_all, "Run every implemented spec of rank <= 4 over F_p");
    cv_cmd->add_option("--output,-o", cv_output, "Report file (default stdout)");

    // export
    auto* export_cmd = app.add_subcommand("export", "Convert a graph written by build to another format");
    std::string export_input;
    std::string export_format = "dimacs";
    std::string export_output;
    bool export_sigma = false;
    export_cmd->add_option("--input,-i", export_input, "Graph JSON from build")->required();
    export_cmd->add_option("--format", export_format, "json, dimacs or text")->check(CLI::IsMember({"json", "dimacs", "text"}));
    export_cmd->add_flag("--sigma", export_sigma, "Export only the apartment subgraph");
    export_cmd->add_option("--output,-o", export_output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "usage error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (*build_cmd) {
            const KneserGraph g = build(build_spec.spec());
            emit(build_output, render_graph(g, build_format), out);
            return ok;
        }

        if (*ucep_cmd) {
            BuildingSpec spec;
            if (!fixture_case.empty()) {
                if (ucep_spec.given()) throw UsageError("--case-from-fixture replaces --family/--rank/--type");
                Fixture f = fixture_by_name(fixture_case, ucep_spec.p_opt->count() ? std::optional<int>(ucep_spec.p) : std::nullopt);
                check_fixture_characteristic(f);
                spec = f.spec;
            } else {
                spec = ucep_spec.spec();
            }
            UcepOptions options;
            if (mode == "sample") options.sample = samples;
            options.seed = seed;
            options.jobs = jobs;
            options.timing = !no_timing;
            const KneserGraph g = build(spec);
            const UcepReport report = check_ucep(g, options);
            emit(ucep_output, report_to_json(report, &g).dump(2) + "\n", out);
            if (report.verdict == UcepVerdict::fails) {
                err << spec.label() << ": unique coclique extension fails (" << g.vertices[static_cast<std::size_t>(report.witness->x)].to_string()
                    << " ~ " << g.vertices[static_cast<std::size_t>(report.witness->y)].to_string() << ")\n";
                return ucep_fails;
            }
            return ok;
        }

        if (*fix_cmd) {
            std::vector<Fixture> fixtures = golden.empty() ? default_fixtures() : load_fixtures(golden);
            if (!cases.empty()) {
                std::vector<Fixture> selected;
                for (const auto& name : cases) {
                    auto it = std::find_if(fixtures.begin(), fixtures.end(), [&](const Fixture& f) { return f.name == name; });
                    if (it == fixtures.end()) throw UsageError("unknown fixture " + name + " (expected B3_2, C3_3, D4_34 or A_flags)");
                    selected.push_back(*it);
                }
                fixtures = std::move(selected);
            }
            if (fixture_p) {
                for (auto& f : fixtures) f.spec.p = *fixture_p;
            }
            json reports = json::array();
            for (const auto& f : fixtures) {
                try {
                    reports.push_back(fixture_report_to_json(verify_nonexample(f)));
                } catch (const UsageError& e) {
                    if (!golden.empty() && !fixture_p) throw FixtureIntegrityError(f.name, e.what());
                    throw;
                }
            }
            json j{{"schema", 1}, {"certified", reports.size()}, {"fixtures", reports}};
            emit(fix_output, j.dump(2) + "\n", out);
            return ok;
        }

        if (*cv_cmd) {
            std::vector<BuildingSpec> specs;
            if (cv_all) {
                if (cv_spec.given()) throw UsageError("--all replaces --family/--rank/--type");
                specs = cross_validation_grid(cv_spec.p);
            } else {
                specs.push_back(cv_spec.spec());
            }
            json results = json::array();
            int status = ok;
            for (const auto& spec : specs) {
                const auto r = cross_validate(spec);
                results.push_back(cross_validation_to_json(r));
                if (!r.ok()) {
                    err << spec.label() << ": " << r.message << "\n";
                    status = cross_validation_mismatch;
                    break;
                }
            }
            emit(cv_output, json{{"schema", 1}, {"results", results}}.dump(2) + "\n", out);
            return status;
        }

        if (*export_cmd) {
            std::ifstream in(export_input);
            if (!in) throw UsageError("cannot open " + export_input);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception& e) {
                throw UsageError(std::string("malformed graph file: ") + e.what());
            }
            KneserGraph g;
            try {
                g = graph_from_json(j);
            } catch (const json::exception& e) {
                throw UsageError(std::string("malformed graph file: ") + e.what());
            }
            if (export_sigma) {
                KneserGraph s;
                s.spec = g.spec;
                for (int v : g.sigma) s.vertices.push_back(g.vertices[static_cast<std::size_t>(v)]);
                s.graph = g.sigma_graph();
                s.sigma.resize(g.sigma.size());
                std::iota(s.sigma.begin(), s.sigma.end(), 0);
                g = std::move(s);
            }
            emit(export_output, render_graph(g, export_format), out);
            return ok;
        }
    } catch (const FixtureIntegrityError& e) {
        err << "fixture integrity error: " << e.what() << "\n";
        return fixture_integrity;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return internal_error;
    }
    return usage;
}

inline int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace kneserlab::cli
