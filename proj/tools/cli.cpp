#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quasikoorn/epoly.hpp"
#include "quasikoorn/errors.hpp"
#include "quasikoorn/json_io.hpp"
#include "quasikoorn/operators.hpp"
#include "quasikoorn/verify.hpp"
#include "quasikoorn/weyl.hpp"

namespace quasikoorn::cli {

namespace {

/// Raised for invalid input that parses but makes no sense.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string point_text(const Point &y)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < y.size(); ++i) {
        os << (i ? ", " : "") << y[i];
    }
    os << ')';
    return os.str();
}

std::string list_text(const std::vector<int> &v)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << v[i];
    }
    os << '}';
    return os.str();
}

Point read_point(const std::string &text, int rank)
{
    Point y;
    try {
        y = parse_point(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError("bad point '" + text + "': " + e.what());
    }
    if (y.size() != static_cast<std::size_t>(rank)) {
        throw UsageError("point '" + text + "' has " + std::to_string(y.size()) + " coordinates, rank is " +
                         std::to_string(rank));
    }
    return y;
}

std::vector<std::string> torus_constraints(const Orbit &orbit)
{
    const int r = orbit.rank();
    std::vector<std::string> out;
    for (const int j : orbit.facet) {
        if (j == 0) {
            out.push_back("t_1 = q^(1/2)");
        } else if (j < r) {
            out.push_back("t_" + std::to_string(j) + " = t_" + std::to_string(j + 1));
        } else {
            out.push_back("t_" + std::to_string(r) + " = 1");
        }
    }
    return out;
}

std::string torus_summary(const Config &config, const Orbit &orbit)
{
    if (orbit.facet.empty()) {
        return "T_O = T (no constraints)";
    }
    if (const auto t = default_torus_point(config.params, orbit)) {
        const bool unit = std::all_of(t->coords.begin(), t->coords.end(), [](const Rational &x) { return x.is_one(); });
        return unit ? "t = 1" : "t = " + point_text(t->coords);
    }
    std::string joined;
    for (const auto &c : torus_constraints(orbit)) {
        joined += (joined.empty() ? "" : ", ") + c;
    }
    return joined;
}

RepContext context_for(const Config &config, const Orbit &orbit)
{
    if (config.t) {
        return make_context(config.params, orbit, *config.t);
    }
    if (const auto t = default_torus_point(config.params, orbit)) {
        return make_context(config.params, orbit, *t);
    }
    throw UsageError("the orbit of the point does not determine t; set 't' in the config (" +
                     torus_summary(config, orbit) + ")");
}

void write_json(std::ostream &out, const Json &doc) { out << doc.dump(2) << '\n'; }

void write_poly_text(std::ostream &out, const QuasiPolynomial &p)
{
    const Json terms = quasipoly_to_json(p);
    for (const auto &term : terms) {
        Point y = point_from_json(term.at("exponent"));
        out << "  " << term.at("coeff").get<std::string>() << " * x^" << point_text(y) << '\n';
    }
}

int cmd_verify(const Config &config, int trials, std::uint64_t seed, const std::string &format, std::ostream &out)
{
    SuiteOptions options;
    options.trials = trials;
    options.seed = seed;
    const auto reports = run_verify_suite(config.params, options);
    bool all = true;
    Json arr = Json::array();
    for (const auto &rep : reports) {
        all = all && rep.passed();
        const std::string status = rep.skipped ? "skipped" : (rep.passed() ? "pass" : "FAIL");
        if (format == "json") {
            Json item{{"relation", rep.name}, {"status", status}, {"checks", rep.checks}, {"failures", rep.failures}};
            if (!rep.passed()) {
                item["first_failure"] = rep.first_failure;
            }
            arr.push_back(item);
        } else {
            out << rep.name << ": " << status;
            if (!rep.skipped) {
                out << " (" << rep.checks - rep.failures << "/" << rep.checks << ")";
            }
            if (!rep.passed()) {
                out << "  first failure: " << rep.first_failure;
            }
            out << '\n';
        }
    }
    if (format == "json") {
        write_json(out, Json{{"rank", config.params.rank}, {"trials", trials}, {"seed", seed}, {"passed", all},
                             {"relations", arr}});
    } else {
        out << (all ? "all relations hold" : "relation failures detected") << '\n';
    }
    return all ? kSuccess : kMathFailure;
}

int cmd_orbit(const Config &config, const std::string &point_arg, const std::string &format, std::ostream &out)
{
    const Point y = read_point(point_arg, config.params.rank);
    const Orbit orbit = orbit_of(y);
    const AlcoveRep rep = min_alcove_rep(y);
    const std::size_t lower = lower_set(y).size();
    std::vector<int> finite = orbit.finite_facet();
    if (format == "json") {
        write_json(out, Json{{"point", point_to_json(y)},
                             {"basepoint", point_to_json(orbit.basepoint)},
                             {"facet", orbit.facet},
                             {"finite_facet", finite},
                             {"reduced_word", rep.word},
                             {"length", rep.word.size()},
                             {"lower_set_size", lower},
                             {"torus_constraints", torus_constraints(orbit)},
                             {"torus", torus_summary(config, orbit)}});
    } else {
        out << "point:          " << point_text(y) << '\n'
            << "basepoint:      " << point_text(orbit.basepoint) << '\n'
            << "facet J:        " << list_text(orbit.facet) << '\n'
            << "finite facet I: " << list_text(finite) << '\n'
            << "g_y word:       [";
        for (std::size_t i = 0; i < rep.word.size(); ++i) {
            out << (i ? ", " : "") << rep.word[i];
        }
        out << "]\n"
            << "length:         " << rep.word.size() << '\n'
            << "lower set size: " << lower << '\n'
            << "torus:          " << torus_summary(config, orbit) << '\n';
    }
    return kSuccess;
}

int cmd_epoly(const Config &config, const std::string &point_arg, const std::string &out_path,
              const std::string &format, std::ostream &out)
{
    const Point y = read_point(point_arg, config.params.rank);
    const RepContext ctx = context_for(config, orbit_of(y));
    const EPolynomial e = compute_E(ctx, y);
    std::ostringstream body;
    if (format == "json") {
        write_json(body, epoly_to_json(e));
    } else {
        body << "E_" << point_text(e.degree) << " (orbit " << point_text(e.orbit.basepoint) << ")\n";
        body << "eigenvalues: " << point_text(e.eigenvalues) << '\n';
        write_poly_text(body, e.poly);
    }
    if (out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream file(out_path);
        if (!file) {
            throw UsageError("cannot write '" + out_path + "'");
        }
        file << body.str();
    }
    return kSuccess;
}

int cmd_koornwinder(const Config &config, const std::string &degree_arg, bool oracle, const std::string &format,
                    std::ostream &out)
{
    const Point y = read_point(degree_arg, config.params.rank);
    for (const auto &x : y) {
        if (!x.is_integer()) {
            throw UsageError("koornwinder degrees must be integral, got " + x.str());
        }
    }
    if (oracle && config.params.rank != 1) {
        throw UsageError("--oracle is only available for rank 1");
    }
    const RepContext ctx = integral_context(config.params);
    const EPolynomial e = compute_E(ctx, y);
    Json doc = epoly_to_json(e);
    bool match = true;
    if (oracle) {
        const std::int64_t mu = rational_floor(y[0]);
        const QuasiPolynomial reference = koornwinder_oracle(config.params, mu, (mu < 0 ? -mu : mu) + 1);
        match = reference == e.poly;
        doc["match"] = match;
    }
    if (format == "json") {
        write_json(out, doc);
    } else {
        out << "E_" << point_text(e.degree) << " (t = 1)\n";
        out << "eigenvalues: " << point_text(e.eigenvalues) << '\n';
        write_poly_text(out, e.poly);
        if (oracle) {
            out << "match: " << (match ? "true" : "false") << '\n';
        }
    }
    return match ? kSuccess : kMathFailure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Quasi-polynomial representations of the C^vC_r double affine Hecke algebra", "quasikoorn"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format;
    std::string point;
    std::string degree;
    std::string out_path;
    int trials = 50;
    std::uint64_t seed = 0;
    bool oracle = false;

    auto add_common = [&](CLI::App *sub, const std::string &default_format) {
        sub->add_option("--config", config_path, "JSON parameter file")->required();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->default_str(default_format);
    };

    CLI::App *verify = app.add_subcommand("verify", "Check the operator relations on random quasi-monomials");
    add_common(verify, "text");
    verify->add_option("--trials", trials, "Random inputs per relation")->check(CLI::PositiveNumber);
    CLI::Option *seed_opt = verify->add_option("--seed", seed, "Random seed (defaults to the config seed)");

    CLI::App *orbit = app.add_subcommand("orbit", "Describe the orbit of a point");
    add_common(orbit, "text");
    orbit->add_option("--point", point, "Comma-separated rationals")->required();

    CLI::App *epoly = app.add_subcommand("epoly", "Compute E_y for a quasi-exponent y");
    add_common(epoly, "json");
    epoly->add_option("--point", point, "Comma-separated rationals")->required();
    epoly->add_option("--out", out_path, "Write the result to a file");

    CLI::App *koorn = app.add_subcommand("koornwinder", "Nonsymmetric Koornwinder polynomial E_mu (t = 1)");
    add_common(koorn, "json");
    koorn->add_option("--degree", degree, "Comma-separated integers")->required();
    koorn->add_flag("--oracle", oracle, "Compare with the polynomial-representation oracle (rank 1)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        const Config config = load_config(config_path);
        CLI::App *sub = app.get_subcommands().front();
        if (format.empty()) {
            format = sub == verify || sub == orbit ? "text" : "json";
        }
        if (sub == verify) {
            return cmd_verify(config, trials, seed_opt->count() ? seed : config.seed, format, out);
        }
        if (sub == orbit) {
            return cmd_orbit(config, point, format, out);
        }
        if (sub == epoly) {
            return cmd_epoly(config, point, out_path, format, out);
        }
        return cmd_koornwinder(config, degree, oracle, format, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidParameters &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidTorusPoint &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DimensionMismatch &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kMathFailure;
    }
}

} // namespace quasikoorn::cli
