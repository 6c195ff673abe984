#include "ptau/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptau/analytic.hpp"
#include "ptau/continuation.hpp"
#include "ptau/errors.hpp"
#include "ptau/roots.hpp"
#include "ptau/series.hpp"
#include "ptau/symbolic.hpp"
#include "ptau/verify.hpp"

namespace ptau::cli {

using ptau::to_string;

namespace {

using nlohmann::json;

constexpr std::array<std::pair<Command, const char*>, 7> kCommands{{
    {Command::coeffs, "coeffs"},
    {Command::symbolic, "symbolic"},
    {Command::zeros, "zeros"},
    {Command::shift, "shift"},
    {Command::pole_field, "pole-field"},
    {Command::verify, "verify"},
    {Command::degenerate, "degenerate"},
}};

const std::vector<std::size_t> kDefaultScanOrders{100, 150, 201};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

OutputFormat format_for(const RunConfig& c) {
    if (c.format) return *c.format;
    return (c.command == Command::zeros || c.command == Command::pole_field) ? OutputFormat::csv : OutputFormat::json;
}

Complex parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_real(text), Real(0)};
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_coeffs(const RunConfig& c, std::ostream& out) {
    const CoefficientSeries s = tau_coefficients(c.params, c.order.value_or(20));
    if (format_for(c) == OutputFormat::json) {
        json j = to_json(s);
        j["level"] = to_string(level(c.params));
        emit_json(out, j);
    } else {
        out << "n,power,coeff\n";
        for (std::size_t n = 0; n < s.coeffs.size(); ++n) out << n << ',' << n + 1 << ',' << to_string(s.coeffs[n]) << '\n';
    }
    return kExitOk;
}

int cmd_symbolic(const RunConfig& c, std::ostream& out) {
    const std::size_t N = c.order.value_or(10);
    const auto polys = symbolic_tau(N);
    const auto A = extract_A(polys);
    const auto bad = integrality_report(A);
    if (format_for(c) == OutputFormat::json) {
        json list = json::array();
        for (std::size_t n = 0; n < polys.size(); ++n) {
            json p = to_json(polys[n]);
            p["n"] = n;
            list.push_back(std::move(p));
        }
        json non_integral = json::array();
        for (const auto& m : bad) non_integral.push_back({{"index", m.index}, {"value", to_string(m.value)}});
        emit_json(out, {{"order", N},
                        {"variables", {"kappa", "eta", "g2", "lambda", "g3"}},
                        {"polynomials", std::move(list)},
                        {"integrality", {{"coefficients", A.size()}, {"non_integral", std::move(non_integral)}}}});
    } else {
        out << "n,kappa,eta,g2,lambda,g3,coeff\n";
        for (std::size_t n = 0; n < polys.size(); ++n) {
            for (const auto& [e, coeff] : polys[n].terms()) {
                out << n;
                for (unsigned x : e) out << ',' << x;
                out << ',' << to_string(coeff) << '\n';
            }
        }
    }
    return kExitOk;
}

ZeroSearchOptions scan_options(const RunConfig& c) {
    ZeroSearchOptions o;
    o.orders = c.orders.empty() ? kDefaultScanOrders : c.orders;
    o.root_finder.precision_bits = c.precision_bits;
    return o;
}

int cmd_zeros(const RunConfig& c, std::ostream& out) {
    const ZeroSearchResult r = trusted_zeros(c.params, scan_options(c));
    const unsigned digits = output_digits(c.precision_bits);
    if (format_for(c) == OutputFormat::csv) {
        write_zeros_csv(out, r.zeros, digits);
        return kExitOk;
    }
    json zeros = json::array();
    for (const ZeroEstimate& z : r.zeros) {
        zeros.push_back({{"location", to_json(z.location, digits)},
                         {"residual", to_decimal(z.residual, 6)},
                         {"stability", boost::multiprecision::isinf(z.stability) ? "inf" : to_decimal(z.stability, 6)},
                         {"trusted", z.trusted},
                         {"source_order", z.source_order}});
    }
    emit_json(out, {{"params", to_json(c.params)},
                    {"trust_radius", r.trust_radius ? json(to_decimal(*r.trust_radius, 10)) : json(nullptr)},
                    {"zeros", std::move(zeros)}});
    return kExitOk;
}

int cmd_shift(const RunConfig& c, std::ostream& out) {
    PrecisionScope scope(c.precision_bits);
    const unsigned digits = output_digits(c.precision_bits);
    Complex omega;
    std::optional<Real> trust;
    std::size_t N = 0;
    if (c.at) {
        omega = parse_point(*c.at);
        N = c.order.value_or(300);
    } else {
        const ZeroSearchOptions o = scan_options(c);
        const ZeroSearchResult r = trusted_zeros(c.params, o);
        auto it = std::find_if(r.zeros.begin(), r.zeros.end(), [](const ZeroEstimate& z) { return z.trusted; });
        if (it == r.zeros.end()) throw NotAZero("no trusted zero found to shift about");
        omega = it->location;
        trust = r.trust_radius;
        N = c.order.value_or(*std::max_element(o.orders.begin(), o.orders.end()) - 1);
    }
    const EvaluationContext ctx(tau_coefficients(c.params, N), c.precision_bits);
    ShiftOptions so;
    so.trust_radius = trust;
    const ShiftData s = shift_parameters(ctx, omega, so);
    const Real mu = mu_consistency(ctx, omega, so);
    std::vector<Complex> samples;
    for (int k = 0; k < 20; ++k) samples.push_back(polar(Real(0.3) * Real(k + 1) / 20, Real(k) * Real(2.399963)));
    const ShiftVerification v = verify_shift(ctx, s, samples);

    if (format_for(c) == OutputFormat::json) {
        json j = to_json(s, digits);
        j["order"] = N;
        j["mu_consistency"] = to_decimal(mu, 6);
        j["verify"] = {{"samples", samples.size()},
                       {"max_residual", to_decimal(v.max_residual, 6)},
                       {"bound", to_decimal(v.bound, 6)},
                       {"within_bound", v.within_bound()}};
        emit_json(out, j);
    } else {
        const ParameterSet<Complex>& p = s.new_params;
        const std::vector<std::pair<std::string, const Complex*>> rows{
            {"omega", &s.omega},  {"A", &s.a_gauge},      {"B", &s.b_gauge},        {"mu_tilde", &s.mu_tilde},
            {"eta", &p.eta},      {"kappa", &p.kappa},    {"lambda", &p.lambda},    {"g2", &p.g2},
            {"g3", &p.g3},
        };
        out << "field,re,im\n";
        for (const auto& [name, z] : rows) out << name << ',' << to_decimal(z->re, digits) << ',' << to_decimal(z->im, digits) << '\n';
        out << "mu_consistency," << to_decimal(mu, 6) << ",0\n";
        out << "verify_residual," << to_decimal(v.max_residual, 6) << ",0\n";
        out << "verify_bound," << to_decimal(v.bound, 6) << ",0\n";
    }
    return v.within_bound() ? kExitOk : kExitFailure;
}

int cmd_pole_field(const RunConfig& c, std::ostream& out, std::ostream& err) {
    PoleFieldOptions o;
    if (!c.orders.empty()) o.origin_orders = c.orders;
    o.precision_bits = c.precision_bits;
    const PoleField f = pole_field(c.params, c.depth, o);
    for (const std::string& e : f.errors) err << "pole-field: " << e << '\n';
    const unsigned digits = output_digits(c.precision_bits);
    if (format_for(c) == OutputFormat::csv) {
        write_pole_field_csv(out, f, digits);
        return kExitOk;
    }
    json points = json::array();
    for (const PolePoint& p : f.points) {
        points.push_back({{"location", to_json(p.location, digits)},
                          {"depth", p.depth},
                          {"parent_chain", p.parent_chain},
                          {"trusted", p.trusted}});
    }
    emit_json(out, {{"params", to_json(c.params)}, {"depth", c.depth}, {"points", std::move(points)}, {"errors", f.errors}});
    return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    std::vector<std::string> names;
    if (c.suite == "all") {
        names = suite_names();
    } else {
        const auto& known = suite_names();
        if (std::find(known.begin(), known.end(), c.suite) == known.end())
            throw UsageError("unknown suite '" + c.suite + "'");
        names.push_back(c.suite);
    }
    SuiteOptions o;
    o.params = c.params;
    o.order = c.order;
    o.modulus = c.modulus;
    o.start = c.start;
    o.precision_bits = c.precision_bits;
    bool passed = true;
    std::vector<SuiteReport> reports;
    for (const std::string& n : names) {
        reports.push_back(run_suite(n, o));
        passed = passed && reports.back().passed();
    }
    if (format_for(c) == OutputFormat::json) {
        json list = json::array();
        for (const SuiteReport& r : reports) list.push_back(to_json(r));
        emit_json(out, {{"passed", passed}, {"suites", std::move(list)}});
    } else {
        out << "suite,check,passed,detail\n";
        for (const SuiteReport& r : reports) {
            for (const CheckResult& k : r.checks) {
                out << r.suite << ',' << csv_escape(k.name) << ',' << (k.passed ? "true" : "false") << ','
                    << csv_escape(k.detail) << '\n';
            }
        }
    }
    return passed ? kExitOk : kExitFailure;
}

int cmd_degenerate(const RunConfig& c, std::ostream& out) {
    if (!c.at) throw UsageError("degenerate requires --at");
    PrecisionScope scope(c.precision_bits);
    const unsigned digits = output_digits(c.precision_bits);
    const Complex z = parse_point(*c.at);
    const EvaluationContext ctx(tau_coefficients(c.params, c.order.value_or(60)), c.precision_bits);
    const DegenerateFunctions f = degenerate_functions(ctx, z, +1);
    const auto residuals = ode_residuals(ctx, z, +1);
    const auto tail = truncation_estimate(ctx, z);

    std::vector<std::pair<std::string, Complex>> fields{
        {"Sigma", f.sigma_big},        {"Sigma_d1", f.sigma_big_d1}, {"Sigma_d2", f.sigma_big_d2},
        {"Sigma_d3", f.sigma_big_d3},
    };
    const std::vector<std::pair<std::string, const std::optional<Complex>*>> optional_fields{
        {"mu", &f.mu}, {"ell", &f.ell}, {"v", &f.v},   {"v_d1", &f.v_d1}, {"v_d2", &f.v_d2},
        {"u", &f.u},   {"u_d1", &f.u_d1}, {"u_d2", &f.u_d2}, {"w", &f.w}, {"w_d2", &f.w_d2},
    };
    for (const auto& [name, value] : optional_fields) {
        if (*value) fields.emplace_back(name, **value);
    }
    if (format_for(c) == OutputFormat::json) {
        json values = json::object();
        for (const auto& [name, value] : fields) values[name] = to_json(value, digits);
        json res = json::object();
        for (const auto& [name, value] : residuals) res[name] = to_json(value, 6);
        emit_json(out, {{"point", to_json(z, digits)},
                        {"level", to_string(level(c.params))},
                        {"values", std::move(values)},
                        {"residuals", std::move(res)},
                        {"truncation_estimate", tail ? json(to_decimal(*tail, 6)) : json(nullptr)}});
    } else {
        out << "field,re,im\n";
        for (const auto& [name, value] : fields) out << name << ',' << to_decimal(value.re, digits) << ',' << to_decimal(value.im, digits) << '\n';
        for (const auto& [name, value] : residuals) out << "residual_" << name << ',' << to_decimal(value.re, 6) << ',' << to_decimal(value.im, 6) << '\n';
    }
    return kExitOk;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    switch (c.command) {
        case Command::coeffs: return cmd_coeffs(c, out);
        case Command::symbolic: return cmd_symbolic(c, out);
        case Command::zeros: return cmd_zeros(c, out);
        case Command::shift: return cmd_shift(c, out);
        case Command::pole_field: return cmd_pole_field(c, out, err);
        case Command::verify: return cmd_verify(c, out);
        case Command::degenerate: return cmd_degenerate(c, out);
    }
    return kExitUsage;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
    for (const auto& [cmd, n] : kCommands) {
        if (name == n) return cmd;
    }
    return std::nullopt;
}

const char* to_string(Command command) {
    for (const auto& [cmd, n] : kCommands) {
        if (cmd == command) return n;
    }
    return "?";
}

Params parse_params(const std::optional<std::string>& eta, const std::optional<std::string>& kappa,
                    const std::optional<std::string>& lambda, const std::optional<std::string>& g2,
                    const std::optional<std::string>& g3, const std::optional<std::string>& preset) {
    Params p;
    if (preset) {
        if (*preset == "p34-symmetric") {
            p = presets::p34_symmetric();
        } else if (*preset == "rational-example") {
            p = presets::rational_example();
        } else if (*preset == "weierstrass") {
            if (!g2 || !g3) throw ParseError("preset 'weierstrass' requires --g2 and --g3");
            p = presets::weierstrass(0, 0);
        } else {
            throw ParseError("unknown preset '" + *preset + "'");
        }
    }
    if (eta) p.eta = parse_rational(*eta);
    if (kappa) p.kappa = parse_rational(*kappa);
    if (lambda) p.lambda = parse_rational(*lambda);
    if (g2) p.g2 = parse_rational(*g2);
    if (g3) p.g3 = parse_rational(*g3);
    return p;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.precision_bits < 64) throw UsageError("--precision must be at least 64");
        if (config.output_path) {
            std::ofstream file(*config.output_path);
            if (!file) {
                err << "error: cannot open " << *config.output_path << " for writing\n";
                return kExitFailure;
            }
            return dispatch(config, file, err);
        }
        return dispatch(config, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Taylor series, zeros and continuation of the Painleve IV tau-function.", "ptau"};
    app.set_config("--config", "", "Flat key=value file with the same keys as the flags; flags override it");
    app.fallthrough();
    app.require_subcommand(1, 1);

    std::optional<std::string> eta, kappa, lambda, g2, g3, preset, format, output, modulus, at;
    std::optional<std::size_t> order, start;
    std::vector<std::size_t> orders;
    unsigned precision = 256;
    unsigned depth = 1;
    std::string suite = "all";

    app.add_option("--eta", eta, "eta (p/q or decimal)");
    app.add_option("--kappa", kappa, "kappa");
    app.add_option("--lambda", lambda, "lambda");
    app.add_option("--g2", g2, "g2");
    app.add_option("--g3", g3, "g3");
    app.add_option("--preset", preset, "p34-symmetric, rational-example or weierstrass");
    app.add_option("--order", order, "Series order N (coefficients C_0..C_N)");
    app.add_option("--orders", orders, "Truncation degrees for zero scans, comma separated")->delimiter(',');
    app.add_option("--precision", precision, "Working precision in bits")->capture_default_str();
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", output, "Output file (standard output if omitted)");
    app.add_option("--suite", suite, "Verification suite or 'all'")->capture_default_str();
    app.add_option("--depth", depth, "Continuation depth for pole-field")->capture_default_str();
    app.add_option("--modulus", modulus, "Modulus for the divisibility suite");
    app.add_option("--start", start, "First index for the divisibility suite");
    app.add_option("--at", at, "Point \"re\" or \"re,im\" for degenerate and shift");

    app.add_subcommand("coeffs", "Exact Taylor coefficients C_0..C_N");
    app.add_subcommand("symbolic", "Weighted-homogeneous polynomials P_0..P_N and integrality report");
    app.add_subcommand("zeros", "Zeros of the truncated series with stability flags");
    app.add_subcommand("shift", "Re-expansion data about a zero and its self-checks");
    app.add_subcommand("pole-field", "Zeros tiled by repeated re-expansion");
    app.add_subcommand("verify", "Run verification suites");
    app.add_subcommand("degenerate", "Sigma, v, u or w and ODE residuals at a point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RunConfig config;
    try {
        config.command = *parse_command(app.get_subcommands().front()->get_name());
        config.params = parse_params(eta, kappa, lambda, g2, g3, preset);
        if (modulus) {
            Integer m;
            if (m.set_str(*modulus, 10) != 0 || m <= 0) throw ParseError("--modulus must be a positive integer");
            config.modulus = m;
        }
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    config.order = order;
    config.orders = orders;
    config.precision_bits = precision;
    if (format) config.format = *format == "csv" ? OutputFormat::csv : OutputFormat::json;
    config.output_path = output;
    config.suite = suite;
    config.depth = depth;
    config.start = start;
    config.at = at;
    return run(config, out, err);
}

}  // namespace ptau::cli
