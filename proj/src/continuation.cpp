#include "ptau/continuation.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <sstream>

#include "ptau/errors.hpp"

namespace ptau {

namespace {

struct ZeroCheck {
    std::vector<Complex> jet;  // tau, tau', tau'', tau'''
};

/// Sum_n |C_n| |z|^(n+1) and sum_n (n+1) |C_n| |z|^n.
std::pair<Real, Real> absolute_scales(const EvaluationContext& ctx, const Complex& z) {
    const Real r = abs(z);
    Real s0(0), s1(0), rp(1);
    const auto& c = ctx.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        Real m = abs(c[n]);
        s1 += Real(n + 1) * m * rp;
        rp *= r;
        s0 += m * rp;
    }
    return {s0, s1};
}

std::string describe(const Complex& z) {
    return to_decimal(z.re, 20) + (z.im < 0 ? " - " : " + ") + to_decimal(boost::multiprecision::abs(z.im), 20) + "i";
}

ZeroCheck check_zero(const EvaluationContext& ctx, const Complex& omega, const ShiftOptions& options) {
    if (options.trust_radius && abs(omega) > *options.trust_radius)
        throw NotAZero("Omega = " + describe(omega) + " lies outside the trust radius");
    ZeroCheck out{eval_jet(ctx, omega, 3).values};
    auto [s0, s1] = absolute_scales(ctx, omega);
    if (abs(out.jet[0]) > Real(options.zero_tol) * s0) {
        throw NotAZero("|tau(Omega)| = " + to_decimal(abs(out.jet[0]), 6) + " at Omega = " + describe(omega));
    }
    const Real dtol = options.derivative_tol ? *options.derivative_tol
                                             : pow2(-static_cast<long>(ctx.precision_bits() / 2));
    if (abs(out.jet[1]) <= dtol * s1) {
        throw DegenerateZero("|tau'(Omega)| = " + to_decimal(abs(out.jet[1]), 6) + " at Omega = " + describe(omega));
    }
    return out;
}

Complex closed_mu(const ParameterSet<Complex>& p, const Complex& omega) {
    Complex mu = omega * (omega * p.eta - p.kappa * Real(2));
    return mu / Complex(Real(12));
}

}  // namespace

ShiftData shift_parameters(const EvaluationContext& ctx, const Complex& omega, const ShiftOptions& options) {
    PrecisionScope scope(ctx.precision_bits());
    const ZeroCheck z = check_zero(ctx, omega, options);
    const ParameterSet<Complex>& p = ctx.params();

    ShiftData s;
    s.omega = omega;
    s.a_gauge = z.jet[1];
    s.b_gauge = z.jet[2] / (z.jet[1] * Real(2));
    s.mu_tilde = closed_mu(p, omega);
    const Complex& B = s.b_gauge;
    const Complex& mu = s.mu_tilde;

    ParameterSet<Complex>& q = s.new_params;
    q.eta = p.eta;
    q.kappa = p.kappa - omega * p.eta;
    q.lambda = p.lambda - B * p.eta - q.kappa * mu;
    q.g2 = p.g2 + mu * mu * Real(12) + omega * p.lambda * Real(2) + B * q.kappa * Real(2);
    q.g3 = p.g3 - q.g2 * mu + mu * mu * mu * Real(4) - B * B * p.eta + B * p.lambda * Real(2);
    return s;
}

Real mu_consistency(const EvaluationContext& ctx, const Complex& omega, const ShiftOptions& options) {
    PrecisionScope scope(ctx.precision_bits());
    const ZeroCheck z = check_zero(ctx, omega, options);
    const Complex& t1 = z.jet[1];
    Complex series = z.jet[3] / (t1 * Real(3)) - (z.jet[2] * z.jet[2]) / (t1 * t1 * Real(4));
    return abs(closed_mu(ctx.params(), omega) - series);
}

ShiftVerification verify_shift(const EvaluationContext& ctx, const ShiftData& shift,
                               const std::vector<Complex>& sample_points) {
    PrecisionScope scope(ctx.precision_bits());
    const EvaluationContext shifted =
        EvaluationContext::from_complex_params(shift.new_params, ctx.order(), ctx.precision_bits());
    const Real a = abs(shift.a_gauge);
    const Real d_omega = abs(eval_jet(ctx, shift.omega, 0).values[0]) / a;
    const Real floor = pow2(-static_cast<long>(ctx.precision_bits() / 2));
    const Real inf = std::numeric_limits<Real>::infinity();

    ShiftVerification out{Real(0), Real(0), 0};
    for (std::size_t i = 0; i < sample_points.size(); ++i) {
        const Complex& z = sample_points[i];
        const Complex w = z + shift.omega;
        const std::vector<Complex> lhs = eval_jet(ctx, w, 1).values;
        const Complex factor =
            shift.a_gauge * exp(shift.b_gauge * z + shift.mu_tilde * z * z * Real(0.5));
        const Complex rhs = factor * eval_jet(shifted, z, 0).values[0];
        const Real residual = abs(lhs[0] - rhs) / a;

        const auto tl = truncation_estimate(ctx, w);
        const auto tr = truncation_estimate(shifted, z);
        Real bound = inf;
        if (tl && tr) {
            const Real grow = (1 + abs(z)) * (1 + abs(z));
            bound = *tl + abs(factor) * *tr + Real(100) * d_omega * (abs(lhs[1]) + abs(rhs)) * grow +
                    floor * (abs(lhs[0]) + abs(rhs) + a);
            bound /= a;
        }
        if (residual > out.max_residual || i == 0) {
            out.max_residual = residual;
            out.worst_sample = i;
        }
        if (bound > out.bound) out.bound = bound;
    }
    return out;
}

PoleField pole_field(const Params& params, unsigned depth, const PoleFieldOptions& options) {
    PrecisionScope scope(options.precision_bits);
    struct Center {
        std::shared_ptr<const EvaluationContext> ctx;
        Complex location;
        std::optional<Real> trust_radius;
    };

    auto search = [&](const EvaluationContext& ctx, const std::vector<std::size_t>& orders, bool symmetric) {
        ZeroSearchOptions z;
        z.orders = orders;
        z.stability_tol = options.stability_tol;
        z.root_finder.precision_bits = options.precision_bits;
        return trusted_zeros(ctx.coeffs(), z, symmetric);
    };

    PoleField field;
    field.points.push_back({Complex(), 0, {}, true});

    const std::size_t origin_degree = *std::max_element(options.origin_orders.begin(), options.origin_orders.end());
    const std::size_t center_degree = *std::max_element(options.center_orders.begin(), options.center_orders.end());
    auto origin = std::make_shared<const EvaluationContext>(tau_coefficients(params, origin_degree - 1),
                                                            options.precision_bits);
    ZeroSearchResult scan = search(*origin, options.origin_orders, has_order3_symmetry(params));
    std::vector<Center> centers{{origin, Complex(), scan.trust_radius}};

    std::vector<std::pair<std::size_t, std::size_t>> frontier;  // (point, centre that found it)
    for (const ZeroEstimate& z : scan.zeros) {
        if (!z.trusted && !options.include_untrusted) continue;
        field.points.push_back({z.location, 0, {0}, z.trusted});
        if (z.trusted) frontier.emplace_back(field.points.size() - 1, 0);
    }

    for (unsigned d = 1; d <= depth && !frontier.empty(); ++d) {
        std::vector<std::pair<std::size_t, std::size_t>> next;
        for (auto [pi, ci] : frontier) {
            const Complex here = field.points[pi].location;
            if (options.center_radius && abs(here) > *options.center_radius) continue;
            try {
                ShiftOptions so = options.shift;
                so.trust_radius = centers[ci].trust_radius;
                const ShiftData shift = shift_parameters(*centers[ci].ctx, here - centers[ci].location, so);
                auto ctx = std::make_shared<const EvaluationContext>(
                    EvaluationContext::from_complex_params(shift.new_params, center_degree - 1, options.precision_bits));
                ZeroSearchResult local = search(*ctx, options.center_orders, false);
                const std::size_t nc = centers.size();
                centers.push_back({ctx, here, local.trust_radius});

                std::vector<std::size_t> chain = field.points[pi].parent_chain;
                chain.push_back(pi);
                for (const ZeroEstimate& z : local.zeros) {
                    if (!z.trusted) continue;
                    Real spacing = std::numeric_limits<Real>::infinity();
                    for (const ZeroEstimate& o : local.zeros) {
                        if (&o == &z) continue;
                        Real dist = abs(o.location - z.location);
                        if (dist < spacing) spacing = dist;
                    }
                    if (abs(z.location) < spacing) spacing = abs(z.location);
                    const Complex global = here + z.location;
                    const Real tol = Real(1e-8) * spacing;
                    bool duplicate = false;
                    for (const PolePoint& p : field.points) {
                        if (abs(p.location - global) <= tol) {
                            duplicate = true;
                            break;
                        }
                    }
                    if (duplicate) continue;
                    field.points.push_back({global, d, chain, true});
                    next.emplace_back(field.points.size() - 1, nc);
                }
            } catch (const Error& e) {
                field.errors.push_back("centre " + std::to_string(pi) + " (" + describe(here) + "): " + e.what());
            }
        }
        frontier = std::move(next);
    }
    return field;
}

void write_pole_field_csv(std::ostream& out, const PoleField& field, unsigned digits) {
    out << "re,im,depth,parent_chain,trusted\n";
    for (const PolePoint& p : field.points) {
        out << to_decimal(p.location.re, digits) << ',' << to_decimal(p.location.im, digits) << ',' << p.depth << ',';
        for (std::size_t i = 0; i < p.parent_chain.size(); ++i) out << (i ? ";" : "") << p.parent_chain[i];
        out << ',' << (p.trusted ? "true" : "false") << '\n';
    }
}

nlohmann::json to_json(const ShiftData& shift, unsigned digits) {
    const ParameterSet<Complex>& p = shift.new_params;
    return {
        {"omega", to_json(shift.omega, digits)},
        {"A", to_json(shift.a_gauge, digits)},
        {"B", to_json(shift.b_gauge, digits)},
        {"mu_tilde", to_json(shift.mu_tilde, digits)},
        {"new_params",
         {{"eta", to_json(p.eta, digits)},
          {"kappa", to_json(p.kappa, digits)},
          {"lambda", to_json(p.lambda, digits)},
          {"g2", to_json(p.g2, digits)},
          {"g3", to_json(p.g3, digits)}}},
    };
}

}  // namespace ptau
