#include "ptau/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ptau/errors.hpp"

namespace ptau {

namespace {

using LComplex = std::complex<long double>;

Real infinity() { return std::numeric_limits<Real>::infinity(); }

/// Long-double Aberth sweeps on a polynomial scaled so its roots lie in
/// (roughly) the unit disc. Returns approximations; convergence is not
/// required here because the multiprecision stage finishes the job.
std::vector<LComplex> aberth_long_double(const std::vector<LComplex>& b, std::uint64_t seed) {
    const std::size_t d = b.size() - 1;
    std::vector<LComplex> z(d);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<long double> jitter(-0.1L, 0.1L);
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const long double phase = 0.4L;
    for (std::size_t k = 0; k < d; ++k) {
        long double angle = two_pi * (static_cast<long double>(k) + 0.5L + jitter(rng)) / static_cast<long double>(d) + phase;
        z[k] = std::polar(1.0L, angle);
    }
    const long double eps = std::numeric_limits<long double>::epsilon();
    std::vector<bool> done(d, false);
    std::vector<LComplex> step(d);
    for (int iter = 0; iter < 2000; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i]) continue;
            LComplex p = b[d], dp = 0;
            long double scale = std::abs(b[d]);
            const long double r = std::abs(z[i]);
            for (std::size_t k = d; k-- > 0;) {
                dp = dp * z[i] + p;
                p = p * z[i] + b[k];
                scale = scale * r + std::abs(b[k]);
            }
            if (!std::isfinite(std::abs(p)) || !std::isfinite(std::abs(dp))) {
                step[i] = 0;
                continue;
            }
            if (std::abs(p) <= 16.0L * static_cast<long double>(d) * eps * scale) {
                done[i] = true;
                step[i] = 0;
                continue;
            }
            all_done = false;
            LComplex ratio = p / dp;
            LComplex sum = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != i) sum += 1.0L / (z[i] - z[j]);
            }
            step[i] = ratio / (1.0L - ratio * sum);
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (std::isfinite(std::abs(step[i]))) z[i] -= step[i];
        }
        if (all_done) break;
    }
    return z;
}

long double to_ld(const Real& x) { return mpfr_get_ld(x.backend().data(), MPFR_RNDN); }

Complex from_ld(const LComplex& z) {
    Real re, im;
    mpfr_set_ld(re.backend().data(), z.real(), MPFR_RNDN);
    mpfr_set_ld(im.backend().data(), z.imag(), MPFR_RNDN);
    return {re, im};
}

Complex inverse(const Complex& z) {
    Real n = norm(z);
    return {z.re / n, -z.im / n};
}

std::vector<Complex> cube_roots(const Complex& y) {
    Real r = boost::multiprecision::cbrt(abs(y));
    Real theta = boost::multiprecision::atan2(y.im, y.re) / 3;
    Complex z = polar(r, theta);
    const Complex w = omega3();
    Complex wz = w * z;
    Complex w2z = w * wz;
    return {z, wz, w2z};
}

/// Index of the entry of `list` nearest to z.
std::size_t nearest(const std::vector<Complex>& list, const Complex& z) {
    std::size_t best = 0;
    Real best_d = infinity();
    for (std::size_t i = 0; i < list.size(); ++i) {
        Real d = norm(list[i] - z);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

/// Distance from top[i] to its reciprocal nearest neighbour in `other`.
Real reciprocal_match(const std::vector<Complex>& top, std::size_t i, const std::vector<Complex>& other) {
    if (other.empty()) return infinity();
    std::size_t j = nearest(other, top[i]);
    if (nearest(top, other[j]) != i) return infinity();
    return abs(top[i] - other[j]);
}

/// Nonzero roots of the truncation of degree D (tau_D(z) / z has degree D - 1).
std::vector<Complex> truncation_roots(std::span<const Complex> coeffs, std::size_t D, bool symmetric,
                                      const RootFinderOptions& rf) {
    std::vector<Complex> q;
    if (symmetric) {
        for (std::size_t n = 0; n < D; n += 3) q.push_back(coeffs[n]);
    } else {
        q.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(D));
    }
    while (!q.empty() && is_zero(q.back())) q.pop_back();
    if (q.size() < 2) return {};
    std::vector<Complex> r = find_roots(q, rf);
    if (!symmetric) return r;
    std::vector<Complex> z;
    z.reserve(3 * r.size());
    for (const Complex& y : r) {
        for (Complex& c : cube_roots(y)) z.push_back(std::move(c));
    }
    return z;
}

}  // namespace

std::pair<Real, Real> residual_and_scale(std::span<const Complex> poly, const Complex& z) {
    Complex p = poly.back();
    Real scale = abs(poly.back());
    Real r = abs(z);
    for (std::size_t k = poly.size() - 1; k-- > 0;) {
        p = p * z + poly[k];
        scale = scale * r + abs(poly[k]);
    }
    return {abs(p), scale};
}

std::vector<Complex> find_roots(std::span<const Complex> poly, const RootFinderOptions& options) {
    PrecisionScope scope(options.precision_bits);
    std::size_t n = poly.size();
    while (n > 0 && is_zero(poly[n - 1])) --n;
    if (n < 2) throw std::invalid_argument("find_roots: polynomial degree must be at least 1");
    std::size_t zeros = 0;
    while (is_zero(poly[zeros])) ++zeros;

    std::vector<Complex> roots(zeros);
    const std::vector<Complex> q(poly.begin() + static_cast<std::ptrdiff_t>(zeros),
                                 poly.begin() + static_cast<std::ptrdiff_t>(n));
    const std::size_t d = q.size() - 1;
    if (d == 0) return roots;

    // Root bound max_k (d |q_{d-k} / q_d|)^(1/k); all roots lie inside it.
    const Real lead = abs(q[d]);
    Real bound(0);
    for (std::size_t k = 1; k <= d; ++k) {
        if (is_zero(q[d - k])) continue;
        Real v = boost::multiprecision::pow(Real(d) * abs(q[d - k]) / lead, Real(1) / Real(k));
        if (v > bound) bound = v;
    }

    // Long-double stage on t = z / bound, scaled so that |b_d| = 1.
    std::vector<LComplex> b(d + 1);
    {
        Real f = 1 / lead;
        for (std::size_t k = d + 1; k-- > 0;) {
            Complex c = q[k] * f;
            b[k] = LComplex(to_ld(c.re), to_ld(c.im));
            f /= bound;
        }
    }
    std::vector<LComplex> t = aberth_long_double(b, options.seed);

    std::vector<Complex> z(d);
    for (std::size_t i = 0; i < d; ++i) z[i] = from_ld(t[i]) * bound;

    const Real tol = options.residual_tol ? *options.residual_tol
                                          : Real(16 * d + 64) * pow2(-static_cast<long>(options.precision_bits));
    std::vector<bool> done(d, false);
    std::vector<Complex> step(d);
    for (unsigned iter = 0; iter <= options.max_iters; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < d; ++i) {
            step[i] = Complex();
            if (done[i]) continue;
            Complex p = q[d], dp;
            Real scale = abs(q[d]);
            const Real r = abs(z[i]);
            for (std::size_t k = d; k-- > 0;) {
                dp = dp * z[i] + p;
                p = p * z[i] + q[k];
                scale = scale * r + abs(q[k]);
            }
            if (abs(p) <= tol * scale) {
                done[i] = true;
                continue;
            }
            all_done = false;
            if (iter == options.max_iters) continue;
            Complex ratio = p / dp;
            Complex sum;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != i) sum += inverse(z[i] - z[j]);
            }
            step[i] = ratio / (Complex(1) - ratio * sum);
        }
        if (all_done) break;
        for (std::size_t i = 0; i < d; ++i) {
            if (!done[i]) z[i] -= step[i];
        }
    }

    std::vector<std::size_t> failed;
    for (std::size_t i = 0; i < d; ++i) {
        if (!done[i]) failed.push_back(zeros + i);
    }
    if (!failed.empty()) {
        std::ostringstream msg;
        msg << failed.size() << " of " << d << " roots unconverged after " << options.max_iters << " iterations:";
        for (std::size_t i : failed) msg << ' ' << i;
        throw NoConvergence(msg.str());
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

ZeroSearchResult trusted_zeros(std::span<const Complex> coeffs, const ZeroSearchOptions& options,
                               bool order3_symmetric) {
    const auto& orders = options.orders;
    if (orders.size() < 2) throw std::invalid_argument("trusted_zeros: need at least two truncation orders");
    for (std::size_t i = 1; i < orders.size(); ++i) {
        if (orders[i] <= orders[i - 1]) throw std::invalid_argument("trusted_zeros: orders must increase");
    }
    if (orders.front() < 2) throw std::invalid_argument("trusted_zeros: orders must be at least 2");
    if (orders.back() > coeffs.size())
        throw std::invalid_argument("trusted_zeros: order exceeds the available coefficients");

    PrecisionScope scope(options.root_finder.precision_bits);
    std::vector<std::vector<Complex>> roots;
    roots.reserve(orders.size());
    for (std::size_t D : orders) roots.push_back(truncation_roots(coeffs, D, order3_symmetric, options.root_finder));

    const std::vector<Complex>& top = roots.back();
    const std::size_t D = orders.back();
    const std::vector<Complex> top_poly(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(D));

    ZeroSearchResult result;
    std::vector<ZeroEstimate>& zeros = result.zeros;
    zeros.reserve(top.size());
    const Real tol(options.stability_tol);
    for (std::size_t i = 0; i < top.size(); ++i) {
        ZeroEstimate z;
        z.location = top[i];
        z.source_order = D;
        z.residual = residual_and_scale(top_poly, top[i]).first * abs(top[i]);
        for (std::size_t k = roots.size() - 1; k-- > 0;) z.match_history.push_back(reciprocal_match(top, i, roots[k]));
        z.stability = z.match_history.front();
        zeros.push_back(std::move(z));
    }
    auto stable = [&](const ZeroEstimate& z) { return z.stability <= tol * abs(z.location); };

    if (options.trust.radius) {
        result.trust_radius = options.trust.radius;
    } else {
        for (const ZeroEstimate& z : zeros) {
            if (stable(z)) continue;
            Real r = abs(z.location);
            if (!result.trust_radius || r < *result.trust_radius) result.trust_radius = r;
        }
    }
    for (ZeroEstimate& z : zeros) {
        z.trusted = stable(z) && (!result.trust_radius || abs(z.location) <= *result.trust_radius);
    }
    std::sort(zeros.begin(), zeros.end(), [](const ZeroEstimate& a, const ZeroEstimate& b) {
        Real ra = abs(a.location), rb = abs(b.location);
        if (ra != rb) return ra < rb;
        return boost::multiprecision::atan2(a.location.im, a.location.re) <
               boost::multiprecision::atan2(b.location.im, b.location.re);
    });
    return result;
}

ZeroSearchResult trusted_zeros(const Params& params, const ZeroSearchOptions& options) {
    if (options.orders.empty()) throw std::invalid_argument("trusted_zeros: no orders given");
    const std::size_t D = *std::max_element(options.orders.begin(), options.orders.end());
    const CoefficientSeries series = tau_coefficients(params, D - 1);
    const EvaluationContext ctx(series, options.root_finder.precision_bits);
    return trusted_zeros(ctx.coeffs(), options, has_order3_symmetry(params));
}

OrbitGrouping symmetry_triples(const std::vector<ZeroEstimate>& zeros, const Real& tol) {
    OrbitGrouping out{{}, Real(0)};
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (zeros[i].trusted) pool.push_back(i);
    }
    if (pool.empty()) return out;
    const Complex w = omega3();
    const Complex w2 = w * w;
    std::vector<bool> used(zeros.size(), false);
    for (std::size_t a : pool) {
        if (used[a]) continue;
        used[a] = true;
        const Complex& za = zeros[a].location;
        const Real allowed = tol * (abs(za) > 1 ? abs(za) : Real(1));
        std::array<std::size_t, 3> orbit{a, a, a};
        for (int r = 1; r <= 2; ++r) {
            const Complex target = (r == 1 ? w : w2) * za;
            std::size_t best = zeros.size();
            Real best_d = infinity();
            for (std::size_t b : pool) {
                if (used[b]) continue;
                Real d = abs(zeros[b].location - target);
                if (d < best_d) {
                    best_d = d;
                    best = b;
                }
            }
            if (best == zeros.size() || best_d > allowed) {
                std::ostringstream msg;
                msg << "zero " << to_decimal(za.re, 20) << " + " << to_decimal(za.im, 20) << "i has no w^" << r
                    << " partner";
                throw OrbitIncomplete(msg.str());
            }
            used[best] = true;
            orbit[r] = best;
            if (best_d > out.max_defect) out.max_defect = best_d;
        }
        out.orbits.push_back(orbit);
    }
    return out;
}

void write_zeros_csv(std::ostream& out, const std::vector<ZeroEstimate>& zeros, unsigned digits) {
    out << "re,im,residual,stability,trusted,source_order\n";
    for (const ZeroEstimate& z : zeros) {
        out << to_decimal(z.location.re, digits) << ',' << to_decimal(z.location.im, digits) << ','
            << to_decimal(z.residual, 6) << ',' << (boost::multiprecision::isinf(z.stability) ? std::string("inf") : to_decimal(z.stability, 6))
            << ',' << (z.trusted ? "true" : "false") << ',' << z.source_order << '\n';
    }
}

}  // namespace ptau
