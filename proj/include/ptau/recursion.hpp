#pragma once

// The Taylor recursion for tau(z) = sum_n C_n z^(n+1) around a simple zero,
// generic over the coefficient ring.
//
// The recursion for C_n reads
//
//   n(n^2-1)(n-6) C_n = -1/2    sum_{j=1}^{n-1} b(j+1, n+1-j)   C_j C_{n-j}
//                       +eta/2  sum_{j=0}^{n-4} a^(j+1, n-3-j)  C_j C_{n-4-j}
//                       -kappa  sum_{j=0}^{n-3} a*(j+1, n-2-j)  C_j C_{n-3-j}
//                       +g2/2   sum_{j=0}^{n-4}                 C_j C_{n-4-j}
//                       +lambda sum_{j=0}^{n-5}                 C_j C_{n-5-j}
//
// with C_0 = 1, C_1 = 0 and C_6 = kappa^2/5040 - g3/840. It is run here on
// P_n = (n+1)! C_n. Writing C_j C_{m-j} = C(m+2, j+1) P_j P_{m-j} / (m+2)!
// turns every weight into an integer and leaves one rational prefactor per
// sum, so big-number work stays on integers of moderate size and the same
// code produces the polynomials P_n when run over Q[kappa, eta, g2, lambda, g3].

#include <cstddef>
#include <optional>
#include <vector>

#include "ptau/errors.hpp"
#include "ptau/hirota.hpp"
#include "ptau/params.hpp"
#include "ptau/rational.hpp"
#include "ptau/ring.hpp"

namespace ptau {

/// Left-hand multiplier n(n^2 - 1)(n - 6); zero at the resonances n = 0, 1, 6.
inline Integer resonance_multiplier(long n) { return Integer(n) * (n * n - 1) * (n - 6); }

template <CoefficientRing T>
struct ScaledRecursionResult {
    std::vector<T> p;  // P_0 .. P_N
    T rhs6;            // right-hand side at the resonance n = 6 (in P-scaling)
};

namespace detail {

/// sum_{j=first}^{last} w(j) P_j P_{m-j} accumulated pairwise: the product for
/// {j, m-j} is formed once and weighted by w(j) + w(m-j). `first`/`last`
/// bound j; the range must be symmetric under j -> m - j.
template <CoefficientRing T, class Weight>
T symmetric_convolution(const std::vector<T>& p, long m, long first, long last, Weight&& weight) {
    T acc = RingTraits<T>::zero();
    for (long j = first; j <= last; ++j) {
        long k = m - j;
        if (k < j) break;
        if (RingTraits<T>::is_zero(p[j]) || RingTraits<T>::is_zero(p[k])) continue;
        Integer w = weight(j);
        if (k != j) w += weight(k);
        if (w == 0) continue;
        RingTraits<T>::add_product(acc, w, p[j], p[k]);
    }
    return acc;
}

}  // namespace detail

template <CoefficientRing T>
struct RecursionOptions {
    /// Used for P_6 instead of kappa^2 - 6 g3 (i.e. a different first integral).
    std::optional<T> p6_override;
    /// For exact rings, raise ResonanceViolation if the right-hand side at
    /// n = 6 is nonzero.
    bool enforce_resonance = true;
};

/// Runs the recursion over ring T up to n = N and returns P_0 .. P_N.
template <CoefficientRing T>
ScaledRecursionResult<T> scaled_taylor_recursion(const ParameterSet<T>& prm, std::size_t N,
                                                 const RecursionOptions<T>& options = {}) {
    using R = RingTraits<T>;
    const MultiplierTable table(N + 3);
    ScaledRecursionResult<T> out{std::vector<T>(N + 1, R::zero()), R::zero()};
    std::vector<T>& p = out.p;
    p[0] = R::from_rational(1);

    for (long n = 2; n <= static_cast<long>(N); ++n) {
        // -1/(2(n+2)) * sum_{j=1}^{n-1} b(j+1, n+1-j) C(n+2, j+1) P_j P_{n-j}
        const std::vector<Integer> row_b = binomial_row(n + 2);
        T s_b = detail::symmetric_convolution(p, n, 1, n - 1, [&](long j) {
            return Integer(table.b(j + 1, n + 1 - j) * row_b[j + 1]);
        });
        T rhs = R::scaled(s_b, make_rational(-1, 2 * (n + 2)));

        if (n >= 4) {
            // eta and g2 sums share the products P_j P_{n-4-j}.
            const std::vector<Integer> row = binomial_row(n - 2);
            const long m = n - 4;
            T s_eta = detail::symmetric_convolution(p, m, 0, m, [&](long j) {
                return Integer(table.a_hat(j + 1, n - 3 - j) * row[j + 1]);
            });
            T s_g2 = detail::symmetric_convolution(p, m, 0, m, [&](long j) { return row[j + 1]; });
            Rational f = make_rational(Integer(n + 1) * n * (n - 1), 2);
            rhs = rhs + R::scaled(prm.eta * s_eta, f) + R::scaled(prm.g2 * s_g2, f);
        }
        if (n >= 3) {
            const std::vector<Integer> row = binomial_row(n - 1);
            const long m = n - 3;
            T s_k = detail::symmetric_convolution(p, m, 0, m, [&](long j) {
                return Integer(table.a_star(j + 1, n - 2 - j) * row[j + 1]);
            });
            rhs = rhs - R::scaled(prm.kappa * s_k, Rational(Integer(n + 1) * n));
        }
        if (n >= 5) {
            const std::vector<Integer> row = binomial_row(n - 3);
            const long m = n - 5;
            T s_l = detail::symmetric_convolution(p, m, 0, m, [&](long j) { return row[j + 1]; });
            rhs = rhs + R::scaled(prm.lambda * s_l, Rational(Integer(n + 1) * n * (n - 1) * (n - 2)));
        }

        if (n == 6) {
            if constexpr (R::exact) {
                if (options.enforce_resonance && !R::is_zero(rhs)) throw ResonanceViolation("right-hand side at n = 6 does not vanish");
            }
            out.rhs6 = rhs;
            p[6] = options.p6_override ? *options.p6_override : T(prm.kappa * prm.kappa - R::scaled(prm.g3, Rational(6)));
            continue;
        }
        p[n] = R::scaled(rhs, Rational(1) / Rational(resonance_multiplier(n)));
    }
    return out;
}

/// C_n = P_n / (n+1)! over ring T.
template <CoefficientRing T>
std::vector<T> taylor_coefficients(const ParameterSet<T>& prm, std::size_t N,
                                   const RecursionOptions<T>& options = {}) {
    std::vector<T> c = scaled_taylor_recursion(prm, N, options).p;
    Integer fact = 1;
    for (std::size_t n = 0; n < c.size(); ++n) {
        fact *= static_cast<unsigned long>(n + 1);
        if (!RingTraits<T>::is_zero(c[n])) c[n] = RingTraits<T>::scaled(c[n], Rational(1) / Rational(fact));
    }
    return c;
}

}  // namespace ptau
