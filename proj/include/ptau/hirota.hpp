#pragma once

// Hirota derivatives D_z^2 and D_z^4 acting on monomials and truncated
// power series:
//   D^2 z^j . z^k = a(j,k) z^(j+k-2),   D^4 z^j . z^k = b(j,k) z^(j+k-4).

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "ptau/rational.hpp"
#include "ptau/ring.hpp"

namespace ptau {

/// a(j,k) = 2! sum_l (-1)^l C(j,l) C(k,2-l), evaluated as (j-k)^2 - (j+k).
Integer d2_multiplier(unsigned long j, unsigned long k);

/// b(j,k) = 4! sum_l (-1)^l C(j,l) C(k,4-l), evaluated through falling
/// factorials: sum_l (-1)^l C(4,l) j^(l) k^(4-l).
Integer d4_multiplier(unsigned long j, unsigned long k);

/// Cached a(j,k) and b(j,k) for j + k <= max_degree. Immutable once built.
class MultiplierTable {
public:
    explicit MultiplierTable(std::size_t max_degree);

    std::size_t max_degree() const { return max_degree_; }

    const Integer& a(std::size_t j, std::size_t k) const { return a_[index(j, k)]; }
    const Integer& b(std::size_t j, std::size_t k) const { return b_[index(j, k)]; }

    /// a^(j,k) = a(j,k) - 2k
    Integer a_hat(std::size_t j, std::size_t k) const { return a(j, k) - 2 * static_cast<unsigned long>(k); }
    /// a*(j,k) = a(j,k) - k
    Integer a_star(std::size_t j, std::size_t k) const { return a(j, k) - static_cast<unsigned long>(k); }

private:
    std::size_t index(std::size_t j, std::size_t k) const {
        if (j + k > max_degree_) throw std::out_of_range("multiplier index beyond table degree");
        // Rows by total degree d = j + k, each of length d + 1.
        std::size_t d = j + k;
        return d * (d + 1) / 2 + j;
    }

    std::size_t max_degree_;
    std::vector<Integer> a_;
    std::vector<Integer> b_;
};

/// D^order f.g for truncated series f, g given by their coefficients of
/// z^0 .. z^N. The result holds the coefficients of z^0 .. z^(N - order);
/// higher powers would need terms beyond the truncation and are dropped.
template <CoefficientRing T>
std::vector<T> hirota_apply(int order, std::span<const T> f, std::span<const T> g) {
    if (order != 2 && order != 4) throw std::invalid_argument("hirota_apply: order must be 2 or 4");
    if (f.size() != g.size()) throw std::invalid_argument("hirota_apply: truncation orders differ");
    if (f.size() <= static_cast<std::size_t>(order)) return {};
    const std::size_t n = f.size() - 1;
    const std::size_t out_degree = n - static_cast<std::size_t>(order);
    std::vector<T> out(out_degree + 1, RingTraits<T>::zero());
    for (std::size_t j = 0; j <= n; ++j) {
        if (RingTraits<T>::is_zero(f[j])) continue;
        for (std::size_t k = 0; j + k <= n; ++k) {
            if (j + k < static_cast<std::size_t>(order) || RingTraits<T>::is_zero(g[k])) continue;
            Integer m = order == 2 ? d2_multiplier(j, k) : d4_multiplier(j, k);
            if (m == 0) continue;
            RingTraits<T>::add_product(out[j + k - order], m, f[j], g[k]);
        }
    }
    return out;
}

}  // namespace ptau
