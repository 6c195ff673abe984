#include "ptau/hirota.hpp"

namespace ptau {

namespace {

Integer falling(unsigned long x, unsigned long r) {
    Integer p = 1;
    for (unsigned long i = 0; i < r; ++i) {
        if (x < i) return 0;
        p *= (x - i);
    }
    return p;
}

}  // namespace

Integer d2_multiplier(unsigned long j, unsigned long k) {
    Integer d = Integer(j) - Integer(k);
    return d * d - (Integer(j) + Integer(k));
}

Integer d4_multiplier(unsigned long j, unsigned long k) {
    static constexpr long kBinom4[5] = {1, 4, 6, 4, 1};
    Integer sum = 0;
    for (unsigned long l = 0; l <= 4; ++l) {
        Integer t = falling(j, l) * falling(k, 4 - l) * kBinom4[l];
        if (l % 2 == 0) sum += t;
        else sum -= t;
    }
    return sum;
}

MultiplierTable::MultiplierTable(std::size_t max_degree) : max_degree_(max_degree) {
    const std::size_t size = (max_degree + 1) * (max_degree + 2) / 2;
    a_.reserve(size);
    b_.reserve(size);
    for (std::size_t d = 0; d <= max_degree; ++d) {
        for (std::size_t j = 0; j <= d; ++j) {
            a_.push_back(d2_multiplier(j, d - j));
            b_.push_back(d4_multiplier(j, d - j));
        }
    }
}

}  // namespace ptau
