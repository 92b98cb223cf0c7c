#include "padhaus/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace padhaus {

namespace {

int valuation(long long v, int p) {
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

void check_pn(int p, int n) {
    if (p < 2)
        throw ParameterOutOfRange("prime must be >= 2");
    if (n < 1)
        throw ParameterOutOfRange("dimension must be >= 1");
}

} // namespace

LogScalar padic_norm(int p, long long num, long long den) {
    if (p < 2)
        throw ParameterOutOfRange("prime must be >= 2");
    if (den == 0)
        throw ParameterOutOfRange("zero denominator");
    if (num == 0)
        return LogScalar::zero();
    const int v = valuation(std::llabs(num), p) - valuation(std::llabs(den), p);
    return LogScalar::pow_of(static_cast<long double>(-v));
}

LogScalar measure(int p, int n, Region region) {
    check_pn(p, n);
    const long double ng = static_cast<long double>(n) * region.scale;
    if (region.kind == Region::Kind::Ball)
        return LogScalar::pow_of(ng);
    return LogScalar::make(+1, ng + log1m_pow(p, n));
}

LogScalar weighted_measure(int p, int n, Region region, PowerWeight w) {
    check_pn(p, n);
    const long double c = static_cast<long double>(w.alpha) + n;
    if (region.kind == Region::Kind::Sphere)
        return LogScalar::make(+1, static_cast<long double>(region.scale) * c + log1m_pow(p, n));
    if (!(c > 0.0L))
        throw NonconvergentSum("weight is not integrable on a ball around 0");
    // Sum over spheres: p^{g(alpha+n)} (1-p^{-n}) / (1-p^{-(alpha+n)}).
    return LogScalar::make(+1, static_cast<long double>(region.scale) * c + log1m_pow(p, n) -
                                   log1m_pow(p, c));
}

std::vector<UnitSphereCoset> unit_sphere_cosets(int p, int n, int level, std::size_t cap) {
    check_pn(p, n);
    if (level < 1)
        throw ParameterOutOfRange("coset level must be >= 1");
    const double total = std::pow(static_cast<double>(p), static_cast<double>(level) * n);
    if (total > static_cast<double>(cap))
        throw ResourceLimit("coset enumeration exceeds the configured cap");

    const std::size_t len = static_cast<std::size_t>(n) * level;
    std::vector<UnitSphereCoset> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::uint8_t> digits(len, 0);
    for (;;) {
        bool in_sphere = false;
        for (int coord = 0; coord < n; ++coord)
            if (digits[static_cast<std::size_t>(coord) * level] != 0) {
                in_sphere = true;
                break;
            }
        if (in_sphere)
            out.push_back({level, digits});
        // Odometer step, last position fastest.
        std::size_t i = len;
        while (i > 0) {
            --i;
            if (digits[i] + 1 < p) {
                ++digits[i];
                std::fill(digits.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits.end(), 0);
                break;
            }
            if (i == 0)
                return out;
        }
    }
}

CosetTable::CosetTable(int p, int n, int level, std::size_t cap)
    : p_(p), n_(n), level_(level), cosets_(unit_sphere_cosets(p, n, level, cap)) {}

std::size_t CosetTable::index_of(const std::vector<std::uint8_t>& digits) const {
    const auto it = std::lower_bound(
        cosets_.begin(), cosets_.end(), digits,
        [](const UnitSphereCoset& c, const std::vector<std::uint8_t>& d) { return c.digits < d; });
    if (it == cosets_.end() || it->digits != digits)
        throw Error("digit matrix is not a unit-sphere coset at this level");
    return static_cast<std::size_t>(it - cosets_.begin());
}

std::size_t CosetTable::ancestor_index(const UnitSphereCoset& finer) const {
    if (finer.level < level_)
        throw DimensionMismatch("coset is coarser than the table level");
    std::vector<std::uint8_t> trunc(static_cast<std::size_t>(n_) * level_);
    for (int coord = 0; coord < n_; ++coord)
        for (int pos = 0; pos < level_; ++pos)
            trunc[static_cast<std::size_t>(coord) * level_ + pos] =
                finer.digits[static_cast<std::size_t>(coord) * finer.level + pos];
    return index_of(trunc);
}

} // namespace padhaus
