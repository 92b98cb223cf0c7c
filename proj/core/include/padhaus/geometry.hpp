#pragma once

#include <cstdint>
#include <vector>

#include "padhaus/log_scalar.hpp"

namespace padhaus {

// Centered ball {|x|_p <= p^scale} or sphere {|x|_p = p^scale}.
struct Region {
    enum class Kind { Ball, Sphere };
    Kind kind;
    int scale;

    static Region ball(int scale) { return {Kind::Ball, scale}; }
    static Region sphere(int scale) { return {Kind::Sphere, scale}; }
};

// Power weight w(x) = |x|_p^alpha. Ball integrals around 0 need alpha > -n.
struct PowerWeight {
    double alpha = 0.0;
};

// |num/den|_p as a LogScalar; exact zero for num == 0.
LogScalar padic_norm(int p, long long num, long long den = 1);

// Haar measure of a centered region: |B_g| = p^{ng}, |S_g| = p^{ng}(1-p^{-n}).
LogScalar measure(int p, int n, Region region);

// Integral of |x|_p^alpha over the region. Balls require alpha + n > 0.
LogScalar weighted_measure(int p, int n, Region region, PowerWeight w);

/**
 * A coset of p^level Z_p^n inside the unit sphere S_0, identified by the
 * digit matrix of its representative: digits[coord*level + pos] is the
 * base-p digit of coordinate `coord` at p-power `pos`. Membership in S_0
 * means at least one coordinate has a nonzero leading digit. Each coset
 * has Haar measure p^{-level*n}.
 */
struct UnitSphereCoset {
    int level;
    std::vector<std::uint8_t> digits;
};

/**
 * All cosets of p^level Z_p^n partitioning S_0, in lexicographic order of
 * the flattened digit matrix. Count is p^{level*n} - p^{(level-1)*n}.
 * Throws ResourceLimit when the full digit space exceeds `cap`.
 */
std::vector<UnitSphereCoset> unit_sphere_cosets(int p, int n, int level,
                                                std::size_t cap = 1000000);

/**
 * Lookup table over the cosets at one level: maps a digit matrix back to
 * its enumeration index, and truncates finer digit matrices to their
 * ancestor at this level. Used when several locally constant factors at
 * different levels are integrated together.
 */
class CosetTable {
public:
    CosetTable(int p, int n, int level, std::size_t cap = 1000000);

    int p() const { return p_; }
    int n() const { return n_; }
    int level() const { return level_; }
    const std::vector<UnitSphereCoset>& cosets() const { return cosets_; }
    std::size_t size() const { return cosets_.size(); }

    // Index of the coset with exactly these digits (n*level entries).
    std::size_t index_of(const std::vector<std::uint8_t>& digits) const;

    // Index of the level-`level()` ancestor of a finer digit matrix.
    std::size_t ancestor_index(const UnitSphereCoset& finer) const;

private:
    int p_, n_, level_;
    std::vector<UnitSphereCoset> cosets_;
};

} // namespace padhaus
