#ifndef FROBSING_TORIC_HPP
#define FROBSING_TORIC_HPP

#include <cstdint>
#include <vector>

#include "frobsing/rational.hpp"

namespace frobsing {

/// Lattice point in the character lattice M = Z^d.
using LatticePoint = std::vector<std::int64_t>;

/// Strongly convex rational cone given by primitive ray generators in
/// N = Z^d. Validity: primitive rays, pairwise non-parallel, and existence of
/// a functional strictly positive on every ray (exact Fourier-Motzkin check).
struct Cone {
    std::size_t dim = 0;
    std::vector<LatticePoint> rays;

    void validate() const;
};

/// All m in the box |m|_inf <= B with <m, n_i> >= -lambda_i for every ray —
/// the window of the divisorial module attached to the coefficient vector.
/// Comparisons are exact rational.
std::vector<LatticePoint> divisor_module_points(const Cone& cone,
                                                const std::vector<Rational>& coeffs,
                                                std::int64_t box);

struct ToricCheck {
    bool ok = false;
    // With every ray in the boundary the two coefficient vectors coincide and
    // the window sets must match exactly; with a partial boundary the check is
    // the scaled containment q * (canonical window) inside the target window.
    std::size_t canonical_count = 0;
    std::size_t target_count = 0;
    std::size_t strict_witnesses = 0;  // target points not hit by the scaling
    bool scaling_injective = false;
};

/// Frobenius-stability check at level q on a box window: canonical module
/// points map under m -> q m into the points of q*K + (q-1)*Delta, and with a
/// full boundary the two windows agree set-for-set.
ToricCheck toric_fpure_verify(const Cone& cone, const std::vector<std::size_t>& delta_rays,
                              std::uint64_t q, std::int64_t box);

}  // namespace frobsing

#endif
