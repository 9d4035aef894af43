#ifndef FROBSING_COLON_HPP
#define FROBSING_COLON_HPP

#include <optional>

#include "frobsing/groebner.hpp"
#include "frobsing/ideal.hpp"

namespace frobsing {

/// Colon ideal ((x_1^q,...,x_d^q) : h) by exact linear algebra on the q^d
/// dimensional quotient with monomial basis {x^a : all a_i < q}: the result
/// is the bracket power plus preimages of the kernel of multiplication by h.
/// The returned generators form a Groebner basis under the canonical order.
/// Throws BudgetError when q^d exceeds the dimension budget.
Ideal colon_artinian(const RingPtr& ring, std::uint64_t q, const Polynomial& h);

/// General colon (I : J) = intersection over generators u of J of (I : u),
/// each computed by the elimination method with one auxiliary variable
/// (principal pairs with exact divisibility are divided directly). Every
/// returned generator is verified to multiply each generator of J into I.
Ideal ideal_colon(const Ideal& ideal, const Ideal& by);

/// Intersection of two ideals via a single auxiliary variable and an
/// elimination-order basis.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

struct MemberPowerResult {
    std::optional<std::uint64_t> power;  // minimal m with x_i^m in J, if found
    std::uint64_t cap;                   // the search bound that was in force
};

/// Minimal m <= cap with x_i^m in J, for J generated by homogeneous
/// polynomials, found degree by degree with exact linear algebra.
MemberPowerResult homogeneous_member_power(const Ideal& ideal, std::size_t var_index,
                                           std::uint64_t cap);

}  // namespace frobsing

#endif
