// Test-side oracles, independent of the library code paths they check.
#ifndef FROBSING_TEST_ORACLES_HPP
#define FROBSING_TEST_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "frobsing/groebner.hpp"
#include "frobsing/polynomial.hpp"

namespace frobsing::oracles {

/// f^k by plain repeated multiplication (no intermediate discarding), then a
/// single termwise filter dropping exponents >= q.
Polynomial pow_then_filter(const Polynomial& f, std::uint64_t k, std::uint64_t q);

/// Binomial coefficient mod p through base-p digits.
std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Multinomial coefficient (n; parts) mod p, zero unless parts sum to n.
std::uint32_t multinomial_mod(std::uint64_t n, const std::vector<std::uint64_t>& parts,
                              std::uint32_t p);

/// Largest j such that some term x^{a k} y^{b (j-k)} of (x^a - y^b)^j
/// survives the level-q window: a k <= q-1, b (j-k) <= q-1, C(j,k) != 0 mod p.
std::uint64_t nu_binomial(std::uint64_t a, std::uint64_t b, std::uint32_t p, int e);

/// Does (x^4+y^4+z^4+w^4)^{q-1} keep a term inside the level-q window?
/// Exhaustive scan over compositions with the multinomial-digit test.
bool fermat_quartic_survives(std::uint32_t p, int e);

/// All eigenvalues of the symmetric integer matrix are negative iff every
/// coefficient of the monic characteristic polynomial is positive.
bool negative_definite_charpoly(const std::vector<std::vector<std::int64_t>>& m);

/// Random sparse polynomial with exponents below max_exp.
Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms,
                       std::uint32_t max_exp, bool force_in_m = false);

/// Equality of ideals by mutual generator membership plus agreement of
/// normal-form vanishing on random probes.
bool ideals_agree(const Ideal& a, const Ideal& b, int probes, std::mt19937& rng);

}  // namespace frobsing::oracles

#endif
