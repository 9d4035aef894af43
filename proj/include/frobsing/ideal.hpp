#ifndef FROBSING_IDEAL_HPP
#define FROBSING_IDEAL_HPP

#include <vector>

#include "frobsing/polynomial.hpp"

namespace frobsing {

/// Finitely generated ideal, held as a generator list. Zero generators are
/// stripped on construction; the stored order is canonical for display only —
/// ideals are compared through Groebner normal forms, never through the lists.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

/// Bracket power I^[q]: the ideal generated by the q-th powers of the
/// generators (which generate the q-th powers of all elements in
/// characteristic p).
Ideal bracket_power(const Ideal& ideal, std::uint64_t q);

/// (x_1^q, ..., x_d^q) as an Ideal value.
Ideal max_bracket_ideal(const RingPtr& ring, std::uint64_t q);

/// Membership of f in (x_1^q,...,x_d^q). A monomial ideal, so the test is
/// termwise: true iff every term has some exponent >= q.
bool in_bracket_max(const Polynomial& f, std::uint64_t q);

}  // namespace frobsing

#endif
