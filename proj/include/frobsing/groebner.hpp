#ifndef FROBSING_GROEBNER_HPP
#define FROBSING_GROEBNER_HPP

#include <cstddef>

#include "frobsing/ideal.hpp"

namespace frobsing {

/// Total monomial order compatible with multiplication.
/// Elim(k) makes the first k variables dominate (their block degree is
/// compared first), so a basis element free of those variables stays free
/// under reduction — the standard elimination-order property.
class MonomialOrder {
public:
    enum class Kind { GrevLex, Lex, Elim };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder elim(std::size_t first_block) {
        return MonomialOrder(Kind::Elim, first_block);
    }

    Kind kind() const { return kind_; }
    std::size_t block() const { return block_; }

    /// a < b under this order.
    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

private:
    MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
    Kind kind_;
    std::size_t block_;
};

/// Reduced Groebner basis: monic elements, no head divides another element's
/// term, every S-pair reduces to zero.
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, RingPtr ring, std::vector<Polynomial> elements)
        : order_(order), ring_(std::move(ring)), elements_(std::move(elements)) {}

    const MonomialOrder& order() const { return order_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& elements() const { return elements_; }

    /// Leading monomial of element i under the basis order.
    Monomial leading_monomial(std::size_t i) const;

private:
    MonomialOrder order_;
    RingPtr ring_;
    std::vector<Polynomial> elements_;
};

/// Buchberger with normal-strategy pair selection and the product/chain
/// criteria; the result is reduced. Throws BudgetError past the pair limit.
GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order);

/// Remainder of f on division by the basis; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_member(const Polynomial& f, const Ideal& ideal);
bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);

/// Double inclusion via normal forms.
bool ideal_equal(const Ideal& a, const Ideal& b);

}  // namespace frobsing

#endif
