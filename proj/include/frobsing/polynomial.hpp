#ifndef FROBSING_POLYNOMIAL_HPP
#define FROBSING_POLYNOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frobsing/monomial.hpp"
#include "frobsing/ring.hpp"

namespace frobsing {

/// Sparse multivariate polynomial over a prime field.
///
/// Terms are kept in descending graded-lexicographic order with nonzero
/// coefficients in [1, p); this canonical form backs equality and printing.
/// Values are immutable in spirit: every operation returns a fresh value and
/// instances may be shared freely across threads.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        std::uint32_t coeff;
    };

    Polynomial() = default;  // null polynomial without a ring; only for containers
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(const RingPtr& ring, std::uint64_t c);
    static Polynomial variable(const RingPtr& ring, std::size_t index);
    static Polynomial monomial(const RingPtr& ring, Monomial m, std::uint64_t c);
    /// From arbitrary (monomial, coefficient) data; merges and canonicalizes.
    static Polynomial from_terms(const RingPtr& ring,
                                 std::vector<std::pair<Monomial, std::uint32_t>> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Leading data under the canonical (graded lex) order; f must be nonzero.
    const Term& leading_term() const;

    std::uint64_t total_degree() const;      // max over terms; f nonzero
    std::uint64_t min_total_degree() const;  // min over terms; f nonzero

    /// True iff the constant coefficient vanishes (f lies in the maximal ideal).
    bool in_maximal_ideal() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(std::uint32_t c) const;

    /// Plain k-th power (no truncation), binary powering.
    Polynomial pow(std::uint64_t k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical text form; parses back to the same value.
    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    friend Polynomial frobenius_power(const Polynomial&, std::uint64_t);
    friend Polynomial partial_derivative(const Polynomial&, std::size_t);
    friend Polynomial truncate_bracket(const Polynomial&, std::uint64_t);
};

/// q = p^e for some e >= 0?
bool is_p_power(std::uint64_t q, std::uint32_t p);

/// p^e, throwing SizingError once exponents of level q become unrepresentable.
std::uint64_t checked_p_power(std::uint32_t p, int e);

/// f^q for q = p^e, computed termwise: sum of c^q x^{q a}. Valid because the
/// q-power map is additive in characteristic p.
Polynomial frobenius_power(const Polynomial& f, std::uint64_t q);

/// Formal partial derivative with respect to variable `index`.
Polynomial partial_derivative(const Polynomial& f, std::size_t index);

struct InitialForm {
    std::uint64_t degree;  // multiplicity: minimal total degree
    Polynomial form;       // sum of the terms of that degree
};

/// Lowest-degree homogeneous part; f must be nonzero.
InitialForm initial_form(const Polynomial& f);

/// Drops every term with some exponent >= q (reduction modulo the bracket
/// power (x_1^q,...,x_d^q) of the maximal ideal, in the monomial basis).
Polynomial truncate_bracket(const Polynomial& f, std::uint64_t q);

/// Product reduced modulo (x_1^q,...,x_d^q): terms are discarded as soon as
/// any exponent reaches q, which keeps intermediates inside the q^d window.
Polynomial mul_bracket(const Polynomial& a, const Polynomial& b, std::uint64_t q);

/// f^k modulo (x_1^q,...,x_d^q) by square-and-multiply over mul_bracket.
/// Every stored exponent of the result is < q.
Polynomial pow_mod_bracket(const Polynomial& f, std::uint64_t k, std::uint64_t q);

/// Quotient when divisor divides numerator exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& numerator, const Polynomial& divisor);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace frobsing

#endif
