#ifndef FROBSING_MONOMIAL_HPP
#define FROBSING_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace frobsing {

/// Exponent vector of fixed arity. Entries stay below 2^31; additions are
/// checked and throw SizingError instead of wrapping.
class Monomial {
public:
    static constexpr std::uint32_t kMaxExponent = 0x7FFFFFFFu;

    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents);

    std::size_t arity() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t total_degree() const;
    bool is_one() const;

    /// Componentwise sum (monomial product); checked.
    Monomial operator*(const Monomial& o) const;

    bool divides(const Monomial& o) const;
    /// Componentwise difference; requires divides(o) for o/this.
    Monomial quotient_of(const Monomial& numerator) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// True when some exponent is >= q, i.e. the monomial lies in the
    /// bracket power (x_1^q, ..., x_d^q) of the maximal ideal.
    bool in_bracket(std::uint64_t q) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// Graded lexicographic comparison: total degree first, then lex.
    /// Returns <0, 0, >0.
    static int cmp_grlex(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> e_;
};

/// Strict-ordering functor: descending graded lex (canonical term order).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_grlex(a, b) > 0;
    }
};

}  // namespace frobsing

#endif
