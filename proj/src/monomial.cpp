#include "frobsing/monomial.hpp"

#include <algorithm>

#include "frobsing/errors.hpp"

namespace frobsing {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {
    for (std::uint32_t x : e_) {
        if (x > kMaxExponent) throw SizingError("exponent exceeds 2^31");
    }
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t s = 0;
    for (std::uint32_t x : e_) s += x;
    return s;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(arity());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(e_[i]) + o.e_[i];
        if (s > kMaxExponent) throw SizingError("exponent sum exceeds 2^31");
        r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > o.e_[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    Monomial r(arity());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = numerator.e_[i] - e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::in_bracket(std::uint64_t q) const {
    for (std::uint32_t x : e_) {
        if (x >= q) return true;
    }
    return false;
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace frobsing
