#ifndef FROBSING_RATIONAL_HPP
#define FROBSING_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace frobsing {

/// Exact rational number: reduced fraction with positive denominator.
/// Components are 64-bit; every operation checks for overflow and throws
/// SizingError rather than wrapping. No floating point is involved anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "a", "-a", "a/b" or "-a/b" with decimal integers.
    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Largest integer <= this.
    std::int64_t floor() const;

    /// "num/den" with den always present, e.g. "5/6", "-1/3", "2/1".
    std::string str() const;

    /// Display form that drops the "/1" on integers.
    std::string pretty() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Exact floor(t * m) for nonnegative m.
std::int64_t floor_scaled(const Rational& t, std::uint64_t m);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace frobsing

#endif
