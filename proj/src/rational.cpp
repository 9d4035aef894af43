#include "frobsing/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

std::int64_t narrow(__int128 v, const char* op) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw SizingError(std::string("rational ") + op + " overflows 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    auto to_int = [&](const std::string& s) {
        if (s.empty()) throw ParseError("empty rational component", 0);
        char* end = nullptr;
        long long v = std::strtoll(s.c_str(), &end, 10);
        if (end != s.c_str() + s.size()) {
            throw ParseError("bad rational '" + text + "'",
                             static_cast<std::size_t>(end - s.c_str()));
        }
        return static_cast<std::int64_t>(v);
    };
    if (slash == std::string::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    // Reduce in 128 bits before narrowing so mid-sized inputs survive.
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
        __int128 r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    return Rational(narrow(n, "add"), narrow(d, "add"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
        __int128 r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    return Rational(narrow(n, "mul"), narrow(d, "mul"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw Error("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::pretty() const {
    if (den_ == 1) return std::to_string(num_);
    return str();
}

std::int64_t floor_scaled(const Rational& t, std::uint64_t m) {
    __int128 n = static_cast<__int128>(t.num()) * static_cast<__int128>(m);
    __int128 d = t.den();
    __int128 q = n / d;
    if (n % d != 0 && n < 0) --q;
    if (q > std::numeric_limits<std::int64_t>::max() ||
        q < std::numeric_limits<std::int64_t>::min()) {
        throw SizingError("scaled floor overflows 64 bits");
    }
    return static_cast<std::int64_t>(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

}  // namespace frobsing
