#ifndef FROBSING_PRIME_FIELD_HPP
#define FROBSING_PRIME_FIELD_HPP

#include <cstdint>

namespace frobsing {

/// Deterministic primality test for 2 <= n < 2^31 (trial division).
bool is_prime(std::uint32_t n);

/// Arithmetic in F_p for a machine-word prime 2 <= p < 2^31.
/// Elements are residues in [0, p); products go through 64 bits before
/// reduction, so no wrap can occur.
class PrimeField {
public:
    /// Throws Error unless p is prime and below 2^31.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : static_cast<std::uint32_t>(a + static_cast<std::uint64_t>(p_) - b);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }

    /// a^e by binary powering; 0^0 = 1.
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Multiplicative inverse; a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const;

    /// Residue of an arbitrary signed value.
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t reduce_u(std::uint64_t v) const { return static_cast<std::uint32_t>(v % p_); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

}  // namespace frobsing

#endif
