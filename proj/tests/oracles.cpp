#include "oracles.hpp"

#include <algorithm>

#include "frobsing/errors.hpp"

namespace frobsing::oracles {

Polynomial pow_then_filter(const Polynomial& f, std::uint64_t k, std::uint64_t q) {
    Polynomial acc = Polynomial::constant(f.ring(), 1);
    for (std::uint64_t i = 0; i < k; ++i) acc = acc * f;
    return truncate_bracket(acc, q);
}

std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (k > n) return 0;
    // Factorials up to p-1.
    std::vector<std::uint64_t> fact(p);
    fact[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i) fact[i] = fact[i - 1] * i % p;
    auto small_binom = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (b > a) return 0;
        std::uint64_t num = fact[a];
        std::uint64_t den = fact[b] * fact[a - b] % p;
        // den^{p-2} mod p
        std::uint64_t inv = 1, base = den, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return num * inv % p;
    };
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        std::uint64_t nd = n % p, kd = k % p;
        result = result * small_binom(nd, kd) % p;
        if (result == 0) return 0;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t multinomial_mod(std::uint64_t n, const std::vector<std::uint64_t>& parts,
                              std::uint32_t p) {
    std::uint64_t sum = 0;
    for (std::uint64_t x : parts) sum += x;
    if (sum != n) return 0;
    std::uint64_t rest = n, result = 1;
    for (std::uint64_t x : parts) {
        result = result * binom_mod(rest, x, p) % p;
        if (result == 0) return 0;
        rest -= x;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint64_t nu_binomial(std::uint64_t a, std::uint64_t b, std::uint32_t p, int e) {
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    const std::uint64_t ka = (q - 1) / a, kb = (q - 1) / b;
    for (std::uint64_t j = ka + kb + 1; j-- > 0;) {
        std::uint64_t klo = j > kb ? j - kb : 0;
        std::uint64_t khi = std::min(j, ka);
        for (std::uint64_t k = klo; k <= khi; ++k) {
            if (binom_mod(j, k, p) != 0) return j;
        }
        if (j == 0) break;
    }
    return 0;
}

bool fermat_quartic_survives(std::uint32_t p, int e) {
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    const std::uint64_t k = q - 1;
    const std::uint64_t cap = (q - 1) / 4;  // exponent 4*a_i must stay below q
    for (std::uint64_t a = 0; a <= std::min(cap, k); ++a) {
        for (std::uint64_t b = 0; a + b <= k && b <= cap; ++b) {
            for (std::uint64_t c = 0; a + b + c <= k && c <= cap; ++c) {
                std::uint64_t d = k - a - b - c;
                if (d > cap) continue;
                if (multinomial_mod(k, {a, b, c, d}, p) != 0) return true;
            }
        }
    }
    return false;
}

bool negative_definite_charpoly(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t n = m.size();
    // Characteristic polynomial det(lambda*I - M) by permutation expansion of
    // linear-polynomial entries; fine for the small graphs this checks.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::int64_t> charpoly(n + 1, 0);
    do {
        // Sign of the permutation.
        int sign = 1;
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::size_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        // Product of entries (lambda*delta_{i,perm(i)} - m[i][perm(i)]).
        std::vector<std::int64_t> prod{1};
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t c0 = -m[i][perm[i]];
            std::int64_t c1 = i == perm[i] ? 1 : 0;
            std::vector<std::int64_t> next(prod.size() + 1, 0);
            for (std::size_t t = 0; t < prod.size(); ++t) {
                next[t] += prod[t] * c0;
                next[t + 1] += prod[t] * c1;
            }
            prod = std::move(next);
        }
        for (std::size_t t = 0; t < prod.size(); ++t) charpoly[t] += sign * prod[t];
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Symmetric => real spectrum; all roots negative iff all coefficients of
    // the monic polynomial are strictly positive.
    for (std::int64_t c : charpoly) {
        if (c <= 0) return false;
    }
    return true;
}

Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms,
                       std::uint32_t max_exp, bool force_in_m) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
    std::uniform_int_distribution<std::uint32_t> coeffd(0, ring->characteristic() - 1);
    std::vector<std::pair<Monomial, std::uint32_t>> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<std::uint32_t> e(ring->arity());
        for (auto& x : e) x = expd(rng);
        if (force_in_m) {
            bool all_zero = std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
            if (all_zero) e[0] = 1;
        }
        terms.emplace_back(Monomial(std::move(e)), coeffd(rng));
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

bool ideals_agree(const Ideal& a, const Ideal& b, int probes, std::mt19937& rng) {
    GroebnerBasis ga = groebner(a, MonomialOrder::grevlex());
    GroebnerBasis gb = groebner(b, MonomialOrder::grevlex());
    for (const Polynomial& g : a.generators()) {
        if (!ideal_member(g, gb)) return false;
    }
    for (const Polynomial& g : b.generators()) {
        if (!ideal_member(g, ga)) return false;
    }
    for (int i = 0; i < probes; ++i) {
        Polynomial probe = random_poly(a.ring(), rng, 4, 6);
        if (ideal_member(probe, ga) != ideal_member(probe, gb)) return false;
    }
    return true;
}

}  // namespace frobsing::oracles
