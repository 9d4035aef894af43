#include "frobsing/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <unordered_map>

#include "frobsing/budget.hpp"
#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

void require_ring(const RingPtr& ring) {
    if (!ring) throw Error("operation on a polynomial without ring context");
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    require_ring(a.ring());
    require_ring(b.ring());
    if (!compatible(a.ring(), b.ring())) {
        throw Error("polynomials from different rings");
    }
}

using TermMap = std::map<Monomial, std::uint32_t, GrlexGreater>;

Polynomial build_from_map(const RingPtr& ring, const TermMap& acc) {
    std::vector<std::pair<Monomial, std::uint32_t>> terms;
    terms.reserve(acc.size());
    for (const auto& [m, c] : acc) {
        if (c != 0) terms.emplace_back(m, c);
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Polynomial Polynomial::constant(const RingPtr& ring, std::uint64_t c) {
    require_ring(ring);
    std::uint32_t r = ring->field().reduce_u(c);
    Polynomial f(ring);
    if (r != 0) f.terms_.push_back({Monomial(ring->arity()), r});
    return f;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
    require_ring(ring);
    if (index >= ring->arity()) throw Error("variable index out of range");
    std::vector<std::uint32_t> e(ring->arity(), 0);
    e[index] = 1;
    Polynomial f(ring);
    f.terms_.push_back({Monomial(std::move(e)), 1 % ring->characteristic()});
    if (f.terms_.back().coeff == 0) f.terms_.clear();  // impossible for prime p, kept for form
    return f;
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, std::uint64_t c) {
    require_ring(ring);
    if (m.arity() != ring->arity()) throw Error("monomial arity mismatch");
    std::uint32_t r = ring->field().reduce_u(c);
    Polynomial f(ring);
    if (r != 0) f.terms_.push_back({std::move(m), r});
    return f;
}

Polynomial Polynomial::from_terms(const RingPtr& ring,
                                  std::vector<std::pair<Monomial, std::uint32_t>> terms) {
    require_ring(ring);
    const PrimeField& k = ring->field();
    TermMap acc;
    for (auto& [m, c] : terms) {
        if (m.arity() != ring->arity()) throw Error("monomial arity mismatch");
        std::uint32_t r = c % k.p();
        if (r == 0) continue;
        auto [it, fresh] = acc.emplace(std::move(m), r);
        if (!fresh) {
            it->second = k.add(it->second, r);
            if (it->second == 0) acc.erase(it);
        }
    }
    Polynomial f(ring);
    f.terms_.reserve(acc.size());
    for (const auto& [m, c] : acc) f.terms_.push_back({m, c});
    return f;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    if (terms_.empty()) throw Error("degree of zero polynomial");
    return terms_.front().mono.total_degree();
}

std::uint64_t Polynomial::min_total_degree() const {
    if (terms_.empty()) throw Error("degree of zero polynomial");
    return terms_.back().mono.total_degree();
}

bool Polynomial::in_maximal_ideal() const {
    return terms_.empty() || terms_.back().mono.total_degree() > 0;
}

Polynomial Polynomial::operator-() const {
    require_ring(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, ring_->field().neg(t.coeff)});
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*this, o);
    const PrimeField& k = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::cmp_grlex(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            std::uint32_t s = k.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*this, o);
    const PrimeField& k = ring_->field();
    TermMap acc;
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            std::uint32_t c = k.mul(a.coeff, b.coeff);
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) {
                it->second = k.add(it->second, c);
                if (it->second == 0) acc.erase(it);
            }
        }
        if (acc.size() > budgets().dimension) {
            throw BudgetError("product term count exceeds budget", acc.size(),
                              budgets().dimension);
        }
    }
    return build_from_map(ring_, acc);
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    require_ring(ring_);
    const PrimeField& k = ring_->field();
    std::uint32_t r = c % k.p();
    Polynomial out(ring_);
    if (r == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mono, k.mul(t.coeff, r)});
    return out;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
    require_ring(ring_);
    Polynomial acc = Polynomial::constant(ring_, 1);
    if (k == 0) return acc;
    Polynomial base = *this;
    while (true) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k == 0) break;
        base = base * base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!compatible(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) out += " + ";
        const Term& t = terms_[i];
        bool trivial_mono = t.mono.is_one();
        bool printed = false;
        if (t.coeff != 1 || trivial_mono) {
            out += std::to_string(t.coeff);
            printed = true;
        }
        for (std::size_t v = 0; v < t.mono.arity(); ++v) {
            if (t.mono[v] == 0) continue;
            if (printed) out += "*";
            out += ring_->vars()[v];
            if (t.mono[v] > 1) out += "^" + std::to_string(t.mono[v]);
            printed = true;
        }
    }
    return out;
}

bool is_p_power(std::uint64_t q, std::uint32_t p) {
    if (q == 0) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

std::uint64_t checked_p_power(std::uint32_t p, int e) {
    if (e < 0) throw Error("negative Frobenius level");
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > Monomial::kMaxExponent) {
            throw SizingError("p^e exceeds the exponent cap 2^31 at level e=" +
                              std::to_string(e));
        }
    }
    return q;
}

Polynomial frobenius_power(const Polynomial& f, std::uint64_t q) {
    require_ring(f.ring());
    const PrimeField& k = f.ring()->field();
    if (!is_p_power(q, k.p())) throw Error("q is not a power of the characteristic");
    Polynomial r(f.ring());
    r.terms_.reserve(f.terms_.size());
    for (const Polynomial::Term& t : f.terms_) {
        std::vector<std::uint32_t> e(t.mono.arity());
        for (std::size_t i = 0; i < e.size(); ++i) {
            std::uint64_t prod = q * static_cast<std::uint64_t>(t.mono[i]);
            if (prod > Monomial::kMaxExponent) {
                throw SizingError("Frobenius power exponent exceeds 2^31");
            }
            e[i] = static_cast<std::uint32_t>(prod);
        }
        r.terms_.push_back({Monomial(std::move(e)), k.pow(t.coeff, q)});
    }
    // Termwise q-th powers of distinct monomials stay distinct and keep their
    // relative graded-lex order, so the term vector is already canonical.
    return r;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t index) {
    require_ring(f.ring());
    if (index >= f.ring()->arity()) throw Error("derivative variable out of range");
    const PrimeField& k = f.ring()->field();
    std::vector<std::pair<Monomial, std::uint32_t>> terms;
    for (const Polynomial::Term& t : f.terms_) {
        std::uint32_t e = t.mono[index];
        if (e == 0) continue;
        std::uint32_t c = k.mul(t.coeff, k.reduce_u(e));
        if (c == 0) continue;
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps[index] = e - 1;
        terms.emplace_back(Monomial(std::move(exps)), c);
    }
    return Polynomial::from_terms(f.ring(), std::move(terms));
}

InitialForm initial_form(const Polynomial& f) {
    if (f.is_zero()) throw Error("initial form of zero polynomial");
    std::uint64_t n = f.min_total_degree();
    Polynomial form(f.ring());
    std::vector<std::pair<Monomial, std::uint32_t>> keep;
    for (const Polynomial::Term& t : f.terms()) {
        if (t.mono.total_degree() == n) keep.emplace_back(t.mono, t.coeff);
    }
    return {n, Polynomial::from_terms(f.ring(), std::move(keep))};
}

Polynomial truncate_bracket(const Polynomial& f, std::uint64_t q) {
    require_ring(f.ring());
    Polynomial r(f.ring());
    r.terms_.reserve(f.terms_.size());
    for (const Polynomial::Term& t : f.terms_) {
        if (!t.mono.in_bracket(q)) r.terms_.push_back(t);
    }
    return r;
}

namespace {

// Truncated product with survivors accumulated under packed 64-bit keys when
// the exponent window q^d fits, falling back to an ordered map otherwise.
Polynomial mul_bracket_impl(const Polynomial& a, const Polynomial& b, std::uint64_t q) {
    const RingPtr& ring = a.ring();
    const PrimeField& field = ring->field();
    const std::size_t d = ring->arity();
    const std::uint64_t p = field.p();

    const int bits = std::bit_width(q > 1 ? q - 1 : std::uint64_t{1});
    const bool packable = static_cast<std::size_t>(bits) * d <= 64;

    const auto& small = a.term_count() <= b.term_count() ? a : b;
    const auto& large = a.term_count() <= b.term_count() ? b : a;

    if (packable) {
        std::unordered_map<std::uint64_t, std::uint32_t> acc;
        acc.reserve(large.term_count() * 2);
        for (const auto& ta : large.terms()) {
            for (const auto& tb : small.terms()) {
                bool dead = false;
                std::uint64_t key = 0;
                for (std::size_t i = 0; i < d; ++i) {
                    std::uint64_t s =
                        static_cast<std::uint64_t>(ta.mono[i]) + tb.mono[i];
                    if (s >= q) {
                        dead = true;
                        break;
                    }
                    key = (key << bits) | s;
                }
                if (dead) continue;
                std::uint64_t c = static_cast<std::uint64_t>(ta.coeff) * tb.coeff % p;
                auto [it, fresh] = acc.emplace(key, static_cast<std::uint32_t>(c));
                if (!fresh) {
                    std::uint64_t t = it->second + c;
                    it->second = static_cast<std::uint32_t>(t >= p ? t - p : t);
                }
            }
            if (acc.size() > budgets().dimension) {
                throw BudgetError("truncated product exceeds dimension budget", acc.size(),
                                  budgets().dimension);
            }
        }
        std::vector<std::pair<Monomial, std::uint32_t>> terms;
        terms.reserve(acc.size());
        const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
        for (const auto& [key, c] : acc) {
            if (c == 0) continue;
            std::vector<std::uint32_t> e(d);
            std::uint64_t k = key;
            for (std::size_t i = d; i-- > 0;) {
                e[i] = static_cast<std::uint32_t>(k & mask);
                k >>= bits;
            }
            terms.emplace_back(Monomial(std::move(e)), c);
        }
        return Polynomial::from_terms(ring, std::move(terms));
    }

    TermMap acc;
    for (const auto& ta : large.terms()) {
        for (const auto& tb : small.terms()) {
            Monomial m = ta.mono * tb.mono;
            if (m.in_bracket(q)) continue;
            std::uint32_t c = field.mul(ta.coeff, tb.coeff);
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) {
                it->second = field.add(it->second, c);
                if (it->second == 0) acc.erase(it);
            }
        }
        if (acc.size() > budgets().dimension) {
            throw BudgetError("truncated product exceeds dimension budget", acc.size(),
                              budgets().dimension);
        }
    }
    return build_from_map(ring, acc);
}

}  // namespace

Polynomial mul_bracket(const Polynomial& a, const Polynomial& b, std::uint64_t q) {
    require_same_ring(a, b);
    if (q == 0) throw Error("bracket level q must be positive");
    return mul_bracket_impl(truncate_bracket(a, q), truncate_bracket(b, q), q);
}

Polynomial pow_mod_bracket(const Polynomial& f, std::uint64_t k, std::uint64_t q) {
    require_ring(f.ring());
    if (!is_p_power(q, f.ring()->characteristic())) {
        throw Error("q is not a power of the characteristic");
    }
    Polynomial acc = truncate_bracket(Polynomial::constant(f.ring(), 1), q);
    if (k == 0) return acc;
    Polynomial base = truncate_bracket(f, q);
    while (true) {
        if (k & 1) acc = mul_bracket_impl(acc, base, q);
        k >>= 1;
        if (k == 0) break;
        base = mul_bracket_impl(base, base, q);
    }
    return acc;
}

std::optional<Polynomial> divide_exact(const Polynomial& numerator, const Polynomial& divisor) {
    require_same_ring(numerator, divisor);
    if (divisor.is_zero()) throw Error("division by zero polynomial");
    const PrimeField& k = numerator.ring()->field();
    const Polynomial::Term& dl = divisor.leading_term();
    const std::uint32_t dl_inv = k.inv(dl.coeff);

    TermMap work;
    for (const auto& t : numerator.terms()) work.emplace(t.mono, t.coeff);
    std::vector<std::pair<Monomial, std::uint32_t>> quotient;

    while (!work.empty()) {
        auto lead = work.begin();
        if (!dl.mono.divides(lead->first)) return std::nullopt;
        Monomial shift = dl.mono.quotient_of(lead->first);
        std::uint32_t c = k.mul(lead->second, dl_inv);
        quotient.emplace_back(shift, c);
        for (const auto& t : divisor.terms()) {
            Monomial m = t.mono * shift;
            std::uint32_t delta = k.mul(t.coeff, c);
            auto it = work.find(m);
            if (it == work.end()) {
                work.emplace(std::move(m), k.neg(delta));
            } else {
                it->second = k.sub(it->second, delta);
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return Polynomial::from_terms(numerator.ring(), std::move(quotient));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.str(); }

}  // namespace frobsing
