#include "frobsing/ideal.hpp"

#include <algorithm>

#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

// Display order: by leading monomial, then term count; deterministic.
bool display_less(const Polynomial& a, const Polynomial& b) {
    int c = Monomial::cmp_grlex(a.leading_term().mono, b.leading_term().mono);
    if (c != 0) return c < 0;
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return a.str() < b.str();
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    if (!ring_) throw Error("ideal without ring context");
    for (auto& g : generators) {
        if (!g.ring()) throw Error("ideal generator without ring context");
        if (!compatible(g.ring(), ring_)) throw Error("ideal generator from a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    if (gens_.empty()) throw Error("ideal needs a nonzero generator");
    std::sort(gens_.begin(), gens_.end(), display_less);
}

Ideal bracket_power(const Ideal& ideal, std::uint64_t q) {
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generator_count());
    for (const Polynomial& g : ideal.generators()) gens.push_back(frobenius_power(g, q));
    return Ideal(ideal.ring(), std::move(gens));
}

Ideal max_bracket_ideal(const RingPtr& ring, std::uint64_t q) {
    if (q > Monomial::kMaxExponent) throw SizingError("bracket level exceeds exponent cap");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->arity(); ++i) {
        std::vector<std::uint32_t> e(ring->arity(), 0);
        e[i] = static_cast<std::uint32_t>(q);
        gens.push_back(Polynomial::monomial(ring, Monomial(std::move(e)), 1));
    }
    return Ideal(ring, std::move(gens));
}

bool in_bracket_max(const Polynomial& f, std::uint64_t q) {
    for (const Polynomial::Term& t : f.terms()) {
        if (!t.mono.in_bracket(q)) return false;
    }
    return true;
}

}  // namespace frobsing
