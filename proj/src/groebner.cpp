#include "frobsing/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "frobsing/budget.hpp"
#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

int cmp_grevlex_span(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // bigger tail exponent is smaller
    }
    return 0;
}

int cmp_under(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    switch (order.kind()) {
        case MonomialOrder::Kind::GrevLex:
            return cmp_grevlex_span(a, b, 0, a.arity());
        case MonomialOrder::Kind::Lex:
            for (std::size_t i = 0; i < a.arity(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
            return 0;
        case MonomialOrder::Kind::Elim: {
            std::size_t k = std::min(order.block(), a.arity());
            int c = cmp_grevlex_span(a, b, 0, k);
            if (c != 0) return c;
            return cmp_grevlex_span(a, b, k, a.arity());
        }
    }
    return 0;
}

struct OrderGreater {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_under(*order, a, b) > 0;
    }
};

using WorkPoly = std::map<Monomial, std::uint32_t, OrderGreater>;

WorkPoly to_work(const Polynomial& f, const MonomialOrder& order) {
    WorkPoly w(OrderGreater{&order});
    for (const auto& t : f.terms()) w.emplace(t.mono, t.coeff);
    return w;
}

Polynomial from_work(const RingPtr& ring, const WorkPoly& w) {
    std::vector<std::pair<Monomial, std::uint32_t>> terms;
    terms.reserve(w.size());
    for (const auto& [m, c] : w) terms.emplace_back(m, c);
    return Polynomial::from_terms(ring, std::move(terms));
}

WorkPoly shifted_copy(const WorkPoly& g, const Monomial& shift, const MonomialOrder& order) {
    WorkPoly out(OrderGreater{&order});
    for (const auto& [m, c] : g) out.emplace(m * shift, c);
    return out;
}

// work -= c * x^shift * g, in place.
void subtract_multiple(WorkPoly& work, const WorkPoly& g, const Monomial& shift,
                       std::uint32_t c, const PrimeField& field) {
    for (const auto& [m, gc] : g) {
        Monomial key = m * shift;
        std::uint32_t delta = field.mul(gc, c);
        auto it = work.find(key);
        if (it == work.end()) {
            if (delta != 0) work.emplace(std::move(key), field.neg(delta));
        } else {
            it->second = field.sub(it->second, delta);
            if (it->second == 0) work.erase(it);
        }
    }
}

struct BasisElement {
    WorkPoly poly;  // monic: leading coefficient 1
    Monomial head;
    BasisElement(WorkPoly p, Monomial h) : poly(std::move(p)), head(std::move(h)) {}
};

// Full reduction of `work` by the basis elements; irreducible terms migrate
// into `done` (which stays sorted by construction order of extraction).
WorkPoly reduce_full(WorkPoly work, const std::vector<BasisElement>& basis,
                     const MonomialOrder& order, const PrimeField& field) {
    WorkPoly done(OrderGreater{&order});
    while (!work.empty()) {
        auto lead = work.begin();
        const Monomial& m = lead->first;
        bool reduced = false;
        for (const BasisElement& b : basis) {
            if (b.head.divides(m)) {
                Monomial shift = b.head.quotient_of(m);
                subtract_multiple(work, b.poly, shift, lead->second, field);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            done.emplace(m, lead->second);
            work.erase(lead);
        }
    }
    return done;
}

void make_monic(WorkPoly& w, const PrimeField& field) {
    if (w.empty()) return;
    std::uint32_t lc = w.begin()->second;
    if (lc == 1) return;
    std::uint32_t inv = field.inv(lc);
    for (auto& [m, c] : w) c = field.mul(c, inv);
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    return cmp_under(*this, a, b) < 0;
}

Monomial GroebnerBasis::leading_monomial(std::size_t i) const {
    const Polynomial& g = elements_.at(i);
    const auto& terms = g.terms();
    std::size_t best = 0;
    for (std::size_t t = 1; t < terms.size(); ++t) {
        if (order_.less(terms[best].mono, terms[t].mono)) best = t;
    }
    return terms[best].mono;
}

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order) {
    const RingPtr& ring = ideal.ring();
    const PrimeField& field = ring->field();

    std::vector<BasisElement> basis;
    for (const Polynomial& g : ideal.generators()) {
        WorkPoly w = to_work(g, order);
        make_monic(w, field);
        Monomial head = w.begin()->first;
        basis.emplace_back(std::move(w), std::move(head));
    }

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});
    }

    std::uint64_t processed = 0;
    while (!pending.empty()) {
        if (++processed > budgets().groebner_pairs) {
            throw BudgetError("Buchberger pair limit exceeded", processed,
                              budgets().groebner_pairs);
        }
        // Normal strategy: smallest lcm under the working order.
        auto chosen = pending.begin();
        Monomial best_lcm = Monomial::lcm(basis[chosen->first].head, basis[chosen->second].head);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(basis[it->first].head, basis[it->second].head);
            if (order.less(l, best_lcm)) {
                best_lcm = l;
                chosen = it;
            }
        }
        auto [i, j] = *chosen;
        pending.erase(chosen);

        const Monomial& hi = basis[i].head;
        const Monomial& hj = basis[j].head;
        Monomial l = Monomial::lcm(hi, hj);

        // Product criterion: coprime heads reduce to zero.
        if (l.total_degree() == hi.total_degree() + hj.total_degree()) continue;

        // Chain criterion: some other head divides the lcm and both companion
        // pairs are already settled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].head.divides(l)) continue;
            auto key1 = std::minmax(i, k);
            auto key2 = std::minmax(j, k);
            if (pending.count({key1.first, key1.second}) == 0 &&
                pending.count({key2.first, key2.second}) == 0) {
                chained = true;
            }
        }
        if (chained) continue;

        // S-polynomial of two monic elements: x^{l-hi} g_i - x^{l-hj} g_j.
        WorkPoly s = shifted_copy(basis[i].poly, hi.quotient_of(l), order);
        for (const auto& [m, c] : shifted_copy(basis[j].poly, hj.quotient_of(l), order)) {
            auto it = s.find(m);
            if (it == s.end()) {
                s.emplace(m, field.neg(c));
            } else {
                it->second = field.sub(it->second, c);
                if (it->second == 0) s.erase(it);
            }
        }

        WorkPoly r = reduce_full(std::move(s), basis, order, field);
        if (r.empty()) continue;
        make_monic(r, field);
        Monomial head = r.begin()->first;
        basis.emplace_back(std::move(r), std::move(head));
        std::size_t n = basis.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // Minimalize: drop elements whose head another head divides.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < basis.size() && minimal; ++j) {
            if (i == j) continue;
            if (basis[j].head.divides(basis[i].head) &&
                (basis[j].head != basis[i].head || j < i)) {
                minimal = false;
            }
        }
        if (minimal) keep.push_back(i);
    }

    // Reduce each survivor fully against the other survivors.
    std::vector<BasisElement> minimal;
    minimal.reserve(keep.size());
    for (std::size_t idx : keep) minimal.push_back(basis[idx]);
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisElement> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        WorkPoly reduced = reduce_full(minimal[i].poly, others, order, field);
        make_monic(reduced, field);
        out.push_back(from_work(ring, reduced));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return Monomial::cmp_grlex(a.leading_term().mono, b.leading_term().mono) < 0;
    });
    return GroebnerBasis(order, ring, std::move(out));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (!compatible(f.ring(), basis.ring())) throw Error("normal form across rings");
    const MonomialOrder& order = basis.order();
    const PrimeField& field = basis.ring()->field();
    std::vector<BasisElement> elems;
    elems.reserve(basis.elements().size());
    for (std::size_t i = 0; i < basis.elements().size(); ++i) {
        WorkPoly w = to_work(basis.elements()[i], order);
        Monomial head = w.begin()->first;
        elems.emplace_back(std::move(w), std::move(head));
    }
    WorkPoly r = reduce_full(to_work(f, order), elems, order, field);
    return from_work(f.ring(), r);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.is_zero()) return true;
    return normal_form(f, basis).is_zero();
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
    if (f.is_zero()) return true;
    return ideal_member(f, groebner(ideal, MonomialOrder::grevlex()));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    GroebnerBasis ga = groebner(a, MonomialOrder::grevlex());
    GroebnerBasis gb = groebner(b, MonomialOrder::grevlex());
    for (const Polynomial& g : a.generators()) {
        if (!ideal_member(g, gb)) return false;
    }
    for (const Polynomial& g : b.generators()) {
        if (!ideal_member(g, ga)) return false;
    }
    return true;
}

}  // namespace frobsing
