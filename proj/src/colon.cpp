#include "frobsing/colon.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobsing/budget.hpp"
#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

// Monomials with all entries < q, identified with the mixed-radix index
// sum_i a_i q^i. Decoding is cheap enough to compare through.
struct RadixCodec {
    std::uint64_t q;
    std::size_t d;

    std::uint64_t encode(const std::vector<std::uint32_t>& e) const {
        std::uint64_t idx = 0;
        for (std::size_t i = d; i-- > 0;) idx = idx * q + e[i];
        return idx;
    }
    void decode(std::uint64_t idx, std::vector<std::uint32_t>& out) const {
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = static_cast<std::uint32_t>(idx % q);
            idx /= q;
        }
    }
    int cmp_grlex(std::uint64_t x, std::uint64_t y) const {
        std::vector<std::uint32_t> a(d), b(d);
        decode(x, a);
        decode(y, b);
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < d; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
};

struct ColEntry {
    std::uint64_t row;
    std::uint32_t coeff;
};

using Column = std::vector<ColEntry>;                              // sorted desc grlex
using Tracker = std::unordered_map<std::uint64_t, std::uint32_t>;  // source combo

// out = col - c * pivot, with pivot monic and sharing col's leading row.
Column subtract_pivot(const Column& col, const Column& pivot, std::uint32_t c,
                      const PrimeField& field, const RadixCodec& codec) {
    Column out;
    out.reserve(col.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() && j < pivot.size()) {
        int cmp = codec.cmp_grlex(col[i].row, pivot[j].row);
        if (cmp > 0) {
            out.push_back(col[i++]);
        } else if (cmp < 0) {
            std::uint32_t v = field.neg(field.mul(pivot[j].coeff, c));
            if (v != 0) out.push_back({pivot[j].row, v});
            ++j;
        } else {
            std::uint32_t v = field.sub(col[i].coeff, field.mul(pivot[j].coeff, c));
            if (v != 0) out.push_back({col[i].row, v});
            ++i;
            ++j;
        }
    }
    for (; i < col.size(); ++i) out.push_back(col[i]);
    for (; j < pivot.size(); ++j) {
        std::uint32_t v = field.neg(field.mul(pivot[j].coeff, c));
        if (v != 0) out.push_back({pivot[j].row, v});
    }
    return out;
}

void subtract_tracker(Tracker& t, const Tracker& pivot, std::uint32_t c,
                      const PrimeField& field) {
    for (const auto& [src, v] : pivot) {
        std::uint32_t delta = field.mul(v, c);
        auto it = t.find(src);
        if (it == t.end()) {
            if (delta != 0) t.emplace(src, field.neg(delta));
        } else {
            it->second = field.sub(it->second, delta);
            if (it->second == 0) t.erase(it);
        }
    }
}

std::string pick_aux_name(const RingPtr& ring) {
    std::string name = "t_aux";
    int suffix = 0;
    while (ring->var_index(name) >= 0) name = "t_aux" + std::to_string(++suffix);
    return name;
}

RingPtr aux_first_ring(const RingPtr& ring) {
    std::vector<std::string> vars;
    vars.reserve(ring->arity() + 1);
    vars.push_back(pick_aux_name(ring));
    for (const auto& v : ring->vars()) vars.push_back(v);
    return make_ring(ring->characteristic(), std::move(vars));
}

Polynomial lift_with_aux(const RingPtr& aux_ring, const Polynomial& f) {
    std::vector<std::pair<Monomial, std::uint32_t>> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e;
        e.reserve(t.mono.arity() + 1);
        e.push_back(0);
        for (std::size_t i = 0; i < t.mono.arity(); ++i) e.push_back(t.mono[i]);
        terms.emplace_back(Monomial(std::move(e)), t.coeff);
    }
    return Polynomial::from_terms(aux_ring, std::move(terms));
}

bool aux_free(const Polynomial& f) {
    for (const auto& t : f.terms()) {
        if (t.mono[0] != 0) return false;
    }
    return true;
}

Polynomial drop_aux(const RingPtr& ring, const Polynomial& f) {
    std::vector<std::pair<Monomial, std::uint32_t>> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e;
        e.reserve(t.mono.arity() - 1);
        for (std::size_t i = 1; i < t.mono.arity(); ++i) e.push_back(t.mono[i]);
        terms.emplace_back(Monomial(std::move(e)), t.coeff);
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

// Elements of (t*A + (1-t)*B) free of t generate A ∩ B.
std::vector<Polynomial> intersection_generators(const RingPtr& ring,
                                                const std::vector<Polynomial>& a,
                                                const std::vector<Polynomial>& b) {
    RingPtr aux_ring = aux_first_ring(ring);
    Polynomial aux = Polynomial::variable(aux_ring, 0);
    Polynomial one = Polynomial::constant(aux_ring, 1);
    std::vector<Polynomial> gens;
    gens.reserve(a.size() + b.size());
    for (const Polynomial& f : a) gens.push_back(aux * lift_with_aux(aux_ring, f));
    for (const Polynomial& g : b) gens.push_back((aux - one) * lift_with_aux(aux_ring, g));
    GroebnerBasis gb = groebner(Ideal(aux_ring, std::move(gens)), MonomialOrder::elim(1));
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb.elements()) {
        if (aux_free(g)) out.push_back(drop_aux(ring, g));
    }
    return out;
}

// (I : u) for a single nonzero u.
std::vector<Polynomial> colon_by_element(const Ideal& ideal, const Polynomial& u) {
    // Principal numerator with exact divisibility needs no elimination.
    if (ideal.generator_count() == 1) {
        if (auto quot = divide_exact(ideal.generators()[0], u)) return {*quot};
    }
    std::vector<Polynomial> inter =
        intersection_generators(ideal.ring(), ideal.generators(), {u});
    if (inter.empty()) throw Error("internal: empty intersection in colon computation");
    std::vector<Polynomial> out;
    out.reserve(inter.size());
    for (const Polynomial& g : inter) {
        auto quot = divide_exact(g, u);
        if (!quot) throw Error("internal: intersection element not divisible in colon");
        out.push_back(*quot);
    }
    return out;
}

}  // namespace

Ideal colon_artinian(const RingPtr& ring, std::uint64_t q, const Polynomial& h) {
    if (!ring) throw Error("colon without ring context");
    if (q == 0 || !is_p_power(q, ring->characteristic())) {
        throw Error("bracket level must be a power of the characteristic");
    }
    const std::size_t d = ring->arity();
    const PrimeField& field = ring->field();

    // Quotient dimension q^d against the budget.
    __int128 dim128 = 1;
    for (std::size_t i = 0; i < d; ++i) {
        dim128 *= static_cast<__int128>(q);
        if (dim128 > static_cast<__int128>(budgets().dimension)) {
            std::uint64_t req = dim128 > static_cast<__int128>(~std::uint64_t{0})
                                    ? ~std::uint64_t{0}
                                    : static_cast<std::uint64_t>(dim128);
            throw BudgetError("Artinian colon dimension exceeds budget", req,
                              budgets().dimension);
        }
    }
    const std::uint64_t dim = static_cast<std::uint64_t>(dim128);
    const RadixCodec codec{q, d};

    Polynomial ht = truncate_bracket(h, q);

    // Source monomials in ascending graded-lex order, so kernel trackers come
    // out in echelon form with the current source as leading monomial.
    std::vector<std::uint64_t> sources(dim);
    for (std::uint64_t i = 0; i < dim; ++i) sources[i] = i;
    std::sort(sources.begin(), sources.end(),
              [&](std::uint64_t x, std::uint64_t y) { return codec.cmp_grlex(x, y) < 0; });

    std::unordered_map<std::uint64_t, std::size_t> pivot_of_row;
    std::vector<Column> pivot_cols;
    std::vector<Tracker> pivot_trks;
    std::vector<Tracker> kernels;
    std::uint64_t stored_entries = 0;
    const std::uint64_t fill_limit = budgets().dimension * 8;

    std::vector<std::uint32_t> src_exp(d), tgt_exp(d);
    for (std::uint64_t src : sources) {
        codec.decode(src, src_exp);
        Column col;
        col.reserve(ht.term_count());
        for (const auto& t : ht.terms()) {
            bool dead = false;
            for (std::size_t i = 0; i < d; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(src_exp[i]) + t.mono[i];
                if (s >= q) {
                    dead = true;
                    break;
                }
                tgt_exp[i] = static_cast<std::uint32_t>(s);
            }
            if (!dead) col.push_back({codec.encode(tgt_exp), t.coeff});
        }
        std::sort(col.begin(), col.end(), [&](const ColEntry& x, const ColEntry& y) {
            return codec.cmp_grlex(x.row, y.row) > 0;
        });

        Tracker trk;
        trk.emplace(src, 1u);
        while (!col.empty()) {
            auto it = pivot_of_row.find(col.front().row);
            if (it == pivot_of_row.end()) break;
            std::uint32_t c = col.front().coeff;
            col = subtract_pivot(col, pivot_cols[it->second], c, field, codec);
            subtract_tracker(trk, pivot_trks[it->second], c, field);
        }
        if (col.empty()) {
            kernels.push_back(std::move(trk));
        } else {
            std::uint32_t inv = field.inv(col.front().coeff);
            if (inv != 1) {
                for (auto& e : col) e.coeff = field.mul(e.coeff, inv);
                for (auto& [s, v] : trk) v = field.mul(v, inv);
            }
            stored_entries += col.size() + trk.size();
            if (stored_entries > fill_limit) {
                throw BudgetError("Artinian colon fill-in exceeds budget", stored_entries,
                                  fill_limit);
            }
            pivot_of_row.emplace(col.front().row, pivot_cols.size());
            pivot_cols.push_back(std::move(col));
            pivot_trks.push_back(std::move(trk));
        }
    }

    // Kernel elements as polynomials, echelon by construction.
    std::vector<Polynomial> kernel_polys;
    kernel_polys.reserve(kernels.size());
    for (const Tracker& trk : kernels) {
        std::vector<std::pair<Monomial, std::uint32_t>> terms;
        terms.reserve(trk.size());
        std::vector<std::uint32_t> e(d);
        for (const auto& [s, c] : trk) {
            codec.decode(s, e);
            terms.emplace_back(Monomial(e), c);
        }
        kernel_polys.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    std::sort(kernel_polys.begin(), kernel_polys.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  return Monomial::cmp_grlex(a.leading_term().mono, b.leading_term().mono) < 0;
              });

    // Heads are distinct and every exponent is < q, so dropping elements whose
    // head another kept head divides leaves a basis of the same ideal.
    std::vector<Polynomial> gens = max_bracket_ideal(ring, q).generators();
    std::vector<Monomial> kept_heads;
    for (Polynomial& kp : kernel_polys) {
        const Monomial& head = kp.leading_term().mono;
        bool dominated = false;
        for (const Monomial& m : kept_heads) {
            if (m.divides(head)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            kept_heads.push_back(head);
            gens.push_back(std::move(kp));
        }
    }
    return Ideal(ring, std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (!compatible(a.ring(), b.ring())) throw Error("intersection across rings");
    std::vector<Polynomial> gens =
        intersection_generators(a.ring(), a.generators(), b.generators());
    if (gens.empty()) throw Error("internal: empty ideal intersection");
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& ideal, const Ideal& by) {
    if (!compatible(ideal.ring(), by.ring())) throw Error("colon across rings");

    std::vector<Polynomial> acc = colon_by_element(ideal, by.generators()[0]);
    for (std::size_t i = 1; i < by.generator_count(); ++i) {
        std::vector<Polynomial> next = colon_by_element(ideal, by.generators()[i]);
        acc = intersection_generators(ideal.ring(), acc, next);
    }
    Ideal result(ideal.ring(), std::move(acc));

    // Definitional check: every generator must multiply every u of `by` into
    // the original ideal.
    GroebnerBasis gb = groebner(ideal, MonomialOrder::grevlex());
    for (const Polynomial& c : result.generators()) {
        for (const Polynomial& u : by.generators()) {
            if (!ideal_member(c * u, gb)) {
                throw Error("internal: colon verification failed");
            }
        }
    }
    return result;
}

namespace {

// All exponent vectors of the given arity and total degree, lexicographically.
void enumerate_degree(std::size_t d, std::uint64_t degree, std::vector<std::uint32_t>& cur,
                      std::size_t pos, std::vector<Monomial>& out) {
    if (pos + 1 == d) {
        if (degree > Monomial::kMaxExponent) throw SizingError("degree exceeds exponent cap");
        cur[pos] = static_cast<std::uint32_t>(degree);
        out.emplace_back(cur);
        return;
    }
    for (std::uint64_t e = 0; e <= degree; ++e) {
        cur[pos] = static_cast<std::uint32_t>(e);
        enumerate_degree(d, degree - e, cur, pos + 1, out);
    }
}

bool is_monomial_poly(const Polynomial& f) { return f.term_count() == 1; }

}  // namespace

MemberPowerResult homogeneous_member_power(const Ideal& ideal, std::size_t var_index,
                                           std::uint64_t cap) {
    const RingPtr& ring = ideal.ring();
    const std::size_t d = ring->arity();
    if (var_index >= d) throw Error("variable index out of range");
    const PrimeField& field = ring->field();

    for (const Polynomial& g : ideal.generators()) {
        std::uint64_t deg = g.total_degree();
        for (const auto& t : g.terms()) {
            if (t.mono.total_degree() != deg) {
                throw Error("homogeneous membership requires homogeneous generators");
            }
        }
    }

    // Monomial generators decide membership by divisibility alone.
    bool all_monomial = true;
    for (const Polynomial& g : ideal.generators()) all_monomial &= is_monomial_poly(g);
    if (all_monomial) {
        std::optional<std::uint64_t> best;
        for (const Polynomial& g : ideal.generators()) {
            const Monomial& m = g.leading_term().mono;
            bool pure = m[var_index] > 0 || m.is_one();
            for (std::size_t i = 0; i < d && pure; ++i) {
                if (i != var_index && m[i] != 0) pure = false;
            }
            if (pure) {
                std::uint64_t k = m[var_index];
                if (!best || k < *best) best = k;
            }
        }
        if (best && *best <= cap) return {best, cap};
        return {std::nullopt, cap};
    }

    for (std::uint64_t m = 0; m <= cap; ++m) {
        std::vector<Monomial> mons;
        std::vector<std::uint32_t> cur(d, 0);
        enumerate_degree(d, m, cur, 0, mons);
        if (mons.size() > 200000) {
            throw BudgetError("homogeneous membership degree too large", mons.size(), 200000);
        }
        std::vector<std::pair<Monomial, std::size_t>> index;
        index.reserve(mons.size());
        for (std::size_t i = 0; i < mons.size(); ++i) index.emplace_back(mons[i], i);
        std::sort(index.begin(), index.end(), [](const auto& a, const auto& b) {
            return Monomial::cmp_grlex(a.first, b.first) < 0;
        });
        auto locate = [&](const Monomial& mono) {
            auto it = std::lower_bound(index.begin(), index.end(), mono,
                                       [](const auto& a, const Monomial& key) {
                                           return Monomial::cmp_grlex(a.first, key) < 0;
                                       });
            return it->second;
        };

        // Incremental echelon form of the degree-m piece of the ideal.
        std::vector<std::vector<std::uint32_t>> pivots(mons.size());
        auto insert_row = [&](std::vector<std::uint32_t> row) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] == 0) continue;
                if (pivots[c].empty()) {
                    std::uint32_t inv = field.inv(row[c]);
                    for (auto& x : row) x = field.mul(x, inv);
                    pivots[c] = std::move(row);
                    return;
                }
                std::uint32_t factor = row[c];
                const auto& p = pivots[c];
                for (std::size_t k = c; k < row.size(); ++k) {
                    row[k] = field.sub(row[k], field.mul(p[k], factor));
                }
            }
        };

        for (const Polynomial& g : ideal.generators()) {
            std::uint64_t dg = g.total_degree();
            if (dg > m) continue;
            std::vector<Monomial> shifts;
            std::vector<std::uint32_t> buf(d, 0);
            enumerate_degree(d, m - dg, buf, 0, shifts);
            for (const Monomial& s : shifts) {
                std::vector<std::uint32_t> row(mons.size(), 0);
                for (const auto& t : g.terms()) {
                    row[locate(t.mono * s)] = field.add(row[locate(t.mono * s)], t.coeff);
                }
                insert_row(std::move(row));
            }
        }

        std::vector<std::uint32_t> target(mons.size(), 0);
        std::vector<std::uint32_t> te(d, 0);
        if (m > Monomial::kMaxExponent) throw SizingError("power exceeds exponent cap");
        te[var_index] = static_cast<std::uint32_t>(m);
        target[locate(Monomial(te))] = 1;
        // Reduce the target against the echelon rows.
        for (std::size_t c = 0; c < target.size(); ++c) {
            if (target[c] == 0 || pivots[c].empty()) continue;
            std::uint32_t factor = target[c];
            const auto& p = pivots[c];
            for (std::size_t k = c; k < target.size(); ++k) {
                target[k] = field.sub(target[k], field.mul(p[k], factor));
            }
        }
        bool member = std::all_of(target.begin(), target.end(),
                                  [](std::uint32_t x) { return x == 0; });
        if (member) return {m, cap};
    }
    return {std::nullopt, cap};
}

}  // namespace frobsing
