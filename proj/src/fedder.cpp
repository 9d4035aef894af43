#include "frobsing/fedder.hpp"

#include <algorithm>

#include "frobsing/budget.hpp"
#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

Polynomial ci_product(const PairSpec& pair) {
    Polynomial prod = Polynomial::constant(pair.ring, 1);
    for (const Polynomial& f : pair.ci) prod = prod * f;
    return prod;
}

// (f_1...f_s)^{q-1} g^{r} reduced modulo the bracket power at level q.
Polynomial criterion_polynomial(const PairSpec& pair, const Polynomial& base,
                                std::uint64_t q, std::int64_t r) {
    Polynomial part = pow_mod_bracket(base, q - 1, q);
    if (pair.has_boundary() && r > 0) {
        Polynomial gpow = pow_mod_bracket(*pair.g, static_cast<std::uint64_t>(r), q);
        part = mul_bracket(part, gpow, q);
    }
    return part;
}

std::string level_reason(const char* what, int e, std::uint64_t q) {
    return std::string(what) + " at level e=" + std::to_string(e) +
           " (q=" + std::to_string(q) + ")";
}

}  // namespace

Level r_level(const Rational& t, int e, std::uint32_t p, Mode mode) {
    if (t < Rational(0)) throw Error("boundary coefficient t must be nonnegative");
    if (e < 1) throw Error("level e must be positive");
    std::uint64_t q = checked_p_power(p, e);
    std::int64_t r = mode == Mode::Weak ? floor_scaled(t, q - 1) : floor_scaled(t, q);
    return {e, q, r};
}

void PairSpec::validate() const {
    if (!ring) throw Error("pair without ring context");
    if (ci.size() > ring->arity()) {
        throw Error("more complete-intersection generators than variables");
    }
    for (const Polynomial& f : ci) {
        if (!compatible(f.ring(), ring)) throw Error("pair generator from a different ring");
        if (f.is_zero()) throw Error("zero complete-intersection generator");
        if (!f.in_maximal_ideal()) {
            throw Error("complete-intersection generator has a constant term");
        }
    }
    if (g.has_value()) {
        if (!compatible(g->ring(), ring)) throw Error("boundary element from a different ring");
        if (g->is_zero()) throw Error("boundary element is zero");
        if (!g->in_maximal_ideal()) throw Error("boundary element has a constant term");
    }
    if (t < Rational(0)) throw Error("boundary coefficient t must be nonnegative");
}

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Refuted: return "refuted";
        case VerdictKind::HoldsUpToLevel: return "holds_up_to_level";
        case VerdictKind::CertifiedPositive: return "certified_positive";
        case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict fpure_test_ci(const PairSpec& pair, int e_max) {
    pair.validate();
    if (e_max < 1) throw Error("e_max must be positive");
    const std::uint32_t p = pair.ring->characteristic();
    const Polynomial base = ci_product(pair);

    Verdict v;
    for (int e = 1; e <= e_max; ++e) {
        std::uint64_t q = 0;
        try {
            Level lvl = pair.has_boundary() ? r_level(pair.t, e, p, pair.mode)
                                            : Level{e, checked_p_power(p, e), 0};
            q = lvl.q;
            Polynomial crit = criterion_polynomial(pair, base, q, lvl.r);
            bool pass = !crit.is_zero();
            v.transcript.push_back({e, q, lvl.r, pass});
            if (!pass) {
                v.kind = VerdictKind::Refuted;
                v.level = e;
                v.reason = level_reason("criterion polynomial lies in the bracket power", e, q);
                return v;
            }
        } catch (const BudgetError& err) {
            v.kind = e == 1 ? VerdictKind::Inconclusive : VerdictKind::HoldsUpToLevel;
            v.level = e - 1;
            v.reason = std::string("budget exceeded: ") + err.what();
            v.budget_truncated = true;
            return v;
        } catch (const SizingError& err) {
            v.kind = e == 1 ? VerdictKind::Inconclusive : VerdictKind::HoldsUpToLevel;
            v.level = e - 1;
            v.reason = std::string("level out of range: ") + err.what();
            v.budget_truncated = true;
            return v;
        }
    }
    v.kind = VerdictKind::HoldsUpToLevel;
    v.level = e_max;
    v.reason = "criterion holds at every computed level";
    return v;
}

Verdict fpure_test_general(const Ideal& ideal, const std::optional<Polynomial>& g,
                           const Rational& t, Mode mode, int e_max) {
    if (e_max < 1) throw Error("e_max must be positive");
    const RingPtr& ring = ideal.ring();
    const std::uint32_t p = ring->characteristic();
    if (g.has_value()) {
        if (g->is_zero()) throw Error("boundary element is zero");
        if (ideal_member(*g, ideal)) throw Error("boundary element lies in the ideal");
    }
    if (t < Rational(0)) throw Error("boundary coefficient t must be nonnegative");

    Verdict v;
    for (int e = 1; e <= e_max; ++e) {
        try {
            Level lvl = g.has_value() ? r_level(t, e, p, mode)
                                      : Level{e, checked_p_power(p, e), 0};
            Ideal bracket = bracket_power(ideal, lvl.q);
            Ideal colon = ideal_colon(bracket, ideal);
            Polynomial gpow = g.has_value() && lvl.r > 0
                                  ? pow_mod_bracket(*g, static_cast<std::uint64_t>(lvl.r), lvl.q)
                                  : Polynomial::constant(ring, 1);
            bool pass = false;
            for (const Polynomial& c : colon.generators()) {
                if (!mul_bracket(gpow, c, lvl.q).is_zero()) {
                    pass = true;
                    break;
                }
            }
            v.transcript.push_back({e, lvl.q, lvl.r, pass});
            if (!pass) {
                v.kind = VerdictKind::Refuted;
                v.level = e;
                v.reason =
                    level_reason("g^r (I^[q]:I) is contained in the bracket power", e, lvl.q);
                return v;
            }
        } catch (const BudgetError& err) {
            v.kind = e == 1 ? VerdictKind::Inconclusive : VerdictKind::HoldsUpToLevel;
            v.level = e - 1;
            v.reason = std::string("budget exceeded: ") + err.what();
            v.budget_truncated = true;
            return v;
        } catch (const SizingError& err) {
            v.kind = e == 1 ? VerdictKind::Inconclusive : VerdictKind::HoldsUpToLevel;
            v.level = e - 1;
            v.reason = std::string("level out of range: ") + err.what();
            v.budget_truncated = true;
            return v;
        }
    }
    v.kind = VerdictKind::HoldsUpToLevel;
    v.level = e_max;
    v.reason = "criterion holds at every computed level";
    return v;
}

std::optional<Polynomial> default_witness(const PairSpec& pair) {
    pair.validate();
    const std::size_t s = pair.ci.size();
    const RingPtr& ring = pair.ring;
    if (s == 0) return Polynomial::constant(ring, 1);
    const std::size_t d = ring->arity();

    std::vector<std::vector<Polynomial>> jac(s, std::vector<Polynomial>(d));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < d; ++j) jac[i][j] = partial_derivative(pair.ci[i], j);
    }

    // Recursive determinant of the column-selected s x s submatrix.
    std::vector<std::size_t> cols(s);
    auto det = [&](auto&& self, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cs) -> Polynomial {
        if (rows.size() == 1) return jac[rows[0]][cs[0]];
        Polynomial acc = Polynomial::zero(ring);
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (jac[rows[0]][cs[k]].is_zero()) continue;
            std::vector<std::size_t> sub_cols;
            sub_cols.reserve(cs.size() - 1);
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (j != k) sub_cols.push_back(cs[j]);
            }
            Polynomial minor = self(self, sub_rows, sub_cols);
            Polynomial term = jac[rows[0]][cs[k]] * minor;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };

    Ideal ci_ideal(ring, pair.ci);
    GroebnerBasis gb = groebner(ci_ideal, MonomialOrder::grevlex());
    std::vector<std::size_t> rows(s);
    for (std::size_t i = 0; i < s; ++i) rows[i] = i;

    // Iterate s-subsets of column indices in lexicographic order.
    for (std::size_t i = 0; i < s; ++i) cols[i] = i;
    auto next_combination = [&]() {
        std::size_t i = s;
        while (i > 0) {
            --i;
            if (cols[i] < d - s + i) {
                ++cols[i];
                for (std::size_t j = i + 1; j < s; ++j) cols[j] = cols[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    while (true) {
        Polynomial minor = det(det, rows, cols);
        if (!minor.is_zero() && !ideal_member(minor, gb)) return minor;
        if (!next_combination()) return std::nullopt;
    }
}

Verdict strong_freg_test_ci(const PairSpec& pair, int e_max,
                            std::optional<Polynomial> witness) {
    pair.validate();
    if (e_max < 1) throw Error("e_max must be positive");
    const std::uint32_t p = pair.ring->characteristic();

    // Boundary with coefficient >= 1 has nonzero round-down: never strongly
    // F-regular.
    if (pair.has_boundary() && pair.t >= Rational(1)) {
        Verdict v;
        v.kind = VerdictKind::Refuted;
        v.level = 0;
        v.reason = "round-down of the boundary is nonzero (t >= 1)";
        return v;
    }

    // Strongly F-regular pairs are F-pure; a refuted F-purity criterion is a
    // definitive refutation here too.
    Verdict purity = fpure_test_ci(pair, e_max);
    if (purity.kind == VerdictKind::Refuted) {
        purity.reason = "not F-pure: " + purity.reason;
        return purity;
    }
    if (purity.budget_truncated) return purity;

    std::optional<Polynomial> c = witness.has_value() ? witness : default_witness(pair);
    if (!c.has_value()) {
        Verdict v;
        v.kind = VerdictKind::Inconclusive;
        v.level = e_max;
        v.reason = "no certification witness available";
        v.transcript = purity.transcript;
        return v;
    }
    if (c->is_zero()) throw Error("certification witness is zero");
    if (!pair.ci.empty() && ideal_member(*c, Ideal(pair.ring, pair.ci))) {
        throw Error("certification witness lies in the generator ideal");
    }

    const Polynomial base = ci_product(pair);
    Verdict v;
    v.witness = c;
    std::vector<Polynomial> criterion_cache;
    for (int e = 1; e <= e_max; ++e) {
        Level lvl = pair.has_boundary() ? r_level(pair.t, e, p, pair.mode)
                                        : Level{e, checked_p_power(p, e), 0};
        Polynomial crit = criterion_polynomial(pair, base, lvl.q, lvl.r);
        criterion_cache.push_back(crit);
        Polynomial twisted = mul_bracket(crit, *c, lvl.q);
        bool pass = !twisted.is_zero();
        v.transcript.push_back({e, lvl.q, lvl.r, pass});
        if (pass) {
            v.kind = VerdictKind::CertifiedPositive;
            v.level = e;
            v.reason = level_reason("witness-twisted criterion escapes the bracket power", e,
                                    lvl.q);
            return v;
        }
    }

    v.kind = VerdictKind::Inconclusive;
    v.level = e_max;
    v.reason = "witness certified no level up to e_max; colon transcript attached";
    for (int e = 1; e <= e_max; ++e) {
        const LevelOutcome& row = v.transcript[static_cast<std::size_t>(e - 1)];
        try {
            v.tau.push_back({e, colon_artinian(pair.ring, row.q,
                                               criterion_cache[static_cast<std::size_t>(e - 1)])});
        } catch (const BudgetError&) {
            v.reason += "; colon ideal at e=" + std::to_string(e) + " exceeds budget";
        }
    }
    return v;
}

Verdict divisorial_freg_test(const PairSpec& pair, int e_max,
                             std::optional<Polynomial> witness) {
    pair.validate();
    if (!pair.has_boundary()) throw Error("divisorial test needs a boundary divisor");
    if (pair.t != Rational(1)) {
        throw Error("divisorial test requires boundary coefficient exactly 1");
    }

    PairSpec quotient;
    quotient.ring = pair.ring;
    quotient.ci = pair.ci;
    quotient.ci.push_back(*pair.g);
    quotient.t = Rational(0);
    quotient.mode = pair.mode;

    Verdict v = strong_freg_test_ci(quotient, e_max, std::move(witness));
    v.reason = "quotient-by-g strong F-regularity run: " + v.reason;
    return v;
}

bool criterion_pass(const PairSpec& pair, int e, Mode mode, const Rational& t) {
    PairSpec copy = pair;
    copy.mode = mode;
    copy.t = t;
    copy.validate();
    const std::uint32_t p = copy.ring->characteristic();
    Level lvl = copy.has_boundary() ? r_level(t, e, p, mode)
                                    : Level{e, checked_p_power(p, e), 0};
    Polynomial crit = criterion_polynomial(copy, ci_product(copy), lvl.q, lvl.r);
    return !crit.is_zero();
}

ImplicationReport validate_implications(const PairSpec& pair, int e_max,
                                        const std::vector<Rational>& t_grid) {
    pair.validate();
    ImplicationReport report;
    const std::uint32_t p = pair.ring->characteristic();

    for (int e = 1; e <= e_max; ++e) {
        Level weak = pair.has_boundary() ? r_level(pair.t, e, p, Mode::Weak)
                                         : Level{e, checked_p_power(p, e), 0};
        Level strong = pair.has_boundary() ? r_level(pair.t, e, p, Mode::Strong)
                                           : Level{e, checked_p_power(p, e), 0};
        bool pw = criterion_pass(pair, e, Mode::Weak, pair.t);
        bool ps = criterion_pass(pair, e, Mode::Strong, pair.t);
        report.rows.push_back({e, weak.q, weak.r, strong.r, pw, ps});

        if (ps && !pw) {
            report.violations.push_back("strong-mode pass without weak-mode pass at e=" +
                                        std::to_string(e));
        }
        if (pair.has_boundary() && pair.t > Rational(1)) {
            // q(t-1) >= t forces r_e >= q, hence g^{r_e} in the bracket power.
            Rational qr(static_cast<std::int64_t>(weak.q));
            if (qr * (pair.t - Rational(1)) >= pair.t && pw) {
                report.violations.push_back(
                    "weak-mode pass at a level forced to fail by t > 1, e=" +
                    std::to_string(e));
            }
        }
    }

    if (pair.has_boundary()) {
        std::vector<Rational> grid = t_grid;
        grid.push_back(pair.t);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        for (int e = 1; e <= e_max; ++e) {
            // Evaluate along increasing t; a pass after a fail is a violation.
            bool seen_fail = false;
            for (const Rational& tv : grid) {
                if (tv < Rational(0)) continue;
                bool pass = criterion_pass(pair, e, Mode::Weak, tv);
                if (!pass) {
                    seen_fail = true;
                } else if (seen_fail) {
                    report.violations.push_back("pass at t=" + tv.str() +
                                                " after failure at smaller t, e=" +
                                                std::to_string(e));
                }
            }
        }
    }
    return report;
}

}  // namespace frobsing
