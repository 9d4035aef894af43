#include "frobsing/thresholds.hpp"

#include <algorithm>

#include "frobsing/colon.hpp"
#include "frobsing/errors.hpp"
#include "frobsing/fedder.hpp"
#include "frobsing/ideal.hpp"

namespace frobsing {

namespace {

void require_in_m(const Polynomial& f) {
    if (f.is_zero()) throw Error("nu value of the zero polynomial");
    if (!f.in_maximal_ideal()) throw Error("nu value needs f in the maximal ideal");
}

}  // namespace

std::uint64_t nu_value(const Polynomial& f, int e) {
    require_in_m(f);
    const std::uint32_t p = f.ring()->characteristic();
    const std::uint64_t q = checked_p_power(p, e);
    const std::uint64_t high = static_cast<std::uint64_t>(f.ring()->arity()) * (q - 1);

    // Cached reduced binary powers shared by every probe.
    std::vector<Polynomial> pow2;
    pow2.push_back(truncate_bracket(f, q));
    while ((std::uint64_t{1} << pow2.size()) <= high) {
        pow2.push_back(mul_bracket(pow2.back(), pow2.back(), q));
    }
    auto survives = [&](std::uint64_t j) {
        if (j == 0) return true;
        Polynomial acc = Polynomial::constant(f.ring(), 1);
        for (std::size_t b = 0; b < pow2.size(); ++b) {
            if (j >> b & 1) acc = mul_bracket(acc, pow2[b], q);
            if (acc.is_zero()) return false;
        }
        return !acc.is_zero();
    };

    std::uint64_t lo = 0, hi = high;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (survives(mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

std::pair<Rational, Rational> multiplicity_bounds(const Polynomial& f) {
    require_in_m(f);
    std::uint64_t n = initial_form(f).degree;
    std::int64_t d = static_cast<std::int64_t>(f.ring()->arity());
    return {Rational(1, static_cast<std::int64_t>(n)),
            Rational(d, static_cast<std::int64_t>(n))};
}

JacobianPrediction predict_strongly_fpure(const Polynomial& f, const Rational& t,
                                          std::optional<std::uint64_t> cap) {
    require_in_m(f);
    const RingPtr& ring = f.ring();
    const std::size_t d = ring->arity();
    JacobianPrediction out;

    InitialForm init = initial_form(f);
    out.multiplicity = init.degree;
    auto bounds = multiplicity_bounds(f);
    out.lower = bounds.first;
    out.upper = bounds.second;
    out.applicable = t < Rational(1) && t < out.upper;
    out.cap = cap.value_or(static_cast<std::uint64_t>(d) * init.degree + 2);
    out.containment_powers.assign(d, std::nullopt);

    std::vector<Polynomial> jac;
    for (std::size_t i = 0; i < d; ++i) {
        Polynomial der = partial_derivative(init.form, i);
        if (!der.is_zero()) jac.push_back(std::move(der));
    }
    if (jac.empty()) {
        out.hypothesis_ok = false;  // all partials vanish; nothing is contained
        return out;
    }
    Ideal jacobian(ring, std::move(jac));
    out.hypothesis_ok = true;
    for (std::size_t i = 0; i < d; ++i) {
        MemberPowerResult r = homogeneous_member_power(jacobian, i, out.cap);
        out.containment_powers[i] = r.power;
        if (!r.power.has_value()) out.hypothesis_ok = false;
    }
    if (!out.hypothesis_ok || !out.applicable) return out;

    std::int64_t total = 0;
    for (const auto& m : out.containment_powers) total += static_cast<std::int64_t>(*m);
    Rational denom = Rational(static_cast<std::int64_t>(d)) -
                     Rational(static_cast<std::int64_t>(init.degree)) * t;
    out.mu = Rational(total) / denom;
    out.predicts_strongly_fpure =
        Rational(static_cast<std::int64_t>(ring->characteristic())) >= *out.mu;
    return out;
}

ThresholdReport fpt_report(const Polynomial& f, int e_max,
                           std::optional<Rational> prediction_t) {
    require_in_m(f);
    if (e_max < 1) throw Error("e_max must be positive");
    const std::uint32_t p = f.ring()->characteristic();

    ThresholdReport report;
    for (int e = 1; e <= e_max; ++e) {
        std::uint64_t q = checked_p_power(p, e);
        report.nu.push_back({e, q, nu_value(f, e)});
    }

    // Certified upper bound: F-purity at t forces floor(t(q-1)) <= j_e, so
    // t < (j_e+1)/(q-1) at every level; t <= 1 is forced by any boundary.
    report.upper = Rational(1);
    for (const NuEntry& n : report.nu) {
        Rational candidate(static_cast<std::int64_t>(n.j + 1),
                           static_cast<std::int64_t>(n.q - 1));
        if (candidate < report.upper) report.upper = candidate;
    }

    const NuEntry& deepest = report.nu.back();
    const std::int64_t grid = static_cast<std::int64_t>(deepest.q - 1);
    report.estimate = Rational(static_cast<std::int64_t>(deepest.j), grid);

    // Largest grid point t = k/(q_E - 1) passing r_e <= j_e at every level.
    std::int64_t k = floor_scaled(report.upper, static_cast<std::uint64_t>(grid));
    while (k >= 0) {
        Rational t(k, grid);
        bool all = true;
        for (const NuEntry& n : report.nu) {
            if (floor_scaled(t, n.q - 1) > static_cast<std::int64_t>(n.j)) {
                all = false;
                break;
            }
        }
        if (all) break;
        --k;
    }
    report.watermark = Rational(k < 0 ? 0 : k, grid);

    report.prediction = predict_strongly_fpure(f, prediction_t.value_or(report.estimate));
    if (!prediction_t.has_value()) {
        // Without a requested t the mu-based fields are not meaningful.
        report.prediction->mu.reset();
        report.prediction->predicts_strongly_fpure.reset();
        report.prediction->applicable = false;
    }
    return report;
}

}  // namespace frobsing
