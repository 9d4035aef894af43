#ifndef FROBSING_THRESHOLDS_HPP
#define FROBSING_THRESHOLDS_HPP

#include <optional>
#include <vector>

#include "frobsing/polynomial.hpp"
#include "frobsing/rational.hpp"

namespace frobsing {

struct NuEntry {
    int e;
    std::uint64_t q;  // p^e
    std::uint64_t j;  // largest j with f^j outside the bracket power at level q
};

/// The defining value j_e: f^{j_e} escapes (x_1^q,...,x_d^q) while f^{j_e+1}
/// does not. Found by binary search (membership is monotone in the exponent)
/// over cached reduced binary powers of f. Requires nonzero f in the maximal
/// ideal.
std::uint64_t nu_value(const Polynomial& f, int e);

/// Certified bounds from the multiplicity n of f: (1/n, d/n). Every t <= 1/n
/// passes the F-purity criterion; F-purity forces t <= d/n.
std::pair<Rational, Rational> multiplicity_bounds(const Polynomial& f);

/// Smooth-initial-form prediction data: the containment exponents m_i of the
/// partial-derivative ideal of the initial form, and the constant
/// mu = (m_1+...+m_d)/(d - n t). For p >= mu the pair (A, t div(f)) is
/// predicted strongly F-pure; a missing m_i means the smoothness hypothesis
/// fails and no prediction is made.
struct JacobianPrediction {
    std::uint64_t multiplicity = 0;  // n
    Rational lower{0};               // 1/n
    Rational upper{0};               // d/n
    bool applicable = false;         // t < min(1, d/n); mu fields need this
    std::vector<std::optional<std::uint64_t>> containment_powers;  // m_i per variable
    bool hypothesis_ok = false;      // every m_i found within the cap
    std::uint64_t cap = 0;
    std::optional<Rational> mu;
    std::optional<bool> predicts_strongly_fpure;  // p >= mu
};

JacobianPrediction predict_strongly_fpure(const Polynomial& f, const Rational& t,
                                          std::optional<std::uint64_t> cap = std::nullopt);

/// Threshold data assembled from the nu sequence.
///
/// `upper` is a certified upper bound for the weak-mode threshold: the
/// minimum of (j_e+1)/(q-1) over computed levels, capped at 1. `watermark`
/// is the largest t on the 1/(q_E - 1) grid that passes every computed
/// level literally. `estimate` is j_E/(q_E - 1) at the deepest level — a
/// heuristic value, not a certified quantity.
struct ThresholdReport {
    std::vector<NuEntry> nu;
    Rational upper{1};
    Rational watermark{0};
    Rational estimate{0};
    std::optional<JacobianPrediction> prediction;
};

ThresholdReport fpt_report(const Polynomial& f, int e_max,
                           std::optional<Rational> prediction_t = std::nullopt);

}  // namespace frobsing

#endif
