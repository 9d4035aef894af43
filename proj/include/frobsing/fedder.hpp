#ifndef FROBSING_FEDDER_HPP
#define FROBSING_FEDDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobsing/colon.hpp"
#include "frobsing/ideal.hpp"
#include "frobsing/rational.hpp"

namespace frobsing {

/// Exponent convention for the boundary part of the criterion polynomial.
/// Weak drives the F-purity test (r_e = floor(t(q-1))); Strong drives the
/// strong F-purity variant (r_e = floor(t q)). The distinction changes
/// F-purity verdicts and is surfaced explicitly everywhere.
enum class Mode { Weak, Strong };

struct Level {
    int e;
    std::uint64_t q;  // p^e
    std::int64_t r;   // boundary exponent at this level
};

/// Exact integer floor of t(q-1) (weak) or tq (strong); t must be >= 0, e >= 1.
Level r_level(const Rational& t, int e, std::uint32_t p, Mode mode);

/// A pair: complete-intersection quotient of a regular ambient ring plus an
/// optional boundary t * div(g). An empty generator list means the ambient
/// ring itself. The generators are trusted to form a regular sequence; the
/// divisor of g is trusted reduced.
struct PairSpec {
    RingPtr ring;
    std::vector<Polynomial> ci;       // f_1..f_s, all in the maximal ideal
    std::optional<Polynomial> g;      // boundary divisor element, nonzero, in m
    Rational t = Rational(0);         // boundary coefficient, >= 0
    Mode mode = Mode::Weak;

    bool has_boundary() const { return g.has_value(); }
    /// Throws Error when an invariant is broken (zero or non-maximal-ideal
    /// generators, negative t, more generators than variables).
    void validate() const;
};

enum class VerdictKind { Refuted, HoldsUpToLevel, CertifiedPositive, Inconclusive };

struct LevelOutcome {
    int e;
    std::uint64_t q;
    std::int64_t r;
    bool pass;  // criterion polynomial escaped the bracket power at this level
};

struct TauIdeal {
    int e;
    Ideal ideal;
};

/// Level-indexed certified outcome of a criterion run.
///
/// Refuted is definitive (a failing level certifies failure for good);
/// HoldsUpToLevel is bounded-level evidence, never "holds" outright;
/// CertifiedPositive carries the witness that split; Inconclusive carries the
/// transcript and, where computable, the per-level colon ideals.
struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    int level = 0;  // failing level / deepest verified level / certifying level
    std::string reason;
    std::optional<Polynomial> witness;
    std::vector<LevelOutcome> transcript;
    std::vector<TauIdeal> tau;
    bool budget_truncated = false;
};

const char* verdict_kind_name(VerdictKind k);

/// F-purity test for a complete-intersection pair: at level e the product
/// (f_1...f_s)^{q-1} g^{r_e} must escape (x_1^q,...,x_d^q). The pair's mode
/// selects the weak (F-pure) or strong (strongly F-pure) exponent convention.
Verdict fpure_test_ci(const PairSpec& pair, int e_max);

/// F-purity test for a general quotient by an ideal: at level e some
/// generator c of (I^[q] : I) must keep g^{r_e} c out of the bracket power.
/// Requires g (when present) to lie outside I.
Verdict fpure_test_general(const Ideal& ideal, const std::optional<Polynomial>& g,
                           const Rational& t, Mode mode, int e_max);

/// Strong F-regularity certification for a complete-intersection pair.
/// Stages: boundary coefficient >= 1 refutes by the round-down rule; a failed
/// F-purity criterion refutes; otherwise a witness search certifies at the
/// first level where c (f_1...f_s)^{q-1} g^{r_e} escapes the bracket power.
/// Without a certificate the verdict is Inconclusive and carries the colon
/// transcript ideals where they fit in budget.
Verdict strong_freg_test_ci(const PairSpec& pair, int e_max,
                            std::optional<Polynomial> witness = std::nullopt);

/// Divisorial F-regularity of (A, div(g)) for a reduced boundary (t exactly
/// 1): equivalent to strong F-regularity of the quotient by g, and computed
/// exactly that way.
Verdict divisorial_freg_test(const PairSpec& pair, int e_max,
                             std::optional<Polynomial> witness = std::nullopt);

/// Default certification witness: the first nonzero maximal minor of the
/// Jacobian matrix of the generators that lies outside the generator ideal
/// (constant 1 when there are no generators). nullopt when none qualifies.
std::optional<Polynomial> default_witness(const PairSpec& pair);

/// Single-level criterion probe used by the validators: does the weak/strong
/// criterion product of this pair escape the bracket power at level e?
bool criterion_pass(const PairSpec& pair, int e, Mode mode, const Rational& t);

struct ImplicationRow {
    int e;
    std::uint64_t q;
    std::int64_t r_weak;
    std::int64_t r_strong;
    bool pass_weak;
    bool pass_strong;
};

/// Literal consistency checks across levels and boundary coefficients:
/// strong-mode pass implies weak-mode pass; t > 1 forces failure at every
/// level with q(t-1) >= t; passes are monotone as t decreases along the grid.
/// Violations indicate an internal error and are reported as text.
struct ImplicationReport {
    std::vector<ImplicationRow> rows;
    std::vector<std::string> violations;
};

ImplicationReport validate_implications(const PairSpec& pair, int e_max,
                                        const std::vector<Rational>& t_grid);

}  // namespace frobsing

#endif
