#include "frobsing/toric.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

std::int64_t dot(const LatticePoint& a, const LatticePoint& b) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += static_cast<__int128>(a[i]) * b[i];
    }
    if (s > std::numeric_limits<std::int64_t>::max() ||
        s < std::numeric_limits<std::int64_t>::min()) {
        throw SizingError("lattice pairing overflows 64 bits");
    }
    return static_cast<std::int64_t>(s);
}

// Feasibility of {sum_j a_ij x_j >= c_i} over the rationals by
// Fourier-Motzkin elimination. Rows are (a_1..a_d | c).
bool fm_feasible(std::vector<std::vector<Rational>> rows, std::size_t vars) {
    for (std::size_t v = vars; v-- > 0;) {
        std::vector<std::vector<Rational>> pos, neg, zero;
        for (auto& r : rows) {
            if (r[v] > Rational(0)) {
                pos.push_back(r);
            } else if (r[v] < Rational(0)) {
                neg.push_back(r);
            } else {
                zero.push_back(r);
            }
        }
        std::vector<std::vector<Rational>> next = std::move(zero);
        for (const auto& rp : pos) {
            for (const auto& rn : neg) {
                // Scale so the eliminated coefficients are +1 and -1, then add.
                std::vector<Rational> combo(rp.size());
                for (std::size_t j = 0; j < rp.size(); ++j) {
                    combo[j] = rp[j] / rp[v] + rn[j] / (-rn[v]);
                }
                combo[v] = Rational(0);
                next.push_back(std::move(combo));
            }
        }
        rows = std::move(next);
    }
    // Only constant constraints 0 >= c remain.
    for (const auto& r : rows) {
        if (r.back() > Rational(0)) return false;
    }
    return true;
}

}  // namespace

void Cone::validate() const {
    if (dim == 0) throw Error("cone dimension must be positive");
    if (rays.empty()) throw Error("cone needs at least one ray");
    for (const LatticePoint& r : rays) {
        if (r.size() != dim) throw Error("ray dimension mismatch");
        std::int64_t g = 0;
        bool nonzero = false;
        for (std::int64_t x : r) {
            g = std::gcd(g, x < 0 ? -x : x);
            nonzero |= x != 0;
        }
        if (!nonzero) throw Error("zero ray");
        if (g != 1) throw Error("ray is not primitive");
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            // Primitive parallel rays are equal or opposite.
            bool same = true, opposite = true;
            for (std::size_t k = 0; k < dim; ++k) {
                same &= rays[i][k] == rays[j][k];
                opposite &= rays[i][k] == -rays[j][k];
            }
            if (same || opposite) throw Error("parallel rays in cone");
        }
    }
    // Strong convexity: some m has <m, n_i> >= 1 for all i (Gordan dual of
    // "no nontrivial nonnegative combination of rays vanishes").
    std::vector<std::vector<Rational>> rows;
    for (const LatticePoint& r : rays) {
        std::vector<Rational> row(dim + 1);
        for (std::size_t k = 0; k < dim; ++k) row[k] = Rational(r[k]);
        row[dim] = Rational(1);
        rows.push_back(std::move(row));
    }
    if (!fm_feasible(std::move(rows), dim)) {
        throw Error("cone is not strongly convex");
    }
}

std::vector<LatticePoint> divisor_module_points(const Cone& cone,
                                                const std::vector<Rational>& coeffs,
                                                std::int64_t box) {
    cone.validate();
    if (coeffs.size() != cone.rays.size()) throw Error("coefficient count mismatch");
    if (box < 1) throw Error("box must be >= 1");

    std::vector<LatticePoint> out;
    LatticePoint m(cone.dim, -box);
    while (true) {
        bool inside = true;
        for (std::size_t i = 0; i < cone.rays.size() && inside; ++i) {
            // <m, n_i> >= -lambda_i  <=>  den * <m,n_i> >= -num (den > 0).
            std::int64_t pairing = dot(m, cone.rays[i]);
            __int128 lhs = static_cast<__int128>(coeffs[i].den()) * pairing;
            if (lhs < -static_cast<__int128>(coeffs[i].num())) inside = false;
        }
        if (inside) out.push_back(m);
        // Odometer step over the box.
        std::size_t k = 0;
        while (k < cone.dim && m[k] == box) {
            m[k] = -box;
            ++k;
        }
        if (k == cone.dim) break;
        ++m[k];
    }
    return out;
}

ToricCheck toric_fpure_verify(const Cone& cone, const std::vector<std::size_t>& delta_rays,
                              std::uint64_t q, std::int64_t box) {
    cone.validate();
    if (q < 2) throw Error("level q must be at least 2");
    for (std::size_t i : delta_rays) {
        if (i >= cone.rays.size()) throw Error("boundary ray index out of range");
    }
    std::set<std::size_t> delta(delta_rays.begin(), delta_rays.end());
    const bool full = delta.size() == cone.rays.size();
    const std::int64_t qi = static_cast<std::int64_t>(q);

    // Canonical module coefficients are all -1; the twisted module has
    // -q + (q-1) = -1 on boundary rays and -q elsewhere.
    std::vector<Rational> canonical(cone.rays.size(), Rational(-1));
    std::vector<Rational> twisted(cone.rays.size(), Rational(-qi));
    for (std::size_t i : delta) twisted[i] = Rational(-1);

    ToricCheck check;
    std::vector<LatticePoint> base = divisor_module_points(cone, canonical, box);
    check.canonical_count = base.size();

    // Scaling injectivity of m -> q m on the finite window.
    std::set<LatticePoint> scaled;
    for (const LatticePoint& m : base) {
        LatticePoint s(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) s[i] = m[i] * qi;
        scaled.insert(std::move(s));
    }
    check.scaling_injective = scaled.size() == base.size();

    if (full) {
        // Coefficientwise the two modules coincide; verify the window sets
        // match by independent enumeration.
        std::vector<LatticePoint> target = divisor_module_points(cone, twisted, box);
        check.target_count = target.size();
        std::set<LatticePoint> a(base.begin(), base.end());
        std::set<LatticePoint> b(target.begin(), target.end());
        check.ok = a == b && check.scaling_injective;
        return check;
    }

    // Partial boundary: q * (canonical window) must land inside the twisted
    // module enumerated on the scaled box.
    std::vector<LatticePoint> target = divisor_module_points(cone, twisted, box * qi);
    check.target_count = target.size();
    std::set<LatticePoint> targets(target.begin(), target.end());
    bool contained = true;
    for (const LatticePoint& s : scaled) {
        if (targets.count(s) == 0) {
            contained = false;
            break;
        }
    }
    for (const LatticePoint& t : target) {
        if (scaled.count(t) == 0) ++check.strict_witnesses;
    }
    check.ok = contained && check.scaling_injective;
    return check;
}

}  // namespace frobsing
