#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <mixedsurf/util.hpp>

namespace mixedsurf {

// Target invariants of the quotient surface: the self-intersection of the
// canonical class, the geometric genus and the irregularity.  chi is the
// holomorphic Euler characteristic they determine.
struct SurfaceTarget {
    long long k2 = 0;
    long long pg = 0;
    long long q = 0;

    long long chi() const { return 1 - q + pg; }
};

// A covering type (q; m_1,...,m_r) together with every count the target
// invariants force on it.  q is the genus of the base curve C/G^0 (equal
// to the irregularity of the quotient surface), the periods are the
// branching orders of C -> C/G^0, and n_o2 is the number of order-two
// elements of G outside G^0 that any realizing action must have.
struct CoveringType {
    long long q = 0;
    std::vector<long long> periods;  // ascending, every entry >= 2
    long long g = 0;                 // genus of the curve C
    long long beta = 0;              // g - 1
    long long order_g0 = 0;          // |G^0|
    long long order_g = 0;           // |G| = 2 |G^0|
    long long n_o2 = 0;              // forced |O_2|
    rational theta;                  // 2q - 2 + sum (1 - 1/m_i)
};

// An admissible type whose group order falls outside catalogue coverage.
// Such a type is reported instead of searched, so a classification run
// states exactly what it did not look at.
struct SkipRecord {
    SurfaceTarget target;
    long long q = 0;
    std::vector<long long> periods;
    long long g = 0;
    long long order_g0 = 0;
    std::string reason;
};

// Smallest positive orbifold degree over a base curve of genus q: the
// classical 1/42 of the (2,3,7) triangle group for genus zero, 1/2 for
// genus one, and the unbranched value 2q-2 above.  This is what makes the
// search space finite once the surface invariants are fixed.
inline rational theta_min(long long q) {
    if (q == 0) return rational(1, 42);
    if (q == 1) return rational(1, 2);
    return rational(2 * q - 2);
}

struct DerivedCounts {
    long long order_g0 = 0;
    long long n_o2 = 0;
    rational theta;
};

// Both group counts are fractions fixed by the surface invariants:
//   |G^0| = (g-1)^2 / (10 chi - K^2),
//   |O_2| = (8 chi - K^2)(g-1) / (10 chi - K^2).
// A genus supports an action only when the divisions are exact and the
// fixed-curve count is nonnegative; otherwise there is nothing to return.
inline std::optional<DerivedCounts> derived_counts(long long g, const SurfaceTarget& t) {
    if (g < 2) return std::nullopt;
    const long long den = 10 * t.chi() - t.k2;
    if (den <= 0) return std::nullopt;
    const long long beta = g - 1;
    if ((beta * beta) % den != 0) return std::nullopt;
    if ((8 * t.chi() - t.k2) * beta % den != 0) return std::nullopt;
    DerivedCounts dc;
    dc.order_g0 = beta * beta / den;
    dc.n_o2 = (8 * t.chi() - t.k2) * beta / den;
    if (dc.n_o2 < 0) return std::nullopt;
    dc.theta = rational(2 * beta, dc.order_g0);
    return dc;
}

// Re-derives every admissibility condition from first principles and
// returns a short description of each violated one (empty = admissible).
// This is deliberately not the enumerator's arithmetic: it recomputes all
// quantities from (q, periods, g) and the target, so tests can use it as
// an independent cross-check.
inline std::vector<std::string> type_violations(const CoveringType& ty, const SurfaceTarget& t) {
    std::vector<std::string> bad;
    const long long den = 10 * t.chi() - t.k2;
    const long long delta = 8 * t.chi() - t.k2;
    if (den <= 0) bad.push_back("10chi - k2 must be positive");
    if (delta < 0) bad.push_back("8chi - k2 must be nonnegative");
    if (ty.g < 2) bad.push_back("curve genus below two");
    if (ty.q != t.q) bad.push_back("base genus differs from target irregularity");
    if (ty.beta != ty.g - 1) bad.push_back("beta is not g - 1");
    if (ty.order_g != 2 * ty.order_g0) bad.push_back("total order is not twice the subgroup order");
    if (!std::is_sorted(ty.periods.begin(), ty.periods.end()))
        bad.push_back("periods not ascending");
    for (long long m : ty.periods)
        if (m < 2) bad.push_back("period below two");
    if (!bad.empty()) return bad;

    rational theta(2 * ty.q - 2);
    for (long long m : ty.periods) theta = theta + rational(m - 1, m);
    if (!(theta > rational(0))) bad.push_back("orbifold degree not positive");
    if (theta != ty.theta) bad.push_back("stored theta disagrees with periods");
    if (rational(2 * ty.g - 2) != rational(ty.order_g0) * theta)
        bad.push_back("Hurwitz formula fails");
    if (ty.order_g0 * den != ty.beta * ty.beta)
        bad.push_back("subgroup order is not beta^2/(10chi - k2)");
    if (ty.n_o2 * den != delta * ty.beta)
        bad.push_back("fixed-curve count is not (8chi - k2) beta/(10chi - k2)");
    if (ty.n_o2 < 0) bad.push_back("fixed-curve count negative");
    for (long long m : ty.periods)
        if (ty.beta % m != 0) bad.push_back("period does not divide beta");
    const long long r = static_cast<long long>(ty.periods.size());
    if (rational(r) > rational(4 * den, ty.beta) + rational(4 * (1 - t.q)))
        bad.push_back("too many branch points");
    if (r > 0) {
        const rational m_den = std::max(rational(1, 6), rational(r - 3 + 4 * t.q, 2));
        if (rational(ty.periods.back()) > rational(1 + 2 * den) / m_den)
            bad.push_back("period exceeds the branch-point bound");
    }
    if (ty.n_o2 > 0) {
        for (long long m : ty.periods) {
            if (ty.n_o2 % m != 0) bad.push_back("period does not divide the fixed-curve count");
            if (m * ty.n_o2 > ty.order_g0) bad.push_back("period exceeds order/fixed-curve ratio");
        }
    }
    return bad;
}

// Enumerates every covering type compatible with the target invariants.
// The search runs over the curve genus (2 up to the theta_min bound);
// each genus fixes |G^0|, |O_2| and theta, and the period multisets are
// then built from divisors of beta with exact rational accumulation.
// Types whose |G^0| the supplied predicate accepts land in the first
// list; the rest become skip records.  Both lists may be empty; targets
// violating 10chi - k2 > 0 or 8chi - k2 >= 0 admit nothing.
inline std::pair<std::vector<CoveringType>, std::vector<SkipRecord>> admissible_types(
    const SurfaceTarget& t, const std::function<bool(long long)>& order_covered) {
    std::vector<CoveringType> types;
    std::vector<SkipRecord> skips;
    const long long den = 10 * t.chi() - t.k2;
    if (den <= 0 || 8 * t.chi() - t.k2 < 0) return {std::move(types), std::move(skips)};

    const rational beta_bound = rational(2 * den) / theta_min(t.q);
    if (beta_bound.num <= 0) return {std::move(types), std::move(skips)};
    const long long beta_max = beta_bound.num / beta_bound.den;

    for (long long beta = 1; beta <= beta_max; ++beta) {
        const long long g = beta + 1;
        const auto dc = derived_counts(g, t);
        if (!dc) continue;
        const rational excess = dc->theta - rational(2 * t.q - 2);
        if (excess.num < 0) continue;

        const auto emit = [&](const std::vector<long long>& periods) {
            CoveringType ty;
            ty.q = t.q;
            ty.periods = periods;
            ty.g = g;
            ty.beta = beta;
            ty.order_g0 = dc->order_g0;
            ty.order_g = 2 * dc->order_g0;
            ty.n_o2 = dc->n_o2;
            ty.theta = dc->theta;
            if (order_covered(ty.order_g0))
                types.push_back(std::move(ty));
            else
                skips.push_back({t, ty.q, ty.periods, ty.g, ty.order_g0, "order not covered"});
        };

        if (excess.num == 0) {  // unbranched covering, only for base genus >= 2
            emit({});
            continue;
        }

        const rational r_bound = rational(4 * den, beta) + rational(4 * (1 - t.q));
        if (r_bound.num <= 0) continue;
        const long long r_cap = r_bound.num / r_bound.den;
        if (r_cap < 1) continue;

        std::vector<long long> divs;
        for (long long m = 2; m <= beta; ++m)
            if (beta % m == 0) divs.push_back(m);

        std::vector<long long> cur;
        const auto rec = [&](const auto& self, std::size_t from, rational left) -> void {
            if (left.num == 0) {
                // the branch-point bound depends on how many points we
                // ended up with, so it is checked on the complete multiset
                const long long r = static_cast<long long>(cur.size());
                const rational m_den = std::max(rational(1, 6), rational(r - 3 + 4 * t.q, 2));
                if (rational(cur.back()) > rational(1 + 2 * den) / m_den) return;
                emit(cur);
                return;
            }
            if (static_cast<long long>(cur.size()) == r_cap) return;
            for (std::size_t i = from; i < divs.size(); ++i) {
                const long long m = divs[i];
                if (dc->n_o2 > 0 && (dc->n_o2 % m != 0 || m * dc->n_o2 > dc->order_g0)) continue;
                const rational term(m - 1, m);
                if (left < term) break;  // periods ascend, later terms only grow
                cur.push_back(m);
                self(self, i, left - term);
                cur.pop_back();
            }
        };
        rec(rec, 0, excess);
    }
    return {std::move(types), std::move(skips)};
}

// Compact human-readable form of a type: "[q; 2^3,4]" with "-" when the
// covering is unbranched.
inline std::string type_label(long long q, const std::vector<long long>& periods) {
    std::string out = "[" + std::to_string(q) + "; ";
    if (periods.empty()) {
        out += "-";
    } else {
        std::size_t i = 0;
        bool first = true;
        while (i < periods.size()) {
            std::size_t j = i;
            while (j < periods.size() && periods[j] == periods[i]) ++j;
            if (!first) out += ",";
            out += std::to_string(periods[i]);
            if (j - i > 1) out += "^" + std::to_string(j - i);
            first = false;
            i = j;
        }
    }
    out += "]";
    return out;
}

}  // namespace mixedsurf
