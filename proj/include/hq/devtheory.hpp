#pragma once
// Exact deviation inequalities.
//
// With the choice-multiplicity eta (see measures.hpp), each placement's sign
// factors through the choice hypercube, which makes the following finite
// statements exact theorems:
//   * restriction monotonicity: intersecting P with a cylinder Q that is
//     complete in a DOUBLED coordinate can only shrink the deviation sum
//     (group placements by everything but that pair; the restricted inner
//     sum is (sum over admissible y of g(y))^2 <= (sum over all y)^2 ... );
//   * Cauchy-Schwarz step: dev_{l-1,P}^2 <= n^{k+l-2} * dev_{l,P};
//   * non-negativity of dev_{l,P} when P only constrains doubled
//     coordinates (each group's contribution is a square).
// The checks below compute both sides exactly and report them.

#include <cstdint>

#include "hq/hypergraph.hpp"
#include "hq/measures.hpp"

namespace hq {

struct SubdevReport {
    long long lhs = 0;  // dev_{l, P ∩ Q}
    long long rhs = 0;  // dev_{l, P}
    bool pass() const { return lhs <= rhs; }
};

// Q must carry exactly one factor, complete in a coordinate i in
// [k-l+1, k] (a doubled coordinate); anything else throws — the inequality
// is not claimed for single-coordinate restrictions.
SubdevReport subdev_inequality_check(const Hypergraph& H, int l,
                                     const FactoredPredicate& P,
                                     const FactoredPredicate& Q,
                                     std::uint64_t exact_threshold = 1ull << 26);

struct CauchyReport {
    long long dev_lo = 0;       // dev_{l-1, P}
    long long dev_hi = 0;       // dev_{l, P}
    __int128 lhs_sq = 0;        // dev_lo^2
    __int128 rhs_scaled = 0;    // n^{k+l-2} * dev_hi
    bool pass() const { return lhs_sq <= rhs_scaled; }
};

// Verifies dev_{l-1,P}^2 <= n^{k+l-2} dev_{l,P} exactly (1 <= l <= k).
// A passing check also certifies dev_{l,P} >= 0.
CauchyReport cauchy_step_check(const Hypergraph& H, int l,
                               const FactoredPredicate& P,
                               std::uint64_t exact_threshold = 1ull << 26);

struct DevToExpReport {
    long long dev0 = 0;          // dev over tuples whose first k1 coords
                                 // form a set of S1 and last k2 one of S2
    std::uint64_t edges = 0;     // pairs (s1,s2) whose union is an edge
    std::uint64_t misses = 0;    // all other pairs (overlapping included:
                                 // a union with < k vertices is never an edge)
    long long k1fact_k2fact = 0;
    bool pass() const {
        return dev0 == k1fact_k2fact * ((long long)misses - (long long)edges);
    }
};

// Builds P1 = {tuples whose first k1 coordinates form a member of S1}
// (complete in coordinate k) and P2 = {tuples whose last k2 coordinates
// form a member of S2} (complete in coordinate 1), then verifies
//   dev_{0, P1 ∩ P2}(H) = k1! k2! (misses - edges)   exactly.
DevToExpReport devtoexp_pipeline_check(const Hypergraph& H, int k1, int k2,
                                       const SubsetFamily& S1,
                                       const SubsetFamily& S2,
                                       std::uint64_t exact_threshold = 1ull << 26);

}  // namespace hq
