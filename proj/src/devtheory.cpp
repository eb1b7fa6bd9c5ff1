#include "hq/devtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace hq {

namespace {

unsigned __int128 pow128(std::uint64_t n, int e) {
    unsigned __int128 acc = 1;
    for (int i = 0; i < e; ++i) acc *= n;
    return acc;
}

long long dev_exact(const Hypergraph& H, int l, const FactoredPredicate* P,
                    std::uint64_t threshold) {
    MeasureConfig cfg = MeasureConfig::exact(threshold);
    return deviation(H, l, P, cfg).value;
}

}  // namespace

SubdevReport subdev_inequality_check(const Hypergraph& H, int l,
                                     const FactoredPredicate& P,
                                     const FactoredPredicate& Q,
                                     std::uint64_t exact_threshold) {
    int k = H.k();
    if (l < 1 || l > k) throw std::invalid_argument("subdev check: l out of [1,k]");
    if (Q.k != k || P.k != k)
        throw std::invalid_argument("subdev check: predicate arity mismatch");
    if (Q.factors.size() != 1 || Q.general)
        throw std::invalid_argument("subdev check: Q must be a single cylinder factor");
    int coord = Q.factors[0].coord;
    if (coord < k - l + 1 || coord > k)
        throw std::invalid_argument(
            "subdev check: Q's coordinate must be a doubled one (in [k-l+1, k])");
    FactoredPredicate PQ = P.intersect(Q);
    SubdevReport rep;
    rep.lhs = dev_exact(H, l, &PQ, exact_threshold);
    rep.rhs = dev_exact(H, l, P.is_all() ? nullptr : &P, exact_threshold);
    return rep;
}

CauchyReport cauchy_step_check(const Hypergraph& H, int l, const FactoredPredicate& P,
                               std::uint64_t exact_threshold) {
    int k = H.k(), n = H.n();
    if (l < 1 || l > k) throw std::invalid_argument("cauchy check: l out of [1,k]");
    if (P.k != k) throw std::invalid_argument("cauchy check: predicate arity mismatch");
    const FactoredPredicate* Pp = P.is_all() ? nullptr : &P;
    CauchyReport rep;
    rep.dev_lo = dev_exact(H, l - 1, Pp, exact_threshold);
    rep.dev_hi = dev_exact(H, l, Pp, exact_threshold);
    rep.lhs_sq = __int128(rep.dev_lo) * __int128(rep.dev_lo);
    rep.rhs_scaled = __int128(pow128(std::uint64_t(n), k + l - 2)) * __int128(rep.dev_hi);
    return rep;
}

DevToExpReport devtoexp_pipeline_check(const Hypergraph& H, int k1, int k2,
                                       const SubsetFamily& S1, const SubsetFamily& S2,
                                       std::uint64_t exact_threshold) {
    int k = H.k(), n = H.n();
    if (k1 < 1 || k2 < 1 || k1 + k2 != k)
        throw std::invalid_argument("devtoexp check: k1 + k2 must equal k");
    if (S1.arity() != k1 || S2.arity() != k2 || S1.n() != n || S2.n() != n)
        throw std::invalid_argument("devtoexp check: family shape mismatch");

    auto member_test = [](const SubsetFamily* fam, int offset, int len) {
        return [fam, offset, len](const VertexId* t) {
            KSet s(t + offset, t + offset + len);
            std::sort(s.begin(), s.end());
            for (int i = 1; i < len; ++i)
                if (s[i] == s[i - 1]) return false;
            return fam->contains(s);
        };
    };
    // P1: complete in coordinate k; the remaining entries keep their order,
    // so the first k1 of them are coordinates 1..k1.
    FactoredPredicate P1 = FactoredPredicate::cylinder(k, k, member_test(&S1, 0, k1));
    // P2: complete in coordinate 1; the last k2 remaining entries are
    // coordinates k-k2+1..k.
    FactoredPredicate P2 = FactoredPredicate::cylinder(k, 1, member_test(&S2, k - 1 - k2, k2));
    FactoredPredicate P = P1.intersect(P2);

    DevToExpReport rep;
    rep.dev0 = dev_exact(H, 0, &P, exact_threshold);
    long long f1 = 1, f2 = 1;
    for (int i = 2; i <= k1; ++i) f1 *= i;
    for (int i = 2; i <= k2; ++i) f2 *= i;
    rep.k1fact_k2fact = f1 * f2;

    KSet merged(k);
    for (const KSet& a : S1.sets())
        for (const KSet& b : S2.sets()) {
            std::merge(a.begin(), a.end(), b.begin(), b.end(), merged.begin());
            bool distinct = true;
            for (int i = 1; i < k; ++i)
                if (merged[i] == merged[i - 1]) {
                    distinct = false;
                    break;
                }
            if (distinct && H.has_edge_ptr(merged.data()))
                ++rep.edges;
            else
                ++rep.misses;
        }
    return rep;
}

}  // namespace hq
