#include "hq/cdells.hpp"

#include <bit>
#include <stdexcept>

namespace hq {

namespace {

constexpr int kMaxK = 12;

// n^e with a cap, for enumeration guards.
unsigned __int128 pow128(std::uint64_t n, int e) {
    unsigned __int128 acc = 1;
    for (int i = 0; i < e; ++i) acc *= n;
    return acc;
}

}  // namespace

VertexKPartition::VertexKPartition(int k_, std::vector<int> assignment)
    : k(k_), part_of(std::move(assignment)) {
    if (k < 1 || k > 31) throw std::invalid_argument("VertexKPartition: bad k");
    std::vector<bool> seen(k, false);
    for (int p : part_of) {
        if (p < 0 || p >= k) throw std::invalid_argument("VertexKPartition: part out of range");
        seen[p] = true;
    }
    for (int i = 0; i < k; ++i)
        if (!seen[i]) throw std::invalid_argument("VertexKPartition: empty part");
}

PatternSet all_patterns(int k, int l) {
    PatternSet out;
    for (std::uint32_t m = 0; m < (1u << k); ++m)
        if (std::popcount(m) == l) out.push_back(m);
    return out;
}

Hypergraph restrict_by_pattern(const Hypergraph& G, const VertexKPartition& P,
                               const PatternSet& R) {
    if (G.n() != P.n()) throw std::invalid_argument("restrict_by_pattern: vertex mismatch");
    std::vector<bool> keep(std::size_t(1) << P.k, false);
    for (std::uint32_t m : R) keep[m] = true;
    Hypergraph out(G.n(), G.k());
    KSet X(G.k());
    std::uint64_t tot = binom(G.n(), G.k());
    for (std::uint64_t r = 0; r < tot; ++r) {
        if (!G.has_edge_rank(r)) continue;
        colex_unrank(r, G.k(), X.data());
        if (keep[P.pattern_of(X.data(), G.k())]) out.add_edge_rank(r);
    }
    return out;
}

TransversalCounts transversal_counts(const Hypergraph& G, const VertexKPartition& P,
                                     int s, const Hypergraph* H) {
    int k = P.k, n = G.n(), l = G.k();
    if (P.n() != n) throw std::invalid_argument("transversal_counts: vertex mismatch");
    if (H && (H->n() < n || H->k() != k))
        throw std::invalid_argument("transversal_counts: H must extend V(G) with arity k");
    if (s < 0 || std::uint64_t(s) > binom(k, l))
        throw std::invalid_argument("transversal_counts: s out of range");
    std::uint32_t full = (1u << k) - 1;
    TransversalCounts out;
    KSet T(k);
    std::uint64_t tot = binom(n, k);
    for (std::uint64_t r = 0; r < tot; ++r) {
        colex_unrank(r, k, T.data());
        if (P.pattern_of(T.data(), k) != full) continue;
        if (G.induced_count_in_kset(T.data(), k) != std::uint64_t(s)) continue;
        ++out.total;
        if (H && H->has_edge_ptr(T.data())) ++out.in_H;
    }
    return out;
}

Hypergraph augment_F(const Hypergraph& G_restricted, const VertexKPartition& P,
                     std::uint32_t I) {
    int n = G_restricted.n(), l = G_restricted.k();
    if (P.n() != n) throw std::invalid_argument("augment_F: vertex mismatch");
    if (std::popcount(I) != l) throw std::invalid_argument("augment_F: |I| must equal arity");
    Hypergraph out = G_restricted;
    KSet X(l);
    std::uint64_t tot = binom(n, l);
    for (std::uint64_t r = 0; r < tot; ++r) {
        colex_unrank(r, l, X.data());
        if (P.pattern_of(X.data(), l) == I) out.add_edge_rank(r);
    }
    return out;
}

IeCounts ie_counts(const Hypergraph& F, const VertexKPartition& P, int threshold,
                   const Hypergraph& H) {
    int k = P.k, n = F.n();
    if (P.n() != n) throw std::invalid_argument("ie_counts: vertex mismatch");
    if (H.n() < n || H.k() != k)
        throw std::invalid_argument("ie_counts: H must extend V(F) with arity k");
    std::size_t masks = std::size_t(1) << k;
    IeCounts out;
    out.f.assign(masks, 0);
    out.g.assign(masks, 0);
    out.f_H.assign(masks, 0);
    out.g_H.assign(masks, 0);
    KSet T(k);
    std::uint64_t tot = binom(n, k);
    for (std::uint64_t r = 0; r < tot; ++r) {
        colex_unrank(r, k, T.data());
        if (F.induced_count_in_kset(T.data(), k) < std::uint64_t(threshold)) continue;
        std::uint32_t A = P.pattern_of(T.data(), k);
        bool inH = H.has_edge_ptr(T.data());
        ++out.f[A];
        if (inH) ++out.f_H[A];
        // g is accumulated literally: add to every superset mask
        for (std::uint32_t S = A;; S = (S + 1) | A) {
            ++out.g[S];
            if (inH) ++out.g_H[S];
            if (S == masks - 1) break;
        }
    }
    // verify zeta and Moebius relations in both directions
    auto check = [&](const std::vector<std::uint64_t>& f,
                     const std::vector<std::uint64_t>& g) {
        for (std::uint32_t A = 0; A < masks; ++A) {
            std::uint64_t zeta = 0;
            long long moeb = 0;
            for (std::uint32_t B = A;; B = (B - 1) & A) {
                zeta += f[B];
                int sign = (std::popcount(A ^ B) % 2 == 0) ? 1 : -1;
                moeb += sign * (long long)g[B];
                if (B == 0) break;
            }
            if (zeta != g[A] || moeb != (long long)f[A]) return false;
        }
        return true;
    };
    out.moebius_ok = check(out.f, out.g) && check(out.f_H, out.g_H);
    return out;
}

OvercountReport overcount_identity_check(const Hypergraph& G, int s,
                                         const Hypergraph& H,
                                         std::uint64_t exact_threshold) {
    int n = G.n(), l = G.k(), k = H.k();
    if (H.n() < n) throw std::invalid_argument("overcount: H must extend V(G)");
    if (k <= l || k > kMaxK) throw std::invalid_argument("overcount: need l < k <= 12");
    if (s < 1 || std::uint64_t(s) > binom(k, l))
        throw std::invalid_argument("overcount: s out of [1, C(k,l)]");
    if (pow128(std::uint64_t(k), n) > exact_threshold)
        throw std::invalid_argument("overcount: k^n exceeds exact_threshold");

    PatternSet pats = all_patterns(k, l);
    int np = int(pats.size());
    std::vector<int> pat_index(std::size_t(1) << k, -1);
    for (int i = 0; i < np; ++i) pat_index[pats[i]] = i;

    // R-subsets of size s as bitmasks over pattern indices
    std::vector<std::uint64_t> rsets;
    {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        if (s <= np) {
            while (true) {
                std::uint64_t m = 0;
                for (int i = 0; i < s; ++i) m |= 1ull << idx[i];
                rsets.push_back(m);
                int i = s - 1;
                while (i >= 0 && idx[i] == np - s + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }

    OvercountReport rep;

    // left side: k! k^{n-k} sum over all k-sets T of C(e_G(T), s)
    {
        std::uint64_t kfact = 1;
        for (int i = 2; i <= k; ++i) kfact *= std::uint64_t(i);
        std::uint64_t scale = kfact;
        for (int i = 0; i < n - k; ++i) scale *= std::uint64_t(k);
        KSet T(k);
        std::uint64_t tot = binom(n, k);
        for (std::uint64_t r = 0; r < tot; ++r) {
            colex_unrank(r, k, T.data());
            std::uint64_t e = G.induced_count_in_kset(T.data(), k);
            std::uint64_t w = binom(int(e), s);
            rep.lhs_weighted += w;
            if (H.has_edge_ptr(T.data())) rep.lhs_weighted_H += w;
        }
        rep.lhs_weighted *= scale;
        rep.lhs_weighted_H *= scale;
    }

    // right side: literal double sum over ordered partitions and pattern sets
    std::uint64_t assignments = std::uint64_t(pow128(std::uint64_t(k), n));
    std::vector<int> part(n);
    std::uint32_t fullmask = (1u << k) - 1;
    KSet T(k), sub(l);
    std::uint64_t ksets = binom(n, k);
    for (std::uint64_t code = 0; code < assignments; ++code) {
        std::uint64_t c = code;
        std::uint32_t used = 0;
        for (int v = 0; v < n; ++v) {
            part[v] = int(c % k);
            used |= 1u << part[v];
            c /= k;
        }
        if (used != fullmask) continue;  // not surjective
        VertexKPartition P(k, part);
        for (std::uint64_t r = 0; r < ksets; ++r) {
            colex_unrank(r, k, T.data());
            if (P.pattern_of(T.data(), k) != fullmask) continue;  // not a transversal
            // patterns of T's induced G-edges are pairwise distinct
            std::uint64_t ep = 0;
            {
                VertexId idx[kMaxK];
                for (int i = 0; i < l; ++i) idx[i] = VertexId(i);
                while (true) {
                    for (int i = 0; i < l; ++i) sub[i] = T[idx[i]];
                    if (G.has_edge_ptr(sub.data()))
                        ep |= 1ull << pat_index[P.pattern_of(sub.data(), l)];
                    int i = 0;
                    while (i < l) {
                        int limit = (i + 1 < l) ? idx[i + 1] : k;
                        if (idx[i] + 1 < limit) break;
                        ++i;
                    }
                    if (i == l) break;
                    ++idx[i];
                    for (int j = 0; j < i; ++j) idx[j] = VertexId(j);
                }
            }
            bool inH = H.has_edge_ptr(T.data());
            // e_{G_{P,R}}(T) counts T's induced G-edges with pattern in R
            for (std::uint64_t R : rsets) {
                if (std::popcount(R & ep) == s) {
                    ++rep.rhs_sum;
                    if (inH) ++rep.rhs_sum_H;
                }
            }
        }
    }
    rep.ok = rep.lhs_weighted == rep.rhs_sum;
    rep.ok_H = rep.lhs_weighted_H == rep.rhs_sum_H;
    return rep;
}

ComplementReport complement_threshold_check(const Hypergraph& G, const Hypergraph& H,
                                            int k) {
    int n = G.n(), l = G.k();
    if (H.n() < n || H.k() != k)
        throw std::invalid_argument("complement_threshold_check: H must extend V(G)");
    if (k <= l || k > kMaxK)
        throw std::invalid_argument("complement_threshold_check: need l < k <= 12");
    Hypergraph comp = G.complement();
    std::uint64_t top = binom(k, l);
    ComplementReport rep;
    rep.ksets = binom(n, k);
    KSet T(k);
    for (std::uint64_t r = 0; r < rep.ksets; ++r) {
        colex_unrank(r, k, T.data());
        bool inH = H.has_edge_ptr(T.data());
        if (inH) ++rep.ksets_H;
        if (comp.induced_count_in_kset(T.data(), k) >= 1) {
            ++rep.above_complement;
            if (inH) ++rep.above_complement_H;
        }
        if (G.induced_count_in_kset(T.data(), k) == top) {
            ++rep.cliques;
            if (inH) ++rep.cliques_H;
        }
    }
    rep.ok = rep.cliques == rep.ksets - rep.above_complement;
    rep.ok_H = rep.cliques_H == rep.ksets_H - rep.above_complement_H;
    return rep;
}

}  // namespace hq
