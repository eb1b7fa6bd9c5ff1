#pragma once
// Finite identities behind the clique-degree threshold collapse: pattern
// restrictions of an l-uniform graph along an ordered vertex k-partition,
// transversal counts, inclusion-exclusion tables, the overcounting
// identity, and the complement identity.
//
// Patterns are subsets of the k part-indices; an edge X of G has pattern
// {i : X ∩ P_i ≠ ∅} (as a bitmask over 0..k-1).  Restricting G to a pattern
// set R keeps exactly the edges whose pattern lies in R.

#include <cstdint>
#include <vector>

#include "hq/hypergraph.hpp"
#include "hq/rational.hpp"

namespace hq {

// Ordered partition of {0..n-1} into exactly k nonempty parts.
struct VertexKPartition {
    int k = 0;
    std::vector<int> part_of;  // vertex -> part index in [0, k)

    VertexKPartition(int k, std::vector<int> assignment);  // validates
    int n() const { return int(part_of.size()); }
    std::uint32_t pattern_of(const VertexId* verts, int len) const {
        std::uint32_t m = 0;
        for (int i = 0; i < len; ++i) m |= 1u << part_of[verts[i]];
        return m;
    }
};

// Set of patterns, each a bitmask with popcount l.
using PatternSet = std::vector<std::uint32_t>;

// All C(k, l) patterns of size l.
PatternSet all_patterns(int k, int l);

// Keep exactly the edges of G whose pattern lies in R.  Since members of R
// have popcount l, any edge meeting some part twice is dropped.
Hypergraph restrict_by_pattern(const Hypergraph& G, const VertexKPartition& P,
                               const PatternSet& R);

struct TransversalCounts {
    std::uint64_t total = 0;  // k-sets meeting every part, e_G(T) == s
    std::uint64_t in_H = 0;   // those that are also H-edges
};

// W(G, P, s): k-sets with one vertex in every part and exactly s induced
// G-edges; s in [1, C(k,l)].  H (optional) must share G's vertex prefix.
TransversalCounts transversal_counts(const Hypergraph& G,
                                     const VertexKPartition& P, int s,
                                     const Hypergraph* H = nullptr);

// G_restricted ∪ {all l-sets with pattern exactly I}; I must not be in the
// pattern set used to build G_restricted (caller-checked).  For every
// transversal T this adds exactly one induced edge, shifting e(T) by one.
Hypergraph augment_F(const Hypergraph& G_restricted, const VertexKPartition& P,
                     std::uint32_t I);

struct IeCounts {
    // Indexed by part-subset bitmask A over 0..k-1.
    // f: k-sets with e_F(T) >= threshold and nonempty-part set exactly A;
    // g: same with nonempty-part set contained in A.  *_H restrict to E(H).
    std::vector<std::uint64_t> f, g, f_H, g_H;
    bool moebius_ok = false;  // g(A) = sum_{B<=A} f(B) and
                              // f(A) = sum_{B<=A} (-1)^{|A\B|} g(B), both maps
};

IeCounts ie_counts(const Hypergraph& F, const VertexKPartition& P, int threshold,
                   const Hypergraph& H);

struct OvercountReport {
    // sum over ordered k-partitions P of V(G) and pattern sets R of size s
    // of |W(G_{P,R}, P, s)| equals k! * k^{n-k} * sum_T C(e_G(T), s):
    // a transversal T with e = e_G(T) induced edges has all patterns
    // distinct, so exactly C(e, s) choices of R leave exactly s of them.
    std::uint64_t lhs_weighted = 0;   // k! k^{n-k} sum_T C(e_G(T), s)
    std::uint64_t rhs_sum = 0;        // the partition/pattern double sum
    std::uint64_t lhs_weighted_H = 0; // same restricted to T in E(H)
    std::uint64_t rhs_sum_H = 0;
    bool ok = false, ok_H = false;
    bool pass() const { return ok && ok_H; }
};

// Requires k^n(G) <= exact_threshold (ordered partitions are enumerated as
// surjective assignments V(G) -> parts).
OvercountReport overcount_identity_check(const Hypergraph& G, int s,
                                         const Hypergraph& H,
                                         std::uint64_t exact_threshold = 1ull << 26);

struct ComplementReport {
    std::uint64_t above_complement = 0;  // A = #{T : e_{comp(G)}(T) >= 1}
    std::uint64_t cliques = 0;           // B = #{T : e_G(T) = C(k,l)}
    std::uint64_t above_complement_H = 0;
    std::uint64_t cliques_H = 0;
    std::uint64_t ksets = 0;             // C(n_G, k)
    std::uint64_t ksets_H = 0;           // H-edges within V(G)
    bool ok = false, ok_H = false;       // B = C - A and B_H = E_H - A_H
    bool pass() const { return ok && ok_H; }
};

// The exact set identity behind "CD at threshold 1 on the complement is CD
// at the top threshold": a k-set is a G-clique iff no complement edge fits
// inside it.
ComplementReport complement_threshold_check(const Hypergraph& G,
                                            const Hypergraph& H, int k);

}  // namespace hq
