#pragma once
// Quasirandomness measures: discrepancy, expansion counts, clique-degree
// threshold discrepancy, octahedron parity, and deviation sums.
//
// Conventions used throughout:
//  * A "squashed octahedron" placement is k-l single vertices x_1..x_{k-l}
//    plus l vertex pairs (y_{j,0}, y_{j,1}); each choice vector b in {0,1}^l
//    selects the k-tuple (x_1,...,x_{k-l}, y_{1,b_1},...,y_{l,b_l}).
//  * eta of a placement is +1 iff the number of choice vectors whose
//    selected tuple forms a k-SET that is an edge is even.  Selections with
//    repeated vertices are never edges; a collapsed pair contributes its
//    selection once per choice, which keeps the parity neutral.  This
//    multiplicity convention is what makes the restriction and
//    Cauchy-Schwarz inequalities below exact finite identities (eta then
//    factors through the choice hypercube).
//  * deviation(l) sums eta over ALL n^{k+l} placements, repeats included.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hq/hypergraph.hpp"
#include "hq/rational.hpp"

namespace hq {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

enum class Mode { Exact, Sampled };

struct MeasureConfig {
    Mode mode = Mode::Exact;
    std::uint64_t sample_count = 0;          // > 0 in sampled mode
    std::uint64_t seed = 0;
    std::uint64_t exact_threshold = 1ull << 26;  // max enumeration size

    static MeasureConfig exact(std::uint64_t threshold = 1ull << 26) {
        return MeasureConfig{Mode::Exact, 0, 0, threshold};
    }
    static MeasureConfig sampled(std::uint64_t count, std::uint64_t seed) {
        return MeasureConfig{Mode::Sampled, count, seed, 1ull << 26};
    }
};

// ---------------------------------------------------------------------------
// Octahedron placements and tuple predicates
// ---------------------------------------------------------------------------

struct OctahedronSpec {
    std::vector<VertexId> singles;                    // x_1..x_{k-l}
    std::vector<std::array<VertexId, 2>> pairs;       // (y_{j,0}, y_{j,1})
    int l() const { return int(pairs.size()); }
    int k() const { return int(singles.size() + pairs.size()); }
};

// A subset of V^k given as an intersection of coordinate-cylinder factors:
// each factor (i, test) accepts a tuple iff test() accepts the (k-1)-tuple
// obtained by deleting coordinate i (1-based) — i.e. the factor is complete
// in coordinate i.  An optional general test over full k-tuples may be
// intersected in.  No factors and no general test means ALL of V^k.
struct FactoredPredicate {
    struct Factor {
        int coord;  // 1-based
        std::function<bool(const VertexId*)> test;  // receives k-1 entries
    };
    int k = 0;
    std::vector<Factor> factors;                      // distinct coords
    std::function<bool(const VertexId*)> general;     // may be empty

    static FactoredPredicate all(int k) { return FactoredPredicate{k, {}, {}}; }
    static FactoredPredicate cylinder(int k, int coord,
                                      std::function<bool(const VertexId*)> test);
    bool is_all() const { return factors.empty() && !general; }
    bool contains(const VertexId* tuple) const;       // k entries
    // Set intersection; factors on the same coordinate are composed.
    FactoredPredicate intersect(const FactoredPredicate& other) const;
    void validate() const;  // distinct coords in [1,k]
};

// +1 iff the number of selected k-set edges, counted with choice
// multiplicity, is even (see header comment).
int eta_multiplicity(const Hypergraph& H, const OctahedronSpec& spec);

// The documented set-collapse parity: build the collection of DISTINCT
// k-sets arising from selections with k distinct vertices, and return +1
// iff the number of them that are edges is even.  parts: k sets of size 1
// or 2 (A_1;...;A_k).  Agrees with eta_multiplicity whenever all selections
// are distinct k-sets.
int eta(const Hypergraph& H, const std::vector<std::vector<VertexId>>& parts);

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

struct DiscResult {
    Rat defect;                   // max |e(U) - p C(|U|,k)| found
    std::vector<VertexId> witness;
    bool lower_bound_only;        // true in sampled mode: NOT the max
};

// Exact mode enumerates all 2^n subsets (requires 2^n <= exact_threshold,
// else throws with a pointer to sampled mode).  Sampled mode takes the max
// over sample_count seeded uniform subsets plus every vertex-prefix set and
// the full set; that is a certified lower bound on the true defect.
DiscResult disc_defect(const Hypergraph& H, const RationalDensity& p,
                       const MeasureConfig& cfg);

// Number of ordered tuples (s_1,...,s_t), s_i in S_i, that are pairwise
// disjoint and whose union is an edge of H.  Arities must sum to k.
std::uint64_t expansion_count(const Hypergraph& H,
                              const std::vector<SubsetFamily>& S);

// |e(S_1..S_t) - p * |S_1|...|S_t||, exact.
Rat expansion_defect(const Hypergraph& H, const std::vector<SubsetFamily>& S,
                     const RationalDensity& p);

struct PartiteIdentityReport {
    // Size identity: |S_1|...|S_t| * t^{n-k}  ==  sum over ordered
    // partitions (P_1..P_t) of V into nonempty parts of prod |S_i[P_i]|.
    std::uint64_t size_lhs_scaled = 0, size_rhs = 0;
    // e(.) analogue: e(S_1..S_t) * t^{n-k} == sum of e(S_1[P_1]..S_t[P_t]).
    std::uint64_t e_lhs_scaled = 0, e_rhs = 0;
    std::uint64_t partitions_summed = 0;   // must equal t! * S(n,t)
    std::uint64_t stirling_scaled = 0;     // t! * S(n,t)
    bool size_ok = false, e_ok = false, count_ok = false;
    bool pass() const { return size_ok && e_ok && count_ok; }
};

// Requires pairwise-disjoint family supports and t^n <= exact_threshold.
PartiteIdentityReport partite_expansion_identity_check(
    const Hypergraph& H, const std::vector<SubsetFamily>& S,
    const MeasureConfig& cfg);

struct CdResult {
    Rat defect;             // |hits - p*total|
    std::uint64_t hits = 0;   // threshold k-sets that are H-edges
    std::uint64_t total = 0;  // k-sets T of V(G) with e_G(T) >= s
};

// G is an l-uniform graph on a vertex prefix of H (V(G) = {0..n_G-1}).
// Counts k-sets of V(G) inducing at least s edges of G; s in [1, C(k,l)].
CdResult cd_threshold_defect(const Hypergraph& H, const Hypergraph& G, int s,
                             const RationalDensity& p);

struct DevResult {
    bool exact = true;
    long long value = 0;        // exact mode: the full signed sum
    double mean = 0.0;          // sampled: estimate of value / n^{k+l}
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

// Signed eta-sum over placements whose 2^l selected tuples all lie in P
// (P = nullptr means all of V^k).  Exact mode enumerates all n^{k+l}
// placements (requires n^{k+l} <= exact_threshold); sampled mode returns an
// unbiased estimate of the normalized sum with its standard error.
DevResult deviation(const Hypergraph& H, int l, const FactoredPredicate* P,
                    const MeasureConfig& cfg);

// Convenience: exact unrestricted deviation.
long long deviation_exact(const Hypergraph& H, int l,
                          std::uint64_t exact_threshold = 1ull << 26);

}  // namespace hq
