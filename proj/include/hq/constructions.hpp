#pragma once
// Seeded random hypergraph constructions and their failure witnesses.
//
//  A(n, k, l, a/b):  color every l-subset with a uniform color in {0..b-1};
//                    a k-set W is an edge iff the sum of its C(k,l)
//                    subset colors is < a (mod b).
//  B(n, pi, a/b):    pi = (k_1,...,k_t) ordered; sort W ascending and split
//                    it into consecutive blocks W_1..W_t of those sizes;
//                    W is an edge iff sum_i c_i(W_i) < a (mod b), where c_i
//                    colors k_i-subsets.
//  D(n, k):          sample a (k-1)-uniform G by fair coin; every k-set T
//                    designates a uniform (k-2)-subset as its head; T is an
//                    edge iff the two (k-1)-sets head+{y}, head+{z} (y,z the
//                    non-head vertices) are both or neither edges of G.
//
// All randomness is derived from (seed, domain label, canonical subset) via
// KeyedStream, so a handle's edge predicate is a pure function: the same
// parameters and seed always give the same hypergraph and witnesses.

#include <cstdint>
#include <string>
#include <vector>

#include "hq/hypergraph.hpp"
#include "hq/partitions.hpp"
#include "hq/prf.hpp"

namespace hq {

struct ModularColoring {
    std::uint64_t seed = 0;
    std::string label;
    int r = 2;  // subset arity
    int b = 2;  // modulus

    int color(const VertexId* verts) const {  // sorted, r entries
        KeyedStream ks(seed, label);
        ks.absorb_range(verts, verts + r);
        return int(ks.below(std::uint64_t(b)));
    }
};

struct HeadOracle {
    std::uint64_t seed = 0;
    int k = 3;

    // The designated (k-2)-subset of the sorted k-set T, uniform per T.
    std::vector<VertexId> head_of(const VertexId* T) const;
};

enum class Kind { A, B, D };

struct ConstructionHandle {
    Kind kind;
    int n = 0, k = 0;
    int a = 1, b = 2;
    int ell = 2;                    // A only
    std::vector<int> pi;            // B only (ordered block sizes)
    std::uint64_t seed = 0;

    ModularColoring coloring;                // A
    std::vector<ModularColoring> colorings;  // B, one per block
    ModularColoring gcoin;                   // D: (k-1)-graph coin (b=2)
    HeadOracle head;                         // D

    // Pure edge predicate on a sorted k-set; safe to call concurrently.
    bool edge(const VertexId* W) const;
    Hypergraph materialize() const;
    RationalDensity density() const { return RationalDensity(a, b); }
};

ConstructionHandle sample_A(int n, int k, int ell, int a, int b, std::uint64_t seed);
ConstructionHandle sample_B(int n, const OrderedPartition& pi, int a, int b,
                            std::uint64_t seed);
ConstructionHandle sample_D(int n, int k, std::uint64_t seed);

// The l-uniform graph formed by the l-sets of the given color (A only).
Hypergraph color_class_graph(const ConstructionHandle& h, int color);

// CD failure witness for A: the zero-color graph.  Every k-clique of it has
// subset-color sum 0 < a, hence is an A-edge; so the k-sets it marks as
// cliques are hit at rate 1 instead of p.
Hypergraph witness_cd_from_A(const ConstructionHandle& h);

// Expansion failure witness for B: split V into t consecutive ranges X_i
// (the first n mod t of size ceil(n/t)), take S_i = the k_i-subsets of X_i
// colored 0 for i < t and colored a for i = t.  Every cross tuple then has
// block-color sum exactly a, so not one union is an edge: e(S_1..S_t) = 0.
std::vector<SubsetFamily> witness_expand_from_B(const ConstructionHandle& h);

// ---------------------------------------------------------------------------
// Octahedron parity census
// ---------------------------------------------------------------------------

// Population: placements at the given level l whose k+l vertices are all
// distinct, further filtered by:
//   DistinctAll  - no further condition (baseline census; near-balanced for A);
//   LastPairMax  - both vertices of the last pair exceed every other vertex;
//   PrevPairMax  - both vertices of the second-to-last pair do;
//   HeadSingles  - the singles equal the head of every selection (D, l=2).
// On the pair-max populations, construction B with unit last block and
// modulus 2 makes every placement induce an even number of edges (the color
// sums pair up), and construction D does the same on the head population;
// odd must be 0 there exactly, which is the mass that keeps the deviation
// sum of order n^{k+l}.
enum class CensusFilter { DistinctAll, LastPairMax, PrevPairMax, HeadSingles };

struct CensusReport {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
    std::uint64_t population = 0;  // placements examined (even + odd)
};

// Exhaustive census over all ordered distinct-vertex placements.
CensusReport octahedron_parity_census(const ConstructionHandle& h, int l,
                                      CensusFilter filter);

// Sampled census: draws until `samples` placements pass the filter.
CensusReport octahedron_parity_census_sampled(const ConstructionHandle& h, int l,
                                              CensusFilter filter,
                                              std::uint64_t samples,
                                              std::uint64_t seed);

}  // namespace hq
