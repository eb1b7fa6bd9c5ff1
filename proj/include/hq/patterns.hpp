#pragma once
// Small pattern hypergraphs, pi-linearity certificates, the 4-edge cycle
// C_{(k1,k2),4}, and labeled subgraph counting.
//
// F is pi-linear when its edges can be ordered E_1..E_m and each E_i split
// into parts of sizes pi such that every earlier intersection E_j ∩ E_i
// (j < i) fits inside a single part of E_i's split.  The certificate is the
// ordering plus the splits; verification is a direct replay of the
// definition, independent of the search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hq/hypergraph.hpp"
#include "hq/measures.hpp"
#include "hq/partitions.hpp"

namespace hq {

struct PatternHypergraph {
    int k = 0;
    int v = 0;                    // labeled vertices 0..v-1
    std::vector<KSet> edges;      // each sorted ascending
    // Vertex groups of build_cycle (X1, X2, Y1, Y2), for introspection.
    std::vector<std::vector<VertexId>> groups;
};

struct PiLinearCertificate {
    std::vector<int> edge_order;  // indices into PatternHypergraph::edges
    // parts[i]: the split of edges[edge_order[i]]; parts sorted internally.
    std::vector<std::vector<KSet>> parts;
    std::string to_json() const;
};

// Exhaustive backtracking over edge orderings and splits.  Definitive:
// returns a certificate iff one exists.  Guard: m <= 12 and v <= 24.
std::optional<PiLinearCertificate> pi_linear_certificate(
    const PatternHypergraph& F, const Partition& pi);

// Replays the definition against a claimed certificate.
bool verify_pi_linear_certificate(const PatternHypergraph& F,
                                  const Partition& pi,
                                  const PiLinearCertificate& cert);

// The 4-edge cycle on groups X1, X2 (size k1) and Y1, Y2 (size k2) with
// edge set {X_i ∪ Y_j}; 2(k1+k2) vertices.
PatternHypergraph build_cycle(int k1, int k2);

struct CountResult {
    bool exact = true;
    std::uint64_t value = 0;     // exact: number of labeled copies
    double estimate = 0.0;       // sampled: success rate * n^(v) falling
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

// Labeled copies: edge-preserving injections V(F) -> V(H) (non-edges of F
// are unconstrained).  Exact mode requires n^v <= exact_threshold; sampled
// mode estimates the injection success probability over sample_count
// uniform injections and scales by n(n-1)...(n-v+1).
CountResult count_labeled(const PatternHypergraph& F, const Hypergraph& H,
                          const MeasureConfig& cfg);

}  // namespace hq
