#pragma once
// Integer partitions, refinement order, and the property-implication poset.
//
// A proper partition of k is an unordered list of at least two positive
// parts summing to k (stored sorted descending).  pi' refines pi when the
// fine parts can be grouped — via a surjection onto the coarse indices —
// into sums equal to the coarse parts.  Refinement indexes the implication
// order of the Expand properties; together with the CD and Dev chains it
// generates the full property poset exported here as a Hasse diagram.

#include <optional>
#include <string>
#include <vector>

namespace hq {

// Sorted descending, >= 2 parts, all parts >= 1.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> p);
    int k() const;
    int max_part() const { return parts.front(); }
    std::string str() const;  // e.g. "(2,1)"
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

// Order matters (block sizes of construction B); parts >= 1, >= 2 of them.
struct OrderedPartition {
    std::vector<int> parts;

    explicit OrderedPartition(std::vector<int> p);
    int k() const;
    std::string str() const;
};

// phi maps fine-part index -> coarse-part index; onto, sums match.
struct RefinementWitness {
    std::vector<int> phi;
};

// All proper partitions of k, sorted descending lexicographically.
std::vector<Partition> enumerate_partitions(int k);

// Witness that `fine` refines `coarse`, or nullopt if it does not.
// Throws if the two partitions sum to different totals.
std::optional<RefinementWitness> is_refinement(const Partition& fine,
                                               const Partition& coarse);

// ---------------------------------------------------------------------------
// Property poset
// ---------------------------------------------------------------------------

enum class PropertyKind { Disc, Expand, CD, Dev };

struct PropertyNode {
    PropertyKind kind;
    int level = 0;                // CD/Dev level
    std::vector<int> partition;   // Expand partition (sorted descending)

    std::string label() const;    // "Disc", "Expand[2,1]", "CD(2)", "Dev(3)"
    bool operator==(const PropertyNode& o) const;
};

// Nodes are equivalence classes of properties (some properties coincide:
// the bottom class {Disc, CD(1), Expand[1,...,1]} and {CD(k-1), Dev(k)}).
// Edges are the Hasse cover relations of "implies".
struct PropertyPoset {
    int k = 0;
    std::vector<std::vector<PropertyNode>> classes;  // each sorted, canonical
    std::vector<std::pair<int, int>> hasse;          // (from, to): from implies to

    std::string class_label(int i) const;  // members joined by " = "
    // Full implication relation (reflexive-transitive closure of hasse).
    bool implies(int from, int to) const;
    // Index of the class containing the given property, or -1.
    int find(const PropertyNode& p) const;

    std::string to_dot() const;   // deterministic, byte-stable
    std::string to_json() const;  // nodes / edges / equivalences
};

// Build the implication poset for k-uniform properties (k >= 3, else throws):
// Expand[pi] for every proper pi, CD(l) for 1 <= l <= k-1, Dev(l) for
// 2 <= l <= k, Disc; reduced to equivalence classes and Hasse edges.
PropertyPoset build_property_poset(int k);

}  // namespace hq
