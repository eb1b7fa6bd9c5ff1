#pragma once
// k-uniform hypergraphs with O(1) edge membership.
//
// Edges are k-element subsets of {0,...,n-1}, stored as one bit each at the
// subset's colexicographic rank:  rank{v_1 < ... < v_k} = sum_i C(v_i, i).
// This makes membership, complementation, and uniform edge indexing O(1)
// while keeping memory at exactly C(n,k) bits (guarded below).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hq/rational.hpp"

namespace hq {

using VertexId = int32_t;
using KSet = std::vector<VertexId>;  // sorted ascending, distinct

// Binomial coefficients.  Values are exact in 64 bits for every (n,r) this
// library accepts; inputs that would overflow throw instead of wrapping.
std::uint64_t binom(int n, int r);

// Colexicographic rank of a sorted k-subset, and its inverse.
std::uint64_t colex_rank(const VertexId* v, int k);
void colex_unrank(std::uint64_t rank, int k, VertexId* out);

// Enumerate all r-subsets of {0..n-1} in colex order (r > n yields empty).
std::vector<KSet> enumerate_ksubsets(int n, int r);

class Hypergraph {
  public:
    // Maximum storage: C(n,k) must stay within 2^33 bits (1 GiB).
    Hypergraph(int n, int k);

    static Hypergraph empty(int n, int k) { return Hypergraph(n, k); }
    static Hypergraph complete(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t universe() const { return total_; }  // C(n,k)
    std::uint64_t edge_count() const { return m_; }

    void add_edge(const KSet& e);
    void add_edge_rank(std::uint64_t r);
    void remove_edge_rank(std::uint64_t r);
    bool has_edge(const KSet& e) const;
    bool has_edge_ptr(const VertexId* v) const;  // sorted, k entries
    bool has_edge_rank(std::uint64_t r) const { return test_(r); }

    // Sorted list of edges, each ascending; colex order.
    std::vector<KSet> edges() const;

    // Number of edges entirely inside U (U need not be sorted).
    std::uint64_t induced_edge_count(const std::vector<VertexId>& U) const;

    // Number of edges of this graph inside the k'-set T (the "induced count
    // in a k-set" used by clique discrepancy): counts r-subsets of T that
    // are edges, where r = uniformity of this graph.
    std::uint64_t induced_count_in_kset(const VertexId* T, int klen) const;

    // All K-cliques of this graph as a K-uniform hypergraph on the same
    // vertex set: a K-set is a clique iff every r-subset is an edge.
    Hypergraph cliques(int K) const;

    // Complement within the complete k-uniform graph (an involution).
    Hypergraph complement() const;

    bool operator==(const Hypergraph& o) const {
        return n_ == o.n_ && k_ == o.k_ && bits_ == o.bits_;
    }

    // Text format: first line "k n m", then m lines of k ascending vertex
    // ids separated by single spaces, lines sorted lexicographically.
    // Round-trips bit-exactly.
    std::string to_text() const;
    static Hypergraph from_text(const std::string& text);
    void save(const std::string& path) const;
    static Hypergraph load(const std::string& path);

  private:
    bool test_(std::uint64_t r) const {
        return (bits_[r >> 6] >> (r & 63)) & 1u;
    }
    int n_, k_;
    std::uint64_t total_;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

// A family of r-element subsets of {0..n-1} with O(1) membership,
// used as the S_i in expansion counts and as construction witnesses.
class SubsetFamily {
  public:
    SubsetFamily(int n, int r);

    int n() const { return n_; }
    int arity() const { return r_; }
    std::uint64_t size() const { return count_; }

    void add(const KSet& s);
    bool contains(const KSet& s) const;
    const std::vector<std::uint64_t>& ranks() const { return ranks_; }
    std::vector<KSet> sets() const;

    // Same text format as Hypergraph ("r n m" header).
    std::string to_text() const;
    static SubsetFamily from_text(const std::string& text);
    void save(const std::string& path) const;
    static SubsetFamily load(const std::string& path);

  private:
    int n_, r_;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> ranks_;  // sorted
};

}  // namespace hq
