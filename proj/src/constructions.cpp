#include "hq/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "hq/parallel.hpp"

namespace hq {

namespace {

constexpr int kMaxK = 12;

inline bool sort_distinct(VertexId* v, int k) {
    for (int i = 1; i < k; ++i) {
        VertexId x = v[i];
        int j = i - 1;
        while (j >= 0 && v[j] > x) {
            v[j + 1] = v[j];
            --j;
        }
        v[j + 1] = x;
    }
    for (int i = 1; i < k; ++i)
        if (v[i] == v[i - 1]) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// HeadOracle
// ---------------------------------------------------------------------------

std::vector<VertexId> HeadOracle::head_of(const VertexId* T) const {
    KeyedStream ks(seed, "D.head");
    ks.absorb_range(T, T + k);
    std::uint64_t idx = ks.below(binom(k, k - 2));
    VertexId pos[kMaxK];
    colex_unrank(idx, k - 2, pos);  // ascending positions within T
    std::vector<VertexId> out(k - 2);
    for (int i = 0; i < k - 2; ++i) out[i] = T[pos[i]];
    return out;
}

// ---------------------------------------------------------------------------
// Edge predicates
// ---------------------------------------------------------------------------

bool ConstructionHandle::edge(const VertexId* W) const {
    switch (kind) {
        case Kind::A: {
            // sum the colors of all C(k, ell) subsets of W
            int r = ell;
            VertexId idx[kMaxK], sub[kMaxK];
            for (int i = 0; i < r; ++i) idx[i] = VertexId(i);
            long long sum = 0;
            while (true) {
                for (int i = 0; i < r; ++i) sub[i] = W[idx[i]];
                sum += coloring.color(sub);
                int i = 0;
                while (i < r) {
                    int limit = (i + 1 < r) ? idx[i + 1] : k;
                    if (idx[i] + 1 < limit) break;
                    ++i;
                }
                if (i == r) break;
                ++idx[i];
                for (int j = 0; j < i; ++j) idx[j] = VertexId(j);
            }
            return sum % b < a;
        }
        case Kind::B: {
            long long sum = 0;
            int at = 0;
            for (size_t i = 0; i < pi.size(); ++i) {
                sum += colorings[i].color(W + at);
                at += pi[i];
            }
            return sum % b < a;
        }
        case Kind::D: {
            std::vector<VertexId> h = head.head_of(W);
            VertexId rest[2];
            int at = 0;
            {
                size_t hi = 0;
                for (int i = 0; i < k; ++i) {
                    if (hi < h.size() && h[hi] == W[i])
                        ++hi;
                    else
                        rest[at++] = W[i];
                }
            }
            VertexId g1[kMaxK], g2[kMaxK];
            std::copy(h.begin(), h.end(), g1);
            g1[k - 2] = rest[0];
            std::copy(h.begin(), h.end(), g2);
            g2[k - 2] = rest[1];
            sort_distinct(g1, k - 1);
            sort_distinct(g2, k - 1);
            return gcoin.color(g1) == gcoin.color(g2);
        }
    }
    return false;
}

Hypergraph ConstructionHandle::materialize() const {
    Hypergraph H(n, k);
    std::uint64_t tot = binom(n, k);
    KSet W(k);
    for (std::uint64_t r = 0; r < tot; ++r) {
        colex_unrank(r, k, W.data());
        if (edge(W.data())) H.add_edge_rank(r);
    }
    return H;
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

ConstructionHandle sample_A(int n, int k, int ell, int a, int b, std::uint64_t seed) {
    if (k < 2 || k > kMaxK) throw std::invalid_argument("sample_A: bad k");
    if (n < k) throw std::invalid_argument("sample_A: n < k");
    if (ell < 1 || ell >= k) throw std::invalid_argument("sample_A: ell out of [1,k-1]");
    if (a < 1 || a >= b) throw std::invalid_argument("sample_A: need 1 <= a < b");
    ConstructionHandle h;
    h.kind = Kind::A;
    h.n = n;
    h.k = k;
    h.ell = ell;
    h.a = a;
    h.b = b;
    h.seed = seed;
    h.coloring = ModularColoring{seed, "A.color", ell, b};
    return h;
}

ConstructionHandle sample_B(int n, const OrderedPartition& pi, int a, int b,
                            std::uint64_t seed) {
    int k = pi.k();
    if (k < 2 || k > kMaxK) throw std::invalid_argument("sample_B: bad k");
    if (n < k) throw std::invalid_argument("sample_B: n < k");
    if (pi.parts.size() < 2) throw std::invalid_argument("sample_B: need >= 2 blocks");
    if (a < 1 || a >= b) throw std::invalid_argument("sample_B: need 1 <= a < b");
    ConstructionHandle h;
    h.kind = Kind::B;
    h.n = n;
    h.k = k;
    h.a = a;
    h.b = b;
    h.seed = seed;
    h.pi = pi.parts;
    for (size_t i = 0; i < pi.parts.size(); ++i)
        h.colorings.push_back(
            ModularColoring{seed, "B.color." + std::to_string(i + 1), pi.parts[i], b});
    return h;
}

ConstructionHandle sample_D(int n, int k, std::uint64_t seed) {
    if (k < 3 || k > kMaxK) throw std::invalid_argument("sample_D: need k >= 3");
    if (n < k) throw std::invalid_argument("sample_D: n < k");
    ConstructionHandle h;
    h.kind = Kind::D;
    h.n = n;
    h.k = k;
    h.a = 1;
    h.b = 2;
    h.seed = seed;
    h.gcoin = ModularColoring{seed, "D.G", k - 1, 2};
    h.head = HeadOracle{seed, k};
    return h;
}

// ---------------------------------------------------------------------------
// Witnesses
// ---------------------------------------------------------------------------

Hypergraph color_class_graph(const ConstructionHandle& h, int color) {
    if (h.kind != Kind::A) throw std::invalid_argument("color_class_graph: A handles only");
    if (color < 0 || color >= h.b) throw std::invalid_argument("color_class_graph: bad color");
    Hypergraph G(h.n, h.ell);
    std::uint64_t tot = binom(h.n, h.ell);
    KSet S(h.ell);
    for (std::uint64_t r = 0; r < tot; ++r) {
        colex_unrank(r, h.ell, S.data());
        if (h.coloring.color(S.data()) == color) G.add_edge_rank(r);
    }
    return G;
}

Hypergraph witness_cd_from_A(const ConstructionHandle& h) {
    return color_class_graph(h, 0);
}

std::vector<SubsetFamily> witness_expand_from_B(const ConstructionHandle& h) {
    if (h.kind != Kind::B) throw std::invalid_argument("witness_expand_from_B: B handles only");
    int t = int(h.pi.size());
    int q = h.n / t, rem = h.n % t;
    std::vector<SubsetFamily> out;
    int start = 0;
    for (int i = 0; i < t; ++i) {
        int size = q + (i < rem ? 1 : 0);
        int ki = h.pi[i];
        int want = (i + 1 < t) ? 0 : h.a;
        SubsetFamily fam(h.n, ki);
        if (size >= ki) {
            KSet local(ki), global(ki);
            std::uint64_t tot = binom(size, ki);
            for (std::uint64_t r = 0; r < tot; ++r) {
                colex_unrank(r, ki, local.data());
                for (int j = 0; j < ki; ++j) global[j] = VertexId(start + local[j]);
                if (h.colorings[i].color(global.data()) == want) fam.add(global);
            }
        }
        out.push_back(std::move(fam));
        start += size;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

namespace {

struct CensusCore {
    const ConstructionHandle* h;
    const Hypergraph* H;  // materialized copy for fast edge tests
    int k, l, s, n;
    CensusFilter filter;

    // digits: s singles then l pairs, all vertices distinct (pre-checked)
    bool admissible(const VertexId* digits) const {
        switch (filter) {
            case CensusFilter::DistinctAll:
                return true;
            case CensusFilter::LastPairMax:
            case CensusFilter::PrevPairMax: {
                int pj = (filter == CensusFilter::LastPairMax) ? l - 1 : l - 2;
                if (pj < 0) return false;
                VertexId p0 = digits[s + 2 * pj], p1 = digits[s + 2 * pj + 1];
                VertexId lo = std::min(p0, p1);
                for (int i = 0; i < k + l; ++i) {
                    if (i == s + 2 * pj || i == s + 2 * pj + 1) continue;
                    if (digits[i] >= lo) return false;
                }
                return true;
            }
            case CensusFilter::HeadSingles: {
                if (h->kind != Kind::D || l != 2) return false;
                VertexId singles[kMaxK];
                std::copy(digits, digits + s, singles);
                std::sort(singles, singles + s);
                VertexId tuple[kMaxK];
                for (std::uint32_t bvec = 0; bvec < (1u << l); ++bvec) {
                    for (int i = 0; i < s; ++i) tuple[i] = digits[i];
                    for (int j = 0; j < l; ++j)
                        tuple[s + j] = digits[s + 2 * j + ((bvec >> j) & 1)];
                    sort_distinct(tuple, k);
                    std::vector<VertexId> hd = h->head.head_of(tuple);
                    if (!std::equal(hd.begin(), hd.end(), singles, singles + s))
                        return false;
                }
                return true;
            }
        }
        return false;
    }

    bool odd_parity(const VertexId* digits) const {
        VertexId tuple[kMaxK];
        int cnt = 0;
        for (std::uint32_t bvec = 0; bvec < (1u << l); ++bvec) {
            for (int i = 0; i < s; ++i) tuple[i] = digits[i];
            for (int j = 0; j < l; ++j) tuple[s + j] = digits[s + 2 * j + ((bvec >> j) & 1)];
            sort_distinct(tuple, k);  // distinct by precondition
            if (H->has_edge_ptr(tuple)) ++cnt;
        }
        return cnt % 2 == 1;
    }
};

struct EvenOdd {
    std::uint64_t even = 0, odd = 0;
    EvenOdd operator+(const EvenOdd& o) const { return {even + o.even, odd + o.odd}; }
};

}  // namespace

CensusReport octahedron_parity_census(const ConstructionHandle& h, int l,
                                      CensusFilter filter) {
    int k = h.k, n = h.n, dims = k + l;
    if (l < 1 || l > k) throw std::invalid_argument("census: l out of [1,k]");
    if (dims > kMaxK) throw std::invalid_argument("census: k+l too large");
    Hypergraph H = h.materialize();
    CensusCore core{&h, &H, k, l, k - l, n, filter};
    unsigned __int128 tot128 = 1;
    for (int i = 0; i < dims; ++i) tot128 *= unsigned(n);
    if (tot128 > (1ull << 32)) throw std::invalid_argument("census: n^(k+l) too large");
    std::uint64_t total = std::uint64_t(tot128);
    EvenOdd eo = parallel_reduce<EvenOdd>(total, {}, [&](std::uint64_t lo, std::uint64_t hi) {
        EvenOdd acc;
        VertexId digits[2 * kMaxK];
        std::uint64_t c = lo;
        for (int d = 0; d < dims; ++d) {
            digits[d] = VertexId(c % n);
            c /= n;
        }
        for (std::uint64_t at = lo; at < hi; ++at) {
            bool distinct = true;
            for (int i = 0; i < dims && distinct; ++i)
                for (int j = i + 1; j < dims; ++j)
                    if (digits[i] == digits[j]) {
                        distinct = false;
                        break;
                    }
            if (distinct && core.admissible(digits)) {
                if (core.odd_parity(digits))
                    ++acc.odd;
                else
                    ++acc.even;
            }
            for (int d = 0; d < dims; ++d) {
                if (++digits[d] < n) break;
                digits[d] = 0;
            }
        }
        return acc;
    });
    return {eo.even, eo.odd, eo.even + eo.odd};
}

CensusReport octahedron_parity_census_sampled(const ConstructionHandle& h, int l,
                                              CensusFilter filter,
                                              std::uint64_t samples,
                                              std::uint64_t seed) {
    int k = h.k, n = h.n, dims = k + l;
    if (l < 1 || l > k) throw std::invalid_argument("census: l out of [1,k]");
    if (dims > kMaxK) throw std::invalid_argument("census: k+l too large");
    Hypergraph H = h.materialize();
    CensusCore core{&h, &H, k, l, k - l, n, filter};
    KeyedStream ks(seed, "census.sample");
    CensusReport rep;
    VertexId digits[2 * kMaxK];
    while (rep.population < samples) {
        for (int d = 0; d < dims; ++d) digits[d] = VertexId(ks.below(std::uint64_t(n)));
        bool distinct = true;
        for (int i = 0; i < dims && distinct; ++i)
            for (int j = i + 1; j < dims; ++j)
                if (digits[i] == digits[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct || !core.admissible(digits)) continue;
        if (core.odd_parity(digits))
            ++rep.odd;
        else
            ++rep.even;
        ++rep.population;
    }
    return rep;
}

}  // namespace hq
