#include "hq/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hq/parallel.hpp"
#include "hq/prf.hpp"

namespace hq {

namespace {

constexpr int kMaxK = 12;  // tuple buffers live on the stack

// n^e, throwing when the value would not fit the enumeration budget math.
std::uint64_t pow_checked(std::uint64_t n, int e) {
    unsigned __int128 acc = 1;
    for (int i = 0; i < e; ++i) {
        acc *= n;
        if (acc > (unsigned __int128)~0ull) throw std::overflow_error("pow: exceeds 64 bits");
    }
    return std::uint64_t(acc);
}

// Sort a small tuple in place; returns false if two entries coincide.
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
// FactoredPredicate
// ---------------------------------------------------------------------------

FactoredPredicate FactoredPredicate::cylinder(int k, int coord,
                                              std::function<bool(const VertexId*)> test) {
    if (coord < 1 || coord > k)
        throw std::invalid_argument("FactoredPredicate: coordinate out of range");
    FactoredPredicate P;
    P.k = k;
    P.factors.push_back({coord, std::move(test)});
    return P;
}

void FactoredPredicate::validate() const {
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].coord < 1 || factors[i].coord > k)
            throw std::invalid_argument("FactoredPredicate: coordinate out of range");
        for (size_t j = 0; j < i; ++j)
            if (factors[j].coord == factors[i].coord)
                throw std::invalid_argument("FactoredPredicate: duplicate coordinate");
    }
}

bool FactoredPredicate::contains(const VertexId* tuple) const {
    VertexId buf[kMaxK];
    for (const Factor& f : factors) {
        int at = 0;
        for (int i = 0; i < k; ++i)
            if (i != f.coord - 1) buf[at++] = tuple[i];
        if (!f.test(buf)) return false;
    }
    if (general && !general(tuple)) return false;
    return true;
}

FactoredPredicate FactoredPredicate::intersect(const FactoredPredicate& other) const {
    if (k != other.k) throw std::invalid_argument("intersect: arity mismatch");
    FactoredPredicate out;
    out.k = k;
    out.factors = factors;
    for (const Factor& f : other.factors) {
        bool merged = false;
        for (Factor& g : out.factors) {
            if (g.coord == f.coord) {
                auto a = g.test, b = f.test;
                g.test = [a, b](const VertexId* t) { return a(t) && b(t); };
                merged = true;
                break;
            }
        }
        if (!merged) out.factors.push_back(f);
    }
    if (general && other.general) {
        auto a = general, b = other.general;
        out.general = [a, b](const VertexId* t) { return a(t) && b(t); };
    } else {
        out.general = general ? general : other.general;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Octahedron parity
// ---------------------------------------------------------------------------

int eta_multiplicity(const Hypergraph& H, const OctahedronSpec& spec) {
    int k = spec.k(), l = spec.l(), s = k - l;
    if (k != H.k()) throw std::invalid_argument("eta_multiplicity: arity mismatch");
    if (k > kMaxK) throw std::invalid_argument("eta_multiplicity: k too large");
    VertexId sel[kMaxK], sorted[kMaxK];
    int cnt = 0;
    for (std::uint32_t b = 0; b < (1u << l); ++b) {
        for (int i = 0; i < s; ++i) sel[i] = spec.singles[i];
        for (int j = 0; j < l; ++j) sel[s + j] = spec.pairs[j][(b >> j) & 1];
        std::copy(sel, sel + k, sorted);
        if (sort_distinct(sorted, k) && H.has_edge_ptr(sorted)) ++cnt;
    }
    return (cnt % 2 == 0) ? 1 : -1;
}

int eta(const Hypergraph& H, const std::vector<std::vector<VertexId>>& parts) {
    int k = int(parts.size());
    if (k != H.k()) throw std::invalid_argument("eta: arity mismatch");
    if (k > kMaxK) throw std::invalid_argument("eta: k too large");
    for (const auto& p : parts)
        if (p.size() < 1 || p.size() > 2)
            throw std::invalid_argument("eta: parts must have size 1 or 2");
    // collect the distinct k-sets arising from all selections
    std::vector<std::uint64_t> ranks;
    VertexId sorted[kMaxK];
    std::uint32_t choices = 1;
    for (const auto& p : parts) choices *= std::uint32_t(p.size());
    for (std::uint32_t c = 0; c < choices; ++c) {
        std::uint32_t rem = c;
        for (int i = 0; i < k; ++i) {
            sorted[i] = parts[i][rem % parts[i].size()];
            rem /= std::uint32_t(parts[i].size());
        }
        if (sort_distinct(sorted, k)) ranks.push_back(colex_rank(sorted, k));
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    std::uint64_t cnt = 0;
    for (std::uint64_t r : ranks)
        if (H.has_edge_rank(r)) ++cnt;
    return (cnt % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Discrepancy
// ---------------------------------------------------------------------------

DiscResult disc_defect(const Hypergraph& H, const RationalDensity& p,
                       const MeasureConfig& cfg) {
    int n = H.n(), k = H.k();
    // per-edge vertex bitmasks
    std::vector<std::uint64_t> emasks;
    if (n > 63) throw std::invalid_argument("disc_defect: n > 63 unsupported");
    emasks.reserve(H.edge_count());
    for (const KSet& e : H.edges()) {
        std::uint64_t m = 0;
        for (VertexId v : e) m |= 1ull << v;
        emasks.push_back(m);
    }
    Rat pr = p.rat();
    auto eval = [&](std::uint64_t U) {
        std::uint64_t cnt = 0;
        for (std::uint64_t em : emasks)
            if ((em & U) == em) ++cnt;
        int sz = std::popcount(U);
        return (Rat((long long)cnt) - pr * Rat((long long)binom(sz, k))).abs();
    };
    auto to_set = [&](std::uint64_t U) {
        std::vector<VertexId> out;
        for (int v = 0; v < n; ++v)
            if ((U >> v) & 1) out.push_back(v);
        return out;
    };

    if (cfg.mode == Mode::Exact) {
        if (n >= 63 || (1ull << n) > cfg.exact_threshold)
            throw std::invalid_argument(
                "disc_defect: 2^n exceeds exact_threshold; use sampled mode for a "
                "certified lower bound");
        Rat best(-1);
        std::uint64_t bestU = 0;
        for (std::uint64_t U = 0; U < (1ull << n); ++U) {
            Rat d = eval(U);
            if (d > best) {
                best = d;
                bestU = U;
            }
        }
        return {best, to_set(bestU), false};
    }

    if (cfg.sample_count == 0)
        throw std::invalid_argument("disc_defect: sampled mode needs sample_count > 0");
    KeyedStream ks(cfg.seed, "disc.sample");
    Rat best(-1);
    std::uint64_t bestU = 0;
    std::uint64_t full = (n == 63) ? ~0ull >> 1 : (1ull << n) - 1;
    auto consider = [&](std::uint64_t U) {
        Rat d = eval(U);
        if (d > best) {
            best = d;
            bestU = U;
        }
    };
    for (std::uint64_t s = 0; s < cfg.sample_count; ++s) consider(ks.next() & full);
    for (int i = 1; i <= n; ++i) consider((i == 63) ? full : ((1ull << i) - 1));
    return {best, to_set(bestU), true};
}

// ---------------------------------------------------------------------------
// Expansion
// ---------------------------------------------------------------------------

std::uint64_t expansion_count(const Hypergraph& H, const std::vector<SubsetFamily>& S) {
    int k = H.k(), n = H.n();
    if (n > 63) throw std::invalid_argument("expansion_count: n > 63 unsupported");
    int t = int(S.size());
    if (t == 0) throw std::invalid_argument("expansion_count: no families");
    int arity_sum = 0;
    for (const SubsetFamily& f : S) {
        if (f.n() != n) throw std::invalid_argument("expansion_count: family over wrong n");
        arity_sum += f.arity();
    }
    if (arity_sum != k) throw std::invalid_argument("expansion_count: arities must sum to k");
    for (const SubsetFamily& f : S)
        if (f.size() == 0) return 0;

    // per-family member masks; smaller families drive the outer loops
    std::vector<std::vector<std::uint64_t>> masks(t);
    for (int i = 0; i < t; ++i) {
        masks[i].reserve(S[i].size());
        KSet buf(S[i].arity());
        for (std::uint64_t r : S[i].ranks()) {
            colex_unrank(r, S[i].arity(), buf.data());
            std::uint64_t m = 0;
            for (VertexId v : buf) m |= 1ull << v;
            masks[i].push_back(m);
        }
    }
    std::vector<int> order(t);
    for (int i = 0; i < t; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return masks[a].size() < masks[b].size(); });

    std::uint64_t count = 0;
    VertexId verts[kMaxK];
    auto rec = [&](auto&& self, int depth, std::uint64_t acc) -> void {
        if (depth == t) {
            int at = 0;
            std::uint64_t m = acc;
            while (m) {
                verts[at++] = VertexId(std::countr_zero(m));
                m &= m - 1;
            }
            if (H.has_edge_ptr(verts)) ++count;
            return;
        }
        for (std::uint64_t m : masks[order[depth]])
            if (!(m & acc)) self(self, depth + 1, acc | m);
    };
    rec(rec, 0, 0);
    return count;
}

Rat expansion_defect(const Hypergraph& H, const std::vector<SubsetFamily>& S,
                     const RationalDensity& p) {
    std::uint64_t e = expansion_count(H, S);
    long long prod = 1;
    for (const SubsetFamily& f : S) prod *= (long long)f.size();
    return (Rat((long long)e) - p.rat() * Rat(prod)).abs();
}

// ---------------------------------------------------------------------------
// Partite averaging identity
// ---------------------------------------------------------------------------

PartiteIdentityReport partite_expansion_identity_check(
    const Hypergraph& H, const std::vector<SubsetFamily>& S, const MeasureConfig& cfg) {
    int n = H.n(), k = H.k(), t = int(S.size());
    if (t < 2) throw std::invalid_argument("partite check: need >= 2 families");
    if (n > 63) throw std::invalid_argument("partite check: n > 63 unsupported");
    int arity_sum = 0;
    std::uint64_t support = 0;
    for (const SubsetFamily& f : S) {
        arity_sum += f.arity();
        std::uint64_t fs = 0;
        for (const KSet& s : f.sets())
            for (VertexId v : s) fs |= 1ull << v;
        if (fs & support)
            throw std::invalid_argument("partite check: family supports must be disjoint");
        support |= fs;
    }
    if (arity_sum != k) throw std::invalid_argument("partite check: arities must sum to k");
    std::uint64_t total = pow_checked(std::uint64_t(t), n);
    if (total > cfg.exact_threshold)
        throw std::invalid_argument("partite check: t^n exceeds exact_threshold");

    // family member masks
    std::vector<std::vector<std::uint64_t>> masks(t);
    for (int i = 0; i < t; ++i)
        for (const KSet& s : S[i].sets()) {
            std::uint64_t m = 0;
            for (VertexId v : s) m |= 1ull << v;
            masks[i].push_back(m);
        }

    PartiteIdentityReport rep;
    std::vector<int> part(n);
    std::vector<std::uint64_t> pmask(t);
    std::vector<std::vector<std::uint64_t>> kept(t);
    VertexId verts[kMaxK];
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        std::fill(pmask.begin(), pmask.end(), 0);
        for (int v = 0; v < n; ++v) {
            int pi = int(c % t);
            c /= t;
            part[v] = pi;
            pmask[pi] |= 1ull << v;
        }
        bool surjective = true;
        for (int i = 0; i < t; ++i)
            if (!pmask[i]) {
                surjective = false;
                break;
            }
        if (!surjective) continue;
        ++rep.partitions_summed;
        // restricted families S_i[P_i]
        std::uint64_t prod = 1;
        for (int i = 0; i < t; ++i) {
            kept[i].clear();
            for (std::uint64_t m : masks[i])
                if ((m & pmask[i]) == m) kept[i].push_back(m);
            prod *= kept[i].size();
        }
        rep.size_rhs += prod;
        if (prod == 0) continue;
        // e(S_1[P_1], ..., S_t[P_t]): supports disjoint, so tuples are too
        auto rec = [&](auto&& self, int depth, std::uint64_t acc) -> void {
            if (depth == t) {
                int at = 0;
                std::uint64_t m = acc;
                while (m) {
                    verts[at++] = VertexId(std::countr_zero(m));
                    m &= m - 1;
                }
                if (H.has_edge_ptr(verts)) ++rep.e_rhs;
                return;
            }
            for (std::uint64_t m : kept[depth]) self(self, depth + 1, acc | m);
        };
        rec(rec, 0, 0);
    }

    std::uint64_t scale = pow_checked(std::uint64_t(t), n - k);
    std::uint64_t sizes = 1;
    for (const SubsetFamily& f : S) sizes *= f.size();
    rep.size_lhs_scaled = sizes * scale;
    rep.e_lhs_scaled = expansion_count(H, S) * scale;
    rep.size_ok = rep.size_lhs_scaled == rep.size_rhs;
    rep.e_ok = rep.e_lhs_scaled == rep.e_rhs;
    // surjection count: sum_j (-1)^j C(t,j) (t-j)^n == t! S(n,t)
    long long surj = 0;
    for (int j = 0; j <= t; ++j) {
        long long term = (long long)binom(t, j) * (long long)pow_checked(std::uint64_t(t - j), n);
        surj += (j % 2 == 0) ? term : -term;
    }
    rep.stirling_scaled = std::uint64_t(surj);
    rep.count_ok = rep.partitions_summed == rep.stirling_scaled;
    return rep;
}

// ---------------------------------------------------------------------------
// Clique-degree threshold discrepancy
// ---------------------------------------------------------------------------

CdResult cd_threshold_defect(const Hypergraph& H, const Hypergraph& G, int s,
                             const RationalDensity& p) {
    int k = H.k(), l = G.k(), nG = G.n();
    if (nG > H.n()) throw std::invalid_argument("cd_threshold_defect: V(G) must lie inside V(H)");
    if (s < 1 || std::uint64_t(s) > binom(k, l))
        throw std::invalid_argument("cd_threshold_defect: s out of [1, C(k,l)]");
    CdResult res;
    std::uint64_t tot = binom(nG, k);
    KSet T(k);
    for (std::uint64_t r = 0; r < tot; ++r) {
        colex_unrank(r, k, T.data());
        if (G.induced_count_in_kset(T.data(), k) >= std::uint64_t(s)) {
            ++res.total;
            if (H.has_edge_ptr(T.data())) ++res.hits;
        }
    }
    res.defect = (Rat((long long)res.hits) - p.rat() * Rat((long long)res.total)).abs();
    return res;
}

// ---------------------------------------------------------------------------
// Deviation
// ---------------------------------------------------------------------------

namespace {

struct DevContext {
    const Hypergraph* H;
    int k, l, s, n;       // s = k - l singles
    const FactoredPredicate* P;  // may be null

    // eta (+1/-1) of the placement encoded by digits, or 0 when some
    // selection falls outside P.
    int signed_value(const VertexId* digits) const {
        VertexId tuple[kMaxK], sorted[kMaxK];
        int cnt = 0;
        for (std::uint32_t b = 0; b < (1u << l); ++b) {
            for (int i = 0; i < s; ++i) tuple[i] = digits[i];
            for (int j = 0; j < l; ++j) tuple[s + j] = digits[s + 2 * j + ((b >> j) & 1)];
            if (P && !P->contains(tuple)) return 0;
            std::copy(tuple, tuple + k, sorted);
            if (sort_distinct(sorted, k) && H->has_edge_ptr(sorted)) ++cnt;
        }
        return (cnt % 2 == 0) ? 1 : -1;
    }
};

}  // namespace

DevResult deviation(const Hypergraph& H, int l, const FactoredPredicate* P,
                    const MeasureConfig& cfg) {
    int k = H.k(), n = H.n();
    if (l < 0 || l > k) throw std::invalid_argument("deviation: l out of [0,k]");
    if (k + l > kMaxK) throw std::invalid_argument("deviation: k+l too large");
    if (P) {
        P->validate();
        if (P->k != k) throw std::invalid_argument("deviation: predicate arity mismatch");
        if (P->is_all()) P = nullptr;
    }
    DevContext ctx{&H, k, l, k - l, n, P};
    int dims = k + l;

    if (cfg.mode == Mode::Exact) {
        std::uint64_t total = pow_checked(std::uint64_t(n), dims);
        if (total > cfg.exact_threshold)
            throw std::invalid_argument("deviation: n^(k+l) exceeds exact_threshold");
        long long value = parallel_reduce<long long>(
            total, 0, [&](std::uint64_t lo, std::uint64_t hi) {
                VertexId digits[2 * kMaxK];
                long long acc = 0;
                // decode the odometer once, then advance digit-wise
                std::uint64_t c = lo;
                for (int d = 0; d < dims; ++d) {
                    digits[d] = VertexId(c % n);
                    c /= n;
                }
                for (std::uint64_t at = lo; at < hi; ++at) {
                    acc += ctx.signed_value(digits);
                    for (int d = 0; d < dims; ++d) {
                        if (++digits[d] < n) break;
                        digits[d] = 0;
                    }
                }
                return acc;
            });
        DevResult res;
        res.exact = true;
        res.value = value;
        res.mean = double(value) / double(total);
        return res;
    }

    if (cfg.sample_count == 0)
        throw std::invalid_argument("deviation: sampled mode needs sample_count > 0");
    KeyedStream ks(cfg.seed, "dev.sample");
    long long sum = 0, sumsq = 0;
    VertexId digits[2 * kMaxK];
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
        for (int d = 0; d < dims; ++d) digits[d] = VertexId(ks.below(std::uint64_t(n)));
        int v = ctx.signed_value(digits);
        sum += v;
        sumsq += (long long)v * v;
    }
    DevResult res;
    res.exact = false;
    res.samples = cfg.sample_count;
    double N = double(cfg.sample_count);
    res.mean = double(sum) / N;
    double var = (double(sumsq) / N - res.mean * res.mean) * (N / std::max(1.0, N - 1));
    res.std_error = std::sqrt(std::max(0.0, var) / N);
    return res;
}

long long deviation_exact(const Hypergraph& H, int l, std::uint64_t exact_threshold) {
    MeasureConfig cfg = MeasureConfig::exact(exact_threshold);
    return deviation(H, l, nullptr, cfg).value;
}

}  // namespace hq
