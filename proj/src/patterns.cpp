#include "hq/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hq/prf.hpp"

namespace hq {

namespace {

// All ways to split `elems` (sorted) into unordered parts whose sizes are
// exactly pi (descending).  Parts of equal size are kept sorted by their
// minimum, so every split is produced once.
void enumerate_splits(const KSet& elems, const std::vector<int>& sizes, int at,
                      std::vector<bool>& taken, std::vector<KSet>& cur,
                      std::vector<std::vector<KSet>>& out) {
    int k = int(elems.size());
    if (at == int(sizes.size())) {
        out.push_back(cur);
        return;
    }
    // choose a sizes[at]-subset of the untaken elements; when the previous
    // part has the same size, force a lexicographically later minimum
    int lower = -1;
    if (at > 0 && sizes[at] == sizes[at - 1]) lower = cur[at - 1][0];
    std::vector<int> pool;
    for (int i = 0; i < k; ++i)
        if (!taken[i] && elems[i] > lower) pool.push_back(i);
    // the part's minimum must be the first pool element greater than lower;
    // enumerate combinations of the pool
    int r = sizes[at];
    if (int(pool.size()) < r) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        // equal-size ordering requires the minimum to be pool[idx[0]]; all
        // combinations are fine for distinct sizes, and the lower bound
        // already enforces min > previous min for equal sizes.
        KSet part(r);
        for (int i = 0; i < r; ++i) part[i] = elems[pool[idx[i]]];
        for (int i = 0; i < r; ++i) taken[pool[idx[i]]] = true;
        cur.push_back(part);
        enumerate_splits(elems, sizes, at + 1, taken, cur, out);
        cur.pop_back();
        for (int i = 0; i < r; ++i) taken[pool[idx[i]]] = false;
        // next combination (ascending index vectors over pool)
        int i = r - 1;
        while (i >= 0 && idx[i] == int(pool.size()) - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::vector<KSet>> splits_of(const KSet& edge, const Partition& pi) {
    std::vector<std::vector<KSet>> out;
    std::vector<bool> taken(edge.size(), false);
    std::vector<KSet> cur;
    enumerate_splits(edge, pi.parts, 0, taken, cur, out);
    return out;
}

bool subset_of(const KSet& a, const KSet& b) {  // both sorted
    size_t j = 0;
    for (VertexId x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

KSet intersect_sorted(const KSet& a, const KSet& b) {
    KSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

// A split is compatible with constraint sets iff every constraint lies
// inside a single part.
bool split_ok(const std::vector<KSet>& split, const std::vector<KSet>& constraints) {
    for (const KSet& c : constraints) {
        bool inside = false;
        for (const KSet& part : split)
            if (subset_of(c, part)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

}  // namespace

std::optional<PiLinearCertificate> pi_linear_certificate(const PatternHypergraph& F,
                                                         const Partition& pi) {
    int m = int(F.edges.size());
    if (m > 12 || F.v > 24)
        throw std::invalid_argument("pi_linear_certificate: pattern too large (m<=12, v<=24)");
    if (pi.k() != F.k) throw std::invalid_argument("pi_linear_certificate: pi must sum to k");
    for (const KSet& e : F.edges)
        if (int(e.size()) != F.k || !std::is_sorted(e.begin(), e.end()))
            throw std::invalid_argument("pi_linear_certificate: malformed edge");
    if (m == 0) return PiLinearCertificate{};

    // Whether edge e can extend a placed set S depends only on S, so search
    // the subset lattice once, memoizing the split that admits each step.
    std::vector<std::vector<std::vector<KSet>>> all_splits(m);
    for (int e = 0; e < m; ++e) all_splits[e] = splits_of(F.edges[e], pi);

    std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
    // parent[S] = (prev_mask, edge, split index) for the step that reached S
    struct Step {
        std::uint32_t prev = 0;
        int edge = -1, split = -1;
    };
    std::vector<Step> parent(std::size_t(full) + 1);
    std::vector<bool> reached(std::size_t(full) + 1, false);
    reached[0] = true;
    std::vector<std::uint32_t> frontier{0};
    std::vector<std::uint32_t> next;
    while (!frontier.empty() && !reached[full]) {
        next.clear();
        for (std::uint32_t S : frontier) {
            for (int e = 0; e < m && !reached[full]; ++e) {
                if ((S >> e) & 1) continue;
                std::uint32_t T = S | (1u << e);
                if (reached[T]) continue;
                std::vector<KSet> constraints;
                for (int j = 0; j < m; ++j)
                    if ((S >> j) & 1) {
                        KSet c = intersect_sorted(F.edges[j], F.edges[e]);
                        if (!c.empty()) constraints.push_back(std::move(c));
                    }
                for (int si = 0; si < int(all_splits[e].size()); ++si) {
                    if (split_ok(all_splits[e][si], constraints)) {
                        reached[T] = true;
                        parent[T] = {S, e, si};
                        next.push_back(T);
                        break;
                    }
                }
            }
        }
        frontier.swap(next);
    }
    if (!reached[full]) return std::nullopt;

    PiLinearCertificate cert;
    std::uint32_t at = full;
    while (at != 0) {
        const Step& st = parent[at];
        cert.edge_order.push_back(st.edge);
        cert.parts.push_back(all_splits[st.edge][st.split]);
        at = st.prev;
    }
    std::reverse(cert.edge_order.begin(), cert.edge_order.end());
    std::reverse(cert.parts.begin(), cert.parts.end());
    return cert;
}

bool verify_pi_linear_certificate(const PatternHypergraph& F, const Partition& pi,
                                  const PiLinearCertificate& cert) {
    int m = int(F.edges.size());
    if (int(cert.edge_order.size()) != m || int(cert.parts.size()) != m) return false;
    std::vector<bool> seen(m, false);
    for (int e : cert.edge_order) {
        if (e < 0 || e >= m || seen[e]) return false;
        seen[e] = true;
    }
    for (int i = 0; i < m; ++i) {
        const KSet& edge = F.edges[cert.edge_order[i]];
        const std::vector<KSet>& split = cert.parts[i];
        // split partitions the edge with part sizes == pi (as multisets)
        std::vector<int> sizes;
        KSet acc;
        for (const KSet& part : split) {
            if (part.empty() || !std::is_sorted(part.begin(), part.end())) return false;
            sizes.push_back(int(part.size()));
            acc.insert(acc.end(), part.begin(), part.end());
        }
        std::sort(sizes.begin(), sizes.end(), std::greater<int>());
        if (sizes != pi.parts) return false;
        std::sort(acc.begin(), acc.end());
        if (acc != edge) return false;
        for (int j = 0; j < i; ++j) {
            KSet c = intersect_sorted(F.edges[cert.edge_order[j]], edge);
            if (c.empty()) continue;
            bool inside = false;
            for (const KSet& part : split)
                if (subset_of(c, part)) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
    }
    return true;
}

std::string PiLinearCertificate::to_json() const {
    std::string s = "{\"edge_order\":[";
    for (size_t i = 0; i < edge_order.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(edge_order[i]);
    }
    s += "],\"parts\":[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += '[';
        for (size_t j = 0; j < parts[i].size(); ++j) {
            if (j) s += ',';
            s += '[';
            for (size_t t = 0; t < parts[i][j].size(); ++t) {
                if (t) s += ',';
                s += std::to_string(parts[i][j][t]);
            }
            s += ']';
        }
        s += ']';
    }
    s += "]}";
    return s;
}

PatternHypergraph build_cycle(int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("build_cycle: parts must be positive");
    PatternHypergraph F;
    F.k = k1 + k2;
    F.v = 2 * (k1 + k2);
    auto range = [](int lo, int len) {
        std::vector<VertexId> out(len);
        for (int i = 0; i < len; ++i) out[i] = VertexId(lo + i);
        return out;
    };
    std::vector<VertexId> X1 = range(0, k1), X2 = range(k1, k1);
    std::vector<VertexId> Y1 = range(2 * k1, k2), Y2 = range(2 * k1 + k2, k2);
    F.groups = {X1, X2, Y1, Y2};
    auto join = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
        KSet e = a;
        e.insert(e.end(), b.begin(), b.end());
        std::sort(e.begin(), e.end());
        return e;
    };
    F.edges = {join(X1, Y1), join(X1, Y2), join(X2, Y1), join(X2, Y2)};
    return F;
}

CountResult count_labeled(const PatternHypergraph& F, const Hypergraph& H,
                          const MeasureConfig& cfg) {
    int v = F.v, n = H.n();
    if (F.k != H.k()) throw std::invalid_argument("count_labeled: arity mismatch");
    if (n > 63) throw std::invalid_argument("count_labeled: n > 63 unsupported");
    for (const KSet& e : F.edges)
        for (VertexId x : e)
            if (x < 0 || x >= v) throw std::invalid_argument("count_labeled: edge vertex out of range");

    // edges become checkable once their max vertex is assigned
    std::vector<std::vector<int>> due(v);
    for (int ei = 0; ei < int(F.edges.size()); ++ei)
        due[F.edges[ei].back()].push_back(ei);

    if (cfg.mode == Mode::Exact) {
        unsigned __int128 work = 1;
        for (int i = 0; i < v; ++i) {
            work *= unsigned(n);
            if (work > cfg.exact_threshold)
                throw std::invalid_argument("count_labeled: n^v exceeds exact_threshold");
        }
        std::vector<VertexId> map(v);
        std::vector<VertexId> img(F.k);
        std::uint64_t count = 0;
        auto rec = [&](auto&& self, int depth, std::uint64_t used) -> void {
            if (depth == v) {
                ++count;
                return;
            }
            for (int x = 0; x < n; ++x) {
                std::uint64_t bit = 1ull << x;
                if (used & bit) continue;
                map[depth] = VertexId(x);
                bool ok = true;
                for (int ei : due[depth]) {
                    const KSet& e = F.edges[ei];
                    for (size_t i = 0; i < e.size(); ++i) img[i] = map[e[i]];
                    std::sort(img.begin(), img.end());
                    if (!H.has_edge_ptr(img.data())) {
                        ok = false;
                        break;
                    }
                }
                if (ok) self(self, depth + 1, used | bit);
            }
        };
        rec(rec, 0, 0);
        CountResult res;
        res.exact = true;
        res.value = count;
        return res;
    }

    if (cfg.sample_count == 0)
        throw std::invalid_argument("count_labeled: sampled mode needs sample_count > 0");
    if (v > n) {
        CountResult res;
        res.exact = false;
        res.samples = cfg.sample_count;
        return res;
    }
    KeyedStream ks(cfg.seed, "count.sample");
    std::vector<VertexId> perm(n), img(F.k);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
        for (int i = 0; i < n; ++i) perm[i] = VertexId(i);
        for (int i = 0; i < v; ++i) {
            int j = i + int(ks.below(std::uint64_t(n - i)));
            std::swap(perm[i], perm[j]);
        }
        bool ok = true;
        for (const KSet& e : F.edges) {
            for (size_t i = 0; i < e.size(); ++i) img[i] = perm[e[i]];
            std::sort(img.begin(), img.end());
            if (!H.has_edge_ptr(img.data())) {
                ok = false;
                break;
            }
        }
        if (ok) ++hits;
    }
    double N = double(cfg.sample_count);
    double phat = double(hits) / N;
    double falling = 1.0;
    for (int i = 0; i < v; ++i) falling *= double(n - i);
    CountResult res;
    res.exact = false;
    res.samples = cfg.sample_count;
    res.estimate = phat * falling;
    res.std_error = std::sqrt(std::max(0.0, phat * (1.0 - phat) / N)) * falling;
    return res;
}

}  // namespace hq
