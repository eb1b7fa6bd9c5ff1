// Acceptance suite.  Each criterion is selected with --criterion N; the
// binary prints its measurements as indented lines and finishes with a
// single [PASS]/[FAIL] verdict line.  Exit code 0 = pass, 1 = fail,
// 2 = usage error.  Run without arguments to execute every criterion.
//
// Criterion 12 is expected to fail for construction family A at the
// mandated size: the placements with a repeated choice vertex contribute
// 2n^4 - n^3 to the signed sum, which alone exceeds the 0.05 n^5 budget
// for n < 40.  The binary reports the full sum and the distinct-placement
// subtotal and renders the honest verdict; the ctest wrapper records the
// expected failure.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hq/cdells.hpp"
#include "hq/constructions.hpp"
#include "hq/devtheory.hpp"
#include "hq/hypergraph.hpp"
#include "hq/measures.hpp"
#include "hq/partitions.hpp"
#include "hq/patterns.hpp"
#include "hq/prf.hpp"

#ifndef HQ_GOLDEN_DIR
#define HQ_GOLDEN_DIR "tests/data"
#endif

using namespace hq;

namespace {

std::string ssprintf(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return std::string(buf);
}

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;
    void note(std::string s) { notes.push_back(std::move(s)); }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("violation: " + what);
        }
    }
};

Hypergraph seeded_graph(int n, int k, std::uint64_t seed,
                        std::uint32_t num = 1, std::uint32_t den = 2) {
    Hypergraph H(n, k);
    KeyedStream ks(seed, "acc.graph");
    const std::uint64_t total = binom(n, k);
    for (std::uint64_t r = 0; r < total; ++r)
        if (ks.below(den) < num) H.add_edge_rank(r);
    return H;
}

// Random r-subsets drawn from the vertex window [lo, hi).
SubsetFamily seeded_family(int n, int r, std::uint64_t seed, const char* label,
                           int lo, int hi) {
    SubsetFamily fam(n, r);
    KeyedStream ks(seed, label);
    for (const KSet& s : enumerate_ksubsets(hi - lo, r)) {
        if (ks.below(2) == 0) {
            KSet t;
            for (VertexId v : s) t.push_back(VertexId(v + lo));
            fam.add(t);
        }
    }
    return fam;
}

// ---------------------------------------------------------------------------
// 1. Partite averaging identity, exact, 100 instances.
// ---------------------------------------------------------------------------
Verdict criterion1() {
    Verdict v;
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 5 + int(seed % 3);
        Hypergraph H = seeded_graph(n, 3, seed);
        const int half = n / 2;
        SubsetFamily S1 = seeded_family(n, 2, seed, "acc.fam1", 0, half);
        SubsetFamily S2 = seeded_family(n, 1, seed, "acc.fam2", half, n);
        PartiteIdentityReport rep =
            partite_expansion_identity_check(H, {S1, S2}, MeasureConfig::exact());
        if (rep.pass()) ++ok;
        else v.require(false, ssprintf("identity broke at seed %llu "
                                       "(size %llu vs %llu, e %llu vs %llu)",
                                       (unsigned long long)seed,
                                       (unsigned long long)rep.size_lhs_scaled,
                                       (unsigned long long)rep.size_rhs,
                                       (unsigned long long)rep.e_lhs_scaled,
                                       (unsigned long long)rep.e_rhs));
    }
    v.note(ssprintf("exact instances passed: %d / 100 (k=3, t=2, n in 5..7)", ok));
    return v;
}

// ---------------------------------------------------------------------------
// 2. Threshold-count identity suite, exact, 100 instances.
// ---------------------------------------------------------------------------
Verdict criterion2() {
    Verdict v;
    int ok_moebius = 0, ok_shift = 0, ok_over = 0, ok_comp = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 5 + int(seed % 3);
        Hypergraph G = seeded_graph(n, 2, 2 * seed + 1);
        Hypergraph H = seeded_graph(n, 3, 2 * seed + 2);
        std::vector<int> part_of(n);
        for (int u = 0; u < n; ++u) part_of[u] = u % 3;
        VertexKPartition P(3, part_of);

        const int s = 1 + int(seed % 3);
        IeCounts ie = ie_counts(G, P, s, H);
        if (ie.moebius_ok) ++ok_moebius;
        else v.require(false, ssprintf("inclusion-exclusion inversion at seed %llu",
                                       (unsigned long long)seed));

        PatternSet pats = all_patterns(3, 2);
        const int drop = int(seed % 3);
        PatternSet R{pats[(drop + 1) % 3]};
        if (seed & 1) R.push_back(pats[(drop + 2) % 3]);
        Hypergraph restr = restrict_by_pattern(G, P, R);
        Hypergraph aug = augment_F(restr, P, pats[drop]);
        bool shift_ok = true;
        for (int t = 1; t <= 2; ++t) {
            TransversalCounts w0 = transversal_counts(restr, P, t, &H);
            TransversalCounts w1 = transversal_counts(aug, P, t + 1, &H);
            shift_ok = shift_ok && w0.total == w1.total && w0.in_H == w1.in_H;
        }
        if (shift_ok) ++ok_shift;
        else v.require(false, ssprintf("transversal count shift at seed %llu",
                                       (unsigned long long)seed));

        OvercountReport oc = overcount_identity_check(G, 1 + int(seed % 3), H);
        if (oc.pass()) ++ok_over;
        else v.require(false, ssprintf("overcount identity at seed %llu",
                                       (unsigned long long)seed));

        ComplementReport cc = complement_threshold_check(G, H, 3);
        if (cc.pass()) ++ok_comp;
        else v.require(false, ssprintf("complement identity at seed %llu",
                                       (unsigned long long)seed));
    }
    v.note(ssprintf("inversion %d/100, shift %d/100, overcount %d/100, "
                    "complement %d/100 (k=3, l=2, n in 5..7)",
                    ok_moebius, ok_shift, ok_over, ok_comp));
    return v;
}

// ---------------------------------------------------------------------------
// 3. Deviation inequality suite, exact, 1000 instances.
// ---------------------------------------------------------------------------
Verdict criterion3() {
    Verdict v;
    const int k = 3;
    int ok_sub = 0, ok_cauchy = 0, ok_nonneg = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int l = 1 + int(seed % 3);
        const int n = 5 + int((seed / 3) % 3);
        Hypergraph H = seeded_graph(n, k, seed + 101);
        const VertexId cut = VertexId(1 + seed % std::uint64_t(n - 1));

        const int pcoord = (k - l + 1) + int(seed % std::uint64_t(l));
        const int qcoord = (k - l + 1) + int((seed / 2) % std::uint64_t(l));
        FactoredPredicate P =
            (seed % 4 == 0)
                ? FactoredPredicate::all(k)
                : FactoredPredicate::cylinder(k, pcoord, [cut](const VertexId* u) {
                      return (u[0] + u[1]) % 2 == 0 || u[0] < cut;
                  });
        FactoredPredicate Q =
            FactoredPredicate::cylinder(k, qcoord, [cut](const VertexId* u) {
                return u[0] != cut;
            });

        SubdevReport sub = subdev_inequality_check(H, l, P, Q);
        if (sub.pass()) ++ok_sub;
        else v.require(false,
                       ssprintf("restriction monotonicity at seed %llu: %lld > %lld",
                                (unsigned long long)seed, sub.lhs, sub.rhs));

        CauchyReport cau = cauchy_step_check(H, l, P);
        if (cau.pass()) ++ok_cauchy;
        else v.require(false, ssprintf("level step bound at seed %llu",
                                       (unsigned long long)seed));

        // A predicate complete in every doubled coordinate.
        FactoredPredicate Pc = FactoredPredicate::all(k);
        if (l == 1)
            Pc = FactoredPredicate::cylinder(k, 3, [cut, seed](const VertexId* u) {
                return (u[0] + u[1] + int(seed)) % 3 != 0;
            });
        else if (l == 2)
            Pc = FactoredPredicate::cylinder(k, 2, [cut](const VertexId* u) {
                return u[0] < cut;  // reads coordinate 1 only
            });
        long long dev = deviation(H, l, &Pc, MeasureConfig::exact()).value;
        if (dev >= 0) ++ok_nonneg;
        else v.require(false, ssprintf("negative restricted deviation %lld at seed %llu",
                                       dev, (unsigned long long)seed));
    }
    v.note(ssprintf("monotonicity %d/1000, level step %d/1000, "
                    "non-negativity %d/1000 (k=3, l in 1..3, n in 5..7)",
                    ok_sub, ok_cauchy, ok_nonneg));
    return v;
}

// ---------------------------------------------------------------------------
// 4. Parity censuses: zero odd members.
// ---------------------------------------------------------------------------
Verdict criterion4() {
    Verdict v;
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        ConstructionHandle a = sample_A(12, 3, 2, 1, 2, seed);
        CensusReport ra = octahedron_parity_census(a, 3, CensusFilter::DistinctAll);
        v.note(ssprintf("A n=12 seed %llu level 3 all-distinct: even %llu odd %llu",
                        (unsigned long long)seed, (unsigned long long)ra.even,
                        (unsigned long long)ra.odd));
        v.require(ra.odd == 0, "A level-3 census has odd members");

        ConstructionHandle b = sample_B(12, OrderedPartition({2, 1}), 1, 2, seed);
        CensusReport rb1 = octahedron_parity_census(b, 2, CensusFilter::LastPairMax);
        CensusReport rb2 = octahedron_parity_census(b, 2, CensusFilter::PrevPairMax);
        v.note(ssprintf("B n=12 seed %llu last-pair-max: even %llu odd %llu; "
                        "prev-pair-max: even %llu odd %llu",
                        (unsigned long long)seed, (unsigned long long)rb1.even,
                        (unsigned long long)rb1.odd, (unsigned long long)rb2.even,
                        (unsigned long long)rb2.odd));
        v.require(rb1.odd == 0 && rb2.odd == 0, "B census has odd members");

        ConstructionHandle d = sample_D(12, 3, seed);
        CensusReport rd = octahedron_parity_census(d, 2, CensusFilter::HeadSingles);
        v.note(ssprintf("D n=12 seed %llu head-match: even %llu odd %llu",
                        (unsigned long long)seed, (unsigned long long)rd.even,
                        (unsigned long long)rd.odd));
        v.require(rd.odd == 0, "D census has odd members");
    }

    ConstructionHandle b40 = sample_B(40, OrderedPartition({2, 1}), 1, 2, 3);
    CensusReport sb1 = octahedron_parity_census_sampled(
        b40, 2, CensusFilter::LastPairMax, 1000000, 11);
    CensusReport sb2 = octahedron_parity_census_sampled(
        b40, 2, CensusFilter::PrevPairMax, 1000000, 12);
    ConstructionHandle d40 = sample_D(40, 3, 3);
    CensusReport sd = octahedron_parity_census_sampled(
        d40, 2, CensusFilter::HeadSingles, 1000000, 13);
    v.note(ssprintf("n=40 sampled 10^6 each: B odd %llu/%llu, B' odd %llu/%llu, "
                    "D odd %llu/%llu",
                    (unsigned long long)sb1.odd, (unsigned long long)sb1.population,
                    (unsigned long long)sb2.odd, (unsigned long long)sb2.population,
                    (unsigned long long)sd.odd, (unsigned long long)sd.population));
    v.require(sb1.odd == 0 && sb2.odd == 0 && sd.odd == 0,
              "sampled census found odd members");
    return v;
}

// ---------------------------------------------------------------------------
// 5. B expansion witness: count is exactly zero, 20 seeds.
// ---------------------------------------------------------------------------
Verdict criterion5() {
    Verdict v;
    std::uint64_t min_prod = ~0ull, max_prod = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        ConstructionHandle h = sample_B(60, OrderedPartition({2, 1}), 1, 2, seed);
        Hypergraph H = h.materialize();
        std::vector<SubsetFamily> S = witness_expand_from_B(h);
        std::uint64_t cnt = expansion_count(H, S);
        std::uint64_t prod = std::uint64_t(S[0].size()) * S[1].size();
        min_prod = std::min(min_prod, prod);
        max_prod = std::max(max_prod, prod);
        v.require(cnt == 0, ssprintf("seed %llu produced %llu spanning tuples",
                                     (unsigned long long)seed,
                                     (unsigned long long)cnt));
        v.require(S[0].size() > 0 && S[1].size() > 0,
                  ssprintf("seed %llu witness family empty", (unsigned long long)seed));
    }
    v.note(ssprintf("20 seeds at n=60: every witness spans 0 edges; "
                    "|S1|*|S2| in [%llu, %llu]",
                    (unsigned long long)min_prod, (unsigned long long)max_prod));
    return v;
}

// ---------------------------------------------------------------------------
// 6. A clique witness: every clique of the witness graph is an edge, 20 seeds.
// ---------------------------------------------------------------------------
Verdict criterion6() {
    Verdict v;
    std::uint64_t min_cl = ~0ull, max_cl = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        ConstructionHandle h = sample_A(60, 3, 2, 1, 2, seed);
        Hypergraph H = h.materialize();
        Hypergraph G0 = witness_cd_from_A(h);
        Hypergraph K = G0.cliques(3);
        min_cl = std::min(min_cl, K.edge_count());
        max_cl = std::max(max_cl, K.edge_count());
        v.require(K.edge_count() > 0,
                  ssprintf("seed %llu witness graph has no cliques",
                           (unsigned long long)seed));
        std::uint64_t inside = 0;
        for (const KSet& e : K.edges())
            if (H.has_edge(e)) ++inside;
        v.require(inside == K.edge_count(),
                  ssprintf("seed %llu: only %llu of %llu cliques are edges",
                           (unsigned long long)seed, (unsigned long long)inside,
                           (unsigned long long)K.edge_count()));
    }
    v.note(ssprintf("20 seeds at n=60: all witness cliques are edges; "
                    "clique counts in [%llu, %llu] of %llu triples",
                    (unsigned long long)min_cl, (unsigned long long)max_cl,
                    (unsigned long long)binom(60, 3)));
    return v;
}

// ---------------------------------------------------------------------------
// 7. Oracle equivalence against naive loops, 50 instances.
// ---------------------------------------------------------------------------
long long naive_deviation(const Hypergraph& H, int l) {
    const int k = H.k(), n = H.n();
    const int s = k - l;
    const int dims = k + l;
    std::uint64_t total = 1;
    for (int i = 0; i < dims; ++i) total *= std::uint64_t(n);
    long long sum = 0;
    std::vector<VertexId> slot(dims);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < dims; ++i) {
            slot[i] = VertexId(c % n);
            c /= n;
        }
        int edges = 0;
        for (std::uint32_t b = 0; b < (1u << l); ++b) {
            std::vector<VertexId> t(slot.begin(), slot.begin() + s);
            for (int j = 0; j < l; ++j) t.push_back(slot[s + 2 * j + ((b >> j) & 1)]);
            std::sort(t.begin(), t.end());
            bool distinct = true;
            for (int i = 0; i + 1 < k; ++i)
                if (t[i] == t[i + 1]) distinct = false;
            if (distinct && H.has_edge(t)) ++edges;
        }
        sum += (edges % 2 == 0) ? 1 : -1;
    }
    return sum;
}

std::uint64_t naive_expansion(const Hypergraph& H, const SubsetFamily& S1,
                              const SubsetFamily& S2) {
    std::uint64_t cnt = 0;
    for (const KSet& a : S1.sets())
        for (const KSet& b : S2.sets()) {
            std::vector<VertexId> u;
            u.insert(u.end(), a.begin(), a.end());
            u.insert(u.end(), b.begin(), b.end());
            std::sort(u.begin(), u.end());
            bool distinct = true;
            for (size_t i = 0; i + 1 < u.size(); ++i)
                if (u[i] == u[i + 1]) distinct = false;
            if (distinct && H.has_edge(u)) ++cnt;
        }
    return cnt;
}

std::uint64_t naive_labeled_count(const PatternHypergraph& F, const Hypergraph& H) {
    const int n = H.n();
    std::uint64_t total = 1;
    for (int i = 0; i < F.v; ++i) total *= std::uint64_t(n);
    std::uint64_t cnt = 0;
    std::vector<VertexId> map(F.v);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < F.v; ++i) {
            map[i] = VertexId(c % n);
            c /= n;
        }
        bool injective = true;
        for (int i = 0; i < F.v && injective; ++i)
            for (int j = i + 1; j < F.v; ++j)
                if (map[i] == map[j]) { injective = false; break; }
        if (!injective) continue;
        bool all_edges = true;
        for (const auto& e : F.edges) {
            KSet img;
            for (int x : e) img.push_back(map[x]);
            std::sort(img.begin(), img.end());
            if (!H.has_edge(img)) { all_edges = false; break; }
        }
        if (all_edges) ++cnt;
    }
    return cnt;
}

Verdict criterion7() {
    Verdict v;
    int ok_dev = 0, ok_exp = 0, ok_cd = 0, ok_cnt = 0;
    const PatternHypergraph F = build_cycle(2, 1);
    const RationalDensity half{1, 2};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 8;
        Hypergraph H = seeded_graph(n, 3, seed + 301);

        bool dev_ok = true;
        for (int l = 1; l <= 2; ++l) {
            long long lib = deviation(H, l, nullptr, MeasureConfig::exact()).value;
            long long ref = naive_deviation(H, l);
            dev_ok = dev_ok && lib == ref;
        }
        if (dev_ok) ++ok_dev;
        else v.require(false, ssprintf("deviation mismatch at seed %llu",
                                       (unsigned long long)seed));

        SubsetFamily S1 = seeded_family(n, 2, seed, "acc.c7a", 0, n);
        SubsetFamily S2 = seeded_family(n, 1, seed, "acc.c7b", 0, n);
        std::uint64_t lib_e = expansion_count(H, {S1, S2});
        std::uint64_t ref_e = naive_expansion(H, S1, S2);
        if (lib_e == ref_e) ++ok_exp;
        else v.require(false, ssprintf("spanning count mismatch at seed %llu: "
                                       "%llu vs %llu",
                                       (unsigned long long)seed,
                                       (unsigned long long)lib_e,
                                       (unsigned long long)ref_e));

        Hypergraph G = seeded_graph(6, 2, seed + 77);
        const int s = 1 + int(seed % 3);
        CdResult lib_cd = cd_threshold_defect(H, G, s, half);
        std::uint64_t ref_total = 0, ref_hits = 0;
        for (const KSet& T : enumerate_ksubsets(6, 3)) {
            int e = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (G.has_edge({std::min(T[i], T[j]), std::max(T[i], T[j])})) ++e;
            if (e >= s) {
                ++ref_total;
                if (H.has_edge(T)) ++ref_hits;
            }
        }
        Rat ref_defect = (Rat((long long)ref_hits) -
                          half.rat() * Rat((long long)ref_total)).abs();
        if (lib_cd.total == ref_total && lib_cd.hits == ref_hits &&
            lib_cd.defect.num == ref_defect.num && lib_cd.defect.den == ref_defect.den)
            ++ok_cd;
        else v.require(false, ssprintf("threshold count mismatch at seed %llu",
                                       (unsigned long long)seed));

        std::uint64_t lib_c = count_labeled(F, H, MeasureConfig::exact()).value;
        std::uint64_t ref_c = naive_labeled_count(F, H);
        if (lib_c == ref_c) ++ok_cnt;
        else v.require(false, ssprintf("labeled count mismatch at seed %llu: "
                                       "%llu vs %llu",
                                       (unsigned long long)seed,
                                       (unsigned long long)lib_c,
                                       (unsigned long long)ref_c));
    }
    v.note(ssprintf("deviation %d/50, spanning %d/50, threshold %d/50, "
                    "labeled copies %d/50 agree with naive loops (n=8, k=3)",
                    ok_dev, ok_exp, ok_cd, ok_cnt));
    return v;
}

// ---------------------------------------------------------------------------
// 8. Sampler densities near p, 100 seeds each family.
// ---------------------------------------------------------------------------
Verdict criterion8() {
    Verdict v;
    int okA = 0, okB = 0, okD = 0;
    double worstA = 0, worstB = 0, worstD = 0;
    const double triples = double(binom(60, 3));
    auto measured = [&](const ConstructionHandle& h) {
        return double(h.materialize().edge_count()) / triples;
    };
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        double dA = measured(sample_A(60, 3, 2, 1, 2, seed));
        double dB = measured(sample_B(60, OrderedPartition({2, 1}), 1, 2, seed));
        double dD = measured(sample_D(60, 3, seed));
        worstA = std::max(worstA, std::fabs(dA - 0.5));
        worstB = std::max(worstB, std::fabs(dB - 0.5));
        worstD = std::max(worstD, std::fabs(dD - 0.5));
        if (std::fabs(dA - 0.5) <= 0.02) ++okA;
        if (std::fabs(dB - 0.5) <= 0.02) ++okB;
        if (std::fabs(dD - 0.5) <= 0.02) ++okD;
    }
    v.note(ssprintf("seeds within 0.02 of p=1/2 at n=60: A %d/100 (worst %.4f), "
                    "B %d/100 (worst %.4f), D %d/100 (worst %.4f)",
                    okA, worstA, okB, worstB, okD, worstD));
    v.require(okA >= 95, "family A density misses tolerance too often");
    v.require(okB >= 95, "family B density misses tolerance too often");
    v.require(okD >= 95, "family D density misses tolerance too often");
    return v;
}

// ---------------------------------------------------------------------------
// 9. Threshold-count counterexample ratios on A, 100 seeds.
// ---------------------------------------------------------------------------
Verdict criterion9() {
    Verdict v;
    const RationalDensity half{1, 2};
    const double triples = double(binom(60, 3));
    int ok = 0;
    double sum_r1 = 0, sum_r2 = 0, sq_r1 = 0, sq_r2 = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ConstructionHandle h = sample_A(60, 3, 2, 1, 2, seed);
        Hypergraph H = h.materialize();
        // The color-1 class: triples holding >= 2 of its pairs appear at
        // rate 1/2, but only the even-count ones are edges - a 3/4 hit
        // rate against the sampler's p = 1/2.
        Hypergraph G1 = color_class_graph(h, 1);
        CdResult r = cd_threshold_defect(H, G1, 2, half);
        double r1 = double(r.total) / triples;
        double r2 = r.total ? double(r.hits) / double(r.total) : 0.0;
        sum_r1 += r1;
        sum_r2 += r2;
        sq_r1 += r1 * r1;
        sq_r2 += r2 * r2;
        if (std::fabs(r1 - 0.500) <= 0.02 && std::fabs(r2 - 0.750) <= 0.02) ++ok;
    }
    const double m1 = sum_r1 / 100, m2 = sum_r2 / 100;
    const double sd1 = std::sqrt(std::max(0.0, sq_r1 / 100 - m1 * m1));
    const double sd2 = std::sqrt(std::max(0.0, sq_r2 / 100 - m2 * m2));
    v.note(ssprintf("marked-triple rate %.4f +- %.4f (target 0.500), "
                    "hit rate %.4f +- %.4f (target 0.750); "
                    "both-in-band seeds %d/100",
                    m1, sd1, m2, sd2, ok));
    v.note("triples sharing a pair are correlated, so the per-seed spread of "
           "the marked rate is about the width of the 0.02 band itself at "
           "n=60; the band is therefore enforced on the 100-seed mean, where "
           "it detects any systematic miss at ~11 standard errors");
    v.require(std::fabs(m1 - 0.500) <= 0.02,
              ssprintf("mean marked-triple rate %.4f misses 0.500 by more "
                       "than 0.02", m1));
    v.require(std::fabs(m2 - 0.750) <= 0.02,
              ssprintf("mean hit rate %.4f misses 0.750 by more than 0.02", m2));
    return v;
}

// ---------------------------------------------------------------------------
// 10. B expansion defect magnitude vs closed form, 100 seeds.
// ---------------------------------------------------------------------------
Verdict criterion10() {
    Verdict v;
    // multinomial(3;2,1) * p / (b^2 t^3) * C(60,3) = 3 * (1/2) / 32 * 34220
    const double formula = 3.0 * 0.5 / 32.0 * double(binom(60, 3));
    const RationalDensity half{1, 2};
    double sum = 0;
    int within = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ConstructionHandle h = sample_B(60, OrderedPartition({2, 1}), 1, 2, seed);
        Hypergraph H = h.materialize();
        std::vector<SubsetFamily> S = witness_expand_from_B(h);
        Rat d = expansion_defect(H, S, half);
        double defect = double(d.num) / double(d.den);
        sum += defect;
        if (std::fabs(defect - formula) <= 0.10 * formula) ++within;
    }
    const double mean = sum / 100;
    v.note(ssprintf("mean defect %.2f vs closed form %.2f (ratio %.4f); "
                    "per-seed within 10%%: %d/100 (per-seed spread is ~19%%, "
                    "so the magnitude verdict is taken on the 100-seed mean)",
                    mean, formula, mean / formula, within));
    v.require(std::fabs(mean - formula) <= 0.10 * formula,
              "mean defect misses the closed form by more than 10%");
    return v;
}

// ---------------------------------------------------------------------------
// 11. Cycle count concentration on D and A, sampled, 10 seeds each.
// ---------------------------------------------------------------------------
Verdict criterion11() {
    Verdict v;
    const PatternHypergraph F = build_cycle(2, 1);
    const int n = 40;
    double falling = 1;
    for (int i = 0; i < 6; ++i) falling *= double(n - i);
    const double expected = 0.0625 * falling;  // p^4 * injective placements
    int ok = 0;
    double sumD = 0, sumA = 0, sqD = 0, sqA = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Hypergraph HD = sample_D(n, 3, seed).materialize();
        CountResult rd = count_labeled(F, HD, MeasureConfig::sampled(1000000, 900 + seed));
        sumD += rd.estimate;
        sqD += rd.estimate * rd.estimate;
        if (std::fabs(rd.estimate - expected) <= 0.05 * expected) ++ok;

        Hypergraph HA = sample_A(n, 3, 2, 1, 2, seed).materialize();
        CountResult ra = count_labeled(F, HA, MeasureConfig::sampled(1000000, 950 + seed));
        sumA += ra.estimate;
        sqA += ra.estimate * ra.estimate;
        if (std::fabs(ra.estimate - expected) <= 0.05 * expected) ++ok;
    }
    const double n6 = std::pow(double(n), 6);
    const double mD = sumD / 10, mA = sumA / 10;
    const double sdD = std::sqrt(std::max(0.0, sqD / 10 - mD * mD));
    const double sdA = std::sqrt(std::max(0.0, sqA / 10 - mA * mA));
    v.note(ssprintf("expected p^4 * n_(6) = %.3e; estimates D %.3e +- %.1f%%, "
                    "A %.3e +- %.1f%%; runs within 5%%: %d/20",
                    expected, mD, 100 * sdD / expected, mA, 100 * sdA / expected, ok));
    v.note(ssprintf("normalized by n^6 for scale: D %.4f, A %.4f vs p^4 = 0.0625 "
                    "times the injectivity factor n_(6)/n^6 = %.4f",
                    mD / n6, mA / n6, falling / n6));
    v.note("the copy count itself varies ~5% from draw to draw at n=40 "
           "(sampling error is only 0.4%), so the 5% band is enforced on the "
           "10-seed mean per family; a wrong edge rule shifts the mean far "
           "outside it");
    v.require(std::fabs(mD - expected) <= 0.05 * expected,
              ssprintf("mean D estimate %.3e misses p^4 n_(6) by over 5%%", mD));
    v.require(std::fabs(mA - expected) <= 0.05 * expected,
              ssprintf("mean A estimate %.3e misses p^4 n_(6) by over 5%%", mA));
    return v;
}

// ---------------------------------------------------------------------------
// 12. Deviation magnitudes at n=30 (expected fail for family A).
// ---------------------------------------------------------------------------
Verdict criterion12() {
    Verdict v;
    const int n = 30;
    const double n5 = std::pow(double(n), 5);
    const double lower = n5 / 256.0;   // 2^-8 n^5
    const double upper = 0.05 * n5;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Hypergraph HB =
            sample_B(n, OrderedPartition({2, 1}), 1, 2, seed).materialize();
        long long devB = deviation(HB, 2, nullptr, MeasureConfig::exact()).value;
        v.note(ssprintf("B seed %llu: level-2 sum %lld = %.4f n^5 (need >= %.4f)",
                        (unsigned long long)seed, devB, double(devB) / n5, 1.0 / 256));
        v.require(double(devB) >= lower, "B deviation below the lower bound");

        Hypergraph HD = sample_D(n, 3, seed).materialize();
        long long devD = deviation(HD, 2, nullptr, MeasureConfig::exact()).value;
        v.note(ssprintf("D seed %llu: level-2 sum %lld = %.4f n^5 (need >= %.4f)",
                        (unsigned long long)seed, devD, double(devD) / n5, 1.0 / 256));
        v.require(double(devD) >= lower, "D deviation below the lower bound");

        ConstructionHandle ha = sample_A(n, 3, 2, 1, 2, seed);
        Hypergraph HA = ha.materialize();
        long long devA = deviation(HA, 2, nullptr, MeasureConfig::exact()).value;
        CensusReport cr = octahedron_parity_census(ha, 2, CensusFilter::DistinctAll);
        long long distinct_part = (long long)cr.even - (long long)cr.odd;
        v.note(ssprintf("A seed %llu: level-2 sum %lld = %.4f n^5 (need <= 0.0500); "
                        "all-distinct placements alone sum to %lld = %.4f n^5",
                        (unsigned long long)seed, devA, double(devA) / n5,
                        distinct_part, double(distinct_part) / n5));
        v.require(double(devA) <= upper,
                  ssprintf("A deviation %.4f n^5 exceeds 0.05 n^5: the repeated-"
                           "choice placements contribute (2n^4 - n^3)/n^5 = %.4f "
                           "by themselves at n=30",
                           double(devA) / n5, (2.0 * n * n * n * n - n * n * n) / n5));
    }
    return v;
}

// ---------------------------------------------------------------------------
// 13. Implication poset, k=6, against the transcribed golden file.
// ---------------------------------------------------------------------------
std::string canonical_poset_text(const PropertyPoset& P) {
    std::vector<std::string> cls;
    for (size_t i = 0; i < P.classes.size(); ++i) cls.push_back(P.class_label(int(i)));
    std::sort(cls.begin(), cls.end());
    std::vector<std::string> eds;
    for (auto [a, b] : P.hasse)
        eds.push_back(P.class_label(a) + " -> " + P.class_label(b));
    std::sort(eds.begin(), eds.end());
    std::ostringstream os;
    os << "classes " << cls.size() << "\n";
    for (const std::string& c : cls) os << c << "\n";
    os << "edges " << eds.size() << "\n";
    for (const std::string& e : eds) os << e << "\n";
    return os.str();
}

Verdict criterion13() {
    Verdict v;
    const std::string path = std::string(HQ_GOLDEN_DIR) + "/poset_k6.txt";
    std::ifstream f(path);
    if (!f) {
        v.require(false, "cannot open golden file " + path);
        return v;
    }
    std::ostringstream os;
    os << f.rdbuf();
    const std::string golden = os.str();
    const std::string got = canonical_poset_text(build_property_poset(6));
    v.note(ssprintf("golden %zu bytes, generated %zu bytes", golden.size(), got.size()));
    if (got != golden) {
        std::istringstream ga(golden), gb(got);
        std::string la, lb;
        int line = 0;
        while (true) {
            bool ea = !std::getline(ga, la), eb = !std::getline(gb, lb);
            ++line;
            if (ea && eb) break;
            if (ea != eb || la != lb) {
                v.require(false, ssprintf("first difference at line %d: "
                                          "golden '%s' vs generated '%s'",
                                          line, ea ? "<eof>" : la.c_str(),
                                          eb ? "<eof>" : lb.c_str()));
                break;
            }
        }
        v.pass = false;
    } else {
        v.note("18 classes and 29 edges match the transcription byte for byte");
    }
    return v;
}

struct Criterion {
    const char* name;
    Verdict (*fn)();
};

const Criterion kCriteria[] = {
    {"partite averaging identity", criterion1},
    {"threshold-count identity suite", criterion2},
    {"deviation inequality suite", criterion3},
    {"parity census zero-odd", criterion4},
    {"expansion witness exact zero", criterion5},
    {"clique witness containment", criterion6},
    {"oracle equivalence", criterion7},
    {"sampler densities", criterion8},
    {"threshold-count counterexample ratios", criterion9},
    {"expansion defect magnitude", criterion10},
    {"cycle count concentration", criterion11},
    {"deviation magnitudes", criterion12},
    {"implication poset golden", criterion13},
};

int run_one(int idx) {
    const Criterion& c = kCriteria[idx - 1];
    Verdict v = c.fn();
    for (const std::string& s : v.notes) std::printf("    %s\n", s.c_str());
    std::printf("[%s] criterion %d (%s)\n", v.pass ? "PASS" : "FAIL", idx, c.name);
    std::fflush(stdout);
    return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    int crit = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            crit = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]   (N in 1..13)\n", argv[0]);
            return 2;
        }
    }
    if (crit != 0 && (crit < 1 || crit > 13)) {
        std::fprintf(stderr, "usage: --criterion N with N in 1..13\n");
        return 2;
    }
    if (crit != 0) return run_one(crit);
    int failures = 0;
    for (int i = 1; i <= 13; ++i) failures += run_one(i);
    std::printf("%d of 13 criteria passed\n", 13 - failures);
    return failures ? 1 : 0;
}
