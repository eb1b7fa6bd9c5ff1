// Python bindings for the hypergraph quasirandomness core.
//
// Exposes the Hypergraph / SubsetFamily containers, the three construction
// samplers with their failure witnesses, the four measure evaluators, the
// parity census, pattern counting, and the property implication poset.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hq/cdells.hpp"
#include "hq/constructions.hpp"
#include "hq/devtheory.hpp"
#include "hq/hypergraph.hpp"
#include "hq/measures.hpp"
#include "hq/partitions.hpp"
#include "hq/patterns.hpp"

namespace py = pybind11;
using namespace hq;
using namespace pybind11::literals;

namespace {

MeasureConfig make_cfg(const std::string& mode, std::uint64_t samples,
                       std::uint64_t seed, std::uint64_t threshold) {
    if (mode == "exact") return MeasureConfig::exact(threshold);
    if (mode == "sampled") return MeasureConfig::sampled(samples, seed);
    throw py::value_error("mode must be 'exact' or 'sampled'");
}

CensusFilter make_filter(const std::string& name) {
    if (name == "all") return CensusFilter::DistinctAll;
    if (name == "last-pair") return CensusFilter::LastPairMax;
    if (name == "prev-pair") return CensusFilter::PrevPairMax;
    if (name == "head") return CensusFilter::HeadSingles;
    throw py::value_error(
        "filter must be one of 'all', 'last-pair', 'prev-pair', 'head'");
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::A: return "A";
        case Kind::B: return "B";
        default: return "D";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "hypergraph quasirandomness measures, constructions, and checks";

    py::class_<Rat>(m, "Rat", "exact rational value (reduced num/den)")
        .def_readonly("num", &Rat::num)
        .def_readonly("den", &Rat::den)
        .def("__float__", &Rat::to_double)
        .def("__str__", &Rat::str)
        .def("__repr__", [](const Rat& r) { return "Rat(" + r.str() + ")"; })
        .def("__eq__", [](const Rat& a, const Rat& b) { return a == b; });

    py::class_<Hypergraph>(m, "Hypergraph", "k-uniform hypergraph on {0..n-1}")
        .def(py::init<int, int>(), "n"_a, "k"_a)
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("k", &Hypergraph::k)
        .def_property_readonly("edge_count", &Hypergraph::edge_count)
        .def_property_readonly("universe", &Hypergraph::universe,
                               "number of k-subsets of the vertex set")
        .def("add_edge", &Hypergraph::add_edge, "e"_a,
             "add a sorted k-set of distinct vertices")
        .def("has_edge",
             [](const Hypergraph& h, const KSet& e) { return h.has_edge(e); },
             "e"_a)
        .def("edges", &Hypergraph::edges, "all edges in colex order")
        .def("induced_edge_count", &Hypergraph::induced_edge_count, "vertices"_a)
        .def("cliques", &Hypergraph::cliques, "arity"_a,
             "the K-sets whose every subset of this graph's arity is an edge")
        .def("complement", &Hypergraph::complement)
        .def("to_text", &Hypergraph::to_text)
        .def_static("from_text", &Hypergraph::from_text, "text"_a)
        .def("save", &Hypergraph::save, "path"_a)
        .def_static("load", &Hypergraph::load, "path"_a)
        .def_static("complete", &Hypergraph::complete, "n"_a, "k"_a)
        .def("__eq__",
             [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.n()) +
                   ", k=" + std::to_string(h.k()) +
                   ", edges=" + std::to_string(h.edge_count()) + ")";
        });

    py::class_<SubsetFamily>(m, "SubsetFamily",
                             "family of r-subsets with O(1) membership")
        .def(py::init<int, int>(), "n"_a, "r"_a)
        .def_property_readonly("n", &SubsetFamily::n)
        .def_property_readonly("arity", &SubsetFamily::arity)
        .def("__len__", &SubsetFamily::size)
        .def("add", &SubsetFamily::add, "s"_a)
        .def("contains", &SubsetFamily::contains, "s"_a)
        .def("sets", &SubsetFamily::sets)
        .def("to_text", &SubsetFamily::to_text)
        .def_static("from_text", &SubsetFamily::from_text, "text"_a)
        .def("save", &SubsetFamily::save, "path"_a)
        .def_static("load", &SubsetFamily::load, "path"_a)
        .def("__repr__", [](const SubsetFamily& f) {
            return "SubsetFamily(n=" + std::to_string(f.n()) +
                   ", arity=" + std::to_string(f.arity()) +
                   ", size=" + std::to_string(f.size()) + ")";
        });

    py::class_<ConstructionHandle>(
        m, "Construction",
        "sampled construction: query edges lazily or materialize")
        .def_property_readonly(
            "kind", [](const ConstructionHandle& h) { return kind_name(h.kind); })
        .def_property_readonly("nominal_density",
                               [](const ConstructionHandle& h) {
                                   RationalDensity d = h.density();
                                   return py::make_tuple(d.a, d.b);
                               })
        .def("materialize", &ConstructionHandle::materialize)
        .def("__repr__", [](const ConstructionHandle& h) {
            return "Construction(kind=" + kind_name(h.kind) + ")";
        });

    m.def("sample_a", &sample_A, "n"_a, "k"_a, "ell"_a = 2, "a"_a = 1, "b"_a = 2,
          "seed"_a = 1,
          "colored-subset construction: an edge iff the color sum of the "
          "ell-subsets inside is < a (mod b)");
    m.def(
        "sample_b",
        [](int n, const std::vector<int>& pi, int a, int b, std::uint64_t seed) {
            return sample_B(n, OrderedPartition(pi), a, b, seed);
        },
        "n"_a, "pi"_a, "a"_a = 1, "b"_a = 2, "seed"_a = 1,
        "ordered-block construction for block sizes pi (e.g. [2, 1])");
    m.def("sample_d", &sample_D, "n"_a, "k"_a, "seed"_a = 1,
          "independent density-1/2 construction");
    m.def("color_class_graph", &color_class_graph, "construction"_a, "color"_a,
          "the graph of pairs carrying a given color (family A only)");
    m.def("cd_witness", &witness_cd_from_A, "construction"_a,
          "graph whose k-cliques are all edges of the sample (family A only)");
    m.def("expand_witness", &witness_expand_from_B, "construction"_a,
          "subset families spanning zero edges of the sample (family B only)");

    py::class_<DiscResult>(m, "DiscResult")
        .def_readonly("defect", &DiscResult::defect)
        .def_readonly("witness", &DiscResult::witness)
        .def_readonly("lower_bound_only", &DiscResult::lower_bound_only);
    m.def(
        "disc_defect",
        [](const Hypergraph& H, long long a, long long b, const std::string& mode,
           std::uint64_t samples, std::uint64_t seed, std::uint64_t threshold) {
            return disc_defect(H, RationalDensity(a, b),
                               make_cfg(mode, samples, seed, threshold));
        },
        "H"_a, "a"_a = 1, "b"_a = 2, "mode"_a = "exact",
        "samples"_a = std::uint64_t(100000), "seed"_a = std::uint64_t(1),
        "threshold"_a = std::uint64_t(1) << 26,
        "max |e(U) - (a/b) C(|U|,k)| over vertex subsets (sampled mode: a "
        "lower bound with the best witness found)");

    m.def("expansion_count", &expansion_count, "H"_a, "families"_a,
          "edges with one block in each family, blocks pairwise disjoint");
    m.def(
        "expansion_defect",
        [](const Hypergraph& H, const std::vector<SubsetFamily>& S, long long a,
           long long b) { return expansion_defect(H, S, RationalDensity(a, b)); },
        "H"_a, "families"_a, "a"_a = 1, "b"_a = 2,
        "|count - (a/b) |S_1|...|S_t|| exactly");

    py::class_<CdResult>(m, "CdResult")
        .def_readonly("defect", &CdResult::defect)
        .def_readonly("hits", &CdResult::hits)
        .def_readonly("total", &CdResult::total);
    m.def(
        "cd_threshold_defect",
        [](const Hypergraph& H, const Hypergraph& G, int s, long long a,
           long long b) {
            return cd_threshold_defect(H, G, s, RationalDensity(a, b));
        },
        "H"_a, "G"_a, "s"_a, "a"_a = 1, "b"_a = 2,
        "k-sets inducing >= s edges of G: how far their edge rate sits from "
        "a/b");

    py::class_<DevResult>(m, "DevResult")
        .def_readonly("exact", &DevResult::exact)
        .def_readonly("value", &DevResult::value)
        .def_readonly("mean", &DevResult::mean)
        .def_readonly("std_error", &DevResult::std_error)
        .def_readonly("samples", &DevResult::samples);
    m.def(
        "deviation",
        [](const Hypergraph& H, int level, const std::string& mode,
           std::uint64_t samples, std::uint64_t seed, std::uint64_t threshold) {
            return deviation(H, level, nullptr,
                             make_cfg(mode, samples, seed, threshold));
        },
        "H"_a, "level"_a, "mode"_a = "exact",
        "samples"_a = std::uint64_t(100000), "seed"_a = std::uint64_t(1),
        "threshold"_a = std::uint64_t(1) << 26,
        "signed parity sum over placements with the last `level` coordinates "
        "doubled (exact value, or a normalized estimate with standard error)");

    py::class_<PatternHypergraph>(m, "Pattern", "small labeled pattern")
        .def_readonly("k", &PatternHypergraph::k)
        .def_readonly("v", &PatternHypergraph::v)
        .def_readonly("edges", &PatternHypergraph::edges)
        .def_readonly("groups", &PatternHypergraph::groups)
        .def("__repr__", [](const PatternHypergraph& f) {
            return "Pattern(k=" + std::to_string(f.k) +
                   ", v=" + std::to_string(f.v) +
                   ", edges=" + std::to_string(f.edges.size()) + ")";
        });
    m.def("build_cycle", &build_cycle, "k1"_a, "k2"_a,
          "the 4-edge cycle pattern on blocks of sizes k1, k1, k2, k2");

    py::class_<CountResult>(m, "CountResult")
        .def_readonly("exact", &CountResult::exact)
        .def_readonly("value", &CountResult::value)
        .def_readonly("estimate", &CountResult::estimate)
        .def_readonly("std_error", &CountResult::std_error)
        .def_readonly("samples", &CountResult::samples);
    m.def(
        "count_labeled",
        [](const PatternHypergraph& F, const Hypergraph& H,
           const std::string& mode, std::uint64_t samples, std::uint64_t seed,
           std::uint64_t threshold) {
            return count_labeled(F, H, make_cfg(mode, samples, seed, threshold));
        },
        "pattern"_a, "H"_a, "mode"_a = "sampled",
        "samples"_a = std::uint64_t(1000000), "seed"_a = std::uint64_t(1),
        "threshold"_a = std::uint64_t(1) << 26,
        "labeled injective copies of the pattern (exact or estimated)");

    m.def(
        "pi_linear_certificate_json",
        [](const PatternHypergraph& F,
           const std::vector<int>& pi) -> py::object {
            auto cert = pi_linear_certificate(F, Partition(pi));
            if (!cert) return py::none();
            return py::str(cert->to_json());
        },
        "pattern"_a, "pi"_a,
        "an edge ordering + splits certifying the pattern is pi-linear, as "
        "JSON; None if no certificate exists");

    py::class_<CensusReport>(m, "CensusReport")
        .def_readonly("even", &CensusReport::even)
        .def_readonly("odd", &CensusReport::odd)
        .def_readonly("population", &CensusReport::population)
        .def("__repr__", [](const CensusReport& r) {
            return "CensusReport(even=" + std::to_string(r.even) +
                   ", odd=" + std::to_string(r.odd) +
                   ", population=" + std::to_string(r.population) + ")";
        });
    m.def(
        "parity_census",
        [](const ConstructionHandle& h, int level, const std::string& filter,
           std::uint64_t samples, std::uint64_t seed) {
            CensusFilter f = make_filter(filter);
            return samples == 0
                       ? octahedron_parity_census(h, level, f)
                       : octahedron_parity_census_sampled(h, level, f, samples,
                                                          seed);
        },
        "construction"_a, "level"_a, "filter"_a = "all",
        "samples"_a = std::uint64_t(0), "seed"_a = std::uint64_t(1),
        "even/odd split of induced edge counts over distinct-vertex "
        "placements (samples=0: exhaustive)");

    m.def(
        "poset_dot", [](int k) { return build_property_poset(k).to_dot(); },
        "k"_a, "Graphviz DOT of the property implication poset for arity k");
    m.def(
        "poset_json", [](int k) { return build_property_poset(k).to_json(); },
        "k"_a, "JSON of the property implication poset for arity k");

    m.def("binom", &binom, "n"_a, "r"_a);
    m.def("ksubsets", &enumerate_ksubsets, "n"_a, "r"_a,
          "all r-subsets of {0..n-1} in colex order");
}
