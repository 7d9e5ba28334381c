#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "asym/graph_io.hpp"

using namespace asym;

namespace {

BipartiteGraph dual_of(Model m) {
    return dual_graph(FusionRing::build(m), ModularData::compute(m));
}

}  // namespace

TEST_CASE("fixed 12-digit number formatting") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1e-6) == "1e-06");
    CHECK(format_number(2.6180339887498949) == "2.61803398875");
}

TEST_CASE("JSON export round-trips byte-identically") {
    const auto g = dual_of({2, 5});
    const std::string bytes = export_graph(g, "json", 1e-6);
    const GraphDocument parsed = parse_json(bytes);
    CHECK(to_json(parsed) == bytes);
    // repeated export of the same graph is identical
    CHECK(export_graph(g, "json", 1e-6) == bytes);
}

TEST_CASE("non-degenerate dual and principal exports differ only in the kind") {
    const Model m{2, 5};
    const auto ring = FusionRing::build(m);
    const auto md = ModularData::compute(m);
    std::string dual = export_graph(dual_graph(ring, md), "json", 1e-6);
    std::string principal = export_graph(principal_graph(ring.grade_zero(), md), "json", 1e-6);
    const std::string needle = "\"kind\": \"dual\"";
    const auto pos = dual.find(needle);
    REQUIRE(pos != std::string::npos);
    dual.replace(pos, needle.size(), "\"kind\": \"principal\"");
    CHECK(dual == principal);
}

TEST_CASE("DOT export of SU(2)_4 shows the split pair") {
    const std::string dot = export_graph(dual_of({2, 4}), "dot", 1e-6);
    CHECK(dot.find("graph su2_4_dual {") != std::string::npos);
    CHECK(dot.find("[label=\"22+\"]") != std::string::npos);
    CHECK(dot.find("[label=\"22-\"]") != std::string::npos);
    CHECK(dot.find("node [shape=circle];") != std::string::npos);
    CHECK(dot.find("node [shape=box];") != std::string::npos);
    int even_decls = 0;
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);)
        if (line.rfind("  e", 0) == 0 && line.find("[label=") != std::string::npos)
            ++even_decls;
    CHECK(even_decls == 8);
}

TEST_CASE("graph comparison tolerates reordering and split permutation") {
    const auto g = dual_of({3, 3});
    const GraphDocument doc = to_document(g, 1e-6);

    GraphDocument shuffled = doc;
    std::mt19937 rng(7);
    std::shuffle(shuffled.even.begin(), shuffled.even.end(), rng);
    // swap the split indices 1 and 2
    for (auto& e : shuffled.even)
        if (e.split_index && *e.split_index > 0) e.split_index = 3 - *e.split_index;
    CHECK(same_graph(doc, shuffled, 1e-6));

    GraphDocument broken = doc;
    broken.edges[0].multiplicity += 1;
    std::string why;
    CHECK_FALSE(same_graph(doc, broken, 1e-6, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("unknown export format is rejected") {
    CHECK_THROWS_AS(export_graph(dual_of({2, 4}), "yaml", 1e-6), error);
}

TEST_CASE("table export lists vertices and edges") {
    const std::string t = export_graph(dual_of({2, 4}), "table", 1e-6);
    CHECK(t.find("su2_4 dual graph") != std::string::npos);
    CHECK(t.find("odd vertices:") != std::string::npos);
    CHECK(t.find("22+") != std::string::npos);
}
