#ifndef ASYM_GRAPH_IO_HPP
#define ASYM_GRAPH_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "asym/double_graph.hpp"

namespace asym {

/// Fixed 12-significant-digit formatting used for every number that reaches
/// an artifact, so fixtures are byte-stable across platforms.
std::string format_number(double v);

/// Serialization-friendly view of a bipartite graph.  Ids are dense in
/// canonical order; identical inputs serialize to identical bytes.
struct GraphDocument {
    struct Odd {
        int id = 0;
        std::string label;
        std::vector<int> dynkin;
        double dimension = 0;
    };
    struct Even {
        int id = 0;
        std::string label;
        // orbit representatives as [dynkin(a), dynkin(b)] pairs
        std::vector<std::pair<std::vector<int>, std::vector<int>>> orbit;
        std::optional<int> split_index;
        double dimension = 0;
    };
    struct Edge {
        int even_id = 0;
        int odd_id = 0;
        int multiplicity = 0;
    };

    Model model;
    std::string kind;
    std::vector<Odd> odd;
    std::vector<Even> even;
    std::vector<Edge> edges;
    std::string generator;
    double tolerance = 1e-6;
};

GraphDocument to_document(const BipartiteGraph& g, double tolerance);

std::string to_json(const GraphDocument& doc);
GraphDocument parse_json(const std::string& bytes);

/// DOT: plain undirected graph, odd vertices as circles, even as boxes,
/// multi-edges repeated.
std::string to_dot(const BipartiteGraph& g);

/// Plain-text listing (the CLI "table" format).
std::string to_table(const BipartiteGraph& g);

/// format is "json", "dot" or "table".
std::string export_graph(const BipartiteGraph& g, const std::string& format,
                         double tolerance);

/// Structural equality up to reordering of vertices and permutation of the
/// split components: vertex sets, dimensions (within tol) and edge
/// multiplicities must all match.  On failure, `why` receives a diagnostic.
bool same_graph(const GraphDocument& a, const GraphDocument& b, double tol,
                std::string* why = nullptr);

}  // namespace asym

#endif
