#ifndef ASYM_DOUBLE_GRAPH_HPP
#define ASYM_DOUBLE_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asym/fusion.hpp"
#include "asym/modular.hpp"

namespace asym {

/// One even vertex of the dual principal graph: a sigma-orbit of
/// grade-balanced field pairs, or one of the n split components of the fixed
/// pair (f,f).
struct OcneanuClass {
    /// Orbit of (a,b) under (a,b) -> (sigma a, sigma^{n-1} b), as sorted field
    /// index pairs.  Size n, except the fixed orbit {(f,f)} of size 1.
    std::vector<std::pair<std::size_t, std::size_t>> orbit;
    /// Present exactly for the n split components of the fixed pair.
    std::optional<int> split_index;
    /// qdim(a) qdim(b) for non-split classes, qdim(f)^2/n per split component.
    double dimension = 0;

    bool is_split() const { return split_index.has_value(); }
};

/// Bipartite graph between the grade-0 fields (odd) and pair classes (even),
/// with integer edge multiplicities.  Carries its field table so exporters
/// are self-contained.
struct BipartiteGraph {
    struct Vertex {
        std::string label;
        double dimension = 0;
    };

    Model model;
    FieldTable table;
    std::string kind;  // "principal" or "dual"
    std::vector<Vertex> odd;
    std::vector<std::size_t> odd_fields;  // field indices, vacuum first
    std::vector<Vertex> even;
    std::vector<OcneanuClass> classes;  // parallel to `even`
    std::vector<int> edges;             // even-major multiplicity matrix

    int multiplicity(std::size_t e, std::size_t o) const {
        return edges[e * odd.size() + o];
    }
    bool connected() const;
};

/// Principal graph of the asymptotic inclusion: the fusion graph of the
/// grade-0 system.  Even vertices are all ordered pairs (a,b) of members,
/// edges N_{ab}^c.  Perron-Frobenius balance and connectivity are verified.
BipartiteGraph principal_graph(const FusionRing& grade_zero_ring, const ModularData& md);

/// All even classes of the dual graph for n | k: grade-balanced pairs over
/// the whole field set (ghosts included) merged into sigma-orbits, with the
/// fixed pair expanded into n split classes.
std::vector<OcneanuClass> ocneanu_classes(const FieldTable& table, const ModularData& md);

using SplitMatrix = std::vector<std::vector<int>>;  // n rows x |grade-0| columns

/// All non-negative integer edge matrices for the n split vertices that
/// satisfy (C1) column sums N_{ff}^c, (C2) row balance
/// sum_c E qdim(c) = qdim(f)^2/n, (C3) the length-2 path counts between
/// odd 0 and every odd c matching the principal graph, and (C4) invariance of
/// the row set under the simple-current relabeling c -> sigma(c) of the odd
/// vertices (which is an automorphism of every other part of the graph).
/// Solutions are canonicalized by row order and deduplicated; an empty
/// result throws.
std::vector<SplitMatrix> solve_split_edges(const FusionRing& full_ring,
                                           const ModularData& md);

/// The dual principal graph.  Non-degenerate models (gcd(n,k) = 1) reuse the
/// fusion graph; for n | k the even vertices are the Ocneanu classes with
/// orbit-constant edges plus the solved split rows.  The principal/dual pair
/// check runs before returning.
BipartiteGraph dual_graph(const FusionRing& full_ring, const ModularData& md);

/// Closed-form even-vertex counts.
/// SU(2): ((k+1)/2)^2 for odd k, k^2/4 + k/2 + 2 for even k.
/// SU(3): (k+1)^2 (k+2)^2 / 36 for 3 by k, (k^4+6k^3+13k^2+12k+108)/36 else.
long long even_count_closed_form(Model m);

/// Even-vertex count of the constructed dual graph (k > 2); a mismatch with
/// the closed form throws.
long long even_vertex_count(Model m);

/// Consistency report for a principal/dual pair over the same grade-0 system:
/// (a) sum of squared even dimensions of the dual equals the squared global
/// index, (b) Perron-Frobenius balance on every even vertex of both graphs,
/// (c) length-2 path counts from odd 0 agree between the graphs.
struct GraphPairReport {
    struct Check {
        std::string name;
        double expected = 0;
        double computed = 0;
        double residual = 0;
        bool pass = false;
    };
    std::vector<Check> checks;
    bool all_pass = false;
};

GraphPairReport check_graph_pair(const BipartiteGraph& principal,
                                 const BipartiteGraph& dual, const ModularData& md);

}  // namespace asym

#endif
