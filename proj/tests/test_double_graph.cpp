#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "asym/double_graph.hpp"

using namespace asym;

namespace {

struct Built {
    FusionRing ring;
    ModularData md;
    explicit Built(Model m) : ring(FusionRing::build(m)), md(ModularData::compute(m)) {}
};

// adjacency of one even vertex as a sorted (field index, multiplicity) list
std::vector<std::pair<std::size_t, int>> row_of(const BipartiteGraph& g, std::size_t e) {
    std::vector<std::pair<std::size_t, int>> row;
    for (std::size_t o = 0; o < g.odd.size(); ++o)
        if (int m = g.multiplicity(e, o); m > 0) row.emplace_back(g.odd_fields[o], m);
    return row;
}

}  // namespace

TEST_CASE("principal graph shapes") {
    Built b24({2, 4});
    const auto p24 = principal_graph(b24.ring.grade_zero(), b24.md);
    CHECK(p24.odd.size() == 3);
    CHECK(p24.even.size() == 9);
    CHECK(p24.connected());

    Built b25({2, 5});
    const auto p25 = principal_graph(b25.ring.grade_zero(), b25.md);
    CHECK(p25.even.size() == 9);

    Built b36({3, 6});
    const auto p36 = principal_graph(b36.ring.grade_zero(), b36.md);
    CHECK(p36.even.size() == 100);
}

TEST_CASE("class counts for the divisible levels") {
    Built b24({2, 4});
    const auto c24 = ocneanu_classes(b24.ring.table(), b24.md);
    CHECK(c24.size() == 8);
    CHECK(std::count_if(c24.begin(), c24.end(), [](const auto& c) { return c.is_split(); }) == 2);

    Built b33({3, 3});
    const auto c33 = ocneanu_classes(b33.ring.table(), b33.md);
    CHECK(c33.size() == 14);
    CHECK(std::count_if(c33.begin(), c33.end(), [](const auto& c) { return c.is_split(); }) == 3);

    Built b36({3, 6});
    CHECK(ocneanu_classes(b36.ring.table(), b36.md).size() == 90);

    Built b25({2, 5});
    CHECK_THROWS_AS(ocneanu_classes(b25.ring.table(), b25.md), error);
}

TEST_CASE("split solver: SU(2) levels") {
    Built b24({2, 4});
    auto sols = solve_split_edges(b24.ring, b24.md);
    REQUIRE(sols.size() == 1);
    // columns follow the grade-0 members 0,2,4
    CHECK(sols[0][0] == std::vector<int>{1, 0, 1});
    CHECK(sols[0][1] == std::vector<int>{0, 1, 0});

    Built b26({2, 6});
    sols = solve_split_edges(b26.ring, b26.md);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0][0] == std::vector<int>{1, 0, 1, 0});
    CHECK(sols[0][1] == std::vector<int>{0, 1, 0, 1});

    for (int k = 8; k <= 10; k += 2) {
        Built b({2, k});
        auto s = solve_split_edges(b.ring, b.md);
        REQUIRE(s.size() == 1);
        for (std::size_t col = 0; col < s[0][0].size(); ++col) {
            CHECK(s[0][0][col] == (col % 2 == 0 ? 1 : 0));
            CHECK(s[0][1][col] == (col % 2 == 1 ? 1 : 0));
        }
    }
}

TEST_CASE("split solver: SU(3)_6 reproduces the known neighborhoods") {
    Built b({3, 6});
    auto sols = solve_split_edges(b.ring, b.md);
    REQUIRE(sols.size() == 1);
    const auto& t = b.ring.table();
    const auto gz = t.grade_zero();
    auto row_set = [&](const std::vector<int>& row) {
        std::set<std::string> s;
        for (std::size_t i = 0; i < row.size(); ++i)
            for (int c = 0; c < row[i]; ++c) s.insert(display_label(t[gz[i]]));
        return s;
    };
    CHECK(row_set(sols[0][0]) ==
          std::set<std::string>{"0", "6", "66", "3", "33", "63", "42"});
    CHECK(row_set(sols[0][1]) == std::set<std::string>{"42", "21", "51", "54"});
    CHECK(row_set(sols[0][2]) == std::set<std::string>{"42", "21", "51", "54"});
}

TEST_CASE("dual graph of SU(2)_4 matches the known picture") {
    Built b({2, 4});
    const auto g = dual_graph(b.ring, b.md);
    CHECK(g.even.size() == 8);
    CHECK(g.odd.size() == 3);

    for (std::size_t e = 0; e < g.even.size(); ++e) {
        const auto& cls = g.classes[e];
        if (!cls.is_split()) continue;
        auto row = row_of(g, e);
        if (*cls.split_index == 0) {
            CHECK(g.even[e].label == "22+");
            CHECK(row == std::vector<std::pair<std::size_t, int>>{{0, 1}, {4, 1}});
        } else {
            CHECK(g.even[e].label == "22-");
            CHECK(row == std::vector<std::pair<std::size_t, int>>{{2, 1}});
        }
        CHECK(g.even[e].dimension == doctest::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("dual graph of SU(3)_3 matches the known picture") {
    Built b({3, 3});
    const auto g = dual_graph(b.ring, b.md);
    CHECK(g.even.size() == 14);
    CHECK(g.odd.size() == 4);
    const auto& t = b.ring.table();
    const std::size_t v0 = 0;
    const std::size_t s0 = t.index_of(Field{{3, 3}, {3, 0}});
    const std::size_t s2 = t.index_of(Field{{3, 3}, {0, 3}});
    const std::size_t ff = t.index_of(Field{{3, 3}, {1, 1}});
    for (std::size_t e = 0; e < g.even.size(); ++e) {
        const auto& cls = g.classes[e];
        if (!cls.is_split()) continue;
        auto row = row_of(g, e);
        if (*cls.split_index == 0) {
            CHECK(row == std::vector<std::pair<std::size_t, int>>{{v0, 1}, {s2, 1}, {s0, 1}});
        } else {
            CHECK(row == std::vector<std::pair<std::size_t, int>>{{ff, 1}});
        }
        CHECK(g.even[e].dimension == doctest::Approx(3.0).epsilon(1e-9));
    }
}

TEST_CASE("non-degenerate models reuse the fusion graph") {
    Built b({2, 5});
    const auto p = principal_graph(b.ring.grade_zero(), b.md);
    const auto d = dual_graph(b.ring, b.md);
    CHECK(d.kind == "dual");
    CHECK(d.even.size() == p.even.size());
    CHECK(d.edges == p.edges);
    for (std::size_t e = 0; e < d.even.size(); ++e)
        CHECK(d.even[e].label == p.even[e].label);
}

TEST_CASE("ghost pairs appear in every divisible-level dual graph") {
    for (Model m : {Model{2, 4}, Model{2, 6}, Model{3, 3}, Model{3, 6}}) {
        Built b(m);
        const auto g = dual_graph(b.ring, b.md);
        bool ghost = false;
        for (const auto& cls : g.classes)
            for (auto [a, bb] : cls.orbit)
                if (b.ring.table().grade(a) != 0 || b.ring.table().grade(bb) != 0) ghost = true;
        CHECK(ghost);
    }
}

TEST_CASE("fields fused once into (f,f) receive exactly one split edge") {
    for (Model m : {Model{2, 4}, Model{2, 6}, Model{2, 8}, Model{2, 10}, Model{3, 3},
                    Model{3, 6}}) {
        Built b(m);
        const auto& t = b.ring.table();
        const std::size_t fp = *t.fixed_point_index();
        const auto gz = t.grade_zero();
        const auto sols = solve_split_edges(b.ring, b.md);
        REQUIRE(sols.size() == 1);
        for (std::size_t col = 0; col < gz.size(); ++col) {
            if (b.ring.mult(fp, fp, gz[col]) != 1) continue;
            int edges = 0, rows = 0;
            for (const auto& row : sols[0]) {
                edges += row[col];
                if (row[col] > 0) ++rows;
            }
            CHECK(edges == 1);
            CHECK(rows == 1);
        }
    }
}

TEST_CASE("the vacuum split row avoids the adjoint field") {
    for (Model m : {Model{3, 3}, Model{3, 6}}) {
        Built b(m);
        const auto& t = b.ring.table();
        const auto gz = t.grade_zero();
        const std::size_t adj = t.index_of(Field{m, {1, 1}});
        const auto sols = solve_split_edges(b.ring, b.md);
        REQUIRE(sols.size() == 1);
        for (const auto& row : sols[0]) {
            if (row[0] == 0) continue;  // not the vacuum row
            const auto it = std::find(gz.begin(), gz.end(), adj);
            CHECK(row[std::size_t(it - gz.begin())] == 0);
        }
    }
}

TEST_CASE("split vertices contribute exactly one vacuum-to-vacuum path") {
    for (Model m : {Model{2, 4}, Model{2, 6}, Model{2, 8}, Model{3, 3}, Model{3, 6}}) {
        Built b(m);
        const auto sols = solve_split_edges(b.ring, b.md);
        REQUIRE(sols.size() == 1);
        long long paths = 0;
        for (const auto& row : sols[0]) paths += static_cast<long long>(row[0]) * row[0];
        CHECK(paths == 1);
    }
}

TEST_CASE("even-vertex counts") {
    CHECK(even_vertex_count({2, 5}) == 9);
    CHECK(even_vertex_count({2, 4}) == 8);
    CHECK(even_vertex_count({3, 4}) == 25);
    CHECK(even_vertex_count({3, 3}) == 14);
    CHECK_THROWS_AS(even_vertex_count({2, 2}), error);

    for (Model m : {Model{2, 4}, Model{2, 6}, Model{3, 3}, Model{3, 6}}) {
        Built b(m);
        CHECK(ocneanu_classes(b.ring.table(), b.md).size() ==
              std::size_t(even_count_closed_form(m)));
    }
}

TEST_CASE("graph pair checks and the squared global index") {
    Built b24({2, 4});
    const auto p24 = principal_graph(b24.ring.grade_zero(), b24.md);
    const auto d24 = dual_graph(b24.ring, b24.md);
    const auto r24 = check_graph_pair(p24, d24, b24.md);
    CHECK(r24.all_pass);
    double sq = 0;
    for (const auto& v : d24.even) sq += v.dimension * v.dimension;
    CHECK(sq == doctest::Approx(36.0).epsilon(1e-9));

    Built b33({3, 3});
    const auto d33 = dual_graph(b33.ring, b33.md);
    sq = 0;
    for (const auto& v : d33.even) sq += v.dimension * v.dimension;
    CHECK(sq == doctest::Approx(144.0).epsilon(1e-9));

    Built b25({2, 5});
    const auto p25 = principal_graph(b25.ring.grade_zero(), b25.md);
    const auto r25 = check_graph_pair(p25, p25, b25.md);
    CHECK(r25.all_pass);
}

TEST_CASE("a tampered graph fails the pair checks") {
    Built b({2, 4});
    const auto p = principal_graph(b.ring.grade_zero(), b.md);
    auto d = dual_graph(b.ring, b.md);
    d.edges[1] += 1;
    const auto r = check_graph_pair(p, d, b.md);
    CHECK_FALSE(r.all_pass);
    bool named = false;
    for (const auto& c : r.checks)
        if (!c.pass) named = true;
    CHECK(named);
}
