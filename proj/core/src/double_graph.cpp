#include "asym/double_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace asym {

namespace {

std::string pair_label(const FieldTable& t, std::size_t a, std::size_t b) {
    std::string la = display_label(t[a]), lb = display_label(t[b]);
    if (la.size() == 1 && lb.size() == 1) return la + lb;
    return la + "," + lb;
}

std::string class_label(const FieldTable& t, const OcneanuClass& cls) {
    std::string label = pair_label(t, cls.orbit[0].first, cls.orbit[0].second);
    if (cls.is_split()) {
        if (t.model().rank == 2) return label + (*cls.split_index == 0 ? "+" : "-");
        return label + "_" + std::to_string(*cls.split_index);
    }
    for (std::size_t i = 1; i < cls.orbit.size(); ++i)
        label += "/" + pair_label(t, cls.orbit[i].first, cls.orbit[i].second);
    return label;
}

void verify_balance_and_connectivity(const BipartiteGraph& g, const ModularData& md) {
    const auto qd = md.qdims();
    for (std::size_t e = 0; e < g.even.size(); ++e) {
        double s = 0;
        for (std::size_t o = 0; o < g.odd.size(); ++o)
            s += g.multiplicity(e, o) * qd[g.odd_fields[o]];
        if (std::abs(s - g.even[e].dimension) > md.tolerance())
            throw consistency_error("Perron-Frobenius balance fails at even vertex " +
                                    g.even[e].label + " of " + g.model.name());
    }
    if (!g.connected())
        throw error("graph of " + g.model.name() + " (" + g.kind + ") is disconnected");
}

}  // namespace

bool BipartiteGraph::connected() const {
    if (odd.empty() || even.empty()) return false;
    std::vector<char> ov(odd.size(), 0), ev(even.size(), 0);
    std::vector<std::size_t> stack{0};  // odd 0
    ov[0] = 1;
    std::size_t seen = 1;
    // states: odd o encoded as o, even e as odd.size() + e
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (v < odd.size()) {
            for (std::size_t e = 0; e < even.size(); ++e)
                if (multiplicity(e, v) > 0 && !ev[e]) {
                    ev[e] = 1;
                    ++seen;
                    stack.push_back(odd.size() + e);
                }
        } else {
            std::size_t e = v - odd.size();
            for (std::size_t o = 0; o < odd.size(); ++o)
                if (multiplicity(e, o) > 0 && !ov[o]) {
                    ov[o] = 1;
                    ++seen;
                    stack.push_back(o);
                }
        }
    }
    return seen == odd.size() + even.size();
}

BipartiteGraph principal_graph(const FusionRing& ring, const ModularData& md) {
    if (ring.model() != md.model()) throw error("ring and modular data disagree on the model");
    const FieldTable& t = ring.table();
    const auto qd = md.qdims();
    const auto& m = ring.members();

    BipartiteGraph g;
    g.model = ring.model();
    g.table = t;
    g.kind = "principal";
    g.odd_fields = m;
    for (std::size_t c : m) g.odd.push_back({display_label(t[c]), qd[c]});
    for (std::size_t a : m)
        for (std::size_t b : m) {
            OcneanuClass cls;
            cls.orbit = {{a, b}};
            cls.dimension = qd[a] * qd[b];
            g.even.push_back({pair_label(t, a, b), cls.dimension});
            g.classes.push_back(std::move(cls));
        }
    g.edges.assign(g.even.size() * g.odd.size(), 0);
    std::size_t e = 0;
    for (std::size_t a : m)
        for (std::size_t b : m) {
            for (std::size_t o = 0; o < m.size(); ++o)
                g.edges[e * g.odd.size() + o] = ring.mult(a, b, m[o]);
            ++e;
        }
    verify_balance_and_connectivity(g, md);
    return g;
}

std::vector<OcneanuClass> ocneanu_classes(const FieldTable& table, const ModularData& md) {
    const Model m = table.model();
    if (!m.degenerate())
        throw error("Ocneanu classes need n | k, got " + m.name());
    const int n = m.rank;
    const std::size_t f = table.size();
    const auto qd = md.qdims();

    std::vector<char> visited(f * f, 0);
    std::vector<OcneanuClass> classes;
    std::size_t balanced_pairs = 0;
    for (std::size_t a = 0; a < f; ++a)
        for (std::size_t b = 0; b < f; ++b) {
            if ((table.grade(a) + table.grade(b)) % n != 0) continue;
            ++balanced_pairs;
            if (visited[a * f + b]) continue;
            std::vector<std::pair<std::size_t, std::size_t>> orbit;
            std::size_t x = a, y = b;
            for (int j = 0; j < n; ++j) {
                if (!visited[x * f + y]) {
                    visited[x * f + y] = 1;
                    orbit.emplace_back(x, y);
                }
                x = table.sigma(x);
                y = table.sigma(y, n - 1);
            }
            std::sort(orbit.begin(), orbit.end());
            if (orbit.size() == 1) {
                // the fixed pair (f,f) splits into n components of equal dimension
                auto fp = table.fixed_point_index();
                if (!fp || orbit[0] != std::make_pair(*fp, *fp))
                    throw consistency_error("unexpected short sigma orbit in " + m.name());
                for (int i = 0; i < n; ++i) {
                    OcneanuClass cls;
                    cls.orbit = orbit;
                    cls.split_index = i;
                    cls.dimension = qd[*fp] * qd[*fp] / n;
                    classes.push_back(std::move(cls));
                }
            } else {
                if (orbit.size() != static_cast<std::size_t>(n))
                    throw consistency_error("sigma orbit of unexpected size in " + m.name());
                double dim = qd[orbit[0].first] * qd[orbit[0].second];
                for (auto [p, q] : orbit)
                    if (std::abs(qd[p] * qd[q] - dim) > md.tolerance())
                        throw consistency_error("orbit dimension not constant in " + m.name());
                OcneanuClass cls;
                cls.orbit = std::move(orbit);
                cls.dimension = dim;
                classes.push_back(std::move(cls));
            }
        }
    const std::size_t expected = (balanced_pairs - 1) / n + n;
    if (classes.size() != expected)
        throw consistency_error("class count mismatch in " + m.name() + ": got " +
                                std::to_string(classes.size()) + ", expected " +
                                std::to_string(expected));
    return classes;
}

std::vector<SplitMatrix> solve_split_edges(const FusionRing& ring, const ModularData& md) {
    const Model m = ring.model();
    if (!m.degenerate()) throw error("split solver needs n | k, got " + m.name());
    if (ring.is_subsystem_view()) throw error("split solver needs the full ring");
    const FieldTable& t = ring.table();
    const int n = m.rank;
    const auto gz = t.grade_zero();
    const std::size_t cols = gz.size();
    const std::size_t fp = *t.fixed_point_index();
    const auto qd = md.qdims();
    const double target = qd[fp] * qd[fp] / n;
    const double tol = md.tolerance();

    std::vector<int> colsum(cols);
    for (std::size_t c = 0; c < cols; ++c) colsum[c] = ring.mult(fp, fp, gz[c]);

    // Length-2 path counts through the split vertices, forced by matching the
    // principal graph against the non-split dual classes.
    std::vector<long long> path(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        long long in_members = 0, over_all = 0;
        for (std::size_t a : gz) in_members += ring.mult(a, t.conj(a), gz[c]);
        for (std::size_t a = 0; a < t.size(); ++a) over_all += ring.mult(a, t.conj(a), gz[c]);
        const long long ghosts = over_all - colsum[c];
        if (ghosts % n != 0)
            throw consistency_error("self-conjugate pair count not divisible by n in " + m.name());
        path[c] = in_members - ghosts / n;
        if (path[c] < 0)
            throw consistency_error("negative split path target in " + m.name());
    }

    // search columns in decreasing qdim order
    std::vector<std::size_t> order(cols);
    for (std::size_t i = 0; i < cols; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double qa = qd[gz[a]], qb = qd[gz[b]];
        return qa != qb ? qa > qb : a < b;
    });
    std::vector<double> tail_capacity(cols + 1, 0.0);
    for (std::size_t i = cols; i-- > 0;)
        tail_capacity[i] = tail_capacity[i + 1] + colsum[order[i]] * qd[gz[order[i]]];

    // position of sigma(c) within the grade-0 member list
    std::vector<std::size_t> sigma_col(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const auto it = std::find(gz.begin(), gz.end(), t.sigma(gz[c]));
        sigma_col[c] = static_cast<std::size_t>(it - gz.begin());
    }

    SplitMatrix e(n, std::vector<int>(cols, 0));
    std::vector<double> rowsum(n, 0.0);
    std::set<SplitMatrix> found;

    std::function<void(std::size_t)> descend = [&](std::size_t pos) {
        if (pos == cols) {
            for (int i = 0; i < n; ++i)
                if (std::abs(rowsum[i] - target) > tol) return;
            for (std::size_t c = 0; c < cols; ++c) {
                long long paths = 0;
                for (int i = 0; i < n; ++i)
                    paths += static_cast<long long>(e[i][0]) * e[i][c];
                if (paths != path[c]) return;
            }
            // (C4) relabeling the odd vertices by sigma is an automorphism of
            // the rest of the dual graph (the twist identity makes the
            // non-split classes sigma-symmetric), so it must permute the
            // split rows among themselves
            {
                SplitMatrix rows = e, images(n, std::vector<int>(cols, 0));
                for (int i = 0; i < n; ++i)
                    for (std::size_t c = 0; c < cols; ++c)
                        images[i][sigma_col[c]] = e[i][c];
                std::sort(rows.begin(), rows.end());
                std::sort(images.begin(), images.end());
                if (rows != images) return;
            }
            SplitMatrix canon = e;
            std::sort(canon.begin(), canon.end(), std::greater<>());
            found.insert(std::move(canon));
            return;
        }
        const std::size_t c = order[pos];
        const double q = qd[gz[c]];
        // all splits of the column sum over the n rows
        std::vector<int> part(n, 0);
        std::function<void(int, int)> assign = [&](int row, int remaining) {
            if (row == n - 1) {
                part[row] = remaining;
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    double rs = rowsum[i] + part[i] * q;
                    if (rs > target + tol) ok = false;
                    if (rs + tail_capacity[pos + 1] < target - tol) ok = false;
                }
                if (ok) {
                    for (int i = 0; i < n; ++i) {
                        e[i][c] = part[i];
                        rowsum[i] += part[i] * q;
                    }
                    descend(pos + 1);
                    for (int i = 0; i < n; ++i) {
                        rowsum[i] -= part[i] * q;
                        e[i][c] = 0;
                    }
                }
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                part[row] = v;
                assign(row + 1, remaining - v);
            }
        };
        assign(0, colsum[c]);
    };
    descend(0);

    if (found.empty())
        throw consistency_error("no split edge assignment satisfies the constraints in " +
                                m.name());
    return {found.begin(), found.end()};
}

BipartiteGraph dual_graph(const FusionRing& ring, const ModularData& md) {
    const Model m = ring.model();
    if (ring.model() != md.model()) throw error("ring and modular data disagree on the model");
    if (ring.is_subsystem_view()) throw error("dual graph needs the full ring");
    const FusionRing gz_ring = ring.grade_zero();
    const BipartiteGraph principal = principal_graph(gz_ring, md);

    if (!m.degenerate()) {
        // non-degenerate braiding: the dual graph is the fusion graph again
        BipartiteGraph g = principal;
        g.kind = "dual";
        auto report = check_graph_pair(principal, g, md);
        if (!report.all_pass)
            throw consistency_error("graph pair checks fail for " + m.name());
        return g;
    }

    const FieldTable& t = ring.table();
    const auto qd = md.qdims();
    const auto gz = gz_ring.members();

    BipartiteGraph g;
    g.model = m;
    g.table = t;
    g.kind = "dual";
    g.odd_fields = gz;
    for (std::size_t c : gz) g.odd.push_back({display_label(t[c]), qd[c]});
    g.classes = ocneanu_classes(t, md);

    auto solutions = solve_split_edges(ring, md);
    if (solutions.size() != 1)
        throw consistency_error("split edges not unique in " + m.name() + ": " +
                                std::to_string(solutions.size()) + " canonical solutions");
    const SplitMatrix& split = solutions.front();

    g.edges.assign(g.classes.size() * gz.size(), 0);
    for (std::size_t e = 0; e < g.classes.size(); ++e) {
        const OcneanuClass& cls = g.classes[e];
        if (cls.is_split()) {
            for (std::size_t o = 0; o < gz.size(); ++o)
                g.edges[e * gz.size() + o] = split[static_cast<std::size_t>(*cls.split_index)][o];
        } else {
            auto [a, b] = cls.orbit.front();
            for (std::size_t o = 0; o < gz.size(); ++o) {
                const int mult = ring.mult(a, b, gz[o]);
                for (auto [a2, b2] : cls.orbit)
                    if (ring.mult(a2, b2, gz[o]) != mult)
                        throw consistency_error("edge multiplicity not constant on the orbit of " +
                                                pair_label(t, a, b) + " in " + m.name());
                g.edges[e * gz.size() + o] = mult;
            }
        }
        g.even.push_back({class_label(t, cls), cls.dimension});
    }

    verify_balance_and_connectivity(g, md);
    auto report = check_graph_pair(principal, g, md);
    if (!report.all_pass)
        throw consistency_error("graph pair checks fail for " + m.name());
    return g;
}

long long even_count_closed_form(Model m) {
    m.validate();
    const long long k = m.level;
    if (m.rank == 2) {
        if (k % 2 == 1) return ((k + 1) / 2) * ((k + 1) / 2);
        return k * k / 4 + k / 2 + 2;
    }
    if (k % 3 != 0) return (k + 1) * (k + 1) * (k + 2) * (k + 2) / 36;
    return (k * k * k * k + 6 * k * k * k + 13 * k * k + 12 * k + 108) / 36;
}

long long even_vertex_count(Model m) {
    m.validate();
    if (m.level <= 2) throw error("even vertex count needs level > 2");
    const FusionRing ring = FusionRing::build(m);
    const ModularData md = ModularData::compute(m);
    const BipartiteGraph g = dual_graph(ring, md);
    const long long count = static_cast<long long>(g.even.size());
    const long long expected = even_count_closed_form(m);
    if (count != expected)
        throw consistency_error("even vertex count " + std::to_string(count) +
                                " differs from the closed form " + std::to_string(expected) +
                                " for " + m.name());
    return count;
}

GraphPairReport check_graph_pair(const BipartiteGraph& principal, const BipartiteGraph& dual,
                                 const ModularData& md) {
    if (principal.model != dual.model || principal.odd_fields != dual.odd_fields)
        throw error("graph pair is not over the same grade-0 system");
    const double tol = md.tolerance();
    const auto qd = md.qdims();
    GraphPairReport report;

    double gi = 0;
    for (std::size_t c : principal.odd_fields) gi += qd[c] * qd[c];
    double dim_sq = 0;
    for (const auto& v : dual.even) dim_sq += v.dimension * v.dimension;
    report.checks.push_back({"dual even dimensions square to the global index", gi * gi,
                             dim_sq, std::abs(dim_sq - gi * gi),
                             std::abs(dim_sq - gi * gi) <= tol});

    for (const BipartiteGraph* g : {&principal, &dual}) {
        double worst = 0;
        for (std::size_t e = 0; e < g->even.size(); ++e) {
            double s = 0;
            for (std::size_t o = 0; o < g->odd.size(); ++o)
                s += g->multiplicity(e, o) * qd[g->odd_fields[o]];
            worst = std::max(worst, std::abs(s - g->even[e].dimension));
        }
        report.checks.push_back({"Perron-Frobenius balance (" + g->kind + ")", 0.0, worst,
                                 worst, worst <= tol});
    }

    long long worst_path = 0;
    for (std::size_t c = 0; c < principal.odd.size(); ++c) {
        long long p = 0, d = 0;
        for (std::size_t e = 0; e < principal.even.size(); ++e)
            p += static_cast<long long>(principal.multiplicity(e, 0)) *
                 principal.multiplicity(e, c);
        for (std::size_t e = 0; e < dual.even.size(); ++e)
            d += static_cast<long long>(dual.multiplicity(e, 0)) * dual.multiplicity(e, c);
        worst_path = std::max(worst_path, std::llabs(p - d));
    }
    report.checks.push_back({"length-2 path counts from the vacuum agree", 0.0,
                             double(worst_path), double(worst_path), worst_path == 0});

    report.all_pass = true;
    for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

}  // namespace asym
