#include "asym/orbifold.hpp"

#include <cmath>

#include "asym/double_graph.hpp"
#include "asym/fusion.hpp"
#include "asym/modular.hpp"

namespace asym {

IndexCases index_cases(double gamma) {
    if (gamma <= 0) throw error("global index must be positive");
    return IndexCases{gamma / 4, gamma / 2, gamma / 8};
}

double WeightedSystem::global_index() const {
    double s = 0;
    for (const auto& o : objects) s += o.qdim * o.qdim;
    return s;
}

double QuotientStructure::global_index() const {
    double s = 0;
    for (const auto& o : merged) s += o.qdim * o.qdim;
    for (const auto& o : split) s += o.qdim * o.qdim;
    return s;
}

QuotientStructure quotient_by_current(const WeightedSystem& sys) {
    if (sys.objects.empty()) throw error("empty system");
    if (sys.current == 0) throw error("current equals the vacuum: nothing to quotient");
    if (sys.current >= sys.objects.size()) throw error("current index out of range");
    if (std::abs(sys.objects[0].qdim - 1) > 1e-9 ||
        std::abs(sys.objects[sys.current].qdim - 1) > 1e-9)
        throw error("current is not invertible");
    if (sys.current_action.size() != sys.objects.size())
        throw error("current action unavailable for this system");
    for (std::size_t i = 0; i < sys.objects.size(); ++i) {
        std::size_t j = sys.current_action[i];
        if (j >= sys.objects.size() || sys.current_action[j] != i)
            throw error("current action is not an involution");
    }
    if (sys.current_action[0] != sys.current)
        throw error("current action does not send the vacuum to the current");

    QuotientStructure q;
    for (std::size_t i = 0; i < sys.objects.size(); ++i) {
        const std::size_t j = sys.current_action[i];
        if (i == j) {
            const double half = sys.objects[i].qdim / 2;
            q.split.push_back({sys.objects[i].label + "+", half});
            q.split.push_back({sys.objects[i].label + "-", half});
        } else if (i < j) {
            if (std::abs(sys.objects[i].qdim - sys.objects[j].qdim) > 1e-9)
                throw error("qdim not constant on the orbit {" + sys.objects[i].label + "," +
                            sys.objects[j].label + "}");
            q.merged.push_back({"[" + sys.objects[i].label + "~" + sys.objects[j].label + "]",
                                sys.objects[i].qdim});
        }
    }
    return q;
}

std::vector<std::string> invertible_objects(const QuotientStructure& q, double tol) {
    std::vector<std::string> out;
    for (const auto& o : q.merged)
        if (std::abs(o.qdim - 1) < tol) out.push_back(o.label);
    for (const auto& o : q.split)
        if (std::abs(o.qdim - 1) < tol) out.push_back(o.label);
    return out;
}

std::vector<std::string> invertible_objects(const WeightedSystem& sys, double tol) {
    std::vector<std::string> out;
    for (const auto& o : sys.objects)
        if (std::abs(o.qdim - 1) < tol) out.push_back(o.label);
    return out;
}

WeightedSystem su2_even_system(int n_param) {
    if (n_param < 2) throw error("n must be at least 2");
    const int k = 4 * n_param - 4;
    const Model m{2, k};
    const ModularData md = ModularData::compute(m);
    WeightedSystem sys;
    for (int j = 0; j <= k; j += 2)
        sys.objects.push_back({std::to_string(j), md.qdim(static_cast<std::size_t>(j))});
    sys.current = sys.objects.size() - 1;  // the field k
    sys.current_action.resize(sys.objects.size());
    for (std::size_t i = 0; i < sys.objects.size(); ++i)
        sys.current_action[i] = sys.objects.size() - 1 - i;  // j -> k - j
    return sys;
}

WeightedSystem pairs_of_evens_subsystem(int n_param) {
    if (n_param <= 2)
        throw error("pairs-of-evens subsystem needs n > 2 (small cases are group-like)");
    const int k = 4 * n_param - 4;
    const Model m{2, k};
    const ModularData md = ModularData::compute(m);
    const FieldTable& t = md.table();

    WeightedSystem sys;
    std::size_t current = 0;
    bool have_current = false;
    for (const OcneanuClass& cls : ocneanu_classes(t, md)) {
        const auto [a, b] = cls.orbit.front();
        if (t.grade(a) != 0 || t.grade(b) != 0) continue;  // ghost pairs drop out
        std::string label = display_label(t[a]) + "," + display_label(t[b]);
        if (cls.is_split()) label += *cls.split_index == 0 ? "+" : "-";
        if (!cls.is_split() && ((a == 0 && b == static_cast<std::size_t>(k)) ||
                                (a == static_cast<std::size_t>(k) && b == 0))) {
            current = sys.objects.size();
            have_current = true;
        }
        sys.objects.push_back({label, cls.dimension});
    }
    if (!have_current) throw consistency_error("current pair (0,k) not found");
    sys.current = current;
    // The ambient data does not determine the action on split components, so
    // no current_action is exposed; only the index arithmetic is used here.

    const double gamma = [&] {
        double gi = 0;
        for (std::size_t c : t.grade_zero()) gi += md.qdim(c) * md.qdim(c);
        return gi * gi;
    }();
    if (std::abs(sys.global_index() - gamma / 2) > md.tolerance())
        throw consistency_error("pairs-of-evens global index is not gamma/2");
    return sys;
}

OrbifoldReport orbifold_report(int n_param, double tol) {
    if (n_param <= 2) throw error("orbifold report needs n > 2");
    OrbifoldReport r;
    r.n_param = n_param;

    const WeightedSystem evens = su2_even_system(n_param);
    r.m_index = evens.global_index();
    r.gamma = r.m_index * r.m_index;
    r.cases = index_cases(r.gamma);

    const WeightedSystem n0 = pairs_of_evens_subsystem(n_param);
    r.n0_index = n0.global_index();
    r.n0_objects = n0.objects.size();
    if (std::abs(r.n0_index - r.gamma / 2) > tol)
        throw consistency_error("intermediate system index differs from gamma/2");

    r.n1_index = r.n0_index / 2;
    const double half_m = r.m_index / 2;
    if (std::abs(r.n1_index - half_m * half_m) > tol)
        throw consistency_error("quotient double index differs from ([M]/2)^2");
    if (std::abs(r.n1_index - r.cases.strongly_outer_trivial_loi) > tol)
        throw consistency_error("quotient double index misses the gamma/4 case");

    const QuotientStructure q = quotient_by_current(evens);
    r.quotient_index = q.global_index();
    if (std::abs(2 * r.quotient_index - evens.global_index()) > tol)
        throw consistency_error("quotient global index is not half the source");
    r.quotient_objects = q.object_count();
    if (r.quotient_objects != static_cast<std::size_t>(n_param) + 1)
        throw consistency_error("quotient object count is not n+1");
    r.invertible_in_quotient = invertible_objects(q, tol).size();
    return r;
}

}  // namespace asym
