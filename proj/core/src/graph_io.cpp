#include "asym/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace asym {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::vector<int> dynkin_vec(const Field& x) {
    if (x.model.rank == 2) return {x.labels[0]};
    return {x.labels[0], x.labels[1]};
}

void write_int_array(std::string& out, const std::vector<int>& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    out += ']';
}

}  // namespace

GraphDocument to_document(const BipartiteGraph& g, double tolerance) {
    GraphDocument doc;
    doc.model = g.model;
    doc.kind = g.kind;
    doc.generator = "asymdouble 0.1.0";
    doc.tolerance = tolerance;
    for (std::size_t o = 0; o < g.odd.size(); ++o)
        doc.odd.push_back({static_cast<int>(o), g.odd[o].label,
                           dynkin_vec(g.table[g.odd_fields[o]]), g.odd[o].dimension});
    for (std::size_t e = 0; e < g.even.size(); ++e) {
        GraphDocument::Even ev;
        ev.id = static_cast<int>(e);
        ev.label = g.even[e].label;
        ev.dimension = g.even[e].dimension;
        ev.split_index = g.classes[e].split_index;
        for (auto [a, b] : g.classes[e].orbit)
            ev.orbit.emplace_back(dynkin_vec(g.table[a]), dynkin_vec(g.table[b]));
        doc.even.push_back(std::move(ev));
    }
    for (std::size_t e = 0; e < g.even.size(); ++e)
        for (std::size_t o = 0; o < g.odd.size(); ++o)
            if (int m = g.multiplicity(e, o); m > 0)
                doc.edges.push_back({static_cast<int>(e), static_cast<int>(o), m});
    return doc;
}

std::string to_json(const GraphDocument& doc) {
    std::string out;
    out += "{\n";
    out += "  \"model\": {\"algebra\": \"su" + std::to_string(doc.model.rank) +
           "\", \"level\": " + std::to_string(doc.model.level) + "},\n";
    out += "  \"kind\": \"" + doc.kind + "\",\n";
    out += "  \"odd\": [\n";
    for (std::size_t i = 0; i < doc.odd.size(); ++i) {
        const auto& o = doc.odd[i];
        out += "    {\"id\": " + std::to_string(o.id) + ", \"label\": \"" + o.label +
               "\", \"dynkin\": ";
        write_int_array(out, o.dynkin);
        out += ", \"dimension\": " + format_number(o.dimension) + "}";
        out += (i + 1 < doc.odd.size()) ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"even\": [\n";
    for (std::size_t i = 0; i < doc.even.size(); ++i) {
        const auto& e = doc.even[i];
        out += "    {\"id\": " + std::to_string(e.id) + ", \"label\": \"" + e.label +
               "\", \"orbit\": [";
        for (std::size_t j = 0; j < e.orbit.size(); ++j) {
            if (j) out += ',';
            out += '[';
            write_int_array(out, e.orbit[j].first);
            out += ',';
            write_int_array(out, e.orbit[j].second);
            out += ']';
        }
        out += "], \"split\": ";
        out += e.split_index ? std::to_string(*e.split_index) : "null";
        out += ", \"dimension\": " + format_number(e.dimension) + "}";
        out += (i + 1 < doc.even.size()) ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"edges\": [\n";
    for (std::size_t i = 0; i < doc.edges.size(); ++i) {
        const auto& ed = doc.edges[i];
        out += "    [" + std::to_string(ed.even_id) + ", " + std::to_string(ed.odd_id) +
               ", " + std::to_string(ed.multiplicity) + "]";
        out += (i + 1 < doc.edges.size()) ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"provenance\": {\"generator\": \"" + doc.generator +
           "\", \"tolerance\": " + format_number(doc.tolerance) + "}\n";
    out += "}\n";
    return out;
}

GraphDocument parse_json(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("invalid graph JSON: ") + e.what());
    }
    GraphDocument doc;
    const auto& jm = j.at("model");
    const std::string algebra = jm.at("algebra").get<std::string>();
    if (algebra != "su2" && algebra != "su3") throw error("unknown algebra " + algebra);
    doc.model.rank = algebra == "su2" ? 2 : 3;
    doc.model.level = jm.at("level").get<int>();
    doc.kind = j.at("kind").get<std::string>();
    for (const auto& jo : j.at("odd")) {
        GraphDocument::Odd o;
        o.id = jo.at("id").get<int>();
        o.label = jo.at("label").get<std::string>();
        o.dynkin = jo.at("dynkin").get<std::vector<int>>();
        o.dimension = jo.at("dimension").get<double>();
        doc.odd.push_back(std::move(o));
    }
    for (const auto& je : j.at("even")) {
        GraphDocument::Even e;
        e.id = je.at("id").get<int>();
        e.label = je.at("label").get<std::string>();
        for (const auto& jp : je.at("orbit"))
            e.orbit.emplace_back(jp.at(0).get<std::vector<int>>(),
                                 jp.at(1).get<std::vector<int>>());
        if (!je.at("split").is_null()) e.split_index = je.at("split").get<int>();
        e.dimension = je.at("dimension").get<double>();
        doc.even.push_back(std::move(e));
    }
    for (const auto& jd : j.at("edges"))
        doc.edges.push_back({jd.at(0).get<int>(), jd.at(1).get<int>(), jd.at(2).get<int>()});
    if (j.contains("provenance")) {
        doc.generator = j["provenance"].value("generator", "");
        doc.tolerance = j["provenance"].value("tolerance", 1e-6);
    }
    return doc;
}

std::string to_dot(const BipartiteGraph& g) {
    std::string out;
    out += "graph " + g.model.name() + "_" + g.kind + " {\n";
    out += "  node [shape=circle];\n";
    for (std::size_t o = 0; o < g.odd.size(); ++o)
        out += "  o" + std::to_string(o) + " [label=\"" + g.odd[o].label + "\"];\n";
    out += "  node [shape=box];\n";
    for (std::size_t e = 0; e < g.even.size(); ++e)
        out += "  e" + std::to_string(e) + " [label=\"" + g.even[e].label + "\"];\n";
    for (std::size_t e = 0; e < g.even.size(); ++e)
        for (std::size_t o = 0; o < g.odd.size(); ++o)
            for (int m = 0; m < g.multiplicity(e, o); ++m)
                out += "  e" + std::to_string(e) + " -- o" + std::to_string(o) + ";\n";
    out += "}\n";
    return out;
}

std::string to_table(const BipartiteGraph& g) {
    std::ostringstream out;
    out << g.model.name() << " " << g.kind << " graph\n";
    out << "odd vertices:\n";
    for (std::size_t o = 0; o < g.odd.size(); ++o)
        out << "  o" << o << "  " << g.odd[o].label << "  dim "
            << format_number(g.odd[o].dimension) << "\n";
    out << "even vertices:\n";
    for (std::size_t e = 0; e < g.even.size(); ++e)
        out << "  e" << e << "  " << g.even[e].label << "  dim "
            << format_number(g.even[e].dimension) << "\n";
    out << "edges:\n";
    for (std::size_t e = 0; e < g.even.size(); ++e)
        for (std::size_t o = 0; o < g.odd.size(); ++o)
            if (int m = g.multiplicity(e, o); m > 0)
                out << "  e" << e << " -- o" << o << "  x" << m << "\n";
    return out.str();
}

std::string export_graph(const BipartiteGraph& g, const std::string& format,
                         double tolerance) {
    if (!g.connected()) throw error("refusing to export a disconnected graph");
    if (format == "json") return to_json(to_document(g, tolerance));
    if (format == "dot") return to_dot(g);
    if (format == "table") return to_table(g);
    throw error("unsupported format '" + format + "' (expected json, dot or table)");
}

namespace {

using OrbitKey = std::vector<std::pair<std::vector<int>, std::vector<int>>>;

struct EvenKey {
    OrbitKey orbit;
    bool split;
    std::vector<std::pair<std::vector<int>, int>> edges;  // (odd dynkin, mult)

    bool operator<(const EvenKey& o) const {
        if (orbit != o.orbit) return orbit < o.orbit;
        if (split != o.split) return split < o.split;
        return edges < o.edges;
    }
    bool operator==(const EvenKey& o) const {
        return orbit == o.orbit && split == o.split && edges == o.edges;
    }
};

std::vector<std::pair<EvenKey, double>> even_signatures(const GraphDocument& d) {
    std::map<int, std::vector<int>> odd_dynkin;
    for (const auto& o : d.odd) odd_dynkin[o.id] = o.dynkin;
    std::map<int, std::vector<std::pair<std::vector<int>, int>>> edges_of;
    for (const auto& e : d.edges)
        edges_of[e.even_id].emplace_back(odd_dynkin.at(e.odd_id), e.multiplicity);
    std::vector<std::pair<EvenKey, double>> out;
    for (const auto& e : d.even) {
        EvenKey key;
        key.orbit = e.orbit;
        std::sort(key.orbit.begin(), key.orbit.end());
        key.split = e.split_index.has_value();
        key.edges = edges_of[e.id];
        std::sort(key.edges.begin(), key.edges.end());
        out.emplace_back(std::move(key), e.dimension);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

bool same_graph(const GraphDocument& a, const GraphDocument& b, double tol, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.model != b.model) return fail("models differ");
    if (a.kind != b.kind) return fail("graph kinds differ");

    auto odd_sorted = [](const GraphDocument& d) {
        std::vector<std::pair<std::vector<int>, double>> v;
        for (const auto& o : d.odd) v.emplace_back(o.dynkin, o.dimension);
        std::sort(v.begin(), v.end());
        return v;
    };
    auto oa = odd_sorted(a), ob = odd_sorted(b);
    if (oa.size() != ob.size()) return fail("odd vertex counts differ");
    for (std::size_t i = 0; i < oa.size(); ++i) {
        if (oa[i].first != ob[i].first) return fail("odd vertex sets differ");
        if (std::abs(oa[i].second - ob[i].second) > tol)
            return fail("odd vertex dimensions differ");
    }

    auto ea = even_signatures(a), eb = even_signatures(b);
    if (ea.size() != eb.size()) return fail("even vertex counts differ");
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (!(ea[i].first == eb[i].first))
            return fail("even vertex orbits or edges differ at position " + std::to_string(i));
        if (std::abs(ea[i].second - eb[i].second) > tol)
            return fail("even vertex dimensions differ at position " + std::to_string(i));
    }
    return true;
}

}  // namespace asym
