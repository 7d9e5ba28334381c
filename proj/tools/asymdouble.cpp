#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "asym/double_graph.hpp"
#include "asym/fusion.hpp"
#include "asym/graph_io.hpp"
#include "asym/modular.hpp"
#include "asym/orbifold.hpp"
#include "asym/verify.hpp"

namespace {

struct Common {
    std::string algebra = "su2";
    int level = 1;
    std::string format = "table";
    std::string out;
    double tolerance = 1e-6;
};

void add_common(CLI::App* sub, Common& opt, bool with_format = true) {
    sub->add_option("--algebra", opt.algebra, "su2 or su3")
        ->check(CLI::IsMember({"su2", "su3"}));
    sub->add_option("--level", opt.level, "level k >= 1");
    if (with_format)
        sub->add_option("--format", opt.format, "json, dot or table")
            ->check(CLI::IsMember({"json", "dot", "table"}));
    sub->add_option("--out", opt.out, "write the artifact to PATH instead of stdout");
    sub->add_option("--tolerance", opt.tolerance, "numeric tolerance")
        ->envname("ASYMDOUBLE_TOLERANCE");
}

asym::Model model_of(const Common& opt) {
    asym::Model m{opt.algebra == "su2" ? 2 : 3, opt.level};
    m.validate();
    return m;
}

void emit(const Common& opt, const std::string& bytes) {
    if (opt.out.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw asym::error("cannot write " + opt.out);
    f << bytes;
}

asym::Field parse_field(const asym::Model& m, const std::string& labels) {
    std::vector<int> parts;
    std::stringstream ss(labels);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    if (parts.size() != static_cast<std::size_t>(m.rank - 1))
        throw asym::error("expected " + std::to_string(m.rank - 1) +
                          " comma-separated Dynkin labels, got '" + labels + "'");
    asym::Field f{m, {parts[0], parts.size() > 1 ? parts[1] : 0}};
    f.validate();
    return f;
}

std::string label_list(const asym::ModularData& md, const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t x : xs) {
        if (!s.empty()) s += ", ";
        s += asym::display_label(md.table()[x]);
    }
    return s.empty() ? "(none)" : s;
}

int run(int argc, char** argv) {
    CLI::App app{"exact fusion data, S-matrices and asymptotic-inclusion graphs for "
                 "SU(2)_k and SU(3)_k"};
    app.require_subcommand(1);

    Common opt;

    auto* c_fields = app.add_subcommand("fields", "list the primary fields of a model");
    add_common(c_fields, opt);

    std::string a_labels, b_labels;
    auto* c_fusion = app.add_subcommand("fusion", "fusion product of two fields");
    add_common(c_fusion, opt);
    c_fusion->add_option("--a", a_labels, "Dynkin labels of a, e.g. 1,1")->required();
    c_fusion->add_option("--b", b_labels, "Dynkin labels of b")->required();

    auto* c_smatrix = app.add_subcommand("smatrix", "modular S-matrix");
    add_common(c_smatrix, opt);

    auto* c_degen = app.add_subcommand("degenerate", "degeneracy report for the grade-0 system");
    add_common(c_degen, opt);

    auto* c_principal = app.add_subcommand("principal-graph", "fusion graph of the grade-0 system");
    add_common(c_principal, opt);

    auto* c_dual = app.add_subcommand("dual-graph", "dual principal graph of the asymptotic inclusion");
    add_common(c_dual, opt);

    auto* c_counts = app.add_subcommand("counts", "even-vertex count of the dual graph");
    add_common(c_counts, opt, false);

    int n_param = 3;
    auto* c_orbifold = app.add_subcommand("orbifold", "order-2 orbifold index bookkeeping");
    c_orbifold->add_option("--n", n_param, "parameter n > 2 (acts on SU(2)_{4n-4})");
    c_orbifold->add_option("--tolerance", opt.tolerance, "numeric tolerance")
        ->envname("ASYMDOUBLE_TOLERANCE");
    c_orbifold->add_option("--out", opt.out, "write to PATH");

    std::string suite = "quick", fixtures_dir = "fixtures";
    auto* c_verify = app.add_subcommand("verify", "run the verification suite");
    c_verify->add_option("--suite", suite, "quick or paper")
        ->check(CLI::IsMember({"quick", "paper"}));
    c_verify->add_option("--fixtures", fixtures_dir, "directory with the reference fixtures");
    c_verify->add_option("--tolerance", opt.tolerance, "numeric tolerance")
        ->envname("ASYMDOUBLE_TOLERANCE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (c_fields->parsed()) {
        const asym::Model m = model_of(opt);
        const auto md = asym::ModularData::compute(m, opt.tolerance);
        const auto& t = md.table();
        std::ostringstream os;
        if (opt.format == "json") {
            os << "[\n";
            for (std::size_t i = 0; i < t.size(); ++i) {
                os << "  {\"index\": " << i << ", \"label\": \"" << display_label(t[i])
                   << "\", \"grade\": " << t.grade(i)
                   << ", \"qdim\": " << asym::format_number(md.qdim(i))
                   << ", \"conjugate\": " << t.conj(i) << ", \"sigma\": " << t.sigma(i) << "}"
                   << (i + 1 < t.size() ? "," : "") << "\n";
            }
            os << "]\n";
        } else {
            os << m.name() << ": " << t.size() << " primary fields\n";
            os << "index  label  grade  qdim            conj  sigma\n";
            for (std::size_t i = 0; i < t.size(); ++i)
                os << i << "  " << display_label(t[i]) << "  " << t.grade(i) << "  "
                   << asym::format_number(md.qdim(i)) << "  " << t.conj(i) << "  "
                   << t.sigma(i) << "\n";
        }
        emit(opt, os.str());
        return 0;
    }

    if (c_fusion->parsed()) {
        const asym::Model m = model_of(opt);
        const auto table = asym::FieldTable::enumerate(m);
        const std::size_t a = table.index_of(parse_field(m, a_labels));
        const std::size_t b = table.index_of(parse_field(m, b_labels));
        const asym::RingElement product = asym::fuse(table, a, b);
        std::ostringstream os;
        if (opt.format == "json") {
            os << "{";
            bool first = true;
            for (const auto& [c, n] : product.coeffs()) {
                os << (first ? "" : ", ") << "\"" << display_label(table[c]) << "\": " << n;
                first = false;
            }
            os << "}\n";
        } else {
            os << display_label(table[a]) << " x " << display_label(table[b]) << " =\n";
            for (const auto& [c, n] : product.coeffs())
                os << "  (" << table[c].labels[0]
                   << (m.rank == 3 ? "," + std::to_string(table[c].labels[1]) : "") << ")  "
                   << display_label(table[c]) << ": " << n << "\n";
        }
        emit(opt, os.str());
        return 0;
    }

    if (c_smatrix->parsed()) {
        const asym::Model m = model_of(opt);
        const auto md = asym::ModularData::compute(m, opt.tolerance);
        const std::size_t f = md.table().size();
        std::ostringstream os;
        if (opt.format == "json") {
            os << "[\n";
            for (std::size_t x = 0; x < f; ++x) {
                os << "  [";
                for (std::size_t y = 0; y < f; ++y) {
                    auto v = md.s(x, y);
                    os << (y ? ", " : "") << "[" << asym::format_number(v.real()) << ", "
                       << asym::format_number(v.imag()) << "]";
                }
                os << "]" << (x + 1 < f ? "," : "") << "\n";
            }
            os << "]\n";
        } else {
            for (std::size_t x = 0; x < f; ++x) {
                for (std::size_t y = 0; y < f; ++y) {
                    auto v = md.s(x, y);
                    os << (y ? "  " : "") << asym::format_number(v.real());
                    if (std::abs(v.imag()) > 0) os << (v.imag() > 0 ? "+" : "") << asym::format_number(v.imag()) << "i";
                }
                os << "\n";
            }
        }
        emit(opt, os.str());
        return 0;
    }

    if (c_degen->parsed()) {
        const asym::Model m = model_of(opt);
        const auto md = asym::ModularData::compute(m, opt.tolerance);
        const auto members = md.table().grade_zero();
        std::ostringstream os;
        os << m.name() << " grade-0 system: " << label_list(md, members) << "\n";
        os << "degenerate set:       " << label_list(md, md.degenerate_set(members)) << "\n";
        os << "sufficient criterion: " << label_list(md, md.degenerate_set_sufficient(members))
           << "\n";
        os << "simple currents:      " << label_list(md, md.simple_currents(members)) << "\n";
        emit(opt, os.str());
        return 0;
    }

    if (c_principal->parsed() || c_dual->parsed()) {
        const asym::Model m = model_of(opt);
        const auto ring = asym::FusionRing::build(m);
        const auto md = asym::ModularData::compute(m, opt.tolerance);
        const asym::BipartiteGraph g = c_principal->parsed()
                                           ? asym::principal_graph(ring.grade_zero(), md)
                                           : asym::dual_graph(ring, md);
        emit(opt, asym::export_graph(g, opt.format, opt.tolerance));
        return 0;
    }

    if (c_counts->parsed()) {
        const asym::Model m = model_of(opt);
        emit(opt, std::to_string(asym::even_vertex_count(m)) + "\n");
        return 0;
    }

    if (c_orbifold->parsed()) {
        const asym::OrbifoldReport r = asym::orbifold_report(n_param, opt.tolerance);
        std::ostringstream os;
        os << "n = " << r.n_param << " (SU(2)_" << 4 * r.n_param - 4 << ")\n";
        os << "[M]                    = " << asym::format_number(r.m_index) << "\n";
        os << "gamma = [M]^2          = " << asym::format_number(r.gamma) << "\n";
        os << "index cases gamma/4,2,8: " << asym::format_number(r.cases.strongly_outer_trivial_loi)
           << ", " << asym::format_number(r.cases.strongly_outer_nontrivial_loi) << ", "
           << asym::format_number(r.cases.not_strongly_outer) << "\n";
        os << "pairs-of-evens index   = " << asym::format_number(r.n0_index) << " (gamma/2, "
           << r.n0_objects << " objects)\n";
        os << "quotient double index  = " << asym::format_number(r.n1_index)
           << " (gamma/4 = ([M]/2)^2)\n";
        os << "even quotient          = " << r.quotient_objects << " objects, global index "
           << asym::format_number(r.quotient_index) << ", " << r.invertible_in_quotient
           << " invertible\n";
        emit(opt, os.str());
        return 0;
    }

    if (c_verify->parsed()) {
        const auto report = asym::run_verify(
            suite == "quick" ? asym::Suite::quick : asym::Suite::paper, fixtures_dir,
            opt.tolerance);
        std::cout << asym::format_report(report);
        return report.all_pass ? 0 : 2;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const asym::consistency_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const asym::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
