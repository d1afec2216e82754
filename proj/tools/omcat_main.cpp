// omcat: exact combinatorial engine for oriented matroid programs and the
// graded invariants of their quiver algebras.
//
// Verbs:
//   om check|dual|minor        validate / dualize / take minors of matroids
//   program analyze|graph|mu|cone
//   algebra hilbert|koszul|kgroup|selfdual|oracle
//   fixtures list|verify
//
// Exit codes: 0 success, 1 domain error, 2 resource guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "omcat/algebra.hpp"
#include "omcat/b_algebra.hpp"
#include "omcat/construct.hpp"
#include "omcat/fixtures.hpp"
#include "omcat/io_json.hpp"
#include "omcat/log.hpp"
#include "omcat/oracle.hpp"

using namespace omcat;

namespace {

struct CommonOpts {
    std::string fixture_name;
    std::string input_path;
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string field = "q";
    std::size_t max_covectors = kDefaultCovectorCap;
    std::size_t max_topes = 8;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_fixture = true) {
    if (with_fixture) cmd->add_option("--fixture", o.fixture_name, "named fixture");
    cmd->add_option("--input", o.input_path, "input JSON path");
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_option("--format", o.format, "json|csv|dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));
    cmd->add_option("--seed", o.seed, "seed for the random fixtures");
    cmd->add_option("--field", o.field, "q for rationals or p<P> for a prime field");
    cmd->add_option("--max-covectors", o.max_covectors, "covector closure cap");
    cmd->add_option("--max-topes", o.max_topes, "tope cap for the explicit algebra routes");
}

void emit(const CommonOpts& o, const std::string& content) {
    if (o.out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
    } else {
        write_text_file(o.out_path, content);
        log_info("wrote " + o.out_path);
    }
}

FieldSpec parse_field(const std::string& s) {
    if (s == "q") return FieldSpec::rationals();
    if (s.size() > 1 && s[0] == 'p') return FieldSpec::mod(std::stoull(s.substr(1)));
    throw DomainError("field", "field must be 'q' or 'p<prime>'");
}

ProgramOptions program_options(const CommonOpts& o) {
    ProgramOptions po;
    po.max_covectors = o.max_covectors;
    return po;
}

// Table-or-program source for the algebra verbs: a program JSON, a mu-table
// JSON (a list), or a fixture name.
struct Instance {
    std::shared_ptr<Program> program;
    std::shared_ptr<MuTable> table;
    std::optional<ParameterSpace> param;
};

Instance load_instance(const CommonOpts& o) {
    Instance inst;
    if (!o.fixture_name.empty()) {
        Fixture f = fixture(o.fixture_name, o.seed, program_options(o));
        if (!f.table && !f.program)
            throw DomainError("fixture", "fixture '" + o.fixture_name + "' carries no data");
        inst.program = f.program;
        inst.table = f.table;
        inst.param = f.param;
        return inst;
    }
    if (o.input_path.empty())
        throw DomainError("cli", "need --fixture NAME or --input PATH");
    Json j = load_json_file(o.input_path);
    if (j.is_array()) {
        inst.table = std::make_shared<MuTable>(mu_table_from_json(j));
    } else {
        inst.program = std::make_shared<Program>(program_from_json(j, program_options(o)));
        inst.table = std::make_shared<MuTable>(inst.program->mu_table());
    }
    return inst;
}

OrientedMatroid load_om(const CommonOpts& o) {
    if (o.input_path.empty()) throw DomainError("cli", "need --input PATH");
    return om_from_json(load_json_file(o.input_path));
}

std::uint64_t parse_elements(const std::string& csv, const OrientedMatroid& om) {
    std::uint64_t mask = 0;
    std::size_t start = 0;
    while (start < csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        std::string label = csv.substr(start, comma - start);
        if (!label.empty()) mask |= std::uint64_t(1) << om.label_index(label);
        start = comma + 1;
    }
    return mask;
}

std::string dot_graph(const Program& p) {
    const TopeGraph& g = p.graph();
    const auto& labels = p.ground_labels();
    std::string out = "digraph tope_graph {\n";
    std::uint64_t en = (std::uint64_t(1) << p.n()) - 1;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out += "  v" + std::to_string(i) + " [label=\"" +
               subset_str(g.vertices[i].zero_set() & en, labels) + "\"];\n";
    }
    for (const auto& e : g.edges)
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + ";\n";
    int ray_id = 0;
    for (const auto& r : g.rays) {
        std::string inf = "inf" + std::to_string(ray_id++);
        out += "  " + inf + " [shape=none,label=\"\"];\n";
        if (r.outgoing)
            out += "  v" + std::to_string(r.vertex) + " -> " + inf + " [style=dashed];\n";
        else
            out += "  " + inf + " -> v" + std::to_string(r.vertex) + " [style=dashed];\n";
    }
    out += "}\n";
    return out;
}

int run_om_check(const CommonOpts& o) {
    if (o.input_path.empty()) throw DomainError("cli", "need --input PATH");
    Json j = load_json_file(o.input_path);
    std::vector<std::string> labels = j.at("ground").get<std::vector<std::string>>();
    std::vector<SignVector> cocircuits;
    for (const auto& s : j.at("cocircuits"))
        cocircuits.push_back(SignVector::parse(s.get<std::string>()));
    AxiomReport rep = check_axioms(cocircuits);
    Json out;
    out["pass"] = rep.pass;
    if (!rep.pass) {
        out["violated"] = rep.violated;
        out["detail"] = rep.detail;
        std::vector<std::string> wit;
        for (const auto& w : rep.witness) wit.push_back(w.str());
        out["witness"] = wit;
    }
    emit(o, out.dump(2));
    if (!rep.pass) {
        std::cerr << "axiom check failed (" << rep.violated << "): " << rep.detail << "\n";
        return 1;
    }
    return 0;
}

int run_program_analyze(const CommonOpts& o) {
    Instance inst = load_instance(o);
    Json out;
    if (inst.program) {
        const Program& p = *inst.program;
        out["n"] = p.n();
        out["d"] = p.d();
        out["generic"] = p.is_generic();
        if (!p.is_generic()) {
            out["violation"] = p.genericity().detail;
        } else {
            out["feasible_topes"] = p.feasible_topes().size();
            out["bounded_sign_vectors"] = p.bounded_sign_vectors().size();
            out["bases"] = p.underlying().bases().size();
            out["bounded_feasible_topes"] = p.bounded_feasible_topes().size();
            out["euclidean"] = p.is_euclidean();
        }
    } else {
        const MuTable& t = *inst.table;
        out["n"] = t.n();
        out["bounded_feasible_topes"] = t.size();
        out["cone_closure_antisymmetric"] = t.closure_antisymmetric();
    }
    emit(o, out.dump(2));
    if (inst.program && !inst.program->is_generic()) return 1;
    return 0;
}

int run_program_graph(const CommonOpts& o, bool want_dot) {
    Instance inst = load_instance(o);
    if (!inst.program) throw DomainError("cli", "the graph needs a full program, not a table");
    if (want_dot || o.format == "dot") {
        emit(o, dot_graph(*inst.program));
        return 0;
    }
    const TopeGraph& g = inst.program->graph();
    Json out;
    std::vector<std::string> verts;
    for (const auto& v : g.vertices) verts.push_back(v.str());
    out["vertices"] = verts;
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({e.from, e.to});
    out["edges"] = edges;
    out["acyclic"] = g.acyclic;
    if (!g.acyclic) out["witness_cycle"] = g.witness_cycle;
    emit(o, out.dump(2));
    return 0;
}

int run_program_mu(const CommonOpts& o) {
    Instance inst = load_instance(o);
    emit(o, mu_table_to_json(*inst.table).dump(2));
    return 0;
}

int run_program_cone(const CommonOpts& o) {
    Instance inst = load_instance(o);
    const MuTable& t = *inst.table;
    Json out;
    std::vector<std::string> topes;
    for (const auto& a : t.topes()) topes.push_back(a.str());
    out["topes"] = topes;
    Json rel = Json::array();
    for (std::size_t b = 0; b < t.size(); ++b)
        for (std::size_t a = 0; a < t.size(); ++a)
            if (a != b && t.cone_leq(b, a)) rel.push_back({b, a});
    out["pairs_below"] = rel;
    out["closure_antisymmetric"] = t.closure_antisymmetric();
    if (auto v = t.antisymmetry_violation()) {
        out["violation"] = {t.topes()[v->first].str(), t.topes()[v->second].str()};
    } else {
        Json covers = Json::array();
        for (auto [a, b] : t.hasse_covers()) covers.push_back({a, b});
        out["hasse_covers"] = covers;
    }
    if (inst.program)
        out["euclidean_matches_closure"] =
            inst.program->is_euclidean() == t.closure_antisymmetric();
    emit(o, out.dump(2));
    return 0;
}

int run_algebra_hilbert(const CommonOpts& o) {
    Instance inst = load_instance(o);
    GradedMatrix h = hilbert_matrix(*inst.table);
    emit(o, o.format == "csv" ? graded_matrix_csv(h) : graded_matrix_to_json(h).dump(2));
    return 0;
}

int run_algebra_koszul(const CommonOpts& o) {
    Instance inst = load_instance(o);
    KoszulReport rep = koszul_identity(*inst.table);
    std::cout << (rep.pass ? "PASS" : "FAIL")
              << ": Hilbert-series identity H(A,q) H(A!,-q)^T = I\n";
    emit(o, o.format == "csv" ? graded_matrix_csv(rep.residual)
                              : graded_matrix_to_json(rep.residual).dump(2));
    return rep.pass ? 0 : 1;
}

int run_algebra_kgroup(const CommonOpts& o, const std::string& tope) {
    Instance inst = load_instance(o);
    Json out = Json::array();
    auto one = [&](const SignVector& alpha) {
        Json row;
        row["projective"] = alpha.str();
        Json terms = Json::array();
        for (const auto& term : kgroup_projective(*inst.table, alpha)) {
            Json tj;
            tj["standard"] = term.standard.str();
            tj["q_power"] = term.q_power;
            terms.push_back(tj);
        }
        row["standards"] = terms;
        return row;
    };
    if (tope.empty())
        for (const auto& alpha : inst.table->topes()) out.push_back(one(alpha));
    else
        out.push_back(one(SignVector::parse(tope)));
    emit(o, out.dump(2));
    return 0;
}

int run_algebra_selfdual(const CommonOpts& o) {
    Instance inst = load_instance(o);
    if (!inst.program)
        throw DomainError("cli", "self-dual projectives need a full program, not a table");
    Json out = Json::array();
    for (const auto& alpha : self_dual_projectives(*inst.program)) out.push_back(alpha.str());
    emit(o, out.dump(2));
    return 0;
}

int run_algebra_oracle(const CommonOpts& o) {
    Instance inst = load_instance(o);
    if (!inst.program || !inst.param)
        throw DomainError("cli", "the oracle needs a program fixture with a parameter space");
    ParameterSpace u = *inst.param;
    if (o.field != "q") u = ParameterSpace(u.theta(), parse_field(o.field));
    OracleOptions opts;
    opts.max_topes = o.max_topes;
    GradedMatrix dims = path_algebra_oracle(*inst.program, u, opts);
    GradedMatrix closed = hilbert_matrix(*inst.table);
    bool match = dims == closed;
    std::cout << (match ? "PASS" : "FAIL") << ": oracle dims vs closed form\n";
    emit(o, o.format == "csv" ? graded_matrix_csv(dims) : graded_matrix_to_json(dims).dump(2));
    return match ? 0 : 1;
}

int run_fixtures_list() {
    for (const auto& name : fixture_names()) std::cout << name << "\n";
    return 0;
}

int run_fixtures_verify(const CommonOpts& o, const std::string& name) {
    std::vector<std::string> names;
    if (name == "all" || name.empty()) {
        names = {"u1_2_line", "figure1", "efm8_mu_table", "vamos_note"};
    } else {
        names.push_back(name);
    }
    bool all_pass = true;
    for (const auto& nm : names) {
        Fixture f = fixture(nm, o.seed);
        for (const auto& fact : f.verify()) {
            bool ok = fact.pass;
            all_pass &= ok;
            std::cout << (ok ? "[PASS] " : "[FAIL] ") << nm << ": " << fact.claim << " ("
                      << fact.provenance << ")\n";
        }
        if (nm == "efm8_mu_table") {
            if (auto v = f.table->antisymmetry_violation())
                std::cout << "  note: closure identifies " << f.table->topes()[v->first].str()
                          << " and " << f.table->topes()[v->second].str()
                          << "; the cone order is not a poset\n";
        }
    }
    std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for oriented matroid programs and their graded algebra invariants"};
    app.require_subcommand(1);
    CommonOpts o;

    CLI::App* om = app.add_subcommand("om", "oriented matroid operations");
    om->require_subcommand(1);
    CLI::App* om_check = om->add_subcommand("check", "validate a cocircuit set");
    add_common(om_check, o, false);
    CLI::App* om_dual = om->add_subcommand("dual", "dualize an oriented matroid");
    add_common(om_dual, o, false);
    CLI::App* om_minor = om->add_subcommand("minor", "delete/contract elements");
    add_common(om_minor, o, false);
    std::string delete_csv, contract_csv;
    om_minor->add_option("--delete", delete_csv, "comma-separated labels to delete");
    om_minor->add_option("--contract", contract_csv, "comma-separated labels to contract");

    CLI::App* prog = app.add_subcommand("program", "oriented matroid program analyses");
    prog->require_subcommand(1);
    CLI::App* p_analyze = prog->add_subcommand("analyze", "n, d, tope counts, genericity");
    add_common(p_analyze, o);
    CLI::App* p_graph = prog->add_subcommand("graph", "directed vertex-edge graph");
    add_common(p_graph, o);
    bool want_dot = false;
    p_graph->add_flag("--dot", want_dot, "emit DOT");
    CLI::App* p_mu = prog->add_subcommand("mu", "basis <-> tope table");
    add_common(p_mu, o);
    CLI::App* p_cone = prog->add_subcommand("cone", "cone relation and its closure");
    add_common(p_cone, o);

    CLI::App* alg = app.add_subcommand("algebra", "graded algebra invariants");
    alg->require_subcommand(1);
    CLI::App* a_hilbert = alg->add_subcommand("hilbert", "Hilbert matrix H(A,q)");
    add_common(a_hilbert, o);
    CLI::App* a_koszul = alg->add_subcommand("koszul", "numerical Koszulity identity");
    add_common(a_koszul, o);
    CLI::App* a_kgroup = alg->add_subcommand("kgroup", "projective classes in standards");
    add_common(a_kgroup, o);
    std::string tope_arg;
    a_kgroup->add_option("--tope", tope_arg, "restrict to one tope");
    CLI::App* a_selfdual = alg->add_subcommand("selfdual", "self-dual projectives");
    add_common(a_selfdual, o);
    CLI::App* a_oracle = alg->add_subcommand("oracle", "path-algebra oracle (tiny instances)");
    add_common(a_oracle, o);

    CLI::App* fx = app.add_subcommand("fixtures", "named instances");
    fx->require_subcommand(1);
    fx->add_subcommand("list", "list fixture names");
    CLI::App* fx_verify = fx->add_subcommand("verify", "re-run certified facts");
    add_common(fx_verify, o, false);
    std::string verify_name;
    fx_verify->add_option("name", verify_name, "fixture name or 'all'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (om_check->parsed()) return run_om_check(o);
        if (om_dual->parsed()) {
            OrientedMatroid m = load_om(o);
            emit(o, om_to_json(m.dual()).dump(2));
            return 0;
        }
        if (om_minor->parsed()) {
            OrientedMatroid m = load_om(o);
            std::uint64_t del = parse_elements(delete_csv, m);
            std::uint64_t con = parse_elements(contract_csv, m);
            emit(o, om_to_json(m.minor(del, con)).dump(2));
            return 0;
        }
        if (p_analyze->parsed()) return run_program_analyze(o);
        if (p_graph->parsed()) return run_program_graph(o, want_dot);
        if (p_mu->parsed()) return run_program_mu(o);
        if (p_cone->parsed()) return run_program_cone(o);
        if (a_hilbert->parsed()) return run_algebra_hilbert(o);
        if (a_koszul->parsed()) return run_algebra_koszul(o);
        if (a_kgroup->parsed()) return run_algebra_kgroup(o, tope_arg);
        if (a_selfdual->parsed()) return run_algebra_selfdual(o);
        if (a_oracle->parsed()) return run_algebra_oracle(o);
        if (fx->get_subcommand("list")->parsed()) return run_fixtures_list();
        if (fx_verify->parsed()) return run_fixtures_verify(o, verify_name);
    } catch (const ResourceLimitError& e) {
        Json err{{"error", "resource"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const DomainError& e) {
        Json err{{"error", e.kind}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err{{"error", "internal"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    std::cerr << "unknown verb\n";
    return 1;
}
