// command-line front end: solvers, generators, verifiers, benchmark harness
#include "modcolor/errors.hpp"
#include "modcolor/families.hpp"
#include "modcolor/graph.hpp"
#include "modcolor/io.hpp"
#include "modcolor/lists.hpp"
#include "modcolor/nocert.hpp"
#include "modcolor/oracle.hpp"
#include "modcolor/treedepth.hpp"
#include "modcolor/vc_solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace modcolor;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_input("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw invalid_input("cannot write '" + path + "'");
    return out;
}

Graph load_graph(const std::string &path) {
    auto in = open_input(path);
    try {
        return io::read_graph(in);
    } catch (const invalid_input &e) {
        throw invalid_input(path + ": " + e.what());
    }
}

ListAssignment load_lists(const std::string &path) {
    auto in = open_input(path);
    try {
        return io::read_lists(in);
    } catch (const invalid_input &e) {
        throw invalid_input(path + ": " + e.what());
    }
}

ClassTag parse_class(const std::string &name) {
    auto tag = class_tag_from_name(name);
    if (!tag)
        throw invalid_input("unknown graph class '" + name + "'");
    return *tag;
}

// report printing: stable key order either way
struct Report {
    ordered_json body;
    bool as_json = false;

    ~Report() = default;

    void emit() const {
        if (as_json) {
            std::cout << body.dump() << '\n';
            return;
        }
        for (const auto &[key, value] : body.items()) {
            if (value.is_string())
                std::cout << key << ": " << value.get<std::string>() << '\n';
            else
                std::cout << key << ": " << value.dump() << '\n';
        }
    }
};

class StopWatch {
public:
    double ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json stats_json(const BranchStats &s) {
    return {{"nodes_expanded", s.nodes_expanded},
            {"subsets_enumerated", s.subsets_enumerated},
            {"top_level_subsets", s.top_level_subsets},
            {"depth", s.depth}};
}

struct SolveOptions {
    std::string solver;
    std::string graph_path, lists_path, modulator_path, witness_path, zeta_path;
    std::string class_name = "independent";
    int q = 0;
    int g = 1;
    bool stats = false;
    bool json = false;
};

int run_solve(const SolveOptions &opt) {
    StopWatch watch;
    Graph g = load_graph(opt.graph_path);
    ListAssignment lists;
    if (!opt.lists_path.empty()) {
        lists = load_lists(opt.lists_path);
        if (lists.num_vertices() != g.num_vertices())
            throw invalid_input("lists cover " + std::to_string(lists.num_vertices()) +
                                " vertices, graph has " + std::to_string(g.num_vertices()));
        if (opt.q != 0 && opt.q != lists.q)
            throw invalid_input("--q disagrees with the list file header");
    } else {
        if (opt.q < 1)
            throw invalid_input("--q required when no list file is given");
        lists = ListAssignment(g.num_vertices(), opt.q, true);
    }

    Report report;
    report.as_json = opt.json;
    report.body["format_version"] = kFormatVersion;
    report.body["command"] = "solve " + opt.solver;

    bool yes = false;
    std::optional<Coloring> witness;
    BranchStats stats;

    if (opt.solver == "brute") {
        witness = oracle::brute_force_list_color(g, lists, -1, &stats.nodes_expanded);
        yes = witness.has_value();
    } else if (opt.solver == "chromatic") {
        int chi = oracle::chromatic_number_ie(g);
        report.body["chromatic_number"] = chi;
        yes = chi <= lists.q;
        if (yes)
            witness = oracle::brute_force_list_color(g, lists);
    } else if (opt.solver == "vc") {
        if (opt.modulator_path.empty())
            throw invalid_input("solve vc requires --modulator");
        auto min = open_input(opt.modulator_path);
        VertexSet x = io::read_vertex_set(min, g.num_vertices());
        for (int v = 0; v < lists.num_vertices(); ++v)
            if (static_cast<int>(lists.lists[v].size()) != lists.q)
                throw invalid_input("solve vc handles plain coloring only (full lists)");
        auto result = solve_vc(g, x, lists.q);
        yes = result.colorable;
        witness = result.coloring;
        stats = result.stats;
    } else if (opt.solver == "nocert") {
        if (opt.modulator_path.empty())
            throw invalid_input("solve nocert requires --modulator");
        auto min = open_input(opt.modulator_path);
        VertexSet x = io::read_vertex_set(min, g.num_vertices());
        ClassTag tag = parse_class(opt.class_name);
        NoCertificateSet zeta;
        if (!opt.zeta_path.empty() && std::filesystem::exists(opt.zeta_path)) {
            auto zin = open_input(opt.zeta_path);
            zeta = io::read_certificate_set(zin);
            if (zeta.tag != tag || zeta.q != lists.q || zeta.g < opt.g)
                throw invalid_input("cached certificate set does not match the request");
        } else {
            zeta = build_certificate_set(tag, lists.q, opt.g);
            if (!opt.zeta_path.empty()) {
                auto zout = open_output(opt.zeta_path);
                io::write_certificate_set(zout, zeta);
            }
        }
        report.body["certificate_set_size"] = zeta.members.size();
        auto result = solve_nocert(g, lists, x, zeta);
        yes = result.colorable;
        witness = result.coloring;
        stats = result.stats;
    } else {
        throw invalid_input("unknown solver '" + opt.solver + "'");
    }

    report.body["decision"] = yes ? "Yes" : "No";
    if (yes && witness) {
        bool proper = is_proper_list_coloring(g, lists, *witness);
        report.body["witness_verified"] = proper;
        if (!proper)
            throw invalid_input("internal error: witness fails verification");
        if (!opt.witness_path.empty()) {
            auto wout = open_output(opt.witness_path);
            io::write_coloring(wout, *witness, lists.q);
            report.body["witness_file"] = opt.witness_path;
        }
    }
    if (opt.stats)
        report.body["stats"] = stats_json(stats);
    report.body["wall_ms"] = watch.ms();
    report.emit();
    return yes ? 0 : 1;
}

struct VerifyOptions {
    std::string what;
    std::string graph_path, lists_path, coloring_path, modulator_path, marked_path,
        decomposition_path;
    std::string class_name;
    bool json = false;
};

int run_verify(const VerifyOptions &opt) {
    StopWatch watch;
    Report report;
    report.as_json = opt.json;
    report.body["format_version"] = kFormatVersion;
    report.body["command"] = "verify " + opt.what;

    Graph g = load_graph(opt.graph_path);
    bool pass = false;
    std::string reason;

    if (opt.what == "coloring") {
        auto cin_ = open_input(opt.coloring_path);
        Coloring c = io::read_coloring(cin_);
        if (c.num_vertices() != g.num_vertices())
            throw invalid_input("coloring covers wrong vertex count");
        std::optional<ColoringViolation> violation;
        if (!opt.lists_path.empty()) {
            ListAssignment lists = load_lists(opt.lists_path);
            violation = check_list_coloring(g, lists, c);
        } else {
            violation = check_proper_coloring(g, c);
        }
        pass = !violation.has_value();
        if (violation) {
            std::ostringstream ss;
            ss << violation->reason;
            if (violation->u >= 0)
                ss << " (vertex " << violation->u + 1;
            if (violation->v >= 0)
                ss << ", vertex " << violation->v + 1;
            if (violation->u >= 0)
                ss << ")";
            reason = ss.str();
        }
    } else if (opt.what == "modulator") {
        auto min = open_input(opt.modulator_path);
        VertexSet x = io::read_vertex_set(min, g.num_vertices());
        ClassTag tag = parse_class(opt.class_name);
        pass = verify_modulator(g, x, tag);
        if (!pass)
            reason = "graph minus modulator is not in class " + std::string(class_tag_name(tag));
    } else if (opt.what == "class") {
        ClassTag tag = parse_class(opt.class_name);
        Graph target = g;
        if (!opt.modulator_path.empty()) {
            auto min = open_input(opt.modulator_path);
            VertexSet x = io::read_vertex_set(min, g.num_vertices());
            target = induced_subgraph(g, set_complement(g.num_vertices(), x)).graph;
        }
        pass = is_member(target, tag);
        if (!pass)
            reason = "graph is not in class " + std::string(class_tag_name(tag));
    } else if (opt.what == "certificate") {
        ListAssignment lists = load_lists(opt.lists_path);
        auto min = open_input(opt.marked_path);
        VertexSet marked = io::read_vertex_set(min, g.num_vertices());
        auto sub = induced_subgraph(g, marked);
        pass = !oracle::brute_force_list_color(sub.graph, lists.restrict_to(marked));
        report.body["marked_size"] = marked.size();
        if (!pass)
            reason = "marked subinstance is list-colorable";
    } else if (opt.what == "decomposition") {
        auto din = open_input(opt.decomposition_path);
        TreedepthDecomposition t = io::read_decomposition(din);
        if (t.num_vertices() < g.num_vertices())
            t.parent.resize(g.num_vertices(), -1);
        pass = validate_decomposition(g, t);
        if (pass)
            report.body["depth"] = t.depth();
        else
            reason = "closure or parent-map violation";
    } else {
        throw invalid_input("unknown verify target '" + opt.what + "'");
    }

    report.body["result"] = pass ? "pass" : "fail";
    if (!pass)
        report.body["reason"] = reason;
    report.body["wall_ms"] = watch.ms();
    report.emit();
    return pass ? 0 : 1;
}

struct GenOptions {
    std::string what;
    std::string cnf_path, out_dir, colors;
    int q = 0;
    int p = 1;
    bool do_join_paths = false;
    bool do_palette_clique = false;
    bool json = false;
};

void write_reduction_files(const std::string &dir, const ReductionOutput &out) {
    std::filesystem::create_directories(dir);
    auto gout = open_output(dir + "/graph.col");
    io::write_graph(gout, out.graph);
    auto lout = open_output(dir + "/lists.txt");
    io::write_lists(lout, out.lists);
    auto mout = open_output(dir + "/modulator.txt");
    mout << "c class " << class_tag_name(out.modulator.target) << '\n';
    io::write_vertex_set(mout, out.modulator.vertices);
    auto metaout = open_output(dir + "/meta.jsonl");
    io::write_meta(metaout, io::meta_of(out));
}

int run_gen(const GenOptions &opt) {
    StopWatch watch;
    Report report;
    report.as_json = opt.json;
    report.body["format_version"] = kFormatVersion;
    report.body["command"] = "gen " + opt.what;

    if (opt.what == "path-gadget") {
        std::vector<int> c;
        std::stringstream ss(opt.colors);
        for (std::string tok; std::getline(ss, tok, ',');)
            c.push_back(std::stoi(tok));
        ClausePathGadget gadget = build_clause_path(c, opt.q);
        std::filesystem::create_directories(opt.out_dir);
        auto gout = open_output(opt.out_dir + "/graph.col");
        io::write_graph(gout, gadget.path);
        auto lout = open_output(opt.out_dir + "/lists.txt");
        io::write_lists(lout, gadget.lists);
        report.body["vertices"] = gadget.path.num_vertices();
        VertexSet dist = gadget.distinguished;
        for (int &v : dist)
            ++v;
        report.body["distinguished"] = dist;
    } else if (opt.what == "reduce3sat" || opt.what == "reducessat") {
        auto cin_ = open_input(opt.cnf_path);
        CnfFormula phi = io::read_cnf(cin_);
        ReductionOutput out = opt.what == "reduce3sat" ? reduce_3sat(phi, opt.q)
                                                       : reduce_ssat(phi, opt.q, opt.p);
        if (opt.do_palette_clique)
            out = add_palette_clique(out);
        if (opt.do_join_paths)
            out = join_paths(out);
        write_reduction_files(opt.out_dir, out);
        report.body["vertices"] = out.graph.num_vertices();
        report.body["edges"] = out.graph.num_edges();
        report.body["modulator_size"] = out.modulator.vertices.size();
        report.body["class"] = class_tag_name(out.modulator.target);
        report.body["paths"] = out.paths.size();
    } else {
        throw invalid_input("unknown generator '" + opt.what + "'");
    }

    report.body["wall_ms"] = watch.ms();
    report.emit();
    return 0;
}

struct BenchOptions {
    std::string solver = "vc";
    std::string out_path;
    int q = 3;
    int kmin = 6, kmax = 14;
    int reps = 3;
    unsigned seed = 0;
    bool json = false;
};

int run_bench(const BenchOptions &opt) {
    if (opt.kmin < opt.q + 1 || opt.kmax < opt.kmin)
        throw invalid_input("bad k range");
    std::ostringstream csv;
    csv << "instance,solver,q,k,seed,nodes,subsets,top_level_subsets,wall_ms\n";

    NoCertificateSet zeta;
    if (opt.solver == "nocert")
        zeta = build_certificate_set(ClassTag::Independent, opt.q, 1);

    std::vector<std::pair<int, double>> points; // (k, log nodes)
    int instance = 0;
    for (int k = opt.kmin; k <= opt.kmax; ++k)
        for (int rep = 0; rep < opt.reps; ++rep, ++instance) {
            unsigned seed = opt.seed * 1000003u + static_cast<unsigned>(instance);
            auto inst = families::vc_bench_instance(k, opt.q, seed);
            BranchStats stats;
            StopWatch watch;
            if (opt.solver == "vc") {
                auto result = solve_vc(inst.graph, inst.modulator.vertices, opt.q);
                stats = result.stats;
            } else if (opt.solver == "nocert") {
                auto result =
                    solve_nocert(inst.graph, inst.lists, inst.modulator.vertices, zeta);
                stats = result.stats;
            } else if (opt.solver == "brute") {
                oracle::brute_force_list_color(inst.graph, inst.lists, -1,
                                               &stats.nodes_expanded);
            } else {
                throw invalid_input("unknown bench solver '" + opt.solver + "'");
            }
            double wall = watch.ms();
            csv << instance << ',' << opt.solver << ',' << opt.q << ',' << k << ',' << seed
                << ',' << stats.nodes_expanded << ',' << stats.subsets_enumerated << ','
                << stats.top_level_subsets << ',' << wall << '\n';
            points.emplace_back(k, std::log(std::max<std::int64_t>(1, stats.nodes_expanded)));
        }

    // least squares on log(nodes) vs k: nodes ~ C * b^k
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (auto [k, y] : points) {
        sx += k;
        sy += y;
        sxx += double(k) * k;
        sxy += k * y;
        syy += y * y;
    }
    double m = double(points.size());
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double intercept = (sy - slope * sx) / m;
    double ss_tot = syy - sy * sy / m;
    double ss_res = 0;
    for (auto [k, y] : points) {
        double r = y - (intercept + slope * k);
        ss_res += r * r;
    }
    double r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    double fitted_b = std::exp(slope);
    double bound;
    if (opt.solver == "vc")
        bound = opt.q - 1.11;
    else if (opt.solver == "nocert")
        bound = std::pow(std::pow(double(opt.q), opt.q) - 1.0, 1.0 / opt.q);
    else
        bound = opt.q;
    csv << "# fitted_b=" << fitted_b << " r2=" << r2 << " bound=" << bound << '\n';

    if (opt.out_path.empty())
        std::cout << csv.str();
    else
        open_output(opt.out_path) << csv.str();
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"parameterized graph (list-)coloring toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit reports as JSON");

    SolveOptions solve_opt;
    auto *solve = app.add_subcommand("solve", "decide an instance");
    solve->fallthrough();
    solve->add_option("solver", solve_opt.solver, "vc|nocert|brute|chromatic")->required();
    solve->add_option("--graph", solve_opt.graph_path)->required();
    solve->add_option("--lists", solve_opt.lists_path);
    solve->add_option("--q", solve_opt.q);
    solve->add_option("--modulator", solve_opt.modulator_path);
    solve->add_option("--class", solve_opt.class_name);
    solve->add_option("--g", solve_opt.g);
    solve->add_option("--zeta", solve_opt.zeta_path, "certificate-set cache file");
    solve->add_option("--witness", solve_opt.witness_path, "write the coloring here on Yes");
    solve->add_flag("--stats", solve_opt.stats);

    VerifyOptions verify_opt;
    auto *verify = app.add_subcommand("verify", "check an artifact");
    verify->fallthrough();
    verify->add_option("what", verify_opt.what,
                       "coloring|modulator|class|certificate|decomposition")
        ->required();
    verify->add_option("--graph", verify_opt.graph_path)->required();
    verify->add_option("--lists", verify_opt.lists_path);
    verify->add_option("--coloring", verify_opt.coloring_path);
    verify->add_option("--modulator", verify_opt.modulator_path);
    verify->add_option("--marked", verify_opt.marked_path);
    verify->add_option("--decomposition", verify_opt.decomposition_path);
    verify->add_option("--class", verify_opt.class_name);

    GenOptions gen_opt;
    auto *gen = app.add_subcommand("gen", "generate instances");
    gen->fallthrough();
    gen->add_option("what", gen_opt.what, "reduce3sat|reducessat|path-gadget")->required();
    gen->add_option("--cnf", gen_opt.cnf_path);
    gen->add_option("--q", gen_opt.q)->required();
    gen->add_option("--p", gen_opt.p);
    gen->add_option("--c", gen_opt.colors, "comma-separated forbidden colors");
    gen->add_flag("--join-paths", gen_opt.do_join_paths);
    gen->add_flag("--palette-clique", gen_opt.do_palette_clique);
    gen->add_option("-o,--out", gen_opt.out_dir)->required();

    BenchOptions bench_opt;
    auto *bench = app.add_subcommand("bench", "recursion-tree growth measurements");
    bench->fallthrough();
    bench->add_option("--solver", bench_opt.solver, "vc|nocert|brute");
    bench->add_option("--q", bench_opt.q);
    bench->add_option("--kmin", bench_opt.kmin);
    bench->add_option("--kmax", bench_opt.kmax);
    bench->add_option("--reps", bench_opt.reps);
    bench->add_option("--seed", bench_opt.seed);
    bench->add_option("-o,--out", bench_opt.out_path);

    try {
        app.parse(argc, argv);
        solve_opt.json = verify_opt.json = gen_opt.json = bench_opt.json = json;
        if (*solve)
            return run_solve(solve_opt);
        if (*verify)
            return run_verify(verify_opt);
        if (*gen)
            return run_gen(gen_opt);
        if (*bench)
            return run_bench(bench_opt);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
