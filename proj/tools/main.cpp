#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "beyondplanar/certificates.hpp"
#include "beyondplanar/checkers.hpp"
#include "beyondplanar/constructions.hpp"
#include "beyondplanar/errors.hpp"
#include "beyondplanar/generators.hpp"
#include "beyondplanar/io.hpp"
#include "beyondplanar/operations.hpp"
#include "beyondplanar/oracle.hpp"
#include "beyondplanar/reduction.hpp"

using namespace bp;

namespace {

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

int need_int(const std::vector<std::string>& args, std::size_t i, const std::string& what) {
    if (i >= args.size()) throw InputError("missing parameter " + what);
    try {
        std::size_t used = 0;
        int v = std::stoi(args[i], &used);
        if (used != args[i].size()) throw std::invalid_argument(args[i]);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("parameter " + what + " must be an integer, got '" + args[i] + "'");
    }
}

void no_extra(const std::vector<std::string>& args, std::size_t used) {
    if (args.size() > used) throw InputError("unexpected argument '" + args[used] + "'");
}

struct TilesOptions {
    int tiles = 2;
    std::vector<int> pairs;
    int paths = 60;
    int length = 15;

    gen::TilesSpec spec() const {
        if (pairs.size() % 2 != 0) throw InputError("--pair takes two vertices");
        gen::TilesSpec s;
        s.tiles = tiles;
        for (std::size_t i = 0; i + 1 < pairs.size(); i += 2) s.pairs.emplace_back(pairs[i], pairs[i + 1]);
        s.paths_per_pair = paths;
        s.path_length = length;
        return s;
    }
};

void add_tiles_options(CLI::App* cmd, TilesOptions& t) {
    cmd->add_option("--tiles", t.tiles, "number of tiles");
    cmd->add_option("--pair", t.pairs, "endpoint pair (global vertex ids), repeatable")->expected(2)->take_all();
    cmd->add_option("--paths", t.paths, "paths per pair");
    cmd->add_option("--length", t.length, "edges per path");
}

Graph generate(const std::string& family, const std::vector<std::string>& a, const TilesOptions& t) {
    if (family == "complete") return no_extra(a, 1), gen::complete(need_int(a, 0, "n"));
    if (family == "biclique") return no_extra(a, 2), gen::biclique(need_int(a, 0, "p"), need_int(a, 1, "q"));
    if (family == "hypercube") return no_extra(a, 1), gen::hypercube(need_int(a, 0, "d"));
    if (family == "king") return no_extra(a, 2), gen::king(need_int(a, 0, "w"), need_int(a, 1, "h"));
    if (family == "tile") return no_extra(a, 0), gen::king(5, 5);
    if (family == "path") return no_extra(a, 1), gen::path(need_int(a, 0, "n"));
    if (family == "cycle") return no_extra(a, 1), gen::cycle(need_int(a, 0, "n"));
    if (family == "star") return no_extra(a, 1), gen::star(need_int(a, 0, "leaves"));
    if (family == "ccc") return no_extra(a, 1), gen::ccc(need_int(a, 0, "d"));
    if (family == "nested") return no_extra(a, 1), gen::nested(need_int(a, 0, "k"));
    if (family == "xw") return no_extra(a, 1), gen::xw(need_int(a, 0, "k"));
    if (family == "hermit") return no_extra(a, 1), gen::hermit(need_int(a, 0, "k"));
    if (family == "random") {
        no_extra(a, 3);
        return gen::random(need_int(a, 0, "n"), need_int(a, 1, "percent"),
                           static_cast<std::uint64_t>(need_int(a, 2, "seed")));
    }
    if (family == "fatgrid") {
        no_extra(a, 1);
        if (a.empty()) throw InputError("fatgrid needs a variant: k7, k6 or plain");
        if (a[0] == "k7") return gen::fat_grid(gen::FatVariant::k7);
        if (a[0] == "k6") return gen::fat_grid(gen::FatVariant::k6);
        if (a[0] == "plain") return gen::fat_grid(gen::FatVariant::plain);
        throw InputError("unknown fatgrid variant '" + a[0] + "'");
    }
    if (family == "tiles") return no_extra(a, 0), gen::tiles(t.spec());
    throw InputError("unknown family '" + family + "'");
}

Drawing construct(const std::string& name, const std::vector<std::string>& a, const TilesOptions& t,
                  const std::string& cls, int u, int v) {
    if (name == "nested") return no_extra(a, 1), draw_nested(need_int(a, 0, "k"));
    if (name == "hermit") return no_extra(a, 1), draw_hermit(need_int(a, 0, "k"));
    if (name == "xw") return no_extra(a, 1), draw_xw(need_int(a, 0, "k"));
    if (name == "tile") return no_extra(a, 0), draw_tile();
    if (name == "tilesgraph") return no_extra(a, 0), draw_tiles(t.spec());
    no_extra(a, 1);
    std::string input = slurp(a.empty() ? "" : a[0]);
    if (name == "n2ctransform") return n2c_transform(io::read_drawing(input), cls);
    if (name == "routepath") {
        if (u < 0 || v < 0) throw InputError("routepath needs --u and --v");
        return route_path(io::read_drawing(input), u, v, parse_path_class(cls.empty() ? "fcf" : cls));
    }
    Graph g = io::read_graph(input);
    if (name == "convex") return convex_drawing(g);
    if (name == "fcf2subdiv") return fcf_2subdivision(g);
    if (name == "quasi1subdiv") return quasi_1subdivision(g);
    if (name == "rac3") return rac_3bend(g);
    if (name == "convexn2c") return convex_n2c_fcf(g);
    if (name == "boxvisn2c") return boxvis_n2c_quasi(g);
    throw InputError("unknown construction '" + name + "'");
}

Verdict run_check(const std::string& pred, const std::string& input, const std::string& fixture, int k,
                  std::uint64_t budget) {
    if (pred == "rac") {
        if (!fixture.empty()) throw InputError("rac needs a drawing, not a crossing fixture");
        return check_rac(io::read_drawing(slurp(input)), k < 0 ? 3 : k);
    }
    CrossingStructure cs = fixture.empty() ? extract_crossings(io::read_drawing(slurp(input)))
                                           : io::read_crossings(slurp(fixture));
    auto need_k = [&]() {
        if (k < 0) throw InputError(pred + " needs --k");
        return k;
    };
    if (pred == "simple") return validate_simple(cs);
    if (pred == "kplanar") return check_k_planar(cs, need_k());
    if (pred == "fcf") return check_fcf(cs);
    if (pred == "fan") return check_fan(cs);
    if (pred == "quasi") return check_quasi(cs, k < 0 ? 3 : need_k(), budget);
    if (pred == "gap") return check_k_gap(cs, need_k());
    throw InputError("unknown predicate '" + pred + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beyond-planar drawing predicates, constructions and certificates"};
    app.require_subcommand(1);
    std::string out;

    auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
    std::string family;
    std::vector<std::string> gen_args;
    TilesOptions tiles;
    gen_cmd->add_option("family", family, "complete|biclique|hypercube|king|tile|path|cycle|star|ccc|nested|xw|hermit|random|fatgrid|tiles")
        ->required();
    gen_cmd->add_option("params", gen_args, "family parameters");
    add_tiles_options(gen_cmd, tiles);
    gen_cmd->add_option("-o,--output", out, "output file (stdout when omitted)");

    auto* op_cmd = app.add_subcommand("op", "apply a graph operation");
    std::string op_name, op_input;
    int op_s = 1, op_u = -1, op_v = -1, op_len = 1;
    op_cmd->add_option("operation", op_name, "subdivide|n2c|addpath")->required();
    op_cmd->add_option("graph", op_input, "graph JSON (stdin when omitted)");
    op_cmd->add_option("--s", op_s, "subdivision vertices per edge");
    op_cmd->add_option("--u", op_u, "path start");
    op_cmd->add_option("--v", op_v, "path end");
    op_cmd->add_option("--length", op_len, "path length in edges");
    op_cmd->add_option("-o,--output", out, "output file");

    auto* draw_cmd = app.add_subcommand("draw", "build a drawing");
    std::string construction, draw_class;
    std::vector<std::string> draw_args;
    int draw_u = -1, draw_v = -1;
    TilesOptions draw_tiles_opt;
    draw_cmd
        ->add_option("construction", construction,
                     "convex|fcf2subdiv|quasi1subdiv|rac3|convexn2c|boxvisn2c|n2ctransform|routepath|nested|hermit|xw|tile|tilesgraph")
        ->required();
    draw_cmd->add_option("args", draw_args, "input file or family parameter");
    draw_cmd->add_option("--class", draw_class, "class tag for routepath (fcf|quasi3|kgap<k>) or n2ctransform");
    draw_cmd->add_option("--u", draw_u, "routepath start");
    draw_cmd->add_option("--v", draw_v, "routepath end");
    add_tiles_options(draw_cmd, draw_tiles_opt);
    draw_cmd->add_option("-o,--output", out, "output file");

    auto* check_cmd = app.add_subcommand("check", "evaluate a predicate");
    std::string pred, check_input, fixture;
    int check_k = -1;
    bool witness = false;
    std::uint64_t budget = 10'000'000;
    check_cmd->add_option("predicate", pred, "simple|kplanar|fcf|fan|quasi|gap|rac")->required();
    check_cmd->add_option("drawing", check_input, "drawing JSON (stdin when omitted)");
    check_cmd->add_option("--k", check_k, "class parameter; bend budget for rac (default 3)");
    check_cmd->add_option("--fixture", fixture, "crossing structure JSON instead of a drawing");
    check_cmd->add_flag("--witness", witness, "include the witness (edges, assignment, point) in the verdict");
    check_cmd->add_option("--budget", budget, "search node budget for quasi");
    check_cmd->add_option("-o,--output", out, "output file");

    auto* cert_cmd = app.add_subcommand("certify", "crossing-number certificate");
    int kn = -1, ccc_d = -1, cert_k = 1, sub = 0;
    std::string cert_graph;
    cert_cmd->add_option("--kn", kn, "complete graph K_n");
    cert_cmd->add_option("--sub", sub, "subdivision vertices per edge of K_n");
    cert_cmd->add_option("--ccc", ccc_d, "cube-connected cycles of dimension d");
    cert_cmd->add_option("--graph", cert_graph, "graph JSON");
    cert_cmd->add_option("--k", cert_k, "class parameter");
    cert_cmd->add_option("-o,--output", out, "output file");

    auto* red_cmd = app.add_subcommand("reduce", "3-partition gadget graph or witness drawing");
    std::string inst_file, witness_file;
    red_cmd->add_option("instance", inst_file, "instance JSON (stdin when omitted)");
    red_cmd->add_option("--witness", witness_file, "witness JSON; emits the drawing instead of the graph");
    red_cmd->add_option("-o,--output", out, "output file");

    auto* render_cmd = app.add_subcommand("render", "render a drawing as SVG");
    std::string render_input;
    SvgOptions svg;
    render_cmd->add_option("drawing", render_input, "drawing JSON (stdin when omitted)");
    render_cmd->add_option("--precision", svg.precision, "significant digits");
    render_cmd->add_flag("--markers", svg.markers, "mark crossings");
    render_cmd->add_option("--size", svg.size, "width of the longer side in px");
    render_cmd->add_option("-o,--output", out, "output file");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference checks");
    oracle_cmd->group("");
    std::string oracle_pred, oracle_input;
    int oracle_k = 1;
    oracle_cmd->add_option("predicate", oracle_pred, "gap|quasi")->required();
    oracle_cmd->add_option("structure", oracle_input, "crossing structure JSON");
    oracle_cmd->add_option("--k", oracle_k, "class parameter");
    oracle_cmd->add_option("-o,--output", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen_cmd) {
            emit(out, io::write(generate(family, gen_args, tiles)));
        } else if (*op_cmd) {
            Graph g = io::read_graph(slurp(op_input));
            if (op_name == "subdivide") emit(out, io::write(subdivide(g, op_s).result));
            else if (op_name == "n2c") emit(out, io::write(node_to_circle(g).result));
            else if (op_name == "addpath") emit(out, io::write(add_path(g, op_u, op_v, op_len).result));
            else throw InputError("unknown operation '" + op_name + "'");
        } else if (*draw_cmd) {
            emit(out, io::write(construct(construction, draw_args, draw_tiles_opt, draw_class, draw_u, draw_v)));
        } else if (*check_cmd) {
            Verdict v = run_check(pred, check_input, fixture, check_k, budget);
            if (!witness) {
                v.edges.clear();
                v.assignment.reset();
                v.at.reset();
                v.dir_a.reset();
                v.dir_b.reset();
            }
            emit(out, io::write(v));
            return v.holds ? 0 : 1;
        } else if (*cert_cmd) {
            int chosen = (kn >= 0) + (ccc_d >= 0) + !cert_graph.empty();
            if (chosen != 1) throw InputError("certify needs exactly one of --kn, --ccc, --graph");
            cert::Certificate c;
            if (kn >= 0) c = cert::exclude(cert::subdivided_complete(kn, sub), cert::kn_bound(kn), cert_k);
            else if (ccc_d >= 0) c = cert::exclude(cert::ccc_subject(ccc_d), cert::ccc_bound(ccc_d), cert_k);
            else {
                Graph g = io::read_graph(slurp(cert_graph));
                c = cert::exclude(cert::graph_subject(g), cert::graph_bound(g), cert_k);
            }
            emit(out, io::write(c));
            return c.status == "conclusive" ? 0 : 1;
        } else if (*red_cmd) {
            red::Instance inst = io::read_instance(slurp(inst_file));
            if (witness_file.empty()) emit(out, io::write(red::build_gadget_graph(inst).graph));
            else emit(out, io::write(red::build_witness_drawing(inst, io::read_witness(slurp(witness_file)))));
        } else if (*render_cmd) {
            emit(out, render_svg(io::read_drawing(slurp(render_input)), svg));
        } else if (*oracle_cmd) {
            std::string text = slurp(oracle_input);
            CrossingStructure cs = io::kind_of(text) == "drawing" ? extract_crossings(io::read_drawing(text))
                                                                  : io::read_crossings(text);
            Verdict v;
            if (oracle_pred == "gap") v = oracle::brute_gap(cs, oracle_k);
            else if (oracle_pred == "quasi") v = oracle::brute_quasi(cs, oracle_k);
            else throw InputError("unknown oracle predicate '" + oracle_pred + "'");
            emit(out, io::write(v));
            return v.holds ? 0 : 1;
        }
    } catch (const ResourceBoundError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
