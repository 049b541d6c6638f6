#include "ndpoly/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ndpoly/json_io.hpp"
#include "ndpoly/nondegeneracy.hpp"

namespace ndpoly {

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_payload(std::ostream& out, const json& j, bool pretty) {
    if (pretty) out << j.dump(2) << "\n";
    else out << j.dump() << "\n";
}

json face_to_json(const Face& face) {
    const char* kind = face.kind == Face::Kind::Vertex ? "vertex"
                       : face.kind == Face::Kind::Edge ? "edge"
                                                       : "polygon";
    json pts = json::array();
    for (auto p : face.points) pts.push_back({p.x, p.y});
    return json{{"kind", kind}, {"points", pts}};
}

int cmd_analyze(const std::string& file, bool pretty, std::ostream& out) {
    LatticePolygon p = polygon_from_json(load_json_file(file));
    PolygonReport rep = analyze(p);
    json j = report_to_json(rep);
    if (rep.is_maximal.value_or(false) && interior_hull(p).kind() == Hull::Kind::Polygon) {
        LegalLoop loop = loop_of_polytope(p);
        j["loop"] = loop_to_json(loop);
        j["twelve"] = twelve_to_json(verify_twelve(loop));
    }
    print_payload(out, j, pretty);
    return 0;
}

int cmd_loop(const std::string& file, bool pretty, std::ostream& out) {
    LatticePolygon p = polygon_from_json(load_json_file(file));
    LegalLoop loop = loop_of_polytope(p);
    json j = loop_to_json(loop);
    j["dual"] = loop_to_json(dual_loop(loop));
    j["twelve"] = twelve_to_json(verify_twelve(loop));
    print_payload(out, j, pretty);
    return 0;
}

int cmd_enumerate(Coord g, const std::string& method, const std::string& out_path, bool serial,
                  bool pretty, std::ostream& out, std::ostream& err) {
    EnumMethod m;
    if (method == "hull_recursion") m = EnumMethod::HullRecursion;
    else if (method == "bounded_box") m = EnumMethod::BoundedBox;
    else throw std::invalid_argument("unknown method: " + method);
    (void)pretty;

    err << "enumerating genus " << g << " via " << method << "...\n";
    EnumerateOptions opts;
    opts.parallel = !serial;
    GenusCorpus corpus = enumerate_by_genus(g, m, opts);
    err << "found " << corpus.classes.size() << " classes\n";
    std::string payload = corpus_to_jsonl(corpus);
    if (out_path.empty()) {
        out << payload;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot write file: " + out_path);
        f << payload;
    }
    return 0;
}

int cmd_check(const std::string& arg, bool pretty, std::ostream& out) {
    std::string text = arg.rfind("p=", 0) == 0 ? arg : read_file(arg);
    LaurentPolynomial f = LaurentPolynomial::parse(text);
    auto [ok, verdicts] = is_nondegenerate(f);
    json faces = json::array();
    for (const auto& v : verdicts) {
        json jf{{"face", face_to_json(v.face)}, {"nondegenerate", v.nondegenerate}};
        jf["witness"] = v.witness ? json(*v.witness) : json(nullptr);
        faces.push_back(jf);
    }
    json j{{"p", f.p()}, {"nondegenerate", ok}, {"faces", faces}};
    print_payload(out, j, pretty);
    return ok ? 0 : 1;
}

int cmd_moduli_table(Coord gmax, bool serial, bool pretty, std::ostream& out, std::ostream& err) {
    EnumerateOptions opts;
    opts.parallel = !serial;
    auto rows = moduli_table(gmax, opts);
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(moduli_row_to_json(r));
    err << moduli_table_text(rows);
    print_payload(out, arr, pretty);
    return 0;
}

int cmd_conic_ea(std::int64_t p, const std::vector<std::int64_t>& c, bool pretty,
                 std::ostream& out) {
    ConicEA ea = conic_ea(p, c[0], c[1], c[2], c[3], c[4], c[5]);
    json j{{"p", p},
           {"factors", ea.factors},
           {"value", ea.value},
           {"nondegenerate", ea.value != 0}};
    print_payload(out, j, pretty);
    return ea.value != 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice-polygon combinatorics and nondegeneracy checks over prime fields"};
    app.require_subcommand(1);

    bool pretty = false;
    bool json_flag = true;
    std::int64_t seed = 20240401;  // reserved for randomized subcommands
    app.add_flag("--pretty", pretty, "pretty-print JSON output");
    app.add_flag("--json,!--no-json", json_flag, "emit JSON on stdout (default)");
    app.add_option("--seed", seed, "seed for randomized operations");

    auto* analyze_cmd = app.add_subcommand("analyze", "full combinatorial report for a polygon");
    std::string analyze_file;
    analyze_cmd->add_option("file", analyze_file, "polygon JSON file")->required();

    auto* loop_cmd = app.add_subcommand("loop", "legal loop of a maximal polygon");
    std::string loop_file;
    loop_cmd->add_option("file", loop_file, "polygon JSON file")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate genus-g polygon classes");
    Coord genus_arg = 0;
    std::string method = "hull_recursion";
    std::string out_path;
    bool serial = false;
    enum_cmd->add_option("--genus", genus_arg, "number of interior lattice points")->required();
    enum_cmd->add_option("--method", method, "hull_recursion | bounded_box");
    enum_cmd->add_option("--out", out_path, "output file (JSON lines); stdout when omitted");
    enum_cmd->add_flag("--serial", serial, "use the serial reference implementation");

    auto* check_cmd = app.add_subcommand("check", "nondegeneracy of a Laurent polynomial");
    std::string check_arg;
    check_cmd->add_option("poly", check_arg, "polynomial file, or literal starting with 'p='")
        ->required();

    auto* moduli_cmd = app.add_subcommand("moduli-table", "dimension table by genus");
    Coord gmax = 0;
    moduli_cmd->add_option("--gmax", gmax, "largest genus")->required();
    moduli_cmd->add_flag("--serial", serial, "use the serial reference implementation");

    auto* conic_cmd = app.add_subcommand("conic-ea", "principal determinant of a conic");
    std::int64_t conic_p = 0;
    std::vector<std::int64_t> coeffs;
    conic_cmd->add_option("--p", conic_p, "odd prime modulus")->required();
    conic_cmd->add_option("coeffs", coeffs, "c00 c10 c01 c20 c11 c02")->expected(6);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(analyze_file, pretty, out);
        if (*loop_cmd) return cmd_loop(loop_file, pretty, out);
        if (*enum_cmd) return cmd_enumerate(genus_arg, method, out_path, serial, pretty, out, err);
        if (*check_cmd) return cmd_check(check_arg, pretty, out);
        if (*moduli_cmd) return cmd_moduli_table(gmax, serial, pretty, out, err);
        if (*conic_cmd) return cmd_conic_ea(conic_p, coeffs, pretty, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace ndpoly
