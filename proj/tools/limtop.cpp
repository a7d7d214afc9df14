// Command-line front end: routes files in the repository text formats to the
// library and prints either JSON (deterministic, no timing fields) or plain
// text. Exit codes: 0 verdict computed, 2 parse error, 3 precondition
// violated, 4 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "limtop/cover.hpp"
#include "limtop/glue.hpp"
#include "limtop/homology.hpp"
#include "limtop/homotopy.hpp"
#include "limtop/io.hpp"
#include "limtop/schema.hpp"
#include "limtop/schema2d.hpp"

using json = nlohmann::ordered_json;
using namespace limtop;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long long ll(const Int& v) { return v.convert_to<long long>(); }

json group_json(const FgAbGroup& g) {
    json j;
    j["rank"] = g.rank;
    json t = json::array();
    for (const Int& d : g.torsion) t.push_back(ll(d));
    j["torsion"] = t;
    return j;
}

json chain_json(const Chain& c) {
    json j = json::array();
    for (const auto& [s, coef] : c) j.push_back(json::array({ll(coef), s.to_string()}));
    return j;
}

VertexId default_base(const FiniteComplex& k, std::optional<VertexId> flag) {
    if (flag) return *flag;
    if (k.vertices().empty())
        throw PreconditionViolatedError("the complex has no vertices");
    return *k.vertices().begin();
}

SimplicialMap parse_vertex_map(const std::string& text) {
    SimplicialMap f;
    for (const auto& line : detail::split_source(text)) {
        auto fields = detail::line_fields(line.text);
        if (fields.size() != 2)
            throw ParseError("expected 'source target' vertex pairs", line.number);
        VertexId v = detail::parse_small_int(fields[0], line.number);
        VertexId w = detail::parse_small_int(fields[1], line.number);
        if (f.vertex_map.count(v))
            throw ParseError("vertex " + std::to_string(v) + " mapped twice", line.number);
        f.vertex_map[v] = w;
    }
    return f;
}

struct Options {
    std::string format = "json";
    int coset_budget = kDefaultCosetBudget;
    int stage_budget = 16;
    int grammar_bound = kDefaultGrammarBound;
};

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// --- homology -------------------------------------------------------------

struct HomologyArgs {
    std::string file;
    int dim = 0;
    std::string relative;
    bool colimit = false;
};

int cmd_homology(const Options& opt, const HomologyArgs& a) {
    auto doc = parse_complex_document(slurp(a.file));
    if (a.colimit) {
        ColimitHomology ch = colimit_homology(to_exhaustion(doc), a.dim, opt.stage_budget);
        json j;
        j["command"] = "homology";
        j["dim"] = a.dim;
        j["colimit"] = group_json(ch.colimit);
        json stages = json::array();
        for (const auto& g : ch.stage_groups) stages.push_back(group_json(g));
        j["stages"] = stages;
        j["stable_from"] = ch.stable_from;
        j["maps_iso"] = ch.map_is_iso;
        j["maps_injective"] = ch.map_is_injective;
        std::ostringstream t;
        t << "colimit H_" << a.dim << " = " << ch.colimit.to_string() << "\n";
        for (std::size_t i = 0; i < ch.stage_groups.size(); ++i)
            t << "  stage " << i << ": " << ch.stage_groups[i].to_string() << "\n";
        t << "stable from stage " << ch.stable_from << "\n";
        emit(opt, j, t.str());
        return 0;
    }
    HomologyResult h = a.relative.empty()
                           ? homology(doc.complex, a.dim)
                           : relative_homology(doc.complex,
                                               parse_complex_document(slurp(a.relative)).complex,
                                               a.dim);
    json j;
    j["command"] = "homology";
    j["dim"] = a.dim;
    if (!a.relative.empty()) j["relative"] = true;
    j["rank"] = h.group().rank;
    json tor = json::array();
    for (const Int& d : h.group().torsion) tor.push_back(ll(d));
    j["torsion"] = tor;
    json gens = json::array();
    for (const Chain& c : h.generators()) gens.push_back(chain_json(c));
    j["generators"] = gens;
    std::ostringstream t;
    t << "H_" << a.dim << " = " << h.group().to_string() << "\n";
    emit(opt, j, t.str());
    return 0;
}

// --- pi1 --------------------------------------------------------------------

int cmd_pi1(const Options& opt, const std::string& file, std::optional<VertexId> base) {
    auto doc = parse_complex_document(slurp(file));
    EdgePathGroup g = edge_path_group(doc.complex, default_base(doc.complex, base));
    FgAbGroup ab = abelianization(g.pres);
    json j;
    j["command"] = "pi1";
    j["base"] = g.base;
    j["generators"] = g.pres.names;
    json rels = json::array();
    for (const Word& r : g.pres.relators) rels.push_back(g.pres.word_to_string(r));
    j["relators"] = rels;
    j["abelianization"] = group_json(ab);
    std::ostringstream t;
    t << "pi_1 = " << write_presentation(g.pres);
    t << "abelianization = " << ab.to_string() << "\n";
    emit(opt, j, t.str());
    return 0;
}

// --- hurewicz ---------------------------------------------------------------

int cmd_hurewicz(const Options& opt, const std::string& file, std::optional<VertexId> base,
                 int dim) {
    auto doc = parse_complex_document(slurp(file));
    VertexId v0 = default_base(doc.complex, base);
    if (dim == 1) {
        HurewiczReport r = hurewicz_h1(doc.complex, v0);
        json j;
        j["command"] = "hurewicz";
        j["dim"] = 1;
        j["pi1_abelianized"] = group_json(r.abelianized_pi1);
        j["h1"] = group_json(r.h1);
        j["agree"] = r.agree;
        std::ostringstream t;
        t << "abelianized pi_1 = " << r.abelianized_pi1.to_string() << "\n"
          << "H_1 = " << r.h1.to_string() << "\n"
          << (r.agree ? "agree\n" : "DISAGREE\n");
        emit(opt, j, t.str());
        return 0;
    }
    if (dim != 2)
        throw PreconditionViolatedError("hurewicz supports --dim 1 or --dim 2");
    Pi2Report r = pi2_via_hurewicz(doc.complex, v0, opt.coset_budget);
    json j;
    j["command"] = "hurewicz";
    j["dim"] = 2;
    std::ostringstream t;
    switch (r.status) {
        case Pi2Report::Status::Certified:
            j["status"] = "certified";
            j["pi1_order"] = r.pi1_index;
            j["pi2"] = group_json(r.pi2);
            t << "pi_1 certified trivial, pi_2 = " << r.pi2.to_string() << "\n";
            break;
        case Pi2Report::Status::NotSimplyConnected:
            j["status"] = "not-simply-connected";
            j["pi1_order"] = r.pi1_index;
            t << "pi_1 is not trivial (order " << r.pi1_index
              << "): the Hurewicz route does not apply\n";
            break;
        case Pi2Report::Status::BudgetExceeded:
            j["status"] = "budget-exceeded";
            j["cosets_defined"] = r.defined;
            t << "coset enumeration exceeded the budget\n";
            break;
    }
    emit(opt, j, t.str());
    return r.status == Pi2Report::Status::BudgetExceeded ? 4 : 0;
}

// --- cover --------------------------------------------------------------------

struct CoverArgs {
    std::string file;
    std::vector<std::string> subgroup;
    std::optional<VertexId> base;
    bool emit_total = false;
    bool lazy = false;
    int radius = 3;
    std::string rewriting = "free";
};

std::string sheet_annotated_total(const CoverResult& c) {
    std::map<int, std::vector<VertexId>> by_sheet;
    for (const auto& [v, sheet] : c.sheet_of) by_sheet[sheet].push_back(v);
    std::string out;
    for (const auto& [sheet, verts] : by_sheet) {
        out += "# sheet " + std::to_string(sheet) + ":";
        for (VertexId v : verts) out += " " + std::to_string(v);
        out += "\n";
    }
    return out + write_complex(c.total);
}

int cmd_cover(const Options& opt, const CoverArgs& a) {
    auto doc = parse_complex_document(slurp(a.file));
    const FiniteComplex& k = doc.complex;
    VertexId v0 = default_base(k, a.base);

    EdgePathGroup g = edge_path_group(k, v0);
    std::vector<Word> words;
    for (const std::string& w : a.subgroup) words.push_back(parse_word(w, g.pres.names));

    if (a.lazy) {
        Rewriting rw;
        if (a.rewriting == "free")
            rw = Rewriting::FreeReduction;
        else if (a.rewriting == "abelian")
            rw = Rewriting::Abelianization;
        else if (a.rewriting == "table")
            rw = Rewriting::CosetTable;
        else
            throw ParseError("unknown rewriting '" + a.rewriting +
                             "' (expected free, abelian, or table)");
        LazyCoverResult lz = lazy_cover(k, v0, rw, a.radius, words, opt.coset_budget);
        CoveringReport vr = verify_covering(lz.ball, lz.projection, lz.base,
                                            std::set<VertexId>(lz.frontier.begin(),
                                                               lz.frontier.end()));
        FgAbGroup h1 = homology(lz.interior(), 1).group();
        json j;
        j["command"] = "cover";
        j["lazy"] = true;
        j["sheets"] = "infinite/prefix";
        j["radius"] = a.radius;
        j["ball_vertices"] = lz.ball.vertices().size();
        j["frontier"] = lz.frontier.size();
        j["euler_base"] = lz.base.euler_characteristic();
        j["interior_h1"] = group_json(h1);
        j["verified"] = vr.ok;
        std::ostringstream t;
        t << "lazy cover to radius " << a.radius << ": " << lz.ball.vertices().size()
          << " vertices, " << lz.frontier.size() << " on the frontier\n"
          << "interior H_1 = " << h1.to_string() << "\n"
          << (vr.ok ? "covering verified away from the frontier\n" : "NOT a covering\n");
        emit(opt, j, t.str());
        return 0;
    }

    CoverResult c = finite_cover(k, v0, words, opt.coset_budget);
    bool verified = verify_covering(c.total, c.projection, c.base).ok &&
                    verify_subgroup_image(c).ok;
    json j;
    j["command"] = "cover";
    j["sheets"] = c.sheets;
    j["euler_base"] = c.base.euler_characteristic();
    j["euler_total"] = c.total.euler_characteristic();
    j["verified"] = verified;
    if (a.emit_total) j["total"] = sheet_annotated_total(c);
    std::ostringstream t;
    t << "sheets: " << c.sheets << "\n"
      << "euler: base " << c.base.euler_characteristic() << ", total "
      << c.total.euler_characteristic() << "\n"
      << (verified ? "covering and subgroup image verified\n" : "verification FAILED\n");
    if (a.emit_total) t << sheet_annotated_total(c);
    emit(opt, j, t.str());
    return 0;
}

// --- connect -------------------------------------------------------------------

bool looks_planar(const std::string& text) {
    for (const auto& line : detail::split_source(text)) {
        auto f = detail::line_fields(line.text);
        if (f[0] == "STEP" || f[0] == "SEG") return true;
        if (f[0] == "STAGE" || f[0] == "FROM") return false;
    }
    return false;
}

int cmd_connect(const Options& opt, const std::string& file) {
    std::string text = slurp(file);
    json j;
    j["command"] = "connect";
    std::ostringstream t;

    if (looks_planar(text)) {
        Schema2D s = parse_schema2d(text);
        Connectivity2D con = ld_connected_2d(s);
        Op2DReport op = op_connected_2d(s);
        j["kind"] = "planar";
        j["connected"] = con.connected;
        if (con.finite_count)
            j["components"] = ll(con.component_count);
        else
            j["components"] = "infinite";
        j["op"] = op.op_connected;
        t << (con.connected ? "connected" : "not connected");
        if (con.finite_count)
            t << " (" << ll(con.component_count) << " component(s))\n";
        else
            t << " (infinitely many components)\n";
        if (con.finite_count) {
            int e_bound = std::min(opt.grammar_bound, 3);
            WitnessSearch2DResult ps = witness_search_2d(s, WitnessMode::PS, opt.grammar_bound);
            WitnessSearch2DResult e = witness_search_2d(s, WitnessMode::E, e_bound);
            j["ps"] = ps.found ? json{{"witness", region_to_string(ps.witness)}}
                               : json{{"none", opt.grammar_bound}};
            j["e"] = e.found ? json{{"witness", region_to_string(e.witness)}}
                             : json{{"none", e_bound}};
            t << "PS witness: "
              << (ps.found ? region_to_string(ps.witness)
                           : "none at bound " + std::to_string(opt.grammar_bound))
              << "\n";
            t << "E witness: "
              << (e.found ? region_to_string(e.witness)
                          : "none at bound " + std::to_string(e_bound))
              << "\n";
        } else {
            j["ps"] = json{{"skipped", "infinitely many components"}};
            j["e"] = json{{"skipped", "infinitely many components"}};
            t << "witness searches skipped: infinitely many components\n";
        }
        emit(opt, j, t.str());
        return 0;
    }

    Schema1D s = parse_schema1d(text);
    ConnectivityReport con = ld_connected(s);
    OpConnectedReport op = op_connected(s);
    WitnessSearchResult ps = witness_search(s, WitnessMode::PS, opt.grammar_bound);
    WitnessSearchResult e = witness_search(s, WitnessMode::E, opt.grammar_bound);
    DefinabilityReport def = definability_of_union(s);

    j["kind"] = "stages";
    j["connected"] = con.connected;
    j["components"] = con.component_count;
    j["op"] = op.op_connected;
    j["ps"] = ps.found ? json{{"witness", semilinear_to_string(*ps.witness, true)}}
                       : json{{"none", opt.grammar_bound}};
    j["e"] = e.found ? json{{"witness", semilinear_to_string(*e.witness, true)}}
                     : json{{"none", opt.grammar_bound}};
    json defj;
    defj["definable"] = def.definable;
    json obs = json::array();
    for (const auto& o : def.obstructions)
        obs.push_back(json{{"component", o.component},
                           {"endpoint", o.upper ? "upper" : "lower"},
                           {"kind", obstruction_name(o.kind)}});
    defj["obstructions"] = obs;
    j["definability"] = defj;

    t << (con.connected ? "connected" : "not connected") << " (" << con.component_count
      << " component(s))\n";
    for (const std::string& c : con.components) t << "  component " << c << "\n";
    t << "re-chunkable with connected stages: " << (op.op_connected ? "yes" : "no") << "\n";
    t << "PS witness: "
      << (ps.found ? semilinear_to_string(*ps.witness)
                   : "none at bound " + std::to_string(opt.grammar_bound))
      << "\n";
    t << "E witness: "
      << (e.found ? semilinear_to_string(*e.witness)
                  : "none at bound " + std::to_string(opt.grammar_bound))
      << "\n";
    t << "union definable: " << (def.definable ? "yes" : "no") << "\n";
    for (const auto& o : def.obstructions)
        t << "  component " << o.component << " " << (o.upper ? "upper" : "lower")
          << " endpoint: " << obstruction_name(o.kind) << "\n";
    emit(opt, j, t.str());
    return 0;
}

// --- glue -----------------------------------------------------------------------

int cmd_glue(const Options& opt, const std::vector<std::string>& files,
             const std::vector<std::string>& ids, bool emit_complex) {
    GlueSpec spec;
    for (const std::string& f : files)
        spec.parts.push_back(parse_complex_document(slurp(f)).complex);
    for (const std::string& id : ids) {
        auto fields = detail::line_fields(id);
        if (fields.size() != 4)
            throw ParseError("--id expects 'part vertex part vertex', got '" + id + "'");
        spec.identifications.push_back({detail::parse_small_int(fields[0], -1),
                                        detail::parse_small_int(fields[1], -1),
                                        detail::parse_small_int(fields[2], -1),
                                        detail::parse_small_int(fields[3], -1)});
    }
    GlueResult g = glue_complexes(spec);
    FgAbGroup h0 = homology(g.glued, 0).group();
    FgAbGroup h1 = homology(g.glued, 1).group();
    json j;
    j["command"] = "glue";
    j["parts"] = spec.parts.size();
    j["identifications"] = spec.identifications.size();
    j["vertices"] = g.glued.vertices().size();
    j["euler"] = g.glued.euler_characteristic();
    j["h0"] = group_json(h0);
    j["h1"] = group_json(h1);
    if (emit_complex) j["complex"] = write_complex(g.glued);
    std::ostringstream t;
    t << "glued " << spec.parts.size() << " part(s) with " << spec.identifications.size()
      << " identification(s)\n"
      << "euler = " << g.glued.euler_characteristic() << ", H_0 = " << h0.to_string()
      << ", H_1 = " << h1.to_string() << "\n";
    if (emit_complex) t << write_complex(g.glued);
    emit(opt, j, t.str());
    return 0;
}

// --- whitehead --------------------------------------------------------------------

int cmd_whitehead(const Options& opt, const std::string& kfile, const std::string& lfile,
                  const std::string& mapfile) {
    FiniteComplex k = parse_complex_document(slurp(kfile)).complex;
    FiniteComplex l = parse_complex_document(slurp(lfile)).complex;
    SimplicialMap f = parse_vertex_map(slurp(mapfile));
    WhiteheadReport r = whitehead_check(f, k, l, opt.coset_budget);
    const char* verdict = r.verdict == WhiteheadReport::Verdict::Equivalence
                              ? "equivalence-certified"
                              : r.verdict == WhiteheadReport::Verdict::NotEquivalence
                                    ? "not-equivalence"
                                    : "undetermined";
    json j;
    j["command"] = "whitehead";
    j["verdict"] = verdict;
    j["reason"] = r.reason;
    std::ostringstream t;
    t << verdict << "\n";
    if (!r.reason.empty()) t << r.reason << "\n";
    emit(opt, j, t.str());
    return 0;
}

int fail(const Options& opt, const char* kind, const std::string& msg, int code) {
    if (opt.format == "json") {
        json j;
        j["error"] = kind;
        j["message"] = msg;
        std::cerr << j.dump(2) << "\n";
    } else {
        std::cerr << kind << ": " << msg << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on exhausted simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--coset-budget", opt.coset_budget, "max cosets defined in enumerations")
        ->envname("LIMTOP_COSET_BUDGET")
        ->capture_default_str();
    app.add_option("--stages", opt.stage_budget, "max exhaustion stages inspected")
        ->envname("LIMTOP_STAGE_BUDGET")
        ->capture_default_str();
    app.add_option("--bound", opt.grammar_bound, "witness grammar complexity bound")
        ->envname("LIMTOP_GRAMMAR_BOUND")
        ->capture_default_str();

    HomologyArgs ha;
    auto* homology_cmd = app.add_subcommand("homology", "integer homology of a complex file");
    homology_cmd->add_option("file", ha.file, "complex file")->required();
    homology_cmd->add_option("--dim", ha.dim, "homology degree")->capture_default_str();
    homology_cmd->add_option("--relative", ha.relative, "subcomplex file for relative homology");
    homology_cmd->add_flag("--colimit", ha.colimit, "treat the file as a staged exhaustion");

    std::string pi1_file;
    std::optional<VertexId> pi1_base;
    auto* pi1_cmd = app.add_subcommand("pi1", "edge-path group presentation");
    pi1_cmd->add_option("file", pi1_file, "complex file")->required();
    pi1_cmd->add_option("--base", pi1_base, "base vertex");

    std::string hw_file;
    std::optional<VertexId> hw_base;
    int hw_dim = 1;
    auto* hw_cmd = app.add_subcommand("hurewicz", "compare pi_1^ab with H_1, or compute pi_2");
    hw_cmd->add_option("file", hw_file, "complex file")->required();
    hw_cmd->add_option("--base", hw_base, "base vertex");
    hw_cmd->add_option("--dim", hw_dim, "1: abelianization vs H_1; 2: pi_2 via certified pi_1=0")
        ->capture_default_str();

    CoverArgs ca;
    auto* cover_cmd = app.add_subcommand("cover", "covering complex for a subgroup");
    cover_cmd->add_option("file", ca.file, "complex file")->required();
    cover_cmd->add_option("--subgroup", ca.subgroup, "subgroup generator word (repeatable)");
    cover_cmd->add_option("--base", ca.base, "base vertex");
    cover_cmd->add_flag("--emit-total", ca.emit_total, "also emit the total complex");
    cover_cmd->add_flag("--lazy", ca.lazy, "build a radius ball of a possibly infinite cover");
    cover_cmd->add_option("--radius", ca.radius, "ball radius for --lazy")->capture_default_str();
    cover_cmd->add_option("--rewriting", ca.rewriting, "word strategy for --lazy")
        ->check(CLI::IsMember({"free", "abelian", "table"}))
        ->capture_default_str();

    std::string connect_file;
    auto* connect_cmd = app.add_subcommand("connect", "connectedness of a stage schema");
    connect_cmd->add_option("file", connect_file, "schema file")->required();

    std::vector<std::string> glue_files, glue_ids;
    bool glue_emit = false;
    auto* glue_cmd = app.add_subcommand("glue", "glue complexes along vertex identifications");
    glue_cmd->add_option("files", glue_files, "part complex files")->required();
    glue_cmd->add_option("--id", glue_ids, "identification 'part vertex part vertex' (repeatable)");
    glue_cmd->add_flag("--emit", glue_emit, "also emit the glued complex");

    std::string wh_k, wh_l, wh_map;
    auto* wh_cmd = app.add_subcommand("whitehead", "certify a map as a homotopy equivalence");
    wh_cmd->add_option("source", wh_k, "source complex file")->required();
    wh_cmd->add_option("target", wh_l, "target complex file")->required();
    wh_cmd->add_option("--map", wh_map, "vertex map file ('source target' lines)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (homology_cmd->parsed()) return cmd_homology(opt, ha);
        if (pi1_cmd->parsed()) return cmd_pi1(opt, pi1_file, pi1_base);
        if (hw_cmd->parsed()) return cmd_hurewicz(opt, hw_file, hw_base, hw_dim);
        if (cover_cmd->parsed()) return cmd_cover(opt, ca);
        if (connect_cmd->parsed()) return cmd_connect(opt, connect_file);
        if (glue_cmd->parsed()) return cmd_glue(opt, glue_files, glue_ids, glue_emit);
        if (wh_cmd->parsed()) return cmd_whitehead(opt, wh_k, wh_l, wh_map);
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::Parse: return fail(opt, "parse", e.what(), 2);
            case ErrorKind::Precondition: return fail(opt, "precondition", e.what(), 3);
            case ErrorKind::Budget: return fail(opt, "budget", e.what(), 4);
        }
    }
    return 0;
}
