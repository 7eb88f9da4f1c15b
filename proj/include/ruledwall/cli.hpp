#pragma once

// Command-line front end. `run` is a pure function of its arguments (plus
// any files they name) so it can be driven from tests.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include "json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ruledwall::cli {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

namespace detail {

using io::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string surface_json;
    std::string surface_file;
    std::string format = "json";
    std::string chern_json;
    std::string range;
    std::string wall;
    std::string side = "below";
    std::string from = "below";
    std::string x;
    std::string hn_json;
    std::string table_file;
    std::string var;
    long cap = -1;
    bool witnesses = false;
};

struct Output {
    json value;
    std::string table;
};

inline json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON for ") + what + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline SurfaceData load_surface(const Options& o) {
    if (!o.surface_json.empty() && !o.surface_file.empty())
        throw UsageError("give either --surface or --surface-file, not both");
    if (!o.surface_file.empty()) return io::surface_from(parse_json(read_file(o.surface_file), "--surface-file"));
    if (o.surface_json.empty()) throw UsageError("--surface or --surface-file is required");
    return io::surface_from(parse_json(o.surface_json, "--surface"));
}

inline ChernData load_chern(const SurfaceData& s, const Options& o) {
    if (o.chern_json.empty()) throw UsageError("--chern is required");
    return io::datum_from(s, parse_json(o.chern_json, "--chern"));
}

inline Rational required_rational(const std::string& text, const char* flag) {
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

inline Side parse_side(const std::string& s) { return s == "above" ? Side::above : Side::below; }

inline std::optional<long> cap_of(const Options& o) {
    if (o.cap < 0) return std::nullopt;
    return o.cap;
}

// "--range lo:hi"; an empty lo means e, hi may be empty or "inf".
inline std::pair<Rational, std::optional<Rational>> slice_range(const SurfaceData& s, const ChernData& c,
                                                                const Options& o) {
    s.require_ruled("slice range");
    Rational lo = s.e();
    std::optional<Rational> hi;
    if (o.range.empty()) {
        if (s.nonrational() && fibre_degree_mod(c) != 0) hi = existence_bound_x0(s, c);
        return {lo, hi};
    }
    auto colon = o.range.find(':');
    if (colon == std::string::npos) throw UsageError("--range must look like lo:hi");
    std::string a = o.range.substr(0, colon);
    std::string b = o.range.substr(colon + 1);
    if (!a.empty()) lo = required_rational(a, "--range");
    if (!b.empty() && b != "inf") hi = required_rational(b, "--range");
    return {lo, hi};
}

inline Wall find_wall(const SurfaceData& s, const ChernData& c, const Rational& x) {
    s.require_ruled("walls");
    if (x > s.e()) {
        auto walls = enumerate_walls(s, c, (Rational(s.e()) + x) / 2, x);
        if (!walls.empty() && walls.back().x == x) return walls.back();
    }
    throw Error("not a wall position for this datum: " + to_string(x));
}

inline std::string aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

inline std::string part_text(const ChernData& c) {
    return "(" + std::to_string(c.r()) + ";" + c.c1().a.get_str() + "," + c.c1().b.get_str() + ";" + c.c2().get_str() +
           ")";
}

inline std::string type_text(const HNType& t) {
    std::string out;
    for (const ChernData& p : t.parts) out += (out.empty() ? "" : " ") + part_text(p);
    return out;
}

inline std::string bound_text(const std::optional<Rational>& b, const char* inf) { return b ? to_string(*b) : inf; }

inline std::string yes(bool b) { return b ? "true" : "false"; }

inline std::string key_values(const json& obj) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : obj.items()) rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    return aligned(rows);
}

// Subcommand handlers.

inline Output cmd_surface(const Options& o) {
    json v = io::to_json(load_surface(o));
    return {v, key_values(v)};
}

inline Output cmd_walls(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    auto [lo, hi] = slice_range(s, c, o);
    auto walls = enumerate_walls(s, c, lo, hi);
    json v = json::array();
    std::vector<std::vector<std::string>> rows{{"x", "r1", "sub_c1", "xi", "budget"}};
    for (const Wall& w : walls) {
        v.push_back(o.witnesses ? io::to_json(w) : io::to_json(w.x));
        for (const Witness& wit : w.witnesses)
            rows.push_back({to_string(w.x), std::to_string(wit.r1), to_string(wit.sub_c1), to_string(wit.xi),
                            to_string(wit.budget)});
    }
    return {v, aligned(rows)};
}

inline Output cmd_chambers(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    auto [lo, hi] = slice_range(s, c, o);
    json v = json::array();
    std::vector<std::vector<std::string>> rows{{"lo", "hi"}};
    for (const Chamber& ch : chambers(s, c, lo, hi)) {
        v.push_back(io::to_json(ch));
        rows.push_back({bound_text(ch.lo, "-inf"), bound_text(ch.hi, "inf")});
    }
    return {v, aligned(rows)};
}

inline Output cmd_hn(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    Wall w = find_wall(s, c, required_rational(o.wall, "--wall"));
    json v = json::array();
    std::string table;
    for (const HNType& t : hn_types_at(s, c, w, parse_side(o.side))) {
        v.push_back(io::to_json(t));
        table += type_text(t) + "\n";
    }
    return {v, table};
}

inline Output cmd_codim(const Options& o) {
    SurfaceData s = load_surface(o);
    if (o.hn_json.empty()) throw UsageError("--hn is required");
    Rational d = codim(s, io::hntype_from(s, parse_json(o.hn_json, "--hn")));
    return {io::to_json(d), to_string(d) + "\n"};
}

inline Output cmd_check(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    Wall w = find_wall(s, c, required_rational(o.wall, "--wall"));
    PositivityReport rep = check_positivity(s, c, w);
    std::vector<std::vector<std::string>> rows{{"type", "d", "d>=2", "d>=3", "parts_exist", "pairs(a,b,canonical)"}};
    for (const TypeReport& t : rep.types) {
        std::string pairs;
        for (const PairTerm& p : t.pairs)
            pairs += (pairs.empty() ? "" : " ") + ("[" + p.a.get_str() + "," + p.b.get_str() + "," +
                                                   to_string(p.canonical) + "]");
        rows.push_back({type_text(t.type), to_string(t.d), yes(t.at_least_2), yes(t.at_least_3), yes(t.parts_exist),
                        pairs});
    }
    std::string table = "wall " + to_string(rep.wall) + "\n" + aligned(rows);
    for (const auto& warn : rep.warnings) table += "warning: " + warn + "\n";
    return {io::to_json(rep), table};
}

inline ChamberTable load_table(const SurfaceData& s, const Options& o, Var default_var) {
    if (o.table_file.empty()) throw UsageError("--table is required");
    Var var = default_var;
    if (!o.var.empty()) {
        if (o.var != "z" && o.var != "q") throw UsageError("--var must be z or q");
        var = parse_var(o.var);
    }
    return io::table_from(s, parse_json(read_file(o.table_file), "--table"), var, cap_of(o));
}

inline Output poly_output(const Poly& p) { return {io::to_json(p), to_string(p) + "\n"}; }

inline Output cmd_glue(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    Wall w = find_wall(s, c, required_rational(o.wall, "--wall"));
    return poly_output(poincare_glue(s, c, w, parse_side(o.side), load_table(s, o, Var::z)));
}

inline Output cmd_cross(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    Wall w = find_wall(s, c, required_rational(o.wall, "--wall"));
    return poly_output(poincare_cross(s, c, w, load_table(s, o, Var::z), parse_side(o.from)));
}

inline Output cmd_mass(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    Wall w = find_wall(s, c, required_rational(o.wall, "--wall"));
    return poly_output(mass_cross(s, c, w, load_table(s, o, Var::q), parse_side(o.from)));
}

inline Output cmd_exists(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    bool v = exists_semistable(s, c, required_rational(o.x, "--x"));
    return {json(v), yes(v) + "\n"};
}

inline Output cmd_dim(const Options& o) {
    SurfaceData s = load_surface(o);
    Rational d = moduli_dim(s, load_chern(s, o));
    return {io::to_json(d), to_string(d) + "\n"};
}

inline Output cmd_picard(const Options& o) {
    SurfaceData s = load_surface(o);
    ChernData c = load_chern(s, o);
    json v = io::to_json(picard_structure(s, c, required_rational(o.x, "--x")));
    return {v, key_values(v)};
}

inline Output cmd_verify(const Options&) {
    json v = json::array();
    std::vector<std::vector<std::string>> rows{
        {"fixture", "degree", "expdim", "euler", "palindromic", "degree_ok", "positive", "result"}};
    for (const FixtureCheck& f : verify_fixtures()) {
        v.push_back(io::to_json(f));
        rows.push_back({f.label, std::to_string(f.degree), std::to_string(f.expected_dimension), to_string(f.euler),
                        yes(f.palindromic), yes(f.degree_matches), yes(f.positive), f.passed() ? "pass" : "FAIL"});
    }
    return {v, aligned(rows)};
}

}  // namespace detail

inline Result run(const std::vector<std::string>& args) {
    using namespace detail;
    Options o;
    CLI::App app{"Exact wall and chamber calculator for Chern data on ruled surfaces", "ruledwall"};
    app.require_subcommand(1);
    app.add_option("--surface", o.surface_json, "surface as JSON, e.g. {\"kind\":\"ruled\",\"g\":2,\"e\":3}");
    app.add_option("--surface-file", o.surface_file, "path to a surface JSON file");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));

    auto sub = [&](const char* name, const char* help) {
        CLI::App* sc = app.add_subcommand(name, help);
        sc->fallthrough();
        return sc;
    };
    auto chern = [&](CLI::App* sc) { sc->add_option("--chern", o.chern_json, "datum {\"r\":2,\"c1\":[1,0],\"c2\":1}"); };
    auto wall = [&](CLI::App* sc) { sc->add_option("--wall", o.wall, "wall position p/q"); };
    auto side = [&](CLI::App* sc, std::string& target, const char* flag) {
        sc->add_option(flag, target, "below|above")->check(CLI::IsMember({"below", "above"}));
    };
    auto table = [&](CLI::App* sc) {
        sc->add_option("--table", o.table_file, "chamber table JSON file");
        sc->add_option("--cap", o.cap, "truncation degree")->check(CLI::NonNegativeNumber);
        sc->add_option("--var", o.var, "z|q");
    };

    sub("surface", "derived intersection data of the surface");
    auto* walls = sub("walls", "wall positions on the slice C0 + x f");
    chern(walls);
    walls->add_option("--range", o.range, "lo:hi (hi may be inf)");
    walls->add_flag("--witnesses", o.witnesses, "include the numerical witnesses");
    auto* ch = sub("chambers", "chambers between consecutive walls");
    chern(ch);
    ch->add_option("--range", o.range, "lo:hi (hi may be inf)");
    auto* hn = sub("hn", "Harder-Narasimhan types at a wall");
    chern(hn);
    wall(hn);
    side(hn, o.side, "--side");
    auto* cd = sub("codim", "codimension of an HN stratum");
    cd->add_option("--hn", o.hn_json, "HN type as a JSON array of data");
    auto* chk = sub("check", "positivity report for the minus-side strata of a wall");
    chern(chk);
    wall(chk);
    auto* glue = sub("glue", "Poincare series at a wall glued from one side");
    chern(glue);
    wall(glue);
    side(glue, o.side, "--side");
    table(glue);
    auto* cross = sub("cross", "Poincare series across a wall");
    chern(cross);
    wall(cross);
    side(cross, o.from, "--from");
    table(cross);
    auto* mass = sub("mass", "finite-field mass across a wall");
    chern(mass);
    wall(mass);
    side(mass, o.from, "--from");
    table(mass);
    auto* ex = sub("exists", "existence of semistable sheaves along H_x");
    chern(ex);
    ex->add_option("--x", o.x, "slice parameter p/q");
    auto* dim = sub("dim", "expected dimension of the moduli space");
    chern(dim);
    auto* pic = sub("picard", "Picard group structure off the walls");
    chern(pic);
    pic->add_option("--x", o.x, "slice parameter p/q");
    sub("verify", "check the reference Betti polynomials");

    Result res;
    std::vector<const char*> argv{"ruledwall"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        res.code = app.exit(e, out, err) == 0 ? 0 : 2;
        res.out = out.str();
        res.err = err.str();
        if (res.code != 0) res.err += app.help();
        return res;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        Output out;
        if (name == "surface") out = cmd_surface(o);
        else if (name == "walls") out = cmd_walls(o);
        else if (name == "chambers") out = cmd_chambers(o);
        else if (name == "hn") out = cmd_hn(o);
        else if (name == "codim") out = cmd_codim(o);
        else if (name == "check") out = cmd_check(o);
        else if (name == "glue") out = cmd_glue(o);
        else if (name == "cross") out = cmd_cross(o);
        else if (name == "mass") out = cmd_mass(o);
        else if (name == "exists") out = cmd_exists(o);
        else if (name == "dim") out = cmd_dim(o);
        else if (name == "picard") out = cmd_picard(o);
        else out = cmd_verify(o);
        res.out = o.format == "table" ? out.table : out.value.dump() + "\n";
        if (name == "verify") {
            for (const auto& f : out.value)
                if (!f.at("passed").get<bool>()) res.code = 1;
        }
    } catch (const UsageError& e) {
        res.code = 2;
        res.err = std::string(e.what()) + "\n" + app.get_subcommand(name)->help();
    } catch (const Error& e) {
        res.code = 1;
        res.err = std::string(e.what()) + "\n";
    } catch (const io::json::exception& e) {
        res.code = 2;
        res.err = std::string("malformed JSON input: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace ruledwall::cli
