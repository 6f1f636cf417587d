#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hurwitz/hurwitz.hpp>

namespace hurwitz::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, budget = 3 };

struct RunConfig {
    std::string subcommand;
    int n = 0;
    std::string alpha = "alpha_O";
    std::uint64_t seed = 0;
    std::uint64_t trials = 100;
    std::string format = "json";
    bool fast = false;                                    // any witness instead of the lex-smallest
    std::uint64_t budget = std::uint64_t{1} << 34;        // search nodes or expansion products
    unsigned threads = 1;
};

inline unsigned default_threads()
{
    if (const char* env = std::getenv("HURWITZ_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string strip_at(const std::string& s) { return !s.empty() && s[0] == '@' ? s.substr(1) : s; }

inline std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// "alpha_O", "@file" (text or JSON) or inline text such as "x1x2x3+x1".
inline CubicForm load_alpha(const std::string& src, int n)
{
    if (n < 1 || n > kMaxDim) throw ParseError("--n must be in 1..64");
    if (src == "alpha_O") return make_alpha_O(n);
    if (!src.empty() && src[0] == '@') {
        std::string text;
        std::istringstream in(read_file(src.substr(1)));
        for (std::string line; std::getline(in, line);) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            text += line + " ";
        }
        text = trim(text);
        if (!text.empty() && text[0] == '{') {
            auto f = cubic_from_json(::hurwitz::detail::json_guard([&] { return Json::parse(text); }));
            require_same_dim(n, f.dim());
            return f;
        }
        return parse_cubic(text, n);
    }
    return parse_cubic(src, n);
}

inline VecSet load_set_file(const std::string& path)
{
    std::istringstream in(read_file(strip_at(path)));
    return read_vecset(in);
}

inline HadamardMatrix load_hadamard(const std::string& spec)
{
    auto numeric_suffix = [&](std::size_t prefix) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(spec.substr(prefix), &used);
            if (used != spec.size() - prefix) throw ParseError("bad Hadamard spec: " + spec);
            return v;
        } catch (const std::logic_error&) {
            throw ParseError("bad Hadamard spec: " + spec);
        }
    };
    try {
        if (spec.rfind("paley", 0) == 0) return hadamard_paley(numeric_suffix(5));
        if (spec.rfind("sylvester", 0) == 0) return hadamard_sylvester(numeric_suffix(9));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    std::istringstream in(read_file(strip_at(spec)));
    return read_hadamard(in);
}

inline Json set_json(const VecSet& s) { return to_json(s.sorted()); }

// Monomial list of a Boolean function in the same order as cubic forms, "1" for the constant.
inline std::string anf_text(int n, const std::vector<std::uint8_t>& coeffs)
{
    std::vector<std::uint64_t> ms;
    bool constant = false;
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (!coeffs[m]) continue;
        if (m == 0) constant = true;
        else ms.push_back(m);
    }
    std::sort(ms.begin(), ms.end(), [n](auto a, auto b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
        return mask_indices(n, a) < mask_indices(n, b);
    });
    std::string out;
    for (auto m : ms) {
        if (!out.empty()) out += "+";
        for (int i : mask_indices(n, m)) out += "x" + std::to_string(i);
    }
    if (constant) out += out.empty() ? "1" : "+1";
    return out.empty() ? "0" : out;
}

inline std::vector<std::uint8_t> parse_table(const std::string& s, int& n)
{
    std::vector<std::uint8_t> v;
    for (char c : s) {
        if (c == '0' || c == '1') v.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (c != ' ' && c != '\n' && c != '\r' && c != '\t') throw ParseError("truth table must be a 0/1 string");
    }
    if (v.empty() || !std::has_single_bit(v.size())) throw ParseError("truth table length must be a power of two");
    n = std::countr_zero(v.size());
    if (n < 1 || n > 26) throw ParseError("truth table dimension must be in 1..26");
    return v;
}

struct Output {
    Json json = Json::object();
    std::string text;
    int code = ok;
};

inline void echo(Json& j, const RunConfig& cfg)
{
    j["seed"] = cfg.seed;
    j["budget"] = cfg.budget;
}

inline Output cmd_twist(const RunConfig& cfg)
{
    const auto alpha = load_alpha(cfg.alpha, cfg.n);
    const auto f = twist_from_cubic(alpha);
    PropertyOptions opt;
    opt.seed = cfg.seed;
    const auto props = check_properties(alpha, f, opt);
    Output o;
    o.json = Json{{"n", cfg.n}, {"alpha", to_text(alpha)}, {"twist", to_text(f)}, {"properties", to_json(props)}};
    echo(o.json, cfg);
    o.text = to_text(f) + "\n";
    o.text += std::string("properties: ") + (props.all() ? "all hold" : "FAILED") + "\n";
    o.code = props.all() ? ok : negative;
    return o;
}

inline Output cmd_checkform(const RunConfig& cfg, const std::string& table)
{
    int n = cfg.n;
    std::vector<std::uint8_t> values;
    if (!table.empty()) {
        const auto src = table[0] == '@' ? read_file(table.substr(1)) : table;
        values = parse_table(src, n);
        if (cfg.n != 0 && cfg.n != n) throw DimensionMismatch(cfg.n, n);
    } else {
        const auto alpha = load_alpha(cfg.alpha, cfg.n);
        if (n > 26) throw ParseError("checkform needs n <= 26");
        values = alpha.truth_table();
    }
    const TruthTable g(n, values);
    const auto coeffs = anf_coefficients(g);
    int degree = 0;
    for (std::size_t m = 0; m < coeffs.size(); ++m)
        if (coeffs[m]) degree = std::max(degree, std::popcount(m));
    const bool le3 = is_degree_le3(g);
    Output o;
    o.json = Json{{"n", n}, {"anf", anf_text(n, coeffs)}, {"degree", degree},
                  {"vanishes_at_zero", g[0] == 0}, {"is_degree_le3", le3}};
    o.text = anf_text(n, coeffs) + "\ndegree " + std::to_string(degree) + ", cubic form: " + (le3 ? "yes" : "no") + "\n";
    o.code = le3 ? ok : negative;
    return o;
}

inline Output cmd_maxset(const RunConfig& cfg, bool all_forms, int max_n)
{
    Output o;
    if (all_forms) {
        if (cfg.n != 4) throw ParseError("--all-forms is only available for --n 4");
        const auto rep = conjecture_check_n4(cfg.threads);
        o.json = to_json(rep);
        echo(o.json, cfg);
        o.text = "forms " + std::to_string(rep.forms) + ", global max " + std::to_string(rep.global_max) + "\n";
        o.code = rep.holds ? ok : negative;
        return o;
    }
    const auto alpha = load_alpha(cfg.alpha, cfg.n);
    MaxSetOptions opt;
    opt.max_exhaustive_n = max_n;
    opt.node_limit = cfg.budget;
    opt.deterministic = !cfg.fast;
    const auto res = max_hurwitzian(alpha, opt);
    o.json = Json{{"n", cfg.n},
                  {"alpha", cfg.alpha == "alpha_O" ? std::string("alpha_O") : to_text(alpha)},
                  {"max", res.size},
                  {"witness", set_json(res.witness)},
                  {"exact", res.exact}};
    if (!res.exact) o.json["lower_bound"] = true;
    o.json["nodes"] = res.nodes;
    o.json["period_dim"] = res.period_dim;
    o.json["deterministic"] = !cfg.fast;
    o.json["canonical_witness"] = res.canonical;
    echo(o.json, cfg);
    o.text = std::string(res.exact ? "max " : "lower bound ") + std::to_string(res.size) + "\n" + write_vecset(res.witness.sorted());
    o.code = res.exact ? ok : budget;
    return o;
}

inline Output cmd_construct(const RunConfig& cfg, const std::string& method, const std::string& hadamard)
{
    VecSet s(1);
    std::string used = method;
    if (!hadamard.empty()) {
        s = hurwitzian_from_hadamard(load_hadamard(hadamard));
        used = "hadamard";
        if (cfg.n != 0) require_same_dim(cfg.n, s.dim());
    } else {
        if (cfg.n < 1 || cfg.n > kMaxDim) throw ParseError("--n must be in 1..64");
        if (method == "auto") s = best_construction(cfg.n);
        else if (method == "mod12") s = construct_mod12(cfg.n);
        else if (method == "mod3") s = construct_mod3(cfg.n);
        else if (method == "mod0") s = construct_mod0(cfg.n);
        else throw ParseError("unknown construction method: " + method);
    }
    const int n = s.dim();
    const bool ok_set = is_hurwitzian(make_alpha_O(n), s);
    Output o;
    o.json = Json{{"n", n}, {"method", used}, {"size", s.size()}, {"rho", n < 63 ? rho(std::uint64_t{1} << n) : 0},
                  {"hurwitzian", ok_set}, {"set", set_json(s)}};
    o.text = write_vecset(s.sorted());
    o.code = ok_set ? ok : negative;
    return o;
}

inline Output cmd_hadamard(const RunConfig&, const std::string& spec)
{
    const auto h = load_hadamard(spec);
    Output o;
    Json rows = Json::array();
    std::istringstream in(write_hadamard(h));
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    o.json = Json{{"order", h.order()}, {"orthogonal", true}, {"rows", rows}};
    const int m = h.order();
    if (m % 4 == 0 && (m / 4) % 2 == 1) {
        const auto s = hurwitzian_from_hadamard(h);
        o.json["hurwitzian_set"] = Json{{"n", s.dim()}, {"size", s.size()},
                                        {"hurwitzian", is_hurwitzian(make_alpha_O(s.dim()), s)}, {"set", set_json(s)}};
    }
    o.text = write_hadamard(h);
    return o;
}

inline Json check_json(const SymbolicCheck& c)
{
    Json j{{"verified", c.holds}, {"products", c.products}, {"monomials", c.monomials}, {"nonzero", c.nonzero}};
    if (c.witness) j["witness"] = *c.witness;
    return j;
}

inline Output report_identity(const RunConfig& cfg, const Identity& id, const std::string& emit, Json head)
{
    const auto res = verify_symbolic(id, cfg.budget);
    const auto sz = id.size();
    Output o;
    o.json = std::move(head);
    o.json["size"] = {sz[0], sz[1], sz[2]};
    const auto verdict = check_json(res);
    for (auto& [k, v] : verdict.items()) o.json[k] = v;
    echo(o.json, cfg);
    if (emit == "json") o.json["identity"] = to_json(id);
    else if (emit == "text") o.json["identity"] = render_text(id);
    if (emit == "text" || emit == "json") o.text = render_text(id);
    o.text += "size [" + std::to_string(sz[0]) + ", " + std::to_string(sz[1]) + ", " + std::to_string(sz[2]) +
              "]: " + (res.holds ? "verified" : "NOT an identity") + "\n";
    o.code = res.holds ? ok : negative;
    return o;
}

inline Output cmd_identity(const RunConfig& cfg, const std::string& hadamard, const std::string& set_file,
                           std::size_t mutate, const std::string& emit)
{
    VecSet a(1);
    std::string source;
    if (!hadamard.empty()) {
        a = hurwitzian_from_hadamard(load_hadamard(hadamard));
        source = "hadamard:" + hadamard;
    } else if (!set_file.empty()) {
        a = load_set_file(set_file);
        source = "file";
    } else {
        if (cfg.n < 1) throw ParseError("--n is required");
        a = best_construction(cfg.n);
        source = "construction";
    }
    if (cfg.n != 0) require_same_dim(cfg.n, a.dim());
    if (a.dim() > 11) throw BudgetExceeded("identity dimension above 11");
    auto id = identity_for_set(a);
    if (mutate > 0) id = mutate_signs(id, mutate, cfg.seed);
    return report_identity(cfg, id, emit, Json{{"n", a.dim()}, {"source", source}, {"mutated", mutate}});
}

inline Output cmd_verify(const RunConfig& cfg, const std::string& file)
{
    const auto text = read_file(strip_at(file));
    const auto body = trim(text);
    const Identity id = !body.empty() && body[0] == '{'
                            ? identity_from_json(::hurwitz::detail::json_guard([&] { return Json::parse(body); }))
                            : parse_text(text);
    return report_identity(cfg, id, "none", Json{{"n", id.dim()}, {"source", "file"}});
}

inline VecSet resolve_set(const std::string& spec, int n)
{
    if (spec == "full") {
        if (n < 1 || n > 20) throw ParseError("'full' needs --n in 1..20");
        return VecSet::full(n);
    }
    if (spec == "construct") {
        if (n < 1) throw ParseError("'construct' needs --n");
        return best_construction(n);
    }
    auto s = load_set_file(spec);
    if (n != 0) require_same_dim(n, s.dim());
    return s;
}

inline std::pair<int, int> parse_range(const std::string& s)
{
    try {
        const auto dash = s.find('-');
        if (dash == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
    } catch (const std::logic_error&) {
        throw ParseError("bad range: " + s);
    }
}

inline Output cmd_quadruples(const RunConfig& cfg, const std::string& a_spec, const std::string& b_spec,
                             bool ordered, const std::string& sweep)
{
    const auto mode = ordered ? QuadrupleCount::ordered : QuadrupleCount::unordered;
    Output o;
    if (!sweep.empty()) {
        const auto [lo, hi] = parse_range(sweep);
        if (lo < 1 || hi < lo || hi > 16) throw ParseError("--sweep range must lie in 1..16");
        std::string csv = "n,size_a,size_b,sumset_size,proper_count,hypothesis_holds,ratio\n";
        Json rows = Json::array();
        bool all = true;
        for (int n = lo; n <= hi; ++n) {
            const auto r = quadruple_report(load_alpha(cfg.alpha, n), resolve_set(a_spec, n), resolve_set(b_spec, n), mode);
            std::ostringstream line;
            line << n << ',' << r.size_a << ',' << r.size_b << ',' << r.sumset_size << ',' << r.proper_count << ','
                 << (r.hypothesis_holds ? "true" : "false") << ',' << r.ratio << '\n';
            csv += line.str();
            auto j = to_json(r);
            j["n"] = n;
            rows.push_back(j);
            all = all && r.hypothesis_holds;
        }
        o.json = Json{{"sweep", rows}};
        echo(o.json, cfg);
        o.text = csv;
        o.code = all ? ok : negative;
        return o;
    }
    const auto a = resolve_set(a_spec, cfg.n);
    const auto b = resolve_set(b_spec, cfg.n);
    require_same_dim(a.dim(), b.dim());
    const auto r = quadruple_report(load_alpha(cfg.alpha, a.dim()), a, b, mode);
    o.json = to_json(r);
    o.json["n"] = a.dim();
    echo(o.json, cfg);
    o.text = "proper quadruples " + std::to_string(r.proper_count) + ", hypothesis " +
             (r.hypothesis_holds ? "holds" : "fails") + "\n";
    o.code = r.hypothesis_holds ? ok : negative;
    return o;
}

} // namespace detail

/// Runs one command line (without the program name). Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Twisted group algebras, Hurwitzian sets and sum-of-squares identities", "hurwitz_cli"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.threads = default_threads();

    auto common = [&](CLI::App* sub, bool needs_alpha) {
        sub->add_option("--n", cfg.n, "dimension of the binary space");
        if (needs_alpha) sub->add_option("--alpha", cfg.alpha, "alpha_O, @file or inline form like x1x2x3+x1");
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", cfg.seed, "seed for every random choice");
        sub->add_option("--budget", cfg.budget, "search node or expansion product limit");
    };

    auto* twist = app.add_subcommand("twist", "build f from alpha and check its properties");
    common(twist, true);

    std::string table;
    auto* checkform = app.add_subcommand("checkform", "ANF degree of a Boolean function");
    common(checkform, true);
    checkform->add_option("--table", table, "truth table as a 0/1 string (or @file), index = vector value");

    bool all_forms = false;
    int max_n = 8;
    auto* maxset = app.add_subcommand("maxset", "exact maximum Hurwitzian set");
    common(maxset, true);
    maxset->add_flag("--all-forms", all_forms, "maximum over every cubic form (n = 4 only)");
    maxset->add_option("--max-n", max_n, "largest n searched exhaustively");
    maxset->add_flag("--fast", cfg.fast, "return any maximum witness");
    maxset->add_option("--threads", cfg.threads, "worker threads");

    std::string method = "auto", hadamard;
    auto* construct = app.add_subcommand("construct", "explicit Hurwitzian set for alpha_O");
    common(construct, false);
    construct->add_option("--method", method, "auto, mod12, mod3 or mod0");
    construct->add_option("--hadamard", hadamard, "paleyQ, sylvesterK or a '+'/'-' matrix file");

    std::string hadamard_spec;
    auto* hadamard_cmd = app.add_subcommand("hadamard", "build or check a Hadamard matrix");
    common(hadamard_cmd, false);
    hadamard_cmd->add_option("spec", hadamard_spec, "paleyQ, sylvesterK or a '+'/'-' matrix file")->required();

    std::string set_file, emit = "none";
    std::size_t mutate = 0;
    auto* identity = app.add_subcommand("identity", "sum-of-squares identity from a Hurwitzian set");
    common(identity, false);
    identity->add_option("--hadamard", hadamard, "take A from a Hadamard matrix");
    identity->add_option("--set", set_file, "take A from a set file");
    identity->add_option("--mutate", mutate, "flip this many signs before verifying");
    identity->add_option("--emit", emit, "include the identity: none, text or json")
        ->check(CLI::IsMember({"none", "text", "json"}));

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "verify an identity file (JSON or text)");
    common(verify, false);
    verify->add_option("file", verify_file, "identity file")->required();

    std::string a_spec = "construct", b_spec = "full", sweep;
    bool ordered = false;
    auto* quadruples = app.add_subcommand("quadruples", "proper additive quadruples of A and B");
    common(quadruples, true);
    quadruples->add_option("--a", a_spec, "full, construct or a set file");
    quadruples->add_option("--b", b_spec, "full, construct or a set file");
    quadruples->add_flag("--ordered", ordered, "count ordered quadruples");
    quadruples->add_option("--sweep", sweep, "range of n such as 1-8; text format gives CSV");
    quadruples->add_flag("--csv", [&](std::int64_t) { cfg.format = "text"; }, "same as --format text");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        detail::Output o;
        if (*twist) o = detail::cmd_twist(cfg);
        else if (*checkform) o = detail::cmd_checkform(cfg, table);
        else if (*maxset) o = detail::cmd_maxset(cfg, all_forms, max_n);
        else if (*construct) o = detail::cmd_construct(cfg, method, hadamard);
        else if (*hadamard_cmd) o = detail::cmd_hadamard(cfg, hadamard_spec);
        else if (*identity) o = detail::cmd_identity(cfg, hadamard, set_file, mutate, emit);
        else if (*verify) o = detail::cmd_verify(cfg, verify_file);
        else o = detail::cmd_quadruples(cfg, a_spec, b_spec, ordered, sweep);
        if (cfg.format == "json") out << o.json.dump(2) << "\n";
        else out << o.text;
        return o.code;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return budget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
}

} // namespace hurwitz::cli
