#pragma once

// Command-line front end. Exit codes: 0 success, 1 error or failed verdict,
// 2 multiplier search exhausted without a solution.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "serialize.hpp"

namespace hullkit {

struct CommandConfig {
    std::string subcommand;
    std::uint32_t q = 0;
    std::string family;
    std::optional<std::size_t> k;
    std::optional<std::size_t> h;
    std::optional<std::size_t> l;
    std::size_t m = 0, m1 = 0, m2 = 0, t = 0, u = 0, s = 0;
    std::vector<std::uint32_t> g;  // polynomial coefficients as element indices
    std::optional<std::int64_t> n, d, c;
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = kDefaultSearchBudget;
    std::string format;
    std::uint64_t cap = 0;
    std::size_t max_rows = std::numeric_limits<std::size_t>::max();
    std::string kind = "hermitian";
    std::string method = "auto";
    bool dual = false;
    std::string in, out, witness;
};

namespace cli_detail {

inline std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) detail::fail(errc::parse_error, "cannot open " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        detail::fail(errc::parse_error, e.what());
    }
}

/// Writes to a sibling temporary file and renames it into place.
inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) detail::fail(errc::parse_error, "cannot write " + tmp);
        f << text;
        if (!f) detail::fail(errc::parse_error, "write to " + tmp + " failed");
    }
    std::filesystem::rename(tmp, path);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string pretty(const EaqecParams& p) {
    std::ostringstream os;
    os << "[[" << p.n << ", " << p.k_q << ", " << p.d << ", " << p.c << "]]_" << p.q << "  mds=" << to_string(p.mds)
       << "  gate=" << (p.gate() ? "pass" : "failed") << "  witnessed=" << (p.source.witnessed ? "yes" : "no");
    if (!p.source.families.empty()) {
        os << "  family=";
        for (std::size_t i = 0; i < p.source.families.size(); ++i) os << (i ? "," : "") << p.source.families[i];
    }
    if (p.source.hull_dim) os << "  h=" << *p.source.hull_dim;
    if (!p.source.distance_verified) os << "  unverified-distance";
    os << '\n';
    return os.str();
}

inline std::string render_params(const std::vector<EaqecParams>& rows, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        return dump(arr);
    }
    if (format == "pretty") {
        std::string s;
        for (const auto& r : rows) s += pretty(r);
        return s;
    }
    return to_tsv(rows);
}

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    detail::fail(errc::parse_error, "format '" + format + "' is not supported by this command");
}

/// A code object, or construct / dial output carrying one under "code".
inline LinearCode code_from_text(const std::string& text) {
    const json j = parse_json(text);
    if (j.is_object() && !j.contains("generator") && j.contains("code")) return code_from_json(j.at("code"));
    return code_from_json(j);
}

inline LinearCode load_code(const CommandConfig& cfg) { return code_from_text(read_input(cfg.in)); }

inline LambdaSource lambda_source(const CommandConfig& cfg) {
    return cfg.seed ? LambdaSource::seeded(*cfg.seed) : LambdaSource::canonical();
}

inline DualKind parse_kind(const CommandConfig& cfg) {
    if (cfg.kind == "hermitian") return DualKind::hermitian();
    if (cfg.kind == "euclidean") return DualKind::euclidean();
    if (cfg.kind == "galois") {
        if (!cfg.l) detail::fail(errc::parse_error, "--kind galois needs --l");
        return DualKind::galois(static_cast<std::uint32_t>(*cfg.l));
    }
    detail::fail(errc::parse_error, "unknown dual kind '" + cfg.kind + "'");
}

inline int cmd_construct(const CommandConfig& cfg, std::ostream& out) {
    const FieldSpec field = make_hermitian_field(cfg.q);
    FamilyParams params;
    params.k = *cfg.k;
    params.m = cfg.m;
    params.m1 = cfg.m1;
    params.m2 = cfg.m2;
    params.t = cfg.t;
    params.u = cfg.u;
    params.s = cfg.s;
    for (auto gi : cfg.g) params.g.push_back(field.element(gi));
    params.seed = cfg.seed.value_or(kDefaultSeed);
    params.budget = cfg.budget;
    const ForgeOutcome r = construct_family(field, parse_family(cfg.family), params, cfg.cap);

    json j{{"family", family_tag(r.family)}, {"status", to_string(r.status)}, {"n", r.n}, {"k", r.k}};
    j["field"] = to_json(field);
    if (r.grs) j["grs"] = to_json(*r.grs);
    if (r.code) j["code"] = to_json(*r.code);
    j["distance"] = r.distance ? json(*r.distance) : json(nullptr);
    j["nullity"] = r.nullity;
    j["attempts"] = r.attempts;
    j["exhaustive"] = r.exhaustive;
    if (cfg.format == "pretty") {
        std::ostringstream os;
        os << family_tag(r.family) << " q=" << cfg.q << " [" << r.n << ", " << r.k;
        if (r.distance) os << ", " << *r.distance;
        os << "] status=" << to_string(r.status) << " nullity=" << r.nullity << " attempts=" << r.attempts
           << (r.exhaustive ? " exhaustive" : "") << '\n';
        write_output(cfg.out, os.str(), out);
    } else {
        require_format(cfg.format, {"json"});
        write_output(cfg.out, dump(j), out);
    }
    return r.status == SolveStatus::found ? 0 : 2;
}

inline int cmd_dial(const CommandConfig& cfg, std::ostream& out) {
    const LinearCode code = load_code(cfg);
    const DialResult r = reduce_hull(code, *cfg.h, lambda_source(cfg));
    if (cfg.format == "pretty") {
        std::ostringstream os;
        os << "[" << r.code.n() << ", " << r.code.k() << "] target_h=" << r.target_h << " achieved_h=" << r.achieved_h << '\n';
        write_output(cfg.out, os.str(), out);
    } else {
        require_format(cfg.format, {"json"});
        write_output(cfg.out, dump(to_json(r)), out);
    }
    return 0;
}

inline int cmd_eaqec(const CommandConfig& cfg, std::ostream& out) {
    const LinearCode code = load_code(cfg);
    code.field().sub_order();
    std::vector<EaqecParams> rows;
    if (cfg.l) {
        rows.push_back(eaqec_from_dial(code, *cfg.l, lambda_source(cfg), cfg.cap).params);
    } else {
        for (auto& r : eaqec_sweep(code, lambda_source(cfg), cfg.cap)) rows.push_back(std::move(r.params));
    }
    require_format(cfg.format, {"json", "tsv", "pretty"});
    write_output(cfg.out, render_params(rows, cfg.format), out);
    return 0;
}

inline int cmd_table(const CommandConfig& cfg, std::ostream& out) {
    TableLimits limits;
    limits.max_rows = cfg.max_rows;
    const auto rows = enumerate_table1(cfg.q, limits);
    require_format(cfg.format, {"json", "tsv", "pretty"});
    write_output(cfg.out, render_params(rows, cfg.format), out);
    return 0;
}

inline int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
    EaqecParams params;
    if (!cfg.in.empty()) {
        params = params_from_json(parse_json(read_input(cfg.in)));
    } else {
        if (!cfg.n || !cfg.k || !cfg.d || !cfg.c || cfg.q == 0)
            detail::fail(errc::parse_error, "verify needs --in or all of --q --n --k --d --c");
        params = make_params(cfg.q, *cfg.n, static_cast<std::int64_t>(*cfg.k), *cfg.d, *cfg.c);
    }
    std::optional<LinearCode> witness;
    if (!cfg.witness.empty()) witness = code_from_text(read_input(cfg.witness));
    const Verdict v = verify_claim(params, witness, cfg.cap);
    if (cfg.format == "pretty") {
        std::string s = to_string(v.status) + (v.mds ? " mds" : "") + "\n";
        for (const auto& f : v.failures) s += "  " + f + "\n";
        write_output(cfg.out, s, out);
    } else {
        require_format(cfg.format, {"json"});
        write_output(cfg.out, dump(to_json(v)), out);
    }
    return v.status == Verdict::Status::fail ? 1 : 0;
}

inline int cmd_distance(const CommandConfig& cfg, std::ostream& out) {
    const LinearCode code = load_code(cfg);
    DistanceMethod method = DistanceMethod::automatic;
    if (cfg.method == "messages")
        method = DistanceMethod::enumerate_messages;
    else if (cfg.method == "dependencies")
        method = DistanceMethod::column_dependencies;
    else if (cfg.method != "auto")
        detail::fail(errc::parse_error, "unknown method '" + cfg.method + "'");
    const LinearCode target = cfg.dual ? dual(code, parse_kind(cfg)) : code;
    const std::size_t d = min_distance(target, cfg.cap, method);
    if (cfg.format == "pretty") {
        write_output(cfg.out, "[" + std::to_string(target.n()) + ", " + std::to_string(target.k()) + ", " + std::to_string(d) + "]\n",
                     out);
    } else {
        require_format(cfg.format, {"json"});
        json j{{"n", target.n()}, {"k", target.k()}, {"d", d}, {"mds", d == target.n() - target.k() + 1}};
        if (cfg.dual) j["dual"] = parse_kind(cfg).name();
        write_output(cfg.out, dump(j), out);
    }
    return 0;
}

inline int cmd_hull(const CommandConfig& cfg, std::ostream& out) {
    const LinearCode code = load_code(cfg);
    const HullReport r = hull(code, parse_kind(cfg));
    if (cfg.format == "pretty") {
        write_output(cfg.out, r.kind.name() + " hull dimension " + std::to_string(r.dim) + "\n", out);
    } else {
        require_format(cfg.format, {"json"});
        write_output(cfg.out, dump(json{{"kind", r.kind.name()}, {"dim", r.dim}, {"basis", to_json(r.basis)}}), out);
    }
    return 0;
}

}  // namespace cli_detail

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandConfig cfg;
    CLI::App app{"Hermitian hull and EAQEC toolkit", "hullkit"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, std::string>> default_formats;
    auto common = [&cfg, &default_formats](CLI::App* sub, const std::string& default_format) {
        default_formats.emplace_back(sub, default_format);
        sub->add_option("--format", cfg.format, "json, tsv or pretty (default " + default_format + ")")
            ->check(CLI::IsMember({"json", "tsv", "pretty"}));
        sub->add_option("--cap", cfg.cap, "enumeration cap (default from HULLKIT_ENUM_CAP or 1e7)");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
    };

    auto* construct = app.add_subcommand("construct", "build a Hermitian self-orthogonal GRS code");
    construct->add_option("--q", cfg.q, "base field size")->required();
    construct->add_option("--family", cfg.family, "family tag")->required();
    construct->add_option("--k", cfg.k, "code dimension")->required();
    construct->add_option("--m", cfg.m, "subgroup index");
    construct->add_option("--m1", cfg.m1, "first subgroup index");
    construct->add_option("--m2", cfg.m2, "second subgroup index");
    construct->add_option("--t", cfg.t, "removed multiplicative cosets");
    construct->add_option("--u", cfg.u, "removed norm fibres");
    construct->add_option("--s", cfg.s, "removed points");
    construct->add_option("--g", cfg.g, "polynomial coefficients as element indices, constant first")->delimiter(',');
    construct->add_option("--seed", cfg.seed, "search seed");
    construct->add_option("--budget", cfg.budget, "multiplier search budget");
    common(construct, "json");

    auto* dial_cmd = app.add_subcommand("dial", "set the Hermitian hull dimension of a code");
    dial_cmd->set_help_flag("--help", "Print this help message and exit");
    dial_cmd->add_option("--in", cfg.in, "code JSON (default stdin)");
    dial_cmd->add_option("--h", cfg.h, "target hull dimension")->required();
    dial_cmd->add_option("--seed", cfg.seed, "draw lambdas from a seeded generator");
    common(dial_cmd, "json");

    auto* eaqec_cmd = app.add_subcommand("eaqec", "derive EAQEC parameters by dialing the hull");
    eaqec_cmd->add_option("--in", cfg.in, "code JSON (default stdin)");
    eaqec_cmd->add_option("--l", cfg.l, "single hull dimension instead of the full sweep");
    eaqec_cmd->add_option("--seed", cfg.seed, "draw lambdas from a seeded generator");
    common(eaqec_cmd, "tsv");

    auto* table = app.add_subcommand("table", "formula-level MDS EAQEC table for one q");
    table->add_option("--q", cfg.q, "base field size")->required();
    table->add_option("--max-rows", cfg.max_rows, "truncate the output");
    common(table, "tsv");

    auto* verify = app.add_subcommand("verify", "check an EAQEC parameter claim");
    verify->add_option("--in", cfg.in, "parameters JSON");
    verify->add_option("--q", cfg.q, "base field size");
    verify->add_option("--n", cfg.n, "length");
    verify->add_option("--k", cfg.k, "logical dimension");
    verify->add_option("--d", cfg.d, "distance");
    verify->add_option("--c", cfg.c, "entanglement consumption");
    verify->add_option("--witness", cfg.witness, "witness code JSON");
    common(verify, "json");

    auto* distance = app.add_subcommand("distance", "exact minimum distance");
    distance->add_option("--in", cfg.in, "code JSON (default stdin)");
    distance->add_option("--method", cfg.method, "auto, messages or dependencies");
    distance->add_flag("--dual", cfg.dual, "measure the dual code instead");
    distance->add_option("--kind", cfg.kind, "dual kind for --dual: hermitian, euclidean or galois");
    distance->add_option("--l", cfg.l, "Galois index for --kind galois");
    common(distance, "json");

    auto* hull_cmd = app.add_subcommand("hull", "hull basis and dimension");
    hull_cmd->add_option("--in", cfg.in, "code JSON (default stdin)");
    hull_cmd->add_option("--kind", cfg.kind, "hermitian, euclidean or galois");
    hull_cmd->add_option("--l", cfg.l, "Galois index for --kind galois");
    common(hull_cmd, "json");

    std::vector<std::string> argv_store{"hullkit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    for (const auto& [sub, fmt] : default_formats)
        if (sub->parsed() && sub->get_option("--format")->count() == 0) cfg.format = fmt;
    if (cfg.cap == 0) cfg.cap = default_enumeration_cap();
    try {
        using namespace cli_detail;
        if (construct->parsed()) return cmd_construct(cfg, out);
        if (dial_cmd->parsed()) return cmd_dial(cfg, out);
        if (eaqec_cmd->parsed()) return cmd_eaqec(cfg, out);
        if (table->parsed()) return cmd_table(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (distance->parsed()) return cmd_distance(cfg, out);
        if (hull_cmd->parsed()) return cmd_hull(cfg, out);
    } catch (const hullkit_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace hullkit
