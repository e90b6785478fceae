#include "grw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "grw/zoo.hpp"

namespace grw {

namespace {

constexpr const char* kVersion = "grw 0.1.0";

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw std::invalid_argument(path + ": " + what);
}

std::uint32_t as_u32(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected a nonnegative integer");
    if (!j.is_number_unsigned() && j.get<std::int64_t>() < 0)
        bad(path, "expected a nonnegative integer");
    auto v = j.get<std::uint64_t>();
    if (v > 0x7fffffffu) bad(path, "value out of range");
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> as_digits(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of digits");
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_u32(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        bad(what, "expected an unsigned integer, got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        bad(what, "value out of range: '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Json json_rows(const Mat& M) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.cols; ++j) row.push_back(M.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

TowerPtr parse_field_object(const Json& f, const std::string& path) {
    if (!f.is_object()) bad(path, "expected an object");
    for (const auto& item : f.items()) {
        const std::string& key = item.key();
        if (key != "p" && key != "e" && key != "m" && key != "base_modulus" &&
            key != "ext_modulus")
            bad(path + "." + key, "unknown field");
    }
    for (const char* key : {"p", "e", "m"})
        if (!f.contains(key)) bad(path + "." + key, "missing");
    std::uint32_t p = as_u32(f["p"], path + ".p");
    std::uint32_t e = as_u32(f["e"], path + ".e");
    std::uint32_t m = as_u32(f["m"], path + ".m");

    std::vector<std::uint32_t> base;
    const std::vector<std::uint32_t>* base_ptr = nullptr;
    if (f.contains("base_modulus")) {
        base = as_digits(f["base_modulus"], path + ".base_modulus");
        base_ptr = &base;
    }
    std::vector<std::vector<std::uint32_t>> ext;
    const std::vector<std::vector<std::uint32_t>>* ext_ptr = nullptr;
    if (f.contains("ext_modulus")) {
        const Json& em = f["ext_modulus"];
        if (!em.is_array()) bad(path + ".ext_modulus", "expected an array of coefficients");
        for (std::size_t i = 0; i < em.size(); ++i)
            ext.push_back(as_digits(em[i], path + ".ext_modulus[" + std::to_string(i) + "]"));
        ext_ptr = &ext;
    }
    try {
        return make_field(p, e, m, base_ptr, ext_ptr);
    } catch (const std::invalid_argument& ex) {
        bad(path, ex.what());
    }
}

// ---- command plumbing ------------------------------------------------

struct CodeSource {
    std::string code_path;
    std::string family;
    std::string field_spec;
};

LinearCode resolve_code(const CodeSource& src) {
    if (src.code_path.empty() == src.family.empty())
        throw std::invalid_argument("pass exactly one of --code and --family");
    if (!src.code_path.empty()) {
        if (!src.field_spec.empty())
            throw std::invalid_argument("--field conflicts with --code; the file carries its field");
        std::ifstream in(src.code_path);
        if (!in) throw std::invalid_argument("cannot open code file: " + src.code_path);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& ex) {
            throw std::invalid_argument(src.code_path + ": " + ex.what());
        }
        return parse_code_file(doc);
    }
    if (src.field_spec.empty())
        throw std::invalid_argument("--family needs --field q=<prime>,m=<int>");
    TowerPtr T = parse_field_spec(src.field_spec);
    return code_from_descriptor(T, parse_descriptor(src.family));
}

Json witness_json(std::uint32_t r, const GammaSubspace& W) {
    return Json{{"r", r}, {"dim", W.dim()}, {"rational_basis", json_rows(W.rational_basis)}};
}

int cmd_weights(const CodeSource& src, const std::string& r_arg, const std::string& algorithm,
                const std::string& emit, std::ostream& out, std::ostream& err) {
    LinearCode C = resolve_code(src);
    std::vector<std::uint32_t> rs;
    if (r_arg == "all") {
        for (std::uint32_t r = 1; r <= C.k; ++r) rs.push_back(r);
    } else {
        auto r = parse_u64(r_arg, "--r");
        if (r < 1 || r > C.k) bad("--r", "out of range 1.." + std::to_string(C.k));
        rs.push_back(static_cast<std::uint32_t>(r));
    }
    bool use_gamma = algorithm == "gamma" || algorithm == "both";
    bool use_subspace = algorithm == "subspace" || algorithm == "both";

    std::vector<std::uint32_t> gamma_vals, subspace_vals;
    std::vector<GammaSubspace> witnesses;
    for (std::uint32_t r : rs) {
        if (use_gamma) {
            auto res = grw_M(C, r);
            gamma_vals.push_back(res.value);
            witnesses.push_back(std::move(res.witness));
        }
        if (use_subspace) subspace_vals.push_back(grw_d(C, r));
    }
    if (algorithm == "both") {
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (gamma_vals[i] != subspace_vals[i]) {
                err << "algorithms disagree at r=" << rs[i] << ": gamma=" << gamma_vals[i]
                    << " subspace=" << subspace_vals[i] << "\n";
                return 1;
            }
        }
    }
    const auto& vals = use_gamma ? gamma_vals : subspace_vals;

    if (emit == "json") {
        Json j{{"code", emit_code_file(C)}, {"n", C.n}, {"k", C.k},
               {"algorithm", algorithm}, {"r_values", Json(rs)}, {"hierarchy", Json(vals)}};
        if (algorithm == "both") j["subspace_hierarchy"] = Json(subspace_vals);
        if (use_gamma) {
            Json w = Json::array();
            for (std::size_t i = 0; i < rs.size(); ++i)
                w.push_back(witness_json(rs[i], witnesses[i]));
            j["witnesses"] = w;
        }
        out << j.dump(2) << "\n";
    } else if (emit == "csv") {
        out << (algorithm == "both" ? "r,gamma,subspace" : "r,value") << "\n";
        for (std::size_t i = 0; i < rs.size(); ++i) {
            out << rs[i] << "," << vals[i];
            if (algorithm == "both") out << "," << subspace_vals[i];
            out << "\n";
        }
    } else {
        out << "[" << C.n << "," << C.k << "] code over F_" << C.tower->order() << " / F_"
            << C.tower->q() << " (q=" << C.tower->q() << ", m=" << C.tower->m() << ")\n";
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (use_gamma) out << "M_" << rs[i] << " = " << gamma_vals[i];
            if (algorithm == "both") out << "  ";
            if (use_subspace) out << "d_" << rs[i] << " = " << subspace_vals[i];
            out << "\n";
        }
    }
    return 0;
}

int cmd_dual(const CodeSource& src, const std::string& emit, std::ostream& out,
             std::ostream& err) {
    LinearCode C = resolve_code(src);
    auto hierarchy = weight_hierarchy(C).values;
    std::vector<std::uint32_t> dual_hierarchy;
    Json dual_file;
    bool full = C.k == C.n;
    if (!full) {
        LinearCode D = dual(C);
        dual_hierarchy = weight_hierarchy(D).values;
        dual_file = emit_code_file(D);
    }
    CheckReport verdict = check_duality(C);
    std::string verdict_word = to_string(verdict.verdict);

    if (emit == "json") {
        Json j{{"code", emit_code_file(C)}, {"hierarchy", Json(hierarchy)}};
        j["dual_code"] = full ? Json(nullptr) : dual_file;
        j["dual_hierarchy"] = Json(dual_hierarchy);
        if (full) j["note"] = "full code: the dual is the zero space";
        j["duality"] = verdict_word;
        out << j.dump(2) << "\n";
    } else if (emit == "csv") {
        out << "side,r,value\n";
        for (std::size_t i = 0; i < hierarchy.size(); ++i)
            out << "primal," << i + 1 << "," << hierarchy[i] << "\n";
        for (std::size_t i = 0; i < dual_hierarchy.size(); ++i)
            out << "dual," << i + 1 << "," << dual_hierarchy[i] << "\n";
        err << "duality: " << verdict_word << "\n";
    } else {
        auto line = [&](const char* label, const std::vector<std::uint32_t>& vals) {
            out << label;
            for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? " " : "") << vals[i];
            out << "\n";
        };
        line("hierarchy:      ", hierarchy);
        line("dual hierarchy: ", dual_hierarchy);
        if (full) out << "note: full code, the dual is the zero space\n";
        out << "duality: " << verdict_word << "\n";
    }
    return verdict.verdict == Verdict::Fail ? 1 : 0;
}

int cmd_verify(const CodeSource& src, const std::string& checks_csv, std::ostream& out,
               std::ostream& err) {
    LinearCode C = resolve_code(src);
    std::vector<std::string> names;
    if (!checks_csv.empty()) names = split(checks_csv, ',');
    auto reports = run_checks(C, names, CheckContext{});
    Json arr = Json::array();
    bool failed = false;
    for (const auto& rep : reports) {
        arr.push_back(report_to_json(rep));
        failed = failed || rep.verdict == Verdict::Fail;
    }
    out << arr.dump(2) << "\n";
    err << summary_line(reports) << "\n";
    return failed ? 1 : 0;
}

struct SweepRow {
    LinearCode C;
    std::uint64_t code_id = 0;
    std::vector<std::uint32_t> hierarchy, dual_hierarchy;
    std::vector<CheckReport> reports;
};

int cmd_sweep(std::uint32_t q, std::uint32_t m, std::uint32_t n, const std::string& k_arg,
              const std::string& mode, std::uint64_t count, std::uint64_t seed,
              const std::string& emit, std::ostream& out, std::ostream& err) {
    TowerPtr T;
    try {
        T = make_field(q, 1, m);
    } catch (const std::invalid_argument& ex) {
        bad("--q", std::string(ex.what()) + " (--q takes a prime; general towers go through code files)");
    }
    std::vector<std::uint32_t> ks;
    if (k_arg == "all") {
        for (std::uint32_t k = 1; k <= n; ++k) ks.push_back(k);
    } else {
        auto k = parse_u64(k_arg, "--k");
        if (k < 1 || k > n) bad("--k", "out of range 1.." + std::to_string(n));
        ks.push_back(static_cast<std::uint32_t>(k));
    }

    std::vector<LinearCode> codes;
    if (mode == "exhaustive") {
        try {
            for (std::uint32_t k : ks)
                for_each_subspace(*T, T->order(), n, k, kDefaultBudget, [&](const Mat& G) {
                    codes.push_back(make_code(T, G));
                    return true;
                });
        } catch (const budget_exceeded& ex) {
            bad("sweep", std::string("enumeration too large: ") + ex.what());
        }
    } else {
        std::mt19937_64 master(seed);
        for (std::uint64_t i = 0; i < count; ++i) {
            std::uint32_t k = ks.size() == 1 ? ks[0]
                                             : static_cast<std::uint32_t>(1 + master() % n);
            std::uint64_t sub_seed = master();
            codes.push_back(random_code(T, n, k, sub_seed));
        }
    }
    std::sort(codes.begin(), codes.end(), [](const LinearCode& a, const LinearCode& b) {
        return a.k != b.k ? a.k < b.k : a.G.a < b.G.a;
    });

    std::vector<SweepRow> rows;
    std::size_t pass = 0, skip = 0, fail = 0;
    for (std::size_t id = 0; id < codes.size(); ++id) {
        SweepRow row{std::move(codes[id]), id, {}, {}, {}};
        try {
            row.hierarchy = weight_hierarchy(row.C).values;
        } catch (const budget_exceeded&) {
        }
        if (row.C.k < row.C.n) {
            try {
                row.dual_hierarchy = weight_hierarchy(dual(row.C)).values;
            } catch (const budget_exceeded&) {
            }
        }
        CheckContext ctx;
        ctx.sample_seed = seed * 1000003ULL + id;
        row.reports = run_checks(row.C, {}, ctx);
        for (const auto& rep : row.reports) {
            if (rep.verdict == Verdict::Pass) ++pass;
            else if (rep.verdict == Verdict::Skip) ++skip;
            else ++fail;
        }
        rows.push_back(std::move(row));
    }

    if (emit == "csv") {
        out << "q,e,p,m,n,k,code_id";
        for (std::uint32_t i = 1; i <= n; ++i) out << ",M_" << i;
        for (std::uint32_t i = 1; i <= n; ++i) out << ",dual_M_" << i;
        for (const auto& name : all_check_names()) out << "," << name;
        out << "\n";
        for (const auto& row : rows) {
            out << T->q() << "," << T->e() << "," << T->p() << "," << T->m() << "," << n
                << "," << row.C.k << "," << row.code_id;
            for (std::uint32_t i = 0; i < n; ++i) {
                out << ",";
                if (i < row.hierarchy.size()) out << row.hierarchy[i];
            }
            for (std::uint32_t i = 0; i < n; ++i) {
                out << ",";
                if (i < row.dual_hierarchy.size()) out << row.dual_hierarchy[i];
            }
            for (const auto& rep : row.reports) out << "," << to_string(rep.verdict);
            out << "\n";
        }
    } else {
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json jr{{"q", T->q()},       {"e", T->e()},
                    {"p", T->p()},       {"m", T->m()},
                    {"n", n},            {"k", row.C.k},
                    {"code_id", row.code_id}, {"generator", json_rows(row.C.G)},
                    {"hierarchy", Json(row.hierarchy)},
                    {"dual_hierarchy", Json(row.dual_hierarchy)}};
            Json checks = Json::array();
            for (const auto& rep : row.reports)
                checks.push_back(Json{{"check", rep.check},
                                      {"verdict", to_string(rep.verdict)},
                                      {"detail", rep.detail}});
            jr["checks"] = checks;
            arr.push_back(std::move(jr));
        }
        out << arr.dump(2) << "\n";
    }
    err << pass << " passed / " << skip << " skipped / " << fail << " failed\n";
    return fail > 0 ? 1 : 0;
}

}  // namespace

LinearCode parse_code_file(const Json& doc) {
    if (!doc.is_object()) bad("$", "expected a JSON object");
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (key != "field" && key != "generator") bad("$." + key, "unknown field");
    }
    if (!doc.contains("field")) bad("field", "missing");
    TowerPtr T = parse_field_object(doc["field"], "field");
    if (!doc.contains("generator")) bad("generator", "missing");
    const Json& g = doc["generator"];
    if (!g.is_array() || g.empty()) bad("generator", "expected a nonempty array of rows");
    if (!g[0].is_array()) bad("generator[0]", "expected an array of elements");
    std::size_t k = g.size(), n = g[0].size();
    Mat G(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        std::string rp = "generator[" + std::to_string(i) + "]";
        if (!g[i].is_array() || g[i].size() != n)
            bad(rp, "expected a row of " + std::to_string(n) + " elements");
        for (std::size_t j = 0; j < n; ++j) {
            std::string ep = rp + "[" + std::to_string(j) + "]";
            const Json& el = g[i][j];
            if (!el.is_array()) bad(ep, "expected an array of coordinate arrays");
            std::vector<std::vector<std::uint32_t>> coeffs;
            for (std::size_t t = 0; t < el.size(); ++t)
                coeffs.push_back(as_digits(el[t], ep + "[" + std::to_string(t) + "]"));
            try {
                G.at(i, j) = T->from_coeffs(coeffs);
            } catch (const std::invalid_argument& ex) {
                bad(ep, ex.what());
            }
        }
    }
    try {
        return make_code(T, G);
    } catch (const std::invalid_argument& ex) {
        bad("generator", ex.what());
    }
}

Json emit_code_file(const LinearCode& C) {
    const FieldTower& T = *C.tower;
    Json field{{"p", T.p()}, {"e", T.e()}, {"m", T.m()},
               {"base_modulus", Json(T.base_modulus())},
               {"ext_modulus", Json(T.ext_modulus())}};
    Json gen = Json::array();
    for (std::size_t i = 0; i < C.G.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < C.G.cols; ++j) row.push_back(Json(T.to_coeffs(C.G.at(i, j))));
        gen.push_back(std::move(row));
    }
    return Json{{"field", field}, {"generator", gen}};
}

TowerPtr parse_field_spec(const std::string& spec) {
    std::uint64_t q = 0, m = 0;
    bool have_q = false, have_m = false;
    for (const std::string& tok : split(spec, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) bad("--field", "expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "q") {
            if (have_q) bad("--field", "duplicate key q");
            q = parse_u64(val, "--field q");
            have_q = true;
        } else if (key == "m") {
            if (have_m) bad("--field", "duplicate key m");
            m = parse_u64(val, "--field m");
            have_m = true;
        } else {
            bad("--field", "unknown key '" + key + "' (the shorthand takes q and m)");
        }
    }
    if (!have_q || !have_m) bad("--field", "need q=<prime>,m=<int>");
    if (q > 0x7fffffffu || m > 0x7fffffffu) bad("--field", "value out of range");
    try {
        return make_field(static_cast<std::uint32_t>(q), 1, static_cast<std::uint32_t>(m));
    } catch (const std::invalid_argument& ex) {
        bad("--field", std::string(ex.what()) +
                           " (the q=,m= shorthand covers prime q; general towers go "
                           "through code files)");
    }
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    bool no_banner =
        std::find(args.begin(), args.end(), "--no-banner") != args.end();
    if (!no_banner) err << kVersion << "\n";

    CLI::App app{"generalized rank weights of linear codes over field towers"};
    app.name("grw");
    bool banner_flag = false;
    app.add_flag("--no-banner", banner_flag, "suppress the version banner");
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    int rc = 0;

    auto* w = app.add_subcommand("weights", "compute the generalized rank weights of one code");
    w->fallthrough();
    CodeSource w_src;
    std::string w_r = "all", w_alg = "gamma", w_emit = "table";
    w->add_option("--code", w_src.code_path, "code file (JSON)");
    w->add_option("--family", w_src.family, "family descriptor, e.g. gabidulin:n=4,k=2");
    w->add_option("--field", w_src.field_spec, "field shorthand q=<prime>,m=<int>");
    w->add_option("--r", w_r, "weight index, an integer or 'all'");
    w->add_option("--algorithm", w_alg, "gamma | subspace | both")
        ->check(CLI::IsMember({"gamma", "subspace", "both"}));
    w->add_option("--emit", w_emit, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    w->callback([&] { rc = cmd_weights(w_src, w_r, w_alg, w_emit, out, err); });

    auto* d = app.add_subcommand("dual", "hierarchies of a code and its dual, with the duality verdict");
    d->fallthrough();
    CodeSource d_src;
    std::string d_emit = "table";
    d->add_option("--code", d_src.code_path, "code file (JSON)");
    d->add_option("--family", d_src.family, "family descriptor");
    d->add_option("--field", d_src.field_spec, "field shorthand q=<prime>,m=<int>");
    d->add_option("--emit", d_emit, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    d->callback([&] { rc = cmd_dual(d_src, d_emit, out, err); });

    auto* v = app.add_subcommand("verify", "run structural checks against one code");
    v->fallthrough();
    CodeSource v_src;
    std::string v_checks;
    v->add_option("--code", v_src.code_path, "code file (JSON)");
    v->add_option("--family", v_src.family, "family descriptor");
    v->add_option("--field", v_src.field_spec, "field shorthand q=<prime>,m=<int>");
    v->add_option("--checks", v_checks, "comma-separated check names (default: all)");
    v->callback([&] { rc = cmd_verify(v_src, v_checks, out, err); });

    auto* s = app.add_subcommand("sweep", "run every check across a family of codes");
    s->fallthrough();
    std::uint32_t s_q = 0, s_m = 0, s_n = 0;
    std::string s_k = "all", s_mode = "exhaustive", s_emit = "csv";
    std::uint64_t s_count = 100, s_seed = 0;
    s->add_option("--q", s_q, "base field size (prime)")->required();
    s->add_option("--m", s_m, "extension degree")->required();
    s->add_option("--n", s_n, "code length")->required();
    s->add_option("--k", s_k, "dimension, an integer or 'all'");
    s->add_option("--mode", s_mode, "exhaustive | random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    s->add_option("--count", s_count, "number of random codes (random mode)");
    s->add_option("--seed", s_seed, "master seed (random mode)");
    s->add_option("--emit", s_emit, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    s->callback(
        [&] { rc = cmd_sweep(s_q, s_m, s_n, s_k, s_mode, s_count, s_seed, s_emit, out, err); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace grw
