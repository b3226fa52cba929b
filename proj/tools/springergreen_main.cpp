// springergreen: exact Springer characters, Green and Kostka-Foulkes
// polynomials for the classical Weyl groups, with built-in verification of
// the identities the library relies on.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "springergreen/config.hpp"
#include "springergreen/jsonio.hpp"

using namespace sg;

namespace {

int parse_split(const std::string& s) {
    if (s.empty()) return 0;
    if (s == "+") return +1;
    if (s == "-") return -1;
    throw ParseError("split marker must be + or -: " + s);
}

std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

void emit_poly(const IntPoly& p, const Config& cfg) {
    if (cfg.format == OutputFormat::Json)
        std::cout << poly_to_json(p).dump() << "\n";
    else
        std::cout << p.str() << "\n";
}

// Display label of an irreducible constituent: the Jordan-partition form for
// A/B/C (unique preimage under the Springer correspondence), the bipartition
// form for D.
std::string display_label(LieType type, int size, const IrrLabel& irr) {
    if (type == LieType::D) return irr.str(WeylFamily::D);
    if (type == LieType::A) return irr.alpha.str();
    const auto pre = springer_label_preimages(type, size, irr);
    if (pre.size() == 1) return pre[0].str();
    return irr.str(WeylFamily::BC);
}

int run_springer(const Config& cfg, LieType type, int n, const Partition& lambda, int split,
                 const std::string& class_text) {
    const NilpotentLabel nl{type, n, lambda, split};
    const ClassFunction total = total_char(nl);
    const WeylFamily fam = family_of(type);
    const WeylTable& table = weyl_table(fam, n);

    if (!class_text.empty()) {
        const ClassLabel cl = ClassLabel::parse(class_text, fam);
        const Rat v = total.at(cl);
        if (cfg.format == OutputFormat::Json) {
            json out{{"type", to_string(type)}, {"n", n},       {"lambda", lambda.str()},
                     {"class", cl.str(fam)},    {"value", rat_str(v)}};
            if (split != 0) out["split"] = split > 0 ? "+" : "-";
            std::cout << out.dump() << "\n";
        } else {
            std::cout << rat_str(v) << "\n";
        }
        return 0;
    }

    const auto decomp = decompose(total);
    if (cfg.format == OutputFormat::Json) {
        json terms = json::array();
        for (const auto& [irr, mult] : decomp) {
            json t{{"alpha", irr.alpha.str()},
                   {"beta", irr.beta.str()},
                   {"multiplicity", rat_str(mult)}};
            if (irr.split != 0) t["split"] = irr.split > 0 ? "+" : "-";
            json pre = json::array();
            for (const Partition& p :
                 springer_label_preimages(type, lambda.size(), irr))
                pre.push_back(p.str());
            t["partitions"] = pre;
            terms.push_back(t);
        }
        json values = json::array();
        for (size_t c = 0; c < total.values.size(); ++c)
            values.push_back(json{{"class", table.classes[c].label.str(fam)},
                                  {"value", rat_str(total.values[c])}});
        json out{{"type", to_string(type)},       {"n", n},
                 {"lambda", lambda.str()},        {"dimension", rat_str(total.dimension())},
                 {"decomposition", terms},        {"values", values}};
        if (split != 0) out["split"] = split > 0 ? "+" : "-";
        std::cout << out.dump(1) << "\n";
    } else {
        bool first = true;
        for (const auto& [irr, mult] : decomp) {
            if (!first) std::cout << " + ";
            first = false;
            if (mult != 1) std::cout << rat_str(mult) << " * ";
            std::cout << "chi^{" << display_label(type, lambda.size(), irr) << "}";
        }
        if (first) std::cout << "0";
        std::cout << "\n";
    }
    return 0;
}

int render_reports(const Config& cfg, const std::vector<Report>& reports, bool verbose) {
    bool ok = true;
    if (cfg.format == OutputFormat::Json) {
        json out = json::array();
        for (const Report& r : reports) {
            out.push_back(report_to_json(r));
            ok = ok && r.all_pass();
        }
        std::cout << out.dump(1) << "\n";
    } else {
        for (const Report& r : reports) {
            std::cout << r.summary() << "\n";
            for (const CaseResult& c : r.cases) {
                if (c.pass && !verbose) continue;
                std::cout << "  " << (c.pass ? "pass" : "FAIL") << " " << c.lambda;
                if (!c.param.empty()) std::cout << " [" << c.param << "]";
                if (!c.pass) {
                    if (!c.witness.empty()) std::cout << " witness=" << c.witness;
                    if (!c.lhs.empty()) std::cout << " lhs=" << c.lhs << " rhs=" << c.rhs;
                }
                std::cout << "\n";
            }
            ok = ok && r.all_pass();
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total Springer characters, Green and Kostka-Foulkes polynomials "
                 "for classical types"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    std::string format = "plain";
    app.add_option("--format", format, "Output format: plain, json, csv")->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir,
                   "Directory for on-disk character table caches (env SPRINGERGREEN_CACHE)");
    app.add_option("--max-rank", cfg.max_rank, "Largest accepted rank")->capture_default_str();

    // kostka
    auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{mu,lambda}(t)");
    std::string k_mu, k_lambda;
    std::string k_at;
    kostka->add_option("--mu", k_mu, "Shape partition")->required();
    kostka->add_option("--lambda", k_lambda, "Content partition")->required();
    kostka->add_option("--at", k_at, "Evaluate at an integer");

    // green
    auto* green_cmd = app.add_subcommand("green", "Green polynomial gr^lambda_rho(t)");
    std::string g_lambda, g_rho, g_at;
    green_cmd->add_option("--lambda", g_lambda)->required();
    green_cmd->add_option("--rho", g_rho)->required();
    green_cmd->add_option("--at", g_at, "Evaluate at an integer");

    // springer
    auto* spr = app.add_subcommand("springer", "Total Springer character of a nilpotent orbit");
    std::string s_type, s_lambda, s_split, s_class;
    int s_n = 0;
    spr->add_option("--type", s_type, "Lie type A, B, C or D")->required();
    spr->add_option("--n", s_n, "Rank")->required();
    spr->add_option("--lambda", s_lambda, "Jordan type")->required();
    spr->add_option("--split", s_split, "Orbit marker + or - (very even type D)");
    spr->add_option("--class", s_class, "Evaluate at one class, e.g. \"2,1;-\" or \"2;-;+\"");

    // euler
    auto* euler = app.add_subcommand("euler", "Euler characteristic of a Springer fiber");
    std::string e_type, e_lambda, e_split;
    int e_n = 0;
    euler->add_option("--type", e_type)->required();
    euler->add_option("--n", e_n)->required();
    euler->add_option("--lambda", e_lambda)->required();
    euler->add_option("--split", e_split);

    // chartable
    auto* chart = app.add_subcommand("chartable", "Character table of a classical Weyl group");
    std::string c_type, c_out;
    int c_n = 0;
    chart->add_option("--type", c_type, "A, B, C, BC or D")->required();
    chart->add_option("--n", c_n)->required();
    chart->add_option("--out", c_out, "Write to a file instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string v_suite, v_type = "C";
    int v_n = 4, v_max = 12;
    bool v_verbose = false;
    ver->add_option("--suite", v_suite,
                    "restriction|induction|main-consistency|difference|triangularity|"
                    "symfunc-identities|orthogonality|green-recursion|kostka-recursion|all")
        ->required();
    ver->add_option("--type", v_type, "Lie type for the group suites");
    ver->add_option("--n", v_n, "Rank for the group suites");
    ver->add_option("--max-size", v_max, "Partition size bound for the symmetric function suites")
        ->capture_default_str();
    ver->add_option("--jobs", cfg.jobs, "Parallel workers (0 = auto)");
    ver->add_flag("--verbose", v_verbose, "Print passing cases too");

    // conjecture-scan
    auto* scan = app.add_subcommand("conjecture-scan",
                                    "Scan the quotient-swap conjecture for K(-1); reports only");
    int sc_max = 12;
    scan->add_option("--max-size", sc_max)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.format = parse_format(format);
        cfg.finalize();

        if (*kostka) {
            const Partition mu = Partition::parse(k_mu);
            const Partition lam = Partition::parse(k_lambda);
            const IntPoly p = kostka_foulkes(mu, lam);
            if (!k_at.empty())
                std::cout << p.evaluate(Int(k_at)) << "\n";
            else
                emit_poly(p, cfg);
            return 0;
        }
        if (*green_cmd) {
            const Partition lam = Partition::parse(g_lambda);
            const Partition rho = Partition::parse(g_rho);
            if (!g_at.empty())
                std::cout << green_at(lam, rho, Int(g_at)) << "\n";
            else
                emit_poly(green(lam, rho), cfg);
            return 0;
        }
        if (*spr) {
            return run_springer(cfg, parse_lie_type(s_type), s_n, Partition::parse(s_lambda),
                                parse_split(s_split), s_class);
        }
        if (*euler) {
            const NilpotentLabel nl{parse_lie_type(e_type), e_n, Partition::parse(e_lambda),
                                    parse_split(e_split)};
            std::cout << euler_characteristic(nl) << "\n";
            return 0;
        }
        if (*chart) {
            WeylFamily fam;
            if (c_type == "BC" || c_type == "bc")
                fam = WeylFamily::BC;
            else
                fam = family_of(parse_lie_type(c_type));
            if (c_n < 1 || (fam == WeylFamily::D && c_n < 2))
                throw RankTooSmall("rank too small for " + c_type);
            if (c_n > cfg.max_rank)
                throw ParseError("rank exceeds --max-rank=" + std::to_string(cfg.max_rank));
            const WeylTable& t = cached_weyl_table(fam, c_n, cfg.cache_dir);
            const std::string body = cfg.format == OutputFormat::Json
                                         ? chartable_to_json(t).dump(1) + "\n"
                                         : chartable_to_csv(t);
            if (c_out.empty()) {
                std::cout << body;
            } else {
                std::ofstream out(c_out);
                if (!out) throw IoError("cannot open " + c_out);
                out << body;
                if (!out) throw IoError("write failed: " + c_out);
            }
            return 0;
        }
        if (*ver) {
            const LieType type = parse_lie_type(v_type);
            if (v_n > cfg.max_rank)
                throw ParseError("rank exceeds --max-rank=" + std::to_string(cfg.max_rank));
            std::vector<Report> reports;
            auto want = [&](const std::string& s) { return v_suite == s || v_suite == "all"; };
            if (want("orthogonality")) reports.push_back(verify_orthogonality(type, v_n));
            if (want("symfunc-identities"))
                reports.push_back(verify_symfunc_identities(v_max, cfg.jobs));
            if (want("restriction")) reports.push_back(verify_restriction(type, v_n, cfg.jobs));
            if (want("induction")) reports.push_back(verify_induction(type, v_n, cfg.jobs));
            if (want("main-consistency"))
                reports.push_back(verify_main_consistency(type, v_n, cfg.jobs));
            if (want("triangularity")) reports.push_back(verify_triangularity(type, v_n, cfg.jobs));
            if (v_suite == "difference" ||
                (v_suite == "all" && type == LieType::D && v_n % 2 == 0))
                reports.push_back(verify_difference_pairing(v_n, cfg.jobs));
            if (v_suite == "green-recursion") reports.push_back(verify_green_recursion(v_max, cfg.jobs));
            if (v_suite == "kostka-recursion")
                reports.push_back(verify_kostka_recursion(v_max, cfg.jobs));
            if (reports.empty()) throw ParseError("unknown suite: " + v_suite);
            return render_reports(cfg, reports, v_verbose);
        }
        if (*scan) {
            const Report r = conjecture_scan(sc_max);
            render_reports(cfg, {r}, false);
            std::cout << (r.all_pass() ? "no counterexamples found\n" : "counterexamples above\n");
            return 0;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
