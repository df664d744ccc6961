#include "wg/cli.hpp"

#include "wg/matrix.hpp"
#include "wg/moments.hpp"
#include "wg/montecarlo.hpp"
#include "wg/serialize.hpp"
#include "wg/verify.hpp"
#include "wg/weingarten.hpp"
#include "wg/zonal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

namespace wg {

using nlohmann::json;

json poly_to_json(const PolyQ& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) {
        if (c.is_integer() && c.num().fits_slong_p()) {
            arr.push_back(c.num().get_si());
        } else {
            arr.push_back(c.str());
        }
    }
    return arr;
}

PolyQ poly_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& v : j) {
        if (v.is_number_integer()) {
            coeffs.push_back(Rational(static_cast<long>(v.get<long long>())));
        } else {
            coeffs.push_back(Rational::parse(v.get<std::string>()));
        }
    }
    return PolyQ(std::move(coeffs));
}

json ratfunc_to_json(const RatFuncQ& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFuncQ ratfunc_from_json(const json& j) {
    return RatFuncQ(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

namespace {

Group parse_group(const std::string& name) {
    if (name == "orth" || name == "orthogonal") return Group::orthogonal;
    if (name == "unit" || name == "unitary") return Group::unitary;
    throw CLI::ValidationError("--group", "expected orth or unit");
}

std::string group_tag(Group g) {
    return g == Group::orthogonal ? "orth" : "unit";
}

std::string wg_label(Group g, const std::string& coset, std::optional<long> d) {
    std::string dim = d ? std::to_string(*d) : "d";
    return std::string("Wg^") + (g == Group::orthogonal ? "O" : "U") + "((" + coset + ")," + dim + ")";
}

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Options {
    bool json_output = false;
};

int cmd_wg(std::ostream& out, const Options& opt, const std::string& group_name,
           const std::string& coset, std::optional<long> d, bool symbolic) {
    Group group = parse_group(group_name);
    Partition mu = Partition::parse(coset);
    if (symbolic == d.has_value()) {
        throw CLI::ValidationError("wg", "pass exactly one of --d and --symbolic");
    }
    WgValue value = wg_value(group, mu, d);
    if (opt.json_output) {
        json j{{"group", group_tag(group)}, {"coset", coset}, {"n", value.n()}};
        if (d) {
            j["d"] = *d;
            j["value"] = std::get<Rational>(value.exact).str();
        } else {
            j["symbolic"] = true;
            j["value"] = ratfunc_to_json(std::get<RatFuncQ>(value.exact));
        }
        out << j.dump() << "\n";
    } else if (d) {
        out << std::get<Rational>(value.exact).str() << "\n";
    } else {
        out << pretty(std::get<RatFuncQ>(value.exact)) << "\n";
    }
    return 0;
}

int cmd_table(std::ostream& out, const Options& opt, const std::string& group_name, int n,
              std::optional<long> d) {
    Group group = parse_group(group_name);
    json rows = json::array();
    for (const Partition& mu : partitions_of(n)) {
        if (opt.json_output) {
            json row{{"coset", mu.str()}};
            if (d) {
                row["value"] = (group == Group::orthogonal ? wg_orth(mu, *d) : wg_unit(mu, *d)).str();
            } else {
                row["value"] = ratfunc_to_json(group == Group::orthogonal ? wg_orth_symbolic(mu)
                                                                          : wg_unit_symbolic(mu));
            }
            rows.push_back(std::move(row));
        } else {
            out << wg_label(group, mu.str(), d) << " = ";
            if (d) {
                out << (group == Group::orthogonal ? wg_orth(mu, *d) : wg_unit(mu, *d)).str();
            } else {
                out << pretty(group == Group::orthogonal ? wg_orth_symbolic(mu)
                                                         : wg_unit_symbolic(mu));
            }
            out << "\n";
        }
    }
    if (opt.json_output) {
        out << json{{"group", group_tag(group)}, {"n", n}, {"values", rows}}.dump() << "\n";
    }
    return 0;
}

int cmd_integrate(std::ostream& out, const Options& opt, const std::string& group_name, long d,
                  const std::string& entries) {
    Group group = parse_group(group_name);
    MonomialSpec spec = MonomialSpec::parse(entries);
    Rational value = group == Group::orthogonal ? integrate_orth(spec, d) : integrate_unit(spec, d);
    if (opt.json_output) {
        out << json{{"group", group_tag(group)},
                    {"d", d},
                    {"entries", spec.str()},
                    {"value", value.str()}}
                   .dump()
            << "\n";
    } else {
        out << value.str() << "\n";
    }
    return 0;
}

int cmd_truncated(std::ostream& out, const Options& opt, int n, int k, int d) {
    Rational value = truncated_trace_moment(n, k, d);
    if (opt.json_output) {
        out << json{{"n", n}, {"k", k}, {"d", d}, {"value", value.str()}}.dump() << "\n";
    } else {
        out << value.str() << "\n";
    }
    return 0;
}

int cmd_fullcycle(std::ostream& out, const Options& opt, int n, bool check) {
    PolyQ p = full_cycle_poly(n);
    bool ok = true;
    json j{{"n", n}, {"coefficients", poly_to_json(p)}};
    std::string props;
    if (check) {
        bool nonneg = conjecture_check(n).back().nonnegative_integers;
        j["nonnegative_integer_coefficients"] = nonneg;
        ok = ok && nonneg;
        if (n >= 2) {
            auto rep = full_cycle_properties(n);
            j["degree_ok"] = rep.degree_ok;
            j["leading_catalan_ok"] = rep.leading_ok;
            j["constant_term_ok"] = rep.constant_ok;
            ok = ok && rep.all_ok();
            props = std::string("degree ") + (rep.degree_ok ? "ok" : "FAIL") + ", leading " +
                    (rep.leading_ok ? "ok" : "FAIL") + ", constant " +
                    (rep.constant_ok ? "ok" : "FAIL") + ", coefficients " +
                    (nonneg ? "nonnegative integers" : "NOT nonnegative integers");
        } else {
            props = std::string("coefficients ") +
                    (nonneg ? "nonnegative integers" : "NOT nonnegative integers");
        }
    }
    if (opt.json_output) {
        out << j.dump() << "\n";
    } else {
        std::string coeffs;
        for (int k = p.degree(); k >= 0; --k) {
            if (!coeffs.empty()) coeffs += ",";
            coeffs += p.coeff(k).str();
        }
        out << coeffs << "\n";
        out << "P_" << n << "(d) = " << p.str() << "\n";
        if (check) out << props << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_gram(std::ostream& out, const Options& opt, const std::string& group_name, int n, long d,
             bool oracle) {
    Group group = parse_group(group_name);
    RatMatrix g = gram(n, group, d);
    bool ok = true;
    json j{{"group", group_tag(group)}, {"n", n}, {"d", d}, {"gram", matrix_to_json(g)}};
    if (oracle) {
        RatMatrix w = wg_matrix_oracle(n, group, d);
        ok = w == wg_matrix_formula(n, group, d);
        j["weingarten"] = matrix_to_json(w);
        j["oracle_matches_formula"] = ok;
    }
    if (opt.json_output) {
        out << j.dump() << "\n";
    } else {
        for (int i = 0; i < g.rows(); ++i) {
            for (int c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(i, c).str();
            out << "\n";
        }
        if (oracle) {
            out << "pseudo-inverse matches formula: " << (ok ? "yes" : "NO") << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_zonal_table(std::ostream& out, const Options& opt, int n) {
    const ZonalTable& table = zonal_table(n);
    if (opt.json_output) {
        json parts = json::array();
        json dims = json::array();
        json omega = json::array();
        for (size_t i = 0; i < table.index.size(); ++i) {
            parts.push_back(table.index[i].str());
            dims.push_back(table.dim2[i].get_str());
            json row = json::array();
            for (const auto& v : table.omega[i]) row.push_back(v.str());
            omega.push_back(std::move(row));
        }
        out << json{{"n", n}, {"partitions", parts}, {"dims", dims}, {"omega", omega}}.dump()
            << "\n";
        return 0;
    }
    out << "rho:";
    for (const auto& rho : table.index) out << " (" << rho.str() << ")";
    out << "\n";
    for (size_t l = 0; l < table.index.size(); ++l) {
        out << "omega^(" << table.index[l].str() << "), f^2l=" << table.dim2[l].get_str() << ":";
        for (const auto& v : table.omega[l]) out << " " << v.str();
        out << "\n";
    }
    return 0;
}

int cmd_mc(std::ostream& out, const std::string& group_name, long d, const std::string& entries,
           long samples, std::uint64_t seed) {
    Group group = parse_group(group_name);
    MonomialSpec spec = MonomialSpec::parse(entries);
    SampleEstimate est = estimate_monomial(spec, group, static_cast<int>(d), samples, seed);
    json j{{"mean", est.mean},
           {"stderr", est.stderr_of_mean},
           {"samples", est.samples},
           {"seed", est.seed}};
    // exact value only where the pairing enumeration stays small
    size_t cap = group == Group::orthogonal ? 10 : 12;
    if (spec.entries.size() <= cap) {
        Rational exact =
            group == Group::orthogonal ? integrate_orth(spec, d) : integrate_unit(spec, d);
        j["exact"] = exact.str();
        if (est.stderr_of_mean > 0.0) {
            j["zscore"] = (est.mean - exact.to_double()) / est.stderr_of_mean;
        }
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_verify(std::ostream& out, const Options& opt, const std::string& suite, int nmax) {
    std::vector<verify::Check> checks;
    if (suite == "identities") {
        checks = verify::identities_suite(nmax);
    } else if (suite == "table") {
        checks = verify::table_suite(nmax);
    } else if (suite == "oracle") {
        checks = verify::oracle_suite(nmax);
    } else {
        throw CLI::ValidationError("--suite", "expected identities, table, or oracle");
    }
    bool all = verify::all_pass(checks);
    if (opt.json_output) {
        json items = json::array();
        for (const auto& c : checks) {
            json item{{"name", c.name}, {"pass", c.pass}};
            if (!c.pass) item["detail"] = c.detail;
            items.push_back(std::move(item));
        }
        out << json{{"suite", suite}, {"nmax", nmax}, {"pass", all}, {"checks", items}}.dump()
            << "\n";
    } else {
        for (const auto& c : checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.pass && !c.detail.empty()) out << ": " << c.detail;
            out << "\n";
        }
        out << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Weingarten calculus for the orthogonal and unitary groups"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_output, "machine-readable output");
    app.footer("WG_THREADS caps internal parallelism.");

    // wg
    std::string group_name, coset;
    std::optional<long> dim;
    bool symbolic = false;
    auto* wg_cmd = app.add_subcommand("wg", "one Weingarten value by coset type");
    wg_cmd->add_option("--group", group_name, "orth or unit")->required();
    wg_cmd->add_option("--coset", coset, "coset type, e.g. \"2,1\"")->required();
    wg_cmd->add_option("--d", dim, "integer dimension");
    wg_cmd->add_flag("--symbolic", symbolic, "treat the dimension as an indeterminate");

    // table
    std::string table_group = "orth";
    int table_n = 0;
    std::optional<long> table_d;
    bool table_symbolic = false;
    auto* table_cmd = app.add_subcommand("table", "all values of one weight");
    table_cmd->add_option("--group", table_group, "orth or unit");
    table_cmd->add_option("--n", table_n, "weight of the coset types")->required();
    table_cmd->add_option("--d", table_d, "integer dimension");
    table_cmd->add_flag("--symbolic", table_symbolic, "symbolic values (default)");

    // integrate
    std::string int_group, int_entries;
    long int_d = 0;
    auto* int_cmd = app.add_subcommand("integrate", "exact Haar integral of a matrix-entry monomial");
    int_cmd->add_option("--group", int_group, "orth or unit")->required();
    int_cmd->add_option("--d", int_d, "dimension")->required();
    int_cmd->add_option("--entries", int_entries, "monomial, e.g. \"1,1;2,2;1,1*;2,2*\"")->required();

    // truncated
    int tr_n = 0, tr_k = 0, tr_d = 0;
    auto* tr_cmd = app.add_subcommand("truncated", "2n-th moment of a truncated trace");
    tr_cmd->add_option("--n", tr_n, "half the moment order")->required();
    tr_cmd->add_option("--k", tr_k, "truncation size")->required();
    tr_cmd->add_option("--d", tr_d, "dimension")->required();

    // fullcycle
    int fc_n = 0;
    bool fc_check = false;
    auto* fc_cmd = app.add_subcommand("fullcycle", "full-cycle numerator polynomial P_n");
    fc_cmd->add_option("--n", fc_n, "cycle length")->required();
    fc_cmd->add_flag("--check", fc_check, "also check degree, leading and constant terms");

    // gram
    std::string gram_group = "orth";
    int gram_n = 0;
    long gram_d = 0;
    bool gram_oracle = false;
    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix over the pairing basis");
    gram_cmd->add_option("--group", gram_group, "orth or unit");
    gram_cmd->add_option("--n", gram_n, "number of pairs")->required();
    gram_cmd->add_option("--d", gram_d, "dimension")->required();
    gram_cmd->add_flag("--oracle", gram_oracle, "compare the pseudo-inverse with the formula");

    // zonal-table
    int zt_n = 0;
    auto* zt_cmd = app.add_subcommand("zonal-table", "zonal spherical function values");
    zt_cmd->add_option("--n", zt_n, "weight")->required();

    // mc
    std::string mc_group, mc_entries;
    long mc_d = 0, mc_samples = 100000;
    std::uint64_t mc_seed = 1;
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of a monomial integral");
    mc_cmd->add_option("--group", mc_group, "orth or unit")->required();
    mc_cmd->add_option("--d", mc_d, "dimension")->required();
    mc_cmd->add_option("--entries", mc_entries, "monomial")->required();
    mc_cmd->add_option("--samples", mc_samples, "sample count");
    mc_cmd->add_option("--seed", mc_seed, "random seed");

    // verify
    std::string vf_suite;
    int vf_nmax = 4;
    auto* vf_cmd = app.add_subcommand("verify", "run an identity battery");
    vf_cmd->add_option("--suite", vf_suite, "identities, table, or oracle")->required();
    vf_cmd->add_option("--nmax", vf_nmax, "largest weight to check");

    // let a trailing --json reach the global flag
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (wg_cmd->parsed()) return cmd_wg(out, opt, group_name, coset, dim, symbolic);
        if (table_cmd->parsed()) {
            return cmd_table(out, opt, table_group, table_n,
                             table_symbolic ? std::nullopt : table_d);
        }
        if (int_cmd->parsed()) return cmd_integrate(out, opt, int_group, int_d, int_entries);
        if (tr_cmd->parsed()) return cmd_truncated(out, opt, tr_n, tr_k, tr_d);
        if (fc_cmd->parsed()) return cmd_fullcycle(out, opt, fc_n, fc_check);
        if (gram_cmd->parsed()) return cmd_gram(out, opt, gram_group, gram_n, gram_d, gram_oracle);
        if (zt_cmd->parsed()) return cmd_zonal_table(out, opt, zt_n);
        if (mc_cmd->parsed()) return cmd_mc(out, mc_group, mc_d, mc_entries, mc_samples, mc_seed);
        if (vf_cmd->parsed()) return cmd_verify(out, opt, vf_suite, vf_nmax);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace wg
