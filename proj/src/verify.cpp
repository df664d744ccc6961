#include "wg/verify.hpp"

#include "wg/matrix.hpp"
#include "wg/moments.hpp"
#include "wg/pairings.hpp"
#include "wg/partitions.hpp"
#include "wg/weingarten.hpp"
#include "wg/zonal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wg::verify {

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::pair<std::string, std::string>>& reference_orth_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"1", "1/d"},
        {"2", "-1/(d(d+2)(d-1))"},
        {"1,1", "(d+1)/(d(d+2)(d-1))"},
        {"3", "2/(d(d+2)(d+4)(d-1)(d-2))"},
        {"2,1", "-1/(d(d+4)(d-1)(d-2))"},
        {"1,1,1", "(d^2+3d-2)/(d(d+2)(d+4)(d-1)(d-2))"},
        {"4", "-(5d+6)/(d(d+1)(d+2)(d+4)(d+6)(d-1)(d-2)(d-3))"},
        {"3,1", "2/((d+1)(d+2)(d+6)(d-1)(d-2)(d-3))"},
        {"2,2", "(d^2+5d+18)/(d(d+1)(d+2)(d+4)(d+6)(d-1)(d-2)(d-3))"},
        {"2,1,1", "(-d^3-6d^2-3d+6)/(d(d+1)(d+2)(d+4)(d+6)(d-1)(d-2)(d-3))"},
        {"1,1,1,1", "(d+3)(d^2+6d+1)/(d(d+1)(d+2)(d+4)(d+6)(d-1)(d-3))"},
        {"5", "2(7d+12)/(d(d+1)(d+2)(d+4)(d+6)(d+8)(d-1)(d-2)(d-3)(d-4))"},
        {"4,1", "(-5d+4)/(d(d+1)(d+2)(d+4)(d+8)(d-1)(d-2)(d-3)(d-4))"},
        {"3,2", "-2(d^2+7d+36)/(d(d+1)(d+2)(d+4)(d+6)(d+8)(d-1)(d-2)(d-3)(d-4))"},
        {"3,1,1", "2(d^3+8d^2+d-36)/(d(d+1)(d+2)(d+4)(d+6)(d+8)(d-1)(d-2)(d-3)(d-4))"},
        {"2,2,1", "(d^2+3d+4)/(d(d+1)(d+2)(d+4)(d+8)(d-1)(d-2)(d-3)(d-4))"},
        {"2,1,1,1", "(-d^4-10d^3-7d^2+86d+24)/(d(d+1)(d+2)(d+4)(d+6)(d+8)(d-1)(d-2)(d-3)(d-4))"},
        {"1,1,1,1,1", "(d^5+11d^4+5d^3-175d^2-122d+408)/(d(d+1)(d+2)(d+4)(d+6)(d+8)(d-1)(d-2)(d-3)(d-4))"},
        {"6", "-2(21d^2+118d+172)/(d(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"5,1", "2(7d^3+12d^2-35d-10)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"4,2",
         "(5d^4+61d^3+406d^2+840d+640)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"4,1,1",
         "(-5d^5-66d^4-131d^3+642d^2+1272d-640)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"3,3",
         "4(d^4+13d^3+117d^2+300d-240)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"3,2,1",
         "2(-d^4-7d^3-24d^2+12d+60)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"3,1,1,1",
         "2(d^6+16d^5+49d^4-200d^3-810d^2-96d+960)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"2,2,2",
         "-(d^5+16d^4+101d^3+394d^2+2408d+3840)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"2,2,1,1",
         "(d^6+17d^5+77d^4+7d^3-446d^2-472d-1280)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
        {"2,1,1,1,1",
         "(-d^5-22d^4-154d^3-316d^2+339d+1146)/(d(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-5))"},
        {"1,1,1,1,1,1",
         "(d^8+19d^7+68d^6-490d^5-2687d^4+1807d^3+17754d^2+6120d-15360)/(d^2(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d-1)(d-2)(d-3)(d-4)(d-5))"},
    };
    return table;
}

const std::vector<std::vector<long>>& reference_full_cycle_polys() {
    static const std::vector<std::vector<long>> polys = {
        {1},
        {1},
        {2},
        {5, 6},
        {14, 24},
        {42, 236, 344},
        {132, 920, 1824},
        {429, 5924, 29116, 51600},
        {1430, 23124, 138352, 305280},
        {4862, 126816, 1326016, 6598896, 13071744},
    };
    return polys;
}

std::vector<Check> table_suite(int nmax) {
    std::vector<Check> out;
    for (const auto& [coset, expr] : reference_orth_table()) {
        Partition mu = Partition::parse(coset);
        if (mu.weight() > nmax) continue;
        Check c;
        c.name = "closed form Wg^O((" + coset + "), d)";
        RatFuncQ expected = parse_ratfunc(expr);
        RatFuncQ got = wg_orth_symbolic(mu);
        c.pass = got == expected;
        if (!c.pass) c.detail = "computed " + pretty(got) + ", expected " + pretty(expected);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Check> oracle_suite(int nmax) {
    std::vector<Check> out;
    for (Group group : {Group::orthogonal, Group::unitary}) {
        const char* gname = group == Group::orthogonal ? "orthogonal" : "unitary";
        for (int n = 1; n <= std::min(nmax, 4); ++n) {
            for (long d = 1; d <= 8; ++d) {
                Check c;
                c.name = std::string(gname) + " formula vs pseudo-inverse, n=" + std::to_string(n) +
                         " d=" + std::to_string(d);
                c.pass = wg_matrix_formula(n, group, d) == wg_matrix_oracle(n, group, d);
                if (!c.pass) c.detail = "entrywise mismatch";
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

namespace {

Check check_pairing_counts(int nmax) {
    Check c{"pairing family sizes", true, ""};
    for (int n = 1; n <= std::min(nmax, 6); ++n) {
        BigInt expect = double_factorial(2 * n - 1);
        if (BigInt(static_cast<long>(enumerate_pairings(n).size())) != expect ||
            BigInt(static_cast<long>(unitary_pairings(n).size())) != factorial(n)) {
            c.pass = false;
            c.detail = "count mismatch at n=" + std::to_string(n);
            return c;
        }
    }
    return c;
}

std::vector<Perm> symmetric_group(int m) {
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Check check_action_invariance(int nmax) {
    Check c{"group action preserves loop counts", true, ""};
    for (int n = 1; n <= std::min(nmax, 3); ++n) {
        auto pairings = enumerate_pairings(n);
        for (const Perm& sigma : symmetric_group(2 * n)) {
            for (const auto& a : pairings) {
                for (const auto& b : pairings) {
                    if (loops(act(sigma, a), act(sigma, b)) != loops(a, b)) {
                        c.pass = false;
                        c.detail = "n=" + std::to_string(n);
                        return c;
                    }
                }
            }
        }
    }
    return c;
}

Check check_coset_decomposition(int nmax) {
    Check c{"pairings represent the left cosets", true, ""};
    for (int n = 1; n <= std::min(nmax, 3); ++n) {
        auto pairings = enumerate_pairings(n);
        auto hyper = enumerate_hyperoctahedral(n);
        std::set<Perm> seen;
        for (const auto& m : pairings) {
            Perm mp = m.to_perm();
            for (const Perm& zeta : hyper) {
                seen.insert(mp.compose(zeta));
            }
        }
        BigInt expect = factorial(2 * n);
        if (BigInt(static_cast<long>(seen.size())) != expect) {
            c.pass = false;
            c.detail = "n=" + std::to_string(n);
            return c;
        }
    }
    return c;
}

Check check_double_coset_sizes(int nmax) {
    Check c{"double coset sizes", true, ""};
    for (int n = 1; n <= std::min(nmax, 4); ++n) {
        std::map<Partition, long> counts;
        for (const Perm& sigma : symmetric_group(2 * n)) {
            ++counts[coset_type(sigma)];
        }
        BigInt hn = (BigInt(1) << n) * factorial(n);
        for (const Partition& rho : partitions_of(n)) {
            BigInt expect = hn * hn / z_mu(doubled(rho));
            if (BigInt(counts[rho]) != expect) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n) + " rho=" + rho.str();
                return c;
            }
        }
    }
    return c;
}

Check check_loops_vs_coset_type(int nmax) {
    Check c{"loop count equals coset-type length", true, ""};
    for (int n = 1; n <= std::min(nmax, 4); ++n) {
        auto pairings = enumerate_pairings(n);
        for (const auto& a : pairings) {
            for (const auto& b : pairings) {
                Partition t = coset_type(a.to_perm().inverse().compose(b.to_perm()));
                if (loops(a, b) != t.length()) {
                    c.pass = false;
                    c.detail = "n=" + std::to_string(n);
                    return c;
                }
            }
        }
    }
    return c;
}

Check check_power_expansion(int nmax) {
    Check c{"power-of-d expansion over zonal specializations", true, ""};
    std::vector<long> ds(12);
    std::iota(ds.begin(), ds.end(), 1);
    for (int n = 1; n <= std::min(nmax, 6); ++n) {
        auto report = power_expansion_check(n, ds);
        if (!report.ok) {
            c.pass = false;
            c.detail = "n=" + std::to_string(n) + " at " + report.first_failure;
            return c;
        }
    }
    return c;
}

Check check_zonal_orthogonality(int nmax) {
    Check c{"zonal orthogonality over pairing pairs", true, ""};
    for (int n = 1; n <= std::min(nmax, 4); ++n) {
        const ZonalTable& table = zonal_table(n);
        auto pairings = enumerate_pairings(n);
        const size_t count = table.index.size();
        // accumulate sum over pairs of omega^a * omega^b for all a, b
        std::vector<std::vector<Rational>> sums(count, std::vector<Rational>(count, Rational(0)));
        for (const auto& m : pairings) {
            for (const auto& nn : pairings) {
                Partition rho = coset_type(m.to_perm().inverse().compose(nn.to_perm()));
                int r = table.find(rho);
                for (size_t a = 0; a < count; ++a) {
                    for (size_t b = a; b < count; ++b) {
                        sums[a][b] += table.omega[a][static_cast<size_t>(r)] *
                                      table.omega[b][static_cast<size_t>(r)];
                    }
                }
            }
        }
        Rational norm = Rational(factorial(2 * n), (BigInt(1) << n) * factorial(n));
        for (size_t a = 0; a < count; ++a) {
            for (size_t b = a; b < count; ++b) {
                Rational expect = a == b ? norm * norm / Rational(table.dim2[a]) : Rational(0);
                if (!(sums[a][b] == expect)) {
                    c.pass = false;
                    c.detail = "n=" + std::to_string(n) + " lambda=" + table.index[a].str() +
                               " mu=" + table.index[b].str();
                    return c;
                }
            }
        }
    }
    return c;
}

Check check_zonal_identity_coset(int nmax) {
    Check c{"zonal value 1 on the identity coset", true, ""};
    Partition ones;
    for (int n = 1; n <= std::min(nmax, kZonalCap); ++n) {
        const ZonalTable& table = zonal_table(n);
        std::vector<int> parts(static_cast<size_t>(n), 1);
        int r = table.find(Partition(parts));
        for (size_t l = 0; l < table.index.size(); ++l) {
            if (!(table.omega[l][static_cast<size_t>(r)] == Rational(1))) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n) + " lambda=" + table.index[l].str();
                return c;
            }
        }
    }
    return c;
}

Check check_zonal_fullcycle(int nmax) {
    Check c{"full-cycle zonal closed product", true, ""};
    for (int n = 1; n <= std::min(nmax, 6); ++n) {
        const ZonalTable& table = zonal_table(n);
        int r = table.find(Partition(std::vector<int>{n}));
        for (size_t l = 0; l < table.index.size(); ++l) {
            if (!(table.omega[l][static_cast<size_t>(r)] == zonal_fullcycle(table.index[l]))) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n) + " lambda=" + table.index[l].str();
                return c;
            }
        }
    }
    return c;
}

Check check_pinv_laws_numeric(int nmax) {
    Check c{"Gram/Weingarten matrix laws at integer d", true, ""};
    for (int n = 1; n <= std::min(nmax, 4); ++n) {
        for (long d = 1; d <= 8; ++d) {
            RatMatrix g = gram(n, Group::orthogonal, d);
            RatMatrix w = wg_matrix_formula(n, Group::orthogonal, d);
            RatMatrix gw = g * w;
            if (!(gw * g == g) || !(w * gw == w)) {
                c.pass = false;
                c.detail = "GWG or WGW failed at n=" + std::to_string(n) + " d=" + std::to_string(d);
                return c;
            }
            bool is_identity = gw == RatMatrix::identity(g.rows());
            if (is_identity != (d >= n)) {
                c.pass = false;
                c.detail = "invertibility threshold failed at n=" + std::to_string(n) +
                           " d=" + std::to_string(d);
                return c;
            }
        }
    }
    return c;
}

Check check_pinv_laws_symbolic(int nmax) {
    Check c{"Gram/Weingarten matrix laws in the indeterminate", true, ""};
    for (Group group : {Group::orthogonal, Group::unitary}) {
        for (int n = 1; n <= std::min(nmax, 3); ++n) {
            PolyMatrix g = gram_symbolic(n, group);
            SymbolicWgMatrix w = wg_matrix_symbolic(n, group);
            const int m = g.rows();
            // W = N/den: G W G == G  <=>  G N G == den * G
            PolyMatrix gng = g * w.num * g;
            PolyMatrix ngn = w.num * g * w.num;
            for (int i = 0; i < m && c.pass; ++i) {
                for (int j = 0; j < m && c.pass; ++j) {
                    if (!(gng(i, j) == g(i, j) * w.den)) {
                        c.pass = false;
                        c.detail = "GWG != G at n=" + std::to_string(n);
                    }
                    // W G W == W  <=>  N G N == den * N
                    if (c.pass && !(ngn(i, j) == w.num(i, j) * w.den)) {
                        c.pass = false;
                        c.detail = "WGW != W at n=" + std::to_string(n);
                    }
                }
            }
            if (!c.pass) return c;
        }
    }
    return c;
}

Check check_truncated_vs_bruteforce(int nmax) {
    Check c{"truncated trace moments vs pairing double sum", true, ""};
    for (int n = 1; n <= std::min(nmax, 4); ++n) {
        for (int d = 1; d <= 6; ++d) {
            for (int k = 1; k <= d; ++k) {
                if (!(truncated_trace_moment(n, k, d) == truncated_trace_bruteforce(n, k, d))) {
                    c.pass = false;
                    c.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " d=" + std::to_string(d);
                    return c;
                }
            }
        }
    }
    return c;
}

Check check_truncated_vs_monomials(int nmax) {
    Check c{"truncated trace moments vs expanded monomials", true, ""};
    for (int n = 1; n <= std::min(nmax, 2); ++n) {
        for (int d = 1; d <= 6; ++d) {
            for (int k = 1; k <= d; ++k) {
                // expand (sum_{a<=k} g_aa)^{2n} and integrate term by term
                Rational total(0);
                std::vector<int> digits(static_cast<size_t>(2 * n), 1);
                while (true) {
                    MonomialSpec spec;
                    for (int v : digits) spec.entries.push_back({v, v, false});
                    total += integrate_orth(spec, d);
                    int pos = 0;
                    while (pos < 2 * n && digits[static_cast<size_t>(pos)] == k) {
                        digits[static_cast<size_t>(pos)] = 1;
                        ++pos;
                    }
                    if (pos == 2 * n) break;
                    ++digits[static_cast<size_t>(pos)];
                }
                if (!(total == truncated_trace_moment(n, k, d))) {
                    c.pass = false;
                    c.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " d=" + std::to_string(d);
                    return c;
                }
            }
        }
    }
    return c;
}

Check check_known_integrals() {
    Check c{"known monomial integrals", true, ""};
    MonomialSpec odd = MonomialSpec::parse("1,1;1,1;1,1;1,2");
    MonomialSpec diag = MonomialSpec::parse("1,1;1,1;2,2;2,2");
    MonomialSpec fourth = MonomialSpec::parse("1,1;1,1;1,1;1,1");
    for (long d = 2; d <= 8; ++d) {
        Rational dd(d);
        bool ok = integrate_orth(odd, d) == Rational(0) &&
                  integrate_orth(diag, d) == (dd + 1) / (dd * (dd + 2) * (dd - 1)) &&
                  integrate_orth(fourth, d) == Rational(3) / (dd * (dd + 2));
        if (!ok) {
            c.pass = false;
            c.detail = "d=" + std::to_string(d);
            return c;
        }
    }
    return c;
}

Check check_full_cycle_polys() {
    Check c{"full-cycle numerator polynomials", true, ""};
    const auto& reference = reference_full_cycle_polys();
    for (size_t i = 0; i < reference.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        PolyQ p = full_cycle_poly(n);
        const auto& expect = reference[i];
        bool ok = p.degree() == static_cast<int>(expect.size()) - 1;
        for (size_t k = 0; ok && k < expect.size(); ++k) {
            ok = p.coeff(static_cast<int>(expect.size() - 1 - k)) == Rational(expect[k]);
        }
        if (!ok) {
            c.pass = false;
            c.detail = "n=" + std::to_string(n) + " got " + p.str();
            return c;
        }
        if (n >= 2) {
            auto rep = full_cycle_properties(n);
            if (!rep.all_ok()) {
                c.pass = false;
                c.detail = "property check failed at n=" + std::to_string(n);
                return c;
            }
        }
    }
    for (const auto& entry : conjecture_check(10)) {
        if (!entry.nonnegative_integers) {
            c.pass = false;
            c.detail = "coefficient condition failed at n=" + std::to_string(entry.n);
            return c;
        }
    }
    return c;
}

Check check_unitary_fullcycle(int nmax) {
    Check c{"unitary full-cycle closed form", true, ""};
    for (int n = 1; n <= std::min(nmax, 6); ++n) {
        if (!(wg_unit_symbolic(Partition(std::vector<int>{n})) == wg_unit_fullcycle_symbolic(n))) {
            c.pass = false;
            c.detail = "n=" + std::to_string(n);
            return c;
        }
    }
    return c;
}

Check check_asymptotics(int nmax) {
    Check c{"leading asymptotics of the orthogonal values", true, ""};
    for (int n = 1; n <= std::min(nmax, 5); ++n) {
        for (const Partition& mu : partitions_of(n)) {
            auto lead = wg_asymptotic_leading(mu);
            RatFuncQ w = wg_orth_symbolic(mu);
            int degdiff = w.num().degree() - w.den().degree();
            Rational ratio = w.num().leading() / w.den().leading();
            if (degdiff != lead.exponent || !(ratio == Rational(lead.coefficient))) {
                c.pass = false;
                c.detail = "mu=" + mu.str();
                return c;
            }
        }
    }
    return c;
}

Check check_d1_value(int nmax) {
    Check c{"dimension-one closed value", true, ""};
    for (int n = 1; n <= std::min(nmax, 6); ++n) {
        Rational expect = Rational((BigInt(1) << n) * factorial(n), factorial(2 * n));
        expect = expect * expect;
        for (const Partition& mu : partitions_of(n)) {
            if (!(wg_orth(mu, 1) == expect)) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n) + " mu=" + mu.str();
                return c;
            }
        }
    }
    return c;
}

}  // namespace

std::vector<Check> identities_suite(int nmax) {
    std::vector<Check> out;
    out.push_back(check_pairing_counts(nmax));
    out.push_back(check_loops_vs_coset_type(nmax));
    out.push_back(check_action_invariance(nmax));
    out.push_back(check_coset_decomposition(nmax));
    out.push_back(check_double_coset_sizes(nmax));
    out.push_back(check_zonal_identity_coset(nmax));
    out.push_back(check_zonal_fullcycle(nmax));
    out.push_back(check_power_expansion(nmax));
    out.push_back(check_zonal_orthogonality(nmax));
    out.push_back(check_pinv_laws_numeric(nmax));
    out.push_back(check_pinv_laws_symbolic(nmax));
    out.push_back(check_truncated_vs_bruteforce(nmax));
    out.push_back(check_truncated_vs_monomials(nmax));
    out.push_back(check_known_integrals());
    out.push_back(check_full_cycle_polys());
    out.push_back(check_unitary_fullcycle(nmax));
    out.push_back(check_asymptotics(nmax));
    out.push_back(check_d1_value(nmax));
    return out;
}

}  // namespace wg::verify
