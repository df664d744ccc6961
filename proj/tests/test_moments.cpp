#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wg/moments.hpp"
#include "wg/verify.hpp"
#include "wg/weingarten.hpp"

#include <vector>

using namespace wg;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

MonomialSpec ms(const std::string& s) { return MonomialSpec::parse(s); }

}  // namespace

TEST_CASE("monomial text form") {
    MonomialSpec spec = ms("1,1;2,2;1,1*;2,2*");
    REQUIRE(spec.entries.size() == 4);
    CHECK(spec.entries[0].row == 1);
    CHECK(spec.entries[2].conj);
    CHECK(spec.str() == "1,1;2,2;1,1*;2,2*");
    CHECK(ms(" 1,2 ; 3,4 ").str() == "1,2;3,4");
    CHECK_THROWS(ms(""));
    CHECK_THROWS(ms("1"));
    CHECK_THROWS(ms("0,1"));
}

TEST_CASE("orthogonal monomial integrals") {
    // no pairing matches the column indices
    for (long d = 2; d <= 8; ++d) {
        CHECK(integrate_orth(ms("1,1;1,1;1,1;1,2"), d) == Rational(0));
        CHECK(integrate_orth(ms("1,1;1,1;1,1;2,2"), d) == Rational(0));
        Rational dd(d);
        CHECK(integrate_orth(ms("1,1;1,1;2,2;2,2"), d) ==
              (dd + 1) / (dd * (dd + 2) * (dd - 1)));
        CHECK(integrate_orth(ms("1,1;1,1;1,1;1,1"), d) == Rational(3) / (dd * (dd + 2)));
    }
    // odd number of factors
    CHECK(integrate_orth(ms("1,1;1,1;1,1"), 4) == Rational(0));
    CHECK(integrate_orth(ms("1,1"), 4) == Rational(0));
    CHECK(integrate_orth(ms("1,1;1,1"), 4) == Rational(BigInt(1), BigInt(4)));
    // indices must fit inside the matrix
    CHECK_THROWS(integrate_orth(ms("3,1;3,1"), 2));
    CHECK_THROWS(integrate_orth(ms("1,1;1,1*"), 3));
    // factor order is irrelevant
    CHECK(integrate_orth(ms("1,2;2,1;1,1;2,2"), 3) == integrate_orth(ms("1,1;1,2;2,1;2,2"), 3));
}

TEST_CASE("odd occurrences kill the integral") {
    // any monomial over rows/columns in {1,2} with an odd count somewhere
    for (long d = 2; d <= 3; ++d) {
        for (int a = 1; a <= 2; ++a) {
            for (int b = 1; b <= 2; ++b) {
                for (int c = 1; c <= 2; ++c) {
                    for (int e = 1; e <= 2; ++e) {
                        MonomialSpec spec;
                        spec.entries = {{a, b, false}, {c, e, false}};
                        Rational v = integrate_orth(spec, d);
                        bool odd_somewhere = (a != c) || (b != e);
                        if (odd_somewhere) {
                            CHECK(v == Rational(0));
                        } else {
                            CHECK(v == Rational(BigInt(1), BigInt(d)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("parity scan over four factors") {
    // exhaustive over rows and columns in {1,2}: the integral vanishes
    // unless every index value appears an even number of times on each side
    const long d = 3;
    for (int mask = 0; mask < 256; ++mask) {
        MonomialSpec spec;
        int rowcount = 0, colcount = 0;
        for (int f = 0; f < 4; ++f) {
            int row = 1 + ((mask >> (2 * f)) & 1);
            int col = 1 + ((mask >> (2 * f + 1)) & 1);
            spec.entries.push_back({row, col, false});
            rowcount += row == 1 ? 1 : 0;
            colcount += col == 1 ? 1 : 0;
        }
        if (rowcount % 2 == 1 || colcount % 2 == 1) {
            CHECK(integrate_orth(spec, d) == Rational(0));
        }
    }
}

TEST_CASE("row and column relabeling invariance") {
    // conjugating by permutation matrices leaves the Haar integral unchanged
    const long d = 3;
    auto relabel = [](const MonomialSpec& spec, const std::vector<int>& rowp,
                      const std::vector<int>& colp) {
        MonomialSpec out = spec;
        for (auto& e : out.entries) {
            e.row = rowp[static_cast<size_t>(e.row - 1)];
            e.col = colp[static_cast<size_t>(e.col - 1)];
        }
        return out;
    };
    std::vector<MonomialSpec> specs{ms("1,1;1,1;2,2;2,2"), ms("1,2;1,2;2,1;2,1"),
                                    ms("1,1;1,1;1,1;1,1;2,3;2,3")};
    std::vector<std::vector<int>> perms{{2, 3, 1}, {3, 1, 2}, {1, 3, 2}};
    for (const auto& spec : specs) {
        Rational base = integrate_orth(spec, d);
        for (const auto& rowp : perms) {
            for (const auto& colp : perms) {
                CHECK(integrate_orth(relabel(spec, rowp, colp), d) == base);
            }
        }
    }
}

TEST_CASE("unitary monomial integrals") {
    for (long d = 1; d <= 6; ++d) {
        CHECK(integrate_unit(ms("1,1;1,1*"), d) == Rational(BigInt(1), BigInt(d)));
    }
    for (long d = 2; d <= 6; ++d) {
        Rational dd(d);
        CHECK(integrate_unit(ms("1,1;2,2;1,1*;2,2*"), d) == Rational(1) / (dd * dd - 1));
        CHECK(integrate_unit(ms("1,1;1,1;1,1*;1,1*"), d) == Rational(2) / (dd * (dd + 1)));
        // oracle: the same values assembled from the 2x2 Weingarten matrix
        RatMatrix w = wg_matrix_oracle(2, Group::unitary, d);
        CHECK(integrate_unit(ms("1,1;2,2;1,1*;2,2*"), d) == w(0, 0));
        CHECK(integrate_unit(ms("1,1;1,1;1,1*;1,1*"), d) ==
              w(0, 0) + w(0, 1) + w(1, 0) + w(1, 1));
    }
    // unbalanced conjugation integrates to zero
    CHECK(integrate_unit(ms("1,1;1,1"), 3) == Rational(0));
    CHECK(integrate_unit(ms("1,1;1,1;1,1*"), 3) == Rational(0));
    // plain diagonal versus anti-diagonal
    CHECK(integrate_unit(ms("1,2;1,2*"), 4) == Rational(BigInt(1), BigInt(4)));
    CHECK(integrate_unit(ms("1,1;2,2*"), 4) == Rational(0));
    CHECK_THROWS(integrate_unit(ms("5,1;5,1*"), 4));
}

TEST_CASE("truncated trace moments") {
    for (int d = 1; d <= 6; ++d) {
        for (int k = 1; k <= d; ++k) {
            CHECK(truncated_trace_moment(1, k, d) == Rational(BigInt(k), BigInt(d)));
        }
    }
    CHECK_THROWS(truncated_trace_moment(2, 3, 2));
    CHECK(trace_power_moment(3, 1, 3) == Rational(0));
    CHECK(trace_power_moment(0, 1, 3) == Rational(1));
    CHECK(trace_power_moment(4, 1, 3) == truncated_trace_moment(2, 1, 3));

    // k = d: the moment collapses to a dimension count
    for (int n = 1; n <= 4; ++n) {
        for (int d = 1; d <= 4; ++d) {
            BigInt expect = 0;
            for (const auto& lambda : partitions_of(n)) {
                if (lambda.length() <= d) expect += dim_f(doubled(lambda));
            }
            CHECK(truncated_trace_moment(n, d, d) == Rational(expect));
        }
    }

    // k = 1 reduces to moments of the single corner entry
    for (int n = 1; n <= 4; ++n) {
        MonomialSpec corner;
        for (int i = 0; i < 2 * n; ++i) corner.entries.push_back({1, 1, false});
        for (int d = 1; d <= 6; ++d) {
            CHECK(truncated_trace_moment(n, 1, d) == integrate_orth(corner, d));
        }
    }

    // the closed sum equals the pairing double sum
    for (int n = 1; n <= 3; ++n) {
        for (int d = 1; d <= 5; ++d) {
            for (int k = 1; k <= d; ++k) {
                CHECK(truncated_trace_moment(n, k, d) == truncated_trace_bruteforce(n, k, d));
            }
        }
    }
    // all entries of the d = 1 Weingarten matrix sum to 1
    CHECK(truncated_trace_bruteforce(2, 1, 1) == Rational(1));
    CHECK(truncated_trace_bruteforce(4, 1, 1) == Rational(1));
    CHECK_THROWS(truncated_trace_bruteforce(5, 1, 1));
}

TEST_CASE("full-cycle numerators") {
    CHECK(full_cycle_poly(1) == PolyQ::constant(Rational(1)));
    CHECK(full_cycle_poly(4) == parse_poly("5d+6"));
    CHECK(full_cycle_poly(7) == parse_poly("132d^2+920d+1824"));
    CHECK(full_cycle_poly(10) == parse_poly("4862d^4+126816d^3+1326016d^2+6598896d+13071744"));

    // and the defining relation itself
    for (int n = 1; n <= 6; ++n) {
        RatFuncQ w = wg_orth_symbolic(P({n}));
        RatFuncQ rebuilt(full_cycle_poly(n).scaled(Rational(n % 2 == 1 ? 1 : -1)),
                         full_cycle_denominator(n));
        CHECK(w == rebuilt);
    }
}

TEST_CASE("full-cycle properties") {
    auto rep6 = full_cycle_properties(6);
    CHECK(rep6.p.degree() == 2);
    CHECK(rep6.p.leading() == Rational(42));
    CHECK(rep6.all_ok());

    auto rep2 = full_cycle_properties(2);
    CHECK(rep2.p.degree() == 0);
    CHECK(rep2.p.leading() == Rational(1));
    CHECK(rep2.all_ok());

    auto rep9 = full_cycle_properties(9);
    CHECK(rep9.p.coeff(0) == Rational(305280));
    CHECK(rep9.all_ok());

    for (int n = 2; n <= 10; ++n) {
        CHECK(full_cycle_properties(n).all_ok());
    }
    CHECK_THROWS(full_cycle_properties(1));
}

TEST_CASE("coefficient positivity survey") {
    auto entries = conjecture_check(12);
    REQUIRE(entries.size() == 12);
    for (const auto& e : entries) {
        CHECK(e.nonnegative_integers);  // holds on every computed instance
    }
    // the known list matches the first ten
    const auto& reference = verify::reference_full_cycle_polys();
    for (size_t i = 0; i < reference.size(); ++i) {
        const PolyQ& p = entries[i].p;
        REQUIRE(p.degree() + 1 == static_cast<int>(reference[i].size()));
        for (size_t k = 0; k < reference[i].size(); ++k) {
            CHECK(p.coeff(static_cast<int>(reference[i].size() - 1 - k)) ==
                  Rational(reference[i][k]));
        }
    }
}

TEST_CASE("leading asymptotics") {
    for (int n = 1; n <= 6; ++n) {
        auto lead = wg_asymptotic_leading(P({n}));
        BigInt expect = catalan(n - 1);
        if (n % 2 == 0) expect = -expect;
        CHECK(lead.coefficient == expect);
        CHECK(lead.exponent == -2 * n + 1);

        auto ones = wg_asymptotic_leading(P(std::vector<int>(static_cast<size_t>(n), 1)));
        CHECK(ones.coefficient == 1);
        CHECK(ones.exponent == -n);
    }
    auto mixed = wg_asymptotic_leading(P({2, 1}));
    CHECK(mixed.coefficient == -1);
    CHECK(mixed.exponent == -4);

    for (int n = 1; n <= 4; ++n) {
        for (const auto& mu : partitions_of(n)) {
            auto lead = wg_asymptotic_leading(mu);
            RatFuncQ w = wg_orth_symbolic(mu);
            CHECK(w.num().degree() - w.den().degree() == lead.exponent);
            CHECK(w.num().leading() / w.den().leading() == Rational(lead.coefficient));
        }
    }
}

TEST_CASE("unitary full cycle closed form") {
    CHECK(wg_unit_fullcycle_symbolic(1) == parse_ratfunc("1/d"));
    CHECK(wg_unit_fullcycle_symbolic(2) == parse_ratfunc("-1/((d-1)d(d+1))"));
    CHECK(wg_unit_fullcycle_symbolic(3) == parse_ratfunc("2/((d-2)(d-1)d(d+1)(d+2))"));
    for (int n = 1; n <= 5; ++n) {
        CHECK(wg_unit_symbolic(P({n})) == wg_unit_fullcycle_symbolic(n));
        for (long d = n; d <= n + 3; ++d) {
            CHECK(wg_unit_fullcycle(n, d) == wg_unit(P({n}), d));
        }
    }
    CHECK_THROWS(wg_unit_fullcycle(3, 2));
}
