#pragma once

#include "wg/partitions.hpp"
#include "wg/poly.hpp"
#include "wg/weingarten.hpp"

#include <string>
#include <vector>

namespace wg {

// A product of matrix entries to integrate. Text form: semicolon-separated
// "i,j" pairs, 1-based, with a trailing '*' marking a conjugated factor,
// e.g. "1,1;1,1;2,2;2,2" or "1,1;2,2;1,1*;2,2*".
struct MonomialSpec {
    struct Entry {
        int row = 0;  // 1-based
        int col = 0;
        bool conj = false;
    };
    std::vector<Entry> entries;

    static MonomialSpec parse(const std::string& text);
    std::string str() const;
};

// Haar integral of the monomial over the orthogonal group O(d). Zero for an
// odd number of factors and when no pairing matches the row or the column
// indices. Throws when an index exceeds d.
Rational integrate_orth(const MonomialSpec& spec, long d);

// Unitary analogue; a monomial with unequal numbers of plain and conjugated
// factors integrates to zero.
Rational integrate_unit(const MonomialSpec& spec, long d);

// 2n-th moment of the trace of the upper-left k x k corner of a Haar
// orthogonal matrix: sum over lambda of weight n, l(lambda) <= k, of
// f^{2 lambda} Z_lambda(1^k)/Z_lambda(1^d). Requires k <= d.
Rational truncated_trace_moment(int n, int k, int d);

// any power; odd powers integrate to zero
Rational trace_power_moment(int power, int k, int d);

// the same moment as the double sum over pairings of Wg(m, n) k^{loop(m, n)}
Rational truncated_trace_bruteforce(int n, int k, int d);

// Numerator polynomial of the full-cycle orthogonal Weingarten function over
// the prescribed denominator d * prod_{j<n} (d+2j)(d-j) * prod (d+2k-1):
// Wg^O((n), d) = (-1)^{n-1} P_n(d) / that denominator.
PolyQ full_cycle_poly(int n);

// the denominator named above
PolyQ full_cycle_denominator(int n);

struct FullCycleReport {
    int n = 0;
    PolyQ p;
    bool degree_ok = false;    // deg P_n == floor(n/2) - 1 for n >= 2
    bool leading_ok = false;   // leading coefficient == catalan(n-1)
    bool constant_ok = false;  // P_n(0) matches the closed form
    bool all_ok() const { return degree_ok && leading_ok && constant_ok; }
};
FullCycleReport full_cycle_properties(int n);

struct ConjectureEntry {
    int n = 0;
    PolyQ p;
    bool nonnegative_integers = false;
};
std::vector<ConjectureEntry> conjecture_check(int n_max);

// Leading behavior of Wg^O(mu, d) for large d: coefficient
// prod_i (-1)^{mu_i - 1} c_{mu_i - 1} and exponent -2n + l(mu).
struct AsymptoticLeading {
    BigInt coefficient;
    int exponent = 0;
};
AsymptoticLeading wg_asymptotic_leading(const Partition& mu);

// Closed form of the unitary full-cycle value:
// (-1)^{n-1} c_{n-1} / prod_{-n+1 <= j <= n-1} (d - j).
RatFuncQ wg_unit_fullcycle_symbolic(int n);
Rational wg_unit_fullcycle(int n, long d);  // requires d >= n

}  // namespace wg
