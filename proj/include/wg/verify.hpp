#pragma once

#include "wg/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wg::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // populated on failure
};

bool all_pass(const std::vector<Check>& checks);

// Known closed forms of the orthogonal Weingarten function, one per coset
// type up to weight 6, as (coset, expression) pairs.
const std::vector<std::pair<std::string, std::string>>& reference_orth_table();

// Known full-cycle numerator polynomials P_1..P_10, coefficients descending.
const std::vector<std::vector<long>>& reference_full_cycle_polys();

// symbolic values against the reference closed forms, weights <= nmax
std::vector<Check> table_suite(int nmax);

// formula-assembled Weingarten matrices against exact Gram pseudo-inverses,
// both groups, n <= min(nmax, 4), d in 1..8
std::vector<Check> oracle_suite(int nmax);

// every other exact identity battery (combinatorial invariants, expansion
// and orthogonality identities, pseudo-inverse laws, truncated moments,
// full-cycle and asymptotic properties)
std::vector<Check> identities_suite(int nmax);

}  // namespace wg::verify
