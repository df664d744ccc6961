#pragma once

#include "wg/pairings.hpp"
#include "wg/partitions.hpp"
#include "wg/poly.hpp"

#include <string>
#include <vector>

namespace wg {

// Values of the zonal spherical functions omega^lambda on the double cosets
// H_rho, together with the dimensions f^{2 lambda}. Rows and columns follow
// the partitions_of(n) order.
struct ZonalTable {
    int n = 0;
    std::vector<Partition> index;
    std::vector<std::vector<Rational>> omega;  // omega[lambda][rho]
    std::vector<BigInt> dim2;                  // f^{2 lambda}

    int find(const Partition& p) const;
    const Rational& value(const Partition& lambda, const Partition& rho) const;
};

inline constexpr int kZonalCap = 7;

// Cached per n. Each omega^lambda_rho is the average of chi^{2 lambda} over
// sigma_rho * H_n, aggregated by cycle type so the character is evaluated
// once per type.
const ZonalTable& zonal_table(int n);

// omega^lambda on the full-cycle coset (n): closed product over the cells
// of lambda other than (1,1); zero exactly when lambda_3 >= 2.
Rational zonal_fullcycle(const Partition& lambda);

// Z_lambda(1^d) = prod over cells (d + 2j - i - 1); monic of degree |lambda|
PolyQ zonal_one_spec(const Partition& lambda);

// s_lambda(1^d) = prod over cells (d + j - i)/hook(i,j)
PolyQ schur_one_spec(const Partition& lambda);

struct ExpansionReport {
    bool ok = true;
    std::string first_failure;
};

// Checks d^{l(mu)} == (2^n n!/(2n)!) * sum_lambda f^{2 lambda} omega^lambda_mu
// Z_lambda(1^d) for every mu of weight n and every supplied integer d.
ExpansionReport power_expansion_check(int n, const std::vector<long>& d_values);

}  // namespace wg
