#include "wg/weingarten.hpp"

#include "wg/parallel.hpp"
#include "wg/zonal.hpp"

#include <map>
#include <stdexcept>

namespace wg {

namespace {

Rational orth_prefactor(int n) {
    // 2^n n!/(2n)! == 1/(2n-1)!!
    return Rational(BigInt(1), double_factorial(2 * n - 1));
}

}  // namespace

Rational wg_orth(const Partition& mu, long d) {
    if (d <= 0) throw std::invalid_argument("dimension must be positive");
    const int n = mu.weight();
    if (n < 1) throw std::invalid_argument("coset type must have weight >= 1");
    const ZonalTable& table = zonal_table(n);
    const int mu_idx = table.find(mu);
    Rational sum(0);
    for (size_t l = 0; l < table.index.size(); ++l) {
        if (table.index[l].length() > d) continue;
        Rational z = zonal_one_spec(table.index[l]).eval(Rational(d));
        sum += Rational(table.dim2[l]) * table.omega[l][static_cast<size_t>(mu_idx)] / z;
    }
    return orth_prefactor(n) * sum;
}

RatFuncQ wg_orth_symbolic(const Partition& mu) {
    const int n = mu.weight();
    if (n < 1) throw std::invalid_argument("coset type must have weight >= 1");
    const ZonalTable& table = zonal_table(n);
    const int mu_idx = table.find(mu);
    RatFuncQ sum;
    for (size_t l = 0; l < table.index.size(); ++l) {
        Rational c = Rational(table.dim2[l]) * table.omega[l][static_cast<size_t>(mu_idx)];
        if (c.is_zero()) continue;
        sum = sum + RatFuncQ(PolyQ::constant(c), zonal_one_spec(table.index[l]));
    }
    return sum * RatFuncQ(orth_prefactor(n));
}

Rational wg_unit(const Partition& mu, long d) {
    if (d <= 0) throw std::invalid_argument("dimension must be positive");
    const int n = mu.weight();
    if (n < 1) throw std::invalid_argument("coset type must have weight >= 1");
    Rational sum(0);
    for (const Partition& lambda : partitions_of(n)) {
        if (lambda.length() > d) continue;
        BigInt f = dim_f(lambda);
        BigInt chi = mn_character(lambda, mu);
        if (chi == 0) continue;
        Rational s = schur_one_spec(lambda).eval(Rational(d));
        sum += Rational(f * f * chi) / s;
    }
    BigInt nfact = factorial(n);
    return sum / Rational(nfact * nfact);
}

RatFuncQ wg_unit_symbolic(const Partition& mu) {
    const int n = mu.weight();
    if (n < 1) throw std::invalid_argument("coset type must have weight >= 1");
    RatFuncQ sum;
    for (const Partition& lambda : partitions_of(n)) {
        BigInt f = dim_f(lambda);
        BigInt chi = mn_character(lambda, mu);
        if (chi == 0) continue;
        sum = sum + RatFuncQ(PolyQ::constant(Rational(f * f * chi)), schur_one_spec(lambda));
    }
    BigInt nfact = factorial(n);
    return sum * RatFuncQ(Rational(BigInt(1), nfact * nfact));
}

WgValue wg_value(Group group, const Partition& mu, std::optional<long> d) {
    WgValue v;
    v.group = group;
    v.coset = mu;
    v.d = d;
    if (d.has_value()) {
        v.exact = group == Group::orthogonal ? wg_orth(mu, *d) : wg_unit(mu, *d);
    } else {
        v.exact = group == Group::orthogonal ? wg_orth_symbolic(mu) : wg_unit_symbolic(mu);
    }
    return v;
}

namespace {

std::vector<PairPartition> pairing_basis(int n, Group group) {
    return group == Group::orthogonal ? enumerate_pairings(n) : unitary_pairings(n);
}

void check_gram_cap(int n, Group group) {
    if (n < 1) throw std::invalid_argument("gram matrix requires n >= 1");
    int cap = group == Group::orthogonal ? kGramCapOrth : kGramCapUnit;
    if (n > cap) throw std::invalid_argument("gram matrix size cap exceeded");
}

// coset type of a^{-1} b, reduced to the symmetric group on n points in the
// unitary case
Partition relative_type(const PairPartition& a, const PairPartition& b, Group group) {
    if (group == Group::unitary) {
        return unitary_to_sn(a).inverse().compose(unitary_to_sn(b)).cycle_type();
    }
    return coset_type(a.to_perm().inverse().compose(b.to_perm()));
}

}  // namespace

RatMatrix gram(int n, Group group, long d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    check_gram_cap(n, group);
    const auto basis = pairing_basis(n, group);
    const int m = static_cast<int>(basis.size());
    RatMatrix g(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            BigInt w;
            mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d),
                          static_cast<unsigned long>(loops(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)])));
            g(i, j) = Rational(w);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

PolyMatrix gram_symbolic(int n, Group group) {
    check_gram_cap(n, group);
    const auto basis = pairing_basis(n, group);
    const int m = static_cast<int>(basis.size());
    PolyMatrix g(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            g(i, j) = PolyQ::monomial(Rational(1), loops(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]));
            g(j, i) = g(i, j);
        }
    }
    return g;
}

RatMatrix wg_matrix_oracle(int n, Group group, long d) {
    int cap = group == Group::orthogonal ? kPinvCapOrth : kPinvCapUnit;
    if (n > cap) throw std::invalid_argument("pseudo-inverse size cap exceeded");
    return pseudo_inverse(gram(n, group, d));
}

Rational wg_entry_via_formula(const PairPartition& a, const PairPartition& b, long d) {
    if (a.points() != b.points()) throw std::invalid_argument("pairing size mismatch");
    return wg_orth(coset_type(a.to_perm().inverse().compose(b.to_perm())), d);
}

RatMatrix wg_matrix_formula(int n, Group group, long d) {
    check_gram_cap(n, group);
    const auto basis = pairing_basis(n, group);
    const int m = static_cast<int>(basis.size());
    std::map<Partition, Rational> per_type;
    RatMatrix w(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Partition type = relative_type(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], group);
            auto it = per_type.find(type);
            if (it == per_type.end()) {
                Rational value = group == Group::orthogonal ? wg_orth(type, d) : wg_unit(type, d);
                it = per_type.emplace(std::move(type), std::move(value)).first;
            }
            w(i, j) = it->second;
            w(j, i) = w(i, j);
        }
    }
    return w;
}

SymbolicWgMatrix wg_matrix_symbolic(int n, Group group) {
    check_gram_cap(n, group);
    const auto basis = pairing_basis(n, group);
    const int m = static_cast<int>(basis.size());

    std::map<Partition, RatFuncQ> per_type;
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Partition type = relative_type(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], group);
            if (!per_type.count(type)) {
                per_type.emplace(type, group == Group::orthogonal ? wg_orth_symbolic(type)
                                                                  : wg_unit_symbolic(type));
            }
        }
    }

    PolyQ common = PolyQ::constant(Rational(1));
    for (const auto& [type, value] : per_type) {
        common = lcm(common, value.den());
    }

    SymbolicWgMatrix out;
    out.den = common;
    out.num = PolyMatrix(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Partition type = relative_type(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], group);
            const RatFuncQ& v = per_type.at(type);
            auto dr = common.divrem(v.den());
            out.num(i, j) = v.num() * dr.quot;  // den divides the lcm exactly
            out.num(j, i) = out.num(i, j);
        }
    }
    return out;
}

}  // namespace wg
