#pragma once

#include "wg/matrix.hpp"
#include "wg/pairings.hpp"
#include "wg/partitions.hpp"
#include "wg/poly.hpp"

#include <optional>
#include <variant>

namespace wg {

enum class Group { orthogonal, unitary };

// Orthogonal Weingarten function of coset type mu at integer dimension d:
// (2^n n!/(2n)!) * sum over lambda of weight n with l(lambda) <= d of
// f^{2 lambda} omega^lambda_mu / Z_lambda(1^d).
Rational wg_orth(const Partition& mu, long d);

// Same sum over all lambda, with d an indeterminate. Agrees with the
// integer-d value wherever d >= n.
RatFuncQ wg_orth_symbolic(const Partition& mu);

// Unitary analogue: (1/n!^2) sum of f^lambda^2 chi^lambda_mu / s_lambda(1^d).
Rational wg_unit(const Partition& mu, long d);
RatFuncQ wg_unit_symbolic(const Partition& mu);

// One exact Weingarten value plus the inputs that produced it.
struct WgValue {
    Group group = Group::orthogonal;
    Partition coset;
    std::optional<long> d;                   // nullopt = symbolic
    std::variant<Rational, RatFuncQ> exact;

    int n() const { return coset.weight(); }
};
WgValue wg_value(Group group, const Partition& mu, std::optional<long> d);

inline constexpr int kGramCapOrth = 6;
inline constexpr int kGramCapUnit = 7;
inline constexpr int kPinvCapOrth = 5;
inline constexpr int kPinvCapUnit = 6;

// Gram matrix d^{loop(m, n)} over enumerate_pairings(n) (orthogonal) or
// unitary_pairings(n) order.
RatMatrix gram(int n, Group group, long d);
PolyMatrix gram_symbolic(int n, Group group);

// exact pseudo-inverse of the Gram matrix
RatMatrix wg_matrix_oracle(int n, Group group, long d);

// the same matrix assembled entrywise from the coset-type formula
RatMatrix wg_matrix_formula(int n, Group group, long d);

Rational wg_entry_via_formula(const PairPartition& a, const PairPartition& b, long d);

// Symbolic Weingarten matrix written over one common denominator:
// W(i,j) = num(i,j)/den.
struct SymbolicWgMatrix {
    PolyMatrix num;
    PolyQ den;
};
SymbolicWgMatrix wg_matrix_symbolic(int n, Group group);

}  // namespace wg
