#include "wg/moments.hpp"

#include "wg/zonal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wg {

MonomialSpec MonomialSpec::parse(const std::string& text) {
    MonomialSpec spec;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(';', pos);
        std::string tok = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        // trim
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(tok.begin());
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
        if (!tok.empty()) {
            Entry e;
            if (tok.back() == '*') {
                e.conj = true;
                tok.pop_back();
            }
            size_t comma = tok.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("monomial entry needs \"i,j\"");
            e.row = std::stoi(tok.substr(0, comma));
            e.col = std::stoi(tok.substr(comma + 1));
            if (e.row < 1 || e.col < 1) throw std::invalid_argument("monomial indices are 1-based");
            spec.entries.push_back(e);
        }
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    if (spec.entries.empty()) throw std::invalid_argument("empty monomial");
    return spec;
}

std::string MonomialSpec::str() const {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(entries[i].row) + "," + std::to_string(entries[i].col);
        if (entries[i].conj) out += "*";
    }
    return out;
}

namespace {

void check_indices(const MonomialSpec& spec, long d) {
    for (const auto& e : spec.entries) {
        if (e.row < 1 || e.col < 1) throw std::out_of_range("matrix entry indices are 1-based");
        if (e.row > d || e.col > d) throw std::out_of_range("matrix entry index exceeds the dimension");
    }
}

// pairings whose blocks join equal values of `idx`
std::vector<const PairPartition*> matching(const std::vector<PairPartition>& all,
                                           const std::vector<int>& idx) {
    std::vector<const PairPartition*> out;
    for (const auto& p : all) {
        bool ok = true;
        for (int b = 0; b < p.pairs() && ok; ++b) {
            int x = p.flat()[static_cast<size_t>(2 * b)];
            int y = p.flat()[static_cast<size_t>(2 * b + 1)];
            ok = idx[static_cast<size_t>(x)] == idx[static_cast<size_t>(y)];
        }
        if (ok) out.push_back(&p);
    }
    return out;
}

Rational pairing_double_sum(const std::vector<PairPartition>& all, const std::vector<int>& rows,
                            const std::vector<int>& cols, Group group, long d) {
    auto ms = matching(all, rows);
    if (ms.empty()) return Rational(0);
    auto ns = matching(all, cols);
    if (ns.empty()) return Rational(0);
    std::map<Partition, Rational> per_type;
    Rational total(0);
    for (const PairPartition* m : ms) {
        for (const PairPartition* n : ns) {
            Partition type;
            if (group == Group::unitary) {
                type = unitary_to_sn(*m).inverse().compose(unitary_to_sn(*n)).cycle_type();
            } else {
                type = coset_type(m->to_perm().inverse().compose(n->to_perm()));
            }
            auto it = per_type.find(type);
            if (it == per_type.end()) {
                Rational v = group == Group::unitary ? wg_unit(type, d) : wg_orth(type, d);
                it = per_type.emplace(std::move(type), std::move(v)).first;
            }
            total += it->second;
        }
    }
    return total;
}

}  // namespace

Rational integrate_orth(const MonomialSpec& spec, long d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    check_indices(spec, d);
    for (const auto& e : spec.entries) {
        if (e.conj) throw std::invalid_argument("orthogonal integrand cannot be conjugated");
    }
    if (spec.entries.size() % 2 != 0) return Rational(0);
    const int n = static_cast<int>(spec.entries.size()) / 2;

    // factor order does not affect the integral; sort for a canonical form
    std::vector<MonomialSpec::Entry> entries = spec.entries;
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    std::vector<int> rows, cols;
    for (const auto& e : entries) {
        rows.push_back(e.row);
        cols.push_back(e.col);
    }
    return pairing_double_sum(enumerate_pairings(n), rows, cols, Group::orthogonal, d);
}

Rational integrate_unit(const MonomialSpec& spec, long d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    check_indices(spec, d);
    std::vector<MonomialSpec::Entry> plain, conj;
    for (const auto& e : spec.entries) {
        (e.conj ? conj : plain).push_back(e);
    }
    // global phase invariance kills unbalanced monomials
    if (plain.size() != conj.size()) return Rational(0);
    const int n = static_cast<int>(plain.size());
    if (n == 0) return Rational(1);

    auto by_index = [](const auto& a, const auto& b) {
        return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    };
    std::sort(plain.begin(), plain.end(), by_index);
    std::sort(conj.begin(), conj.end(), by_index);

    std::vector<int> rows, cols;
    for (const auto& e : plain) {
        rows.push_back(e.row);
        cols.push_back(e.col);
    }
    for (const auto& e : conj) {
        rows.push_back(e.row);
        cols.push_back(e.col);
    }
    return pairing_double_sum(unitary_pairings(n), rows, cols, Group::unitary, d);
}

Rational truncated_trace_moment(int n, int k, int d) {
    if (k < 1 || d < 1) throw std::invalid_argument("k and d must be positive");
    if (k > d) throw std::invalid_argument("truncation requires k <= d");
    if (n < 0) throw std::invalid_argument("moment order must be nonnegative");
    if (n == 0) return Rational(1);
    Rational sum(0);
    for (const Partition& lambda : partitions_of(n)) {
        if (lambda.length() > k) continue;
        PolyQ z = zonal_one_spec(lambda);
        sum += Rational(dim_f(doubled(lambda))) * z.eval(Rational(k)) / z.eval(Rational(d));
    }
    return sum;
}

Rational trace_power_moment(int power, int k, int d) {
    if (power < 0) throw std::invalid_argument("power must be nonnegative");
    if (power % 2 != 0) return Rational(0);
    return truncated_trace_moment(power / 2, k, d);
}

Rational truncated_trace_bruteforce(int n, int k, int d) {
    if (n < 1 || n > 4) throw std::invalid_argument("brute-force double sum supports 1 <= n <= 4");
    if (k < 1 || k > d) throw std::invalid_argument("truncation requires 1 <= k <= d");
    const auto basis = enumerate_pairings(n);
    std::map<Partition, Rational> wg_cache;
    Rational total(0);
    for (const auto& m : basis) {
        for (const auto& nn : basis) {
            Partition type = coset_type(m.to_perm().inverse().compose(nn.to_perm()));
            auto it = wg_cache.find(type);
            if (it == wg_cache.end()) {
                it = wg_cache.emplace(type, wg_orth(type, d)).first;
            }
            BigInt kl;
            mpz_ui_pow_ui(kl.get_mpz_t(), static_cast<unsigned long>(k),
                          static_cast<unsigned long>(loops(m, nn)));
            total += it->second * Rational(kl);
        }
    }
    return total;
}

PolyQ full_cycle_denominator(int n) {
    PolyQ out = PolyQ::variable();
    for (int j = 1; j <= n - 1; ++j) {
        out = out * PolyQ::linear(Rational(2 * j), Rational(1));
        out = out * PolyQ::linear(Rational(-j), Rational(1));
    }
    for (int k = 1; k <= n / 2 - 1; ++k) {
        out = out * PolyQ::linear(Rational(2 * k - 1), Rational(1));
    }
    return out;
}

namespace {

// Full-cycle orthogonal Weingarten value as a rational function, using the
// closed product for omega^lambda_(n); only lambda with lambda_3 <= 1
// contribute, so this path has no table size cap.
RatFuncQ wg_orth_fullcycle_symbolic(int n) {
    RatFuncQ sum;
    for (const Partition& lambda : partitions_of(n)) {
        if (lambda.part(2) >= 2) continue;
        Rational w = zonal_fullcycle(lambda);
        if (w.is_zero()) continue;
        Rational c = Rational(dim_f(doubled(lambda))) * w;
        sum = sum + RatFuncQ(PolyQ::constant(c), zonal_one_spec(lambda));
    }
    return sum * RatFuncQ(Rational(BigInt(1), double_factorial(2 * n - 1)));
}

}  // namespace

PolyQ full_cycle_poly(int n) {
    if (n < 1) throw std::invalid_argument("full cycle needs n >= 1");
    RatFuncQ w = wg_orth_fullcycle_symbolic(n);
    if (n % 2 == 0) w = -w;  // (-1)^{n-1}
    RatFuncQ p = w * RatFuncQ(full_cycle_denominator(n));
    if (!p.is_polynomial()) {
        throw std::logic_error("full-cycle numerator is not a polynomial over the prescribed denominator");
    }
    return p.num().divrem(p.den()).quot;
}

FullCycleReport full_cycle_properties(int n) {
    if (n < 2) throw std::invalid_argument("property checks need n >= 2");
    FullCycleReport rep;
    rep.n = n;
    rep.p = full_cycle_poly(n);
    rep.degree_ok = rep.p.degree() == n / 2 - 1;
    rep.leading_ok = rep.p.leading() == Rational(catalan(n - 1));

    BigInt dim_sum = 0;
    for (const Partition& lambda : partitions_of(n)) {
        if (lambda.part(2) >= 2) continue;
        dim_sum += dim_f(doubled(lambda));
    }
    BigInt extra = 1;
    if (n % 2 == 1 && n >= 5) {
        extra = double_factorial(n - 4);
    } else if (n % 2 == 0 && n >= 4) {
        extra = double_factorial(n - 3);
    }
    Rational expected = Rational(dim_sum * factorial(n - 1) * extra, double_factorial(2 * n - 1));
    rep.constant_ok = rep.p.coeff(0) == expected;
    return rep;
}

std::vector<ConjectureEntry> conjecture_check(int n_max) {
    if (n_max < 1) throw std::invalid_argument("conjecture check needs n_max >= 1");
    std::vector<ConjectureEntry> out;
    for (int n = 1; n <= n_max; ++n) {
        ConjectureEntry e;
        e.n = n;
        e.p = full_cycle_poly(n);
        e.nonnegative_integers = true;
        for (const Rational& c : e.p.coeffs()) {
            if (!c.is_integer() || c.sign() < 0) {
                e.nonnegative_integers = false;
                break;
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

AsymptoticLeading wg_asymptotic_leading(const Partition& mu) {
    AsymptoticLeading out;
    out.coefficient = 1;
    for (int p : mu.parts()) {
        BigInt c = catalan(p - 1);
        if ((p - 1) % 2 == 1) c = -c;
        out.coefficient *= c;
    }
    out.exponent = -2 * mu.weight() + mu.length();
    return out;
}

RatFuncQ wg_unit_fullcycle_symbolic(int n) {
    if (n < 1) throw std::invalid_argument("full cycle needs n >= 1");
    PolyQ den = PolyQ::constant(Rational(1));
    for (int j = -n + 1; j <= n - 1; ++j) {
        den = den * PolyQ::linear(Rational(-j), Rational(1));
    }
    BigInt c = catalan(n - 1);
    if (n % 2 == 0) c = -c;
    return RatFuncQ(PolyQ::constant(Rational(c)), den);
}

Rational wg_unit_fullcycle(int n, long d) {
    if (d < n) throw std::invalid_argument("closed form needs d >= n");
    return wg_unit_fullcycle_symbolic(n).eval(Rational(d));
}

}  // namespace wg
