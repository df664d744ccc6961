#include "wg/zonal.hpp"

#include "wg/parallel.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace wg {

int ZonalTable::find(const Partition& p) const {
    for (size_t i = 0; i < index.size(); ++i) {
        if (index[i] == p) return static_cast<int>(i);
    }
    throw std::invalid_argument("partition has the wrong weight for this table");
}

const Rational& ZonalTable::value(const Partition& lambda, const Partition& rho) const {
    return omega[static_cast<size_t>(find(lambda))][static_cast<size_t>(find(rho))];
}

namespace {

ZonalTable build_zonal_table(int n) {
    ZonalTable t;
    t.n = n;
    t.index = partitions_of(n);
    const size_t count = t.index.size();
    t.dim2.resize(count);
    for (size_t i = 0; i < count; ++i) t.dim2[i] = dim_f(doubled(t.index[i]));

    const std::vector<Perm> hyper = enumerate_hyperoctahedral(n);
    const BigInt order = BigInt(1) << n;
    const BigInt group_size = order * factorial(n);

    t.omega.assign(count, std::vector<Rational>(count));
    std::vector<std::map<Partition, long>> histograms(count);

    // cycle-type histogram of sigma_rho * H_n, one per coset type
    parallel_for(static_cast<int>(count), [&](int r) {
        auto [m1, m2] = coset_rep_pair(t.index[static_cast<size_t>(r)]);
        Perm sigma = m1.to_perm().inverse().compose(m2.to_perm());
        std::map<Partition, long>& hist = histograms[static_cast<size_t>(r)];
        for (const Perm& zeta : hyper) {
            ++hist[sigma.compose(zeta).cycle_type()];
        }
    });

    parallel_for(static_cast<int>(count), [&](int l) {
        const Partition two_lambda = doubled(t.index[static_cast<size_t>(l)]);
        std::map<Partition, BigInt> char_cache;
        for (size_t r = 0; r < count; ++r) {
            BigInt sum = 0;
            for (const auto& [type, cnt] : histograms[r]) {
                auto it = char_cache.find(type);
                if (it == char_cache.end()) {
                    it = char_cache.emplace(type, mn_character(two_lambda, type)).first;
                }
                sum += it->second * cnt;
            }
            t.omega[static_cast<size_t>(l)][r] = Rational(sum, group_size);
        }
    });
    return t;
}

}  // namespace

const ZonalTable& zonal_table(int n) {
    if (n < 1 || n > kZonalCap) throw std::invalid_argument("zonal table supports 1 <= n <= 7");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ZonalTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::make_unique<ZonalTable>(build_zonal_table(n))).first;
    }
    return *it->second;
}

Rational zonal_fullcycle(const Partition& lambda) {
    const int n = lambda.weight();
    if (n < 1) throw std::invalid_argument("full-cycle value needs weight >= 1");
    BigInt prod = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            if (i == 1 && j == 1) continue;
            prod *= 2 * j - i - 1;
        }
    }
    BigInt denom = (BigInt(1) << (n - 1)) * factorial(n - 1);
    return Rational(prod, denom);
}

PolyQ zonal_one_spec(const Partition& lambda) {
    if (lambda.weight() < 1) throw std::invalid_argument("specialization needs weight >= 1");
    PolyQ out = PolyQ::constant(Rational(1));
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            out = out * PolyQ::linear(Rational(2 * j - i - 1), Rational(1));
        }
    }
    return out;
}

PolyQ schur_one_spec(const Partition& lambda) {
    if (lambda.weight() < 1) throw std::invalid_argument("specialization needs weight >= 1");
    const Partition lc = conjugate(lambda);
    PolyQ out = PolyQ::constant(Rational(1));
    BigInt hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            out = out * PolyQ::linear(Rational(j - i), Rational(1));
            hooks *= lambda.part(i - 1) - j + lc.part(j - 1) - i + 1;
        }
    }
    return out.scaled(Rational(BigInt(1), hooks));
}

ExpansionReport power_expansion_check(int n, const std::vector<long>& d_values) {
    const ZonalTable& table = zonal_table(n);
    const Rational prefactor(BigInt((BigInt(1) << n) * factorial(n)), factorial(2 * n));
    ExpansionReport report;
    for (size_t mu = 0; mu < table.index.size(); ++mu) {
        for (long d : d_values) {
            Rational sum(0);
            for (size_t l = 0; l < table.index.size(); ++l) {
                // Z_lambda(1^d) vanishes exactly when l(lambda) > d
                Rational z = zonal_one_spec(table.index[l]).eval(Rational(d));
                if (z.is_zero()) continue;
                sum += Rational(table.dim2[l]) * table.omega[l][mu] * z;
            }
            Rational lhs(1);
            for (int i = 0; i < table.index[mu].length(); ++i) lhs *= Rational(d);
            if (!(prefactor * sum == lhs)) {
                report.ok = false;
                report.first_failure =
                    "mu=" + table.index[mu].str() + " d=" + std::to_string(d);
                return report;
            }
        }
    }
    return report;
}

}  // namespace wg
