#include "wg/montecarlo.hpp"

#include "wg/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wg {

double GaussianStream::uniform01() {
    // 53-bit mantissa, shifted into (0, 1]
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
}

double GaussianStream::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::complex<double> GaussianStream::next_complex() {
    double re = next();
    double im = next();
    return {re, im};
}

RealMatrix sample_haar_orth(int d, GaussianStream& g) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    RealMatrix a{d, std::vector<double>(static_cast<size_t>(d) * d)};
    for (auto& x : a.a) x = g.next();

    RealMatrix q{d, std::vector<double>(static_cast<size_t>(d) * d, 0.0)};
    for (int i = 0; i < d; ++i) q.at(i, i) = 1.0;

    std::vector<double> v(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        double norm2 = 0.0;
        for (int i = k; i < d; ++i) norm2 += a.at(i, k) * a.at(i, k);
        double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;
        double alpha = a.at(k, k) >= 0.0 ? -norm : norm;
        for (int i = k; i < d; ++i) v[static_cast<size_t>(i)] = a.at(i, k);
        v[static_cast<size_t>(k)] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k; i < d; ++i) vnorm2 += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
        if (vnorm2 == 0.0) continue;
        double scale = 2.0 / vnorm2;
        for (int j = k; j < d; ++j) {
            double c = 0.0;
            for (int i = k; i < d; ++i) c += v[static_cast<size_t>(i)] * a.at(i, j);
            c *= scale;
            for (int i = k; i < d; ++i) a.at(i, j) -= c * v[static_cast<size_t>(i)];
        }
        for (int r = 0; r < d; ++r) {
            double c = 0.0;
            for (int i = k; i < d; ++i) c += q.at(r, i) * v[static_cast<size_t>(i)];
            c *= scale;
            for (int i = k; i < d; ++i) q.at(r, i) -= c * v[static_cast<size_t>(i)];
        }
    }
    // positive R diagonal makes the factorization unique and the sample Haar
    for (int k = 0; k < d; ++k) {
        if (a.at(k, k) < 0.0) {
            for (int r = 0; r < d; ++r) q.at(r, k) = -q.at(r, k);
        }
    }
    return q;
}

RealMatrix sample_haar_orth(int d, std::uint64_t seed) {
    GaussianStream g(seed);
    return sample_haar_orth(d, g);
}

ComplexMatrix sample_haar_unit(int d, GaussianStream& g) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    using C = std::complex<double>;
    ComplexMatrix a{d, std::vector<C>(static_cast<size_t>(d) * d)};
    for (auto& x : a.a) x = g.next_complex();

    ComplexMatrix q{d, std::vector<C>(static_cast<size_t>(d) * d, C(0.0, 0.0))};
    for (int i = 0; i < d; ++i) q.at(i, i) = C(1.0, 0.0);

    std::vector<C> v(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        double norm2 = 0.0;
        for (int i = k; i < d; ++i) norm2 += std::norm(a.at(i, k));
        double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;
        C x0 = a.at(k, k);
        C phase = std::abs(x0) == 0.0 ? C(1.0, 0.0) : x0 / std::abs(x0);
        C alpha = -phase * norm;
        for (int i = k; i < d; ++i) v[static_cast<size_t>(i)] = a.at(i, k);
        v[static_cast<size_t>(k)] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k; i < d; ++i) vnorm2 += std::norm(v[static_cast<size_t>(i)]);
        if (vnorm2 == 0.0) continue;
        double scale = 2.0 / vnorm2;
        for (int j = k; j < d; ++j) {
            C c(0.0, 0.0);
            for (int i = k; i < d; ++i) c += std::conj(v[static_cast<size_t>(i)]) * a.at(i, j);
            c *= scale;
            for (int i = k; i < d; ++i) a.at(i, j) -= c * v[static_cast<size_t>(i)];
        }
        for (int r = 0; r < d; ++r) {
            C c(0.0, 0.0);
            for (int i = k; i < d; ++i) c += q.at(r, i) * v[static_cast<size_t>(i)];
            c *= scale;
            for (int i = k; i < d; ++i) q.at(r, i) -= c * std::conj(v[static_cast<size_t>(i)]);
        }
    }
    // unit-modulus normalization of the R diagonal
    for (int k = 0; k < d; ++k) {
        C rkk = a.at(k, k);
        double m = std::abs(rkk);
        if (m == 0.0) continue;
        C phase = rkk / m;
        for (int r = 0; r < d; ++r) q.at(r, k) *= phase;
    }
    return q;
}

ComplexMatrix sample_haar_unit(int d, std::uint64_t seed) {
    GaussianStream g(seed);
    return sample_haar_unit(d, g);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr long kChunk = 1 << 16;

struct ChunkStats {
    double sum = 0.0;
    double sumsq = 0.0;
};

}  // namespace

SampleEstimate estimate_monomial(const MonomialSpec& spec, Group group, int d, long samples,
                                 std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    for (const auto& e : spec.entries) {
        if (e.row < 1 || e.col < 1 || e.row > d || e.col > d) {
            throw std::out_of_range("matrix entry index outside [1, d]");
        }
        if (group == Group::orthogonal && e.conj) {
            throw std::invalid_argument("orthogonal integrand cannot be conjugated");
        }
    }

    const long chunks = (samples + kChunk - 1) / kChunk;
    std::vector<ChunkStats> stats(static_cast<size_t>(chunks));

    parallel_for(static_cast<int>(chunks), [&](int c) {
        std::uint64_t chunk_seed =
            splitmix64(seed ^ (static_cast<std::uint64_t>(c) + 1) * 0x9E3779B97F4A7C15ULL);
        GaussianStream g(chunk_seed);
        long begin = static_cast<long>(c) * kChunk;
        long count = std::min(kChunk, samples - begin);
        ChunkStats& s = stats[static_cast<size_t>(c)];
        if (group == Group::orthogonal) {
            for (long i = 0; i < count; ++i) {
                RealMatrix m = sample_haar_orth(d, g);
                double value = 1.0;
                for (const auto& e : spec.entries) value *= m.at(e.row - 1, e.col - 1);
                s.sum += value;
                s.sumsq += value * value;
            }
        } else {
            for (long i = 0; i < count; ++i) {
                ComplexMatrix m = sample_haar_unit(d, g);
                std::complex<double> value(1.0, 0.0);
                for (const auto& e : spec.entries) {
                    std::complex<double> entry = m.at(e.row - 1, e.col - 1);
                    value *= e.conj ? std::conj(entry) : entry;
                }
                double re = value.real();
                s.sum += re;
                s.sumsq += re * re;
            }
        }
    });

    double sum = 0.0, sumsq = 0.0;
    for (const auto& s : stats) {
        sum += s.sum;
        sumsq += s.sumsq;
    }
    SampleEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.mean = sum / static_cast<double>(samples);
    double var = (sumsq - sum * sum / static_cast<double>(samples)) / static_cast<double>(samples - 1);
    if (var < 0.0) var = 0.0;
    est.stderr_of_mean = std::sqrt(var / static_cast<double>(samples));
    return est;
}

}  // namespace wg
