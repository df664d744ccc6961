#pragma once

#include "wg/moments.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace wg {

// Standard normal stream: mt19937_64 uniforms through the Box-Muller
// transform. Both steps are pinned by the standard, so a seed reproduces the
// same stream on any platform.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}
    double next();
    std::complex<double> next_complex();  // independent N(0,1) real and imaginary parts

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;

    double uniform01();  // (0, 1]
};

struct RealMatrix {
    int d = 0;
    std::vector<double> a;  // row-major
    double& at(int i, int j) { return a[static_cast<size_t>(i) * d + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * d + j]; }
};

struct ComplexMatrix {
    int d = 0;
    std::vector<std::complex<double>> a;
    std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i) * d + j]; }
    std::complex<double> at(int i, int j) const { return a[static_cast<size_t>(i) * d + j]; }
};

// Haar-distributed orthogonal matrix: Householder QR of a Gaussian matrix
// with the R diagonal forced positive.
RealMatrix sample_haar_orth(int d, GaussianStream& g);
RealMatrix sample_haar_orth(int d, std::uint64_t seed);

// Haar-distributed unitary matrix; the R diagonal is forced positive real.
ComplexMatrix sample_haar_unit(int d, GaussianStream& g);
ComplexMatrix sample_haar_unit(int d, std::uint64_t seed);

struct SampleEstimate {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
};

// Empirical mean of the monomial over Haar samples. Sampling is chunked
// (fixed chunk size) with the chunk c generator seeded by
// splitmix64(seed ^ (c+1)*0x9E3779B97F4A7C15); chunk results merge in chunk
// order, so estimates are bit-identical for a given seed regardless of the
// worker count.
SampleEstimate estimate_monomial(const MonomialSpec& spec, Group group, int d, long samples,
                                 std::uint64_t seed);

}  // namespace wg
