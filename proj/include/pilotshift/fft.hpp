#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pilotshift {

using Complex = std::complex<double>;

bool is_power_of_two(std::size_t n) noexcept;

/// Precomputed bit-reversal permutation and twiddles for one radix-2 size.
class FftPlan {
public:
    /// Throws ConfigError unless n is a power of two (n >= 1).
    explicit FftPlan(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    /// In-place unitary transform, X_k = 1/sqrt(N) sum x_n e^{-j2pi kn/N}.
    void forward(std::span<Complex> data) const;
    /// In-place unitary inverse, x_n = 1/sqrt(N) sum X_k e^{+j2pi kn/N}.
    void inverse(std::span<Complex> data) const;

private:
    void transform(std::span<Complex> data, bool inverse) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<Complex> twiddles_;  // e^{-j2pi k/N}, k < N/2
};

/// Plan for size n from a per-thread cache.
const FftPlan& plan_for(std::size_t n);

void fft_inplace(std::span<Complex> data);
void ifft_inplace(std::span<Complex> data);

}  // namespace pilotshift
