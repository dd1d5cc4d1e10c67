#include "pilotshift/fft.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <string>
#include <utility>

#include "pilotshift/error.hpp"

namespace pilotshift {

bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

FftPlan::FftPlan(std::size_t n) : n_(n) {
    if (!is_power_of_two(n)) {
        throw ConfigError("FFT size " + std::to_string(n) + " is not a power of two");
    }
    const int bits = std::countr_zero(n);
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (int b = 0; b < bits; ++b) {
            r |= ((i >> b) & 1u) << (bits - 1 - b);
        }
        bitrev_[i] = r;
    }
    twiddles_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        twiddles_[k] = Complex(std::cos(angle), std::sin(angle));
    }
}

void FftPlan::forward(std::span<Complex> data) const { transform(data, false); }

void FftPlan::inverse(std::span<Complex> data) const { transform(data, true); }

void FftPlan::transform(std::span<Complex> data, bool inverse) const {
    if (data.size() != n_) {
        throw InputError("FFT plan of size " + std::to_string(n_) + " applied to " +
                         std::to_string(data.size()) + " samples");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t j = bitrev_[i];
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n_ / len;
        for (std::size_t start = 0; start < n_; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                Complex w = twiddles_[k * stride];
                if (inverse) w = std::conj(w);
                const Complex t = data[start + k + half] * w;
                const Complex u = data[start + k];
                data[start + k] = u + t;
                data[start + k + half] = u - t;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
    for (auto& v : data) v *= scale;
}

const FftPlan& plan_for(std::size_t n) {
    thread_local std::map<std::size_t, std::unique_ptr<FftPlan>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::make_unique<FftPlan>(n)).first;
    }
    return *it->second;
}

void fft_inplace(std::span<Complex> data) { plan_for(data.size()).forward(data); }

void ifft_inplace(std::span<Complex> data) { plan_for(data.size()).inverse(data); }

}  // namespace pilotshift
