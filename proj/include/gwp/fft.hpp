// Thin RAII wrapper around FFTW's 1-D complex transforms plus the FFT
// wavenumber layout used by the spectral operators.

#pragma once

#include <algorithm>
#include <complex>
#include <mutex>
#include <numbers>
#include <span>
#include <vector>

#include <fftw3.h>

#include "gwp/core.hpp"

namespace gwp {

namespace detail {

// FFTW plan creation/destruction is not thread-safe; execution is.
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

class Fft {
  public:
    explicit Fft(int n) : n_(n) {
        if (n < 1) throw InvalidGrid("FFT size must be positive");
        buf_ = fftw_alloc_complex(static_cast<std::size_t>(n));
        std::lock_guard lock(detail::fftw_planner_mutex());
        fwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    ~Fft() {
        std::lock_guard lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(buf_);
    }

    int size() const { return n_; }

    void forward(std::span<std::complex<double>> a) const { run(fwd_, a, 1.0); }

    // Inverse transform including the 1/n normalization, so
    // inverse(forward(x)) == x up to rounding.
    void inverse(std::span<std::complex<double>> a) const { run(bwd_, a, 1.0 / n_); }

  private:
    void run(fftw_plan plan, std::span<std::complex<double>> a, double scale) const {
        if (static_cast<int>(a.size()) != n_) throw InvalidGrid("FFT size mismatch");
        auto* b = reinterpret_cast<std::complex<double>*>(buf_);
        std::copy(a.begin(), a.end(), b);
        fftw_execute(plan);
        for (int i = 0; i < n_; ++i) a[static_cast<std::size_t>(i)] = scale * b[i];
    }

    int n_;
    fftw_complex* buf_;
    fftw_plan fwd_, bwd_;
};

// Angular wavenumbers in FFT bin order for n samples over a period length:
// k_j = 2 pi j / length for j < n/2, and 2 pi (j - n)/length above.
inline std::vector<double> fft_wavenumbers(int n, double length) {
    std::vector<double> k(static_cast<std::size_t>(n));
    const double dk = 2.0 * std::numbers::pi / length;
    for (int j = 0; j < n; ++j)
        k[static_cast<std::size_t>(j)] = dk * (j < (n + 1) / 2 ? j : j - n);
    return k;
}

}  // namespace gwp
