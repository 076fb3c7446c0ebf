#include "latomo/filters.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "latomo/threading.hpp"

namespace latomo {

namespace {
constexpr double kPi = std::numbers::pi;

// FFTW planning is not thread safe; executes with new arrays are.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

int next_pow2(int n) {
    int p = 1;
    while (p < n)
        p <<= 1;
    return p;
}
} // namespace

std::complex<double> filter_symbol(const FilterSpec& f, double sigma) {
    switch (f.kind) {
    case FilterSpec::Kind::Fbp:
        return std::abs(sigma) / (4.0 * kPi);
    case FilterSpec::Kind::Lambda:
        return sigma * sigma / (4.0 * kPi);
    case FilterSpec::Kind::Dds:
        return std::complex<double>(0.0, sigma);
    case FilterSpec::Kind::Identity:
        return 1.0;
    }
    return 0.0;
}

std::string to_string(FilterSpec::Kind k) {
    switch (k) {
    case FilterSpec::Kind::Fbp:
        return "fbp";
    case FilterSpec::Kind::Lambda:
        return "lambda";
    case FilterSpec::Kind::Dds:
        return "dds";
    case FilterSpec::Kind::Identity:
        return "identity";
    }
    return "?";
}

FilterSpec::Kind filter_kind_from_string(const std::string& s) {
    if (s == "fbp")
        return FilterSpec::Kind::Fbp;
    if (s == "lambda")
        return FilterSpec::Kind::Lambda;
    if (s == "dds")
        return FilterSpec::Kind::Dds;
    if (s == "identity")
        return FilterSpec::Kind::Identity;
    throw std::invalid_argument("unknown filter kind: " + s);
}

Sinogram apply_filter(const Sinogram& g, const FilterSpec& f, int threads) {
    if (f.kind == FilterSpec::Kind::Identity && f.apodize <= 0.0)
        return g;
    const int n_s = g.grid.n_s;
    const int N = next_pow2(2 * n_s);
    const int n_half = N / 2 + 1;
    const double ds = g.grid.ds();

    // Multiplier at the physical frequency of bin k, including the optional
    // raised-cosine band limit.
    std::vector<std::complex<double>> mult(n_half);
    const double nyquist = kPi / ds;
    for (int k = 0; k < n_half; ++k) {
        double sigma = 2.0 * kPi * k / (N * ds);
        std::complex<double> p = filter_symbol(f, sigma);
        if (f.apodize > 0.0) {
            double edge = f.apodize * nyquist;
            if (sigma > edge) {
                double t = (sigma - edge) / (nyquist - edge);
                p *= 0.5 * (1.0 + std::cos(kPi * std::min(1.0, t)));
            }
        }
        mult[k] = p;
    }

    Sinogram out(g.grid);

    fftw_plan fwd, inv;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        double* rbuf = fftw_alloc_real(N);
        fftw_complex* cbuf = fftw_alloc_complex(n_half);
        fwd = fftw_plan_dft_r2c_1d(N, rbuf, cbuf, FFTW_ESTIMATE);
        inv = fftw_plan_dft_c2r_1d(N, cbuf, rbuf, FFTW_ESTIMATE);
        fftw_free(rbuf);
        fftw_free(cbuf);
    }

    parallel_for(g.grid.n_phi, threads, [&](long long i) {
        double* rbuf = fftw_alloc_real(N);
        fftw_complex* cbuf = fftw_alloc_complex(n_half);
        const double* src = g.row(static_cast<int>(i));
        for (int j = 0; j < n_s; ++j)
            rbuf[j] = src[j];
        for (int j = n_s; j < N; ++j)
            rbuf[j] = 0.0;
        fftw_execute_dft_r2c(fwd, rbuf, cbuf);
        for (int k = 0; k < n_half; ++k) {
            std::complex<double> v(cbuf[k][0], cbuf[k][1]);
            v *= mult[k];
            cbuf[k][0] = v.real();
            cbuf[k][1] = v.imag();
        }
        fftw_execute_dft_c2r(inv, cbuf, rbuf);
        double* dst = out.row(static_cast<int>(i));
        for (int j = 0; j < n_s; ++j)
            dst[j] = rbuf[j] / N;
        fftw_free(rbuf);
        fftw_free(cbuf);
    });

    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
    }
    return out;
}

} // namespace latomo
