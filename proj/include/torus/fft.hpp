#pragma once
// FFTW-backed transforms between physical samples and Fourier coefficients.
//
// forward: coeffs[k] = (1/N_total) sum_j samples[j] e^{-2 pi i j.k/N}
// inverse: samples[j] = sum_k coeffs[k] e^{+2 pi i j.k/N}
//
// Plans are cached per thread (FFTW's planner is not thread-safe; creation
// is serialized by a global mutex, execution uses per-thread buffers).

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "torus/common.hpp"

namespace torus {
namespace fft_detail {

inline std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct Plan {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t total = 0;

    Plan(const std::vector<int>& dims, int sign) {
        total = 1;
        for (int d : dims) total *= static_cast<std::size_t>(d);
        buf = fftw_alloc_complex(total);
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf,
                             sign, FFTW_ESTIMATE);
    }
    ~Plan() {
        if (plan) {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fftw_destroy_plan(plan);
        }
        if (buf) fftw_free(buf);
    }
    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;
};

inline Plan& cached_plan(const std::vector<int>& dims, int sign) {
    thread_local std::map<std::pair<std::vector<int>, int>, std::unique_ptr<Plan>> cache;
    auto key = std::make_pair(dims, sign);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Plan>(dims, sign)).first;
    return *it->second;
}

inline void execute(const std::vector<int>& dims, int sign,
                    const std::complex<double>* in, std::complex<double>* out,
                    double scale) {
    Plan& p = cached_plan(dims, sign);
    std::memcpy(p.buf, in, p.total * sizeof(fftw_complex));
    fftw_execute(p.plan);
    auto* b = reinterpret_cast<std::complex<double>*>(p.buf);
    for (std::size_t i = 0; i < p.total; ++i) out[i] = b[i] * scale;
}

}  // namespace fft_detail

inline std::vector<std::complex<double>> fft_forward(const std::vector<int>& dims,
                                                     const std::vector<std::complex<double>>& samples) {
    std::vector<std::complex<double>> out(samples.size());
    fft_detail::execute(dims, FFTW_FORWARD, samples.data(), out.data(),
                        1.0 / static_cast<double>(samples.size()));
    return out;
}

inline std::vector<std::complex<double>> fft_inverse(const std::vector<int>& dims,
                                                     const std::vector<std::complex<double>>& coeffs) {
    std::vector<std::complex<double>> out(coeffs.size());
    fft_detail::execute(dims, FFTW_BACKWARD, coeffs.data(), out.data(), 1.0);
    return out;
}

}  // namespace torus
