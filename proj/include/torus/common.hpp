#pragma once
// Shared error types, numeric helpers and the thread-capped parallel loop.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace torus {

struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure carrying the best error estimate achieved before giving up.
struct numeric_error : std::runtime_error {
    double achieved;
    numeric_error(const std::string& msg, double achieved_estimate)
        : std::runtime_error(msg + " (achieved error estimate " +
                             std::to_string(achieved_estimate) + ")"),
          achieved(achieved_estimate) {}
};

inline constexpr double pi = 3.14159265358979323846264338327950288;

inline int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

inline bool is_inf(double p) { return p == std::numeric_limits<double>::infinity(); }
inline double inv(double p) { return is_inf(p) ? 0.0 : 1.0 / p; }

// Thread budget: TORUS_LEIBNIZ_THREADS caps the fan-out of independent cases.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("TORUS_LEIBNIZ_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : std::min(hw, 8u);
}

// Index-parallel loop. Results must be written to preallocated per-index
// slots so the outcome is independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    unsigned workers = std::min<std::size_t>(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Locale-independent float formatting for CSV / report bodies.
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace torus
