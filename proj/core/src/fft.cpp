#include "nlslab/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace nlslab::fft {

namespace {

// FFTW planning is not thread-safe; plan execution is safe on the arrays the
// plan was created with. Each thread keeps its own plans and scratch buffer.
std::mutex planner_mutex;

struct Engine {
    int n;
    fftw_complex* buf;
    fftw_plan fwd;
    fftw_plan inv;

    explicit Engine(int n_) : n(n_) {
        std::lock_guard<std::mutex> lock(planner_mutex);
        buf = fftw_alloc_complex(n);
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        inv = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Engine() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
        fftw_free(buf);
    }
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;
};

Engine& engine_for(int n) {
    thread_local std::map<int, std::unique_ptr<Engine>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<Engine>(n)).first;
    return *it->second;
}

}  // namespace

std::vector<Complex> forward(const Field& u) {
    Engine& e = engine_for(u.grid.n);
    std::memcpy(e.buf, u.v.data(), sizeof(Complex) * u.grid.n);
    fftw_execute(e.fwd);
    std::vector<Complex> out(u.grid.n);
    std::memcpy(out.data(), e.buf, sizeof(Complex) * u.grid.n);
    return out;
}

Field inverse(const Grid& g, const std::vector<Complex>& spec) {
    Engine& e = engine_for(g.n);
    std::memcpy(e.buf, spec.data(), sizeof(Complex) * g.n);
    fftw_execute(e.inv);
    Field out(g);
    const double scale = 1.0 / g.n;
    auto* b = reinterpret_cast<Complex*>(e.buf);
    for (int j = 0; j < g.n; ++j) out.v[j] = b[j] * scale;
    return out;
}

}  // namespace nlslab::fft
