#include "stripmhd/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace stripmhd {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution on distinct
// plans and buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct FftEngine::Impl {
    int nx, ny, mx;
    fftw_complex* buf_grid;    // nx * ny
    fftw_complex* buf_pad;     // mx * ny
    fftw_plan plan_grid_bwd;   // k -> x on the unpadded grid
    fftw_plan plan_pad_bwd;    // k -> x on the padded grid
    fftw_plan plan_pad_fwd;    // x -> k on the padded grid

    Impl(int nx_, int ny_) : nx(nx_), ny(ny_), mx(3 * nx_ / 2) {
        buf_grid = fftw_alloc_complex(static_cast<size_t>(nx) * ny);
        buf_pad = fftw_alloc_complex(static_cast<size_t>(mx) * ny);
        std::lock_guard<std::mutex> lock(planner_mutex());
        // Transforms run over the k index (stride ny) for all ny levels at once.
        plan_grid_bwd = fftw_plan_many_dft(1, &nx, ny, buf_grid, nullptr, ny, 1,
                                           buf_grid, nullptr, ny, 1, FFTW_BACKWARD,
                                           FFTW_ESTIMATE);
        plan_pad_bwd = fftw_plan_many_dft(1, &mx, ny, buf_pad, nullptr, ny, 1,
                                          buf_pad, nullptr, ny, 1, FFTW_BACKWARD,
                                          FFTW_ESTIMATE);
        plan_pad_fwd = fftw_plan_many_dft(1, &mx, ny, buf_pad, nullptr, ny, 1,
                                          buf_pad, nullptr, ny, 1, FFTW_FORWARD,
                                          FFTW_ESTIMATE);
    }

    ~Impl() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan_grid_bwd);
        fftw_destroy_plan(plan_pad_bwd);
        fftw_destroy_plan(plan_pad_fwd);
        fftw_free(buf_grid);
        fftw_free(buf_pad);
    }

    // Scatter grid spectrum into the padded buffer (positive k low, negative
    // k at the tail, Nyquist dropped), zero-filled in between.
    void load_padded(const SpectralField& f) {
        std::memset(buf_pad, 0, sizeof(fftw_complex) * static_cast<size_t>(mx) * ny);
        const int half = nx / 2;
        for (int k = 0; k < half; ++k) {
            const cplx* src = f.col(k);
            fftw_complex* dst = buf_pad + static_cast<size_t>(k) * ny;
            for (int j = 0; j < ny; ++j) {
                dst[j][0] = src[j].real();
                dst[j][1] = src[j].imag();
            }
        }
        for (int k = half + 1; k < nx; ++k) {
            const cplx* src = f.col(k);
            fftw_complex* dst = buf_pad + static_cast<size_t>(k - nx + mx) * ny;
            for (int j = 0; j < ny; ++j) {
                dst[j][0] = src[j].real();
                dst[j][1] = src[j].imag();
            }
        }
    }
};

FftEngine::FftEngine(const GridSpec& grid)
    : grid_(grid), impl_(std::make_unique<Impl>(grid.nx, grid.ny)) {}

FftEngine::~FftEngine() = default;

int FftEngine::padded_nx() const { return impl_->mx; }

PhysField FftEngine::to_physical_padded(const SpectralField& f) {
    impl_->load_padded(f);
    fftw_execute(impl_->plan_pad_bwd);
    PhysField p(impl_->mx, impl_->ny);
    const size_t n = static_cast<size_t>(impl_->mx) * impl_->ny;
    for (size_t i = 0; i < n; ++i) p.v[i] = impl_->buf_pad[i][0];
    return p;
}

SpectralField FftEngine::to_spectral_truncated(const PhysField& p) {
    const int mx = impl_->mx, ny = impl_->ny, nx = impl_->nx;
    const size_t n = static_cast<size_t>(mx) * ny;
    for (size_t i = 0; i < n; ++i) {
        impl_->buf_pad[i][0] = p.v[i];
        impl_->buf_pad[i][1] = 0.0;
    }
    fftw_execute(impl_->plan_pad_fwd);
    SpectralField f(grid_);
    const double scale = 1.0 / mx;
    const int half = nx / 2;
    for (int k = 0; k < half; ++k) {
        const fftw_complex* src = impl_->buf_pad + static_cast<size_t>(k) * ny;
        cplx* dst = f.col(k);
        for (int j = 0; j < ny; ++j) dst[j] = cplx{src[j][0] * scale, src[j][1] * scale};
    }
    for (int k = half + 1; k < nx; ++k) {
        const fftw_complex* src = impl_->buf_pad + static_cast<size_t>(k - nx + mx) * ny;
        cplx* dst = f.col(k);
        for (int j = 0; j < ny; ++j) dst[j] = cplx{src[j][0] * scale, src[j][1] * scale};
    }
    return f;
}

std::vector<double> FftEngine::to_physical_unpadded(const SpectralField& f) {
    const int nx = impl_->nx, ny = impl_->ny;
    const size_t n = static_cast<size_t>(nx) * ny;
    for (int k = 0; k < nx; ++k) {
        const cplx* src = f.col(k);
        fftw_complex* dst = impl_->buf_grid + static_cast<size_t>(k) * ny;
        for (int j = 0; j < ny; ++j) {
            dst[j][0] = src[j].real();
            dst[j][1] = src[j].imag();
        }
    }
    fftw_execute(impl_->plan_grid_bwd);
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = impl_->buf_grid[i][0];
    return out;
}

SpectralField FftEngine::multiply_dealiased(const SpectralField& f, const SpectralField& g) {
    PhysField pf = to_physical_padded(f);
    PhysField pg = to_physical_padded(g);
    const size_t n = pf.v.size();
    for (size_t i = 0; i < n; ++i) pf.v[i] *= pg.v[i];
    return to_spectral_truncated(pf);
}

}  // namespace stripmhd
