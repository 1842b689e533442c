#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "subdamp/grid.hpp"

namespace subdamp {

/** FFT workspace for a periodic grid: owns forward/backward complex-to-complex
 * plans over an internal buffer.  n must be a power of two (keeps transforms
 * exactly reproducible across runs of the same build). */
class SpectralWorkspace {
 public:
  SpectralWorkspace(std::size_t n, double length);
  ~SpectralWorkspace();
  SpectralWorkspace(const SpectralWorkspace&) = delete;
  SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

  std::size_t size() const { return n_; }
  double length() const { return length_; }

  /** Signed wavenumber for bin m: 2*pi*m'/L with m' in [-n/2, n/2). */
  double xi(std::size_t m) const;

  /** In-place multiply each Fourier coefficient by symbol(xi). Values are
   * physical-space samples on input and output. */
  void apply_symbol(std::vector<std::complex<double>>& values,
                    const std::vector<std::complex<double>>& symbol);

 private:
  std::size_t n_;
  double length_;
  void* buffer_;         // fftw_complex[n]
  void* plan_forward_;   // fftw_plan
  void* plan_backward_;  // fftw_plan
};

/** Heat semigroup exp(dt mu d^2/dx^2): multiply mode m by exp(-mu xi^2 dt).
 * Advances field.time by dt. */
void diffusion_step(RealField& field, SpectralWorkspace& ws, double mu,
                    double dt);

/** Free Schroedinger semigroup for i u_t + u_xx = 0: multiply mode m by
 * exp(-i xi^2 dt).  Advances field.time by dt. */
void dispersion_step(ComplexField& field, SpectralWorkspace& ws, double dt);

}  // namespace subdamp
