#include "subdamp/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace subdamp {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

SpectralWorkspace::SpectralWorkspace(std::size_t n, double length)
    : n_(n), length_(length) {
  if (!is_power_of_two(n))
    throw std::invalid_argument(
        "spectral workspace: grid size must be a power of two");
  if (!(length > 0.0))
    throw std::invalid_argument("spectral workspace: length must be > 0");
  fftw_complex* buf = fftw_alloc_complex(n);
  if (buf == nullptr) throw std::bad_alloc();
  buffer_ = buf;
  plan_forward_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD,
                                   FFTW_ESTIMATE);
  plan_backward_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                    FFTW_BACKWARD, FFTW_ESTIMATE);
  if (plan_forward_ == nullptr || plan_backward_ == nullptr) {
    fftw_free(buf);
    throw std::runtime_error("spectral workspace: FFTW plan creation failed");
  }
}

SpectralWorkspace::~SpectralWorkspace() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_backward_));
  fftw_free(static_cast<fftw_complex*>(buffer_));
}

double SpectralWorkspace::xi(std::size_t m) const {
  const auto n = static_cast<long long>(n_);
  auto signed_m = static_cast<long long>(m);
  if (signed_m >= n / 2) signed_m -= n;
  const double two_pi = 2.0 * std::acos(-1.0);
  return two_pi * static_cast<double>(signed_m) / length_;
}

void SpectralWorkspace::apply_symbol(
    std::vector<std::complex<double>>& values,
    const std::vector<std::complex<double>>& symbol) {
  if (values.size() != n_ || symbol.size() != n_)
    throw std::invalid_argument("apply_symbol: size mismatch with workspace");
  auto* buf = static_cast<fftw_complex*>(buffer_);
  for (std::size_t j = 0; j < n_; ++j) {
    buf[j][0] = values[j].real();
    buf[j][1] = values[j].imag();
  }
  fftw_execute(static_cast<fftw_plan>(plan_forward_));
  for (std::size_t m = 0; m < n_; ++m) {
    const std::complex<double> c(buf[m][0], buf[m][1]);
    const std::complex<double> s = symbol[m] * c;
    buf[m][0] = s.real();
    buf[m][1] = s.imag();
  }
  fftw_execute(static_cast<fftw_plan>(plan_backward_));
  const double inv_n = 1.0 / static_cast<double>(n_);
  for (std::size_t j = 0; j < n_; ++j)
    values[j] = std::complex<double>(buf[j][0] * inv_n, buf[j][1] * inv_n);
}

void diffusion_step(RealField& field, SpectralWorkspace& ws, double mu,
                    double dt) {
  if (field.grid.topology != Topology::periodic)
    throw std::invalid_argument("diffusion_step: periodic fields only");
  if (field.values.size() != ws.size())
    throw std::invalid_argument("diffusion_step: field/workspace size mismatch");
  std::vector<std::complex<double>> symbol(ws.size());
  for (std::size_t m = 0; m < ws.size(); ++m) {
    const double x = ws.xi(m);
    symbol[m] = std::exp(-mu * x * x * dt);
  }
  std::vector<std::complex<double>> work(field.values.begin(),
                                         field.values.end());
  ws.apply_symbol(work, symbol);
  for (std::size_t j = 0; j < field.values.size(); ++j)
    field.values[j] = work[j].real();
  field.time += dt;
}

void dispersion_step(ComplexField& field, SpectralWorkspace& ws, double dt) {
  if (field.grid.topology != Topology::periodic)
    throw std::invalid_argument("dispersion_step: periodic fields only");
  if (field.values.size() != ws.size())
    throw std::invalid_argument(
        "dispersion_step: field/workspace size mismatch");
  std::vector<std::complex<double>> symbol(ws.size());
  const std::complex<double> minus_i(0.0, -1.0);
  for (std::size_t m = 0; m < ws.size(); ++m) {
    const double x = ws.xi(m);
    symbol[m] = std::exp(minus_i * (x * x * dt));
  }
  ws.apply_symbol(field.values, symbol);
  field.time += dt;
}

}  // namespace subdamp
