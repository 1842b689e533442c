#include "subdamp/flux.hpp"

#include <cmath>
#include <stdexcept>

namespace subdamp {

namespace {

double base_flux(const FluxModel& m, double u) {
  switch (m.kind) {
    case FluxKind::linear:
      return m.c * u;
    case FluxKind::burgers:
      return 0.5 * u * u;
    case FluxKind::buckley_leverett: {
      const double d = u * u + m.k * (1.0 - u) * (1.0 - u);
      return u * u / d;
    }
  }
  throw std::logic_error("base_flux: unknown kind");
}

double base_flux_derivative(const FluxModel& m, double u) {
  switch (m.kind) {
    case FluxKind::linear:
      return m.c;
    case FluxKind::burgers:
      return u;
    case FluxKind::buckley_leverett: {
      const double d = u * u + m.k * (1.0 - u) * (1.0 - u);
      return 2.0 * m.k * u * (1.0 - u) / (d * d);
    }
  }
  throw std::logic_error("base_flux_derivative: unknown kind");
}

double base_flux_second_derivative(const FluxModel& m, double u) {
  switch (m.kind) {
    case FluxKind::linear:
      return 0.0;
    case FluxKind::burgers:
      return 1.0;
    case FluxKind::buckley_leverett: {
      // f' = N / D^2 with N = 2k u (1 - u), D = u^2 + k (1 - u)^2, so
      // f'' = (N' D - 2 N D') / D^3.
      const double d = u * u + m.k * (1.0 - u) * (1.0 - u);
      const double n = 2.0 * m.k * u * (1.0 - u);
      const double np = 2.0 * m.k * (1.0 - 2.0 * u);
      const double dp = 2.0 * ((1.0 + m.k) * u - m.k);
      return (np * d - 2.0 * n * dp) / (d * d * d);
    }
  }
  throw std::logic_error("base_flux_second_derivative: unknown kind");
}

}  // namespace

double eval_flux(const FluxModel& flux, double u) {
  // Apply wraps outermost-first by transforming the argument on the way in
  // and the value on the way out.
  double sign_out = 1.0;
  double x = u;
  for (FluxWrap w : flux.wraps) {
    sign_out = -sign_out;
    if (w == FluxWrap::negated) x = -x;
  }
  return sign_out * base_flux(flux, x);
}

double eval_flux_derivative(const FluxModel& flux, double u) {
  // reflected: g'(s) = -f'(s);  negated: g'(s) = f'(-s).
  double sign_out = 1.0;
  double x = u;
  for (FluxWrap w : flux.wraps) {
    if (w == FluxWrap::reflected) {
      sign_out = -sign_out;
    } else {
      x = -x;
    }
  }
  return sign_out * base_flux_derivative(flux, x);
}

double eval_flux_second_derivative(const FluxModel& flux, double u) {
  // reflected: g'' = -f'';  negated: g''(s) = -f''(-s).
  double sign_out = 1.0;
  double x = u;
  for (FluxWrap w : flux.wraps) {
    sign_out = -sign_out;
    if (w == FluxWrap::negated) x = -x;
  }
  return sign_out * base_flux_second_derivative(flux, x);
}

FluxModel parse_flux(const std::string& name, double c, double k) {
  FluxModel m;
  m.c = c;
  m.k = k;
  std::string rest = name;
  for (;;) {
    const auto colon = rest.find(':');
    if (colon == std::string::npos) break;
    const std::string head = rest.substr(0, colon);
    if (head == "reflected")
      m.wraps.push_back(FluxWrap::reflected);
    else if (head == "negated")
      m.wraps.push_back(FluxWrap::negated);
    else
      throw std::invalid_argument("parse_flux: unknown wrapper '" + head + "'");
    rest = rest.substr(colon + 1);
  }
  if (rest == "linear")
    m.kind = FluxKind::linear;
  else if (rest == "burgers")
    m.kind = FluxKind::burgers;
  else if (rest == "buckley_leverett")
    m.kind = FluxKind::buckley_leverett;
  else
    throw std::invalid_argument("parse_flux: unknown flux '" + rest + "'");
  if (m.kind == FluxKind::buckley_leverett && !(m.k > 0.0))
    throw std::invalid_argument("parse_flux: buckley_leverett needs k > 0");
  return m;
}

std::string flux_to_string(const FluxModel& flux) {
  std::string s;
  for (FluxWrap w : flux.wraps)
    s += (w == FluxWrap::reflected) ? "reflected:" : "negated:";
  switch (flux.kind) {
    case FluxKind::linear:
      s += "linear";
      break;
    case FluxKind::burgers:
      s += "burgers";
      break;
    case FluxKind::buckley_leverett:
      s += "buckley_leverett";
      break;
  }
  return s;
}

double max_wave_speed(const FluxModel& flux, const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(eval_flux_derivative(flux, v)));
  return m;
}

}  // namespace subdamp
