#include "subdamp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "subdamp/numerics.hpp"
#include "subdamp/snapshot.hpp"

namespace subdamp {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void line_error(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("config line " + std::to_string(line_no) + ": " +
                           what);
}

[[noreturn]] void constraint_error(const std::string& what) {
  throw std::runtime_error("config: " + what);
}

Model parse_model(const std::string& v) {
  if (v == "conservation") return Model::conservation;
  if (v == "viscous") return Model::viscous;
  if (v == "wave") return Model::wave;
  if (v == "nls") return Model::nls;
  throw std::invalid_argument("unknown model '" + v + "'");
}

std::string model_to_string(Model m) {
  switch (m) {
    case Model::conservation: return "conservation";
    case Model::viscous: return "viscous";
    case Model::wave: return "wave";
    case Model::nls: return "nls";
  }
  return "?";
}

InitSpec::Kind parse_init_kind(const std::string& v) {
  using K = InitSpec::Kind;
  if (v == "constant") return K::constant;
  if (v == "sine") return K::sine;
  if (v == "plateau") return K::plateau;
  if (v == "riemann") return K::riemann;
  if (v == "soliton") return K::soliton;
  if (v == "file") return K::file;
  throw std::invalid_argument("unknown initial datum '" + v + "'");
}

std::string init_kind_to_string(InitSpec::Kind k) {
  using K = InitSpec::Kind;
  switch (k) {
    case K::constant: return "constant";
    case K::sine: return "sine";
    case K::plateau: return "plateau";
    case K::riemann: return "riemann";
    case K::soliton: return "soliton";
    case K::file: return "file";
  }
  return "?";
}

/** Parse "everywhere" | "none" | "x0,width[;x0,width]*". */
void parse_omega(RunConfig& cfg, const std::string& v) {
  cfg.omega_text = v;
  cfg.damping.everywhere = false;
  cfg.damping.intervals.clear();
  if (v == "everywhere") {
    cfg.damping.everywhere = true;
    return;
  }
  if (v == "none") return;
  std::stringstream ss(v);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const auto comma = part.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("damping.omega interval needs 'x0,width'");
    const double x0 = parse_double_strict(trim(part.substr(0, comma)));
    const double w = parse_double_strict(trim(part.substr(comma + 1)));
    cfg.damping.intervals.emplace_back(x0, w);
  }
  if (cfg.damping.intervals.empty())
    throw std::invalid_argument("damping.omega: empty interval list");
}

std::string omega_to_string(const DampingProfile& p) {
  if (p.everywhere) return "everywhere";
  if (p.intervals.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < p.intervals.size(); ++i) {
    if (i) s += ";";
    s += format_g17(p.intervals[i].first) + "," +
         format_g17(p.intervals[i].second);
  }
  return s;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

long long RunConfig::n_steps() const {
  const long long n = std::llround(t_final / dt);
  if (n < 1 || std::abs(static_cast<double>(n) * dt - t_final) >
                   1e-9 * std::max(1.0, std::abs(t_final)))
    constraint_error("t_final must be a positive integer multiple of dt");
  return n;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) line_error(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) line_error(line_no, "empty key");
    if (value.empty()) line_error(line_no, "empty value for key '" + key + "'");
    if (!seen.insert(key).second)
      line_error(line_no, "duplicate key '" + key + "'");
    try {
      if (key == "model") cfg.model = parse_model(value);
      else if (key == "grid.n") {
        const long long n = parse_int_strict(value);
        if (n < 2) throw std::invalid_argument("grid.n must be >= 2");
        cfg.grid_n = static_cast<std::size_t>(n);
      }
      else if (key == "grid.origin") cfg.origin = parse_double_strict(value);
      else if (key == "grid.length") cfg.length = parse_double_strict(value);
      else if (key == "flux") cfg.flux_name = value;
      else if (key == "flux.c") cfg.flux_c = parse_double_strict(value);
      else if (key == "flux.k") cfg.flux_k = parse_double_strict(value);
      else if (key == "damping.delta") cfg.damping.delta = parse_double_strict(value);
      else if (key == "damping.alpha") cfg.damping.alpha = parse_double_strict(value);
      else if (key == "damping.omega") parse_omega(cfg, value);
      else if (key == "dt") cfg.dt = parse_double_strict(value);
      else if (key == "t_final") cfg.t_final = parse_double_strict(value);
      else if (key == "u0") cfg.init.kind = parse_init_kind(value);
      else if (key == "u0.value") cfg.init.value = parse_double_strict(value);
      else if (key == "u0.mean") cfg.init.mean = parse_double_strict(value);
      else if (key == "u0.amplitude") cfg.init.amplitude = parse_double_strict(value);
      else if (key == "u0.frequency") cfg.init.frequency = parse_double_strict(value);
      else if (key == "u0.left") cfg.init.left = parse_double_strict(value);
      else if (key == "u0.right") cfg.init.right = parse_double_strict(value);
      else if (key == "u0.jump") cfg.init.jump = parse_double_strict(value);
      else if (key == "u0.path") cfg.init.path = value;
      else if (key == "viscous.mu") cfg.mu = parse_double_strict(value);
      else if (key == "wave.c") cfg.wave_c = parse_double_strict(value);
      else if (key == "wave.theta") cfg.wave_theta = parse_double_strict(value);
      else if (key == "wave.zeta") cfg.wave_zeta = parse_double_strict(value);
      else if (key == "nls.q") cfg.nls_q = parse_double_strict(value);
      else if (key == "soliton.c") cfg.soliton_c = parse_double_strict(value);
      else if (key == "soliton.k") cfg.soliton_k = parse_double_strict(value);
      else if (key == "snapshot.every") cfg.snapshot_every = parse_double_strict(value);
      else if (key == "series.every") cfg.series_every = parse_double_strict(value);
      else if (key == "cfl") {
        if (value == "enforce") cfg.cfl = CflPolicy::enforce;
        else if (value == "fixed") cfg.cfl = CflPolicy::fixed;
        else throw std::invalid_argument("cfl must be 'enforce' or 'fixed'");
      }
      else if (key == "splitting.order") {
        if (value == "ABA" || value == "aba") cfg.splitting = SplitOrder::aba;
        else if (value == "BAB" || value == "bab") cfg.splitting = SplitOrder::bab;
        else throw std::invalid_argument("splitting.order must be ABA or BAB");
      }
      else if (key == "advection.substep")
        cfg.advection_substep = parse_double_strict(value);
      else
        line_error(line_no, "unknown key '" + key + "'");
    } catch (const std::invalid_argument& e) {
      line_error(line_no, e.what());
    }
  }

  std::string missing;
  for (const char* req : {"model", "grid.n", "dt", "t_final", "u0"})
    if (!seen.count(req)) missing += std::string(missing.empty() ? "" : ", ") + req;
  if (!missing.empty())
    constraint_error("missing required keys: " + missing);

  validate_config(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const RunConfig& cfg) {
  if (cfg.grid_n < 2) constraint_error("grid.n must be >= 2");
  if (!(cfg.length > 0.0)) constraint_error("grid.length must be positive");
  if (!(cfg.dt > 0.0)) constraint_error("dt must be positive");
  if (!(cfg.t_final > 0.0)) constraint_error("t_final must be positive");
  cfg.n_steps();  // integer-multiple check
  if (!(cfg.damping.alpha > 0.0 && cfg.damping.alpha <= 1.0))
    constraint_error("damping.alpha must lie in (0, 1]");
  if (!(cfg.damping.delta >= 0.0))
    constraint_error("damping.delta must be >= 0");
  for (const auto& [x0, w] : cfg.damping.intervals) {
    if (!(w > 0.0)) constraint_error("damping.omega widths must be positive");
    if (x0 < cfg.origin - 1e-12 ||
        x0 + w > cfg.origin + cfg.length + 1e-12)
      constraint_error("damping.omega must lie inside the domain");
  }
  try {
    (void)parse_flux(cfg.flux_name, cfg.flux_c, cfg.flux_k);
  } catch (const std::invalid_argument& e) {
    constraint_error(e.what());
  }
  if (cfg.model == Model::viscous || cfg.model == Model::nls) {
    if (!is_power_of_two(cfg.grid_n))
      constraint_error("spectral models need grid.n to be a power of two");
  }
  if (cfg.model == Model::nls) {
    if (cfg.init.kind != InitSpec::Kind::soliton &&
        cfg.init.kind != InitSpec::Kind::constant &&
        cfg.init.kind != InitSpec::Kind::file)
      constraint_error("nls supports u0 = soliton | constant | file");
    if (!(cfg.nls_q > 0.0)) constraint_error("nls.q must be positive");
    if (!(cfg.soliton_k > 0.0)) constraint_error("soliton.k must be positive");
  } else if (cfg.init.kind == InitSpec::Kind::soliton) {
    constraint_error("u0 = soliton requires model = nls");
  }
  if (cfg.model == Model::wave) {
    if (!(cfg.wave_c > 0.0)) constraint_error("wave.c must be positive");
    if (!(cfg.wave_zeta > 0.0)) constraint_error("wave.zeta must be positive");
    if (cfg.wave_theta < 0.0 || cfg.wave_theta > 1.0)
      constraint_error("wave.theta must lie in [0, 1]");
  }
  if (!(cfg.mu >= 0.0)) constraint_error("viscous.mu must be >= 0");
  if (cfg.snapshot_every < 0.0) constraint_error("snapshot.every must be >= 0");
  if (cfg.series_every < 0.0) constraint_error("series.every must be >= 0");
  if (cfg.advection_substep < 0.0)
    constraint_error("advection.substep must be >= 0");
  if (cfg.init.kind == InitSpec::Kind::file && cfg.init.path.empty())
    constraint_error("u0 = file requires u0.path");
}

std::string serialize_config(const RunConfig& cfg) {
  std::string s;
  auto put = [&s](const std::string& k, const std::string& v) {
    s += k + " = " + v + "\n";
  };
  put("model", model_to_string(cfg.model));
  put("grid.n", std::to_string(cfg.grid_n));
  put("grid.origin", format_g17(cfg.origin));
  put("grid.length", format_g17(cfg.length));
  put("flux", cfg.flux_name);
  put("flux.c", format_g17(cfg.flux_c));
  put("flux.k", format_g17(cfg.flux_k));
  put("damping.delta", format_g17(cfg.damping.delta));
  put("damping.alpha", format_g17(cfg.damping.alpha));
  put("damping.omega", omega_to_string(cfg.damping));
  put("dt", format_g17(cfg.dt));
  put("t_final", format_g17(cfg.t_final));
  put("u0", init_kind_to_string(cfg.init.kind));
  switch (cfg.init.kind) {
    case InitSpec::Kind::constant:
    case InitSpec::Kind::plateau:
      put("u0.value", format_g17(cfg.init.value));
      break;
    case InitSpec::Kind::sine:
      put("u0.mean", format_g17(cfg.init.mean));
      put("u0.amplitude", format_g17(cfg.init.amplitude));
      put("u0.frequency", format_g17(cfg.init.frequency));
      break;
    case InitSpec::Kind::riemann:
      put("u0.left", format_g17(cfg.init.left));
      put("u0.right", format_g17(cfg.init.right));
      put("u0.jump", format_g17(cfg.init.jump));
      break;
    case InitSpec::Kind::soliton:
      break;  // parameters carried by soliton.c / soliton.k / nls.q
    case InitSpec::Kind::file:
      put("u0.path", cfg.init.path);
      break;
  }
  put("viscous.mu", format_g17(cfg.mu));
  put("wave.c", format_g17(cfg.wave_c));
  put("wave.theta", format_g17(cfg.wave_theta));
  put("wave.zeta", format_g17(cfg.wave_zeta));
  put("nls.q", format_g17(cfg.nls_q));
  put("soliton.c", format_g17(cfg.soliton_c));
  put("soliton.k", format_g17(cfg.soliton_k));
  put("snapshot.every", format_g17(cfg.snapshot_every));
  put("series.every", format_g17(cfg.series_every));
  put("cfl", cfg.cfl == CflPolicy::enforce ? "enforce" : "fixed");
  put("splitting.order", cfg.splitting == SplitOrder::aba ? "ABA" : "BAB");
  put("advection.substep", format_g17(cfg.advection_substep));
  return s;
}

std::string config_hash(const RunConfig& cfg) {
  const std::uint64_t h = fnv1a64(serialize_config(cfg));
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void apply_coarse(RunConfig& cfg, long long n) {
  if (n < 1) constraint_error("coarse factor must be >= 1");
  if (cfg.grid_n % static_cast<std::size_t>(n) != 0)
    constraint_error("coarse factor must divide grid.n");
  cfg.grid_n /= static_cast<std::size_t>(n);
  cfg.dt *= static_cast<double>(n);
}

double plateau_profile(double s) {
  if (s < 0.1) return 1.0 - std::exp(-0.1 / (0.1 - s));
  if (s > 0.9) return 1.0 - std::exp(-0.1 / (s - 0.9));
  return 1.0;
}

std::complex<double> soliton_value(double x, double t, double c, double k,
                                   double q) {
  const double y = x - c * t;
  const double amp = std::sqrt(2.0 * k / q) / std::cosh(std::sqrt(k) * y);
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, 0.5 * c * y)) *
      std::exp(std::complex<double>(0.0, (k + 0.25 * c * c) * t));
  return amp * phase;
}

RealField initial_field(const RunConfig& cfg) {
  const Grid1D grid = cfg.grid();
  const InitSpec& s = cfg.init;
  using K = InitSpec::Kind;
  switch (s.kind) {
    case K::constant:
      return sample_function(grid, [&](double) { return s.value; });
    case K::sine:
      return sample_function(grid, [&](double x) {
        return s.mean + s.amplitude * std::sin(2.0 * M_PI * s.frequency *
                                               (x - cfg.origin) / cfg.length);
      });
    case K::plateau:
      return sample_function(grid, [&](double x) {
        return s.value * plateau_profile((x - cfg.origin) / cfg.length);
      });
    case K::riemann:
      return sample_function(
          grid, [&](double x) { return x < s.jump ? s.left : s.right; });
    case K::file: {
      RealField f = read_snapshot(s.path);
      if (f.grid.n_values() != grid.n_values())
        throw std::runtime_error("u0.path: snapshot size mismatch");
      f.grid = grid;
      f.time = 0.0;
      return f;
    }
    case K::soliton:
      break;
  }
  throw std::runtime_error("initial datum not available for a real field");
}

ComplexField initial_field_complex(const RunConfig& cfg) {
  const Grid1D grid = cfg.grid();
  const InitSpec& s = cfg.init;
  using K = InitSpec::Kind;
  switch (s.kind) {
    case K::constant:
      return sample_function_complex(
          grid, [&](double) { return std::complex<double>(s.value, 0.0); });
    case K::soliton:
      return sample_function_complex(grid, [&](double x) {
        return soliton_value(x, 0.0, cfg.soliton_c, cfg.soliton_k, cfg.nls_q);
      });
    case K::file: {
      ComplexField f = read_snapshot_complex(s.path);
      if (f.grid.n_values() != grid.n_values())
        throw std::runtime_error("u0.path: snapshot size mismatch");
      f.grid = grid;
      f.time = 0.0;
      return f;
    }
    default:
      break;
  }
  throw std::runtime_error("initial datum not available for a complex field");
}

}  // namespace subdamp
