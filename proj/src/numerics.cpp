#include "subdamp/numerics.hpp"

#include <array>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace subdamp {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol, int max_iter) {
  if (!(lo < hi)) throw std::invalid_argument("bisect: need lo < hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("bisect: endpoints do not bracket a root");
  for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric; positive half).
constexpr std::array<double, 8> kGlNodes = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601701,
    0.8482065834104272,
    0.9372733924007060,
    0.9879925180204854,
};
constexpr std::array<double, 8> kGlWeights = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = kGlWeights[0] * f(mid);
  for (std::size_t i = 1; i < kGlNodes.size(); ++i) {
    const double dx = half * kGlNodes[i];
    sum += kGlWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return half * sum;
}

double integrate_panel(const std::function<double(double)>& f, double a,
                       double b, double tol, int depth) {
  const double whole = gl15(f, a, b);
  const double mid = 0.5 * (a + b);
  const double left = gl15(f, a, mid);
  const double right = gl15(f, mid, b);
  const double refined = left + right;
  if (std::abs(refined - whole) <= tol) return refined;
  if (depth >= 48)
    throw std::runtime_error("integrate_adaptive: subdivision limit reached");
  return integrate_panel(f, a, mid, 0.5 * tol, depth + 1) +
         integrate_panel(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol) {
  if (a == b) return 0.0;
  if (!(abs_tol > 0.0))
    throw std::invalid_argument("integrate_adaptive: abs_tol must be positive");
  const double sign = (a < b) ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  return sign * integrate_panel(f, lo, hi, abs_tol, 0);
}

void solve_tridiagonal(const std::vector<double>& sub,
                       const std::vector<double>& diag,
                       const std::vector<double>& sup,
                       std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  if (sub.size() != n || sup.size() != n || rhs.size() != n)
    throw std::invalid_argument("solve_tridiagonal: size mismatch");
  if (n == 0) return;
  std::vector<double> scratch(n, 0.0);
  double pivot = diag[0];
  if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
  rhs[0] /= pivot;
  for (std::size_t i = 1; i < n; ++i) {
    scratch[i] = sup[i - 1] / pivot;
    pivot = diag[i] - sub[i] * scratch[i];
    if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
    rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= scratch[i + 1] * rhs[i + 1];
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double_strict(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty numeric token");
  // strtod directly: std::stod throws out_of_range on gradual underflow, but
  // subnormal magnitudes are legitimate in decay series.  Only reject
  // overflow and non-numeric text.
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str())
    throw std::invalid_argument("not a number: '" + token + "'");
  if (errno == ERANGE && (v == HUGE_VAL || v == -HUGE_VAL))
    throw std::invalid_argument("number out of range: '" + token + "'");
  std::size_t pos = static_cast<std::size_t>(end - token.c_str());
  while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
    ++pos;
  if (pos != token.size())
    throw std::invalid_argument("trailing characters in number: '" + token + "'");
  return v;
}

long long parse_int_strict(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty integer token");
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(token, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + token + "'");
  }
  if (pos != token.size())
    throw std::invalid_argument("trailing characters in integer: '" + token + "'");
  return v;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need at least two matched points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

}  // namespace subdamp
