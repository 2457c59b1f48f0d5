#include "chromabound/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "chromabound/errors.hpp"

namespace chromabound {

std::vector<double> sort_descending(std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  if (std::any_of(out.begin(), out.end(), [](double v) { return std::isnan(v); })) {
    throw ContractError("sort_descending: NaN entry");
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MajorizationReport majorizes(std::span<const double> x, std::span<const double> y, double tol) {
  if (x.size() != y.size()) {
    throw DimensionError("majorizes: length mismatch " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  }
  const auto xs = sort_descending(x);
  const auto ys = sort_descending(y);
  MajorizationReport report;
  double px = 0.0;
  double py = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    px += xs[i];
    py += ys[i];
    if (i + 1 < xs.size() && !report.first_violation && px > py + tol) {
      report.first_violation = PrefixViolation{i + 1, px, py};
    }
  }
  report.sum_gap = std::abs(px - py);
  report.holds = !report.first_violation && report.sum_gap <= tol;
  return report;
}

double minimal_tau(const Spectrum& spec, double tol) {
  const double scale = spec.norm();
  if (scale == 0.0) {
    throw DegenerateError("minimal_tau: spectrum is identically zero");
  }
  if (std::abs(spec.sum()) > tol * scale) {
    throw ContractError("minimal_tau: spectrum is not traceless (sum " + std::to_string(spec.sum()) +
                        ")");
  }
  const std::size_t n = spec.size();
  double best = -1.0;
  double top = 0.0;
  double bottom = 0.0;
  for (std::size_t m = 1; m < n; ++m) {
    top += spec[m - 1];
    bottom -= spec[n - m];
    if (bottom < tol * scale) continue;
    best = std::max(best, top / bottom);
  }
  if (best <= 0.0) throw DegenerateError("minimal_tau: no prefix with a positive denominator");
  return best;
}

}  // namespace chromabound
