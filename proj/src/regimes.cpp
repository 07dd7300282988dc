#include "degindex/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace degindex {

std::string regime_label(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::MaxDegreeRegular:
      return "DeltaRegular";
    case RegimeKind::Biregular:
      return "Biregular";
    case RegimeKind::MinDegreeRegular:
      return "deltaRegular";
  }
  return "Biregular";
}

RegimeThresholds thresholds_for_ratio(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw std::domain_error("degree ratio must lie strictly between 0 and 1");
  const double log_c = std::log(c);
  return {std::log((1.0 + c) / (2.0 * c)) / log_c, std::log(2.0 / (1.0 + c)) / log_c};
}

RegimeThresholds thresholds(const DegreeRange& range) {
  if (range.max_degree == range.min_degree)
    throw std::invalid_argument("regime thresholds need max_degree > min_degree");
  return thresholds_for_ratio(static_cast<double>(range.min_degree) / range.max_degree);
}

namespace {

double power(double base, double exponent) { return std::pow(base, exponent); }

std::string regular_family(int degree) { return std::to_string(degree) + "-regular"; }

std::string biregular_family(const DegreeRange& r) {
  return "(" + std::to_string(r.min_degree) + "," + std::to_string(r.max_degree) +
         ")-biregular";
}

}  // namespace

RegimeReport classify_regime(const DegreeRange& range, double alpha) {
  const RegimeThresholds t = thresholds(range);
  const double delta = range.min_degree;
  const double Delta = range.max_degree;

  RegimeReport report{range,
                      alpha,
                      Rational(range.min_degree, range.max_degree),
                      t.t1,
                      t.t2,
                      RegimeKind::Biregular,
                      RegimeBoundary::None,
                      0.0,
                      0.0,
                      "",
                      ""};

  const double max_regular_coeff = power(Delta, 1.0 + 2.0 * alpha) / 2.0;
  const double biregular_coeff = power(delta * Delta, 1.0 + alpha) / (delta + Delta);
  const double min_regular_coeff = power(delta, 1.0 + 2.0 * alpha) / 2.0;

  if (std::abs(alpha - t.t1) <= kBoundaryTolerance) {
    report.boundary = RegimeBoundary::AtT1;
    report.regime = RegimeKind::Biregular;
    report.lower_coefficient = biregular_coeff;
    report.lower_extremal =
        regular_family(range.max_degree) + " or " + biregular_family(range);
  } else if (std::abs(alpha - t.t2) <= kBoundaryTolerance) {
    report.boundary = RegimeBoundary::AtT2;
    report.regime = RegimeKind::Biregular;
    report.lower_coefficient = biregular_coeff;
    report.lower_extremal =
        biregular_family(range) + " or " + regular_family(range.min_degree);
  } else if (alpha < t.t1) {
    report.regime = RegimeKind::MaxDegreeRegular;
    report.lower_coefficient = max_regular_coeff;
    report.lower_extremal = regular_family(range.max_degree);
  } else if (alpha > t.t2) {
    report.regime = RegimeKind::MinDegreeRegular;
    report.lower_coefficient = min_regular_coeff;
    report.lower_extremal = regular_family(range.min_degree);
  } else {
    report.regime = RegimeKind::Biregular;
    report.lower_coefficient = biregular_coeff;
    report.lower_extremal = biregular_family(range);
  }

  if (std::abs(alpha + 0.5) <= kBoundaryTolerance) {
    report.upper_coefficient = 0.5;
    report.upper_extremal = "every component regular";
  } else if (alpha < -0.5) {
    report.upper_coefficient = min_regular_coeff;
    report.upper_extremal = regular_family(range.min_degree);
  } else {
    report.upper_coefficient = max_regular_coeff;
    report.upper_extremal = regular_family(range.max_degree);
  }
  return report;
}

double reciprocal_objective(double x, double y, double alpha) {
  if (!(x > 0.0 && y > 0.0))
    throw std::domain_error("reciprocal objective requires positive coordinates");
  return (x + y) / power(x * y, 1.0 + alpha);
}

std::pair<double, double> reciprocal_objective_gradient(double x, double y, double alpha) {
  if (!(x > 0.0 && y > 0.0))
    throw std::domain_error("reciprocal objective requires positive coordinates");
  const double dx = (-alpha * x - (1.0 + alpha) * y) /
                    (power(x, 2.0 + alpha) * power(y, 1.0 + alpha));
  const double dy = (-alpha * y - (1.0 + alpha) * x) /
                    (power(y, 2.0 + alpha) * power(x, 1.0 + alpha));
  return {dx, dy};
}

double reciprocal_objective_xx(double x, double y, double alpha) {
  if (!(x > 0.0 && y > 0.0))
    throw std::domain_error("reciprocal objective requires positive coordinates");
  return (alpha * (1.0 + alpha) * x + (1.0 + alpha) * (2.0 + alpha) * y) /
         (power(x, 3.0 + alpha) * power(y, 1.0 + alpha));
}

BoxMaximum reciprocal_objective_box_max(double lo, double hi, double alpha) {
  if (!(lo > 0.0) || hi < lo)
    throw std::domain_error("degree box must satisfy 0 < lo <= hi");
  // The maximum over the square always sits on one of these three corners.
  const std::pair<double, double> corners[] = {{lo, lo}, {lo, hi}, {hi, hi}};
  BoxMaximum result{-std::numeric_limits<double>::infinity(), {}};
  for (const auto& [x, y] : corners) {
    double value = reciprocal_objective(x, y, alpha);
    if (value > result.value) result.value = value;
  }
  const double tie = kPairTieTolerance * std::max(1.0, std::abs(result.value));
  for (const auto& corner : corners) {
    if (std::abs(reciprocal_objective(corner.first, corner.second, alpha) - result.value) <= tie)
      if (result.corners.empty() || result.corners.back() != corner)
        result.corners.push_back(corner);
  }
  return result;
}

BoxMaximum reciprocal_objective_box_max(const DegreeRange& range, double alpha) {
  return reciprocal_objective_box_max(range.min_degree, range.max_degree, alpha);
}

std::vector<DiagramRow> diagram_data(std::span<const double> c_samples, double alpha_min,
                                     double alpha_max, double alpha_step) {
  if (!(alpha_step > 0.0)) throw std::invalid_argument("alpha step must be positive");
  if (alpha_max < alpha_min) throw std::invalid_argument("empty alpha window");

  std::vector<DiagramRow> rows;
  for (double c : c_samples) {
    const RegimeThresholds t = thresholds_for_ratio(c);
    const double span = alpha_max - alpha_min;
    const long steps = static_cast<long>(std::floor(span / alpha_step + 1e-9));
    for (long k = 0; k <= steps; ++k) {
      const double alpha = alpha_min + static_cast<double>(k) * alpha_step;
      std::string label;
      if (std::abs(alpha - t.t1) <= kBoundaryTolerance)
        label = "DeltaRegular|Biregular";
      else if (std::abs(alpha - t.t2) <= kBoundaryTolerance)
        label = "Biregular|deltaRegular";
      else if (alpha < t.t1)
        label = "DeltaRegular";
      else if (alpha > t.t2)
        label = "deltaRegular";
      else
        label = "Biregular";
      rows.push_back({c, alpha, std::move(label), t.t1, t.t2});
    }
  }
  return rows;
}

void write_diagram_csv(std::ostream& out, std::span<const DiagramRow> rows) {
  char buffer[128];
  out << "c,alpha,regime,t1,t2\n";
  for (const auto& row : rows) {
    std::snprintf(buffer, sizeof buffer, "%.15g,%.15g,%s,%.15g,%.15g", row.c, row.alpha,
                  row.regime.c_str(), row.t1, row.t2);
    out << buffer << '\n';
  }
}

}  // namespace degindex
