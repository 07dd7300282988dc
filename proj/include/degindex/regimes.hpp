#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degindex/extremal.hpp"
#include "degindex/graph.hpp"
#include "degindex/rational.hpp"

namespace degindex {

// Minimising family for the generalised Randic index on a degree range:
// max-degree-regular graphs, (min,max)-biregular graphs, or
// min-degree-regular graphs, depending on the exponent.
enum class RegimeKind { MaxDegreeRegular, Biregular, MinDegreeRegular };
enum class RegimeBoundary { None, AtT1, AtT2 };

// Output labels: "DeltaRegular", "Biregular", "deltaRegular".
std::string regime_label(RegimeKind kind);

// An exponent within this distance of a threshold counts as on the boundary.
inline constexpr double kBoundaryTolerance = 1e-12;

struct RegimeThresholds {
  double t1;  // below: max-degree-regular regime
  double t2;  // above: min-degree-regular regime; t1 <= t2, both in [-1, 0]
};

// Thresholds as a function of the degree ratio c in (0, 1):
// t1 = log_c((1+c)/(2c)), t2 = log_c(2/(1+c)). Always t1 + t2 = -1.
RegimeThresholds thresholds_for_ratio(double c);

// c = min_degree / max_degree; requires max_degree > min_degree.
RegimeThresholds thresholds(const DegreeRange& range);

struct RegimeReport {
  DegreeRange range;
  double alpha;
  Rational c;  // min_degree / max_degree
  double t1;
  double t2;
  RegimeKind regime;
  RegimeBoundary boundary;
  double lower_coefficient;
  double upper_coefficient;
  std::string lower_extremal;
  std::string upper_extremal;
};

// Requires max_degree > min_degree. On a boundary the report carries the
// middle (biregular) regime label, the boundary marker, and both families in
// lower_extremal; the adjacent coefficient formulas agree there.
RegimeReport classify_regime(const DegreeRange& range, double alpha);

// Continuous corner analysis: the reciprocal pair objective
// (x + y) / (xy)^(1+alpha), whose maximum over the degree box is the
// reciprocal of the sharp lower-bound coefficient.
double reciprocal_objective(double x, double y, double alpha);

// (d/dx, d/dy); symmetric under swapping x and y.
std::pair<double, double> reciprocal_objective_gradient(double x, double y,
                                                        double alpha);

// Second partial in the first coordinate.
double reciprocal_objective_xx(double x, double y, double alpha);

struct BoxMaximum {
  double value;
  std::vector<std::pair<double, double>> corners;  // argmax corner set, sorted
};

// Maximum over the square [lo, hi]^2, evaluated analytically over the three
// corner candidates (lo,lo), (lo,hi), (hi,hi). Accepts real boxes.
BoxMaximum reciprocal_objective_box_max(double lo, double hi, double alpha);
BoxMaximum reciprocal_objective_box_max(const DegreeRange& range, double alpha);

struct DiagramRow {
  double c;
  double alpha;
  std::string regime;  // boundary cells carry both labels, "A|B"
  double t1;
  double t2;
};

// Regime map samples for re-plotting: for each c, the thresholds plus one
// labelled row per alpha grid point. Rows are emitted in (c, alpha) order.
std::vector<DiagramRow> diagram_data(std::span<const double> c_samples,
                                     double alpha_min, double alpha_max,
                                     double alpha_step);

// CSV with header "c,alpha,regime,t1,t2".
void write_diagram_csv(std::ostream& out, std::span<const DiagramRow> rows);

}  // namespace degindex
