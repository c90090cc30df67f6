// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_BOUNDS_HPP
#define TOWERLRC_BOUNDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace towerlrc {

using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r);
/// Decimal rendering with 12 significant digits.
std::string format_float(double x);

enum class PointKind { LowerBound, Exact, Highlight };
const char* to_string(PointKind kind);

/// Relative parameters (R, delta) = (k/n, d/n) of C_i(S, l P_inf).
struct BoundPoint {
  int q = 0;
  int i = 0;
  int l = 0;
  Rational rate;
  Rational delta;
  PointKind kind = PointKind::LowerBound;
};

/// R = (l + 1)/q^2 and delta = ((q-1)(q-i) - l + 1)/(q^2 - q). kind is Exact
/// for the two level-2 pole orders whose distance is known exactly.
/// Throws UsageError outside 1 <= i <= q - 1, 1 <= l <= (q-1)(q-i).
BoundPoint relative_params(int q, int i, int l);

/// (r/(r+1)) (1 - delta - 3/(q+1)) with r = q - 1.
Rational baseline_line(int q, const Rational& delta);
/// (r/(r+1)) (1 - delta - 2/q) with r = q - 1.
Rational improved_line(int q, const Rational& delta);

struct MarginCheck {
  Rational lhs;     // R + ((q-1)/q) delta
  Rational rhs;     // (r/(r+1)) ((q-i)/q)
  Rational margin;  // lhs - rhs
  bool holds() const { return margin > 0; }
};

/// Compares R + ((q-1)/q) delta against (r/(r+1))((q-i)/q) exactly.
/// Requires odd q >= 5, 2 <= i <= q - 1 and 1 <= l <= (q-1)(q-i).
MarginCheck rate_distance_margin(int q, int i, int l);

/// The level-2 code with l = q((q-1)/2 - 1), whose distance is exact.
struct HalfPolePoint {
  BoundPoint point;
  Rational rate_floor;   // (1/2)((q-2)/q)^2
  Rational delta_floor;  // (1/2)(q-3)/(q-1)
  /// R + ((q-1)/q) delta, equal to (q^2 - 3q + 4)/q^2.
  Rational weighted_sum;
  /// weighted_sum - (r/(r+1))((q-2)/q); equals 2/q^2.
  Rational line_margin;
  bool rate_above() const { return point.rate > rate_floor; }
  bool delta_above() const { return point.delta > delta_floor; }
};

HalfPolePoint half_pole_point(int q);

struct BoundCurve {
  std::string id;
  int q = 0;
  int r = 0;
  std::vector<double> delta;
  std::vector<double> rate;
};

/// Objective (1/(r+1)) log_q b2(s) - delta log_q s with
/// b2(s) = ((1 + (q-1)s)^(r+1) + (q-1)(1-s)^(r+1)) / q.
double gv_objective(int q, int r, double delta, double s);
/// r/(r+1) - min over 0 < s <= 1 of the objective, clamped below at 0.
double gv_type_rate(int q, int r, double delta);
/// Requires r + 1 <= q^2 and every delta in [0, 1).
BoundCurve gv_type_curve(int q, int r, std::span<const double> deltas);

BoundCurve line_curve(const std::string& id, int q, std::span<const double> deltas);

/// k / steps for k = 0..steps-1.
std::vector<double> unit_grid(int steps);

struct FigureRow {
  int q = 0;
  int i = 0;
  std::optional<BoundPoint> point;  // empty for a skipped (out-of-window) level
  double baseline = 0;
  double improved = 0;
  /// Whether the exact margin check applies (q >= 5, i >= 2) and holds.
  std::optional<bool> margin_holds;
};

struct FigureDataset {
  int figure = 0;
  int q = 0;
  std::vector<FigureRow> rows;
  std::vector<BoundCurve> curves;
};

/// Default q and level range of the two published plots: figure 2 is q = 7
/// with i = 2..6, figure 3 is q = 17 with i = 2..3.
int figure_default_q(int figure);
std::pair<int, int> figure_default_levels(int figure);

/// Every (i, l) in the valid window for i in [i_min, i_max]. Levels outside
/// 1..q-1 produce a single skipped row. The l = q((q-1)/2 - 1), i = 2 point
/// is tagged Highlight.
FigureDataset figure_dataset(int q, int i_min, int i_max, int figure);

/// `q,i,l,kind,R_num,R_den,delta_num,delta_den,line_tbf,line_improved`
void write_bounds_csv(std::ostream& os, const FigureDataset& data);
/// `delta,R`
void write_curve_csv(std::ostream& os, const BoundCurve& curve);
/// Self-contained 800x600 SVG of the points and curves.
void write_svg(std::ostream& os, const FigureDataset& data);

}  // namespace towerlrc

#endif  // TOWERLRC_BOUNDS_HPP
