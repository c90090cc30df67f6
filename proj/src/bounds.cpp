// SPDX-License-Identifier: Apache-2.0

#include "towerlrc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "towerlrc/errors.hpp"

namespace towerlrc {

namespace {

void require_window(int q, int i, int l) {
  if (i < 1 || i > q - 1 || l < 1 || l > (q - 1) * (q - i))
    throw UsageError("(i, l) = (" + std::to_string(i) + ", " + std::to_string(l) +
                     ") outside the valid window 1 <= i <= " + std::to_string(q - 1) +
                     ", 1 <= l <= (q-1)(q-i) at q = " + std::to_string(q));
}

Rational locality_factor(int q) { return Rational(q - 1, q); }  // r/(r+1) with r = q - 1

}  // namespace

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const char* to_string(PointKind kind) {
  switch (kind) {
    case PointKind::LowerBound: return "lower-bound";
    case PointKind::Exact: return "exact";
    case PointKind::Highlight: return "highlight";
  }
  return "?";
}

BoundPoint relative_params(int q, int i, int l) {
  require_window(q, i, l);
  BoundPoint p;
  p.q = q;
  p.i = i;
  p.l = l;
  p.rate = Rational(l + 1, static_cast<std::int64_t>(q) * q);
  p.delta = Rational((q - 1) * (q - i) - l + 1, static_cast<std::int64_t>(q) * q - q);
  const bool exact_level2 = q >= 5 && i == 2 && (l == q || l == q * ((q - 1) / 2 - 1));
  p.kind = exact_level2 ? PointKind::Exact : PointKind::LowerBound;
  return p;
}

Rational baseline_line(int q, const Rational& delta) {
  return locality_factor(q) * (Rational(1) - delta - Rational(3, q + 1));
}

Rational improved_line(int q, const Rational& delta) {
  return locality_factor(q) * (Rational(1) - delta - Rational(2, q));
}

MarginCheck rate_distance_margin(int q, int i, int l) {
  if (q < 5 || q % 2 == 0) throw UsageError("the margin check needs odd q >= 5");
  if (i < 2) throw UsageError("the margin check needs level i >= 2");
  const BoundPoint p = relative_params(q, i, l);
  MarginCheck m;
  m.lhs = p.rate + Rational(q - 1, q) * p.delta;
  m.rhs = locality_factor(q) * Rational(q - i, q);
  m.margin = m.lhs - m.rhs;
  return m;
}

HalfPolePoint half_pole_point(int q) {
  if (q < 5 || q % 2 == 0) throw UsageError("the half pole-order point needs odd q >= 5");
  const int l = q * ((q - 1) / 2 - 1);
  HalfPolePoint h;
  h.point = relative_params(q, 2, l);
  h.point.kind = PointKind::Highlight;
  const Rational ratio(q - 2, q);
  h.rate_floor = Rational(1, 2) * ratio * ratio;
  h.delta_floor = Rational(1, 2) * Rational(q - 3, q - 1);
  h.weighted_sum = h.point.rate + Rational(q - 1, q) * h.point.delta;
  h.line_margin = h.weighted_sum - locality_factor(q) * ratio;
  return h;
}

double gv_objective(int q, int r, double delta, double s) {
  const long double lq = std::log(static_cast<long double>(q));
  const long double b2 = (std::pow(1.0L + (q - 1) * static_cast<long double>(s), r + 1) +
                          (q - 1) * std::pow(1.0L - s, r + 1)) /
                         q;
  return static_cast<double>(std::log(b2) / lq / (r + 1) - delta * std::log(static_cast<long double>(s)) / lq);
}

double gv_type_rate(int q, int r, double delta) {
  constexpr int kGrid = 10'000;
  constexpr double kLow = 1e-9;
  const double log_low = std::log(kLow);
  auto grid = [&](int k) {
    return k == kGrid - 1 ? 1.0 : std::exp(log_low * (1.0 - static_cast<double>(k) / (kGrid - 1)));
  };
  int best = 0;
  double best_value = gv_objective(q, r, delta, grid(0));
  for (int k = 1; k < kGrid; ++k) {
    const double v = gv_objective(q, r, delta, grid(k));
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  // Golden-section refinement between the neighbours of the grid minimum.
  double a = grid(std::max(0, best - 1));
  double b = grid(std::min(kGrid - 1, best + 1));
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = gv_objective(q, r, delta, c);
  double fd = gv_objective(q, r, delta, d);
  while (b - a > 1e-12) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = gv_objective(q, r, delta, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = gv_objective(q, r, delta, d);
    }
  }
  best_value = std::min({best_value, fc, fd});
  const double rate = static_cast<double>(r) / (r + 1) - best_value;
  return std::max(0.0, rate);
}

BoundCurve gv_type_curve(int q, int r, std::span<const double> deltas) {
  if (r < 1 || r + 1 > q * q) throw UsageError("GV-type curve needs 1 <= r and r + 1 <= q^2");
  BoundCurve c;
  c.id = "gv_type";
  c.q = q;
  c.r = r;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (deltas[k] < 0 || deltas[k] >= 1) throw UsageError("delta grid must lie in [0, 1)");
    if (k > 0 && deltas[k] <= deltas[k - 1]) throw UsageError("delta grid must be increasing");
    c.delta.push_back(deltas[k]);
    c.rate.push_back(gv_type_rate(q, r, deltas[k]));
  }
  return c;
}

BoundCurve line_curve(const std::string& id, int q, std::span<const double> deltas) {
  BoundCurve c;
  c.id = id;
  c.q = q;
  c.r = q - 1;
  const double factor = static_cast<double>(q - 1) / q;
  const double offset = id == "baseline" ? 3.0 / (q + 1) : 2.0 / q;
  for (double d : deltas) {
    c.delta.push_back(d);
    c.rate.push_back(std::max(0.0, factor * (1.0 - d - offset)));
  }
  return c;
}

std::vector<double> unit_grid(int steps) {
  std::vector<double> g(steps);
  for (int k = 0; k < steps; ++k) g[k] = static_cast<double>(k) / steps;
  return g;
}

int figure_default_q(int figure) {
  if (figure == 2) return 7;
  if (figure == 3) return 17;
  throw UsageError("unknown figure " + std::to_string(figure) + " (expected 2 or 3)");
}

std::pair<int, int> figure_default_levels(int figure) {
  if (figure == 2) return {2, 6};
  if (figure == 3) return {2, 3};
  throw UsageError("unknown figure " + std::to_string(figure) + " (expected 2 or 3)");
}

FigureDataset figure_dataset(int q, int i_min, int i_max, int figure) {
  FigureDataset data;
  data.figure = figure;
  data.q = q;
  const int highlight_l = q >= 5 ? q * ((q - 1) / 2 - 1) : -1;
  for (int i = i_min; i <= i_max; ++i) {
    if (i < 1 || i > q - 1) {
      data.rows.push_back(FigureRow{q, i, std::nullopt, 0, 0, std::nullopt});
      continue;
    }
    for (int l = 1; l <= (q - 1) * (q - i); ++l) {
      FigureRow row{q, i, relative_params(q, i, l), 0, 0, std::nullopt};
      if (i == 2 && l == highlight_l) row.point->kind = PointKind::Highlight;
      row.baseline = to_double(baseline_line(q, row.point->delta));
      row.improved = to_double(improved_line(q, row.point->delta));
      if (q >= 5 && q % 2 == 1 && i >= 2) row.margin_holds = rate_distance_margin(q, i, l).holds();
      data.rows.push_back(row);
    }
  }
  const auto grid = unit_grid(100);
  data.curves.push_back(line_curve("baseline", q, grid));
  data.curves.push_back(line_curve("improved", q, grid));
  if (figure == 3) data.curves.push_back(gv_type_curve(q, q - 1, grid));
  return data;
}

void write_bounds_csv(std::ostream& os, const FigureDataset& data) {
  os << "q,i,l,kind,R_num,R_den,delta_num,delta_den,line_tbf,line_improved\n";
  for (const auto& row : data.rows) {
    if (!row.point) {
      os << row.q << ',' << row.i << ",,skipped,,,,,,\n";
      continue;
    }
    const auto& p = *row.point;
    os << p.q << ',' << p.i << ',' << p.l << ',' << to_string(p.kind) << ',' << p.rate.numerator()
       << ',' << p.rate.denominator() << ',' << p.delta.numerator() << ','
       << p.delta.denominator() << ',' << format_float(row.baseline) << ','
       << format_float(row.improved) << '\n';
  }
}

void write_curve_csv(std::ostream& os, const BoundCurve& curve) {
  os << "delta,R\n";
  for (std::size_t k = 0; k < curve.delta.size(); ++k)
    os << format_float(curve.delta[k]) << ',' << format_float(curve.rate[k]) << '\n';
}

void write_svg(std::ostream& os, const FigureDataset& data) {
  constexpr double kLeft = 60, kTop = 30, kWidth = 700, kHeight = 520;
  auto x = [&](double delta) { return format_float(kLeft + delta * kWidth); };
  auto y = [&](double rate) { return format_float(kTop + (1.0 - rate) * kHeight); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" "
        "height=\"600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(1) << "\" y2=\"" << y(0)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(0) << "\" y2=\"" << y(1)
     << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 10; ++k) {
    const double t = k / 10.0;
    os << "<text x=\"" << x(t) << "\" y=\"" << format_float(kTop + kHeight + 18)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << format_float(t) << "</text>\n";
    os << "<text x=\"" << format_float(kLeft - 8) << "\" y=\"" << y(t)
       << "\" font-size=\"11\" text-anchor=\"end\">" << format_float(t) << "</text>\n";
  }
  os << "<text x=\"" << x(0.5) << "\" y=\"595\" font-size=\"13\" text-anchor=\"middle\">delta</text>\n";
  os << "<text x=\"15\" y=\"" << y(0.5) << "\" font-size=\"13\">R</text>\n";
  os << "<text x=\"" << x(0.5) << "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">q = "
     << data.q << "</text>\n";

  for (const auto& curve : data.curves) {
    const char* colour = curve.id == "gv_type" ? "black" : (curve.id == "baseline" ? "black" : "gray");
    const char* dash = curve.id == "improved" ? " stroke-dasharray=\"6 4\"" : "";
    os << "<polyline id=\"" << curve.id << "\" fill=\"none\" stroke=\"" << colour << "\"" << dash
       << " points=\"";
    for (std::size_t k = 0; k < curve.delta.size(); ++k)
      os << (k ? " " : "") << x(curve.delta[k]) << ',' << y(curve.rate[k]);
    os << "\"/>\n";
  }
  for (const auto& row : data.rows) {
    if (!row.point) continue;
    const bool hl = row.point->kind == PointKind::Highlight;
    os << "<circle cx=\"" << x(to_double(row.point->delta)) << "\" cy=\"" << y(to_double(row.point->rate))
       << "\" r=\"" << (hl ? 4 : 2) << "\" fill=\"" << (hl ? "red" : "blue") << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace towerlrc
