#include "lcaes/analysis/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"
#include "lcaes/objectives/objectives.hpp"

namespace lcaes::analysis {

using io::format_number;
using io::parse_number;

std::string matrix_csv(const std::vector<std::string>& names, const std::vector<std::vector<double>>& m) {
  io::CsvTable t;
  t.header.push_back("variable");
  for (const auto& n : names) t.header.push_back(n);
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto& row = t.rows.emplace_back();
    row.push_back(names[i]);
    for (double v : m[i]) row.push_back(format_number(v));
  }
  return io::to_csv(t);
}

std::vector<std::string> parse_matrix_csv(const std::string& text, std::vector<std::vector<double>>& m) {
  const auto t = io::parse_csv(text, "matrix");
  std::vector<std::string> names(t.header.begin() + 1, t.header.end());
  if (t.rows.size() != names.size()) throw IoError("matrix csv is not square");
  m.assign(names.size(), std::vector<double>(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (t.rows[i][0] != names[i]) throw IoError("matrix csv row " + t.rows[i][0] + " out of order");
    for (std::size_t j = 0; j < names.size(); ++j) m[i][j] = parse_number(t.rows[i][j + 1]);
  }
  return names;
}

std::string correlation_r_csv(const CorrelationMatrix& c) { return matrix_csv(c.names, c.r); }
std::string correlation_p_csv(const CorrelationMatrix& c) { return matrix_csv(c.names, c.p); }

CorrelationMatrix parse_correlation(const std::string& r_csv, const std::string& p_csv, int samples) {
  CorrelationMatrix c;
  c.names = parse_matrix_csv(r_csv, c.r);
  if (parse_matrix_csv(p_csv, c.p) != c.names) throw IoError("correlation r and p name different variables");
  c.samples = samples;
  return c;
}

std::string distributions_csv(const std::vector<Distribution>& ds) {
  io::CsvTable t;
  t.header = {"variable", "bin", "lower", "upper", "frequency"};
  for (const auto& d : ds) {
    for (std::size_t b = 0; b < d.frequency.size(); ++b) {
      t.rows.push_back({d.name, std::to_string(b), format_number(d.edges[b]), format_number(d.edges[b + 1]),
                        format_number(d.frequency[b])});
    }
  }
  return io::to_csv(t);
}

std::string modes_csv(const std::vector<Distribution>& ds) {
  io::CsvTable t;
  t.header = {"variable", "location", "frequency"};
  for (const auto& d : ds) {
    for (const auto& m : d.modes) t.rows.push_back({d.name, format_number(m.location), format_number(m.frequency)});
  }
  return io::to_csv(t);
}

std::string burden_shift_csv(const BurdenShiftTable& t) {
  io::CsvTable out;
  out.header.push_back("run");
  for (const auto& o : t.objectives) out.header.push_back(o);
  for (std::size_t i = 0; i < t.runs.size(); ++i) {
    auto& row = out.rows.emplace_back();
    row.push_back(t.runs[i]);
    for (const auto& v : t.percent[i]) row.push_back(v ? format_number(*v) : kUndefined);
  }
  return io::to_csv(out);
}

BurdenShiftTable parse_burden_shift(const std::string& text) {
  const auto in = io::parse_csv(text, "burden_shift.csv");
  BurdenShiftTable t;
  t.objectives.assign(in.header.begin() + 1, in.header.end());
  for (const auto& row : in.rows) {
    t.runs.push_back(row[0]);
    auto& values = t.percent.emplace_back();
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j] == kUndefined) {
        values.emplace_back();
      } else {
        values.emplace_back(parse_number(row[j]));
      }
    }
  }
  return t;
}

std::vector<CostShare> cost_composition(const core::Scenario& s, const core::ModelIndex& ix,
                                        const std::vector<double>& x) {
  std::map<std::string, CostShare> by;
  for (std::size_t k = 0; k < s.technologies.size(); ++k) {
    const auto& t = s.technologies[k];
    auto& c = by[core::to_string(t.category)];
    const double size = x[ix.size[k]];
    c.investment += t.c_inv * (size - t.f_ext) * objectives::annualization_factor(s.discount_rate, t.lifetime);
    c.maintenance += t.c_maint * size;
  }
  const auto b = objectives::breakdown(s, ix, x, "COST");
  for (const auto& row : b.rows) {
    if (row.kind == "resource") by["resource"].operation += row.variable;
  }
  std::vector<CostShare> out;
  for (auto& [name, c] : by) {
    c.category = name;
    out.push_back(c);
  }
  return out;
}

std::map<std::string, double> category_shares(const core::Scenario& s, const core::ModelIndex& ix,
                                              const std::vector<double>& x, const std::string& objective) {
  const auto b = objectives::breakdown(s, ix, x, objective);
  std::map<std::string, double> out;
  for (const auto& row : b.rows) out[row.category] += row.constant + row.variable;
  for (auto& [name, v] : out) v = b.total != 0.0 ? v / b.total : 0.0;
  return out;
}

double TrendLine::half_width(double x) const {
  if (n < 3 || !(sxx > 0.0)) return 0.0;
  return 1.96 * residual_se * std::sqrt(1.0 / n + (x - x_mean) * (x - x_mean) / sxx);
}

TrendLine trend_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("trend line needs two equally long series");
  TrendLine t;
  t.n = static_cast<int>(x.size());
  double ym = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    t.x_mean += x[i];
    ym += y[i];
  }
  t.x_mean /= t.n;
  ym /= t.n;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    t.sxx += (x[i] - t.x_mean) * (x[i] - t.x_mean);
    sxy += (x[i] - t.x_mean) * (y[i] - ym);
  }
  t.slope = t.sxx > 0.0 ? sxy / t.sxx : 0.0;
  t.intercept = ym - t.slope * t.x_mean;
  if (t.n > 2) {
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) ss += (y[i] - t.at(x[i])) * (y[i] - t.at(x[i]));
    t.residual_se = std::sqrt(ss / (t.n - 2));
  }
  return t;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", v);
  return buf;
}

// Red for positive, blue for negative correlation.
std::string color_of(double r) {
  const int fade = static_cast<int>(std::lround(255.0 * (1.0 - std::min(1.0, std::abs(r)))));
  char buf[16];
  if (r >= 0.0) {
    std::snprintf(buf, sizeof buf, "#ff%02x%02x", fade, fade);
  } else {
    std::snprintf(buf, sizeof buf, "#%02x%02xff", fade, fade);
  }
  return buf;
}

}  // namespace

std::string scatter_matrix_svg(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns,
                               const CorrelationMatrix& c, const std::vector<Distribution>& ds) {
  const std::size_t k = names.size();
  if (columns.size() != k || c.names != names) throw DomainError("scatter matrix inputs name different variables");
  constexpr double kCell = 110.0, kPad = 8.0, kMargin = 90.0;
  const double size = kMargin + kCell * static_cast<double>(k);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\"" << num(size)
      << "\" font-family=\"sans-serif\" font-size=\"9\">\n";
  std::vector<std::pair<double, double>> range(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto [lo, hi] = std::minmax_element(columns[i].begin(), columns[i].end());
    range[i] = {*lo, *hi > *lo ? *hi : *lo + 1.0};
  }
  auto px = [&](std::size_t var, double v, double origin) {
    return origin + kPad + (kCell - 2 * kPad) * (v - range[var].first) / (range[var].second - range[var].first);
  };
  auto py = [&](std::size_t var, double v, double origin) {
    return origin + kCell - kPad - (kCell - 2 * kPad) * (v - range[var].first) / (range[var].second - range[var].first);
  };
  for (std::size_t i = 0; i < k; ++i) {
    const double top = kMargin + kCell * static_cast<double>(i);
    svg << "<text x=\"4\" y=\"" << num(top + kCell / 2) << "\">" << names[i] << "</text>\n";
    svg << "<text x=\"" << num(top + 4) << "\" y=\"" << num(kMargin - 6) << "\">" << names[i] << "</text>\n";
    for (std::size_t j = 0; j < k; ++j) {
      const double left = kMargin + kCell * static_cast<double>(j);
      svg << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(kCell) << "\" height=\""
          << num(kCell) << "\" fill=\"" << (j > i ? color_of(c.r[i][j]) : "#ffffff")
          << "\" stroke=\"#999999\"/>\n";
      if (j > i) {
        svg << "<text x=\"" << num(left + kCell / 2) << "\" y=\"" << num(top + kCell / 2)
            << "\" text-anchor=\"middle\">r=" << num(c.r[i][j]) << " p=" << short_num(c.p[i][j]) << "</text>\n";
      } else if (j == i) {
        const auto& d = ds[i];
        const double peak = *std::max_element(d.frequency.begin(), d.frequency.end());
        const double w = (kCell - 2 * kPad) / static_cast<double>(d.frequency.size());
        for (std::size_t b = 0; b < d.frequency.size(); ++b) {
          const double h = peak > 0.0 ? (kCell - 2 * kPad) * d.frequency[b] / peak : 0.0;
          svg << "<rect x=\"" << num(left + kPad + w * static_cast<double>(b)) << "\" y=\""
              << num(top + kCell - kPad - h) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
              << "\" fill=\"#607d8b\"/>\n";
        }
      } else {
        for (std::size_t s = 0; s < columns[i].size(); ++s) {
          svg << "<circle cx=\"" << num(px(j, columns[j][s], left)) << "\" cy=\"" << num(py(i, columns[i][s], top))
              << "\" r=\"1.5\" fill=\"#333333\"/>\n";
        }
        const auto line = trend_line(columns[j], columns[i]);
        std::string upper, lower;
        for (int step = 0; step <= 10; ++step) {
          const double xv = range[j].first + (range[j].second - range[j].first) * step / 10.0;
          const double cx = px(j, xv, left);
          const double clamp_lo = top, clamp_hi = top + kCell;
          auto cy = [&](double v) { return std::clamp(py(i, v, top), clamp_lo, clamp_hi); };
          upper += num(cx) + "," + num(cy(line.at(xv) + line.half_width(xv))) + " ";
          lower = num(cx) + "," + num(cy(line.at(xv) - line.half_width(xv))) + " " + lower;
        }
        svg << "<polygon points=\"" << upper << lower << "\" fill=\"#ff9800\" fill-opacity=\"0.25\"/>\n";
        const double x0 = range[j].first, x1 = range[j].second;
        svg << "<line x1=\"" << num(px(j, x0, left)) << "\" y1=\""
            << num(std::clamp(py(i, line.at(x0), top), top, top + kCell)) << "\" x2=\"" << num(px(j, x1, left))
            << "\" y2=\"" << num(std::clamp(py(i, line.at(x1), top), top, top + kCell))
            << "\" stroke=\"#e65100\"/>\n";
      }
    }
  }
  svg << "<text x=\"4\" y=\"" << num(size - 4)
      << "\">lower triangle: least-squares line with +-1.96 SE band of the mean response</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lcaes::analysis
