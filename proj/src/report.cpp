#include "lisakit/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "lisakit/csv.hpp"
#include "lisakit/error.hpp"

namespace lisakit::report {
namespace {

struct Column {
  const char* header;  // table heading
  const char* key;     // json key
  double TableRow::*field;
};

std::vector<Column> columns_for(const Variants& v) {
  std::vector<Column> cols;
  if (v.set1) cols.push_back({"MI1", "mi1", &TableRow::mi1});
  if (v.set2) cols.push_back({"MI2", "mi2", &TableRow::mi2});
  if (v.set3) cols.push_back({"MI3", "mi3", &TableRow::mi3});
  if (v.set1 && v.set2) cols.push_back({"MI1/MI2", "mi1_mi2", &TableRow::mi1_mi2});
  if (v.set1 && v.set3) cols.push_back({"MI1/MI3", "mi1_mi3", &TableRow::mi1_mi3});
  if (v.set1) cols.push_back({"GC1", "gc1", &TableRow::gc1});
  if (v.set2) cols.push_back({"GC2", "gc2", &TableRow::gc2});
  if (v.set3) cols.push_back({"GC3", "gc3", &TableRow::gc3});
  if (v.set1 && v.set2) cols.push_back({"GC1/GC2", "gc1_gc2", &TableRow::gc1_gc2});
  if (v.set1 && v.set3) cols.push_back({"GC1/GC3", "gc1_gc3", &TableRow::gc1_gc3});
  return cols;
}

std::string fixed(double value, int precision) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << value;
  return out.str();
}

std::string scientific(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", value);
  return buf;
}

Json row_json(const TableRow& row, const std::vector<Column>& cols) {
  Json j;
  j["label"] = row.label;
  for (const auto& c : cols) j[c.key] = row.*c.field;
  return j;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& body) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : body) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[c]))
            << row[c];
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : body) emit(row);
  return out.str();
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

double sum_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "text") return Format::Text;
  throw Error(ErrorCode::InvalidArgument,
              "unknown format '" + std::string(text) + "' (csv, json or text)");
}

Variants parse_variants(std::string_view text) {
  if (text == "all") return {};
  Variants v{false, false, false};
  std::size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos
                                           ? std::string_view::npos
                                           : comma - pos);
    if (item == "set1") {
      v.set1 = true;
    } else if (item == "set2") {
      v.set2 = true;
    } else if (item == "set3") {
      v.set3 = true;
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown variant '" + std::string(item) +
                      "' (all, or a comma list of set1, set2, set3)");
    }
    any = true;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!any) throw Error(ErrorCode::InvalidArgument, "no variants selected");
  return v;
}

int text_precision(int fallback) {
  const char* env = std::getenv("LISA_KIT_PRECISION");
  if (env == nullptr || *env == '\0') return fallback;
  int value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto res = std::from_chars(env, end, value);
  if (res.ec != std::errc{} || res.ptr != end || value < 0 || value > 17) {
    return fallback;
  }
  return value;
}

std::vector<TableRow> table_rows(const Analysis& a) {
  const auto& lt = a.lisa;
  const auto& g = a.globals;
  const std::size_t n = a.size();
  const double nd = static_cast<double>(n);

  std::vector<TableRow> rows;
  rows.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({lt.labels[i], lt.mi1[i], lt.mi2[i], lt.mi3[i], lt.ratio12[i],
                    lt.ratio13, lt.gc1[i], lt.gc2[i], lt.gc3[i], lt.ratio12[i],
                    lt.gratio13});
  }

  TableRow sum;
  sum.label = "Sum";
  for (std::size_t i = 0; i < n; ++i) {
    for (auto field : {&TableRow::mi1, &TableRow::mi2, &TableRow::mi3,
                       &TableRow::mi1_mi2, &TableRow::mi1_mi3, &TableRow::gc1,
                       &TableRow::gc2, &TableRow::gc3, &TableRow::gc1_gc2,
                       &TableRow::gc1_gc3}) {
      sum.*field += rows[i].*field;
    }
  }

  TableRow expected;
  expected.label = "Expected";
  expected.mi1 = a.gamma() * g.moran_i;
  expected.mi2 = nd * g.moran_i;
  expected.mi3 = g.moran_i;
  expected.mi1_mi2 = a.gamma();
  expected.mi1_mi3 = nd * lt.ratio13;
  expected.gc1 = a.gamma_c() * a.transforms.sigma2 * g.geary_c;
  expected.gc2 = 2.0 * nd * nd / (nd - 1.0) * g.geary_c;
  expected.gc3 = g.geary_c;
  expected.gc1_gc2 = a.gamma();
  expected.gc1_gc3 = nd * lt.gratio13;

  rows.push_back(sum);
  rows.push_back(expected);
  return rows;
}

Json globals_json(const Analysis& a) {
  Json j;
  j["n"] = a.size();
  j["V0"] = a.contiguity.total();
  j["sigma2"] = a.transforms.sigma2;
  j["s2"] = a.transforms.s2;
  j["gamma"] = a.gamma();
  j["gamma_c"] = a.gamma_c();
  j["I"] = a.globals.moran_i;
  j["C"] = a.globals.geary_c;
  j["I0"] = a.globals.expected_i;
  j["C0"] = a.globals.expected_c;
  return j;
}

Json lisa_json(const Analysis& a, const Variants& v) {
  const auto cols = columns_for(v);
  const auto rows = table_rows(a);
  Json arr = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) arr.push_back(row_json(rows[i], cols));
  return arr;
}

Json totals_json(const Analysis& a, const Variants& v) {
  const auto cols = columns_for(v);
  const auto rows = table_rows(a);
  Json j;
  auto sum = row_json(rows[a.size()], cols);
  auto expected = row_json(rows[a.size() + 1], cols);
  sum.erase("label");
  expected.erase("label");
  j["sum"] = std::move(sum);
  j["expected"] = std::move(expected);
  return j;
}

Json checks_json(const VerificationReport& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["id"] = c.id;
    j["equation"] = c.equation;
    j["description"] = c.description;
    j["kind"] = c.kind == CheckKind::Identity ? "identity" : "refuted-claim";
    j["chained"] = c.chained;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["abs_gap"] = c.abs_gap;
    j["rel_gap"] = c.rel_gap;
    j["tolerance"] = c.tolerance;
    if (c.worst_unit >= 0) {
      j["worst_unit"] = c.worst_unit;
    } else {
      j["worst_unit"] = nullptr;
    }
    j["verdict"] = to_string(c.verdict);
    arr.push_back(std::move(j));
  }
  return arr;
}

Json report_json(const VerificationReport& r) {
  Json ctx;
  ctx["n"] = r.context.n;
  ctx["V0"] = r.context.v0;
  ctx["sigma2"] = r.context.sigma2;
  ctx["s2"] = r.context.s2;
  ctx["gamma"] = r.context.gamma;
  ctx["gamma_c"] = r.context.gamma_c;
  ctx["gamma_c_row"] = r.context.gamma_c_row;
  ctx["I"] = r.context.moran_i;
  ctx["C"] = r.context.geary_c;
  Json j;
  j["context"] = std::move(ctx);
  j["identities_hold"] = r.identities_hold();
  j["claims_refuted"] = r.claims_refuted();
  j["checks"] = checks_json(r);
  return j;
}

Json compute_json(const Json& config, const Analysis& a, const Variants& v,
                  const VerificationReport& r) {
  Json j;
  j["config"] = config;
  j["globals"] = globals_json(a);
  j["lisa"] = lisa_json(a, v);
  j["totals"] = totals_json(a, v);
  j["checks"] = checks_json(r);
  return j;
}

std::string compute_csv(const Analysis& a, const Variants& v) {
  const auto cols = columns_for(v);
  std::ostringstream out;
  out << "label";
  for (const auto& c : cols) out << ',' << c.header;
  out << '\n';
  for (const auto& row : table_rows(a)) {
    out << csv::escape_field(row.label);
    for (const auto& c : cols) out << ',' << csv::format_double(row.*c.field);
    out << '\n';
  }
  return out.str();
}

std::string compute_text(const Analysis& a, const Variants& v, int precision) {
  const auto cols = columns_for(v);
  std::ostringstream out;
  const auto& g = a.globals;
  out << "n = " << a.size() << ", V0 = " << fixed(a.contiguity.total(), precision)
      << ", sigma^2 = " << fixed(a.transforms.sigma2, precision)
      << ", s^2 = " << fixed(a.transforms.s2, precision) << '\n'
      << "gamma = " << fixed(a.gamma(), precision)
      << ", gamma_c = " << fixed(a.gamma_c(), precision) << '\n'
      << "I = " << fixed(g.moran_i, precision)
      << ", C = " << fixed(g.geary_c, precision)
      << ", I0 = " << fixed(g.expected_i, precision)
      << ", C0 = " << fixed(g.expected_c, precision) << "\n\n";

  std::vector<std::string> header{"label"};
  for (const auto& c : cols) header.emplace_back(c.header);
  std::vector<std::vector<std::string>> body;
  for (const auto& row : table_rows(a)) {
    std::vector<std::string> cells{row.label};
    for (const auto& c : cols) cells.push_back(fixed(row.*c.field, precision));
    body.push_back(std::move(cells));
  }
  out << render_table(header, body);
  return out.str();
}

std::string verify_text(const VerificationReport& r, int precision) {
  std::ostringstream out;
  const auto& c = r.context;
  out << "n = " << c.n << ", V0 = " << fixed(c.v0, precision)
      << ", sigma^2 = " << fixed(c.sigma2, precision)
      << ", s^2 = " << fixed(c.s2, precision) << '\n'
      << "gamma = " << fixed(c.gamma, precision)
      << ", gamma_c = " << fixed(c.gamma_c, precision)
      << ", gamma*_c = " << fixed(c.gamma_c_row, precision) << '\n'
      << "I = " << fixed(c.moran_i, precision)
      << ", C = " << fixed(c.geary_c, precision) << "\n\n";

  std::vector<std::string> header{"check", "eq", "lhs", "rhs", "abs gap",
                                  "rel gap", "tol", "verdict"};
  std::vector<std::vector<std::string>> body;
  for (const auto& rec : r.checks) {
    body.push_back({rec.id, rec.equation, fixed(rec.lhs, precision),
                    fixed(rec.rhs, precision), scientific(rec.abs_gap),
                    scientific(rec.rel_gap), scientific(rec.tolerance),
                    std::string(to_string(rec.verdict))});
  }
  out << render_table(header, body) << '\n'
      << "identities: " << (r.identities_hold() ? "all hold" : "FAILED") << '\n'
      << "refuted claims: "
      << (r.claims_refuted() ? "all show a gap" : "some show no gap") << '\n';
  return out.str();
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "line fit needs two equally long vectors of length >= 2");
  }
  const double n = static_cast<double>(x.size());
  const double mx = sum_of(x) / n;
  const double my = sum_of(y) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "line fit needs distinct x values");
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  f.residuals.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    f.residuals[i] = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += f.residuals[i] * f.residuals[i];
    f.max_abs_residual = std::max(f.max_abs_residual, std::abs(f.residuals[i]));
  }
  f.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}

LineFit fit_through_origin(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) {
    throw Error(ErrorCode::DimensionMismatch,
                "line fit needs two equally long, non-empty vectors");
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "line fit needs a nonzero x");
  }
  LineFit f;
  f.slope = sxy / sxx;
  const double my = sum_of(y) / static_cast<double>(y.size());
  double ss_res = 0.0, syy = 0.0;
  f.residuals.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    f.residuals[i] = y[i] - f.slope * x[i];
    ss_res += f.residuals[i] * f.residuals[i];
    syy += (y[i] - my) * (y[i] - my);
    f.max_abs_residual = std::max(f.max_abs_residual, std::abs(f.residuals[i]));
  }
  f.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}

PlotData plot_data(const Analysis& a) {
  PlotData p;
  p.labels = a.lisa.labels;
  p.mi1 = a.lisa.mi1;
  p.mi2 = a.lisa.mi2;
  p.mi3 = a.lisa.mi3;
  p.mi2_on_mi1 = fit_line(p.mi1, p.mi2);
  p.mi3_on_mi1 = fit_through_origin(p.mi1, p.mi3);
  p.inverse_gamma = 1.0 / a.gamma();
  return p;
}

std::string plot_csv(const PlotData& p) {
  std::ostringstream out;
  out << "label,MI1,MI2,MI3,MI2_fitted,MI3_fitted\n";
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    out << csv::escape_field(p.labels[i]) << ',' << csv::format_double(p.mi1[i])
        << ',' << csv::format_double(p.mi2[i]) << ','
        << csv::format_double(p.mi3[i]) << ','
        << csv::format_double(p.mi2[i] - p.mi2_on_mi1.residuals[i]) << ','
        << csv::format_double(p.mi3[i] - p.mi3_on_mi1.residuals[i]) << '\n';
  }
  return out.str();
}

namespace {

Json fit_json(const LineFit& f, bool with_intercept) {
  Json j;
  j["slope"] = f.slope;
  if (with_intercept) j["intercept"] = f.intercept;
  j["r_squared"] = f.r_squared;
  j["max_abs_residual"] = f.max_abs_residual;
  j["residuals"] = f.residuals;
  return j;
}

}  // namespace

Json plot_json(const PlotData& p) {
  Json points = Json::array();
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    Json pt;
    pt["label"] = p.labels[i];
    pt["mi1"] = p.mi1[i];
    pt["mi2"] = p.mi2[i];
    pt["mi3"] = p.mi3[i];
    points.push_back(std::move(pt));
  }
  Json j;
  j["points"] = std::move(points);
  j["mi2_on_mi1"] = fit_json(p.mi2_on_mi1, true);
  j["mi3_on_mi1"] = fit_json(p.mi3_on_mi1, false);
  j["inverse_gamma"] = p.inverse_gamma;
  return j;
}

std::string plot_text(const PlotData& p, int precision) {
  std::ostringstream out;
  out << "MI2 ~ a + b MI1: b = " << scientific(p.mi2_on_mi1.slope)
      << ", a = " << fixed(p.mi2_on_mi1.intercept, precision)
      << ", R^2 = " << fixed(p.mi2_on_mi1.r_squared, precision)
      << ", max |residual| = " << scientific(p.mi2_on_mi1.max_abs_residual) << '\n'
      << "MI3 ~ b MI1:     b = " << scientific(p.mi3_on_mi1.slope)
      << " (1/gamma = " << scientific(p.inverse_gamma) << ")"
      << ", R^2 = " << fixed(p.mi3_on_mi1.r_squared, precision)
      << ", max |residual| = " << scientific(p.mi3_on_mi1.max_abs_residual)
      << "\n\n";
  std::vector<std::vector<std::string>> body;
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    body.push_back({p.labels[i], fixed(p.mi1[i], precision),
                    fixed(p.mi2[i], precision), fixed(p.mi3[i], precision)});
  }
  out << render_table({"label", "MI1", "MI2", "MI3"}, body);
  return out.str();
}

std::string plot_svg(const PlotData& p) {
  constexpr double kPanelW = 420, kPanelH = 340, kMargin = 55;
  std::ostringstream out;
  out << std::setprecision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kPanelW
      << "\" height=\"" << kPanelH << "\" font-family=\"sans-serif\" "
      << "font-size=\"11\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto panel = [&](double x0, const std::vector<double>& ys, const LineFit& fit,
                   bool intercept, const std::string& title,
                   const std::string& ylabel) {
    const auto [xmin_it, xmax_it] = std::minmax_element(p.mi1.begin(), p.mi1.end());
    const auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
    double xmin = *xmin_it, xmax = *xmax_it, ymin = *ymin_it, ymax = *ymax_it;
    const double xpad = 0.05 * (xmax - xmin + 1e-300);
    const double ypad = 0.05 * (ymax - ymin + 1e-300);
    xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;
    const double pw = kPanelW - 2 * kMargin, ph = kPanelH - 2 * kMargin;
    auto sx = [&](double x) { return x0 + kMargin + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return kMargin + (ymax - y) / (ymax - ymin) * ph; };

    out << "<g>\n<text x=\"" << x0 + kPanelW / 2 << "\" y=\"" << kMargin / 2
        << "\" text-anchor=\"middle\" font-size=\"13\">" << title << "</text>\n"
        << "<rect x=\"" << x0 + kMargin << "\" y=\"" << kMargin << "\" width=\""
        << pw << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n"
        << "<text x=\"" << x0 + kPanelW / 2 << "\" y=\"" << kPanelH - 15
        << "\" text-anchor=\"middle\">MI1</text>\n"
        << "<text x=\"" << x0 + 15 << "\" y=\"" << kPanelH / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << x0 + 15 << ' '
        << kPanelH / 2 << ")\">" << ylabel << "</text>\n"
        << "<text x=\"" << x0 + kMargin << "\" y=\"" << kMargin + ph + 14
        << "\">" << xmin << "</text>\n"
        << "<text x=\"" << x0 + kMargin + pw << "\" y=\"" << kMargin + ph + 14
        << "\" text-anchor=\"end\">" << xmax << "</text>\n"
        << "<text x=\"" << x0 + kMargin - 4 << "\" y=\"" << kMargin + ph
        << "\" text-anchor=\"end\">" << ymin << "</text>\n"
        << "<text x=\"" << x0 + kMargin - 4 << "\" y=\"" << kMargin + 10
        << "\" text-anchor=\"end\">" << ymax << "</text>\n";
    const double b = intercept ? fit.intercept : 0.0;
    out << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(b + fit.slope * xmin)
        << "\" x2=\"" << sx(xmax) << "\" y2=\"" << sy(b + fit.slope * xmax)
        << "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
    for (std::size_t i = 0; i < ys.size(); ++i) {
      out << "<circle cx=\"" << sx(p.mi1[i]) << "\" cy=\"" << sy(ys[i])
          << "\" r=\"3.5\" fill=\"#2c3e50\"><title>" << xml_escape(p.labels[i])
          << "</title></circle>\n";
    }
    std::ostringstream eq;
    eq << std::setprecision(6) << "y = " << fit.slope << " x";
    if (intercept) eq << (b < 0 ? " - " : " + ") << std::abs(b);
    eq << ", R² = " << std::setprecision(6) << fit.r_squared;
    out << "<text x=\"" << x0 + kMargin + 6 << "\" y=\"" << kMargin + 16
        << "\" fill=\"#c0392b\">" << eq.str() << "</text>\n</g>\n";
  };

  panel(0, p.mi2, p.mi2_on_mi1, true, "(a) MI2 vs MI1", "MI2");
  panel(kPanelW, p.mi3, p.mi3_on_mi1, false, "(b) MI3 vs MI1", "MI3");
  out << "</svg>\n";
  return out.str();
}

}  // namespace lisakit::report
