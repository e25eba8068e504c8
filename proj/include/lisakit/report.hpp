#pragma once

// Rendering of analyses and verification reports as csv, json and text,
// plus the scatter/fit data behind the MI1-vs-MI2 and MI1-vs-MI3 plots.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lisakit/analysis.hpp"
#include "lisakit/verification.hpp"

namespace lisakit::report {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json, Text };
Format parse_format(std::string_view text);

/// Which LISA sets appear in tabular output.
struct Variants {
  bool set1 = true;
  bool set2 = true;
  bool set3 = true;
};
/// "all" or a comma list of set1/set2/set3. Throws InvalidArgument.
Variants parse_variants(std::string_view text);

/// Decimal places for text output; LISA_KIT_PRECISION overrides the default.
int text_precision(int fallback = 4);

/// One row of the compute table (per unit, Sum or Expected).
struct TableRow {
  std::string label;
  double mi1 = 0, mi2 = 0, mi3 = 0, mi1_mi2 = 0, mi1_mi3 = 0;
  double gc1 = 0, gc2 = 0, gc3 = 0, gc1_gc2 = 0, gc1_gc3 = 0;
};

/// Per-unit rows followed by "Sum" and "Expected".
///
/// Expected holds what each column would sum to under the relation usually
/// claimed for it: gamma I, n I, I for the Moran sets and gamma_c sigma^2 C,
/// 2 n^2 C / (n - 1), C for the Geary sets. The set-2 entries are the ones
/// that disagree with the Sum row.
std::vector<TableRow> table_rows(const Analysis& a);

Json globals_json(const Analysis& a);
Json lisa_json(const Analysis& a, const Variants& v = {});
/// {"sum": {...}, "expected": {...}} keyed like the per-unit records.
Json totals_json(const Analysis& a, const Variants& v = {});
/// Full compute document: config, globals, lisa, totals, checks.
Json compute_json(const Json& config, const Analysis& a, const Variants& v,
                  const VerificationReport& r);
Json checks_json(const VerificationReport& r);
Json report_json(const VerificationReport& r);

std::string compute_csv(const Analysis& a, const Variants& v);
std::string compute_text(const Analysis& a, const Variants& v, int precision);
std::string verify_text(const VerificationReport& r, int precision);

/// y ~ slope x (+ intercept) least-squares fit summary.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double max_abs_residual = 0.0;
  std::vector<double> residuals;
};

/// Ordinary least squares with intercept. Needs two distinct x values.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);
/// Least squares through the origin.
LineFit fit_through_origin(const std::vector<double>& x,
                           const std::vector<double>& y);

struct PlotData {
  std::vector<std::string> labels;
  std::vector<double> mi1, mi2, mi3;
  LineFit mi2_on_mi1;  ///< with intercept
  LineFit mi3_on_mi1;  ///< through origin; slope is 1/gamma
  double inverse_gamma = 0.0;
};

PlotData plot_data(const Analysis& a);
std::string plot_csv(const PlotData& p);
Json plot_json(const PlotData& p);
std::string plot_text(const PlotData& p, int precision);
/// Two side-by-side scatter panels with the fitted lines.
std::string plot_svg(const PlotData& p);

}  // namespace lisakit::report
