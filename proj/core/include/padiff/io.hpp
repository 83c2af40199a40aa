#pragma once

#include <optional>
#include <string>

#include "padiff/catalog.hpp"
#include "padiff/ramify.hpp"
#include "padiff/slopes.hpp"

namespace padiff {

/// Module files are JSON: {p, degree, coefficients: [{power, laurent:
/// [{exp, coeff: [p-1 rational strings]}], tail_from?, tail_vp_min?}],
/// metadata?: {label?, declared_alpha?}}.  Monicity is enforced at load.
ModuleFile parse_module_file(const std::string& text);
std::string write_module_file(const ModuleFile& mf);

std::string formal_report(const ModuleFile& mf);
std::string parametric_report(const ModuleFile& mf);

struct RadiiOptions {
  std::optional<Rational> at;
};
std::string radii_report(const ModuleFile& mf, const RadiiOptions& options);

/// Columns s, f_1..f_n, F_1..F_n with NA where indeterminate.  Values are
/// rendered from exact rationals at 12 significant digits.  Samples are
/// s = i*S/count, i = 1..count, S = max(2 * stabilization threshold, 4).
std::string radii_csv(const RadiiProfile& profile, long count);

std::string polygon_svg(const StaticPolygon& polygon);
std::string profile_svg(const RadiiProfile& profile);

struct CheckOutcome {
  std::string json;
  bool violation;  // exit 4 when true
};
CheckOutcome check_report(const ModuleFile& mf, InferMode mode,
                          const std::optional<std::vector<Rational>>& declared);

std::string jumps_report(const FilteredGroup& fg);
/// char_name empty: all induced characters, with an agreement flag.
std::string swan_report_semidirect(long q, long m, const std::string& char_name);
std::string swan_report_sl2f3(const std::string& char_name);
std::string table_report_semidirect(long q, long m);
std::string as_compose_report(long n, long p);
std::string quotients_report(long q, long m);

inline constexpr int kCsvSignificantDigits = 12;

}  // namespace padiff
