#include <CLI11.hpp>
#include <iostream>

#include "cli_common.hpp"
#include "padiff/io.hpp"

using namespace padiff;

namespace {

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw parse_error("empty entry in rational list");
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw parse_error("empty rational list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact formal and p-adic slope invariants of differential operators"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for the cyclic-vector search");

  std::string file;
  auto* formal = app.add_subcommand("formal", "Formal Newton polygon and formal slopes");
  formal->add_option("file", file, "module file")->required();
  std::string formal_svg_path;
  formal->add_option("--svg", formal_svg_path, "write a drawing of the polygon");

  auto* parametric = app.add_subcommand("parametric", "Interval decomposition of NP_s and thresholds");
  parametric->add_option("file", file, "module file")->required();

  auto* radii = app.add_subcommand("radii", "Subsidiary radius functions f_i, F_i");
  radii->add_option("file", file, "module file")->required();
  std::string at_str, csv_path, svg_path;
  long samples = 64;
  radii->add_option("--at", at_str, "evaluate subsidiary radii at this s (rational)");
  radii->add_option("--csv", csv_path, "write sampled values as CSV");
  radii->add_option("--svg", svg_path, "write a plot of the F_i");
  radii->add_option("--samples", samples, "CSV sample count");

  auto* check = app.add_subcommand("check", "Slope comparison of p-adic against formal slopes");
  check->add_option("file", file, "module file")->required();
  std::string declared_str;
  bool certify = false, bound = false;
  auto* declared_opt = check->add_option("--declared", declared_str, "comma-separated p-adic slopes");
  auto* certify_flag = check->add_flag("--certify", certify, "derive slopes from the radii profile");
  auto* bound_flag = check->add_flag("--bound", bound, "derive partial-sum upper bounds only");
  declared_opt->excludes(certify_flag)->excludes(bound_flag);
  certify_flag->excludes(bound_flag);

  auto* catalog = app.add_subcommand("catalog", "Emit a built-in example operator");
  catalog->require_subcommand(1);
  long cat_n = 2, cat_p = 2, cat_k = 1;
  std::string out_path;
  auto* cat_bessel = catalog->add_subcommand("bessel", "rank-n Bessel operator at infinity");
  cat_bessel->add_option("-n", cat_n, "rank")->required();
  cat_bessel->add_option("-p", cat_p, "prime")->required();
  cat_bessel->add_option("-o", out_path, "output path (stdout default)");
  auto* cat_exp = catalog->add_subcommand("exp", "exp(pi/x^k) operator");
  cat_exp->add_option("-k", cat_k, "pole order")->required();
  cat_exp->add_option("-p", cat_p, "prime")->required();
  cat_exp->add_option("-o", out_path, "output path (stdout default)");
  auto* cat_adj = catalog->add_subcommand("adjoint-bessel2", "trace-zero endomorphism operator, p = 2");
  cat_adj->add_option("-o", out_path, "output path (stdout default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitParse;
  }

  return cli::guarded([&]() -> int {
    (void)seed;  // reserved for subcommands that run the cyclic-vector search
    if (formal->parsed()) {
      ModuleFile mf = parse_module_file(cli::read_file(file));
      std::cout << formal_report(mf);
      if (!formal_svg_path.empty()) cli::write_file(formal_svg_path, polygon_svg(formal_polygon(mf.op)));
      return cli::kExitOk;
    }
    if (parametric->parsed()) {
      std::cout << parametric_report(parse_module_file(cli::read_file(file)));
      return cli::kExitOk;
    }
    if (radii->parsed()) {
      ModuleFile mf = parse_module_file(cli::read_file(file));
      RadiiOptions options;
      if (!at_str.empty()) options.at = parse_rational(at_str);
      std::cout << radii_report(mf, options);
      if (!csv_path.empty() || !svg_path.empty()) {
        RadiiProfile profile = radii_profile(mf.op);
        if (!csv_path.empty()) cli::write_file(csv_path, radii_csv(profile, samples));
        if (!svg_path.empty()) cli::write_file(svg_path, profile_svg(profile));
      }
      return cli::kExitOk;
    }
    if (check->parsed()) {
      ModuleFile mf = parse_module_file(cli::read_file(file));
      InferMode mode;
      std::optional<std::vector<Rational>> declared;
      if (certify) {
        mode = InferMode::certify;
      } else if (bound) {
        mode = InferMode::bound;
      } else if (!declared_str.empty()) {
        mode = InferMode::declared;
        declared = parse_rational_list(declared_str);
      } else if (mf.declared_alpha) {
        mode = InferMode::declared;
        declared = mf.declared_alpha;
      } else {
        throw precondition_error(
            "choose --declared, --certify or --bound (the file carries no declared slopes)");
      }
      CheckOutcome outcome = check_report(mf, mode, declared);
      std::cout << outcome.json;
      return outcome.violation ? cli::kExitViolation : cli::kExitOk;
    }
    ModuleFile mf = cat_bessel->parsed() ? catalog_bessel(cat_n, cat_p)
                    : cat_exp->parsed()  ? catalog_exp(cat_k, cat_p)
                                         : catalog_adjoint_bessel2();
    std::string text = write_module_file(mf);
    if (out_path.empty()) std::cout << text;
    else cli::write_file(out_path, text);
    return cli::kExitOk;
  });
}
