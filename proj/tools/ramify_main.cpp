#include <CLI11.hpp>
#include <iostream>

#include "cli_common.hpp"
#include "padiff/io.hpp"

using namespace padiff;

int main(int argc, char** argv) {
  CLI::App app{"Ramification filtrations, Swan conductors and character tables"};
  app.require_subcommand(1);

  std::vector<long> semidirect;  // q m
  bool use_sl2f3 = false;
  std::string char_name;
  long as_n = 1, as_p = 2;

  auto add_group_opts = [&](CLI::App* cmd, bool allow_sl2f3) {
    auto* sd = cmd->add_option("--semidirect", semidirect, "q m (prime power, cyclic order)")
                   ->expected(2);
    if (allow_sl2f3) {
      auto* fl = cmd->add_flag("--sl2f3", use_sl2f3, "the SL_2(F_3) filtration");
      sd->excludes(fl);
    } else {
      sd->required();
    }
  };

  auto* jumps = app.add_subcommand("jumps", "Upper-numbering ramification jumps");
  add_group_opts(jumps, true);

  auto* swan = app.add_subcommand("swan", "Swan conductor and break decomposition of a character");
  add_group_opts(swan, true);
  swan->add_option("--char", char_name,
                   "character name (semidirect: chi_L / lambda_L / phi_T or an integer L for chi_L; "
                   "sl2f3: 1a 1b 1c 2a 2b 2c 3a); omit for the whole induced family");

  auto* table = app.add_subcommand("table", "Exact character table of the semidirect group");
  add_group_opts(table, false);

  auto* compose = app.add_subcommand("as-compose", "Composition of the Artin-Schreier layers");
  compose->add_option("-n", as_n, "tame degree")->required();
  compose->add_option("-p", as_p, "prime")->required();

  auto* quotients = app.add_subcommand("quotients", "Normal subgroups and quotient classification");
  add_group_opts(quotients, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitParse;
  }

  return cli::guarded([&]() -> int {
    auto need_semidirect = [&]() {
      if (semidirect.size() != 2)
        throw precondition_error("this subcommand needs --semidirect Q M or --sl2f3");
    };
    if (jumps->parsed()) {
      if (use_sl2f3) {
        std::cout << jumps_report(sl2f3().first);
      } else {
        need_semidirect();
        std::cout << jumps_report(build_semidirect_group(semidirect[0], semidirect[1]));
      }
      return cli::kExitOk;
    }
    if (swan->parsed()) {
      if (use_sl2f3) {
        if (char_name.empty())
          throw precondition_error("--char is required with --sl2f3 (one of 1a 1b 1c 2a 2b 2c 3a)");
        std::cout << swan_report_sl2f3(char_name);
      } else {
        need_semidirect();
        std::string name = char_name;
        if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos)
          name = "chi_" + name;
        std::cout << swan_report_semidirect(semidirect[0], semidirect[1], name);
      }
      return cli::kExitOk;
    }
    if (table->parsed()) {
      need_semidirect();
      std::cout << table_report_semidirect(semidirect[0], semidirect[1]);
      return cli::kExitOk;
    }
    if (compose->parsed()) {
      std::cout << as_compose_report(as_n, as_p);
      return cli::kExitOk;
    }
    need_semidirect();
    std::cout << quotients_report(semidirect[0], semidirect[1]);
    return cli::kExitOk;
  });
}
