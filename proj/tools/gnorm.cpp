// gnorm — build finite groups, compute their characteristic series, verify
// structural claims about the norm of centralizers, and scan families for
// groups whose nilpotency class exceeds their c-length.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gnorm/cli.hpp"
#include "gnorm/error.hpp"
#include "gnorm/group.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Finite-group engine for the norm of centralizers: C(G), the ascending "
      "C-series, central and derived series, and structural claim checks."};
  app.require_subcommand(1);
  app.fallthrough();

  gnorm::GlobalOptions opt;
  app.add_flag("--json", opt.json, "emit machine-readable JSON instead of text");
  app.add_option("--max-order", opt.max_order, "largest group order accepted")
      ->capture_default_str()
      ->check(CLI::Range(1, int(gnorm::kHardOrderLimit)));
  app.add_option("--jobs", opt.jobs, "worker threads for scans")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));
  app.add_flag("--exhaustive-subgroups", opt.exhaustive_subgroups,
               "verify subgroup-quantified claims over every subgroup (order <= 24)");

  std::string family;
  std::vector<std::string> params;
  std::string out_path;
  CLI::App* gen = app.add_subcommand("gen", "construct a family group and write it as a .cay file");
  gen->add_option("family", family,
                  "cyclic | dihedral | symmetric | quaternion | elemabelian | product")
      ->required();
  gen->add_option("params", params, "family parameters, e.g. 'dihedral 16' or 'elemabelian 2 3'");
  gen->add_option("-o,--out", out_path, "output path (default: standard output)");

  std::string series_path;
  CLI::App* series = app.add_subcommand("series", "print all four series of a group file");
  series->add_option("file", series_path, ".cay or .perm input")->required();

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "check every claim against a group file");
  verify->add_option("file", verify_path, ".cay or .perm input")->required();

  std::string scan_family;
  int scan_bound = 0;
  CLI::App* scan = app.add_subcommand("scan", "profile a whole family and tabulate c-lengths");
  scan->add_option("family", scan_family,
                   "cyclic | dihedral | symmetric | quaternion | elemabelian | corpus")
      ->required();
  scan->add_option("max_order", scan_bound, "largest group order to include")->required();

  std::string info_path;
  CLI::App* info = app.add_subcommand("info", "print basic facts about a group file");
  info->add_option("file", info_path, ".cay or .perm input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return gnorm::cmd_gen(family, params, out_path, opt, std::cout);
    if (series->parsed()) return gnorm::cmd_series(series_path, opt, std::cout);
    if (verify->parsed()) return gnorm::cmd_verify(verify_path, opt, std::cout);
    if (scan->parsed()) return gnorm::cmd_scan(scan_family, scan_bound, opt, std::cout);
    if (info->parsed()) return gnorm::cmd_info(info_path, opt, std::cout);
  } catch (const gnorm::group_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
