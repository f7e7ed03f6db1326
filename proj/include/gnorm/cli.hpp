#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gnorm/group.hpp"
#include "gnorm/report.hpp"

namespace gnorm {

// Flags shared by all subcommands. Input errors surface as group_error /
// parse_error exceptions; the binary maps them to exit code 2.
struct GlobalOptions {
  bool json = false;
  int max_order = kDefaultOrderCap;
  int jobs = 1;
  bool exhaustive_subgroups = false;
};

// Builds a group from a family spec as given on the command line. For
// "product", params is an alternating list: family, n, family, n, ...
// The predicted order is checked against max_order before any table is
// allocated.
FiniteGroup build_from_spec(const std::string& family, const std::vector<std::string>& params,
                            int max_order);

// Scan-table computation shared by cmd_scan, tests and regression checks.
// family is one of cyclic / dihedral / symmetric / quaternion / elemabelian /
// corpus ("product" is rejected: it names no enumerable sequence). Rows are
// sorted by (order, name).
std::vector<ScanRow> scan_rows(const std::string& family, int max_order, int jobs = 1);

// Subcommands. Return process exit codes: 0 success / all claims hold,
// 1 claim failure (cmd_verify only). Input problems throw.
int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path, const GlobalOptions& opt, std::ostream& out);
int cmd_series(const std::string& in_path, const GlobalOptions& opt, std::ostream& out);
int cmd_verify(const std::string& in_path, const GlobalOptions& opt, std::ostream& out);
int cmd_scan(const std::string& family, int max_order, const GlobalOptions& opt,
             std::ostream& out);
int cmd_info(const std::string& in_path, const GlobalOptions& opt, std::ostream& out);

}  // namespace gnorm
