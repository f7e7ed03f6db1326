#include "gnorm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "gnorm/error.hpp"
#include "gnorm/families.hpp"
#include "gnorm/io.hpp"
#include "gnorm/series.hpp"
#include "gnorm/subgroup.hpp"
#include "gnorm/verify.hpp"

namespace gnorm {

namespace {

int parse_param(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < -1000000000L || v > 1000000000L) {
    throw group_error(errc::bad_parameter, "expected an integer parameter, got '" + s + "'");
  }
  return int(v);
}

std::vector<int> parse_params(const std::vector<std::string>& params) {
  std::vector<int> out;
  out.reserve(params.size());
  for (const std::string& s : params) out.push_back(parse_param(s));
  return out;
}

// Order the family constructor would produce, without building anything.
// Used to reject over-cap requests before allocating an order^2 table.
long long predicted_order(const std::string& family, const std::vector<int>& args) {
  const auto want = [&](std::size_t n) {
    if (args.size() != n) {
      throw group_error(errc::bad_parameter, "family '" + family + "' takes " +
                                                 std::to_string(n) + " parameter(s), got " +
                                                 std::to_string(args.size()));
    }
  };
  const long long kLots = 1LL << 40;
  if (family == "cyclic") {
    want(1);
    return args[0];
  }
  if (family == "dihedral") {
    want(1);
    return 2LL * args[0];
  }
  if (family == "symmetric") {
    want(1);
    long long f = 1;
    for (int i = 2; i <= args[0] && f < kLots; ++i) f *= i;
    return f;
  }
  if (family == "quaternion") {
    want(1);
    return args[0];
  }
  if (family == "elemabelian") {
    want(2);
    long long f = 1;
    for (int i = 0; i < args[1] && f < kLots; ++i) f *= args[0];
    return f;
  }
  throw group_error(errc::bad_family, "unknown family '" + family + "'");
}

std::string file_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  const std::size_t start = slash == std::string::npos ? 0 : slash + 1;
  const std::size_t dot = path.find_last_of('.');
  const std::size_t end = (dot == std::string::npos || dot <= start) ? path.size() : dot;
  return path.substr(start, end - start);
}

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

void print_series_line(std::ostream& out, const char* name, const SeriesReport& s) {
  out << "  " << name << ": orders";
  for (int o : s.term_orders()) out << ' ' << o;
  out << "; stabilizes at " << s.stabilized_at;
  const bool ascending =
      s.kind == SeriesKind::centralizer_norm || s.kind == SeriesKind::upper_central;
  if (ascending) {
    out << (s.reaches_whole_group ? "; reaches the whole group"
                                  : "; stalls below the whole group");
  } else {
    out << (s.reaches_trivial ? "; descends to the trivial subgroup"
                              : "; stalls above the trivial subgroup");
  }
  out << "\n";
}

void print_profile(std::ostream& out, const GroupProfile& p) {
  out << "profile: nilpotent=" << (p.is_nilpotent ? "yes" : "no");
  if (p.nilpotency_class) out << " (class " << *p.nilpotency_class << ")";
  out << ", soluble=" << (p.is_soluble ? "yes" : "no");
  if (p.derived_length) out << " (derived length " << *p.derived_length << ")";
  out << ", c-length=" << opt_str(p.c_length);
  out << ", baer=" << (p.is_baer ? "yes" : "no") << "\n";
}

// Named groups a scan enumerates for one family, orders <= max_order.
std::vector<std::pair<std::string, FiniteGroup>> enumerate_scan_groups(const std::string& family,
                                                                       int max_order) {
  if (max_order < 1) throw group_error(errc::bad_parameter, "max order must be positive");
  std::vector<std::pair<std::string, FiniteGroup>> out;
  if (family == "corpus") return standard_corpus(max_order);
  if (family == "cyclic") {
    for (int n = 1; n <= max_order; ++n)
      out.emplace_back("Z_" + std::to_string(n), make_cyclic(n));
    return out;
  }
  if (family == "dihedral") {
    for (int n = 1; 2 * n <= max_order; ++n)
      out.emplace_back("D_" + std::to_string(n), make_dihedral(n));
    return out;
  }
  if (family == "symmetric") {
    long long f = 1;
    for (int k = 1; (f *= std::max(1, k)) <= max_order; ++k)
      out.emplace_back("S_" + std::to_string(k), make_symmetric(k));
    return out;
  }
  if (family == "quaternion") {
    for (int n = 8; n <= max_order; n *= 2)
      out.emplace_back("Q_" + std::to_string(n), make_generalized_quaternion(n));
    return out;
  }
  if (family == "elemabelian") {
    for (int p : {2, 3}) {
      for (int k = 2;; ++k) {
        long long order = 1;
        for (int i = 0; i < k; ++i) order *= p;
        if (order > max_order) break;
        out.emplace_back("E_" + std::to_string(p) + "^" + std::to_string(k),
                         make_elementary_abelian(p, k));
      }
    }
    return out;
  }
  if (family == "product") {
    throw group_error(errc::bad_family,
                      "'product' names no enumerable sequence and cannot be scanned");
  }
  throw group_error(errc::bad_family, "unknown scan family '" + family + "'");
}

}  // namespace

FiniteGroup build_from_spec(const std::string& family, const std::vector<std::string>& params,
                            int max_order) {
  if (family == "product") {
    if (params.size() < 4 || params.size() % 2 != 0) {
      throw group_error(errc::bad_parameter,
                        "product takes factor pairs: product <family> <n> <family> <n> ...");
    }
    long long total = 1;
    std::vector<std::pair<std::string, std::vector<int>>> factors;
    for (std::size_t i = 0; i < params.size(); i += 2) {
      const std::string& sub = params[i];
      if (sub == "product") {
        throw group_error(errc::bad_parameter, "product factors cannot themselves be products");
      }
      std::vector<int> args{parse_param(params[i + 1])};
      if (sub == "elemabelian") {
        throw group_error(errc::bad_parameter,
                          "elemabelian takes two parameters and cannot be a product factor; "
                          "use repeated cyclic factors instead");
      }
      total *= predicted_order(sub, args);
      factors.emplace_back(sub, std::move(args));
    }
    if (total > max_order) {
      throw group_error(errc::order_cap_exceeded, "product order " + std::to_string(total) +
                                                      " exceeds cap " +
                                                      std::to_string(max_order));
    }
    FiniteGroup g = make_family(factors[0].first, factors[0].second);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      g = direct_product(g, make_family(factors[i].first, factors[i].second));
    }
    return g;
  }
  const std::vector<int> args = parse_params(params);
  const long long order = predicted_order(family, args);
  if (order > max_order) {
    throw group_error(errc::order_cap_exceeded, family + " group of order " +
                                                    std::to_string(order) + " exceeds cap " +
                                                    std::to_string(max_order));
  }
  return make_family(family, args);
}

std::vector<ScanRow> scan_rows(const std::string& family, int max_order, int jobs) {
  const auto groups = enumerate_scan_groups(family, max_order);
  std::vector<ScanRow> rows(groups.size());
  const auto work = [&](std::size_t i) {
    rows[i] = make_scan_row(groups[i].first, groups[i].second.order(),
                            profile(groups[i].second));
  };
  jobs = std::max(1, std::min<int>(jobs, int(groups.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < groups.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(jobs));
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= groups.size()) return;
          try {
            work(i);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return a.order != b.order ? a.order < b.order : a.name < b.name;
  });
  return rows;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path, const GlobalOptions& opt, std::ostream& out) {
  const FiniteGroup g = build_from_spec(family, params, opt.max_order);
  if (out_path.empty()) {
    write_cayley(out, g);
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw group_error(errc::io_failure, "cannot open '" + out_path + "' for writing");
  }
  write_cayley(file, g);
  if (!file.good()) {
    throw group_error(errc::io_failure, "failed while writing '" + out_path + "'");
  }
  return 0;
}

int cmd_series(const std::string& in_path, const GlobalOptions& opt, std::ostream& out) {
  const FiniteGroup g = read_group_file(in_path, opt.max_order);
  const std::string name = file_stem(in_path);
  const SeriesReport cs = centralizer_norm_series(g);
  const SeriesReport ucs = upper_central_series(g);
  const SeriesReport lcs = lower_central_series(g);
  const SeriesReport ds = derived_series(g);
  const GroupProfile p = profile_from_series(g, ucs, ds, cs);
  if (opt.json) {
    out << report_json(name, g.order(), cs.term_orders(), ucs.term_orders(), lcs.term_orders(),
                       ds.term_orders(), p, {})
               .dump(2)
        << "\n";
    return 0;
  }
  out << "group " << name << " (order " << g.order() << ")\n";
  print_series_line(out, "c-series     ", cs);
  print_series_line(out, "upper-central", ucs);
  print_series_line(out, "lower-central", lcs);
  print_series_line(out, "derived      ", ds);
  print_profile(out, p);
  return 0;
}

int cmd_verify(const std::string& in_path, const GlobalOptions& opt, std::ostream& out) {
  const FiniteGroup g = read_group_file(in_path, opt.max_order);
  VerifyOptions vopt;
  vopt.exhaustive_subgroups = opt.exhaustive_subgroups;
  const VerificationReport rep = run_all(g, file_stem(in_path), vopt);
  if (opt.json) {
    out << report_json(rep).dump(2) << "\n";
  } else {
    out << "group " << rep.group_name << " (order " << rep.group_order << ")\n";
    print_profile(out, rep.profile);
    int vacuous = 0, failed = 0;
    for (const ClaimResult& r : rep.results) {
      out << "  " << std::left << std::setw(28) << r.claim_id << ' ' << std::setw(16)
          << claim_status_name(r.status);
      out << std::right << std::fixed << std::setprecision(3) << r.elapsed_seconds << "s";
      if (!r.mode.empty()) out << "  [" << r.mode << "]";
      if (!r.note.empty()) out << "  (" << r.note << ")";
      out << "\n";
      if (r.status == ClaimStatus::holds_vacuously) ++vacuous;
      if (r.status == ClaimStatus::fails) {
        ++failed;
        out << "    witness: " << r.witness.dump() << "\n";
      }
    }
    out << "summary: " << (rep.results.size() - std::size_t(failed)) << "/" << rep.results.size()
        << " claims hold (" << vacuous << " vacuously)\n";
  }
  return rep.all_hold() ? 0 : 1;
}

int cmd_scan(const std::string& family, int max_order, const GlobalOptions& opt,
             std::ostream& out) {
  if (max_order > opt.max_order) {
    throw group_error(errc::order_cap_exceeded,
                      "scan bound " + std::to_string(max_order) + " exceeds --max-order " +
                          std::to_string(opt.max_order));
  }
  const std::vector<ScanRow> rows = scan_rows(family, max_order, opt.jobs);
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ScanRow& row : rows) arr.push_back(scan_row_json(row));
    out << arr.dump(2) << "\n";
    return 0;
  }
  out << std::left << std::setw(12) << "name" << std::right << std::setw(7) << "order"
      << std::setw(7) << "class" << std::setw(7) << "c-len" << std::setw(7) << "d-len"
      << std::setw(8) << "margin" << "\n";
  int nilpotent = 0, positive_margin = 0, max_margin = 0;
  for (const ScanRow& row : rows) {
    out << std::left << std::setw(12) << row.name << std::right << std::setw(7) << row.order
        << std::setw(7) << opt_str(row.nilpotency_class) << std::setw(7) << opt_str(row.c_length)
        << std::setw(7) << opt_str(row.derived_length) << std::setw(8)
        << (row.question_margin ? (*row.question_margin > 0
                                       ? "+" + std::to_string(*row.question_margin)
                                       : std::to_string(*row.question_margin))
                                : std::string("-"));
    if (row.question_margin && *row.question_margin > 0) out << " *";
    out << "\n";
    if (row.nilpotency_class) ++nilpotent;
    if (row.question_margin && *row.question_margin > 0) {
      ++positive_margin;
      max_margin = std::max(max_margin, *row.question_margin);
    }
  }
  out << "summary: " << rows.size() << " groups, " << nilpotent << " nilpotent, "
      << positive_margin << " with nilpotency class above c-length";
  if (positive_margin > 0) out << " (max margin +" << max_margin << ")";
  out << "\n";
  return 0;
}

int cmd_info(const std::string& in_path, const GlobalOptions& opt, std::ostream& out) {
  const FiniteGroup g = read_group_file(in_path, opt.max_order);
  const std::string name = file_stem(in_path);
  const SubgroupSet z = center(g);
  const bool abelian = z.size() == g.order();
  int exponent = 1;
  for (element_t x = 0; x < g.order(); ++x) {
    const int o = element_order(g, x);
    exponent = std::lcm(exponent, o);
  }
  const int centralizers = distinct_centralizer_count(g);
  const GroupProfile p = profile(g);
  if (opt.json) {
    nlohmann::json j{{"group", nlohmann::json{{"name", name}, {"order", g.order()}}},
                     {"facts", nlohmann::json{{"abelian", abelian},
                                              {"center_order", z.size()},
                                              {"exponent", exponent},
                                              {"distinct_centralizers", centralizers}}},
                     {"profile", profile_json(p)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group " << name << " (order " << g.order() << ")\n";
  out << "  abelian: " << (abelian ? "yes" : "no") << "\n";
  out << "  center order: " << z.size() << "\n";
  out << "  exponent: " << exponent << "\n";
  out << "  distinct centralizers: " << centralizers << "\n";
  print_profile(out, p);
  return 0;
}

}  // namespace gnorm
