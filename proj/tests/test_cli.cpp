#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gnorm/cli.hpp"
#include "gnorm/error.hpp"
#include "gnorm/io.hpp"

using namespace gnorm;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("gnorm-test-" +
            std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) + "-" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

GlobalOptions json_opt() {
  GlobalOptions o;
  o.json = true;
  return o;
}

}  // namespace

TEST_CASE("build_from_spec builds families and enforces the cap") {
  CHECK(build_from_spec("cyclic", {"12"}, 4096).order() == 12);
  CHECK(build_from_spec("dihedral", {"16"}, 4096).order() == 32);
  CHECK(build_from_spec("elemabelian", {"3", "2"}, 4096).order() == 9);
  try {
    build_from_spec("symmetric", {"8"}, 4096);  // 8! = 40320
    FAIL("expected order_cap_exceeded");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
  }
  try {
    build_from_spec("cyclic", {"six"}, 4096);
    FAIL("expected bad_parameter");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::bad_parameter);
  }
  try {
    build_from_spec("cyclic", {"3", "4"}, 4096);
    FAIL("expected bad_parameter");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::bad_parameter);
  }
  try {
    build_from_spec("heisenberg", {"3"}, 4096);
    FAIL("expected bad_family");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::bad_family);
  }
}

TEST_CASE("build_from_spec assembles direct products") {
  CHECK(build_from_spec("product", {"dihedral", "4", "cyclic", "2"}, 4096).order() == 16);
  CHECK(build_from_spec("product", {"cyclic", "3", "cyclic", "5", "cyclic", "2"}, 4096)
            .order() == 30);
  CHECK_THROWS_AS(build_from_spec("product", {"cyclic", "3"}, 4096), group_error);
  CHECK_THROWS_AS(build_from_spec("product", {"cyclic", "3", "cyclic"}, 4096), group_error);
  CHECK_THROWS_AS(
      build_from_spec("product", {"product", "2", "cyclic", "2"}, 4096), group_error);
  // cap applies to the assembled order before construction
  try {
    build_from_spec("product", {"symmetric", "5", "symmetric", "5"}, 4096);  // 14400
    FAIL("expected order_cap_exceeded");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
  }
}

TEST_CASE("scan_rows computes the dihedral table") {
  const std::vector<ScanRow> rows = scan_rows("dihedral", 64);
  REQUIRE(rows.size() == 32);
  CHECK(rows[0].name == "D_1");
  CHECK(rows[0].order == 2);
  CHECK(rows[0].nilpotency_class == 1);
  CHECK(rows[0].c_length == 1);
  CHECK(rows[0].derived_length == 1);
  CHECK(rows[0].question_margin == 0);

  const ScanRow& d3 = rows[2];
  CHECK(d3.name == "D_3");
  CHECK_FALSE(d3.nilpotency_class.has_value());
  CHECK_FALSE(d3.c_length.has_value());
  CHECK(d3.derived_length == 2);
  CHECK_FALSE(d3.question_margin.has_value());

  const ScanRow& d8 = rows[7];
  CHECK(d8.name == "D_8");
  CHECK(d8.order == 16);
  CHECK(d8.nilpotency_class == 3);
  CHECK(d8.c_length == 2);
  CHECK(d8.derived_length == 2);
  CHECK(d8.question_margin == 1);

  const ScanRow& d32 = rows[31];
  CHECK(d32.name == "D_32");
  CHECK(d32.nilpotency_class == 5);
  CHECK(d32.c_length == 3);
  CHECK(d32.question_margin == 2);
}

TEST_CASE("corpus scan: abelian rows have class 1 and margin 0, except Z_1") {
  for (const ScanRow& row : scan_rows("corpus", 32)) {
    if (row.name == "Z_1") {
      // the trivial group has class 0 but c-length 1 by convention
      CHECK(row.nilpotency_class == 0);
      CHECK(row.c_length == 1);
      CHECK(row.question_margin == -1);
    } else if (row.nilpotency_class == 1) {
      CAPTURE(row.name);
      CHECK(row.c_length == 1);
      CHECK(row.derived_length == 1);
      CHECK(row.question_margin == 0);
    }
  }
}

TEST_CASE("parallel scan matches the serial scan") {
  const auto serial = scan_rows("corpus", 64, 1);
  const auto parallel = scan_rows("corpus", 64, 8);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].name == parallel[i].name);
    CHECK(serial[i].order == parallel[i].order);
    CHECK(serial[i].nilpotency_class == parallel[i].nilpotency_class);
    CHECK(serial[i].c_length == parallel[i].c_length);
    CHECK(serial[i].derived_length == parallel[i].derived_length);
    CHECK(serial[i].question_margin == parallel[i].question_margin);
  }
  // rows are sorted by order, then name
  for (std::size_t i = 1; i < serial.size(); ++i) {
    const bool ordered = serial[i - 1].order < serial[i].order ||
                         (serial[i - 1].order == serial[i].order &&
                          serial[i - 1].name < serial[i].name);
    CHECK(ordered);
  }
}

TEST_CASE("scan family enumeration") {
  CHECK(scan_rows("symmetric", 24).size() == 4);  // S_1, S_2, S_3, S_4
  CHECK(scan_rows("quaternion", 64).size() == 4);  // Q_8, Q_16, Q_32, Q_64
  CHECK(scan_rows("cyclic", 10).size() == 10);
  // E_2^2, E_2^3, E_2^4, E_3^2 fit under 16
  CHECK(scan_rows("elemabelian", 16).size() == 4);
  CHECK_THROWS_AS(scan_rows("product", 64), group_error);
  CHECK_THROWS_AS(scan_rows("borel", 64), group_error);
  CHECK_THROWS_AS(scan_rows("cyclic", 0), group_error);
}

TEST_CASE("cmd_gen writes a parseable table to a stream or file") {
  GlobalOptions opt;
  std::ostringstream out;
  CHECK(cmd_gen("dihedral", {"16"}, "", opt, out) == 0);
  std::istringstream back(out.str());
  CHECK(read_group(back).order() == 32);

  TempDir tmp;
  std::ostringstream ignored;
  CHECK(cmd_gen("cyclic", {"1"}, tmp.file("z1.cay"), opt, ignored) == 0);
  CHECK(read_group_file(tmp.file("z1.cay")).order() == 1);

  try {
    cmd_gen("cyclic", {"2"}, tmp.file("no-such-dir/out.cay"), opt, ignored);
    FAIL("expected io_failure");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::io_failure);
  }
}

TEST_CASE("cmd_series emits the JSON schema") {
  TempDir tmp;
  GlobalOptions opt;
  std::ostringstream ignored;
  REQUIRE(cmd_gen("symmetric", {"3"}, tmp.file("s3.cay"), opt, ignored) == 0);

  std::ostringstream out;
  CHECK(cmd_series(tmp.file("s3.cay"), json_opt(), out) == 0);
  const json j = json::parse(out.str());
  CHECK(j["group"]["name"] == "s3");
  CHECK(j["group"]["order"] == 6);
  CHECK(j["series"]["c"] == json::array({1, 1}));
  CHECK(j["series"]["upper_central"] == json::array({1, 1}));
  CHECK(j["series"]["lower_central"] == json::array({6, 3, 3}));
  CHECK(j["series"]["derived"] == json::array({6, 3, 1}));
  CHECK(j["profile"]["is_nilpotent"] == false);
  CHECK(j["profile"]["nilpotency_class"].is_null());
  CHECK(j["profile"]["c_length"].is_null());
  CHECK(j["profile"]["is_soluble"] == true);
  CHECK(j["profile"]["derived_length"] == 2);
  CHECK(j["profile"]["is_baer"] == false);
  CHECK(j["claims"].is_array());
  CHECK(j["claims"].empty());

  // text mode mentions the group and every series
  std::ostringstream text;
  GlobalOptions plain;
  CHECK(cmd_series(tmp.file("s3.cay"), plain, text) == 0);
  CHECK(text.str().find("order 6") != std::string::npos);
  CHECK(text.str().find("c-series") != std::string::npos);
  CHECK(text.str().find("derived") != std::string::npos);
}

TEST_CASE("cmd_verify exit status and JSON claims") {
  TempDir tmp;
  GlobalOptions opt;
  std::ostringstream ignored;
  REQUIRE(cmd_gen("dihedral", {"16"}, tmp.file("d16.cay"), opt, ignored) == 0);

  std::ostringstream out;
  CHECK(cmd_verify(tmp.file("d16.cay"), json_opt(), out) == 0);
  const json j = json::parse(out.str());
  CHECK(j["group"]["name"] == "d16");
  CHECK(j["group"]["order"] == 32);
  CHECK(j["series"]["c"] == json::array({1, 4, 32}));
  CHECK(j["series"]["upper_central"] == json::array({1, 2, 4, 8, 32}));
  REQUIRE(j["claims"].size() == 12);
  for (const json& claim : j["claims"]) {
    CHECK(claim.contains("id"));
    const std::string status = claim["status"];
    CHECK((status == "holds" || status == "holds-vacuously"));
    CHECK(claim["witness"].is_null());
  }
  CHECK(j["profile"]["nilpotency_class"] == 4);
  CHECK(j["profile"]["c_length"] == 2);
}

TEST_CASE("cmd_verify passes --exhaustive-subgroups through") {
  TempDir tmp;
  GlobalOptions opt;
  std::ostringstream ignored;
  REQUIRE(cmd_gen("dihedral", {"4"}, tmp.file("d4.cay"), opt, ignored) == 0);
  GlobalOptions exh;
  exh.exhaustive_subgroups = true;
  exh.json = true;
  std::ostringstream out;
  CHECK(cmd_verify(tmp.file("d4.cay"), exh, out) == 0);
  const json j = json::parse(out.str());
  bool saw_exhaustive = false;
  for (const json& claim : j["claims"])
    if (claim.contains("mode") && claim["mode"] == "exhaustive") saw_exhaustive = true;
  CHECK(saw_exhaustive);
}

TEST_CASE("cmd_scan JSON round-trips the table numbers") {
  std::ostringstream out;
  CHECK(cmd_scan("dihedral", 64, json_opt(), out) == 0);
  const json arr = json::parse(out.str());
  const std::vector<ScanRow> rows = scan_rows("dihedral", 64);
  REQUIRE(arr.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(arr[i]["name"] == rows[i].name);
    CHECK(arr[i]["order"] == rows[i].order);
    if (rows[i].nilpotency_class)
      CHECK(arr[i]["nilpotency_class"] == *rows[i].nilpotency_class);
    else
      CHECK(arr[i]["nilpotency_class"].is_null());
    if (rows[i].question_margin)
      CHECK(arr[i]["question_margin"] == *rows[i].question_margin);
    else
      CHECK(arr[i]["question_margin"].is_null());
  }
}

TEST_CASE("cmd_scan text highlights positive margins") {
  std::ostringstream out;
  GlobalOptions opt;
  CHECK(cmd_scan("dihedral", 16, opt, out) == 0);
  const std::string text = out.str();
  // D_8 has margin +1 and is starred; D_6 is not nilpotent and unstarred
  CHECK(text.find("+1 *") != std::string::npos);
  CHECK(text.find("summary:") != std::string::npos);
  // scan bound above the global cap is refused
  GlobalOptions small;
  small.max_order = 10;
  std::ostringstream ignored;
  try {
    cmd_scan("dihedral", 64, small, ignored);
    FAIL("expected order_cap_exceeded");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
  }
}

TEST_CASE("cmd_info prints basic facts") {
  TempDir tmp;
  GlobalOptions opt;
  std::ostringstream ignored;
  REQUIRE(cmd_gen("quaternion", {"8"}, tmp.file("q8.cay"), opt, ignored) == 0);

  std::ostringstream out;
  CHECK(cmd_info(tmp.file("q8.cay"), json_opt(), out) == 0);
  const json j = json::parse(out.str());
  CHECK(j["group"]["order"] == 8);
  CHECK(j["facts"]["abelian"] == false);
  CHECK(j["facts"]["center_order"] == 2);
  CHECK(j["facts"]["exponent"] == 4);
  CHECK(j["facts"]["distinct_centralizers"] == 4);
  CHECK(j["profile"]["is_nilpotent"] == true);

  std::ostringstream text;
  GlobalOptions plain;
  CHECK(cmd_info(tmp.file("q8.cay"), plain, text) == 0);
  CHECK(text.str().find("exponent: 4") != std::string::npos);
}

TEST_CASE("global max_order bounds file loads") {
  TempDir tmp;
  GlobalOptions opt;
  std::ostringstream ignored;
  REQUIRE(cmd_gen("dihedral", {"16"}, tmp.file("d16.cay"), opt, ignored) == 0);
  GlobalOptions small;
  small.max_order = 10;
  try {
    cmd_series(tmp.file("d16.cay"), small, ignored);
    FAIL("expected order_cap_exceeded");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
  }
}
