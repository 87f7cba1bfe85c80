#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_util.hpp"

namespace fs = std::filesystem;
using testutil::run_command;

namespace {

const std::string kBin = BMSEP_BIN;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bmsep_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  fs::path file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream out(p);
    out << content;
    return p;
  }
};

bool has_line(const std::string& text, const std::string& line) {
  std::size_t at = 0;
  while ((at = text.find(line, at)) != std::string::npos) {
    const bool starts = at == 0 || text[at - 1] == '\n';
    const std::size_t end = at + line.size();
    const bool ends = end == text.size() || text[end] == '\n';
    if (starts && ends) return true;
    ++at;
  }
  return false;
}

const char* kPendantTriangle =
    "p bmatch 6 6 tsp\n"
    "e 0 1 2\n"
    "e 1 1 3\n"
    "e 2 2 3\n"
    "e 3 1 4\n"
    "e 4 2 5\n"
    "e 5 3 6\n";

const char* kPendantPoint =
    "x 0 1/2\n"
    "x 1 1/2\n"
    "x 2 1/2\n"
    "x 3 1\n"
    "x 4 1\n"
    "x 5 1\n";

}  // namespace

TEST_CASE("separate reports the violated blossom with exit status 1") {
  TempDir dir;
  const auto inst = dir.file("g.bm", kPendantTriangle);
  const auto point = dir.file("g.x", kPendantPoint);
  const auto r = run_command(kBin + " separate " + inst.string() + " " + point.string() +
                             " --oracle-check --count-maxflows");
  CHECK(r.status == 1);
  CHECK(has_line(r.out, "BLOSSOM W={1,2,3} F={3,4,5} lhs=9/2 rhs=4 violation=1/2 beta=0"));
  CHECK(has_line(r.out, "maxflow_calls=6"));
}

TEST_CASE("separate reports FEASIBLE with exit status 0") {
  TempDir dir;
  const auto inst = dir.file("k2.bm",
                             "p bmatch 2 1 cap\n"
                             "v 1 1\nv 2 1\n"
                             "e 0 1 2 1\n");
  const auto point = dir.file("k2.x", "x 0 3/5\n");
  const auto r = run_command(kBin + " separate " + inst.string() + " " + point.string() +
                             " --oracle-check");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "FEASIBLE beta=1"));
}

TEST_CASE("separate flags degree and bound violations first") {
  TempDir dir;
  const auto inst = dir.file("k2.bm",
                             "p bmatch 2 1 cap\n"
                             "v 1 1\nv 2 1\n"
                             "e 0 1 2 1\n");
  const auto point = dir.file("k2.x", "x 0 3/2\n");
  const auto r = run_command(kBin + " separate " + inst.string() + " " + point.string());
  CHECK(r.status == 1);
  CHECK(has_line(r.out, "DEGREE i=1 violation=1/2"));
  CHECK(has_line(r.out, "DEGREE i=2 violation=1/2"));
  CHECK(has_line(r.out, "BOUND e=0 violation=1/2"));
}

TEST_CASE("separate handles uncapacitated instances") {
  TempDir dir;
  const auto inst = dir.file("tri.bm",
                             "p bmatch 3 3 uncap\n"
                             "v 1 1\nv 2 1\nv 3 1\n"
                             "e 0 1 2\ne 1 1 3\ne 2 2 3\n");
  const auto point = dir.file("tri.x", "x 0 1/2\nx 1 1/2\nx 2 1/2\n");
  const auto r = run_command(kBin + " separate " + inst.string() + " " + point.string() +
                             " --oracle-check --mode uncap");
  CHECK(r.status == 1);
  CHECK(has_line(r.out, "BLOSSOM W={1,2,3} F={} lhs=3/2 rhs=1 violation=1/2 beta=0"));
}

TEST_CASE("malformed input exits with status 2") {
  TempDir dir;
  const auto inst = dir.file("bad.bm", "p bmatch 2 1 cap\nv 1 1\nv 2 1\ne 0 1 2\n");
  const auto point = dir.file("bad.x", "");
  const auto r = run_command(kBin + " separate " + inst.string() + " " + point.string() +
                             " 2>" + (dir.path / "err.txt").string());
  CHECK(r.status == 2);
  std::ifstream err(dir.path / "err.txt");
  std::string text((std::istreambuf_iterator<char>(err)), std::istreambuf_iterator<char>());
  CHECK(text.find("line 4") != std::string::npos);

  const auto missing = run_command(kBin + " separate /nonexistent.bm /nonexistent.x 2>/dev/null");
  CHECK(missing.status == 2);

  const auto mode = run_command(kBin + " separate " + inst.string() + " " + point.string() +
                                " --mode uncap 2>/dev/null");
  CHECK(mode.status == 2);
}

TEST_CASE("gomory-hu prints tree edges and pi lines") {
  TempDir dir;
  const auto k2 = dir.file("k2.gr", "p graph 2 1\ne 0 1 2 7/3\n");
  const auto r = run_command(kBin + " gomory-hu " + k2.string() + " --oracle-check");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "t 1 2 7/3"));

  const auto path = dir.file("path.gr", "p graph 3 2\ne 0 1 2 2\ne 1 2 3 1\n");
  const auto p = run_command(kBin + " gomory-hu " + path.string() + " --count-maxflows");
  CHECK(p.status == 0);
  CHECK(has_line(p.out, "t 1 2 2"));
  CHECK(has_line(p.out, "t 2 3 1"));
  CHECK(has_line(p.out, "maxflow_calls=2"));

  const auto tri = dir.file("tri.gr", "p graph 3 3\ne 0 1 2 1\ne 1 1 3 1\ne 2 2 3 1\n");
  const auto t = run_command(kBin + " gomory-hu " + tri.string() + " -X 1,2 --oracle-check");
  CHECK(t.status == 0);
  CHECK(has_line(t.out, "t 1 2 2"));
  CHECK((has_line(t.out, "pi 3 1") || has_line(t.out, "pi 3 2")));

  const auto bad = run_command(kBin + " gomory-hu " + tri.string() + " -X 9 2>/dev/null");
  CHECK(bad.status == 2);
}

TEST_CASE("tcut prints the best odd cut") {
  TempDir dir;
  const auto path = dir.file("path.gr", "p graph 3 2\ne 0 1 2 1\ne 1 2 3 5\n");
  const auto r = run_command(kBin + " tcut " + path.string() + " -T 1,3 --oracle-check");
  CHECK(r.status == 0);
  CHECK((has_line(r.out, "TCUT U={1} value=1") || has_line(r.out, "TCUT U={2,3} value=1")));

  const auto odd = run_command(kBin + " tcut " + path.string() + " -T 1 2>/dev/null");
  CHECK(odd.status == 2);
}
