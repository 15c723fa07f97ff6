#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include "kleindraw/io.hpp"
#include "kleindraw/omega.hpp"
#include "kleindraw/rotation.hpp"
#include "support.hpp"

using namespace kleindraw;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

// Scratch directory shared by the cases.
const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("kleindraw-cli-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

struct Cleanup {
  ~Cleanup() {
    std::error_code ec;
    fs::remove_all(scratch(), ec);
  }
} cleanup;

std::string path(const std::string& name) { return (scratch() / name).string(); }

Run run(const std::string& args, const std::string& env = "") {
  const std::string out = path("stdout.txt"), err = path("stderr.txt");
  std::string cmd = env + " '" KLEINDRAW_CLI "' " + args + " >'" + out + "' 2>'" + err + "'";
  int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string write_system(const std::string& name, const RotationSystem& rs) {
  std::string p = path(name);
  write_file(p, write_krs({name, rs}));
  return p;
}

}  // namespace

TEST_CASE("grid, euler and format") {
  Run grid = run("grid 2 8 --out " + path("grid.krs"));
  CHECK(grid.status == 0);
  Run chi = run("euler " + path("grid.krs"));
  CHECK(chi.status == 0);
  CHECK(chi.out == "chi 0\n");

  std::string k5 = write_system("k5.krs", authored_omega()[3].system);
  CHECK(run("euler " + k5).out == "chi 0\n");

  RotationSystem messy = testkit::random_system(complete_graph(5));
  Run f = run("format " + write_system("messy.krs", messy));
  CHECK(f.status == 0);
  CHECK(parse_krs(f.out).system == format(messy).system);

  CHECK(run("grid 1 8 --out " + path("bad.krs")).status == 1);
  CHECK(contains(run("grid 1 8 --out " + path("bad.krs")).err, "bad-dimensions:"));
}

TEST_CASE("draw, check and render") {
  run("grid 2 8 --out " + path("grid.krs"));
  Run d = run("draw " + path("grid.krs") + " --out " + path("grid.kdr"));
  CHECK(d.status == 0);
  CHECK(contains(d.out, "sweeps"));
  Run c = run("check " + path("grid.kdr") + " --against " + path("grid.krs"));
  CHECK(c.status == 0);
  CHECK(c.out == "crossings 0\nrotation-system match\n");

  Run r = run("render " + path("grid.kdr") + " --svg " + path("grid.svg") + " --copies 2");
  CHECK(r.status == 0);
  std::string svg = read_file(path("grid.svg"));
  CHECK(contains(svg, "<svg"));
  CHECK(contains(svg, "class=\"ghost\""));

  // a drawing with a crossing fails the check
  write_file(path("cross.kdr"),
             "vertex 0 0.1 0.1\nvertex 1 0.9 0.9\nvertex 2 0.1 0.9\nvertex 3 0.9 0.1\nedge 0 1 0 0\nedge 2 3 0 0\n");
  Run x = run("check " + path("cross.kdr"));
  CHECK(x.status == 1);
  CHECK(x.out == "crossings 1\n");
  CHECK(contains(x.err, "drawing-invalid:"));

  // a valid drawing of another embedding does not match
  std::string other = write_system("other.krs", authored_omega()[0].system);
  write_file(path("k5b.kdr"), write_kdr(authored_omega()[1].drawing));
  Run mismatch = run("check " + path("k5b.kdr") + " --against " + other);
  CHECK(mismatch.status == 1);
  CHECK(contains(mismatch.out, "rotation-system mismatch"));
}

TEST_CASE("domain errors exit with 1 and a machine-readable reason") {
  RotationSystem torus = testkit::random_system(complete_graph(5), false);
  while (euler_characteristic(torus) != 0) torus = testkit::random_system(complete_graph(5), false);
  Run r = run("draw " + write_system("torus.krs", torus) + " --out " + path("torus.kdr"));
  CHECK(r.status == 1);
  CHECK(r.err.rfind("not-klein-system: ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  std::string sphere = path("sphere.krs");
  write_file(sphere, "graph k4\nvertices 4\nrs 0: 1 2 3\nrs 1: 2 0 3\nrs 2: 3 0 1\nrs 3: 1 0 2\n");
  CHECK(run("draw " + sphere + " --out " + path("s.kdr")).err.rfind("graph-is-planar: ", 0) == 0);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("draw").status == 2);
  CHECK(run("euler " + path("missing.krs")).status == 2);
  write_file(path("broken.krs"), "graph x\nvertices two\n");
  Run b = run("euler " + path("broken.krs"));
  CHECK(b.status == 2);
  CHECK(b.err.rfind("parse-error: line 2", 0) == 0);
  CHECK(run("render " + path("grid.kdr") + " --svg " + path("x.svg") + " --copies 0").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("enumeration and database selection") {
  Run e = run("enumerate --graph k33 --out " + path("k33.kdb"));
  CHECK(e.status == 0);
  CHECK(e.out == "k33 all 4 klein 2 false-positives 2\n");
  std::string first = read_file(path("k33.kdb"));
  CHECK(parse_omega(first).size() == 2);
  run("enumerate --graph k33 --out " + path("k33-again.kdb"));
  CHECK(read_file(path("k33-again.kdb")) == first);

  std::string k4 = write_system("k4.krs", RotationSystem::sorted(complete_graph(4)));
  Run f = run("enumerate --graph " + k4 + " --out " + path("k4.txt"));
  CHECK(f.status == 0);
  CHECK(contains(f.out, "k4.krs all "));

  std::string k5 = write_system("k5.krs", authored_omega()[0].system);
  Run miss = run("draw " + k5 + " --omega " + path("k33.kdb") + " --out " + path("k5.kdr"));
  CHECK(miss.status == 1);
  CHECK(miss.err.rfind("no-base-match: ", 0) == 0);
  Run env = run("draw " + k5 + " --out " + path("k5.kdr"), "KLEINDRAW_OMEGA='" + path("k33.kdb") + "'");
  CHECK(env.status == 1);
  CHECK(env.err.rfind("no-base-match: ", 0) == 0);
  CHECK(run("draw " + k5 + " --out " + path("k5.kdr")).status == 0);
}
