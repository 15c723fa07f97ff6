// Command-line front end: rotation-system utilities, embedding enumeration,
// drawing, validation and rendering.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kleindraw/draw.hpp"
#include "kleindraw/enumeration.hpp"
#include "kleindraw/error.hpp"
#include "kleindraw/fixtures.hpp"
#include "kleindraw/io.hpp"
#include "kleindraw/omega.hpp"
#include "kleindraw/render.hpp"
#include "kleindraw/rotation.hpp"

using namespace kleindraw;

namespace {

// Problems with the input text itself count as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_parse_code(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::SignMismatch || c == ErrorCode::AdjacencyMismatch;
}

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void store(const std::string& path, std::string_view text) {
  try {
    write_file(path, text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<EmbeddingRecord> load_omega(const std::string& flag) {
  std::string path = flag;
  if (path.empty())
    if (const char* env = std::getenv("KLEINDRAW_OMEGA")) path = env;
  if (path.empty()) {
    auto built_in = authored_omega();
    return {built_in.begin(), built_in.end()};
  }
  return parse_omega(load(path));
}

int run_enumerate(const std::vector<std::string>& graphs, const std::string& out, int threads) {
  EnumerationOptions opts;
  opts.threads = threads;
  std::vector<EmbeddingRecord> db;
  std::string listing;
  std::optional<EnumerationResult> k5, k33;
  for (const std::string& which : graphs) {
    if (which == "k5" || which == "k33") {
      auto& slot = which == "k5" ? k5 : k33;
      slot = enumerate_embeddings(make_named(which == "k5" ? "K5" : "K33"), opts);
      std::cout << which << " all " << slot->all.size() << " klein " << slot->klein().size() << " false-positives "
                << slot->false_positives.size() << "\n";
      continue;
    }
    KrsDocument doc = parse_krs(load(which));
    EnumerationResult r = enumerate_embeddings(doc.system.graph(), opts);
    auto klein = r.klein();
    std::cout << doc.name << " all " << r.all.size() << " klein " << klein.size() << " false-positives "
              << r.false_positives.size() << "\n";
    for (std::size_t i = 0; i < klein.size(); ++i)
      listing += write_krs({doc.name + "-" + std::to_string(i), klein[i]}) + "\n";
  }
  if (k5 || k33) {
    EnumerationResult none;
    auto records = build_omega(authored_omega(), k5 ? *k5 : none, k33 ? *k33 : none);
    for (auto& rec : records)
      if ((rec.kind == BaseKind::K5 && k5) || (rec.kind == BaseKind::K33 && k33)) db.push_back(std::move(rec));
    for (std::size_t i = 0; i < db.size(); ++i) db[i].id = static_cast<int>(i);
    listing = write_omega(db) + listing;
  }
  store(out, listing);
  return 0;
}

int run_check(const std::string& kdr, const std::string& against) {
  Drawing d = parse_kdr(load(kdr));
  auto bad = crossings(d);
  std::cout << "crossings " << bad.size() << "\n";
  bool ok = bad.empty();
  if (!against.empty()) {
    KrsDocument doc = parse_krs(load(against));
    bool match = doc.system.graph() == d.graph && equivalent(extract_rotation_system(d), doc.system, false);
    std::cout << "rotation-system " << (match ? "match" : "mismatch") << "\n";
    ok = ok && match;
  }
  if (!ok) throw Error(ErrorCode::DrawingInvalid, "drawing failed validation");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Straight-line drawings of graphs on the flat Klein bottle"};
  app.require_subcommand(1);

  std::string input, output, omega_path, against, svg;
  std::vector<std::string> graphs;
  double eps = 1e-7;
  int max_iter = 10000, copies = 1, rows = 0, cols = 0;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* format_cmd = app.add_subcommand("format", "Print the switch/rotation normal form of a .krs system");
  format_cmd->add_option("input", input, "Rotation system (.krs)")->required();

  auto* euler_cmd = app.add_subcommand("euler", "Print the Euler characteristic of a .krs system");
  euler_cmd->add_option("input", input, "Rotation system (.krs)")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate Klein-bottle embeddings");
  enum_cmd->add_option("--graph", graphs, "k5, k33 or a .krs file (repeatable; default k5 and k33)");
  enum_cmd->add_option("--out", output, "Output database")->required();
  enum_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* draw_cmd = app.add_subcommand("draw", "Draw a Klein-bottle rotation system");
  draw_cmd->add_option("input", input, "Rotation system (.krs)")->required();
  draw_cmd->add_option("--omega", omega_path, "Base embedding database (default: $KLEINDRAW_OMEGA, else built in)");
  draw_cmd->add_option("--out", output, "Output drawing (.kdr)")->required();
  draw_cmd->add_option("--eps", eps, "Barycentric convergence tolerance")->check(CLI::PositiveNumber);
  draw_cmd->add_option("--max-iter", max_iter, "Maximum barycentric sweeps")->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "Validate a drawing");
  check_cmd->add_option("input", input, "Drawing (.kdr)")->required();
  check_cmd->add_option("--against", against, "Rotation system the drawing must realize (.krs)");

  auto* render_cmd = app.add_subcommand("render", "Render a drawing as SVG");
  render_cmd->add_option("input", input, "Drawing (.kdr)")->required();
  render_cmd->add_option("--svg", svg, "Output SVG")->required();
  render_cmd->add_option("--copies", copies, "Deck copies per direction")->check(CLI::PositiveNumber);

  auto* grid_cmd = app.add_subcommand("grid", "Write the Klein-bottle grid embedding");
  grid_cmd->add_option("m", rows, "Columns")->required();
  grid_cmd->add_option("n", cols, "Rows")->required();
  grid_cmd->add_option("--out", output, "Output rotation system (.krs)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*format_cmd) {
      KrsDocument doc = parse_krs(load(input));
      std::cout << write_krs({doc.name, format(doc.system).system});
    } else if (*euler_cmd) {
      std::cout << "chi " << euler_characteristic(parse_krs(load(input)).system) << "\n";
    } else if (*enum_cmd) {
      if (graphs.empty()) graphs = {"k5", "k33"};
      return run_enumerate(graphs, output, threads);
    } else if (*draw_cmd) {
      KrsDocument doc = parse_krs(load(input));
      auto omega = load_omega(omega_path);
      DrawOptions opts;
      opts.eps = eps;
      opts.max_iter = max_iter;
      DrawResult r = draw(doc.system.graph(), doc.system, omega, opts);
      store(output, write_kdr(r.drawing));
      std::cout << "base " << r.record_id << " sweeps " << r.sweeps << "\n";
    } else if (*check_cmd) {
      return run_check(input, against);
    } else if (*render_cmd) {
      store(svg, render_svg(parse_kdr(load(input)), copies));
    } else if (*grid_cmd) {
      GridEmbedding grid = klein_grid(rows, cols);
      store(output, write_krs({"klein-grid-" + std::to_string(rows) + "x" + std::to_string(cols), grid.system}));
    }
  } catch (const Error& e) {
    std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
    return is_parse_code(e.code()) ? 2 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
