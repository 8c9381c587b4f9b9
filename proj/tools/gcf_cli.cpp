// gcf: command-line front end for the Gaussian curvature filter library.
//
// Exit codes: 0 success, 2 command-line/parse/IO failure, 3 validation failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcf/coloring.hpp"
#include "gcf/curvature.hpp"
#include "gcf/errors.hpp"
#include "gcf/filter.hpp"
#include "gcf/generators.hpp"
#include "gcf/mesh_io.hpp"
#include "gcf/metrics.hpp"
#include "gcf/noise.hpp"
#include "gcf/simd.hpp"
#include "gcf/smoothing.hpp"
#include "gcf/topology.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

// Validation failure detected by the CLI itself; carries the subcommand for usage output.
struct UsageError : std::runtime_error {
  UsageError(const std::string& what, const CLI::App* app) : std::runtime_error(what), app(app) {}
  const CLI::App* app;
};

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct Manifest {
  json doc;
  std::string path;

  Manifest(const std::string& command, int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    doc["tool"] = "gcf";
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["command_line"] = args;
    doc["simd"] = std::string(gcf::simd::isaName(gcf::simd::activeIsa()));
    doc["timings_s"] = json::object();
  }

  void write() const {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw gcf::IoError("cannot write manifest '" + path + "'");
    out << doc.dump(2) << '\n';
  }
};

gcf::LoadedMesh load(const std::string& path) {
  auto loaded = gcf::loadMeshFile(path);
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  return loaded;
}

unsigned defaultThreads() {
  if (const char* env = std::getenv("GCF_THREADS"); env != nullptr && *env != '\0') {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable GCF_THREADS='" << env << "'\n";
    }
  }
  return 0;
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw gcf::IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw gcf::IoError("failed writing '" + path + "'");
}

std::string formatNumber(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

// Distinct RGB per label for the first 24 labels; larger labels encode their bits.
gcf::Rgb labelColor(std::uint32_t label) {
  static constexpr gcf::Rgb kPalette[] = {
      {230, 25, 75},   {60, 180, 75},   {255, 225, 25},  {0, 130, 200},   {245, 130, 48},  {145, 30, 180},
      {70, 240, 240},  {240, 50, 230},  {210, 245, 60},  {250, 190, 212}, {0, 128, 128},   {220, 190, 255},
      {170, 110, 40},  {255, 250, 200}, {128, 0, 0},     {170, 255, 195}, {128, 128, 0},   {255, 215, 180},
      {0, 0, 128},     {128, 128, 128}, {255, 255, 255}, {0, 0, 0},       {64, 64, 160},   {160, 64, 64}};
  constexpr std::uint32_t n = sizeof(kPalette) / sizeof(kPalette[0]);
  if (label < n) return kPalette[label];
  const std::uint32_t code = label - n;
  return {static_cast<std::uint8_t>(1 + (code & 0x7f)), static_cast<std::uint8_t>(3 + ((code >> 7) & 0x7f)),
          static_cast<std::uint8_t>(5 + ((code >> 14) & 0x7f))};
}

// ---------------------------------------------------------------------------

struct FilterArgs {
  std::string input, output, trace, manifest;
  int iterations = 0;
  unsigned threads = defaultThreads();
};

int runFilter(const FilterArgs& a, const CLI::App* app, int argc, char** argv) {
  if (a.iterations < 1) throw UsageError("--iters must be at least 1", app);
  Manifest manifest("filter", argc, argv);
  manifest.path = a.manifest;
  Stopwatch clock;
  auto& t = manifest.doc["timings_s"];

  const auto loaded = load(a.input);
  t["load"] = clock.lap();
  const auto topology = gcf::buildTopology(loaded.mesh);
  t["topology"] = clock.lap();
  const auto coloring = gcf::greedyDomainDecomposition(topology);
  t["color"] = clock.lap();
  gcf::FilterConfig config{a.iterations, a.threads, !a.trace.empty()};
  const auto result = gcf::gcfFilter(loaded.mesh, topology, coloring, config);
  t["filter"] = clock.lap();
  gcf::saveMesh(result.mesh, a.output);
  t["save"] = clock.lap();

  if (result.trace) {
    std::ostringstream csv;
    csv << "iteration,gce\n";
    for (std::size_t i = 0; i < result.trace->gcePerIteration.size(); ++i) {
      csv << i << ',' << formatNumber(result.trace->gcePerIteration[i]) << '\n';
    }
    writeTextFile(a.trace, csv.str());
  }

  manifest.doc["inputs"] = {a.input};
  manifest.doc["outputs"] = a.trace.empty() ? json{a.output} : json{a.output, a.trace};
  manifest.doc["seed"] = nullptr;  // the filter is deterministic
  manifest.doc["config"] = {{"iterations", a.iterations},
                            {"threads", a.threads},
                            {"domains", coloring.domainCount()},
                            {"vertices", loaded.mesh.vertexCount()},
                            {"faces", loaded.mesh.faceCount()}};
  manifest.doc["tolerances"] = {{"degenerate_length", "1e-14 * mean edge length"},
                                {"degenerate_cross", "1e-14 * mean edge length^2"},
                                {"vertex_normal", "1e-14 * max incident face area"}};
  manifest.write();
  return 0;
}

struct MetricsArgs {
  std::string ref, test, histCsv;
  std::size_t bins = 200;
  double clip = 99.0;
};

int runMetrics(const MetricsArgs& a) {
  const auto ref = load(a.ref).mesh;
  const auto test = load(a.test).mesh;
  const gcf::HistogramOptions options{a.bins, a.clip};
  const auto report = gcf::evaluate(ref, test, options);

  json out;
  out["msae_deg"] = report.msaeDegrees;
  out["gce"] = report.gce;
  out["d_mean"] = report.dMean;
  out["d_max"] = report.dMax;
  out["kld"] = report.kld;
  out["params"] = {{"bins", a.bins},
                   {"clip_percentile", a.clip},
                   {"kld_direction", "KL(test||ref)"},
                   {"kld_epsilon", 1e-12},
                   {"msae_units", "degrees"},
                   {"msae_normals", "face"},
                   {"gce_vertices", "interior"}};
  out["notes"] = report.notes;
  std::cout << out.dump(2) << '\n';

  if (!a.histCsv.empty()) {
    const auto topoRef = gcf::buildTopology(ref);
    const auto hRef = gcf::curvatureHistogram(gcf::gaussianCurvature(ref, topoRef), options);
    const auto hTest = gcf::curvatureHistogram(gcf::gaussianCurvature(test, topoRef), hRef.binEdges);
    std::ostringstream csv;
    csv << "bin_left,bin_right,p_test,p_ref\n";
    for (std::size_t i = 0; i < hRef.probs.size(); ++i) {
      csv << formatNumber(hRef.binEdges[i]) << ',' << formatNumber(hRef.binEdges[i + 1]) << ','
          << formatNumber(hTest.probs[i]) << ',' << formatNumber(hRef.probs[i]) << '\n';
    }
    writeTextFile(a.histCsv, csv.str());
  }
  return 0;
}

struct NoiseArgs {
  std::string input, output, mode = "normal", manifest;
  double sigma = 0.3;
  std::uint64_t seed = 42;
};

int runNoise(const NoiseArgs& a, const CLI::App* app, int argc, char** argv) {
  gcf::NoiseConfig config;
  config.sigmaFactor = a.sigma;
  config.seed = a.seed;
  if (a.mode == "normal") {
    config.mode = gcf::NoiseMode::AlongNormal;
  } else if (a.mode == "isotropic") {
    config.mode = gcf::NoiseMode::Isotropic;
  } else {
    throw UsageError("--mode must be 'normal' or 'isotropic'", app);
  }
  Manifest manifest("noise", argc, argv);
  manifest.path = a.manifest;
  Stopwatch clock;
  const auto mesh = load(a.input).mesh;
  manifest.doc["timings_s"]["load"] = clock.lap();
  const auto noisy = gcf::addNoise(mesh, gcf::buildTopology(mesh), config);
  manifest.doc["timings_s"]["noise"] = clock.lap();
  gcf::saveMesh(noisy, a.output);
  manifest.doc["timings_s"]["save"] = clock.lap();
  manifest.doc["seed"] = a.seed;
  manifest.doc["config"] = {{"sigma_factor", a.sigma}, {"mode", a.mode}};
  manifest.doc["inputs"] = {a.input};
  manifest.doc["outputs"] = {a.output};
  manifest.write();
  return 0;
}

struct GenArgs {
  std::string kind, output;
  gcf::ShapeParams params;
  bool uncapped = false;
};

int runGen(GenArgs a) {
  a.params.capped = !a.uncapped;
  const auto mesh = gcf::generateMesh(gcf::parseShapeKind(a.kind), a.params);
  gcf::saveMesh(mesh, a.output);
  std::cout << "vertices " << mesh.vertexCount() << "\nfaces " << mesh.faceCount() << '\n';
  return 0;
}

struct ColorArgs {
  std::string input, output;
};

int runColor(const ColorArgs& a) {
  const auto mesh = load(a.input).mesh;
  const auto coloring = gcf::greedyDomainDecomposition(gcf::buildTopology(mesh));
  std::vector<gcf::Rgb> colors(mesh.vertexCount());
  for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = labelColor(coloring.colorOf[v]);
  gcf::VertexChannels channels;
  channels.colors = colors;
  gcf::saveMesh(mesh, a.output, gcf::MeshFormat::Auto, channels);
  std::cout << "domains " << coloring.domainCount() << '\n';
  return 0;
}

struct CurvatureArgs {
  std::string input, output, histCsv;
  std::size_t bins = 200;
  double clip = 99.0;
};

int runCurvature(const CurvatureArgs& a) {
  const auto mesh = load(a.input).mesh;
  const auto topology = gcf::buildTopology(mesh);
  const auto field = gcf::gaussianCurvature(mesh, topology);
  if (fs::path(a.output).extension() == ".csv") {
    std::ostringstream csv;
    csv << "vertexIndex,K\n";
    for (std::size_t v = 0; v < field.K.size(); ++v) csv << v << ',' << formatNumber(field.K[v]) << '\n';
    writeTextFile(a.output, csv.str());
  } else {
    gcf::VertexChannels channels;
    channels.scalars = field.K;
    gcf::saveMesh(mesh, a.output, gcf::MeshFormat::Auto, channels);
  }
  if (!a.histCsv.empty()) {
    const auto h = gcf::curvatureHistogram(field, gcf::HistogramOptions{a.bins, a.clip});
    std::ostringstream csv;
    csv << "bin_left,bin_right,p\n";
    for (std::size_t i = 0; i < h.probs.size(); ++i) {
      csv << formatNumber(h.binEdges[i]) << ',' << formatNumber(h.binEdges[i + 1]) << ',' << formatNumber(h.probs[i])
          << '\n';
    }
    writeTextFile(a.histCsv, csv.str());
  }
  std::cout << "gce " << formatNumber(gcf::gaussianCurvatureEnergy(field, false)) << '\n';
  return 0;
}

struct SmoothArgs {
  std::string input, output, method = "laplacian";
  int iterations = 10;
  double lambda = 0.5;
  double mu = -0.53;
};

int runSmooth(const SmoothArgs& a, const CLI::App* app) {
  const auto mesh = load(a.input).mesh;
  const auto topology = gcf::buildTopology(mesh);
  gcf::TriangleMesh out;
  if (a.method == "laplacian") {
    out = gcf::laplacianSmooth(mesh, topology, {a.iterations, a.lambda});
  } else if (a.method == "taubin") {
    out = gcf::taubinSmooth(mesh, topology, {a.iterations, a.lambda, a.mu});
  } else {
    throw UsageError("--method must be 'laplacian' or 'taubin'", app);
  }
  gcf::saveMesh(out, a.output);
  return 0;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<int> spheres;
  std::vector<int> iterations{10};
  std::vector<unsigned> threads{1};
  std::string output;
};

int runBench(const BenchArgs& a, const CLI::App* app) {
  if (a.inputs.empty() && a.spheres.empty()) throw UsageError("give at least one -i mesh or --sphere level", app);
  for (int it : a.iterations) {
    if (it < 1) throw UsageError("--iters values must be at least 1", app);
  }
  std::vector<std::pair<std::string, gcf::TriangleMesh>> meshes;
  for (const auto& path : a.inputs) meshes.emplace_back(fs::path(path).filename().string(), load(path).mesh);
  for (int level : a.spheres) {
    const auto clean = gcf::makeIcosphere(level);
    meshes.emplace_back("icosphere" + std::to_string(level) + "_noisy",
                        gcf::addNoise(clean, gcf::buildTopology(clean), gcf::NoiseConfig{0.3, 42}));
  }

  std::ostringstream csv;
  csv << "mesh,vertices,iters,threads,seconds\n";
  for (const auto& [name, mesh] : meshes) {
    const auto topology = gcf::buildTopology(mesh);
    const auto coloring = gcf::greedyDomainDecomposition(topology);
    for (int it : a.iterations) {
      for (unsigned th : a.threads) {
        Stopwatch clock;
        gcf::gcfFilter(mesh, topology, coloring, gcf::FilterConfig{it, th, false});
        csv << name << ',' << mesh.vertexCount() << ',' << it << ',' << th << ',' << formatNumber(clock.lap()) << '\n';
      }
    }
  }
  if (a.output.empty()) {
    std::cout << csv.str();
  } else {
    writeTextFile(a.output, csv.str());
  }
  return 0;
}

int classify(const gcf::Error& e) {
  if (dynamic_cast<const gcf::ParseError*>(&e) || dynamic_cast<const gcf::IoError*>(&e) ||
      dynamic_cast<const gcf::UnsupportedFormat*>(&e) || dynamic_cast<const gcf::IndexError*>(&e)) {
    return kExitIo;
  }
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian curvature filter for triangle meshes"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string simd;
  app.add_option("--simd", simd, "Kernel variant: scalar or avx2 (default: best available)");

  std::function<int()> action;

  FilterArgs fa;
  auto* filter = app.add_subcommand("filter", "Run the Gaussian curvature filter");
  filter->add_option("-i,--input", fa.input, "Input mesh (obj/off/ply)")->required();
  filter->add_option("-o,--output", fa.output, "Output mesh")->required();
  filter->add_option("--iters", fa.iterations, "Iteration count (>= 1)")->required();
  filter->add_option("--threads", fa.threads, "Worker threads, 0 = auto (default: $GCF_THREADS or 0)");
  filter->add_option("--trace", fa.trace, "Write per-iteration energy CSV (iteration,gce)");
  filter->add_option("--manifest", fa.manifest, "Write a JSON run manifest");
  filter->callback([&] { action = [&] { return runFilter(fa, filter, argc, argv); }; });

  MetricsArgs ma;
  auto* metrics = app.add_subcommand("metrics", "Compare a mesh against a ground truth with identical connectivity");
  metrics->add_option("--ref", ma.ref, "Ground-truth mesh")->required();
  metrics->add_option("--test", ma.test, "Mesh to evaluate")->required();
  metrics->add_option("--bins", ma.bins, "Curvature histogram bins")->capture_default_str();
  metrics->add_option("--clip", ma.clip, "Histogram range percentile of |K|")->capture_default_str();
  metrics->add_option("--hist-csv", ma.histCsv, "Write both curvature histograms as CSV");
  metrics->callback([&] { action = [&] { return runMetrics(ma); }; });

  NoiseArgs na;
  auto* noise = app.add_subcommand("noise", "Add seeded Gaussian noise scaled by the mean edge length");
  noise->add_option("-i,--input", na.input, "Input mesh")->required();
  noise->add_option("-o,--output", na.output, "Output mesh")->required();
  noise->add_option("--sigma", na.sigma, "Standard deviation in mean edge lengths")->capture_default_str();
  noise->add_option("--seed", na.seed, "Random seed")->capture_default_str();
  noise->add_option("--mode", na.mode, "normal or isotropic")->capture_default_str();
  noise->add_option("--manifest", na.manifest, "Write a JSON run manifest");
  noise->callback([&] { action = [&] { return runNoise(na, noise, argc, argv); }; });

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a procedural mesh");
  gen->add_option("--kind", ga.kind, "icosphere|sphere, cylinder, cone, cube, grid")->required();
  gen->add_option("-o,--output", ga.output, "Output mesh")->required();
  gen->add_option("--subdiv", ga.params.subdivisions, "Icosphere subdivision level")->capture_default_str();
  gen->add_option("--segments", ga.params.segments, "Cylinder/cone segments around")->capture_default_str();
  gen->add_option("--rings", ga.params.rings, "Cylinder/cone intervals along the axis")->capture_default_str();
  gen->add_option("--n", ga.params.n, "Cube/grid resolution per side")->capture_default_str();
  gen->add_flag("--uncapped", ga.uncapped, "Leave cylinder/cone ends open");
  gen->callback([&] { action = [&] { return runGen(ga); }; });

  ColorArgs ca;
  auto* color = app.add_subcommand("color", "Export the greedy domain decomposition as per-vertex RGB PLY");
  color->add_option("-i,--input", ca.input, "Input mesh")->required();
  color->add_option("-o,--output", ca.output, "Output PLY")->required();
  color->callback([&] { action = [&] { return runColor(ca); }; });

  CurvatureArgs ka;
  auto* curvature = app.add_subcommand("curvature", "Export per-vertex Gaussian curvature (CSV or PLY)");
  curvature->add_option("-i,--input", ka.input, "Input mesh")->required();
  curvature->add_option("-o,--output", ka.output, "Output .csv (vertexIndex,K) or .ply")->required();
  curvature->add_option("--hist-csv", ka.histCsv, "Also write the curvature histogram");
  curvature->add_option("--bins", ka.bins, "Histogram bins")->capture_default_str();
  curvature->add_option("--clip", ka.clip, "Histogram range percentile of |K|")->capture_default_str();
  curvature->callback([&] { action = [&] { return runCurvature(ka); }; });

  SmoothArgs sa;
  auto* smooth = app.add_subcommand("smooth", "Baseline umbrella Laplacian or Taubin smoothing");
  smooth->add_option("-i,--input", sa.input, "Input mesh")->required();
  smooth->add_option("-o,--output", sa.output, "Output mesh")->required();
  smooth->add_option("--method", sa.method, "laplacian or taubin")->capture_default_str();
  smooth->add_option("--iters", sa.iterations, "Iterations")->capture_default_str();
  smooth->add_option("--lambda", sa.lambda, "Positive step")->capture_default_str();
  smooth->add_option("--mu", sa.mu, "Negative Taubin step")->capture_default_str();
  smooth->callback([&] { action = [&] { return runSmooth(sa, smooth); }; });

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time the filter; CSV mesh,vertices,iters,threads,seconds");
  bench->add_option("-i,--input", ba.inputs, "Mesh files to time");
  bench->add_option("--sphere", ba.spheres, "Also time noisy icospheres of these subdivision levels");
  bench->add_option("--iters", ba.iterations, "Iteration counts")->delimiter(',')->capture_default_str();
  bench->add_option("--threads", ba.threads, "Thread counts")->delimiter(',')->capture_default_str();
  bench->add_option("-o,--output", ba.output, "CSV path (default: stdout)");
  bench->callback([&] { action = [&] { return runBench(ba, bench); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitIo;
  }

  try {
    if (!simd.empty()) gcf::simd::setActiveIsa(gcf::simd::parseIsa(simd));
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << e.app->help();
    return kExitValidation;
  } catch (const gcf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
