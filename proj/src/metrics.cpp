#include "gcf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gcf/errors.hpp"
#include "gcf/simd.hpp"
#include "gcf/topology.hpp"

namespace gcf {

AngleError msae(const TriangleMesh& processed, const TriangleMesh& original) {
  if (processed.faces != original.faces) throw ConnectivityMismatch("meshes do not share the same face list");
  const FaceNormals np = faceNormals(processed);
  const FaceNormals no = faceNormals(original);
  AngleError out;
  double sum = 0.0;
  for (std::size_t f = 0; f < processed.faceCount(); ++f) {
    if (np.degenerate[f] || no.degenerate[f]) {
      ++out.facesSkipped;
      continue;
    }
    sum += angleBetween(np.normals[f], no.normals[f]);
    ++out.facesUsed;
  }
  if (out.facesUsed > 0) out.degrees = sum / static_cast<double>(out.facesUsed) * (180.0 / std::numbers::pi);
  return out;
}

VertexDistances vertexDistances(const TriangleMesh& a, const TriangleMesh& b) {
  if (a.vertexCount() != b.vertexCount()) {
    throw CountMismatch("vertex counts differ: " + std::to_string(a.vertexCount()) + " vs " +
                        std::to_string(b.vertexCount()));
  }
  if (a.vertices.empty()) return {};
  const auto sums = simd::kernels().distanceSums(a.vertices, b.vertices);
  return {sums.sum / static_cast<double>(a.vertexCount()), sums.max};
}

namespace {

std::vector<double> interiorAbsK(const CurvatureField& field) {
  std::vector<double> values;
  values.reserve(field.K.size());
  for (std::size_t v = 0; v < field.K.size(); ++v) {
    if (!field.boundary[v]) values.push_back(std::abs(field.K[v]));
  }
  return values;
}

double percentile(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  const double rank = p / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return values[lo] + (values[hi] - values[lo]) * frac;
}

}  // namespace

Histogram curvatureHistogram(const CurvatureField& field, const HistogramOptions& options) {
  if (options.bins < 2) throw InvalidArgument("histogram needs at least 2 bins");
  if (!(options.clipPercentile > 0.0 && options.clipPercentile <= 100.0)) {
    throw InvalidArgument("clip percentile must lie in (0, 100]");
  }
  const auto values = interiorAbsK(field);
  if (values.empty()) throw EmptyField("no interior vertices to histogram");

  double c = percentile(values, options.clipPercentile);
  if (!(c > 0.0)) c = *std::max_element(values.begin(), values.end());
  if (!(c > 0.0)) c = 1.0;  // all-zero field: any range works, the spike lands on 0

  std::vector<double> edges(options.bins + 1);
  const double b = static_cast<double>(options.bins);
  for (std::size_t i = 0; i <= options.bins; ++i) edges[i] = -c + 2.0 * c * static_cast<double>(i) / b;
  edges.back() = c;
  return curvatureHistogram(field, edges);
}

Histogram curvatureHistogram(const CurvatureField& field, std::span<const double> binEdges) {
  if (binEdges.size() < 3) throw InvalidArgument("histogram needs at least 2 bins");
  for (std::size_t i = 1; i < binEdges.size(); ++i) {
    if (!(binEdges[i] > binEdges[i - 1])) throw InvalidArgument("bin edges must be strictly ascending");
  }
  const std::size_t bins = binEdges.size() - 1;
  std::vector<std::size_t> counts(bins, 0);
  std::size_t total = 0;
  for (std::size_t v = 0; v < field.K.size(); ++v) {
    if (field.boundary[v]) continue;
    const double k = field.K[v];
    const auto it = std::upper_bound(binEdges.begin(), binEdges.end(), k);
    const auto idx = static_cast<std::ptrdiff_t>(it - binEdges.begin()) - 1;
    ++counts[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(bins) - 1))];
    ++total;
  }
  if (total == 0) throw EmptyField("no interior vertices to histogram");

  Histogram h;
  h.binEdges.assign(binEdges.begin(), binEdges.end());
  h.probs.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) h.probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return h;
}

double kld(const Histogram& p, const Histogram& q) {
  if (p.binEdges != q.binEdges || p.probs.size() != q.probs.size()) {
    throw EdgeMismatch("histograms must share identical bin edges");
  }
  constexpr double eps = 1e-12;
  double sp = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    sp += p.probs[i] + eps;
    sq += q.probs[i] + eps;
  }
  double out = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    const double pi = (p.probs[i] + eps) / sp;
    const double qi = (q.probs[i] + eps) / sq;
    out += pi * std::log(pi / qi);
  }
  return std::max(out, 0.0);
}

ConvergenceSlope acs(std::span<const FilterTrace> traces) {
  ConvergenceSlope out;
  double sum = 0.0;
  for (const FilterTrace& trace : traces) {
    const auto& e = trace.gcePerIteration;
    if (e.size() < 4) throw TraceTooShort("a convergence trace needs at least 4 energies, got " + std::to_string(e.size()));
    const std::size_t n = e.size() - 1;
    for (std::size_t t = 2; t + 1 <= n; ++t) {
      const double num = std::abs(e[t + 1] - e[t]);
      const double den = std::abs(e[t] - e[t - 1]);
      if (den == 0.0 || num == 0.0) {
        ++out.termsSkipped;
        continue;
      }
      const double td = static_cast<double>(t);
      sum += std::log10(num / den) / (std::log10(td + 1.0) - std::log10(td));
      ++out.termsUsed;
    }
  }
  std::ostringstream notes;
  notes << "terms used " << out.termsUsed << ", skipped " << out.termsSkipped << " (zero energy difference)";
  out.notes = notes.str();
  out.value = out.termsUsed > 0 ? sum / static_cast<double>(out.termsUsed) : std::numeric_limits<double>::quiet_NaN();
  return out;
}

MetricsReport evaluate(const TriangleMesh& reference, const TriangleMesh& test, const HistogramOptions& options) {
  MetricsReport report;
  const AngleError angle = msae(test, reference);
  const VertexDistances dist = vertexDistances(test, reference);
  const MeshTopology topo = buildTopology(reference);
  const CurvatureField kRef = gaussianCurvature(reference, topo);
  const CurvatureField kTest = gaussianCurvature(test, topo);
  const Histogram hRef = curvatureHistogram(kRef, options);
  const Histogram hTest = curvatureHistogram(kTest, hRef.binEdges);

  report.msaeDegrees = angle.degrees;
  report.gce = gaussianCurvatureEnergy(kTest, false);
  report.dMean = dist.mean;
  report.dMax = dist.max;
  report.kld = kld(hTest, hRef);

  std::ostringstream notes;
  notes << "msae over face normals, degrees; " << angle.facesSkipped << " degenerate face(s) skipped; "
        << "gce over interior vertices; kld = KL(test || reference), eps 1e-12, " << options.bins
        << " bins clipped at the " << options.clipPercentile << "th percentile of reference |K|";
  report.notes = notes.str();
  return report;
}

}  // namespace gcf
