#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gcf/curvature.hpp"
#include "gcf/filter.hpp"
#include "gcf/mesh.hpp"

namespace gcf {

/// Mean angle between corresponding face normals, in degrees.
struct AngleError {
  double degrees = 0.0;
  std::size_t facesUsed = 0;
  std::size_t facesSkipped = 0;  // degenerate in either mesh
};

/// Throws ConnectivityMismatch unless both meshes have identical face lists.
AngleError msae(const TriangleMesh& processed, const TriangleMesh& original);

struct VertexDistances {
  double mean = 0.0;
  double max = 0.0;
};

/// Per-index Euclidean distances. Throws CountMismatch on differing vertex counts.
VertexDistances vertexDistances(const TriangleMesh& a, const TriangleMesh& b);

struct Histogram {
  std::vector<double> binEdges;  // bins + 1, strictly ascending
  std::vector<double> probs;     // sums to 1
};

struct HistogramOptions {
  std::size_t bins = 200;
  double clipPercentile = 99.0;
};

/// Symmetric histogram of interior-vertex K over [-c, c], c the clipPercentile-th
/// percentile of |K| (linear interpolation between order statistics). Samples
/// outside the range land in the end bins. Throws EmptyField / InvalidArgument.
Histogram curvatureHistogram(const CurvatureField& field, const HistogramOptions& options = {});

/// Same, on caller-supplied bin edges (e.g. those of a ground-truth histogram).
Histogram curvatureHistogram(const CurvatureField& field, std::span<const double> binEdges);

/// KL(p || q) in nats after adding 1e-12 to every bin and renormalizing.
/// Throws EdgeMismatch unless both share the same bin edges.
double kld(const Histogram& p, const Histogram& q);

/// Average log-log slope of successive energy differences across traces.
struct ConvergenceSlope {
  double value = 0.0;        // NaN when every term was skipped
  std::size_t termsUsed = 0;
  std::size_t termsSkipped = 0;
  std::string notes;
};

/// E(t) is trace[t]; terms t = 2 .. N-1 with N = trace length - 1. Terms with a
/// zero difference in either the numerator or the denominator are skipped and
/// the mean is taken over the terms used. Throws TraceTooShort for traces with
/// fewer than 4 entries.
ConvergenceSlope acs(std::span<const FilterTrace> traces);

struct MetricsReport {
  double msaeDegrees = 0.0;
  double gce = 0.0;
  double dMean = 0.0;
  double dMax = 0.0;
  double kld = 0.0;
  std::string notes;
};

/// Every metric of `test` against the ground truth `reference`.
MetricsReport evaluate(const TriangleMesh& reference, const TriangleMesh& test, const HistogramOptions& options = {});

}  // namespace gcf
