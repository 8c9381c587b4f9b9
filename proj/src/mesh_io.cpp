#include "gcf/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gcf/errors.hpp"

namespace gcf {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

double parseDouble(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw ParseError("expected a number, got '" + std::string(token) + "'", line);
  return value;
}

long long parseInteger(std::string_view token, std::size_t line) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  return value;
}

std::string formatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

// Collects polygon faces; fan-triangulates and drops topologically degenerate triangles.
class FaceSink {
 public:
  explicit FaceSink(TriangleMesh& mesh) : mesh_(mesh) {}

  void add(const std::vector<long long>& polygon, std::size_t line) {
    if (polygon.size() < 3) throw ParseError("face with fewer than 3 vertices", line);
    if (polygon.size() > 3) ++polygons_;
    for (std::size_t k = 1; k + 1 < polygon.size(); ++k) {
      const Face f{static_cast<VertexIndex>(polygon[0]), static_cast<VertexIndex>(polygon[k]),
                   static_cast<VertexIndex>(polygon[k + 1])};
      if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
        ++degenerate_;
        continue;
      }
      mesh_.faces.push_back(f);
    }
  }

  void checkIndex(long long index, std::size_t line) const {
    if (index < 0 || static_cast<std::size_t>(index) >= mesh_.vertices.size()) {
      throw IndexError("line " + std::to_string(line) + ": face index " + std::to_string(index) +
                       " out of range (vertex count " + std::to_string(mesh_.vertices.size()) + ")");
    }
  }

  void report(std::vector<std::string>& warnings) const {
    if (polygons_ > 0) warnings.push_back(std::to_string(polygons_) + " polygon face(s) fan-triangulated");
    if (degenerate_ > 0) warnings.push_back(std::to_string(degenerate_) + " degenerate face(s) with repeated indices dropped");
  }

 private:
  TriangleMesh& mesh_;
  std::size_t polygons_ = 0;
  std::size_t degenerate_ = 0;
};

// ---------------------------------------------------------------------------
// OBJ

LoadedMesh readObj(std::istream& in) {
  LoadedMesh out;
  FaceSink sink(out.mesh);
  struct PendingFace {
    std::vector<long long> indices;
    std::size_t line;
  };
  std::vector<PendingFace> pending;

  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "v") {
      if (tokens.size() < 4) throw ParseError("vertex needs 3 coordinates", lineNo);
      out.mesh.vertices.push_back(
          {parseDouble(tokens[1], lineNo), parseDouble(tokens[2], lineNo), parseDouble(tokens[3], lineNo)});
    } else if (tokens[0] == "f") {
      PendingFace face{{}, lineNo};
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const auto ref = tokens[t].substr(0, tokens[t].find('/'));
        const long long idx = parseInteger(ref, lineNo);
        if (idx == 0) throw ParseError("OBJ indices are 1-based; 0 is invalid", lineNo);
        // Negative indices are relative to the vertices read so far.
        face.indices.push_back(idx > 0 ? idx - 1 : static_cast<long long>(out.mesh.vertices.size()) + idx);
      }
      if (face.indices.size() < 3) throw ParseError("face with fewer than 3 vertices", lineNo);
      pending.push_back(std::move(face));
    }
    // vt, vn, g, o, s, usemtl, mtllib ... are ignored.
  }
  for (const auto& face : pending) {
    for (long long idx : face.indices) sink.checkIndex(idx, face.line);
    sink.add(face.indices, face.line);
  }
  sink.report(out.warnings);
  return out;
}

void writeObj(std::ostream& out, const TriangleMesh& mesh) {
  for (const Vec3& v : mesh.vertices) {
    out << "v " << formatDouble(v.x) << ' ' << formatDouble(v.y) << ' ' << formatDouble(v.z) << '\n';
  }
  for (const Face& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

// ---------------------------------------------------------------------------
// OFF

// Yields non-empty, comment-stripped lines with their line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++lineNo_;
      if (const auto hash = line_.find('#'); hash != std::string::npos) line_.resize(hash);
      tokens = tokenize(line_);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return lineNo_; }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t lineNo_ = 0;
};

LoadedMesh readOff(std::istream& in) {
  LoadedMesh out;
  FaceSink sink(out.mesh);
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens) || tokens[0] != "OFF") throw ParseError("missing OFF header", reader.line());

  tokens.erase(tokens.begin());
  if (tokens.empty() && !reader.next(tokens)) throw ParseError("missing OFF counts", reader.line());
  if (tokens.size() < 2) throw ParseError("OFF counts line needs vertex and face counts", reader.line());
  const long long nv = parseInteger(tokens[0], reader.line());
  const long long nf = parseInteger(tokens[1], reader.line());
  if (nv < 0 || nf < 0) throw ParseError("negative element count", reader.line());

  out.mesh.vertices.reserve(static_cast<std::size_t>(nv));
  for (long long i = 0; i < nv; ++i) {
    if (!reader.next(tokens)) throw ParseError("unexpected end of file in vertex list", reader.line());
    if (tokens.size() < 3) throw ParseError("vertex needs 3 coordinates", reader.line());
    out.mesh.vertices.push_back({parseDouble(tokens[0], reader.line()), parseDouble(tokens[1], reader.line()),
                                 parseDouble(tokens[2], reader.line())});
  }
  std::vector<long long> polygon;
  for (long long i = 0; i < nf; ++i) {
    if (!reader.next(tokens)) throw ParseError("unexpected end of file in face list", reader.line());
    const long long n = parseInteger(tokens[0], reader.line());
    if (n < 3) throw ParseError("face with fewer than 3 vertices", reader.line());
    if (static_cast<long long>(tokens.size()) < n + 1) throw ParseError("face lists fewer indices than declared", reader.line());
    polygon.clear();
    for (long long k = 0; k < n; ++k) {
      const long long idx = parseInteger(tokens[static_cast<std::size_t>(k + 1)], reader.line());
      sink.checkIndex(idx, reader.line());
      polygon.push_back(idx);
    }
    sink.add(polygon, reader.line());
  }
  sink.report(out.warnings);
  return out;
}

void writeOff(std::ostream& out, const TriangleMesh& mesh) {
  out << "OFF\n" << mesh.vertexCount() << ' ' << mesh.faceCount() << " 0\n";
  for (const Vec3& v : mesh.vertices) {
    out << formatDouble(v.x) << ' ' << formatDouble(v.y) << ' ' << formatDouble(v.z) << '\n';
  }
  for (const Face& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

// ---------------------------------------------------------------------------
// PLY (ASCII)

struct PlyProperty {
  std::string name;
  bool isList = false;
};

struct PlyElement {
  std::string name;
  long long count = 0;
  std::vector<PlyProperty> properties;
};

LoadedMesh readPly(std::istream& in) {
  LoadedMesh out;
  FaceSink sink(out.mesh);
  LineReader reader(in);
  std::vector<std::string_view> tokens;

  if (!reader.next(tokens) || tokens[0] != "ply") throw ParseError("missing ply magic", reader.line());
  std::vector<PlyElement> elements;
  bool sawFormat = false;
  for (;;) {
    if (!reader.next(tokens)) throw ParseError("unexpected end of file in PLY header", reader.line());
    if (tokens[0] == "end_header") break;
    if (tokens[0] == "comment" || tokens[0] == "obj_info") continue;
    if (tokens[0] == "format") {
      if (tokens.size() < 2) throw ParseError("malformed format line", reader.line());
      if (tokens[1] != "ascii") throw UnsupportedFormat("binary PLY (" + std::string(tokens[1]) + ") is not supported");
      sawFormat = true;
    } else if (tokens[0] == "element") {
      if (tokens.size() < 3) throw ParseError("malformed element line", reader.line());
      const long long count = parseInteger(tokens[2], reader.line());
      if (count < 0) throw ParseError("negative element count", reader.line());
      elements.push_back({std::string(tokens[1]), count, {}});
    } else if (tokens[0] == "property") {
      if (elements.empty()) throw ParseError("property before any element", reader.line());
      if (tokens.size() >= 5 && tokens[1] == "list") {
        elements.back().properties.push_back({std::string(tokens[4]), true});
      } else if (tokens.size() >= 3) {
        elements.back().properties.push_back({std::string(tokens[2]), false});
      } else {
        throw ParseError("malformed property line", reader.line());
      }
    } else {
      throw ParseError("unknown PLY header keyword '" + std::string(tokens[0]) + "'", reader.line());
    }
  }
  if (!sawFormat) throw ParseError("PLY header lacks a format line", reader.line());

  std::vector<double> scalars;
  std::vector<Rgb> colors;
  bool hasScalars = false;
  bool hasColors = false;
  std::vector<long long> polygon;

  for (const PlyElement& element : elements) {
    const bool isVertex = element.name == "vertex";
    const bool isFace = element.name == "face";
    auto find = [&](std::string_view name) -> int {
      for (std::size_t p = 0; p < element.properties.size(); ++p) {
        if (element.properties[p].name == name && !element.properties[p].isList) return static_cast<int>(p);
      }
      return -1;
    };
    const int px = find("x"), py = find("y"), pz = find("z");
    const int pq = find("quality");
    const int pr = find("red"), pg = find("green"), pb = find("blue");
    if (isVertex) {
      if (px < 0 || py < 0 || pz < 0) throw ParseError("vertex element lacks x/y/z", reader.line());
      hasScalars = pq >= 0;
      hasColors = pr >= 0 && pg >= 0 && pb >= 0;
    }
    int faceList = -1;
    if (isFace) {
      for (std::size_t p = 0; p < element.properties.size(); ++p) {
        const auto& prop = element.properties[p];
        if (prop.isList && (prop.name == "vertex_indices" || prop.name == "vertex_index")) faceList = static_cast<int>(p);
      }
      if (faceList < 0) throw ParseError("face element lacks a vertex_indices list", reader.line());
    }

    std::vector<double> values;
    for (long long i = 0; i < element.count; ++i) {
      if (!reader.next(tokens)) throw ParseError("unexpected end of file in element '" + element.name + "'", reader.line());
      std::size_t cursor = 0;
      values.assign(element.properties.size(), 0.0);
      polygon.clear();
      for (std::size_t p = 0; p < element.properties.size(); ++p) {
        if (cursor >= tokens.size()) throw ParseError("too few values in element '" + element.name + "'", reader.line());
        if (element.properties[p].isList) {
          const long long n = parseInteger(tokens[cursor++], reader.line());
          if (n < 0 || cursor + static_cast<std::size_t>(n) > tokens.size()) {
            throw ParseError("list length exceeds the values on the line", reader.line());
          }
          for (long long k = 0; k < n; ++k) {
            const auto tok = tokens[cursor++];
            if (isFace && static_cast<int>(p) == faceList) polygon.push_back(parseInteger(tok, reader.line()));
          }
        } else {
          values[p] = parseDouble(tokens[cursor++], reader.line());
        }
      }
      if (isVertex) {
        out.mesh.vertices.push_back({values[static_cast<std::size_t>(px)], values[static_cast<std::size_t>(py)],
                                     values[static_cast<std::size_t>(pz)]});
        if (hasScalars) scalars.push_back(values[static_cast<std::size_t>(pq)]);
        if (hasColors) {
          auto channel = [&](int p) {
            return static_cast<std::uint8_t>(std::clamp(values[static_cast<std::size_t>(p)], 0.0, 255.0));
          };
          colors.push_back({channel(pr), channel(pg), channel(pb)});
        }
      } else if (isFace) {
        for (long long idx : polygon) sink.checkIndex(idx, reader.line());
        sink.add(polygon, reader.line());
      }
    }
  }
  if (hasScalars) out.scalars = std::move(scalars);
  if (hasColors) out.colors = std::move(colors);
  sink.report(out.warnings);
  return out;
}

void writePly(std::ostream& out, const TriangleMesh& mesh, const VertexChannels& channels) {
  const bool scalars = !channels.scalars.empty();
  const bool colors = !channels.colors.empty();
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << mesh.vertexCount() << '\n';
  out << "property double x\nproperty double y\nproperty double z\n";
  if (scalars) out << "property double " << channels.scalarName << '\n';
  if (colors) out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  out << "element face " << mesh.faceCount() << '\n';
  out << "property list uchar int vertex_indices\nend_header\n";
  for (std::size_t i = 0; i < mesh.vertexCount(); ++i) {
    const Vec3& v = mesh.vertices[i];
    out << formatDouble(v.x) << ' ' << formatDouble(v.y) << ' ' << formatDouble(v.z);
    if (scalars) out << ' ' << formatDouble(channels.scalars[i]);
    if (colors) {
      const Rgb& c = channels.colors[i];
      out << ' ' << int{c.r} << ' ' << int{c.g} << ' ' << int{c.b};
    }
    out << '\n';
  }
  for (const Face& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

MeshFormat sniff(std::istream& in) {
  std::string first;
  const auto pos = in.tellg();
  in >> first;
  in.clear();
  in.seekg(pos);
  if (first == "ply") return MeshFormat::Ply;
  if (first == "OFF") return MeshFormat::Off;
  if (first == "v" || first == "#" || first == "f" || first == "o" || first == "g" || first == "vn" || first == "vt" ||
      first == "mtllib") {
    return MeshFormat::Obj;
  }
  throw UnsupportedFormat("cannot determine mesh format from content");
}

}  // namespace

MeshFormat parseMeshFormat(std::string_view name) {
  const auto n = lower(name);
  if (n == "auto") return MeshFormat::Auto;
  if (n == "obj") return MeshFormat::Obj;
  if (n == "off") return MeshFormat::Off;
  if (n == "ply") return MeshFormat::Ply;
  throw UnsupportedFormat("unknown mesh format '" + std::string(name) + "'");
}

std::string_view formatName(MeshFormat format) {
  switch (format) {
    case MeshFormat::Obj: return "obj";
    case MeshFormat::Off: return "off";
    case MeshFormat::Ply: return "ply";
    case MeshFormat::Auto: break;
  }
  return "auto";
}

MeshFormat formatFromPath(const std::filesystem::path& path) {
  const auto ext = lower(path.extension().string());
  if (ext == ".obj") return MeshFormat::Obj;
  if (ext == ".off") return MeshFormat::Off;
  if (ext == ".ply") return MeshFormat::Ply;
  throw UnsupportedFormat("cannot infer mesh format from '" + path.string() + "'");
}

LoadedMesh readMesh(std::istream& in, MeshFormat format) {
  if (format == MeshFormat::Auto) format = sniff(in);
  LoadedMesh out;
  switch (format) {
    case MeshFormat::Obj: out = readObj(in); break;
    case MeshFormat::Off: out = readOff(in); break;
    case MeshFormat::Ply: out = readPly(in); break;
    case MeshFormat::Auto: break;
  }
  out.mesh.validate();
  return out;
}

LoadedMesh loadMeshFile(const std::filesystem::path& path, MeshFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  if (format == MeshFormat::Auto) {
    try {
      format = formatFromPath(path);
    } catch (const UnsupportedFormat&) {
      format = sniff(in);
    }
  }
  return readMesh(in, format);
}

TriangleMesh loadMesh(const std::filesystem::path& path, MeshFormat format) {
  return loadMeshFile(path, format).mesh;
}

void writeMesh(std::ostream& out, const TriangleMesh& mesh, MeshFormat format, const VertexChannels& channels) {
  const bool hasChannels = !channels.scalars.empty() || !channels.colors.empty();
  if (hasChannels && format != MeshFormat::Ply) {
    throw FormatCapabilityError("per-vertex scalars and colors can only be written to PLY");
  }
  if (!channels.scalars.empty() && channels.scalars.size() != mesh.vertexCount()) {
    throw CountMismatch("scalar channel length differs from vertex count");
  }
  if (!channels.colors.empty() && channels.colors.size() != mesh.vertexCount()) {
    throw CountMismatch("color channel length differs from vertex count");
  }
  switch (format) {
    case MeshFormat::Obj: writeObj(out, mesh); break;
    case MeshFormat::Off: writeOff(out, mesh); break;
    case MeshFormat::Ply: writePly(out, mesh, channels); break;
    case MeshFormat::Auto: throw UnsupportedFormat("writeMesh needs a concrete format");
  }
}

void saveMesh(const TriangleMesh& mesh, const std::filesystem::path& path, MeshFormat format,
              const VertexChannels& channels) {
  if (format == MeshFormat::Auto) format = formatFromPath(path);
  std::ostringstream buffer;
  writeMesh(buffer, mesh, format, channels);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << buffer.str();
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace gcf
