#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcf/mesh.hpp"

namespace gcf {

enum class MeshFormat { Auto, Obj, Off, Ply };

/// Parses "auto", "obj", "off" or "ply" (case-insensitive). Throws UnsupportedFormat.
MeshFormat parseMeshFormat(std::string_view name);
std::string_view formatName(MeshFormat format);

/// Resolves Auto from the file extension; throws UnsupportedFormat if unknown.
MeshFormat formatFromPath(const std::filesystem::path& path);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// A mesh as read from disk, with any per-vertex channels the file carried.
struct LoadedMesh {
  TriangleMesh mesh;
  std::optional<std::vector<double>> scalars;  // PLY "quality"
  std::optional<std::vector<Rgb>> colors;      // PLY red/green/blue
  std::vector<std::string> warnings;
};

/// Optional per-vertex channels for export. Only PLY can carry them.
struct VertexChannels {
  std::span<const double> scalars;
  std::span<const Rgb> colors;
  std::string scalarName = "quality";
};

LoadedMesh readMesh(std::istream& in, MeshFormat format);
LoadedMesh loadMeshFile(const std::filesystem::path& path, MeshFormat format = MeshFormat::Auto);
TriangleMesh loadMesh(const std::filesystem::path& path, MeshFormat format = MeshFormat::Auto);

void writeMesh(std::ostream& out, const TriangleMesh& mesh, MeshFormat format, const VertexChannels& channels = {});
void saveMesh(const TriangleMesh& mesh, const std::filesystem::path& path, MeshFormat format = MeshFormat::Auto,
              const VertexChannels& channels = {});

}  // namespace gcf
