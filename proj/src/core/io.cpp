#include "acseg/core/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "src/core/binary_io.hpp"

namespace acseg {

namespace {

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ifstream f(path, mode);
  if (!f) throw DataError("FileNotFound", "cannot open " + path.string());
  return f;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ofstream f(path, mode);
  if (!f) throw DataError("FileWrite", "cannot write " + path.string());
  return f;
}

// Skips PPM whitespace and '#' comment lines.
int next_pnm_int(std::istream& is) {
  int ch;
  while ((ch = is.get()) != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = is.get();
    } else if (!std::isspace(ch)) {
      break;
    }
  }
  if (ch == EOF) throw DataError("BadPpm", "truncated PPM header");
  int value = 0;
  while (ch != EOF && std::isdigit(ch)) {
    value = value * 10 + (ch - '0');
    ch = is.get();
  }
  return value;
}

}  // namespace

Image read_ppm(const std::filesystem::path& path) {
  auto f = open_in(path, std::ios::binary);
  char magic[2];
  f.read(magic, 2);
  if (!f || magic[0] != 'P' || magic[1] != '6')
    throw DataError("BadPpm", path.string() + ": not a binary PPM (P6)");
  const int width = next_pnm_int(f);
  const int height = next_pnm_int(f);
  const int maxval = next_pnm_int(f);
  if (maxval != 255) throw DataError("BadPpm", path.string() + ": only maxval 255 supported");
  Image image(width, height);
  f.read(reinterpret_cast<char*>(image.data().data()),
         static_cast<std::streamsize>(image.data().size()));
  if (!f) throw DataError("BadPpm", path.string() + ": truncated pixel data");
  return image;
}

void write_ppm(const std::filesystem::path& path, const Image& image) {
  auto f = open_out(path, std::ios::binary);
  f << "P6\n" << image.width() << " " << image.height() << "\n255\n";
  f.write(reinterpret_cast<const char*>(image.data().data()),
          static_cast<std::streamsize>(image.data().size()));
}

ClassPalette read_palette(const std::filesystem::path& path) {
  auto f = open_in(path, std::ios::in);
  std::vector<PaletteEntry> entries;
  std::string line;
  while (std::getline(f, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    PaletteEntry e;
    int r, g, b;
    if (!(ss >> e.class_index >> r >> g >> b)) continue;
    if (r < 0 || r > 255 || g < 0 || g > 255 || b < 0 || b > 255)
      throw DataError("BadPalette", path.string() + ": color out of range");
    e.rgb = {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
             static_cast<std::uint8_t>(b)};
    ss >> e.name;
    entries.push_back(e);
  }
  if (entries.empty()) throw DataError("BadPalette", path.string() + ": no palette entries");
  return ClassPalette(std::move(entries));
}

void write_palette(const std::filesystem::path& path, const ClassPalette& palette) {
  auto f = open_out(path, std::ios::out);
  for (const auto& e : palette.entries())
    f << e.class_index << " " << int(e.rgb[0]) << " " << int(e.rgb[1]) << " " << int(e.rgb[2])
      << " " << e.name << "\n";
}

PointCloud read_ply(const std::filesystem::path& path) {
  auto f = open_in(path, std::ios::in);
  std::string line;
  std::getline(f, line);
  if (line != "ply") throw DataError("BadPly", path.string() + ": missing ply magic");
  long vertex_count = -1;
  std::vector<std::string> props;
  while (std::getline(f, line)) {
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word == "format") {
      std::string fmt;
      ss >> fmt;
      if (fmt != "ascii") throw DataError("BadPly", path.string() + ": only ascii PLY supported");
    } else if (word == "element") {
      std::string name;
      ss >> name >> vertex_count;
      if (name != "vertex") throw DataError("BadPly", path.string() + ": expected vertex element");
    } else if (word == "property") {
      std::string type, name;
      ss >> type >> name;
      props.push_back(name);
    } else if (word == "end_header") {
      break;
    }
  }
  if (vertex_count < 0) throw DataError("BadPly", path.string() + ": no vertex element");

  PointCloud cloud;
  cloud.points.reserve(vertex_count);
  const bool has_label = std::find(props.begin(), props.end(), "label") != props.end();
  const bool has_normal = std::find(props.begin(), props.end(), "nx") != props.end();
  for (long i = 0; i < vertex_count; ++i) {
    if (!std::getline(f, line)) throw DataError("BadPly", path.string() + ": truncated vertices");
    std::istringstream ss(line);
    std::vector<double> vals;
    double v;
    while (ss >> v) vals.push_back(v);
    if (vals.size() < props.size())
      throw DataError("BadPly", path.string() + ": short vertex line");
    Vec3 p{};
    Rgb c{};
    Vec3 n{};
    std::int32_t label = -1;
    for (std::size_t k = 0; k < props.size(); ++k) {
      const std::string& name = props[k];
      if (name == "x") p[0] = vals[k];
      else if (name == "y") p[1] = vals[k];
      else if (name == "z") p[2] = vals[k];
      else if (name == "red") c[0] = static_cast<std::uint8_t>(vals[k]);
      else if (name == "green") c[1] = static_cast<std::uint8_t>(vals[k]);
      else if (name == "blue") c[2] = static_cast<std::uint8_t>(vals[k]);
      else if (name == "label") label = static_cast<std::int32_t>(vals[k]);
      else if (name == "nx") n[0] = vals[k];
      else if (name == "ny") n[1] = vals[k];
      else if (name == "nz") n[2] = vals[k];
    }
    cloud.points.push_back(p);
    cloud.colors.push_back(c);
    if (has_label) cloud.labels.push_back(label);
    if (has_normal) cloud.normals.push_back(n);
  }
  return cloud;
}

void write_ply(const std::filesystem::path& path, const PointCloud& cloud) {
  auto f = open_out(path, std::ios::out);
  f.precision(9);
  f << "ply\nformat ascii 1.0\nelement vertex " << cloud.size() << "\n";
  f << "property float x\nproperty float y\nproperty float z\n";
  f << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  if (cloud.has_labels()) f << "property int label\n";
  if (cloud.has_normals())
    f << "property float nx\nproperty float ny\nproperty float nz\n";
  f << "end_header\n";
  for (int i = 0; i < cloud.size(); ++i) {
    const Vec3& p = cloud.points[i];
    const Rgb& c = cloud.colors[i];
    f << p[0] << " " << p[1] << " " << p[2] << " " << int(c[0]) << " " << int(c[1]) << " "
      << int(c[2]);
    if (cloud.has_labels()) f << " " << cloud.labels[i];
    if (cloud.has_normals()) {
      const Vec3& n = cloud.normals[i];
      f << " " << n[0] << " " << n[1] << " " << n[2];
    }
    f << "\n";
  }
}

std::vector<float> read_channel_raster(const std::filesystem::path& path, int& width,
                                       int& height) {
  auto f = open_in(path, std::ios::binary);
  char magic[8];
  f.read(magic, 8);
  if (!f || std::string(magic, 8) != "ACSEGCH1")
    throw DataError("BadChannelRaster", path.string() + ": bad magic");
  width = static_cast<int>(bin::read_le<std::uint32_t>(f));
  height = static_cast<int>(bin::read_le<std::uint32_t>(f));
  std::vector<float> values(static_cast<std::size_t>(width) * height);
  for (auto& v : values) v = bin::read_le<float>(f);
  return values;
}

void write_channel_raster(const std::filesystem::path& path, int width, int height,
                          const std::vector<float>& values) {
  if (values.size() != static_cast<std::size_t>(width) * height)
    throw DataError("BadChannelRaster", "value count does not match dimensions");
  auto f = open_out(path, std::ios::binary);
  f.write("ACSEGCH1", 8);
  bin::write_le<std::uint32_t>(f, static_cast<std::uint32_t>(width));
  bin::write_le<std::uint32_t>(f, static_cast<std::uint32_t>(height));
  for (const float v : values) bin::write_le<float>(f, v);
}

ProbMap read_prob_map(const std::filesystem::path& path) {
  auto f = open_in(path, std::ios::binary);
  char magic[8];
  f.read(magic, 8);
  if (!f || std::string(magic, 8) != "ACSEGPM1")
    throw DataError("BadProbMapFile", path.string() + ": bad magic");
  const auto kind = bin::read_le<std::uint8_t>(f);
  const auto width = bin::read_le<std::int32_t>(f);
  const auto height = bin::read_le<std::int32_t>(f);
  const auto count = bin::read_le<std::int32_t>(f);
  const auto classes = bin::read_le<std::int32_t>(f);
  Geometry g = kind == 0 ? Geometry::grid(width, height) : Geometry::points(count);
  if (g.count != count) throw DataError("BadProbMapFile", path.string() + ": count mismatch");
  ProbMap p(g, classes);
  for (auto& v : p.values()) v = bin::read_le<double>(f);
  return p;
}

void write_prob_map(const std::filesystem::path& path, const ProbMap& p) {
  auto f = open_out(path, std::ios::binary);
  f.write("ACSEGPM1", 8);
  bin::write_le<std::uint8_t>(f, p.geometry().kind == Geometry::Kind::Grid ? 0 : 1);
  bin::write_le<std::int32_t>(f, p.geometry().width);
  bin::write_le<std::int32_t>(f, p.geometry().height);
  bin::write_le<std::int32_t>(f, p.geometry().count);
  bin::write_le<std::int32_t>(f, p.num_classes());
  for (const double v : p.values()) bin::write_le<double>(f, v);
}

}  // namespace acseg
