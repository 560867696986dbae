#include "prcurve/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prcurve {
namespace {

namespace fs = std::filesystem;

void atomic_write(const fs::path& path, const std::string& content, bool binary) {
  const fs::path tmp = path.parent_path() / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, binary ? std::ios::binary : std::ios::out);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

void write_matrix_csv(const fs::path& path, const SampleSet& s) {
  std::ostringstream out;
  char buf[32];
  for (std::size_t i = 0; i < s.n; ++i) {
    const double* row = s.row(i);
    for (std::size_t j = 0; j < s.d; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[j]);
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
  atomic_write(path, out.str(), false);
}

void write_matrix_bin(const fs::path& path, const SampleSet& s) {
  std::string content;
  content.reserve(8 + 16 + s.data.size() * sizeof(double));
  content.append(kMatrixMagic, sizeof(kMatrixMagic));
  const std::uint64_t n = s.n, d = s.d;
  content.append(reinterpret_cast<const char*>(&n), sizeof(n));
  content.append(reinterpret_cast<const char*>(&d), sizeof(d));
  content.append(reinterpret_cast<const char*>(s.data.data()),
                 s.data.size() * sizeof(double));
  atomic_write(path, content, true);
}

SampleSet read_matrix_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::vector<double> data;
  std::size_t n = 0, d = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t cols = 0;
    const char* p = line.c_str();
    char* end = nullptr;
    while (true) {
      const double v = std::strtod(p, &end);
      if (end == p) throw std::invalid_argument("matrix csv: malformed row: " + line);
      data.push_back(v);
      ++cols;
      while (*end == ' ' || *end == '\t') ++end;
      if (*end == ',') {
        p = end + 1;
        continue;
      }
      if (*end == '\0' || *end == '\r') break;
      throw std::invalid_argument("matrix csv: malformed row: " + line);
    }
    if (d == 0) d = cols;
    if (cols != d) throw std::invalid_argument("matrix csv: ragged rows");
    ++n;
  }
  SampleSet s;
  s.data = std::move(data);
  s.n = n;
  s.d = d;
  validate(s);
  return s;
}

SampleSet read_matrix_bin(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMatrixMagic, 8) != 0)
    throw std::invalid_argument("matrix bin: bad magic in " + path.string());
  std::uint64_t n = 0, d = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  in.read(reinterpret_cast<char*>(&d), sizeof(d));
  if (!in) throw std::invalid_argument("matrix bin: truncated header");
  SampleSet s;
  s.n = n;
  s.d = d;
  s.data.resize(n * d);
  in.read(reinterpret_cast<char*>(s.data.data()),
          static_cast<std::streamsize>(s.data.size() * sizeof(double)));
  if (!in) throw std::invalid_argument("matrix bin: truncated data");
  validate(s);
  return s;
}

SampleSet read_matrix_auto(const fs::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw std::runtime_error("cannot open: " + path.string());
  char magic[8] = {};
  probe.read(magic, 8);
  probe.close();
  if (std::memcmp(magic, kMatrixMagic, 8) == 0) return read_matrix_bin(path);
  return read_matrix_csv(path);
}

void write_curve_file(const fs::path& path, const std::vector<CurvePoint>& pts) {
  std::ostringstream out;
  write_curve_csv(out, pts);
  atomic_write(path, out.str(), false);
}

PrCurve read_curve_file(const fs::path& path, CurveKind kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  return read_curve_csv(in, kind);
}

void write_text_file(const fs::path& path, const std::string& content) {
  atomic_write(path, content, false);
}

}  // namespace prcurve
