// File: include/tnd/io.hpp
//
// Small file helpers shared across modules: raw little-endian binary
// fields for checkpoints, append-only JSONL logs, CSV emission, text
// ingestion. All formatting is deterministic so identical runs produce
// byte-identical artifacts.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tnd/error.hpp"

namespace tnd::io {

using json = nlohmann::json;

static_assert(std::endian::native == std::endian::little,
              "checkpoint format assumes a little-endian host");

// ---- binary fields --------------------------------------------------------

inline void write_u64(std::ostream& os, std::uint64_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

inline void write_i64(std::ostream& os, std::int64_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

inline void write_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

inline void write_string(std::ostream& os, const std::string& s) {
  write_u64(os, s.size());
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline void write_matrix(std::ostream& os, const Eigen::MatrixXd& m) {
  write_i64(os, m.rows());
  write_i64(os, m.cols());
  os.write(reinterpret_cast<const char*>(m.data()),
           static_cast<std::streamsize>(sizeof(double) * m.size()));
}

inline std::uint64_t read_u64(std::istream& is) {
  std::uint64_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!is) throw IntegrityError("truncated file while reading u64");
  return v;
}

inline std::int64_t read_i64(std::istream& is) {
  std::int64_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!is) throw IntegrityError("truncated file while reading i64");
  return v;
}

inline double read_f64(std::istream& is) {
  double v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!is) throw IntegrityError("truncated file while reading f64");
  return v;
}

inline std::string read_string(std::istream& is) {
  const std::uint64_t n = read_u64(is);
  std::string s(n, '\0');
  is.read(s.data(), static_cast<std::streamsize>(n));
  if (!is) throw IntegrityError("truncated file while reading string");
  return s;
}

inline Eigen::MatrixXd read_matrix(std::istream& is) {
  const auto rows = read_i64(is);
  const auto cols = read_i64(is);
  if (rows < 0 || cols < 0 || rows * cols > (1LL << 32)) {
    throw IntegrityError("implausible matrix header");
  }
  Eigen::MatrixXd m(rows, cols);
  is.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(sizeof(double) * m.size()));
  if (!is) throw IntegrityError("truncated file while reading matrix");
  return m;
}

inline std::uint64_t fnv1a64_bytes(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---- text files -----------------------------------------------------------

std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

// ---- JSONL ----------------------------------------------------------------

// Append-only newline-delimited JSON; one flush per record so partial
// runs leave whole lines behind.
class JsonlWriter {
 public:
  JsonlWriter() = default;
  explicit JsonlWriter(const std::filesystem::path& path, bool truncate = true);
  void open(const std::filesystem::path& path, bool truncate = true);
  void append(const json& record);
  bool is_open() const { return out_.is_open(); }
  void close() { out_.close(); }

 private:
  std::ofstream out_;
};

std::vector<json> read_jsonl(const std::filesystem::path& path);

// ---- CSV ------------------------------------------------------------------

std::string fmt_double(double v);  // shortest round-trip, deterministic

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
  std::size_t width_;
};

}  // namespace tnd::io
