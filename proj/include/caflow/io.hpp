#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "caflow/types.hpp"

namespace caflow::io {

/// Tensor file: magic "F32T", u16 version (=1), u16 ndim, ndim u32 dims,
/// then row-major little-endian 32-bit float payload.
struct TensorData {
  std::vector<int> dims;
  std::vector<float> data;

  Eigen::Index size() const;
  MatrixXd as_matrix() const;  // requires ndim == 2
};

void write_tensor(const std::string& path, const std::vector<int>& dims,
                  const std::vector<float>& data);
void write_tensor(const std::string& path, const MatrixXd& m);  // dims {rows, cols}
TensorData read_tensor(const std::string& path);

/// Plain-text sectioned key-value configuration:
///   [section]
///   key = value
/// Comments start with '#' or ';' at line start or after whitespace,
/// and run to end of line. Keys are addressed as
/// "section.key"; later assignments win.
class Config {
 public:
  static Config load(const std::string& path);
  static Config parse(std::istream& in, const std::string& origin = "<stream>");

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;
  void set(const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Shortest round-trip decimal formatting (std::to_chars).
std::string format_double(double v);

/// CSV with '.' decimal separator, fields joined by ','. Writing is atomic
/// (temp file + rename).
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& fields);
  void add_row_values(const std::vector<double>& values);
  void save(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace caflow::io
