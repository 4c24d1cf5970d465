#pragma once

#include <string>
#include <vector>

namespace prcmap {

/// RFC-4180 CSV writer: CRLF row terminators, fields quoted only when they
/// contain a comma, quote or newline. Rows accumulate in memory so callers
/// can hash or write atomically.
class CsvWriter {
 public:
  CsvWriter& row(const std::vector<std::string>& fields);
  const std::string& str() const { return out_; }
  void write_file(const std::string& path) const;

  static std::string escape(const std::string& field);

 private:
  std::string out_;
};

/// Minimal RFC-4180 reader for parse-back checks and report assembly.
std::vector<std::vector<std::string>> read_csv(const std::string& path);
std::vector<std::vector<std::string>> parse_csv(const std::string& content);

}  // namespace prcmap
