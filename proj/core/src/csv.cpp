#include "prcmap/csv.hpp"

#include <fstream>
#include <sstream>

#include "prcmap/error.hpp"

namespace prcmap {

std::string CsvWriter::escape(const std::string& field) {
  bool needs_quote = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quote) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

CsvWriter& CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_.push_back(',');
    out_ += escape(fields[i]);
  }
  out_ += "\r\n";
  return *this;
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw StageError("cannot open for writing: " + path);
  f << out_;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& content) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> cur_row;
  std::string cur;
  bool in_quotes = false;
  std::size_t i = 0;
  const std::size_t n = content.size();
  auto end_field = [&] { cur_row.push_back(cur); cur.clear(); };
  auto end_row = [&] {
    end_field();
    rows.push_back(cur_row);
    cur_row.clear();
  };
  while (i < n) {
    char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && content[i + 1] == '"') { cur.push_back('"'); ++i; }
        else in_quotes = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r') {
      if (i + 1 < n && content[i + 1] == '\n') ++i;
      end_row();
    } else if (c == '\n') {
      end_row();
    } else {
      cur.push_back(c);
    }
    ++i;
  }
  if (!cur.empty() || !cur_row.empty()) end_row();
  return rows;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw StageError("cannot open CSV: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str());
}

}  // namespace prcmap
