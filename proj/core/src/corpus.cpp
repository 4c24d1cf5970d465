#include "prcmap/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "prcmap/error.hpp"
#include "prcmap/text.hpp"

using json = nlohmann::ordered_json;

namespace prcmap {

const char* to_string(StructureLabel label) {
  switch (label) {
    case StructureLabel::Introduction: return "Introduction";
    case StructureLabel::Methods: return "Methods";
    case StructureLabel::Results: return "Results";
    case StructureLabel::Discussion: return "Discussion";
    case StructureLabel::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* to_key(StructureLabel label) {
  switch (label) {
    case StructureLabel::Introduction: return "I";
    case StructureLabel::Methods: return "M";
    case StructureLabel::Results: return "R";
    case StructureLabel::Discussion: return "D";
    case StructureLabel::Unknown: return "?";
  }
  return "?";
}

StructureLabel structure_from_string(const std::string& s) {
  if (s == "Introduction" || s == "I") return StructureLabel::Introduction;
  if (s == "Methods" || s == "M") return StructureLabel::Methods;
  if (s == "Results" || s == "R") return StructureLabel::Results;
  if (s == "Discussion" || s == "D") return StructureLabel::Discussion;
  if (s == "Unknown" || s == "?") return StructureLabel::Unknown;
  throw ValidationError("unknown structure label: '" + s + "'");
}

const Section* Article::section_by_ordinal(int ordinal) const {
  for (const auto& s : sections) {
    if (s.ordinal == ordinal) return &s;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Report splitting
// ---------------------------------------------------------------------------

namespace {

// A numbered-item head at the start of a line: "1.", "2)", "3:", "Comment 4:".
const std::regex kItemHead(
    R"(^\s*(?:comment\s+)?(\d{1,3})\s*[.):\-]\s+)",
    std::regex::icase);

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  lines.push_back(cur);
  return lines;
}

std::vector<std::string> split_numbered(const std::vector<std::string>& lines) {
  std::vector<std::string> items;
  std::string cur;
  for (const auto& line : lines) {
    if (std::regex_search(line, kItemHead)) {
      // Preamble before item 1 becomes its own piece so nothing is lost.
      if (!trim(cur).empty()) items.push_back(trim(cur));
      cur = line;
    } else {
      cur += (cur.empty() ? "" : "\n") + line;
    }
  }
  if (!trim(cur).empty()) items.push_back(trim(cur));
  return items;
}

std::vector<std::string> split_paragraphs(const std::vector<std::string>& lines) {
  std::vector<std::string> paras;
  std::string cur;
  for (const auto& line : lines) {
    if (trim(line).empty()) {
      if (!trim(cur).empty()) paras.push_back(trim(cur));
      cur.clear();
    } else {
      cur += (cur.empty() ? "" : "\n") + line;
    }
  }
  if (!trim(cur).empty()) paras.push_back(trim(cur));
  return paras;
}

int count_numbered_heads(const std::vector<std::string>& lines) {
  int n = 0;
  for (const auto& line : lines) {
    if (std::regex_search(line, kItemHead)) ++n;
  }
  return n;
}

}  // namespace

std::vector<ReviewComment> split_report(const std::string& raw_text,
                                        const SplitterConfig& config,
                                        const std::string& id_prefix) {
  const auto lines = split_lines(raw_text);
  std::vector<std::string> pieces;
  switch (config.mode) {
    case SplitterConfig::Mode::Numbered:
      pieces = split_numbered(lines);
      break;
    case SplitterConfig::Mode::Paragraph:
      pieces = split_paragraphs(lines);
      break;
    case SplitterConfig::Mode::Auto:
      if (count_numbered_heads(lines) >= 2) pieces = split_numbered(lines);
      else pieces = split_paragraphs(lines);
      break;
  }
  if (pieces.empty()) {
    std::string t = trim(raw_text);
    if (!t.empty()) pieces.push_back(t);
  }
  std::vector<ReviewComment> comments;
  comments.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    comments.push_back({id_prefix + std::to_string(i + 1), pieces[i]});
  }
  return comments;
}

// ---------------------------------------------------------------------------
// JSONL ingestion
// ---------------------------------------------------------------------------

namespace {

json parse_line(const std::string& line, const std::string& path, int lineno) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw ValidationError(path + ":" + std::to_string(lineno) +
                          ": malformed record: " + e.what());
  }
}

template <typename T>
T require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(where + ": field '" + key + "': " + e.what());
  }
}

PageSpan read_span(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError(where + ": span must be [begin, end]");
  }
  PageSpan s{j[0].get<int>(), j[1].get<int>()};
  if (s.begin > s.end) {
    throw ValidationError(where + ": span start " + std::to_string(s.begin) +
                          " > end " + std::to_string(s.end));
  }
  return s;
}

std::map<std::string, int> read_registry(const json& j, const char* key,
                                         const std::string& where) {
  std::map<std::string, int> reg;
  if (!j.contains(key)) return reg;
  for (const auto& [k, v] : j.at(key).items()) {
    reg[k] = v.get<int>();
  }
  (void)where;
  return reg;
}

void check_registry(const std::map<std::string, int>& reg, const char* name,
                    const std::set<int>& ordinals, const std::string& where) {
  for (const auto& [label, ordinal] : reg) {
    if (!ordinals.count(ordinal)) {
      throw ValidationError(where + ": " + name + " entry '" + label +
                            "' targets missing section ordinal " +
                            std::to_string(ordinal));
    }
  }
}

template <typename Fn>
void for_each_line(const std::string& path, Fn&& fn) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    fn(line, lineno);
  }
}

}  // namespace

std::vector<Article> load_articles(const std::string& path) {
  std::vector<Article> articles;
  std::set<std::string> seen_ids;
  for_each_line(path, [&](const std::string& line, int lineno) {
    const std::string where = path + ":" + std::to_string(lineno);
    json j = parse_line(line, path, lineno);
    Article a;
    a.id = require<std::string>(j, "id", where);
    if (!seen_ids.insert(a.id).second) {
      throw ValidationError(where + ": duplicate article id '" + a.id + "'");
    }
    a.year = require<int>(j, "year", where);
    a.title = require<std::string>(j, "title", where);
    a.abstract = j.value("abstract", std::string());
    if (!j.contains("sections") || !j.at("sections").is_array() ||
        j.at("sections").empty()) {
      throw ValidationError(where + ": article must have non-empty sections");
    }
    std::set<int> ordinals;
    bool any_span_missing = false;
    for (const auto& js : j.at("sections")) {
      Section s;
      s.ordinal = require<int>(js, "ordinal", where);
      if (!ordinals.insert(s.ordinal).second) {
        throw ValidationError(where + ": duplicate section ordinal " +
                              std::to_string(s.ordinal));
      }
      s.number_string = js.value("number", std::string());
      s.title = require<std::string>(js, "title", where);
      s.body = js.value("body", std::string());
      if (js.contains("page_span")) {
        s.page_span = read_span(js.at("page_span"), where);
      } else {
        any_span_missing = true;
      }
      if (js.contains("line_span")) {
        s.line_span = read_span(js.at("line_span"), where);
      }
      if (js.contains("label")) {
        s.label = structure_from_string(js.at("label").get<std::string>());
      }
      a.sections.push_back(std::move(s));
    }
    a.figure_registry = read_registry(j, "figures", where);
    a.table_registry = read_registry(j, "tables", where);
    a.equation_registry = read_registry(j, "equations", where);
    check_registry(a.figure_registry, "figure registry", ordinals, where);
    check_registry(a.table_registry, "table registry", ordinals, where);
    check_registry(a.equation_registry, "equation registry", ordinals, where);
    a.explicit_resolution_limited = any_span_missing;
    articles.push_back(std::move(a));
  });
  std::stable_sort(articles.begin(), articles.end(),
                   [](const Article& x, const Article& y) { return x.id < y.id; });
  return articles;
}

std::vector<ReviewReport> load_reviews(const std::string& path,
                                       const SplitterConfig& splitter) {
  std::vector<ReviewReport> reports;
  std::set<std::string> seen_ids;
  for_each_line(path, [&](const std::string& line, int lineno) {
    const std::string where = path + ":" + std::to_string(lineno);
    json j = parse_line(line, path, lineno);
    ReviewReport r;
    r.id = require<std::string>(j, "id", where);
    if (!seen_ids.insert(r.id).second) {
      throw ValidationError(where + ": duplicate report id '" + r.id + "'");
    }
    r.article_id = require<std::string>(j, "article_id", where);
    r.year = require<int>(j, "year", where);
    r.raw_text = require<std::string>(j, "text", where);
    if (trim(r.raw_text).empty()) {
      throw ValidationError(where + ": report text is empty");
    }
    r.comments = split_report(r.raw_text, splitter, r.id + ".c");
    reports.push_back(std::move(r));
  });
  std::stable_sort(reports.begin(), reports.end(),
                   [](const ReviewReport& x, const ReviewReport& y) {
                     return x.id < y.id;
                   });
  return reports;
}

std::vector<BibRecord> load_bib(const std::string& path) {
  std::vector<BibRecord> records;
  std::set<std::string> seen_ids;
  for_each_line(path, [&](const std::string& line, int lineno) {
    const std::string where = path + ":" + std::to_string(lineno);
    json j = parse_line(line, path, lineno);
    BibRecord b;
    b.article_id = require<std::string>(j, "article_id", where);
    if (!seen_ids.insert(b.article_id).second) {
      throw ValidationError(where + ": duplicate bib record for '" +
                            b.article_id + "'");
    }
    b.citations = require<std::int64_t>(j, "citations", where);
    const std::string type = j.value("paper_type", std::string("Other"));
    if (type == "Review") b.paper_type = PaperType::Review;
    else if (type == "Other") b.paper_type = PaperType::Other;
    else throw ValidationError(where + ": paper_type must be Review|Other");
    b.title_length = require<int>(j, "title_length", where);
    b.author_count = require<int>(j, "author_count", where);
    b.page_count = require<int>(j, "page_count", where);
    b.reference_count = require<int>(j, "reference_count", where);
    b.country_count = require<int>(j, "country_count", where);
    if (b.citations < 0) throw ValidationError(where + ": citations < 0");
    if (b.title_length < 0 || b.page_count < 0 || b.reference_count < 0) {
      throw ValidationError(where + ": counts must be >= 0");
    }
    if (b.author_count < 1 || b.country_count < 1) {
      throw ValidationError(where + ": author_count and country_count must be >= 1");
    }
    records.push_back(std::move(b));
  });
  std::stable_sort(records.begin(), records.end(),
                   [](const BibRecord& x, const BibRecord& y) {
                     return x.article_id < y.article_id;
                   });
  return records;
}

void validate_cross_references(const std::vector<Article>& articles,
                               const std::vector<ReviewReport>& reports) {
  std::set<std::string> ids;
  for (const auto& a : articles) ids.insert(a.id);
  for (const auto& r : reports) {
    if (!ids.count(r.article_id)) {
      throw ValidationError("report '" + r.id +
                            "' references missing article '" + r.article_id + "'");
    }
  }
}

// ---------------------------------------------------------------------------
// Canonical serialization
// ---------------------------------------------------------------------------

namespace {

json span_to_json(const PageSpan& s) { return json::array({s.begin, s.end}); }

json registry_to_json(const std::map<std::string, int>& reg) {
  json j = json::object();
  for (const auto& [k, v] : reg) j[k] = v;  // std::map iterates sorted
  return j;
}

}  // namespace

std::string serialize_articles(const std::vector<Article>& articles) {
  std::ostringstream out;
  for (const auto& a : articles) {
    json j;
    j["id"] = a.id;
    j["year"] = a.year;
    j["title"] = a.title;
    j["abstract"] = a.abstract;
    json sections = json::array();
    for (const auto& s : a.sections) {
      json js;
      js["ordinal"] = s.ordinal;
      js["number"] = s.number_string;
      js["title"] = s.title;
      js["body"] = s.body;
      js["page_span"] = span_to_json(s.page_span);
      if (s.line_span) js["line_span"] = span_to_json(*s.line_span);
      if (s.label != StructureLabel::Unknown) js["label"] = to_string(s.label);
      sections.push_back(std::move(js));
    }
    j["sections"] = std::move(sections);
    j["figures"] = registry_to_json(a.figure_registry);
    j["tables"] = registry_to_json(a.table_registry);
    j["equations"] = registry_to_json(a.equation_registry);
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string serialize_reviews(const std::vector<ReviewReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    json j;
    j["id"] = r.id;
    j["article_id"] = r.article_id;
    j["year"] = r.year;
    j["text"] = r.raw_text;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string serialize_bib(const std::vector<BibRecord>& records) {
  std::ostringstream out;
  for (const auto& b : records) {
    json j;
    j["article_id"] = b.article_id;
    j["citations"] = b.citations;
    j["paper_type"] = b.paper_type == PaperType::Review ? "Review" : "Other";
    j["title_length"] = b.title_length;
    j["author_count"] = b.author_count;
    j["page_count"] = b.page_count;
    j["reference_count"] = b.reference_count;
    j["country_count"] = b.country_count;
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace prcmap
