#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prcmap {

/// The four-part article structure plus the pre-classification state.
enum class StructureLabel { Introduction, Methods, Results, Discussion, Unknown };

constexpr std::array<StructureLabel, 4> kStructures = {
    StructureLabel::Introduction, StructureLabel::Methods,
    StructureLabel::Results, StructureLabel::Discussion};

const char* to_string(StructureLabel label);
/// Short column key: "I", "M", "R", "D", "?".
const char* to_key(StructureLabel label);
StructureLabel structure_from_string(const std::string& s);

struct PageSpan {
  int begin = 0;
  int end = 0;
};

struct Section {
  int ordinal = 0;             // 1-based, unique within the article
  std::string number_string;   // as printed, e.g. "3" or "3.1"
  std::string title;
  std::string body;
  PageSpan page_span;
  std::optional<PageSpan> line_span;
  StructureLabel label = StructureLabel::Unknown;
};

struct Article {
  std::string id;
  int year = 0;
  std::string title;
  std::string abstract;
  std::vector<Section> sections;
  // Registries map a printed label ("5", "3.1") to the owning section ordinal.
  std::map<std::string, int> figure_registry;
  std::map<std::string, int> table_registry;
  std::map<std::string, int> equation_registry;
  /// Set when page/line spans were missing at ingest: explicit page/line
  /// mentions degrade to page-only (or fail) for this article.
  bool explicit_resolution_limited = false;

  const Section* section_by_ordinal(int ordinal) const;
};

struct ReviewComment {
  std::string id;
  std::string text;
};

struct ReviewReport {
  std::string id;
  std::string article_id;
  int year = 0;
  std::string raw_text;
  std::vector<ReviewComment> comments;
};

enum class PaperType { Review, Other };

struct BibRecord {
  std::string article_id;
  std::int64_t citations = 0;       // raw, un-normalized count
  PaperType paper_type = PaperType::Other;
  int title_length = 0;             // word count
  int author_count = 1;
  int page_count = 0;
  int reference_count = 0;
  int country_count = 1;
};

/// How a review report is cut into comments. The default mode looks for
/// numbered items ("1.", "2)", "Comment 3:"); when fewer than two are found
/// it falls back to blank-line paragraphs.
struct SplitterConfig {
  enum class Mode { Auto, Numbered, Paragraph };
  Mode mode = Mode::Auto;
};

std::vector<ReviewComment> split_report(const std::string& raw_text,
                                        const SplitterConfig& config = {},
                                        const std::string& id_prefix = "c");

// Line-oriented ingestion. Each line is one JSON record; malformed lines and
// invariant violations raise ValidationError with the line number.
std::vector<Article> load_articles(const std::string& path);
std::vector<ReviewReport> load_reviews(const std::string& path,
                                       const SplitterConfig& splitter = {});
std::vector<BibRecord> load_bib(const std::string& path);

/// Rejects reports whose article_id does not resolve in `articles`.
void validate_cross_references(const std::vector<Article>& articles,
                               const std::vector<ReviewReport>& reports);

// Canonical one-record-per-line serialization: fixed key order, no extra
// whitespace. ingest -> serialize -> ingest is the identity.
std::string serialize_articles(const std::vector<Article>& articles);
std::string serialize_reviews(const std::vector<ReviewReport>& reports);
std::string serialize_bib(const std::vector<BibRecord>& records);

}  // namespace prcmap
