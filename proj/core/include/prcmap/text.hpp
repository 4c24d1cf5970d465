#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace prcmap {

/// ASCII lowercase copy. Corpus text is English; no locale involved.
std::string to_lower(std::string_view s);

/// Splits into maximal runs of alphanumeric characters, lowercased.
/// "Fig. 3a shows" -> {"fig", "3a", "shows"}
std::vector<std::string> tokenize_words(std::string_view s);

/// Alphabetic-only tokens (digits dropped entirely), lowercased.
std::vector<std::string> tokenize_alpha(std::string_view s);

/// Sentence split on {. ! ?}. Empty segments are dropped.
std::vector<std::string> split_sentences(std::string_view s);

std::string trim(std::string_view s);

bool starts_with_ci(std::string_view s, std::string_view prefix);

/// Deterministic round-trip formatting for doubles in reports and CSVs.
std::string format_double(double v);

}  // namespace prcmap
