// Line-oriented TSV helpers shared by the file loaders.
#ifndef SENSE_ARBITER_SRC_TSV_H_
#define SENSE_ARBITER_SRC_TSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace sense_arbiter::tsv {

inline void StripCarriageReturn(std::string &line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool IsSkippable(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  return i == line.size() || line[i] == '#';
}

inline std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

inline bool HasWhitespace(std::string_view s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v') {
      return true;
    }
  }
  return false;
}

inline bool IsNormalizedWord(std::string_view s) {
  if (s.empty() || HasWhitespace(s)) return false;
  for (char c : s) {
    if (c >= 'A' && c <= 'Z') return false;
  }
  return true;
}

// Parses a strictly positive decimal integer; returns 0 on failure.
inline long ParsePositive(std::string_view s) {
  if (s.empty() || s.size() > 9) return 0;
  long value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return 0;
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace sense_arbiter::tsv

#endif  // SENSE_ARBITER_SRC_TSV_H_
