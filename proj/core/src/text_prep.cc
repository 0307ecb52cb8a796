#include "sense_arbiter/text_prep.h"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "sense_arbiter/errors.h"

namespace sense_arbiter {

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

char ToLower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string_view Trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && IsSpace(s[begin])) ++begin;
  while (end > begin && IsSpace(s[end - 1])) --end;
  return s.substr(begin, end - begin);
}

bool EndsWith(const std::string &s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string StripSuffix(std::string word) {
  if (word.size() > 5 && EndsWith(word, "ing")) {
    word.resize(word.size() - 3);
  } else if (word.size() > 4 && EndsWith(word, "ed")) {
    word.resize(word.size() - 2);
  } else if (word.size() > 4 && EndsWith(word, "es")) {
    word.resize(word.size() - 2);
  } else if (word.size() > 3 && EndsWith(word, "s") && !EndsWith(word, "ss")) {
    word.resize(word.size() - 1);
  }
  return word;
}

// Normalizes one whitespace-delimited chunk. Returns an empty string when the
// chunk does not form a token.
std::string NormalizeChunk(std::string_view chunk, const TokenizeOptions &options) {
  std::size_t begin = 0;
  std::size_t end = chunk.size();
  while (begin < end && !IsAlnum(chunk[begin])) ++begin;
  while (end > begin && !IsAlnum(chunk[end - 1])) --end;

  std::string out;
  out.reserve(end - begin);
  bool has_alpha = false;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = ToLower(chunk[i]);
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'' ||
        c == '-') {
      out.push_back(c);
      has_alpha = has_alpha || IsAlpha(c);
    }
  }
  if (!has_alpha) return {};
  if (options.strip_suffixes) out = StripSuffix(std::move(out));
  return out;
}

}  // namespace

StopWordList::StopWordList(std::initializer_list<std::string_view> words) {
  for (std::string_view w : words) Add(w);
}

StopWordList StopWordList::Default() {
  return StopWordList{"a",   "an",  "the", "to",  "for",  "of", "in",
                      "on",  "and", "is",  "are", "was",  "he", "she",
                      "it",  "this", "we", "you", "must", "can", "that"};
}

StopWordList StopWordList::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path);
  return Parse(in);
}

StopWordList StopWordList::Parse(std::istream &in) {
  StopWordList stops;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = Trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    stops.Add(entry);
  }
  return stops;
}

void StopWordList::Add(std::string_view word) {
  std::string normalized = NormalizeWord(word);
  if (normalized.empty()) return;
  words_.insert(std::move(normalized));
}

bool StopWordList::Contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

std::vector<std::string> StopWordList::Sorted() const {
  std::vector<std::string> out(words_.begin(), words_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < n && IsTerminator(text[run_end])) ++run_end;

    std::size_t next = run_end;
    while (next < n && IsSpace(text[next])) ++next;
    const bool at_end = next == n;
    const bool boundary =
        at_end || (next > run_end && IsUpper(text[next]));
    if (boundary) {
      std::string_view sentence = Trim(text.substr(start, run_end - start));
      if (!sentence.empty()) sentences.emplace_back(sentence);
      start = next;
    }
    i = run_end;
  }
  std::string_view tail = Trim(text.substr(std::min(start, n)));
  if (!tail.empty()) sentences.emplace_back(tail);
  return sentences;
}

TokenList Tokenize(std::string_view sentence, const TokenizeOptions &options) {
  TokenList tokens;
  std::size_t position = 0;
  std::size_t i = 0;
  const std::size_t n = sentence.size();
  while (i < n) {
    while (i < n && IsSpace(sentence[i])) ++i;
    if (i == n) break;
    std::size_t j = i;
    while (j < n && !IsSpace(sentence[j])) ++j;
    std::string token = NormalizeChunk(sentence.substr(i, j - i), options);
    if (!token.empty()) tokens.push_back(Token{std::move(token), position});
    ++position;
    i = j;
  }
  return tokens;
}

std::string NormalizeWord(std::string_view word) {
  std::string out(Trim(word));
  std::transform(out.begin(), out.end(), out.begin(), ToLower);
  return out;
}

TokenList RemoveStopWords(const TokenList &tokens, const StopWordList &stops) {
  TokenList out;
  out.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [&](const Token &t) { return !stops.Contains(t.text); });
  return out;
}

WordSet ToWordSet(const TokenList &tokens) {
  WordSet words;
  for (const Token &t : tokens) words.insert(t.text);
  return words;
}

TokenList ContentTokens(std::string_view sentence, const StopWordList &stops,
                        const TokenizeOptions &options) {
  return RemoveStopWords(Tokenize(sentence, options), stops);
}

}  // namespace sense_arbiter
