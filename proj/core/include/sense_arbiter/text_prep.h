#ifndef SENSE_ARBITER_TEXT_PREP_H_
#define SENSE_ARBITER_TEXT_PREP_H_

#include <cstddef>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sense_arbiter {

// Ordered set of normalized word forms. Ordered so that anything derived from
// it (traces, saved state) has a stable iteration order.
using WordSet = std::set<std::string>;

struct Token {
  std::string text;
  // Index of the whitespace-separated chunk this token came from.
  std::size_t position = 0;

  bool operator==(const Token &) const = default;
};

using TokenList = std::vector<Token>;

class StopWordList {
 public:
  StopWordList() = default;
  // Entries are normalized (trimmed, lowercased); blank entries are ignored.
  explicit StopWordList(std::initializer_list<std::string_view> words);

  // The bundled minimal list.
  static StopWordList Default();

  // One word per line; '#' comments and blank lines are ignored.
  static StopWordList Load(const std::string &path);
  static StopWordList Parse(std::istream &in);

  void Add(std::string_view word);
  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

  // Sorted copy of the entries.
  std::vector<std::string> Sorted() const;

  bool operator==(const StopWordList &other) const {
    return words_ == other.words_;
  }

 private:
  std::unordered_set<std::string> words_;
};

struct TokenizeOptions {
  // Crude English suffix stripping (-ing, -ed, -es, -s). Off by default and
  // for every evaluation run; surface forms are matched as-is.
  bool strip_suffixes = false;
};

// Splits raw text into sentences. A run of '.', '!' or '?' ends a sentence
// only when followed by end of text, or by whitespace and then an uppercase
// letter. Returned sentences are trimmed and never empty.
std::vector<std::string> SplitSentences(std::string_view text);

// Whitespace split, strip surrounding punctuation, lowercase. Inside a token
// only [a-z0-9'-] survive; tokens without any letter are dropped.
TokenList Tokenize(std::string_view sentence, const TokenizeOptions &options = {});

// Lowercases and trims a single word form, e.g. a keyword from the command
// line. Does not strip punctuation.
std::string NormalizeWord(std::string_view word);

TokenList RemoveStopWords(const TokenList &tokens, const StopWordList &stops);

// Distinct word forms of a token list.
WordSet ToWordSet(const TokenList &tokens);

// Convenience: Tokenize followed by RemoveStopWords.
TokenList ContentTokens(std::string_view sentence, const StopWordList &stops,
                        const TokenizeOptions &options = {});

}  // namespace sense_arbiter

#endif  // SENSE_ARBITER_TEXT_PREP_H_
