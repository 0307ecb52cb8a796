#ifndef SENSE_ARBITER_LEXICON_H_
#define SENSE_ARBITER_LEXICON_H_

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sense_arbiter/text_prep.h"

namespace sense_arbiter {

struct Sense {
  std::string lemma;
  std::string sense_id;  // e.g. "bank.finance", unique within a lexicon
  std::string label;     // human readable name of the sense
  std::string gloss;     // definition text, never empty
  std::string examples;  // optional usage examples, not part of the gloss

  bool operator==(const Sense &) const = default;
};

// Flat-file gloss dictionary.
//
// File format, one record per sense:
//
//   lemma <TAB> sense_id <TAB> label <TAB> gloss [<TAB> examples]
//
// Lines starting with '#' and blank lines are ignored. Senses of a lemma keep
// their file order. The lexicon is immutable once loaded and can be shared
// freely between threads.
class Lexicon {
 public:
  Lexicon() = default;

  // Throws MissingFile, or MalformedLexicon with the offending line.
  static Lexicon Load(const std::string &path);
  static Lexicon Parse(std::istream &in, const std::string &source);

  // Writes records grouped by lemma (sorted), file order within a lemma.
  void Save(const std::string &path) const;
  void Write(std::ostream &out) const;

  // Throws Error on a duplicate sense id, empty gloss or malformed lemma.
  void AddSense(Sense sense);

  // Empty for an unknown lemma.
  const std::vector<Sense> &SensesOf(std::string_view lemma) const;
  const Sense *FindSense(std::string_view sense_id) const;
  bool HasSense(std::string_view lemma, std::string_view sense_id) const;
  bool IsAmbiguous(std::string_view lemma) const {
    return SensesOf(lemma).size() >= 2;
  }

  std::vector<std::string> Lemmas() const;
  std::size_t sense_count() const { return sense_index_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const Lexicon &other) const {
    return entries_ == other.entries_;
  }

 private:
  std::map<std::string, std::vector<Sense>, std::less<>> entries_;
  // sense_id -> lemma
  std::map<std::string, std::string, std::less<>> sense_index_;
};

struct GlossOptions {
  bool include_examples = false;
  // Must match the options used for the input text.
  TokenizeOptions tokenize;
};

// Content words of a sense's gloss, prepared exactly like input text. The
// sense's own lemma is kept if the gloss mentions it.
WordSet GlossTokenSet(const Sense &sense, const StopWordList &stops,
                      const GlossOptions &options = {});

}  // namespace sense_arbiter

#endif  // SENSE_ARBITER_LEXICON_H_
