#ifndef SENSE_ARBITER_BOW_H_
#define SENSE_ARBITER_BOW_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sense_arbiter/lesk.h"
#include "sense_arbiter/lexicon.h"
#include "sense_arbiter/text_prep.h"

namespace sense_arbiter {

struct SenseBag {
  std::string lemma;
  std::string sense_id;
  WordSet words;
};

// Result of BagSet::Add. Every requested word lands in exactly one set.
struct AddReport {
  WordSet added;
  // Already present in a different bag of the same lemma.
  WordSet conflicts;
  // The lemma itself, stop words, and words already in the target bag.
  WordSet ignored;
};

// Cue-word bags, one per (lemma, sense). Bags of the same lemma are kept
// disjoint: a word votes for at most one sense of a given lemma.
//
// File format, one cue word per line:
//
//   lemma <TAB> sense_id <TAB> word
//
// '#' comments and blank lines are ignored.
class BagSet {
 public:
  using Key = std::pair<std::string, std::string>;  // (lemma, sense_id)

  // Throws MissingFile or FormatError (malformed record, lemma used as its
  // own cue word, or a word shared by two bags of one lemma).
  static BagSet Load(const std::string &path);
  static BagSet Parse(std::istream &in, const std::string &source);

  // Lexicographic order on (lemma, sense_id, word).
  void Save(const std::string &path) const;
  void Write(std::ostream &out) const;

  // Throws UnknownSense for a bag whose sense is not in the lexicon, Error
  // for a bag holding a stop word.
  void Validate(const Lexicon &lexicon, const StopWordList &stops) const;

  // Throws UnknownSense if `sense_id` is not a sense of `lemma`.
  AddReport Add(std::string_view lemma, std::string_view sense_id,
                const WordSet &words, const Lexicon &lexicon,
                const StopWordList &stops);

  // Empty for a missing bag.
  const WordSet &Words(std::string_view lemma, std::string_view sense_id) const;
  bool Contains(std::string_view lemma, std::string_view sense_id,
                std::string_view word) const;
  // The sense whose bag for `lemma` holds `word`, if any.
  std::optional<std::string> SenseOfWord(std::string_view lemma,
                                         std::string_view word) const;
  // Senses of `lemma` that currently own a nonempty bag, sorted.
  std::vector<std::string> SensesWithBags(std::string_view lemma) const;

  const std::map<Key, WordSet> &bags() const { return bags_; }
  std::size_t bag_count() const { return bags_.size(); }
  std::size_t word_count() const;

  bool operator==(const BagSet &other) const { return bags_ == other.bags_; }

 private:
  // Inserts without validation; returns the sense already owning the word for
  // this lemma when that blocks the insert.
  std::optional<std::string> Insert(const std::string &lemma,
                                    const std::string &sense_id,
                                    const std::string &word);

  std::map<Key, WordSet> bags_;
  // (lemma, word) -> sense_id
  std::map<Key, std::string> owner_;
};

struct BowOutcome {
  DecisionOutcome decision;
  // Distinct context words found in one of the keyword's bags.
  WordSet matched;
  // Distinct context words found in none of them; keyword excluded.
  WordSet unmatched;
};

// Scores each keyword sense by the number of distinct context words found in
// its bag. Senses are those of the lexicon plus any that only own a bag.
// Throws NoSenses when the keyword has neither.
BowOutcome BowClassify(const TokenList &context, std::string_view keyword,
                       const BagSet &bags, const Lexicon &lexicon);

}  // namespace sense_arbiter

#endif  // SENSE_ARBITER_BOW_H_
