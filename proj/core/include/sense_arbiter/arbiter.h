#ifndef SENSE_ARBITER_ARBITER_H_
#define SENSE_ARBITER_ARBITER_H_

#include <cstddef>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "sense_arbiter/bow.h"
#include "sense_arbiter/lesk.h"
#include "sense_arbiter/lexicon.h"
#include "sense_arbiter/text_prep.h"

namespace sense_arbiter {

// How to pick a sense when both scorers decide but disagree. Only one rule is
// supported: the larger winning margin wins, a tied margin goes to Lesk.
enum class ConflictRule { kMarginThenLesk };

struct ArbiterConfig {
  // An anticipated (word, sense) pair joins the bag once its count exceeds
  // this value.
  int threshold = 3;
  // Window for the windowed Lesk baseline.
  int window = 3;
  ConflictRule conflict_rule = ConflictRule::kMarginThenLesk;
  bool strip_suffixes = false;

  bool operator==(const ArbiterConfig &) const = default;
};

// Counts of (lemma, sense_id, word) observations from unconfirmed decisions,
// waiting to cross the promotion threshold.
//
// File format: lemma <TAB> sense_id <TAB> word <TAB> count, count >= 1.
class AnticipatedStore {
 public:
  using Key = std::tuple<std::string, std::string, std::string>;

  static AnticipatedStore Load(const std::string &path);
  static AnticipatedStore Parse(std::istream &in, const std::string &source);
  void Save(const std::string &path) const;
  void Write(std::ostream &out) const;

  // Returns the new count.
  int Increment(const std::string &lemma, const std::string &sense_id,
                const std::string &word);
  int Count(const std::string &lemma, const std::string &sense_id,
            const std::string &word) const;
  void Erase(const Key &key) { counts_.erase(key); }
  void Set(const Key &key, int count);

  const std::map<Key, int> &entries() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  bool operator==(const AnticipatedStore &) const = default;

 private:
  std::map<Key, int> counts_;
};

// Everything the pipeline learns from and mutates. Single writer: instances
// must be fed sequentially. Copies are independent except for the shared,
// immutable lexicon.
struct ArbiterState {
  std::shared_ptr<const Lexicon> lexicon;
  StopWordList stops;
  BagSet bags;
  AnticipatedStore anticipated;
  ArbiterConfig config;

  // Throws on a threshold < 1, a bad window, or bags/anticipated entries
  // that break the lexicon or each other.
  void Validate() const;

  bool operator==(const ArbiterState &other) const;
};

enum class Confidence { kDisambiguated, kProbable, kUndecided };

std::string_view ToString(Confidence confidence);

enum class DecisionSource { kNone, kLesk, kBow, kBoth };

std::string_view ToString(DecisionSource source);

// Outcome of the OR step.
struct Formulation {
  std::optional<std::string> sense;
  bool or_bit = false;
  DecisionSource source = DecisionSource::kNone;

  bool operator==(const Formulation &) const = default;
};

Formulation Formulate(const DecisionOutcome &lesk, const DecisionOutcome &bow,
                      ConflictRule rule = ConflictRule::kMarginThenLesk);

// AND step: both scorers decided the same sense.
bool Verify(const DecisionOutcome &lesk, const DecisionOutcome &bow);

Confidence ConfidenceOf(bool or_bit, bool and_bit);

struct Promotion {
  std::string lemma;
  std::string sense_id;
  std::string word;

  bool operator==(const Promotion &) const = default;
};

struct EnrichResult {
  // Added straight to the bag (verified decision).
  WordSet banked;
  // Counted in the anticipated store (unverified decision).
  WordSet anticipated;
  // Moved from the anticipated store into a bag during this call.
  std::vector<Promotion> promoted;
  // Skipped because another bag of the lemma already owns the word.
  WordSet conflicts;
};

// Learning step. With no sense nothing happens. A verified decision banks
// `unmatched` into the sense bag; otherwise each word is counted in the
// anticipated store. Afterwards every anticipated entry whose count exceeds
// the threshold is moved into its bag. Throws UnknownSense if `sense` is not
// a sense of `keyword`.
EnrichResult Enrich(ArbiterState &state, std::string_view keyword,
                    const std::optional<std::string> &sense,
                    const WordSet &unmatched, bool and_bit);

struct InstanceResult {
  std::string keyword;
  std::size_t sentence_index = 0;
  std::optional<std::string> sense;
  Confidence confidence = Confidence::kUndecided;
  DecisionOutcome lesk_outcome;
  BowOutcome bow_outcome;
  bool or_bit = false;
  bool and_bit = false;
  DecisionSource source = DecisionSource::kNone;
  WordSet banked_words;
  WordSet anticipated_words;
  std::vector<Promotion> promoted;
  WordSet conflicts;
};

// True if `keyword` occurs as a token of `sentence` (case-insensitive).
bool ContainsKeyword(std::string_view sentence, std::string_view keyword,
                     const TokenizeOptions &options = {});

// Full pipeline on one sentence: prepare text, run both scorers, combine,
// verify and enrich `state`. Throws KeywordAbsent if the keyword is not in
// the sentence, NoSenses if the lexicon does not know it.
InstanceResult DisambiguateInstance(ArbiterState &state, std::string_view sentence,
                                    std::string_view keyword,
                                    std::size_t sentence_index = 0);

// State directory layout: bags.tsv, anticipated.tsv, config.tsv,
// lexicon.tsv and stopwords.txt. Output is sorted and byte-deterministic.
void SaveState(const ArbiterState &state, const std::string &dir);
ArbiterState LoadState(const std::string &dir);

ArbiterConfig ParseConfig(std::istream &in, const std::string &source);
void WriteConfig(const ArbiterConfig &config, std::ostream &out);

}  // namespace sense_arbiter

#endif  // SENSE_ARBITER_ARBITER_H_
