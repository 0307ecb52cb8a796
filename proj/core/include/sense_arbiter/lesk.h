#ifndef SENSE_ARBITER_LESK_H_
#define SENSE_ARBITER_LESK_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "sense_arbiter/lexicon.h"
#include "sense_arbiter/text_prep.h"

namespace sense_arbiter {

enum class UndecidedReason { kTie, kAllZero, kNoSenses };

std::string_view ToString(UndecidedReason reason);

struct Decided {
  std::string sense_id;
  bool operator==(const Decided &) const = default;
};

struct Undecided {
  UndecidedReason reason = UndecidedReason::kAllZero;
  bool operator==(const Undecided &) const = default;
};

using Verdict = std::variant<Decided, Undecided>;

// sense_id -> counter. Ordered so that traces print deterministically.
using SenseCounters = std::map<std::string, int>;

// A sense wins only with a strictly greater positive counter than every other
// sense. Anything else is a tie or all-zero.
Verdict DecideByUniqueMax(const SenseCounters &counters);

// One scorer's verdict on one keyword occurrence.
struct DecisionOutcome {
  std::string keyword;
  SenseCounters counters;
  Verdict verdict = Undecided{};

  bool decided() const { return std::holds_alternative<Decided>(verdict); }
  // Winning sense, if any.
  std::optional<std::string> sense() const;
  // Winner counter minus the best other counter; 0 when undecided.
  int margin() const;

  bool operator==(const DecisionOutcome &) const = default;
};

// Renders a verdict as "sense_id" or "undecided:<reason>".
std::string FormatVerdict(const Verdict &verdict);
// Renders counters as "id=n,id=n".
std::string FormatCounters(const SenseCounters &counters);

// Number of distinct word forms shared by both sets.
std::size_t Overlap(const WordSet &a, const WordSet &b);

// The phrase used by windowed Lesk: `window` consecutive tokens centred on
// `keyword_position`, cut off at the sentence edges. Throws
// std::invalid_argument for an even or non-positive window, or a position
// outside the token list.
TokenList LeskWindow(const TokenList &tokens, std::size_t keyword_position,
                     int window);

// Windowed Lesk. Each keyword sense is scored by the summed gloss overlap
// with every sense of every other word in the window. `tokens` must already
// be stop-filtered. Throws NoSenses for a keyword missing from the lexicon.
DecisionOutcome TypicalLesk(const TokenList &tokens,
                            std::size_t keyword_position, int window,
                            const Lexicon &lexicon, const StopWordList &stops,
                            const GlossOptions &gloss_options = {});

// Sentence-level Lesk: each keyword sense is scored by the overlap of its
// gloss with the whole stop-filtered sentence, keyword excluded. Throws
// NoSenses for a keyword missing from the lexicon.
DecisionOutcome ModifiedLesk(const TokenList &context, std::string_view keyword,
                             const Lexicon &lexicon, const StopWordList &stops,
                             const GlossOptions &gloss_options = {});

}  // namespace sense_arbiter

#endif  // SENSE_ARBITER_LESK_H_
