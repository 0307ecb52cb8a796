#ifndef SENSE_ARBITER_EVALKIT_H_
#define SENSE_ARBITER_EVALKIT_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sense_arbiter/arbiter.h"
#include "sense_arbiter/lexicon.h"

namespace sense_arbiter {

struct GoldInstance {
  std::string sentence;
  std::string keyword;
  std::string gold_sense;

  bool operator==(const GoldInstance &) const = default;
};

// Order matters: the combined pipeline learns as it goes.
using GoldCorpus = std::vector<GoldInstance>;

// Format: sentence <TAB> keyword <TAB> gold_sense_id, '#' comments.
// Throws FormatError for a malformed line or a keyword missing from its
// sentence, UnknownSense (with file:line) for a sense the lexicon lacks.
GoldCorpus LoadGold(const std::string &path, const Lexicon &lexicon);
GoldCorpus ParseGold(std::istream &in, const std::string &source,
                     const Lexicon &lexicon);

// Which answers count as responses. kStrict: only verified
// (Disambiguated) answers. kLenient: Disambiguated or Probable.
enum class ResponsePolicy { kStrict, kLenient };

std::string_view ToString(ResponsePolicy policy);
std::optional<ResponsePolicy> ParseResponsePolicy(std::string_view name);

struct Response {
  std::optional<std::string> sense;
  Confidence confidence = Confidence::kUndecided;
};

double FMeasure(double precision, double recall);

// Exact counts; ratios are derived on demand.
struct Metrics {
  std::size_t responded = 0;
  std::size_t matched = 0;
  std::size_t total = 0;

  double precision() const {
    return responded == 0 ? 0.0 : static_cast<double>(matched) / responded;
  }
  double recall() const {
    return total == 0 ? 0.0 : static_cast<double>(matched) / total;
  }
  double f_measure() const { return FMeasure(precision(), recall()); }

  bool operator==(const Metrics &) const = default;
};

// Throws std::invalid_argument when the spans differ in length.
Metrics Score(std::span<const Response> responses,
              std::span<const GoldInstance> gold, ResponsePolicy policy);

// Fixed two-decimal rendering used in every report.
std::string FormatRatio(double value);

enum class Mode { kLeskOnly, kBowOnly, kCombined };

std::string_view ToString(Mode mode);
// Human-readable row label ("Modified Lesk", ...).
std::string_view DisplayName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

// One audit line per instance.
struct TraceRecord {
  std::size_t index = 0;
  std::string keyword;
  Mode mode = Mode::kCombined;
  std::optional<DecisionOutcome> lesk;
  std::optional<DecisionOutcome> bow;
  std::optional<bool> or_bit;
  std::optional<bool> and_bit;
  std::optional<std::string> sense;
  Confidence confidence = Confidence::kUndecided;
  std::string gold;
  std::vector<Promotion> promoted;
  WordSet banked;
};

// index, keyword, mode, lesk verdict, bow verdict, OR, AND, chosen sense,
// confidence, gold, promotions, banked words; TAB separated, '-' for n/a.
std::string FormatTraceLine(const TraceRecord &record);

struct ComparisonResult {
  Mode mode = Mode::kCombined;
  Metrics metrics;
  std::vector<Response> responses;
  std::vector<TraceRecord> trace;
  // State after the run; equals the initial state except in combined mode.
  ArbiterState final_state;
};

// Runs one approach over the corpus in order. Lesk-only and BoW-only never
// learn; BoW-only always sees the initial bags. A decided single scorer is
// reported as Disambiguated. `initial_state` is copied, so modes never share
// mutations.
ComparisonResult RunComparison(const GoldCorpus &corpus,
                               const ArbiterState &initial_state, Mode mode,
                               ResponsePolicy policy);

void WriteTrace(std::span<const TraceRecord> trace, std::ostream &out);

struct MeanMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

// Arithmetic mean of per-run precision, recall and F-measure.
MeanMetrics Average(std::span<const Metrics> runs);

}  // namespace sense_arbiter

#endif  // SENSE_ARBITER_EVALKIT_H_
