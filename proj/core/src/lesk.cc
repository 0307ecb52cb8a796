#include "sense_arbiter/lesk.h"

#include <algorithm>
#include <stdexcept>

#include "sense_arbiter/errors.h"

namespace sense_arbiter {

std::string_view ToString(UndecidedReason reason) {
  switch (reason) {
    case UndecidedReason::kTie:
      return "tie";
    case UndecidedReason::kAllZero:
      return "all_zero";
    case UndecidedReason::kNoSenses:
      return "no_senses";
  }
  return "unknown";
}

Verdict DecideByUniqueMax(const SenseCounters &counters) {
  if (counters.empty()) return Undecided{UndecidedReason::kNoSenses};
  const std::string *best = nullptr;
  int best_value = 0;
  int best_count = 0;
  for (const auto &[sense, value] : counters) {
    if (best == nullptr || value > best_value) {
      best = &sense;
      best_value = value;
      best_count = 1;
    } else if (value == best_value) {
      ++best_count;
    }
  }
  if (best_value <= 0) return Undecided{UndecidedReason::kAllZero};
  if (best_count > 1) return Undecided{UndecidedReason::kTie};
  return Decided{*best};
}

std::optional<std::string> DecisionOutcome::sense() const {
  if (const auto *d = std::get_if<Decided>(&verdict)) return d->sense_id;
  return std::nullopt;
}

int DecisionOutcome::margin() const {
  const auto *d = std::get_if<Decided>(&verdict);
  if (d == nullptr) return 0;
  int winner = 0;
  int runner_up = 0;
  for (const auto &[sense, value] : counters) {
    if (sense == d->sense_id) {
      winner = value;
    } else {
      runner_up = std::max(runner_up, value);
    }
  }
  return winner - runner_up;
}

std::string FormatVerdict(const Verdict &verdict) {
  if (const auto *d = std::get_if<Decided>(&verdict)) return d->sense_id;
  return "undecided:" + std::string(ToString(std::get<Undecided>(verdict).reason));
}

std::string FormatCounters(const SenseCounters &counters) {
  std::string out;
  for (const auto &[sense, value] : counters) {
    if (!out.empty()) out += ',';
    out += sense;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

std::size_t Overlap(const WordSet &a, const WordSet &b) {
  const WordSet &small = a.size() <= b.size() ? a : b;
  const WordSet &large = a.size() <= b.size() ? b : a;
  std::size_t shared = 0;
  for (const std::string &w : small) shared += large.count(w);
  return shared;
}

TokenList LeskWindow(const TokenList &tokens, std::size_t keyword_position,
                     int window) {
  if (window <= 0 || window % 2 == 0) {
    throw std::invalid_argument("window must be a positive odd integer");
  }
  if (keyword_position >= tokens.size()) {
    throw std::invalid_argument("keyword position outside the token list");
  }
  const std::size_t half = static_cast<std::size_t>(window / 2);
  const std::size_t begin = keyword_position >= half ? keyword_position - half : 0;
  const std::size_t end = std::min(tokens.size(), keyword_position + half + 1);
  return TokenList(tokens.begin() + static_cast<std::ptrdiff_t>(begin),
                   tokens.begin() + static_cast<std::ptrdiff_t>(end));
}

DecisionOutcome TypicalLesk(const TokenList &tokens,
                            std::size_t keyword_position, int window,
                            const Lexicon &lexicon, const StopWordList &stops,
                            const GlossOptions &gloss_options) {
  TokenList phrase = LeskWindow(tokens, keyword_position, window);
  const std::string &keyword = tokens[keyword_position].text;
  const std::vector<Sense> &senses = lexicon.SensesOf(keyword);
  if (senses.empty()) throw NoSenses(keyword);

  const std::size_t half = static_cast<std::size_t>(window / 2);
  const std::size_t keyword_in_phrase = std::min(keyword_position, half);

  // Glosses of every sense of every other phrase word, window order.
  std::vector<WordSet> neighbour_glosses;
  for (std::size_t i = 0; i < phrase.size(); ++i) {
    if (i == keyword_in_phrase) continue;
    for (const Sense &other : lexicon.SensesOf(phrase[i].text)) {
      neighbour_glosses.push_back(GlossTokenSet(other, stops, gloss_options));
    }
  }

  DecisionOutcome outcome;
  outcome.keyword = keyword;
  for (const Sense &sense : senses) {
    const WordSet gloss = GlossTokenSet(sense, stops, gloss_options);
    int counter = 0;
    for (const WordSet &other : neighbour_glosses) {
      counter += static_cast<int>(Overlap(gloss, other));
    }
    outcome.counters[sense.sense_id] = counter;
  }
  outcome.verdict = DecideByUniqueMax(outcome.counters);
  return outcome;
}

DecisionOutcome ModifiedLesk(const TokenList &context, std::string_view keyword,
                             const Lexicon &lexicon, const StopWordList &stops,
                             const GlossOptions &gloss_options) {
  const std::vector<Sense> &senses = lexicon.SensesOf(keyword);
  if (senses.empty()) throw NoSenses(std::string(keyword));

  WordSet words = ToWordSet(context);
  words.erase(std::string(keyword));

  DecisionOutcome outcome;
  outcome.keyword = std::string(keyword);
  for (const Sense &sense : senses) {
    outcome.counters[sense.sense_id] =
        static_cast<int>(Overlap(words, GlossTokenSet(sense, stops, gloss_options)));
  }
  outcome.verdict = DecideByUniqueMax(outcome.counters);
  return outcome;
}

}  // namespace sense_arbiter
