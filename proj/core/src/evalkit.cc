#include "sense_arbiter/evalkit.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "sense_arbiter/errors.h"
#include "tsv.h"

namespace sense_arbiter {

GoldCorpus LoadGold(const std::string &path, const Lexicon &lexicon) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path);
  return ParseGold(in, path, lexicon);
}

GoldCorpus ParseGold(std::istream &in, const std::string &source,
                     const Lexicon &lexicon) {
  GoldCorpus corpus;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    tsv::StripCarriageReturn(line);
    if (tsv::IsSkippable(line)) continue;
    std::vector<std::string> f = tsv::SplitTabs(line);
    if (f.size() != 3) {
      throw FormatError(source, line_no, "expected sentence <TAB> keyword <TAB> sense");
    }
    GoldInstance instance{f[0], NormalizeWord(f[1]), f[2]};
    if (instance.keyword.empty() || tsv::HasWhitespace(instance.keyword)) {
      throw FormatError(source, line_no, "malformed keyword");
    }
    if (!ContainsKeyword(instance.sentence, instance.keyword)) {
      throw FormatError(source, line_no,
                        "keyword '" + instance.keyword + "' not in sentence");
    }
    if (!lexicon.HasSense(instance.keyword, instance.gold_sense)) {
      throw UnknownSense(instance.keyword, instance.gold_sense,
                         source + ":" + std::to_string(line_no));
    }
    corpus.push_back(std::move(instance));
  }
  return corpus;
}

std::string_view ToString(ResponsePolicy policy) {
  return policy == ResponsePolicy::kStrict ? "strict" : "lenient";
}

std::optional<ResponsePolicy> ParseResponsePolicy(std::string_view name) {
  if (name == "strict") return ResponsePolicy::kStrict;
  if (name == "lenient") return ResponsePolicy::kLenient;
  return std::nullopt;
}

double FMeasure(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

Metrics Score(std::span<const Response> responses,
              std::span<const GoldInstance> gold, ResponsePolicy policy) {
  if (responses.size() != gold.size()) {
    throw std::invalid_argument("responses and gold corpus differ in length");
  }
  Metrics m;
  m.total = gold.size();
  for (std::size_t i = 0; i < responses.size(); ++i) {
    const Response &r = responses[i];
    const bool counts =
        r.sense && (r.confidence == Confidence::kDisambiguated ||
                    (policy == ResponsePolicy::kLenient &&
                     r.confidence == Confidence::kProbable));
    if (!counts) continue;
    ++m.responded;
    if (*r.sense == gold[i].gold_sense) ++m.matched;
  }
  return m;
}

std::string FormatRatio(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string_view ToString(Mode mode) {
  switch (mode) {
    case Mode::kLeskOnly:
      return "lesk";
    case Mode::kBowOnly:
      return "bow";
    case Mode::kCombined:
      return "combined";
  }
  return "unknown";
}

std::string_view DisplayName(Mode mode) {
  switch (mode) {
    case Mode::kLeskOnly:
      return "Modified Lesk";
    case Mode::kBowOnly:
      return "Bag-Of-Words";
    case Mode::kCombined:
      return "Combined";
  }
  return "unknown";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "lesk") return Mode::kLeskOnly;
  if (name == "bow") return Mode::kBowOnly;
  if (name == "combined") return Mode::kCombined;
  return std::nullopt;
}

namespace {

std::string FormatOutcome(const std::optional<DecisionOutcome> &outcome) {
  if (!outcome) return "-";
  return FormatVerdict(outcome->verdict) + "[" + FormatCounters(outcome->counters) + "]";
}

std::string FormatBit(const std::optional<bool> &bit) {
  if (!bit) return "-";
  return *bit ? "1" : "0";
}

std::string FormatPromotions(const std::vector<Promotion> &promoted) {
  if (promoted.empty()) return "-";
  std::string out;
  for (const Promotion &p : promoted) {
    if (!out.empty()) out += ',';
    out += p.sense_id + ":" + p.word;
  }
  return out;
}

std::string FormatWords(const WordSet &words) {
  if (words.empty()) return "-";
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ',';
    out += w;
  }
  return out;
}

Response SingleScorerResponse(const DecisionOutcome &outcome) {
  if (auto sense = outcome.sense()) return {sense, Confidence::kDisambiguated};
  return {};
}

}  // namespace

std::string FormatTraceLine(const TraceRecord &r) {
  std::string line;
  line += std::to_string(r.index);
  line += '\t' + r.keyword;
  line += '\t' + std::string(ToString(r.mode));
  line += "\tlesk=" + FormatOutcome(r.lesk);
  line += "\tbow=" + FormatOutcome(r.bow);
  line += "\tor=" + FormatBit(r.or_bit);
  line += "\tand=" + FormatBit(r.and_bit);
  line += "\tsense=" + r.sense.value_or("-");
  line += "\tconfidence=" + std::string(ToString(r.confidence));
  line += "\tgold=" + r.gold;
  line += "\tpromoted=" + FormatPromotions(r.promoted);
  line += "\tbanked=" + FormatWords(r.banked);
  return line;
}

ComparisonResult RunComparison(const GoldCorpus &corpus,
                               const ArbiterState &initial_state, Mode mode,
                               ResponsePolicy policy) {
  ComparisonResult result;
  result.mode = mode;
  result.final_state = initial_state;
  ArbiterState &state = result.final_state;
  const Lexicon &lexicon = *state.lexicon;
  const TokenizeOptions options{state.config.strip_suffixes};
  const GlossOptions gloss_options{false, options};

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const GoldInstance &g = corpus[i];
    TraceRecord rec;
    rec.index = i;
    rec.keyword = g.keyword;
    rec.mode = mode;
    rec.gold = g.gold_sense;
    Response response;

    switch (mode) {
      case Mode::kLeskOnly: {
        const TokenList context = ContentTokens(g.sentence, state.stops, options);
        DecisionOutcome out =
            ModifiedLesk(context, g.keyword, lexicon, state.stops, gloss_options);
        response = SingleScorerResponse(out);
        rec.lesk = std::move(out);
        break;
      }
      case Mode::kBowOnly: {
        const TokenList context = ContentTokens(g.sentence, state.stops, options);
        BowOutcome out = BowClassify(context, g.keyword, state.bags, lexicon);
        response = SingleScorerResponse(out.decision);
        rec.bow = std::move(out.decision);
        break;
      }
      case Mode::kCombined: {
        InstanceResult r = DisambiguateInstance(state, g.sentence, g.keyword, i);
        response = {r.sense, r.confidence};
        rec.lesk = std::move(r.lesk_outcome);
        rec.bow = std::move(r.bow_outcome.decision);
        rec.or_bit = r.or_bit;
        rec.and_bit = r.and_bit;
        rec.promoted = std::move(r.promoted);
        rec.banked = std::move(r.banked_words);
        break;
      }
    }
    rec.sense = response.sense;
    rec.confidence = response.confidence;
    result.responses.push_back(std::move(response));
    result.trace.push_back(std::move(rec));
  }
  result.metrics = Score(result.responses, corpus, policy);
  return result;
}

void WriteTrace(std::span<const TraceRecord> trace, std::ostream &out) {
  for (const TraceRecord &r : trace) out << FormatTraceLine(r) << '\n';
}

MeanMetrics Average(std::span<const Metrics> runs) {
  MeanMetrics mean;
  if (runs.empty()) return mean;
  for (const Metrics &m : runs) {
    mean.precision += m.precision();
    mean.recall += m.recall();
    mean.f_measure += m.f_measure();
  }
  const double n = static_cast<double>(runs.size());
  mean.precision /= n;
  mean.recall /= n;
  mean.f_measure /= n;
  return mean;
}

}  // namespace sense_arbiter
