#include "sense_arbiter/arbiter.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sense_arbiter/errors.h"
#include "tsv.h"

namespace sense_arbiter {

namespace fs = std::filesystem;

namespace {

constexpr const char *kBagsFile = "bags.tsv";
constexpr const char *kAnticipatedFile = "anticipated.tsv";
constexpr const char *kConfigFile = "config.tsv";
constexpr const char *kLexiconFile = "lexicon.tsv";
constexpr const char *kStopWordsFile = "stopwords.txt";

std::ifstream OpenInput(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path.string());
  return in;
}

void WriteFile(const fs::path &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace

AnticipatedStore AnticipatedStore::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path);
  return Parse(in, path);
}

AnticipatedStore AnticipatedStore::Parse(std::istream &in,
                                         const std::string &source) {
  AnticipatedStore store;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    tsv::StripCarriageReturn(line);
    if (tsv::IsSkippable(line)) continue;
    std::vector<std::string> f = tsv::SplitTabs(line);
    if (f.size() != 4) {
      throw FormatError(source, line_no, "expected 4 tab-separated fields");
    }
    if (!tsv::IsNormalizedWord(f[0]) || !tsv::IsNormalizedWord(f[2]) ||
        f[1].empty() || tsv::HasWhitespace(f[1])) {
      throw FormatError(source, line_no, "malformed lemma, sense id or word");
    }
    const long count = tsv::ParsePositive(f[3]);
    if (count < 1) {
      throw FormatError(source, line_no, "count must be a positive integer");
    }
    Key key{f[0], f[1], f[2]};
    if (store.counts_.count(key) != 0) {
      throw FormatError(source, line_no, "duplicate entry");
    }
    store.counts_.emplace(std::move(key), static_cast<int>(count));
  }
  return store;
}

void AnticipatedStore::Save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  Write(out);
}

void AnticipatedStore::Write(std::ostream &out) const {
  for (const auto &[key, count] : counts_) {
    out << std::get<0>(key) << '\t' << std::get<1>(key) << '\t'
        << std::get<2>(key) << '\t' << count << '\n';
  }
}

int AnticipatedStore::Increment(const std::string &lemma,
                                const std::string &sense_id,
                                const std::string &word) {
  return ++counts_[Key{lemma, sense_id, word}];
}

int AnticipatedStore::Count(const std::string &lemma,
                            const std::string &sense_id,
                            const std::string &word) const {
  auto it = counts_.find(Key{lemma, sense_id, word});
  return it == counts_.end() ? 0 : it->second;
}

void AnticipatedStore::Set(const Key &key, int count) {
  if (count < 1) {
    counts_.erase(key);
  } else {
    counts_[key] = count;
  }
}

void ArbiterState::Validate() const {
  if (!lexicon) throw Error("state has no lexicon");
  if (config.threshold < 1) throw Error("threshold must be >= 1");
  if (config.window < 1 || config.window % 2 == 0) {
    throw Error("window must be a positive odd integer");
  }
  bags.Validate(*lexicon, stops);
  for (const auto &[key, count] : anticipated.entries()) {
    const auto &[lemma, sense_id, word] = key;
    if (!lexicon->HasSense(lemma, sense_id)) throw UnknownSense(lemma, sense_id);
    if (bags.Contains(lemma, sense_id, word)) {
      throw Error("anticipated word '" + word + "' is already in bag " + sense_id);
    }
  }
}

bool ArbiterState::operator==(const ArbiterState &other) const {
  const bool same_lexicon =
      lexicon == other.lexicon ||
      (lexicon && other.lexicon && *lexicon == *other.lexicon);
  return same_lexicon && stops == other.stops && bags == other.bags &&
         anticipated == other.anticipated && config == other.config;
}

std::string_view ToString(Confidence confidence) {
  switch (confidence) {
    case Confidence::kDisambiguated:
      return "disambiguated";
    case Confidence::kProbable:
      return "probable";
    case Confidence::kUndecided:
      return "undecided";
  }
  return "unknown";
}

std::string_view ToString(DecisionSource source) {
  switch (source) {
    case DecisionSource::kNone:
      return "none";
    case DecisionSource::kLesk:
      return "lesk";
    case DecisionSource::kBow:
      return "bow";
    case DecisionSource::kBoth:
      return "both";
  }
  return "unknown";
}

Formulation Formulate(const DecisionOutcome &lesk, const DecisionOutcome &bow,
                      ConflictRule rule) {
  const auto lesk_sense = lesk.sense();
  const auto bow_sense = bow.sense();
  if (!lesk_sense && !bow_sense) return {};
  if (lesk_sense && !bow_sense) return {lesk_sense, true, DecisionSource::kLesk};
  if (bow_sense && !lesk_sense) return {bow_sense, true, DecisionSource::kBow};
  if (*lesk_sense == *bow_sense) return {lesk_sense, true, DecisionSource::kBoth};

  switch (rule) {
    case ConflictRule::kMarginThenLesk:
      if (bow.margin() > lesk.margin()) {
        return {bow_sense, true, DecisionSource::kBow};
      }
      return {lesk_sense, true, DecisionSource::kLesk};
  }
  return {lesk_sense, true, DecisionSource::kLesk};
}

bool Verify(const DecisionOutcome &lesk, const DecisionOutcome &bow) {
  const auto lesk_sense = lesk.sense();
  const auto bow_sense = bow.sense();
  return lesk_sense && bow_sense && *lesk_sense == *bow_sense;
}

Confidence ConfidenceOf(bool or_bit, bool and_bit) {
  if (and_bit) return Confidence::kDisambiguated;
  if (or_bit) return Confidence::kProbable;
  return Confidence::kUndecided;
}

EnrichResult Enrich(ArbiterState &state, std::string_view keyword,
                    const std::optional<std::string> &sense,
                    const WordSet &unmatched, bool and_bit) {
  EnrichResult result;
  if (!sense) return result;
  const Lexicon &lexicon = *state.lexicon;
  const std::string lemma(keyword);
  if (!lexicon.HasSense(lemma, *sense)) throw UnknownSense(lemma, *sense);

  if (and_bit) {
    AddReport report = state.bags.Add(lemma, *sense, unmatched, lexicon, state.stops);
    for (const std::string &w : report.added) {
      state.anticipated.Erase({lemma, *sense, w});
    }
    result.banked = std::move(report.added);
    result.conflicts = std::move(report.conflicts);
  } else {
    for (const std::string &w : unmatched) {
      if (w.empty() || w == lemma || state.stops.Contains(w)) continue;
      if (auto owner = state.bags.SenseOfWord(lemma, w)) {
        if (*owner != *sense) result.conflicts.insert(w);
        continue;
      }
      state.anticipated.Increment(lemma, *sense, w);
      result.anticipated.insert(w);
    }
  }

  std::vector<AnticipatedStore::Key> due;
  for (const auto &[key, count] : state.anticipated.entries()) {
    if (count > state.config.threshold) due.push_back(key);
  }
  for (const auto &key : due) {
    state.anticipated.Erase(key);
    const auto &[entry_lemma, entry_sense, word] = key;
    AddReport report = state.bags.Add(entry_lemma, entry_sense, WordSet{word},
                                      lexicon, state.stops);
    if (!report.added.empty()) {
      result.promoted.push_back(Promotion{entry_lemma, entry_sense, word});
    } else if (!report.conflicts.empty()) {
      result.conflicts.insert(word);
    }
  }
  return result;
}

bool ContainsKeyword(std::string_view sentence, std::string_view keyword,
                     const TokenizeOptions &options) {
  const std::string needle = NormalizeWord(keyword);
  for (const Token &t : Tokenize(sentence, options)) {
    if (t.text == needle) return true;
  }
  return false;
}

InstanceResult DisambiguateInstance(ArbiterState &state, std::string_view sentence,
                                    std::string_view keyword,
                                    std::size_t sentence_index) {
  const Lexicon &lexicon = *state.lexicon;
  const TokenizeOptions options{state.config.strip_suffixes};
  const std::string lemma = NormalizeWord(keyword);

  const TokenList tokens = Tokenize(sentence, options);
  bool present = false;
  for (const Token &t : tokens) present = present || t.text == lemma;
  if (!present) throw KeywordAbsent(lemma);
  if (lexicon.SensesOf(lemma).empty()) throw NoSenses(lemma);

  const TokenList context = RemoveStopWords(tokens, state.stops);
  const GlossOptions gloss_options{false, options};

  InstanceResult r;
  r.keyword = lemma;
  r.sentence_index = sentence_index;
  r.bow_outcome = BowClassify(context, lemma, state.bags, lexicon);
  r.lesk_outcome = ModifiedLesk(context, lemma, lexicon, state.stops, gloss_options);

  const Formulation f = Formulate(r.lesk_outcome, r.bow_outcome.decision,
                                  state.config.conflict_rule);
  r.or_bit = f.or_bit;
  r.and_bit = Verify(r.lesk_outcome, r.bow_outcome.decision);
  r.sense = f.sense;
  r.source = f.source;
  r.confidence = ConfidenceOf(r.or_bit, r.and_bit);

  if (r.or_bit) {
    EnrichResult e = Enrich(state, lemma, r.sense, r.bow_outcome.unmatched, r.and_bit);
    r.banked_words = std::move(e.banked);
    r.anticipated_words = std::move(e.anticipated);
    r.promoted = std::move(e.promoted);
    r.conflicts = std::move(e.conflicts);
  }
  return r;
}

ArbiterConfig ParseConfig(std::istream &in, const std::string &source) {
  ArbiterConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    tsv::StripCarriageReturn(line);
    if (tsv::IsSkippable(line)) continue;
    std::vector<std::string> f = tsv::SplitTabs(line);
    if (f.size() != 2) throw FormatError(source, line_no, "expected key <TAB> value");
    const std::string &key = f[0];
    const std::string &value = f[1];
    if (key == "threshold" || key == "window") {
      const long n = tsv::ParsePositive(value);
      if (n < 1) throw FormatError(source, line_no, key + " must be a positive integer");
      if (key == "window" && n % 2 == 0) {
        throw FormatError(source, line_no, "window must be odd");
      }
      (key == "threshold" ? config.threshold : config.window) = static_cast<int>(n);
    } else if (key == "conflict_rule") {
      if (value != "margin-then-lesk") {
        throw FormatError(source, line_no, "unsupported conflict rule '" + value + "'");
      }
    } else if (key == "strip_suffixes") {
      if (value != "true" && value != "false") {
        throw FormatError(source, line_no, "strip_suffixes must be true or false");
      }
      config.strip_suffixes = value == "true";
    } else {
      throw FormatError(source, line_no, "unknown key '" + key + "'");
    }
  }
  return config;
}

void WriteConfig(const ArbiterConfig &config, std::ostream &out) {
  out << "threshold\t" << config.threshold << '\n';
  out << "window\t" << config.window << '\n';
  if (config.strip_suffixes) out << "strip_suffixes\ttrue\n";
}

void SaveState(const ArbiterState &state, const std::string &dir) {
  state.Validate();
  const fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw Error("cannot create state directory " + dir + ": " + ec.message());

  std::ostringstream bags, anticipated, config, lexicon, stops;
  state.bags.Write(bags);
  state.anticipated.Write(anticipated);
  WriteConfig(state.config, config);
  state.lexicon->Write(lexicon);
  for (const std::string &w : state.stops.Sorted()) stops << w << '\n';

  WriteFile(root / kBagsFile, bags.str());
  WriteFile(root / kAnticipatedFile, anticipated.str());
  WriteFile(root / kConfigFile, config.str());
  WriteFile(root / kLexiconFile, lexicon.str());
  WriteFile(root / kStopWordsFile, stops.str());
}

ArbiterState LoadState(const std::string &dir) {
  const fs::path root(dir);
  if (!fs::is_directory(root)) throw MissingFile(dir);

  ArbiterState state;
  state.lexicon = std::make_shared<const Lexicon>(
      Lexicon::Load((root / kLexiconFile).string()));
  state.stops = StopWordList::Load((root / kStopWordsFile).string());
  {
    const fs::path path = root / kConfigFile;
    std::ifstream in = OpenInput(path);
    state.config = ParseConfig(in, path.string());
  }
  state.bags = BagSet::Load((root / kBagsFile).string());
  state.anticipated = AnticipatedStore::Load((root / kAnticipatedFile).string());
  state.Validate();
  return state;
}

}  // namespace sense_arbiter
