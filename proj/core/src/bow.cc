#include "sense_arbiter/bow.h"

#include <fstream>

#include "sense_arbiter/errors.h"
#include "tsv.h"

namespace sense_arbiter {

namespace {

const WordSet &EmptyWords() {
  static const WordSet empty;
  return empty;
}

}  // namespace

BagSet BagSet::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path);
  return Parse(in, path);
}

BagSet BagSet::Parse(std::istream &in, const std::string &source) {
  BagSet bags;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    tsv::StripCarriageReturn(line);
    if (tsv::IsSkippable(line)) continue;

    std::vector<std::string> fields = tsv::SplitTabs(line);
    if (fields.size() != 3) {
      throw FormatError(source, line_no,
                        "expected 3 tab-separated fields, got " +
                            std::to_string(fields.size()));
    }
    const std::string &lemma = fields[0];
    const std::string &sense_id = fields[1];
    const std::string &word = fields[2];
    if (!tsv::IsNormalizedWord(lemma) || !tsv::IsNormalizedWord(word)) {
      throw FormatError(source, line_no,
                        "lemma and word must be lowercase without whitespace");
    }
    if (sense_id.empty() || tsv::HasWhitespace(sense_id)) {
      throw FormatError(source, line_no, "malformed sense id");
    }
    if (word == lemma) {
      throw FormatError(source, line_no,
                        "'" + lemma + "' cannot be a cue word for itself");
    }
    if (auto owner = bags.Insert(lemma, sense_id, word)) {
      throw FormatError(source, line_no,
                        "'" + word + "' already belongs to " + *owner +
                            "; bags of one lemma must be disjoint");
    }
  }
  return bags;
}

void BagSet::Save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write bags: " + path);
  Write(out);
  if (!out) throw Error("write failed: " + path);
}

void BagSet::Write(std::ostream &out) const {
  for (const auto &[key, words] : bags_) {
    for (const std::string &w : words) {
      out << key.first << '\t' << key.second << '\t' << w << '\n';
    }
  }
}

void BagSet::Validate(const Lexicon &lexicon, const StopWordList &stops) const {
  for (const auto &[key, words] : bags_) {
    if (!lexicon.HasSense(key.first, key.second)) {
      throw UnknownSense(key.first, key.second);
    }
    for (const std::string &w : words) {
      if (stops.Contains(w)) {
        throw Error("bag " + key.second + " contains stop word '" + w + "'");
      }
    }
  }
}

AddReport BagSet::Add(std::string_view lemma, std::string_view sense_id,
                      const WordSet &words, const Lexicon &lexicon,
                      const StopWordList &stops) {
  if (!lexicon.HasSense(lemma, sense_id)) {
    throw UnknownSense(std::string(lemma), std::string(sense_id));
  }
  const std::string lemma_str(lemma);
  const std::string sense_str(sense_id);
  AddReport report;
  for (const std::string &w : words) {
    if (w.empty() || w == lemma || stops.Contains(w)) {
      report.ignored.insert(w);
      continue;
    }
    auto owner = Insert(lemma_str, sense_str, w);
    if (!owner) {
      report.added.insert(w);
    } else if (*owner == sense_id) {
      report.ignored.insert(w);
    } else {
      report.conflicts.insert(w);
    }
  }
  return report;
}

std::optional<std::string> BagSet::Insert(const std::string &lemma,
                                          const std::string &sense_id,
                                          const std::string &word) {
  auto [it, inserted] = owner_.try_emplace(Key{lemma, word}, sense_id);
  if (!inserted) return it->second;
  bags_[Key{lemma, sense_id}].insert(word);
  return std::nullopt;
}

const WordSet &BagSet::Words(std::string_view lemma,
                             std::string_view sense_id) const {
  auto it = bags_.find(Key{std::string(lemma), std::string(sense_id)});
  return it == bags_.end() ? EmptyWords() : it->second;
}

bool BagSet::Contains(std::string_view lemma, std::string_view sense_id,
                      std::string_view word) const {
  auto owner = SenseOfWord(lemma, word);
  return owner && *owner == sense_id;
}

std::optional<std::string> BagSet::SenseOfWord(std::string_view lemma,
                                               std::string_view word) const {
  auto it = owner_.find(Key{std::string(lemma), std::string(word)});
  if (it == owner_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> BagSet::SensesWithBags(std::string_view lemma) const {
  std::vector<std::string> senses;
  for (auto it = bags_.lower_bound(Key{std::string(lemma), std::string()});
       it != bags_.end() && it->first.first == lemma; ++it) {
    senses.push_back(it->first.second);
  }
  return senses;
}

std::size_t BagSet::word_count() const { return owner_.size(); }

BowOutcome BowClassify(const TokenList &context, std::string_view keyword,
                       const BagSet &bags, const Lexicon &lexicon) {
  BowOutcome out;
  out.decision.keyword = std::string(keyword);
  for (const Sense &s : lexicon.SensesOf(keyword)) {
    out.decision.counters[s.sense_id] = 0;
  }
  for (const std::string &sense : bags.SensesWithBags(keyword)) {
    out.decision.counters.try_emplace(sense, 0);
  }
  if (out.decision.counters.empty()) throw NoSenses(std::string(keyword));

  for (const std::string &word : ToWordSet(context)) {
    if (word == keyword) continue;
    if (auto sense = bags.SenseOfWord(keyword, word)) {
      ++out.decision.counters[*sense];
      out.matched.insert(word);
    } else {
      out.unmatched.insert(word);
    }
  }
  out.decision.verdict = DecideByUniqueMax(out.decision.counters);
  return out;
}

}  // namespace sense_arbiter
