#include "sense_arbiter/lexicon.h"

#include <fstream>

#include "sense_arbiter/errors.h"
#include "tsv.h"

namespace sense_arbiter {

namespace {

const std::vector<Sense> &EmptySenses() {
  static const std::vector<Sense> empty;
  return empty;
}

bool IsBlank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

// Returns an empty string when the sense is acceptable, otherwise the reason.
std::string CheckSense(const Sense &sense) {
  if (!tsv::IsNormalizedWord(sense.lemma)) {
    return "lemma must be a lowercase word without whitespace";
  }
  if (sense.sense_id.empty() || tsv::HasWhitespace(sense.sense_id)) {
    return "sense id must be nonempty and contain no whitespace";
  }
  if (sense.label.empty()) return "empty label";
  if (IsBlank(sense.gloss)) return "empty gloss";
  return {};
}

}  // namespace

Lexicon Lexicon::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path);
  return Parse(in, path);
}

Lexicon Lexicon::Parse(std::istream &in, const std::string &source) {
  Lexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    tsv::StripCarriageReturn(line);
    if (tsv::IsSkippable(line)) continue;

    std::vector<std::string> fields = tsv::SplitTabs(line);
    if (fields.size() != 4 && fields.size() != 5) {
      throw MalformedLexicon(source, line_no,
                             "expected 4 or 5 tab-separated fields, got " +
                                 std::to_string(fields.size()));
    }
    Sense sense{fields[0], fields[1], fields[2], fields[3],
                fields.size() == 5 ? fields[4] : std::string()};
    if (std::string reason = CheckSense(sense); !reason.empty()) {
      throw MalformedLexicon(source, line_no, reason);
    }
    if (lexicon.FindSense(sense.sense_id) != nullptr) {
      throw MalformedLexicon(source, line_no,
                             "duplicate sense id '" + sense.sense_id + "'");
    }
    lexicon.AddSense(std::move(sense));
  }
  if (lexicon.empty()) throw MalformedLexicon(source, line_no, "no entries");
  return lexicon;
}

void Lexicon::Save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write lexicon: " + path);
  Write(out);
  if (!out) throw Error("write failed: " + path);
}

void Lexicon::Write(std::ostream &out) const {
  for (const auto &[lemma, senses] : entries_) {
    for (const Sense &s : senses) {
      out << s.lemma << '\t' << s.sense_id << '\t' << s.label << '\t'
          << s.gloss;
      if (!s.examples.empty()) out << '\t' << s.examples;
      out << '\n';
    }
  }
}

void Lexicon::AddSense(Sense sense) {
  if (std::string reason = CheckSense(sense); !reason.empty()) {
    throw Error("invalid sense '" + sense.sense_id + "': " + reason);
  }
  if (sense_index_.count(sense.sense_id) != 0) {
    throw Error("duplicate sense id '" + sense.sense_id + "'");
  }
  sense_index_.emplace(sense.sense_id, sense.lemma);
  auto &senses = entries_[sense.lemma];
  senses.push_back(std::move(sense));
}

const std::vector<Sense> &Lexicon::SensesOf(std::string_view lemma) const {
  auto it = entries_.find(lemma);
  return it == entries_.end() ? EmptySenses() : it->second;
}

const Sense *Lexicon::FindSense(std::string_view sense_id) const {
  auto it = sense_index_.find(sense_id);
  if (it == sense_index_.end()) return nullptr;
  for (const Sense &s : SensesOf(it->second)) {
    if (s.sense_id == sense_id) return &s;
  }
  return nullptr;
}

bool Lexicon::HasSense(std::string_view lemma,
                       std::string_view sense_id) const {
  const Sense *sense = FindSense(sense_id);
  return sense != nullptr && sense->lemma == lemma;
}

std::vector<std::string> Lexicon::Lemmas() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto &entry : entries_) out.push_back(entry.first);
  return out;
}

WordSet GlossTokenSet(const Sense &sense, const StopWordList &stops,
                      const GlossOptions &options) {
  WordSet words = ToWordSet(ContentTokens(sense.gloss, stops, options.tokenize));
  if (options.include_examples && !sense.examples.empty()) {
    WordSet extra =
        ToWordSet(ContentTokens(sense.examples, stops, options.tokenize));
    words.insert(extra.begin(), extra.end());
  }
  return words;
}

}  // namespace sense_arbiter
