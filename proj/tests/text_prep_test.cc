#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "sense_arbiter/errors.h"
#include "sense_arbiter/text_prep.h"
#include "test_util.h"

using namespace sense_arbiter;
using sense_arbiter::testing::FixturePath;
using sense_arbiter::testing::MakeTokens;
using sense_arbiter::testing::Texts;

namespace {

using Words = std::vector<std::string>;

std::string ReadAll(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string StripWhitespace(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// Random text over a small alphabet that exercises terminators, digits,
// punctuation and case changes.
std::string RandomText(std::mt19937 &rng, int length) {
  static const std::string alphabet =
      "abcXYZ01 .!?,;'-\"()\t\nAbT  ..";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  for (int i = 0; i < length; ++i) s.push_back(alphabet[pick(rng)]);
  return s;
}

}  // namespace

TEST_CASE("split_sentences") {
  SUBCASE("two plain declaratives") {
    CHECK(SplitSentences("He goes to bank. Ram is a good boy.") ==
          Words{"He goes to bank.", "Ram is a good boy."});
  }
  SUBCASE("empty input") { CHECK(SplitSentences("").empty()); }
  SUBCASE("abbreviation followed by a number does not split") {
    auto s = SplitSentences(
        "He deposited Rs. 10,000 in SBI bank account. Are you near the bank "
        "of river?");
    CHECK(s == Words{"He deposited Rs. 10,000 in SBI bank account.",
                     "Are you near the bank of river?"});
  }
  SUBCASE("lowercase continuation does not split") {
    CHECK(SplitSentences("Dr. smith is here. Yes!") ==
          Words{"Dr. smith is here.", "Yes!"});
  }
  SUBCASE("terminator runs stay with their sentence") {
    CHECK(SplitSentences("Really?! Yes... Fine") ==
          Words{"Really?!", "Yes...", "Fine"});
  }
  SUBCASE("paragraph breaks count as whitespace") {
    CHECK(SplitSentences("One plant.\n\nTwo plants.\n") ==
          Words{"One plant.", "Two plants."});
  }
  SUBCASE("whitespace only") { CHECK(SplitSentences(" \n\t ").empty()); }
  SUBCASE("sample text 1 has ten sentences") {
    auto s = SplitSentences(ReadAll(FixturePath("test1_text.txt")));
    REQUIRE(s.size() == 10);
    CHECK(s[4] == "He deposited Rs. 10,000 in SBI bank account.");
    CHECK(s[9] ==
          "The police made a plan with a motive to catch thieves with evidence.");
  }
}

TEST_CASE("tokenize") {
  SUBCASE("lowercase and strip the period") {
    CHECK(Texts(Tokenize("This is SBI bank.")) == Words{"this", "is", "sbi", "bank"});
  }
  SUBCASE("numbers vanish") {
    CHECK(Texts(Tokenize("He deposited Rs. 10,000 in SBI bank account.")) ==
          Words{"he", "deposited", "rs", "in", "sbi", "bank", "account"});
  }
  SUBCASE("whitespace only") { CHECK(Tokenize("   ").empty()); }
  SUBCASE("internal apostrophes and hyphens are kept") {
    CHECK(Texts(Tokenize("Don't re-enter 'quoted' 90% -x-")) ==
          Words{"don't", "re-enter", "quoted", "x"});
  }
  SUBCASE("positions index the whitespace chunks") {
    TokenList t = Tokenize("Rs. 10,000 in bank");
    REQUIRE(t.size() == 3);
    CHECK(t[0].position == 0);
    CHECK(t[1].position == 2);
    CHECK(t[2].position == 3);
  }
  SUBCASE("suffix stripping is opt-in") {
    CHECK(Texts(Tokenize("planted plants planting")) ==
          Words{"planted", "plants", "planting"});
    TokenizeOptions opts;
    opts.strip_suffixes = true;
    CHECK(Texts(Tokenize("planted plants planting glass", opts)) ==
          Words{"plant", "plant", "plant", "glass"});
  }
}

TEST_CASE("remove_stop_words") {
  const StopWordList stops = StopWordList::Default();
  SUBCASE("worked example sentence") {
    TokenList t = Tokenize("Ram and Sita everyday go to bank for withdrawal of money.");
    CHECK(Texts(RemoveStopWords(t, stops)) ==
          Words{"ram", "sita", "everyday", "go", "bank", "withdrawal", "money"});
  }
  SUBCASE("empty") { CHECK(RemoveStopWords({}, stops).empty()); }
  SUBCASE("all stop words") {
    CHECK(RemoveStopWords(MakeTokens({"the", "a", "an"}), stops).empty());
  }
}

TEST_CASE("stop word list") {
  const StopWordList stops = StopWordList::Default();
  for (const char *w : {"a", "an", "the", "to", "for", "of", "in", "on", "and", "is",
                        "are", "was", "he", "she", "it", "this", "we", "you", "must",
                        "can"}) {
    CHECK(stops.Contains(w));
  }
  SUBCASE("bundled file matches the built-in default") {
    CHECK(StopWordList::Load(sense_arbiter::testing::DataPath("stopwords.txt")) ==
          stops);
  }
  SUBCASE("file parsing skips comments and blanks and normalizes case") {
    std::istringstream in("# comment\n\n  The \nOF\r\n");
    StopWordList parsed = StopWordList::Parse(in);
    CHECK(parsed.size() == 2);
    CHECK(parsed.Contains("the"));
    CHECK(parsed.Contains("of"));
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(StopWordList::Load("/nonexistent/stops.txt"), MissingFile);
  }
}

TEST_CASE("text_prep properties") {
  std::mt19937 rng(20240611);
  const StopWordList stops = StopWordList::Default();
  std::uniform_int_distribution<int> len(0, 80);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::string text = RandomText(rng, len(rng));

    const TokenList tokens = Tokenize(text);
    CHECK(Tokenize(text) == tokens);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const std::string &t = tokens[i].text;
      REQUIRE(!t.empty());
      bool has_alpha = false;
      for (char c : t) {
        const bool allowed = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                             c == '\'' || c == '-';
        REQUIRE(allowed);
        has_alpha = has_alpha || (c >= 'a' && c <= 'z');
      }
      CHECK(has_alpha);
      if (i > 0) CHECK(tokens[i - 1].position < tokens[i].position);
    }

    const TokenList once = RemoveStopWords(tokens, stops);
    CHECK(RemoveStopWords(once, stops) == once);
    for (const Token &t : once) CHECK_FALSE(stops.Contains(t.text));

    const auto sentences = SplitSentences(text);
    std::string joined;
    for (const std::string &s : sentences) {
      CHECK_FALSE(s.empty());
      joined += s;
    }
    CHECK(StripWhitespace(joined) == StripWhitespace(text));
  }
}
