#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "sense_arbiter/arbiter.h"
#include "sense_arbiter/errors.h"
#include "test_util.h"

using namespace sense_arbiter;
using sense_arbiter::testing::SeedState;
using sense_arbiter::testing::TempDir;

namespace {

DecisionOutcome Outcome(SenseCounters counters) {
  DecisionOutcome o;
  o.keyword = "bank";
  o.verdict = DecideByUniqueMax(counters);
  o.counters = std::move(counters);
  return o;
}

const DecisionOutcome kUndecided = Outcome({{"bank.finance", 0}, {"bank.riverside", 0}});

std::string ReadAll(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Serialize(const ArbiterState &state) {
  std::ostringstream out;
  state.bags.Write(out);
  out << "--\n";
  state.anticipated.Write(out);
  return out.str();
}

}  // namespace

TEST_CASE("formulate and verify") {
  const DecisionOutcome finance = Outcome({{"bank.finance", 2}, {"bank.riverside", 0}});
  const DecisionOutcome finance_bow = Outcome({{"bank.finance", 1}, {"bank.riverside", 0}});

  SUBCASE("agreement") {
    Formulation f = Formulate(finance, finance_bow);
    CHECK(f == Formulation{"bank.finance", true, DecisionSource::kBoth});
    CHECK(Verify(finance, finance_bow));
    CHECK(ConfidenceOf(f.or_bit, Verify(finance, finance_bow)) == Confidence::kDisambiguated);
  }
  SUBCASE("lesk only") {
    Formulation f = Formulate(finance, kUndecided);
    CHECK(f == Formulation{"bank.finance", true, DecisionSource::kLesk});
    CHECK_FALSE(Verify(finance, kUndecided));
    CHECK(ConfidenceOf(true, false) == Confidence::kProbable);
  }
  SUBCASE("bow only") {
    CHECK(Formulate(kUndecided, finance_bow) ==
          Formulation{"bank.finance", true, DecisionSource::kBow});
  }
  SUBCASE("neither") {
    Formulation f = Formulate(kUndecided, kUndecided);
    CHECK_FALSE(f.or_bit);
    CHECK_FALSE(f.sense.has_value());
    CHECK(ConfidenceOf(false, false) == Confidence::kUndecided);
  }
  SUBCASE("disagreement goes to the larger margin") {
    const DecisionOutcome lesk = Outcome({{"bank.finance", 0}, {"bank.riverside", 3}});
    const DecisionOutcome bow = Outcome({{"bank.finance", 1}, {"bank.riverside", 0}});
    CHECK(Formulate(lesk, bow) == Formulation{"bank.riverside", true, DecisionSource::kLesk});
    CHECK_FALSE(Verify(lesk, bow));
    const DecisionOutcome strong_bow = Outcome({{"bank.finance", 5}, {"bank.riverside", 0}});
    CHECK(Formulate(lesk, strong_bow) ==
          Formulation{"bank.finance", true, DecisionSource::kBow});
  }
  SUBCASE("equal margins go to lesk") {
    const DecisionOutcome lesk = Outcome({{"bank.finance", 0}, {"bank.riverside", 2}});
    const DecisionOutcome bow = Outcome({{"bank.finance", 2}, {"bank.riverside", 0}});
    CHECK(Formulate(lesk, bow).sense == "bank.riverside");
  }
}

TEST_CASE("formulate properties") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> value(0, 3);
  for (int iter = 0; iter < 2000; ++iter) {
    const DecisionOutcome lesk = Outcome({{"bank.finance", value(rng)}, {"bank.riverside", value(rng)}});
    const DecisionOutcome bow = Outcome({{"bank.finance", value(rng)}, {"bank.riverside", value(rng)}});
    const Formulation f = Formulate(lesk, bow);
    const bool and_bit = Verify(lesk, bow);
    if (and_bit) CHECK(f.or_bit);
    CHECK(f.or_bit == (lesk.decided() || bow.decided()));
    CHECK(f.sense.has_value() == f.or_bit);
    if (f.sense) CHECK((f.sense == lesk.sense() || f.sense == bow.sense()));
  }
}

TEST_CASE("enrich") {
  ArbiterState state = SeedState();
  const ArbiterState seed = state;

  SUBCASE("verified decision banks the words") {
    EnrichResult r = Enrich(state, "bank", "bank.finance", {"sbi", "transfer"}, true);
    CHECK(r.banked == WordSet{"transfer"});
    CHECK(state.bags.Contains("bank", "bank.finance", "transfer"));
    CHECK(state.anticipated.empty());
  }
  SUBCASE("unverified decision counts until the threshold is passed") {
    for (int arrival = 1; arrival <= 3; ++arrival) {
      EnrichResult r = Enrich(state, "bank", "bank.finance", {"transfer"}, false);
      CHECK(r.promoted.empty());
      CHECK(state.anticipated.Count("bank", "bank.finance", "transfer") == arrival);
      CHECK_FALSE(state.bags.Contains("bank", "bank.finance", "transfer"));
    }
    EnrichResult r = Enrich(state, "bank", "bank.finance", {"transfer"}, false);
    CHECK(r.promoted == std::vector<Promotion>{{"bank", "bank.finance", "transfer"}});
    CHECK(state.bags.Contains("bank", "bank.finance", "transfer"));
    CHECK(state.anticipated.Count("bank", "bank.finance", "transfer") == 0);
  }
  SUBCASE("banking clears a pending count") {
    Enrich(state, "bank", "bank.finance", {"transfer"}, false);
    Enrich(state, "bank", "bank.finance", {"transfer"}, true);
    CHECK(state.anticipated.empty());
    CHECK(state.bags.Contains("bank", "bank.finance", "transfer"));
  }
  SUBCASE("words owned by another sense are not counted") {
    EnrichResult r = Enrich(state, "bank", "bank.finance", {"river"}, false);
    CHECK(r.conflicts == WordSet{"river"});
    CHECK(state.anticipated.empty());
  }
  SUBCASE("no sense leaves the state unchanged") {
    EnrichResult r = Enrich(state, "bank", std::nullopt, {"transfer"}, false);
    CHECK(r.banked.empty());
    CHECK(r.anticipated.empty());
    CHECK(state == seed);
  }
  SUBCASE("unknown sense") {
    CHECK_THROWS_AS(Enrich(state, "bank", "plant.flora", {"x"}, true), UnknownSense);
  }
  SUBCASE("threshold one promotes on the second arrival") {
    state.config.threshold = 1;
    CHECK(Enrich(state, "bank", "bank.rely", {"trust"}, false).promoted.empty());
    CHECK(Enrich(state, "bank", "bank.rely", {"trust"}, false).promoted.size() == 1);
  }
}

TEST_CASE("disambiguate_instance") {
  ArbiterState state = SeedState();
  SUBCASE("nothing overlaps") {
    const ArbiterState before = state;
    InstanceResult r = DisambiguateInstance(state, "He goes to bank.", "bank");
    CHECK(r.confidence == Confidence::kUndecided);
    CHECK_FALSE(r.sense.has_value());
    CHECK_FALSE(r.or_bit);
    CHECK(r.lesk_outcome.verdict == Verdict{Undecided{UndecidedReason::kAllZero}});
    CHECK(state == before);
  }
  SUBCASE("both scorers agree") {
    InstanceResult r =
        DisambiguateInstance(state, "He deposited Rs. 10,000 in SBI bank account.", "bank", 4);
    CHECK(r.sentence_index == 4);
    CHECK(r.sense == "bank.finance");
    CHECK(r.confidence == Confidence::kDisambiguated);
    CHECK(r.bow_outcome.decision.counters.at("bank.finance") == 3);
    CHECK(r.lesk_outcome.counters.at("bank.finance") == 1);
    CHECK(r.banked_words == WordSet{"rs"});
    CHECK(state.bags.Contains("bank", "bank.finance", "rs"));
  }
  SUBCASE("keyword matching ignores case") {
    InstanceResult r = DisambiguateInstance(state, "BANK of the river.", "Bank");
    CHECK(r.keyword == "bank");
    CHECK(r.sense == "bank.riverside");
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(DisambiguateInstance(state, "He goes home.", "bank"), KeywordAbsent);
    CHECK_THROWS_AS(DisambiguateInstance(state, "The zzzz is here.", "zzzz"), NoSenses);
  }
  SUBCASE("probable decisions feed the anticipated store") {
    // Lesk finds "money" in the finance gloss; no bag word is present.
    InstanceResult r = DisambiguateInstance(state, "Money is kept in a bank vault.", "bank");
    CHECK(r.confidence == Confidence::kProbable);
    CHECK(r.source == DecisionSource::kLesk);
    CHECK(r.anticipated_words == WordSet{"kept", "money", "vault"});
    CHECK(state.anticipated.Count("bank", "bank.finance", "vault") == 1);
  }
}

TEST_CASE("state persistence") {
  TempDir dir("arbiter");
  ArbiterState state = SeedState();
  Enrich(state, "bank", "bank.finance", {"transfer"}, false);
  state.config.threshold = 4;
  state.config.window = 5;

  SUBCASE("round trip") {
    SaveState(state, dir.str());
    CHECK(LoadState(dir.str()) == state);
  }
  SUBCASE("saving is byte-deterministic") {
    SaveState(state, dir.str());
    const std::string first = ReadAll(dir.file("bags.tsv")) + ReadAll(dir.file("anticipated.tsv"));
    SaveState(LoadState(dir.str()), dir.str());
    CHECK(ReadAll(dir.file("bags.tsv")) + ReadAll(dir.file("anticipated.tsv")) == first);
    CHECK(ReadAll(dir.file("config.tsv")) == "threshold\t4\nwindow\t5\n");
  }
  SUBCASE("missing directory") {
    CHECK_THROWS_AS(LoadState(dir.file("absent")), MissingFile);
  }
  SUBCASE("zero count") {
    std::istringstream in("bank\tbank.finance\tvault\t0\n");
    CHECK_THROWS_AS(AnticipatedStore::Parse(in, "a.tsv"), FormatError);
  }
  SUBCASE("duplicate anticipated entry") {
    std::istringstream in("bank\tbank.finance\tvault\t1\nbank\tbank.finance\tvault\t2\n");
    CHECK_THROWS_AS(AnticipatedStore::Parse(in, "a.tsv"), FormatError);
  }
  SUBCASE("bag disjointness error names the line") {
    SaveState(state, dir.str());
    {
      std::ofstream out(dir.file("bags.tsv"), std::ios::app);
      out << "bank\tbank.riverside\tloan\n";
    }
    try {
      LoadState(dir.str());
      FAIL("expected FormatError");
    } catch (const FormatError &e) {
      CHECK(e.line() == static_cast<int>(state.bags.word_count()) + 1);
    }
  }
  SUBCASE("config") {
    std::istringstream good("threshold\t2\nwindow\t7\nconflict_rule\tmargin-then-lesk\n");
    ArbiterConfig c = ParseConfig(good, "c");
    CHECK(c.threshold == 2);
    CHECK(c.window == 7);
    std::istringstream even("window\t4\n");
    CHECK_THROWS_AS(ParseConfig(even, "c"), FormatError);
    std::istringstream unknown("colour\tblue\n");
    CHECK_THROWS_AS(ParseConfig(unknown, "c"), FormatError);
    std::istringstream zero("threshold\t0\n");
    CHECK_THROWS_AS(ParseConfig(zero, "c"), FormatError);
  }
}

TEST_CASE("pipeline properties") {
  std::mt19937 rng(777);
  const std::vector<std::string> vocab = {
      "bank", "money", "river", "sbi",   "loan",  "water", "edge", "rely",
      "trust", "vault", "mud",  "shore", "funds", "cash",  "land", "account"};
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(1, 8);

  std::vector<std::string> sentences;
  for (int i = 0; i < 300; ++i) {
    std::string s = "bank";
    for (int k = len(rng); k > 0; --k) s += " " + vocab[pick(rng)];
    sentences.push_back(s + ".");
  }

  ArbiterState a = SeedState();
  ArbiterState b = SeedState();
  std::size_t bag_words = a.bags.word_count();
  for (const std::string &s : sentences) {
    const InstanceResult ra = DisambiguateInstance(a, s, "bank");
    const InstanceResult rb = DisambiguateInstance(b, s, "bank");
    CHECK(ra.sense == rb.sense);
    CHECK(ra.confidence == rb.confidence);
    if (ra.and_bit) CHECK(ra.or_bit);
    CHECK(a.bags.word_count() >= bag_words);
    bag_words = a.bags.word_count();
    for (const auto &[key, count] : a.anticipated.entries()) {
      CHECK(count >= 1);
      CHECK(count <= a.config.threshold);
    }
  }
  CHECK(Serialize(a) == Serialize(b));
  CHECK_NOTHROW(a.Validate());
}
