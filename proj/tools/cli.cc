#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "sense_arbiter/arbiter.h"
#include "sense_arbiter/errors.h"
#include "sense_arbiter/evalkit.h"

namespace sense_arbiter::cli {

namespace {

struct DisambiguateArgs {
  std::string state_dir;
  std::string keyword;
  std::string text;
  std::string file;
  bool learn = false;
  bool verbose = false;
};

struct EvalArgs {
  std::string state_dir;
  std::vector<std::string> gold;
  std::string mode = "all";
  std::string policy = "lenient";
  std::string trace;
};

struct StateArgs {
  std::string action;
  std::string state_dir;
  std::string bags;
  std::string lexicon;
  std::string stops;
  int threshold = 3;
  int window = 3;
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int Disambiguate(const DisambiguateArgs &a, std::ostream &out) {
  const std::string text = a.file.empty() ? a.text : ReadFile(a.file);
  ArbiterState state = LoadState(a.state_dir);
  const TokenizeOptions options{state.config.strip_suffixes};

  const std::vector<std::string> sentences = SplitSentences(text);
  std::size_t instances = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!ContainsKeyword(sentences[i], a.keyword, options)) continue;
    ++instances;
    InstanceResult r = DisambiguateInstance(state, sentences[i], a.keyword, i);
    const Sense *sense = r.sense ? state.lexicon->FindSense(*r.sense) : nullptr;
    out << i << '\t' << r.sense.value_or("-") << '\t'
        << (sense ? sense->label : std::string("-")) << '\t'
        << ToString(r.confidence);
    if (a.verbose) {
      out << "\tlesk=" << FormatVerdict(r.lesk_outcome.verdict) << '['
          << FormatCounters(r.lesk_outcome.counters) << ']'
          << "\tbow=" << FormatVerdict(r.bow_outcome.decision.verdict) << '['
          << FormatCounters(r.bow_outcome.decision.counters) << ']'
          << "\tor=" << r.or_bit << "\tand=" << r.and_bit;
    }
    out << '\n';
  }
  if (instances == 0) throw KeywordAbsent(NormalizeWord(a.keyword));
  if (a.learn) SaveState(state, a.state_dir);
  return kExitOk;
}

void PrintTable(const std::vector<ComparisonResult> &results, std::ostream &out) {
  out << "Algorithm\tPrecision\tRecall\tF-Measure\n";
  for (const ComparisonResult &r : results) {
    out << DisplayName(r.mode) << '\t' << FormatRatio(r.metrics.precision())
        << '\t' << FormatRatio(r.metrics.recall()) << '\t'
        << FormatRatio(r.metrics.f_measure()) << '\n';
  }
}

int Eval(const EvalArgs &a, std::ostream &out) {
  std::vector<Mode> modes;
  if (a.mode == "all") {
    modes = {Mode::kLeskOnly, Mode::kBowOnly, Mode::kCombined};
  } else {
    modes = {*ParseMode(a.mode)};
  }
  const ResponsePolicy policy = *ParseResponsePolicy(a.policy);

  const ArbiterState state = LoadState(a.state_dir);
  std::vector<GoldCorpus> corpora;
  for (const std::string &path : a.gold) {
    corpora.push_back(LoadGold(path, *state.lexicon));
  }

  std::ostringstream trace;
  std::vector<std::vector<Metrics>> per_mode(modes.size());
  for (std::size_t c = 0; c < corpora.size(); ++c) {
    std::vector<ComparisonResult> results;
    for (std::size_t m = 0; m < modes.size(); ++m) {
      results.push_back(RunComparison(corpora[c], state, modes[m], policy));
      per_mode[m].push_back(results.back().metrics);
      WriteTrace(results.back().trace, trace);
    }
    if (corpora.size() > 1) out << "# " << a.gold[c] << '\n';
    PrintTable(results, out);
  }

  if (corpora.size() > 1) {
    out << "# average over " << corpora.size() << " corpora\n";
    out << "Algorithm\tPrecision\tRecall\tF-Measure\n";
    for (std::size_t m = 0; m < modes.size(); ++m) {
      const MeanMetrics mean = Average(per_mode[m]);
      out << DisplayName(modes[m]) << '\t' << FormatRatio(mean.precision) << '\t'
          << FormatRatio(mean.recall) << '\t' << FormatRatio(mean.f_measure)
          << '\n';
    }
  }

  if (!a.trace.empty()) {
    std::ofstream f(a.trace, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write trace: " + a.trace);
    f << trace.str();
  }
  return kExitOk;
}

int StateInit(const StateArgs &a, std::ostream &out) {
  ArbiterState state;
  state.lexicon = std::make_shared<const Lexicon>(Lexicon::Load(a.lexicon));
  state.stops = a.stops.empty() ? StopWordList::Default() : StopWordList::Load(a.stops);
  if (!a.bags.empty()) state.bags = BagSet::Load(a.bags);
  state.config.threshold = a.threshold;
  state.config.window = a.window;
  state.Validate();
  SaveState(state, a.state_dir);
  out << "initialized " << a.state_dir << ": " << state.lexicon->sense_count()
      << " senses, " << state.bags.bag_count() << " bags, "
      << state.bags.word_count() << " cue words\n";
  return kExitOk;
}

int StateShow(const StateArgs &a, std::ostream &out) {
  const ArbiterState state = LoadState(a.state_dir);
  out << "threshold\t" << state.config.threshold << '\n';
  out << "window\t" << state.config.window << '\n';
  out << "# bags: lemma\tsense_id\twords\n";
  for (const auto &[key, words] : state.bags.bags()) {
    out << key.first << '\t' << key.second << '\t' << words.size() << '\n';
  }
  out << "# anticipated: lemma\tsense_id\tword\tcount\n";
  for (const auto &[key, count] : state.anticipated.entries()) {
    out << std::get<0>(key) << '\t' << std::get<1>(key) << '\t'
        << std::get<2>(key) << '\t' << count << '\n';
  }
  return kExitOk;
}

int StatePromoteReport(const StateArgs &a, std::ostream &out) {
  const ArbiterState state = LoadState(a.state_dir);
  const int threshold = state.config.threshold;
  out << "# lemma\tsense_id\tword\tcount\tarrivals_to_promotion\n";
  for (const auto &[key, count] : state.anticipated.entries()) {
    if (count < threshold - 1) continue;
    out << std::get<0>(key) << '\t' << std::get<1>(key) << '\t'
        << std::get<2>(key) << '\t' << count << '\t'
        << std::max(1, threshold + 1 - count) << '\n';
  }
  return kExitOk;
}

CLI::Validator OddPositive() {
  return CLI::Validator(
      [](std::string &value) -> std::string {
        try {
          const int n = std::stoi(value);
          if (n > 0 && n % 2 == 1) return {};
        } catch (const std::exception &) {
        }
        return "window must be a positive odd integer";
      },
      "ODD");
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Word sense disambiguation combining gloss overlap and "
               "self-enriching sense bags"};
  app.name("sense-arbiter");
  app.require_subcommand(1);

  DisambiguateArgs dis;
  auto *dis_cmd = app.add_subcommand("disambiguate", "Disambiguate a keyword in text");
  dis_cmd->add_option("--state", dis.state_dir, "State directory")->required();
  dis_cmd->add_option("--keyword", dis.keyword, "Target word")->required();
  auto *text_opt = dis_cmd->add_option("--text", dis.text, "Input text");
  auto *file_opt = dis_cmd->add_option("--file", dis.file, "Input text file");
  text_opt->excludes(file_opt);
  dis_cmd->add_flag("--learn", dis.learn, "Persist the enriched state");
  dis_cmd->add_flag("--verbose", dis.verbose, "Print scorer counters");

  EvalArgs ev;
  auto *eval_cmd = app.add_subcommand("eval", "Score approaches against a gold corpus");
  eval_cmd->add_option("--state", ev.state_dir, "State directory")->required();
  eval_cmd->add_option("--gold", ev.gold, "Gold corpus file (repeatable)")->required();
  eval_cmd->add_option("--mode", ev.mode, "lesk, bow, combined or all")
      ->check(CLI::IsMember({"lesk", "bow", "combined", "all"}));
  eval_cmd->add_option("--policy", ev.policy, "strict or lenient")
      ->check(CLI::IsMember({"strict", "lenient"}));
  eval_cmd->add_option("--trace", ev.trace, "Write per-instance trace here");

  StateArgs st;
  auto *state_cmd = app.add_subcommand("state", "Create or inspect a state directory");
  state_cmd->add_option("action", st.action, "init, show or promote-report")
      ->required()
      ->check(CLI::IsMember({"init", "show", "promote-report"}));
  state_cmd->add_option("--state", st.state_dir, "State directory")->required();
  state_cmd->add_option("--bags", st.bags, "Seed bag file")->check(CLI::ExistingFile);
  state_cmd->add_option("--lexicon", st.lexicon, "Lexicon file")->check(CLI::ExistingFile);
  state_cmd->add_option("--stops", st.stops, "Stop-word file")->check(CLI::ExistingFile);
  state_cmd->add_option("--threshold", st.threshold, "Promotion threshold")
      ->check(CLI::PositiveNumber);
  state_cmd->add_option("--window", st.window, "Windowed Lesk size")->check(OddPositive());

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (dis_cmd->parsed() && dis.text.empty() && dis.file.empty()) {
      throw CLI::RequiredError("--text or --file");
    }
    if (state_cmd->parsed() && st.action == "init" && st.lexicon.empty()) {
      throw CLI::RequiredError("--lexicon");
    }
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dis_cmd->parsed()) return Disambiguate(dis, out);
    if (eval_cmd->parsed()) return Eval(ev, out);
    if (st.action == "init") return StateInit(st, out);
    if (st.action == "show") return StateShow(st, out);
    return StatePromoteReport(st, out);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace sense_arbiter::cli
