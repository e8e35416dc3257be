#include "graphreal/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphreal/constrained.hpp"
#include "graphreal/enumeration.hpp"
#include "graphreal/graphicality.hpp"
#include "graphreal/io.hpp"
#include "graphreal/oracle.hpp"
#include "graphreal/sampling.hpp"

namespace graphreal::cli {

namespace {

struct Config {
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1;
  std::string method = "weighted";
  bool early_reject = false;
  std::uint64_t budget = MrOptions{}.budget;
  std::string forbid;
  std::string format = "text";
  std::optional<std::uint64_t> limit;
  unsigned threads = 1;
  bool ordered = false;
  bool oracle = false;
  std::string policy = "max";
  bool no_memo = false;
  bool exact = false;
};

struct InvalidInput {
  std::string message;
};

// A validated input line, or the marker that a degree is too large for any
// simple graph on the nonzero nodes.
struct Prepared {
  std::optional<ValidatedSequence> valid;
  std::size_t input_size = 0;
};

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  return buffer;
}

std::vector<std::vector<long long>> load_sequences(const Config& config, std::istream& in) {
  if (config.inputs.empty()) return io::read_sequences(in);
  if (config.inputs.size() == 1 && std::filesystem::is_regular_file(config.inputs.front())) {
    std::ifstream file(config.inputs.front());
    if (!file) throw InvalidInput{"cannot open " + config.inputs.front()};
    return io::read_sequences(file);
  }
  std::string joined;
  for (const auto& token : config.inputs) joined += token + ' ';
  return {io::parse_sequence_line(joined)};
}

Prepared prepare(const std::vector<long long>& raw) {
  Prepared p;
  p.input_size = raw.size();
  try {
    p.valid = validate_input_sequence(raw);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegreeTooLarge) throw;
  }
  return p;
}

bool graphical(const Prepared& p) { return p.valid && erdos_gallai_test(p.valid->sequence).graphical; }

class Runner {
 public:
  Runner(const Config& config, std::ostream& out) : config_(config), out_(out) {}

  void emit(const LabeledGraph& g, const ValidatedSequence& v, const std::string& extra_key = {},
            const std::string& extra_value = {}) {
    const auto mapped = io::to_input_labels(g, v);
    if (config_.format == "jsonlines") {
      auto j = nlohmann::json::parse(io::graph_to_json_line(mapped));
      if (!extra_key.empty()) j[extra_key] = extra_value;
      out_ << j.dump() << '\n';
      return;
    }
    if (extra_key.empty()) {
      io::write_graph_text(out_, mapped);
    } else {
      std::ostringstream block;
      io::write_graph_text(block, mapped);
      auto text = block.str();
      text.pop_back();  // the blank separator goes after the extra line
      out_ << text << extra_key << '=' << extra_value << "\n\n";
    }
  }

  int test(const Prepared& p) {
    bool verdict = false;
    if (config_.forbid.empty()) {
      verdict = config_.oracle ? p.valid && oracle_exists(OracleQuery(p.valid->sequence)) : graphical(p);
    } else {
      verdict = p.valid && test_forbidden(*p.valid);
    }
    out_ << (verdict ? "graphical" : "not-graphical") << '\n';
    return verdict ? kOk : kNotGraphical;
  }

  int construct(const Prepared& p) {
    if (!graphical(p)) return not_graphical();
    emit(havel_hakimi_construct(p.valid->sequence, policy()), *p.valid);
    return kOk;
  }

  int enumerate(const Prepared& p) {
    if (!graphical(p)) return not_graphical();
    const auto& v = *p.valid;
    std::uint64_t emitted = 0;
    auto visit = [&](const LabeledGraph& g) {
      if (config_.limit && emitted >= *config_.limit) return false;
      emit(g, v);
      ++emitted;
      return !config_.limit || emitted < *config_.limit;
    };
    if (config_.oracle) {
      for (const auto& g : oracle_enumerate(OracleQuery(v.sequence))) {
        if (!visit(g)) break;
      }
    } else {
      enumerate_parallel(v.sequence, {config_.threads, config_.ordered || config_.threads <= 1}, visit);
    }
    return kOk;
  }

  int count(const Prepared& p) {
    if (!graphical(p)) {
      out_ << "count=0 memo_entries=0\n";
      return kNotGraphical;
    }
    if (config_.oracle) {
      out_ << "count=" << oracle_count(OracleQuery(p.valid->sequence)) << " memo_entries=0\n";
      return kOk;
    }
    const auto result = count_realizations(p.valid->sequence, !config_.no_memo, config_.threads);
    out_ << "count=" << result.count << " memo_entries=" << result.memo_entries << '\n';
    return kOk;
  }

  int sample(const Prepared& p) {
    if (!graphical(p)) return not_graphical();
    const auto& v = *p.valid;
    if (config_.method == "weighted") {
      for (std::uint64_t k = 0; k < config_.samples; ++k) {
        const auto s = sample_weighted(v.sequence, config_.seed, k);
        const auto& q = s.probability;
        emit(s.graph, v, "p",
             boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str());
      }
      return kOk;
    }
    MrRunStats total;
    const MrOptions options{config_.early_reject, config_.budget};
    for (std::uint64_t k = 0; k < config_.samples; ++k) {
      try {
        const auto s = molloy_reed_sample(v.sequence, config_.seed, options, k);
        total += s.stats;
        emit(s.graph, v);
      } catch (const BudgetExceeded& e) {
        total += e.stats();
        write_mr_stats(total);
        throw;
      }
    }
    write_mr_stats(total);
    return kOk;
  }

  int estimate(const Prepared& p) {
    if (!graphical(p)) return not_graphical();
    const auto& d = p.valid->sequence;
    const auto result = estimate_count(d, config_.samples, config_.seed, config_.threads);
    out_ << "estimate=" << format_double(result.estimate) << " stderr=" << format_double(result.standard_error)
         << " exact=";
    if (config_.exact) {
      out_ << count_realizations(d, true, config_.threads).count;
    } else {
      out_ << "unknown";
    }
    out_ << '\n';
    return kOk;
  }

 private:
  int not_graphical() {
    out_ << "not-graphical\n";
    return kNotGraphical;
  }

  void write_mr_stats(const MrRunStats& s) {
    if (config_.format == "jsonlines") {
      out_ << nlohmann::json{{"restarts", s.restarts}, {"cg_rejects", s.cg_rejects}}.dump() << '\n';
    } else {
      out_ << "restarts=" << s.restarts << " cg_rejects=" << s.cg_rejects << '\n';
    }
  }

  NodeSelectionPolicy policy() const {
    if (config_.policy == "min") return NodeSelectionPolicy::MinResidual;
    if (config_.policy == "fixed") return NodeSelectionPolicy::FixedLabelOrder;
    return NodeSelectionPolicy::MaxResidual;
  }

  // --forbid i:j1,j2,... uses input labels; nodes of degree zero were
  // stripped and cannot carry edges anyway.
  bool test_forbidden(const ValidatedSequence& v) {
    const auto colon = config_.forbid.find(':');
    if (colon == std::string::npos) throw InvalidInput{"--forbid expects i:j1,j2,..."};
    auto parse_label = [&](const std::string& token) {
      long long value = 0;
      try {
        std::size_t used = 0;
        value = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw InvalidInput{"bad label '" + token + "' in --forbid"};
      }
      if (value < 1 || static_cast<std::size_t>(value) > v.input_size)
        throw InvalidInput{"label " + token + " in --forbid is outside 1.." + std::to_string(v.input_size)};
      return static_cast<NodeLabel>(value);
    };
    const NodeLabel focal_in = parse_label(config_.forbid.substr(0, colon));
    std::vector<NodeLabel> members_in;
    std::stringstream rest(config_.forbid.substr(colon + 1));
    for (std::string token; std::getline(rest, token, ',');) {
      if (!token.empty()) members_in.push_back(parse_label(token));
    }

    std::vector<NodeLabel> sorted_label(v.input_size + 1, 0);
    for (std::size_t k = 0; k < v.original_label.size(); ++k)
      sorted_label[static_cast<std::size_t>(v.original_label[k])] = static_cast<NodeLabel>(k + 1);

    const NodeLabel focal = sorted_label[static_cast<std::size_t>(focal_in)];
    std::vector<NodeLabel> members;
    for (auto j : members_in) {
      if (j == focal_in) throw InvalidInput{"--forbid lists the focal node itself"};
      if (auto mapped = sorted_label[static_cast<std::size_t>(j)]; mapped != 0) members.push_back(mapped);
    }
    if (focal == 0) return erdos_gallai_test(v.sequence).graphical;

    ForbiddenSet x;
    try {
      x = ForbiddenSet(focal, members);
    } catch (const Error& e) {
      throw InvalidInput{e.what()};
    }
    if (config_.oracle) {
      OracleQuery q(v.sequence);
      q.forbidden_star = x;
      return oracle_exists(q);
    }
    try {
      return cg_test(v.sequence, focal, x);
    } catch (const Error& e) {
      // Fewer allowed partners than stubs: no realization avoids X.
      if (e.kind() == ErrorKind::TooManyForbidden) return false;
      throw;
    }
  }

  const Config& config_;
  std::ostream& out_;
};

void add_common(CLI::App* sub, Config& config) {
  sub->add_option("input", config.inputs, "Sequence file, or the degrees inline; standard input if omitted");
  sub->add_option("--format", config.format, "Graph output format")->check(CLI::IsMember({"text", "jsonlines"}));
  sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  sub->add_flag("--ordered", config.ordered, "Keep single-threaded output order with --threads");
  sub->add_option("--seed", config.seed, "Random seed")->envname("GRAPHREAL_SEED");
  sub->add_flag("--oracle", config.oracle, "Answer with the brute-force oracle")->group("");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Degree sequence realization: graphicality, construction, enumeration, counting, sampling",
               "graphreal"};
  app.require_subcommand(1);

  auto* test = app.add_subcommand("test", "Decide graphicality, optionally avoiding a forbidden star");
  test->add_option("--forbid", config.forbid, "Forbidden star i:j1,j2,...");
  auto* construct = app.add_subcommand("construct", "Build one Havel-Hakimi realization");
  construct->add_option("--policy", config.policy, "Focal node choice")
      ->check(CLI::IsMember({"max", "min", "fixed"}));
  auto* enumerate = app.add_subcommand("enumerate", "Stream every labeled realization");
  enumerate->add_option("--limit", config.limit, "Stop after this many graphs");
  auto* count = app.add_subcommand("count", "Count labeled realizations exactly");
  count->add_flag("--no-memo", config.no_memo, "Disable the count cache");
  auto* sample = app.add_subcommand("sample", "Draw random realizations");
  sample->add_option("--method", config.method, "Sampler")->check(CLI::IsMember({"weighted", "mr"}));
  sample->add_option("--samples", config.samples, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_flag("--early-reject", config.early_reject, "Constrained early rejection for stub matching");
  sample->add_option("--budget", config.budget, "Stub pairings allowed per sample");
  auto* estimate = app.add_subcommand("estimate", "Importance-sampling estimate of the realization count");
  estimate->add_option("--samples", config.samples, "Number of samples")->check(CLI::PositiveNumber);
  estimate->add_flag("--exact", config.exact, "Also print the exact count");
  for (auto* sub : {test, construct, enumerate, count, sample, estimate}) add_common(sub, config);

  std::vector<const char*> argv{"graphreal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  using Command = int (Runner::*)(const Prepared&);
  Command command = nullptr;
  if (*test) command = &Runner::test;
  if (*construct) command = &Runner::construct;
  if (*enumerate) command = &Runner::enumerate;
  if (*count) command = &Runner::count;
  if (*sample) command = &Runner::sample;
  if (*estimate) command = &Runner::estimate;

  try {
    Runner runner(config, out);
    const auto sequences = load_sequences(config, in);
    if (sequences.empty()) throw InvalidInput{"no degree sequence given"};
    int status = kOk;
    for (const auto& raw : sequences) status = std::max(status, (runner.*command)(prepare(raw)));
    out.flush();
    return status;
  } catch (const InvalidInput& e) {
    err << "error: " << e.message << '\n';
    return kInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kNotGraphical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NotGraphical ? kNotGraphical : kInvalidInput;
  }
}

}  // namespace graphreal::cli
