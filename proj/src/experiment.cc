// Copyright 2026 The distbandit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distbandit/experiment.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>
#include <type_traits>
#include <utility>

#include "distbandit/analysis.h"
#include "distbandit/errors.h"
#include "parse_util.h"

namespace distbandit {
namespace {

using internal::FormatDouble;
using internal::ParseDouble;
using internal::ParseInt;
using internal::Split;
using internal::Trim;

struct Entry {
  std::string value;
  int line = 0;
};

struct Section {
  std::string name;  // empty for the top level
  int line = 0;
  std::map<std::string, Entry> entries;
};

const std::set<std::string>& TopLevelKeys() {
  static const std::set<std::string> keys = {
      "preset",  "means",        "players",     "horizon", "policy",
      "exploration", "alpha",    "schedule",    "seed",    "replications",
      "checkpoints", "out",      "bounds",      "threads"};
  return keys;
}

const std::set<std::string>& StrategyKeys() {
  static const std::set<std::string> keys = {"schedule", "policy",
                                             "exploration", "alpha"};
  return keys;
}

std::string Where(const Entry& e) { return "line " + std::to_string(e.line); }

bool ValidStrategyName(const std::string& name) {
  if (name.empty() || name == "combined") return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

// Optional policy fields; unset fields fall through to the next layer.
struct PolicyOverride {
  std::optional<PolicySpec::Rule> rule;
  std::optional<ExplorationFunction> exploration;
  std::optional<double> alpha;
};

PolicyOverride ReadPolicyOverride(const Section& section,
                                  std::vector<std::string>& errors) {
  PolicyOverride out;
  const auto& e = section.entries;
  if (auto it = e.find("policy"); it != e.end()) {
    try {
      out.rule = ParseRule(it->second.value);
    } catch (const ConfigError& err) {
      errors.push_back(Where(it->second) + ": " + err.what());
    }
  }
  if (auto it = e.find("exploration"); it != e.end()) {
    try {
      out.exploration = ParseExploration(it->second.value);
    } catch (const ConfigError& err) {
      errors.push_back(Where(it->second) + ": " + err.what());
    }
  }
  if (auto it = e.find("alpha"); it != e.end()) {
    const auto alpha = ParseDouble(it->second.value);
    if (!alpha || !(*alpha >= 0.0 && *alpha <= 1.0)) {
      errors.push_back(Where(it->second) + ": alpha '" + it->second.value +
                       "' must be a number in [0, 1]");
    } else {
      out.alpha = *alpha;
    }
  }
  return out;
}

std::string DescribeSchedule(const CommunicationSchedule& s) {
  if (s.kind() == CommunicationSchedule::Kind::kExplicit &&
      s.explicit_rounds().size() > 8) {
    const auto& r = s.explicit_rounds();
    return "explicit:" + std::to_string(r.front()) + ",...," +
           std::to_string(r.back()) + " (" + std::to_string(r.size()) +
           " rounds)";
  }
  return ToString(s);
}

void WriteFileAtomically(const std::filesystem::path& path,
                         const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " to " + path.string());
  }
}

}  // namespace

RunConfig ExperimentConfig::ToRunConfig(const Strategy& strategy) const {
  RunConfig run;
  run.arms = BernoulliArmModel(means);
  run.players = players;
  run.horizon = horizon;
  run.schedule = strategy.schedule;
  run.policy = strategy.policy;
  run.seed = seed;
  run.checkpoints = checkpoints;
  run.replications = replications;
  return run;
}

ExperimentConfig Figure1Preset() {
  ExperimentConfig cfg;
  cfg.means = {0.9, 0.8};
  cfg.players = 2;
  cfg.horizon = Round{1} << 16;
  cfg.replications = 1000;
  for (Round t = 16; t <= cfg.horizon; t *= 2) cfg.checkpoints.push_back(t);

  PolicySpec policy;
  policy.rule = PolicySpec::Rule::kUcb;
  policy.exploration = ExplorationFunction::Approximate();

  std::vector<Round> every_round_to_4096;
  for (Round t = 1; t <= 4096; ++t) every_round_to_4096.push_back(t);

  cfg.strategies = {
      {"no_communication", CommunicationSchedule::None(), policy},
      {"full_communication", CommunicationSchedule::Full(), policy},
      {"strategy_a", CommunicationSchedule::Explicit({4096}), policy},
      {"strategy_b", CommunicationSchedule::Explicit({16, 256, 4096}), policy},
      {"strategy_c", CommunicationSchedule::Explicit(every_round_to_4096),
       policy},
  };
  return cfg;
}

ExperimentConfig PresetByName(std::string_view name) {
  if (name == "figure1") return Figure1Preset();
  throw ConfigError("unknown preset '" + std::string(name) +
                    "' (expected figure1)");
}

ExperimentConfig ParseConfig(std::string_view text) {
  std::vector<std::string> errors;
  std::vector<Section> sections(1);

  int line_no = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back(where + ": unterminated section header");
        continue;
      }
      const auto words = Split(Trim(line.substr(1, line.size() - 2)), ' ');
      if (words.size() != 2 || words[0] != "strategy") {
        errors.push_back(where + ": expected [strategy <name>]");
        continue;
      }
      const std::string name(words[1]);
      if (!ValidStrategyName(name)) {
        errors.push_back(where + ": invalid strategy name '" + name + "'");
      }
      for (std::size_t i = 1; i < sections.size(); ++i) {
        if (sections[i].name == name) {
          errors.push_back(where + ": duplicate strategy '" + name + "'");
        }
      }
      sections.push_back({name, line_no, {}});
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      errors.push_back(where + ": expected key = value");
      continue;
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string value(Trim(line.substr(eq + 1)));
    Section& section = sections.back();
    const auto& allowed =
        section.name.empty() ? TopLevelKeys() : StrategyKeys();
    if (!allowed.count(key)) {
      errors.push_back(where + ": unknown key '" + key + "'" +
                       (section.name.empty()
                            ? std::string()
                            : " in strategy '" + section.name + "'"));
      continue;
    }
    if (section.entries.count(key)) {
      errors.push_back(where + ": duplicate key '" + key + "'");
      continue;
    }
    section.entries[key] = {value, line_no};
  }

  const auto& top = sections.front().entries;
  const auto find = [&](const std::string& key) -> const Entry* {
    const auto it = top.find(key);
    return it == top.end() ? nullptr : &it->second;
  };

  ExperimentConfig cfg;
  bool from_preset = false;
  if (const Entry* e = find("preset")) {
    try {
      cfg = PresetByName(e->value);
      from_preset = true;
    } catch (const ConfigError& err) {
      errors.push_back(Where(*e) + ": " + err.what());
    }
  }

  if (const Entry* e = find("means")) {
    cfg.means.clear();
    for (std::string_view part : Split(e->value, ',')) {
      const auto mean = ParseDouble(part);
      if (!mean) {
        errors.push_back(Where(*e) + ": mean '" + std::string(part) +
                         "' is not a number");
      } else if (!(*mean >= 0.0 && *mean <= 1.0)) {
        errors.push_back(Where(*e) + ": mean " + std::string(part) +
                         " is outside [0, 1]");
      } else {
        cfg.means.push_back(*mean);
      }
    }
  } else if (!from_preset) {
    errors.push_back("missing required key 'means'");
  }

  const auto read_int = [&](const char* key, std::int64_t min_value,
                            auto& target) {
    const Entry* e = find(key);
    if (!e) return false;
    const auto v = ParseInt(e->value);
    if (!v || *v < min_value) {
      errors.push_back(Where(*e) + ": " + key + " must be an integer >= " +
                       std::to_string(min_value) + ", got '" + e->value + "'");
    } else {
      target = static_cast<std::remove_reference_t<decltype(target)>>(*v);
    }
    return true;
  };
  read_int("players", 1, cfg.players);
  if (!read_int("horizon", 1, cfg.horizon) && !from_preset) {
    errors.push_back("missing required key 'horizon'");
  }
  read_int("replications", 1, cfg.replications);
  read_int("threads", 0, cfg.threads);
  if (const Entry* e = find("seed")) {
    std::uint64_t seed = 0;
    const std::string_view v = Trim(e->value);
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
      errors.push_back(Where(*e) + ": seed must be an unsigned 64-bit integer");
    } else {
      cfg.seed = seed;
    }
  }
  if (const Entry* e = find("out")) {
    if (e->value.empty()) {
      errors.push_back(Where(*e) + ": out must not be empty");
    } else {
      cfg.out_dir = e->value;
    }
  }
  if (const Entry* e = find("bounds")) {
    if (e->value == "true") {
      cfg.bounds = true;
    } else if (e->value == "false") {
      cfg.bounds = false;
    } else {
      errors.push_back(Where(*e) + ": bounds must be true or false");
    }
  }
  if (const Entry* e = find("checkpoints")) {
    cfg.checkpoints.clear();
    for (std::string_view part : Split(e->value, ',')) {
      const auto t = ParseInt(part);
      if (!t || *t < 1) {
        errors.push_back(Where(*e) + ": checkpoint '" + std::string(part) +
                         "' must be an integer >= 1");
        continue;
      }
      if (!cfg.checkpoints.empty() && *t <= cfg.checkpoints.back()) {
        errors.push_back(Where(*e) +
                         ": checkpoints must be strictly increasing");
      }
      cfg.checkpoints.push_back(*t);
    }
  }
  for (Round t : cfg.checkpoints) {
    if (t > cfg.horizon) {
      errors.push_back("checkpoint " + std::to_string(t) +
                       " exceeds the horizon " + std::to_string(cfg.horizon));
    }
  }

  // Strategies: config-defined ones replace the preset's.
  const PolicyOverride global = ReadPolicyOverride(sections.front(), errors);
  struct Pending {
    std::string name;
    const Entry* schedule;
    PolicyOverride local;
    std::optional<Strategy> base;
    int line;
  };
  std::vector<Pending> pending;
  if (const Entry* e = find("schedule")) {
    pending.push_back({"default", e, {}, std::nullopt, e->line});
  }
  for (std::size_t i = 1; i < sections.size(); ++i) {
    const Section& s = sections[i];
    if (s.name == "default" && find("schedule")) {
      errors.push_back("line " + std::to_string(s.line) +
                       ": strategy 'default' clashes with the top-level "
                       "schedule, which already defines it");
    }
    const auto it = s.entries.find("schedule");
    if (it == s.entries.end()) {
      errors.push_back("line " + std::to_string(s.line) + ": strategy '" +
                       s.name + "' has no schedule");
      continue;
    }
    pending.push_back(
        {s.name, &it->second, ReadPolicyOverride(s, errors), std::nullopt,
         s.line});
  }
  if (pending.empty()) {
    for (const Strategy& s : cfg.strategies) {
      pending.push_back({s.name, nullptr, {}, s, 0});
    }
  }
  if (pending.empty()) {
    errors.push_back(
        "no strategies: set 'schedule' or add [strategy <name>] sections");
  }

  std::vector<Strategy> strategies;
  for (const Pending& p : pending) {
    Strategy s;
    s.name = p.name;
    if (p.base) {
      s = *p.base;
    } else {
      try {
        s.schedule = ParseSchedule(p.schedule->value);
      } catch (const ConfigError& err) {
        errors.push_back(Where(*p.schedule) + ": " + err.what());
        continue;
      }
    }
    if (auto r = p.local.rule.has_value() ? p.local.rule : global.rule) {
      s.policy.rule = *r;
    }
    if (auto x = p.local.exploration.has_value() ? p.local.exploration
                                                 : global.exploration) {
      s.policy.exploration = *x;
    }
    const std::optional<double> alpha =
        p.local.alpha.has_value() ? p.local.alpha : global.alpha;
    if (alpha) {
      s.policy.alpha = *alpha;
    } else if (s.policy.rule == PolicySpec::Rule::kDklucb) {
      try {
        s.policy.alpha = Density(s.schedule).value;
      } catch (const std::exception&) {
        errors.push_back("strategy '" + s.name +
                         "': dklucb needs 'alpha' because the density of " +
                         DescribeSchedule(s.schedule) + " is undefined");
      }
    }
    strategies.push_back(std::move(s));
  }
  cfg.strategies = std::move(strategies);

  if (!errors.empty()) throw ConfigError(std::move(errors));
  return cfg;
}

std::string FormatStrategyCsv(const RunAggregate& aggregate) {
  std::string out = "t,arm,mean_pulls,stderr,regret\n";
  for (std::size_t ci = 0; ci < aggregate.checkpoints.size(); ++ci) {
    for (ArmId a = 0; a < aggregate.num_arms; ++a) {
      out += std::to_string(aggregate.checkpoints[ci]);
      out += ',';
      out += std::to_string(a + 1);
      out += ',';
      out += FormatDouble(aggregate.mean_pulls(ci, a));
      out += ',';
      out += FormatDouble(aggregate.standard_error(ci, a));
      out += ',';
      out += FormatDouble(aggregate.regret[ci]);
      out += '\n';
    }
  }
  return out;
}

std::string DescribeDensity(const CommunicationSchedule& schedule) {
  using Kind = CommunicationSchedule::Kind;
  if (schedule.kind() == Kind::kOneShot || schedule.kind() == Kind::kExplicit) {
    return "n/a (finite set)";
  }
  return FormatDouble(Density(schedule).value);
}

ExperimentResult RunExperiment(const ExperimentConfig& cfg, std::ostream& log) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + cfg.out_dir.string() +
                  ": " + ec.message());
  }

  ExperimentResult result;
  std::string combined = "strategy,t,arm,mean_pulls,stderr,regret\n";
  for (const Strategy& strategy : cfg.strategies) {
    RunConfig run = cfg.ToRunConfig(strategy);
    RunAggregate aggregate = RunMonteCarlo(run, cfg.threads);

    const std::string csv = FormatStrategyCsv(aggregate);
    const auto path = cfg.out_dir / (strategy.name + ".csv");
    WriteFileAtomically(path, csv);
    result.files.push_back(path);
    // Reuse the per-strategy rows, minus the header.
    std::istringstream rows(csv);
    std::string row;
    std::getline(rows, row);
    while (std::getline(rows, row)) combined += strategy.name + "," + row + "\n";

    const std::size_t last = aggregate.checkpoints.size() - 1;
    log << strategy.name << ": schedule " << DescribeSchedule(run.schedule)
        << ", policy " << ToString(run.policy.rule) << "/"
        << ToString(run.policy.exploration) << ", density "
        << DescribeDensity(run.schedule) << "\n";
    for (ArmId a = 0; a < aggregate.num_arms; ++a) {
      if (!run.arms.is_suboptimal(a)) continue;
      char line[160];
      std::snprintf(line, sizeof(line),
                    "  t=%lld arm %d: mean pulls %.3f +/- %.3f\n",
                    static_cast<long long>(aggregate.checkpoints[last]), a + 1,
                    aggregate.mean_pulls(last, a),
                    aggregate.standard_error(last, a));
      log << line;
    }
    log << "  regret " << FormatDouble(aggregate.regret[last]) << "\n";

    if (cfg.bounds) {
      const BoundChoice choice = ChooseBound(run);
      try {
        const BoundReport report =
            MakeBoundReport(run.arms, choice.bound, run.players, choice.alpha,
                            aggregate.checkpoints);
        const auto table = Compare(aggregate, report);
        std::ostringstream bounds_csv;
        WriteComparisonCsv(bounds_csv, table);
        const auto bounds_path = cfg.out_dir / (strategy.name + "_bounds.csv");
        WriteFileAtomically(bounds_path, bounds_csv.str());
        result.files.push_back(bounds_path);
        PrintComparisonTable(
            log, strategy.name + " vs " + ToString(choice.bound) + " bound",
            table);
      } catch (const PreconditionError& err) {
        log << "  bounds unavailable: " << err.what() << "\n";
      }
    }
    result.strategies.push_back(
        {strategy.name, std::move(run), std::move(aggregate)});
  }
  const auto combined_path = cfg.out_dir / "combined.csv";
  WriteFileAtomically(combined_path, combined);
  result.files.push_back(combined_path);
  return result;
}

}  // namespace distbandit
