// Copyright 2026 The Authors.
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

#include "bandits/runner.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <deque>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "bandits/errors.h"
#include "registry.h"

namespace bandits {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

bool SafeName(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == '.';
  });
}

// File-valued environment keys end in "_file" and resolve against the spec's
// directory.
void ResolvePaths(json& env, const std::string& base_dir) {
  if (!env.is_object()) return;
  for (auto& item : env.items()) {
    const std::string& key = item.key();
    if (key.size() > 5 && key.compare(key.size() - 5, 5, "_file") == 0 &&
        item.value().is_string()) {
      const fs::path p(item.value().get<std::string>());
      if (p.is_relative()) item.value() = (fs::path(base_dir) / p).string();
    }
  }
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

json ExperimentSpec::EnvironmentFor(const PolicySpec& policy) const {
  json env = environment;
  env.merge_patch(policy.environment_patch);
  ResolvePaths(env, base_dir);
  return env;
}

ExperimentSpec ParseExperimentSpec(const std::string& json_text,
                                   const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment spec: ") + e.what());
  }
  registry::CheckKeys(doc, {"name", "T", "seeds", "environment", "policies",
                            "out"},
                      "experiment spec");
  ExperimentSpec spec;
  spec.base_dir = base_dir;
  try {
    spec.name = doc.at("name").get<std::string>();
    spec.T = doc.at("T").get<std::int64_t>();
    const json& seeds = doc.at("seeds");
    if (seeds.is_array()) {
      for (const auto& s : seeds) spec.seeds.push_back(s.get<std::uint64_t>());
    } else {
      registry::CheckKeys(seeds, {"start", "count"}, "seeds");
      const auto start = seeds.value("start", std::uint64_t{0});
      const auto count = seeds.at("count").get<std::int64_t>();
      for (std::int64_t i = 0; i < count; ++i) spec.seeds.push_back(start + i);
    }
    spec.environment = doc.at("environment");
    for (const auto& p : doc.at("policies")) {
      registry::CheckKeys(p, {"name", "label", "params", "environment"},
                          "policy");
      PolicySpec ps;
      ps.name = p.at("name").get<std::string>();
      ps.label = p.value("label", ps.name);
      if (p.contains("params")) ps.params = p.at("params");
      if (p.contains("environment")) ps.environment_patch = p.at("environment");
      spec.policies.push_back(std::move(ps));
    }
    spec.out_dir = doc.value("out", std::string());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment spec: ") + e.what());
  }
  ValidateExperimentSpec(spec);
  return spec;
}

ExperimentSpec LoadExperimentSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open experiment spec " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseExperimentSpec(buf.str(), fs::path(path).parent_path().string());
}

void ValidateExperimentSpec(const ExperimentSpec& spec) {
  if (!SafeName(spec.name)) {
    throw ConfigError("experiment name must be nonempty [A-Za-z0-9._-]");
  }
  if (spec.T < 1) throw ConfigError("T must be >= 1");
  if (spec.seeds.empty()) throw ConfigError("seeds must be nonempty");
  if (spec.policies.empty()) throw ConfigError("need at least one policy");
  std::set<std::string> labels;
  const auto& envs = registry::Environments();
  const auto& policies = registry::Policies();
  for (const PolicySpec& p : spec.policies) {
    if (!SafeName(p.label)) {
      throw ConfigError("policy label '" + p.label +
                        "' must be nonempty [A-Za-z0-9._-]");
    }
    if (!labels.insert(p.label).second) {
      throw ConfigError("duplicate policy label '" + p.label + "'");
    }
    const auto pit = policies.find(p.name);
    if (pit == policies.end()) {
      throw ConfigError("unknown policy '" + p.name +
                        "' (valid: " + JoinNames(PolicyNames()) + ")");
    }
    const json env = spec.EnvironmentFor(p);
    if (!env.is_object() || !env.contains("kind") ||
        !env["kind"].is_string()) {
      throw ConfigError("environment needs a string 'kind'");
    }
    const std::string kind = env["kind"].get<std::string>();
    const auto eit = envs.find(kind);
    if (eit == envs.end()) {
      throw ConfigError("unknown environment '" + kind +
                        "' (valid: " + JoinNames(EnvironmentNames()) + ")");
    }
    const auto& allowed = pit->second.environments;
    if (std::find(allowed.begin(), allowed.end(), kind) == allowed.end()) {
      throw ConfigError("policy '" + p.name + "' does not run on '" + kind +
                        "' (valid: " + JoinNames(allowed) + ")");
    }
    registry::CheckKeys(env, eit->second.keys, "environment '" + kind + "'");
    registry::CheckKeys(p.params, pit->second.keys,
                        "params of '" + p.label + "'");
    try {
      eit->second.validate(env, spec.T);
    } catch (const ConfigError& e) {
      throw ConfigError("environment of '" + p.label + "': " + e.what());
    }
  }
}

RunOutcome RunRepetition(const ExperimentSpec& spec, std::size_t policy,
                         std::uint64_t seed) {
  const PolicySpec& p = spec.policies.at(policy);
  const auto& entry = registry::Policies().at(p.name);
  // The stream ignores the policy so paired policies share environments.
  const RngStream rng(seed, spec.name);
  return entry.run(spec.EnvironmentFor(p), p.params, spec.T, rng);
}

void WriteTraceCsv(std::ostream& out, const RegretTrace& trace) {
  out << "round,action,loss_or_reward,cum_regret\n";
  for (const RoundRecord& r : trace.rounds) {
    out << r.round << ',' << r.action << ',' << FormatDouble(r.value) << ','
        << FormatDouble(r.cum_regret) << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "policy,T,mean_final_regret,stderr,runtime_seconds\n";
  for (const SummaryRow& r : rows) {
    out << r.label << ',' << r.T << ',' << FormatDouble(r.mean_final_regret)
        << ',' << FormatDouble(r.stderr_final_regret) << ','
        << FormatDouble(r.runtime_seconds) << '\n';
  }
}

void WriteFileAtomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) throw ConfigError("write failed for " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot rename " + tmp + ": " + ec.message());
  }
}

ExperimentReport RunExperiment(const ExperimentSpec& spec,
                               const RunOptions& options) {
  ValidateExperimentSpec(spec);
  fs::create_directories(spec.out_dir);
  const std::size_t P = spec.policies.size();
  const std::size_t S = spec.seeds.size();
  const std::size_t jobs = P * S;

  struct Done {
    std::size_t job;
    RunOutcome outcome;
    double seconds;
    std::exception_ptr error;
  };
  std::mutex mu;
  std::condition_variable cv;
  std::deque<Done> queue;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  const int workers = std::max(1, std::min<int>(options.parallel,
                                                static_cast<int>(jobs)));
  int active = workers;
  auto worker = [&] {
    for (;;) {
      const std::size_t job = next.fetch_add(1);
      if (job >= jobs || failed.load()) {
        std::lock_guard<std::mutex> lock(mu);
        --active;
        cv.notify_one();
        return;
      }
      Done d{job, {}, 0.0, nullptr};
      const auto start = std::chrono::steady_clock::now();
      try {
        d.outcome = RunRepetition(spec, job / S, spec.seeds[job % S]);
      } catch (...) {
        d.error = std::current_exception();
        failed = true;
      }
      d.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      {
        std::lock_guard<std::mutex> lock(mu);
        queue.push_back(std::move(d));
      }
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

  // Collector: the only writer of files and results.
  std::vector<std::vector<double>> finals(P, std::vector<double>(S, 0.0));
  std::vector<double> seconds(P, 0.0);
  ExperimentReport report;
  std::exception_ptr first_error;
  std::size_t received = 0;
  for (;;) {
    Done d;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return !queue.empty() || active == 0; });
      if (queue.empty()) break;
      d = std::move(queue.front());
      queue.pop_front();
    }
    ++received;
    if (d.error) {
      if (!first_error) first_error = d.error;
      continue;
    }
    const std::size_t p = d.job / S;
    const std::size_t s = d.job % S;
    finals[p][s] = d.outcome.final_regret;
    seconds[p] += d.seconds;
    std::ostringstream csv;
    WriteTraceCsv(csv, d.outcome.trace);
    const std::string path =
        (fs::path(spec.out_dir) / (spec.policies[p].label + "_seed" +
                                   std::to_string(spec.seeds[s]) + ".csv"))
            .string();
    WriteFileAtomically(path, csv.str());
    report.files.push_back(path);
    if (!options.quiet) {
      std::cerr << "[" << received << "/" << jobs << "] "
                << spec.policies[p].label << " seed " << spec.seeds[s]
                << " regret " << d.outcome.final_regret << "\n";
    }
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  if (received != jobs) throw InvariantError("runner: missing repetitions");

  for (std::size_t p = 0; p < P; ++p) {
    SummaryRow row;
    row.label = spec.policies[p].label;
    row.T = spec.T;
    double sum = 0.0;
    for (double v : finals[p]) sum += v;
    row.mean_final_regret = sum / S;
    if (S > 1) {
      double ss = 0.0;
      for (double v : finals[p]) {
        ss += (v - row.mean_final_regret) * (v - row.mean_final_regret);
      }
      row.stderr_final_regret = std::sqrt(ss / (S - 1) / S);
    }
    row.runtime_seconds = options.no_timing ? 0.0 : seconds[p];
    report.summary.push_back(row);
  }
  std::ostringstream csv;
  WriteSummaryCsv(csv, report.summary);
  const std::string path = (fs::path(spec.out_dir) / "summary.csv").string();
  WriteFileAtomically(path, csv.str());
  report.files.push_back(path);
  std::sort(report.files.begin(), report.files.end());
  return report;
}

std::vector<std::string> EnvironmentNames() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : registry::Environments()) {
    out.push_back(name);
  }
  return out;
}

std::vector<std::string> PolicyNames() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : registry::Policies()) out.push_back(name);
  return out;
}

std::vector<std::string> ListComponents(const std::string& filter) {
  std::vector<std::string> out;
  for (const auto& n : EnvironmentNames()) {
    if (n.find(filter) != std::string::npos) out.push_back("environment " + n);
  }
  for (const auto& n : PolicyNames()) {
    if (n.find(filter) != std::string::npos) out.push_back("policy " + n);
  }
  return out;
}

}  // namespace bandits
