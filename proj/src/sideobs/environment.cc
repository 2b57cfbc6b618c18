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

#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "bandits/errors.h"
#include "bandits/sideobs.h"

namespace bandits {

GraphSource FixedGraph(WeightedDigraph g) {
  auto shared = std::make_shared<const WeightedDigraph>(std::move(g));
  return [shared](std::int64_t, RngStream&) { return shared; };
}

GraphSource ErdosRenyiGraphs(int n, double r) {
  if (n < 1 || r < 0.0 || r > 1.0) throw ConfigError("ErdosRenyiGraphs");
  return [n, r](std::int64_t, RngStream& rng) {
    return std::make_shared<const WeightedDigraph>(ErdosRenyi(n, r, rng));
  };
}

LossScript BernoulliLossScript(int N, std::int64_t T, double mean,
                               double best_mean, int best,
                               std::uint64_t seed) {
  if (N < 1 || T < 1 || best < 0 || best >= N) {
    throw ConfigError("BernoulliLossScript: bad shape");
  }
  if (mean < 0.0 || mean > 1.0 || best_mean < 0.0 || best_mean > 1.0) {
    throw ConfigError("BernoulliLossScript: means must lie in [0,1]");
  }
  RngStream rng(seed, "loss-script");
  LossScript script(T, std::vector<double>(N));
  for (auto& row : script) {
    for (int i = 0; i < N; ++i) {
      row[i] = rng.Bernoulli(i == best ? best_mean : mean) ? 1.0 : 0.0;
    }
  }
  return script;
}

SideObservationEnvironment::SideObservationEnvironment(
    std::shared_ptr<const LossScript> losses, GraphSource graphs,
    double noise_R, bool noisy)
    : losses_(std::move(losses)),
      graphs_(std::move(graphs)),
      noise_R_(noise_R),
      noisy_(noisy || noise_R > 0.0) {
  if (!losses_ || losses_->empty()) {
    throw ConfigError("SideObservationEnvironment: empty loss script");
  }
  if (noise_R < 0.0) throw ConfigError("SideObservationEnvironment: R < 0");
  n_ = static_cast<int>(losses_->front().size());
  for (const auto& row : *losses_) {
    if (static_cast<int>(row.size()) != n_) {
      throw ConfigError("SideObservationEnvironment: ragged loss script");
    }
    ValidateLosses(row);
  }
  xi_.assign(n_, 0.0);
}

void SideObservationEnvironment::BeginRound(std::int64_t t, RngStream& rng) {
  row_ = &(*losses_)[static_cast<std::size_t>(t - 1) % losses_->size()];
  graph_ = graphs_(t, rng);
  if (!graph_ || graph_->n() != n_) {
    throw ConfigError("SideObservationEnvironment: graph size mismatch");
  }
  for (double& x : xi_) {
    x = noise_R_ > 0.0 ? rng.Uniform(-noise_R_, noise_R_) : 0.0;
  }
}

Feedback SideObservationEnvironment::Respond(int action, RngStream&) {
  Feedback fb;
  fb.action = action;
  fb.value = (*row_)[action];
  fb.observed = ObservedSet(*graph_, action);
  fb.graph = graph_;
  if (noisy_) {
    fb.signals = NoisyFeedback(*graph_, *row_, xi_, action);
  } else {
    fb.signals.assign(n_, 0.0);
    for (int i : fb.observed) fb.signals[i] = (*row_)[i];
  }
  return fb;
}

std::vector<ScriptRound> ParseAdversaryScript(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("adversary script: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw ConfigError("adversary script: expected a nonempty array");
  }
  std::vector<ScriptRound> rounds;
  try {
    for (const auto& item : doc) {
      ScriptRound round;
      round.losses = item.at("losses").get<std::vector<double>>();
      ValidateLosses(round.losses);
      const int n = static_cast<int>(round.losses.size());
      const auto& graph = item.at("graph");
      if (graph.is_string()) {
        round.graph_kind = graph.get<std::string>();
        if (round.graph_kind == "complete") {
          round.graph = std::make_shared<const WeightedDigraph>(
              WeightedDigraph::Complete(n));
        } else if (round.graph_kind == "empty") {
          round.graph = std::make_shared<const WeightedDigraph>(
              WeightedDigraph::Empty(n));
        } else {
          throw ConfigError("adversary script: unknown graph name '" +
                            round.graph_kind + "'");
        }
      } else if (graph.contains("er")) {
        round.graph_kind = "er";
        const auto& er = graph.at("er");
        if (er.at("n").get<int>() != n) {
          throw ConfigError("adversary script: ER size mismatch");
        }
        round.er_r = er.at("r").get<double>();
        if (round.er_r < 0.0 || round.er_r > 1.0) {
          throw ConfigError("adversary script: ER r outside [0,1]");
        }
      } else {
        round.graph_kind = "inline";
        WeightedDigraph g(n, graph.value("directed", true));
        for (const auto& arc : graph.at("arcs")) {
          g.AddArc(arc.at(0).get<int>(), arc.at(1).get<int>(),
                   arc.size() > 2 ? arc.at(2).get<double>() : 1.0);
        }
        round.graph = std::make_shared<const WeightedDigraph>(std::move(g));
      }
      if (!rounds.empty() && n != static_cast<int>(rounds[0].losses.size())) {
        throw ConfigError("adversary script: inconsistent action counts");
      }
      rounds.push_back(std::move(round));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("adversary script: ") + e.what());
  }
  return rounds;
}

std::vector<ScriptRound> LoadAdversaryScript(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open adversary script " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseAdversaryScript(buf.str());
}

std::unique_ptr<SideObservationEnvironment> MakeScriptedEnvironment(
    const std::vector<ScriptRound>& rounds, double noise_R, bool noisy) {
  if (rounds.empty()) throw ConfigError("empty adversary script");
  auto losses = std::make_shared<LossScript>();
  for (const auto& r : rounds) losses->push_back(r.losses);
  auto spec = std::make_shared<const std::vector<ScriptRound>>(rounds);
  GraphSource source = [spec](std::int64_t t, RngStream& rng) {
    const ScriptRound& r = (*spec)[static_cast<std::size_t>(t - 1) %
                                   spec->size()];
    if (r.graph) return r.graph;
    return std::make_shared<const WeightedDigraph>(
        ErdosRenyi(static_cast<int>(r.losses.size()), r.er_r, rng));
  };
  return std::make_unique<SideObservationEnvironment>(losses, source, noise_R,
                                                       noisy);
}

}  // namespace bandits
