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

#include "registry.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include <Eigen/Dense>

#include "bandits/baselines.h"
#include "bandits/errors.h"
#include "bandits/funcopt.h"
#include "bandits/graph.h"
#include "bandits/infarms.h"
#include "bandits/influence.h"
#include "bandits/kernel.h"
#include "bandits/polymatroid.h"
#include "bandits/sideobs.h"
#include "bandits/spectral.h"

namespace bandits::registry {

using nlohmann::json;

void CheckKeys(const json& j, const std::vector<std::string>& allowed,
               const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      std::string names;
      for (const auto& a : allowed) names += (names.empty() ? "" : ", ") + a;
      throw ConfigError(where + ": unknown key '" + item.key() +
                        "' (valid: " + names + ")");
    }
  }
}

namespace {

double Num(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError("'" + key + "' must be a number");
  return j[key].get<double>();
}

double NumRequired(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing '" + key + "'");
  return Num(j, key, 0.0);
}

int Int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) {
    throw ConfigError("'" + key + "' must be an integer");
  }
  return j[key].get<int>();
}

int IntRequired(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing '" + key + "'");
  return Int(j, key, 0);
}

std::string Str(const json& j, const std::string& key,
                const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) throw ConfigError("'" + key + "' must be a string");
  return j[key].get<std::string>();
}

bool Bool(const json& j, const std::string& key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) throw ConfigError("'" + key + "' must be a bool");
  return j[key].get<bool>();
}

std::vector<double> NumList(const json& j, const std::string& key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) throw ConfigError("'" + key + "' must be a list");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw ConfigError("'" + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

[[noreturn]] void BadChoice(const std::string& key, const std::string& value,
                            const std::string& valid) {
  throw ConfigError("unknown " + key + " '" + value + "' (valid: " + valid +
                    ")");
}

RunOutcome FromEpisode(Policy& policy, Environment& env, std::int64_t T,
                       const RngStream& rng) {
  RunOutcome out;
  out.trace = RunEpisode(policy, env, T, rng);
  out.final_regret = out.trace.FinalRegret();
  return out;
}

// ---- side observations ----

const std::vector<std::string> kSideObsKeys = {
    "kind",       "N",        "graph",       "r",     "graph_file",
    "directed",   "loss_mean", "best_mean",  "best",  "script_seed",
    "noise_R",    "noisy",    "script_file"};

std::unique_ptr<SideObservationEnvironment> MakeSideObs(const json& env,
                                                        std::int64_t T) {
  const double noise_R = Num(env, "noise_R", 0.0);
  const bool noisy = Bool(env, "noisy", false);
  if (env.contains("script_file")) {
    const auto rounds = LoadAdversaryScript(Str(env, "script_file", ""));
    if (static_cast<std::int64_t>(rounds.size()) < T) {
      throw ConfigError("sideobs: script has fewer rounds than T");
    }
    return MakeScriptedEnvironment(rounds, noise_R, noisy);
  }
  const int N = IntRequired(env, "N");
  const std::string graph = Str(env, "graph", "empty");
  GraphSource source;
  if (graph == "complete") {
    source = FixedGraph(WeightedDigraph::Complete(N));
  } else if (graph == "empty") {
    source = FixedGraph(WeightedDigraph::Empty(N));
  } else if (graph == "er") {
    source = ErdosRenyiGraphs(N, NumRequired(env, "r"));
  } else if (graph == "file") {
    WeightedDigraph g = ReadEdgeListFile(Str(env, "graph_file", ""),
                                         Bool(env, "directed", true), N);
    source = FixedGraph(std::move(g));
  } else {
    BadChoice("graph", graph, "complete, empty, er, file");
  }
  auto losses = std::make_shared<LossScript>(BernoulliLossScript(
      N, T, Num(env, "loss_mean", 0.5), Num(env, "best_mean", 0.4),
      Int(env, "best", 0),
      static_cast<std::uint64_t>(Int(env, "script_seed", 1))));
  return std::make_unique<SideObservationEnvironment>(
      std::move(losses), std::move(source), noise_R, noisy);
}

PolicyEntry Exp3Entry(Estimator estimator) {
  PolicyEntry e;
  e.environments = {"sideobs"};
  e.keys = {"fixed_eta", "fixed_gamma", "epsilon", "R"};
  e.run = [estimator](const json& env, const json& params, std::int64_t T,
                      const RngStream& rng) {
    auto environment = MakeSideObs(env, T);
    Exp3Config c;
    c.estimator = estimator;
    c.R = Num(params, "R", Num(env, "noise_R", 0.0));
    c.epsilon = Num(params, "epsilon", -1.0);
    c.fixed_eta = Num(params, "fixed_eta", 0.0);
    c.fixed_gamma = Num(params, "fixed_gamma", -1.0);
    Exp3Policy policy(environment->num_actions(), c);
    return FromEpisode(policy, *environment, T, rng);
  };
  return e;
}

PolicyEntry FplIxEntry() {
  PolicyEntry e;
  e.environments = {"sideobs"};
  e.keys = {"delta", "fixed_rate", "alpha_estimate"};
  e.run = [](const json& env, const json& params, std::int64_t T,
             const RngStream& rng) {
    auto environment = MakeSideObs(env, T);
    FplConfig c;
    c.delta = Num(params, "delta", c.delta);
    c.fixed_rate = Num(params, "fixed_rate", 0.0);
    c.alpha_estimate = Num(params, "alpha_estimate", 0.0);
    FplIxPolicy policy(environment->num_actions(), c);
    return FromEpisode(policy, *environment, T, rng);
  };
  return e;
}

// ---- spectral ----

const std::vector<std::string> kSpectralKeys = {
    "kind",   "graph", "d",     "M",      "eps",   "graph_file",
    "reward", "low",   "high",  "values", "noise", "lambda"};

struct SpectralProblem {
  SpectralModel model;
  std::vector<double> means;
  double noise = 0.0;
};

SpectralProblem MakeSpectral(const json& env) {
  const std::string graph = Str(env, "graph", "lower-bound");
  std::unique_ptr<WeightedDigraph> g;
  int d = 0;
  int M = 0;
  if (graph == "lower-bound") {
    d = IntRequired(env, "d");
    M = IntRequired(env, "M");
    g = std::make_unique<WeightedDigraph>(
        LowerBoundGraph(d, M, Num(env, "eps", 0.001)));
  } else if (graph == "file") {
    g = std::make_unique<WeightedDigraph>(
        ReadEdgeListFile(Str(env, "graph_file", ""), /*directed=*/false));
  } else {
    BadChoice("graph", graph, "lower-bound, file");
  }
  SpectralProblem p;
  p.model = SpectralModel::FromGraph(*g, Num(env, "lambda", 0.01));
  const std::string reward = Str(env, "reward", "block");
  if (reward == "block") {
    if (graph != "lower-bound") {
      throw ConfigError("spectral: block reward needs the lower-bound graph");
    }
    p.means = BlockReward(d, M, Num(env, "low", 0.3), Num(env, "high", 0.7));
  } else if (reward == "values") {
    p.means = NumList(env, "values");
    if (static_cast<int>(p.means.size()) != g->n()) {
      throw ConfigError("spectral: need one value per node");
    }
  } else {
    BadChoice("reward", reward, "block, values");
  }
  p.noise = Num(env, "noise", 0.1);
  if (!(p.noise >= 0.0)) throw ConfigError("spectral: noise must be >= 0");
  return p;
}

SpectralConfig SpectralConfigFrom(const json& env, const json& params,
                                  std::int64_t T) {
  SpectralConfig c;
  c.lambda = Num(env, "lambda", 0.01);
  c.R = Num(params, "R", Num(env, "noise", 0.1));
  c.C = Num(params, "C", c.C);
  c.delta = Num(params, "delta", c.delta);
  c.d = Int(params, "d", 0);
  c.horizon = T;
  const std::string schedule = Str(params, "c_schedule", "constant");
  if (schedule == "constant") {
    c.c_schedule = CSchedule::kConstant;
  } else if (schedule == "log") {
    c.c_schedule = CSchedule::kLogT;
  } else {
    BadChoice("c_schedule", schedule, "constant, log");
  }
  return c;
}

// ---- kernel ----

const std::vector<std::string> kContextKeys = {
    "kind", "arms_file", "N", "dim", "arms_seed", "theta", "theta_seed",
    "noise_sd"};

struct ContextProblem {
  Eigen::MatrixXd arms;
  Eigen::VectorXd theta;
  double noise_sd = 0.0;
};

Eigen::VectorXd UnitNormal(int dim, RngStream& rng) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.Normal();
  const double norm = v.norm();
  return norm > 0.0 ? Eigen::VectorXd(v / norm) : v;
}

ContextProblem MakeContexts(const json& env) {
  ContextProblem p;
  if (env.contains("arms_file")) {
    p.arms = ReadContextsCsvFile(Str(env, "arms_file", ""));
  } else {
    const int N = IntRequired(env, "N");
    const int dim = IntRequired(env, "dim");
    if (N < 1 || dim < 1) throw ConfigError("contexts: N, dim must be >= 1");
    RngStream rng(static_cast<std::uint64_t>(Int(env, "arms_seed", 1)),
                  "contexts/arms");
    p.arms.resize(N, dim);
    for (int i = 0; i < N; ++i) p.arms.row(i) = UnitNormal(dim, rng);
  }
  const int dim = static_cast<int>(p.arms.cols());
  const std::vector<double> theta = NumList(env, "theta");
  if (!theta.empty()) {
    if (static_cast<int>(theta.size()) != dim) {
      throw ConfigError("contexts: theta length differs from arm dimension");
    }
    p.theta = Eigen::Map<const Eigen::VectorXd>(theta.data(), dim);
  } else {
    RngStream rng(static_cast<std::uint64_t>(Int(env, "theta_seed", 2)),
                  "contexts/theta");
    p.theta = UnitNormal(dim, rng);
  }
  p.noise_sd = Num(env, "noise_sd", 0.1);
  if (!(p.noise_sd >= 0.0)) throw ConfigError("contexts: noise_sd < 0");
  return p;
}

KernelFn KernelFrom(const json& params) {
  const std::string kind = Str(params, "kernel", "linear");
  if (kind == "linear") return KernelFn::Linear();
  if (kind == "rbf") return KernelFn::Rbf(Num(params, "sigma", 1.0));
  if (kind == "polynomial") {
    return KernelFn::Polynomial(Int(params, "degree", 2));
  }
  BadChoice("kernel", kind, "linear, rbf, polynomial");
}

// ---- polymatroid ----

PolymatroidInstance MakePolymatroid(const json& env) {
  if (env.contains("instance_file")) {
    return LoadPolymatroidInstance(Str(env, "instance_file", ""));
  }
  if (!env.contains("instance")) {
    throw ConfigError("polymatroid: need 'instance' or 'instance_file'");
  }
  return ParsePolymatroidInstance(env["instance"].dump());
}

// ---- functions ----

const std::vector<std::string> kFunctionKeys = {
    "kind", "function", "noise", "b", "command", "dim", "f_star"};

struct FunctionProblem {
  Box domain = UnitBox(1);
  // Noise-free values when known.
  std::function<double(const Point&)> clean;
  double f_star = 0.0;
  std::shared_ptr<ProcessOracle> oracle;
  NoiseModel noise;
};

FunctionProblem MakeFunction(const json& env, bool start_process) {
  FunctionProblem p;
  const std::string noise = Str(env, "noise", "none");
  if (noise == "none") {
    p.noise.kind = NoiseKind::kNone;
  } else if (noise == "uniform") {
    p.noise.kind = NoiseKind::kUniform;
    p.noise.b = NumRequired(env, "b");
  } else if (noise == "bernoulli") {
    p.noise.kind = NoiseKind::kBernoulli;
  } else {
    BadChoice("noise", noise, "none, uniform, bernoulli");
  }
  if (env.contains("command")) {
    if (env.contains("function")) {
      throw ConfigError("function: give either 'function' or 'command'");
    }
    p.domain = UnitBox(Int(env, "dim", 1));
    p.f_star = NumRequired(env, "f_star");
    if (start_process) {
      p.oracle = std::make_shared<ProcessOracle>(Str(env, "command", ""));
    }
    return p;
  }
  const TestFunction tf = LookupTestFunction(Str(env, "function", "difficult"));
  p.domain = tf.domain;
  p.clean = tf.f;
  p.f_star = tf.f_star;
  return p;
}

RunOutcome FromOptimization(const FunctionProblem& p,
                            const OptimizationResult& r) {
  RunOutcome out;
  out.trace.objective = Objective::kReward;
  out.trace.comparator = Comparator::kBestMean;
  double cum = 0.0;
  for (std::size_t i = 0; i < r.evaluated.size(); ++i) {
    const double value = p.clean ? p.clean(r.evaluated[i]) : r.rewards[i];
    cum += p.f_star - value;
    out.trace.rounds.push_back(
        {static_cast<std::int64_t>(i + 1), -1, r.rewards[i], cum});
  }
  const double rec =
      p.clean ? p.clean(r.recommendation) : (*p.oracle)(r.recommendation);
  out.final_regret = p.f_star - rec;
  return out;
}

template <typename Optimizer>
PolicyEntry FunctionEntry(std::vector<std::string> keys, Optimizer optimize) {
  PolicyEntry e;
  e.environments = {"function"};
  e.keys = std::move(keys);
  e.run = [optimize](const json& env, const json& params, std::int64_t T,
                     const RngStream& rng) {
    FunctionProblem p = MakeFunction(env, /*start_process=*/true);
    RngStream noise_rng = rng.Split("noise");
    RngStream policy_rng = rng.Split("policy");
    std::function<double(const Point&)> base = p.clean;
    if (p.oracle) {
      auto oracle = p.oracle;
      base = [oracle](const Point& x) { return (*oracle)(x); };
    }
    const Evaluator f = MakeNoisy(base, p.noise, &noise_rng);
    return FromOptimization(p,
                            optimize(f, p.domain, params, T, policy_rng));
  };
  return e;
}

// ---- reservoirs ----

const std::vector<std::string> kReservoirKeys = {
    "kind", "reservoir", "beta", "mu_star", "noise", "means"};

Reservoir MakeReservoir(const json& env) {
  const std::string kind = Str(env, "reservoir", "canonical");
  const double noise = Num(env, "noise", 0.5);
  if (kind == "canonical") {
    return CanonicalReservoir(Num(env, "beta", 1.0), Num(env, "mu_star", 0.5),
                              noise);
  }
  if (kind == "point") {
    return PointMassReservoir(Num(env, "mu_star", 0.5), noise);
  }
  if (kind == "discrete") {
    return DiscreteReservoir(NumList(env, "means"), noise);
  }
  BadChoice("reservoir", kind, "canonical, point, discrete");
}

RunOutcome FromSiri(const Reservoir& reservoir, const SiriResult& r,
                    std::int64_t T) {
  // One row per pull batch: the initial single pulls, then each doubling.
  RunOutcome out;
  out.trace.objective = Objective::kReward;
  out.trace.comparator = Comparator::kBestMean;
  const int K = static_cast<int>(r.means.size());
  std::vector<std::int64_t> pulls(K, 0);
  std::int64_t t = 0;
  double cum = 0.0;
  auto add = [&](int k, std::int64_t batch) {
    pulls[k] += batch;
    t += batch;
    cum += batch * (reservoir.mu_star() - r.means[k]);
    out.trace.rounds.push_back({t, k, r.empirical_means[k], cum});
  };
  for (int k = 0; k < K; ++k) add(k, 1);
  for (int k : r.rounds) add(k, std::min(pulls[k], T - t));
  if (pulls != r.pulls) throw InvariantError("SiRI trace: pull mismatch");
  out.final_regret = r.simple_regret;
  return out;
}

// ---- influence ----

const std::vector<std::string> kInfluenceKeys = {
    "kind", "matrix", "n", "to_hub", "from_hub", "self", "matrix_file",
    "directed"};

InfluenceMatrix MakeInfluence(const json& env) {
  const std::string kind = Str(env, "matrix", "star");
  if (kind == "star") {
    return StarInfluence(IntRequired(env, "n"), Num(env, "to_hub", 1.0),
                         Num(env, "from_hub", 1.0), Num(env, "self", 1.0));
  }
  if (kind == "pairs") return PairsInfluence(IntRequired(env, "n"));
  if (kind == "csv") return ReadInfluenceCsvFile(Str(env, "matrix_file", ""));
  if (kind == "edges") {
    return InfluenceFromGraph(
        ReadEdgeListFile(Str(env, "matrix_file", ""),
                         Bool(env, "directed", true), Int(env, "n", -1)),
        Num(env, "self", 0.0));
  }
  BadChoice("matrix", kind, "star, pairs, csv, edges");
}

// ---- generic baselines over any Environment ----

std::unique_ptr<Environment> MakeEnvironment(const json& env,
                                             std::int64_t T) {
  const std::string kind = Str(env, "kind", "");
  if (kind == "sideobs") return MakeSideObs(env, T);
  if (kind == "spectral") {
    SpectralProblem p = MakeSpectral(env);
    return std::make_unique<SmoothRewardEnvironment>(p.means, p.noise);
  }
  if (kind == "contexts") {
    ContextProblem p = MakeContexts(env);
    return std::make_unique<ContextArmEnvironment>(
        ContextArmEnvironment::Linear(p.arms, p.theta, p.noise_sd));
  }
  if (kind == "influence") {
    return std::make_unique<InfluenceEnvironment>(MakeInfluence(env));
  }
  throw ConfigError("no generic environment for kind '" + kind + "'");
}

const std::vector<std::string> kGenericKinds = {"contexts", "influence",
                                                "sideobs", "spectral"};

}  // namespace

const std::map<std::string, EnvironmentEntry>& Environments() {
  static const auto* entries = new std::map<std::string, EnvironmentEntry>{
      {"sideobs",
       {kSideObsKeys,
        [](const json& env, std::int64_t T) { MakeSideObs(env, T); }}},
      {"spectral",
       {kSpectralKeys,
        [](const json& env, std::int64_t) { MakeSpectral(env); }}},
      {"contexts",
       {kContextKeys,
        [](const json& env, std::int64_t) { MakeContexts(env); }}},
      {"polymatroid",
       {{"kind", "instance", "instance_file"},
        [](const json& env, std::int64_t) { MakePolymatroid(env); }}},
      {"function",
       {kFunctionKeys,
        [](const json& env, std::int64_t) {
          MakeFunction(env, /*start_process=*/false);
        }}},
      {"reservoir",
       {kReservoirKeys,
        [](const json& env, std::int64_t) { MakeReservoir(env); }}},
      {"influence",
       {kInfluenceKeys,
        [](const json& env, std::int64_t) { MakeInfluence(env); }}},
  };
  return *entries;
}

const std::map<std::string, PolicyEntry>& Policies() {
  static const auto* entries = [] {
    auto* m = new std::map<std::string, PolicyEntry>();
    (*m)["exp3ix"] = Exp3Entry(Estimator::kIx);
    (*m)["exp3set"] = Exp3Entry(Estimator::kSet);
    (*m)["exp3wix"] = Exp3Entry(Estimator::kWix);
    (*m)["exp3ixt"] = Exp3Entry(Estimator::kIxt);
    (*m)["exp3basic"] = Exp3Entry(Estimator::kBasic);
    (*m)["exp3res"] = Exp3Entry(Estimator::kRes);
    (*m)["fplix"] = FplIxEntry();

    PolicyEntry ucb;
    ucb.environments = {"spectral"};
    ucb.keys = {"R", "C", "delta", "d", "c_schedule"};
    ucb.run = [](const json& env, const json& params, std::int64_t T,
                 const RngStream& rng) {
      SpectralProblem p = MakeSpectral(env);
      SpectralUcbPolicy policy(p.model, SpectralConfigFrom(env, params, T));
      SmoothRewardEnvironment e(p.means, p.noise);
      return FromEpisode(policy, e, T, rng);
    };
    (*m)["spectralucb"] = ucb;

    PolicyEntry ts = ucb;
    ts.keys.push_back("v");
    ts.run = [](const json& env, const json& params, std::int64_t T,
                const RngStream& rng) {
      SpectralProblem p = MakeSpectral(env);
      SpectralTsPolicy policy(p.model, SpectralConfigFrom(env, params, T),
                              Num(params, "v", -1.0));
      SmoothRewardEnvironment e(p.means, p.noise);
      return FromEpisode(policy, e, T, rng);
    };
    (*m)["spectralts"] = ts;

    PolicyEntry elim = ucb;
    elim.keys.push_back("beta");
    elim.run = [](const json& env, const json& params, std::int64_t T,
                  const RngStream& rng) {
      SpectralProblem p = MakeSpectral(env);
      const SpectralConfig c = SpectralConfigFrom(env, params, T);
      const int d =
          c.d > 0 ? c.d
                  : EffectiveDimension(p.model.RegularizedEigenvalues(),
                                       static_cast<double>(T), c.lambda);
      auto policy = SpectralEliminatorPolicy::FromModel(
          p.model, Num(params, "beta", SpectralBeta(c, d, T)));
      SmoothRewardEnvironment e(p.means, p.noise);
      RunOutcome out;
      out.trace = SpectralEliminatorRun(policy, e, T, rng).trace;
      out.final_regret = out.trace.FinalRegret();
      return out;
    };
    (*m)["spectraleliminator"] = elim;

    PolicyEntry kernel;
    kernel.environments = {"contexts"};
    kernel.keys = {"kernel", "sigma", "degree", "gamma", "eta"};
    kernel.run = [](const json& env, const json& params, std::int64_t T,
                    const RngStream& rng) {
      ContextProblem p = MakeContexts(env);
      KernelUcbConfig c;
      c.gamma = Num(params, "gamma", c.gamma);
      c.eta = Num(params, "eta", c.eta);
      KernelUcbPolicy policy(p.arms, KernelFrom(params), c);
      auto e = ContextArmEnvironment::Linear(p.arms, p.theta, p.noise_sd);
      return FromEpisode(policy, e, T, rng);
    };
    (*m)["kernelucb"] = kernel;

    PolicyEntry opm;
    opm.environments = {"polymatroid"};
    opm.keys = {"episode_init"};
    opm.run = [](const json& env, const json& params, std::int64_t T,
                 const RngStream& rng) {
      const PolymatroidInstance inst = MakePolymatroid(env);
      OpmConfig c;
      c.episode_init = Bool(params, "episode_init", false);
      RunOutcome out;
      out.trace = RunOpm(inst.M, inst.means, inst.minimize, T, rng, c);
      out.final_regret = out.trace.FinalRegret();
      return out;
    };
    (*m)["opm"] = opm;

    (*m)["hoo"] = FunctionEntry(
        {"nu", "rho", "K"},
        [](const Evaluator& f, const Box& domain, const json& params,
           std::int64_t T, RngStream& rng) {
          SmoothnessParams s;
          s.nu = Num(params, "nu", s.nu);
          s.rho = Num(params, "rho", s.rho);
          return RunHoo(f, domain, Int(params, "K", 2), s, T, rng);
        });
    (*m)["stosoo"] = FunctionEntry(
        {"k", "delta", "h_max", "K"},
        [](const Evaluator& f, const Box& domain, const json& params,
           std::int64_t T, RngStream&) {
          StoSooConfig c;
          c.k = Num(params, "k", 0.0);
          c.delta = Num(params, "delta", 0.0);
          c.h_max = Int(params, "h_max", 0);
          return RunStoSoo(f, domain, Int(params, "K", 3), T, c).result;
        });
    (*m)["poo"] = FunctionEntry(
        {"rho_max", "nu_max", "K"},
        [](const Evaluator& f, const Box& domain, const json& params,
           std::int64_t T, RngStream& rng) {
          return RunPoo(f, domain, Int(params, "K", 2), T,
                        Num(params, "rho_max", 0.9),
                        Num(params, "nu_max", 1.0), rng)
              .result;
        });

    PolicyEntry siri;
    siri.environments = {"reservoir"};
    siri.keys = {"C", "delta", "A", "beta"};
    siri.run = [](const json& env, const json& params, std::int64_t T,
                  const RngStream& rng) {
      const Reservoir reservoir = MakeReservoir(env);
      SiriConfig c;
      c.beta = Num(params, "beta", Num(env, "beta", c.beta));
      c.C = Num(params, "C", reservoir.bound());
      c.delta = Num(params, "delta", c.delta);
      c.A = Num(params, "A", c.A);
      c.T = T;
      RngStream r = rng.Split("siri");
      return FromSiri(reservoir, SiriRun(reservoir, c, r), T);
    };
    (*m)["siri"] = siri;

    PolicyEntry bare;
    bare.environments = {"influence"};
    bare.run = [](const json& env, const json&, std::int64_t T,
                  const RngStream& rng) {
      InfluenceEnvironment e(MakeInfluence(env));
      BarePolicy policy(e.num_actions(), T);
      return FromEpisode(policy, e, T, rng);
    };
    (*m)["bare"] = bare;

    PolicyEntry uniform;
    uniform.environments = kGenericKinds;
    uniform.run = [](const json& env, const json&, std::int64_t T,
                     const RngStream& rng) {
      auto e = MakeEnvironment(env, T);
      UniformPolicy policy(e->num_actions());
      return FromEpisode(policy, *e, T, rng);
    };
    (*m)["uniform"] = uniform;

    PolicyEntry ucb1;
    ucb1.environments = kGenericKinds;
    ucb1.keys = {"scale"};
    ucb1.run = [](const json& env, const json& params, std::int64_t T,
                  const RngStream& rng) {
      auto e = MakeEnvironment(env, T);
      const double fallback =
          Str(env, "kind", "") == "influence" ? e->num_actions() : 1.0;
      Ucb1Policy policy(e->num_actions(), e->objective(),
                        Num(params, "scale", fallback));
      return FromEpisode(policy, *e, T, rng);
    };
    (*m)["ucb1"] = ucb1;
    return m;
  }();
  return *entries;
}

}  // namespace bandits::registry
