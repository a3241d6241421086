// model/config.cc

// Copyright 2026  The asp-lab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "asplab/model/config.h"

#include <cmath>
#include <cstdio>

#include "asplab/data/manifest.h"
#include "asplab/error.h"
#include "asplab/rng.h"

namespace asplab {

using nlohmann::json;

void ExperimentConfig::Validate() const {
  if (!IsDescriptor(descriptor))
    throw ConfigError("descriptor", "unknown descriptor '" + descriptor + "'");
  if (mode.UsesLayerIndex() && mode.layer < 1)
    throw ConfigError("layer", "layer index is 1-based and must be >= 1");
  if (mode.UsesAsp() && heads < 1) throw ConfigError("heads", "must be >= 1");
  if (!(eps_var > 0.0)) throw ConfigError("eps_var", "must be > 0");
  if (!(lr > 0.0) || !std::isfinite(lr)) throw ConfigError("lr", "must be > 0");
  if (batch_size < 1) throw ConfigError("batch_size", "must be >= 1");
  if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ConfigError("beta1", "must be in [0, 1)");
  if (!(beta2 >= 0.0 && beta2 < 1.0)) throw ConfigError("beta2", "must be in [0, 1)");
  if (!(adam_eps > 0.0)) throw ConfigError("adam_eps", "must be > 0");
  if (patience < 1) throw ConfigError("patience", "must be >= 1");
  if (max_epochs < 1) throw ConfigError("max_epochs", "must be >= 1");
  for (std::size_t h : hidden_sizes)
    if (h < 1) throw ConfigError("hidden_sizes", "layer widths must be >= 1");
}

json ExperimentConfig::ToJson() const {
  json j;
  j["descriptor"] = descriptor;
  j["mode"] = ModeName(mode.kind);
  j["layer"] = mode.layer;
  j["heads"] = heads;
  j["global_context"] = global_context;
  j["eps_var"] = eps_var;
  j["lr"] = lr;
  j["batch_size"] = batch_size;
  j["beta1"] = beta1;
  j["beta2"] = beta2;
  j["adam_eps"] = adam_eps;
  j["patience"] = patience;
  j["max_epochs"] = max_epochs;
  j["seed"] = seed;
  j["hidden_sizes"] = hidden_sizes;
  return j;
}

namespace {

template <typename T>
void Take(const json &j, const char *key, T *out) {
  if (!j.contains(key)) return;
  try {
    if constexpr (std::is_unsigned_v<T> && std::is_integral_v<T>) {
      if (j[key].is_number_integer() && j[key].template get<long long>() < 0)
        throw ConfigError(key, "must be non-negative");
    }
    *out = j[key].template get<T>();
  } catch (const json::exception &e) {
    throw ConfigError(key, std::string("invalid value: ") + e.what());
  }
}

}  // namespace

void ExperimentConfig::MergeJson(const json &j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  static const char *kKnown[] = {"descriptor", "mode",       "layer",      "heads",
                                 "global_context", "eps_var", "lr",        "batch_size",
                                 "beta1",      "beta2",      "adam_eps",   "patience",
                                 "max_epochs", "seed",       "hidden_sizes"};
  for (const auto &[key, value] : j.items()) {
    bool known = false;
    for (const char *k : kKnown) known = known || key == k;
    if (!known) throw ConfigError(key, "unknown config field");
  }
  Take(j, "descriptor", &descriptor);
  if (j.contains("mode")) {
    std::string name;
    Take(j, "mode", &name);
    mode.kind = ParseModeKind(name);
  }
  Take(j, "layer", &mode.layer);
  Take(j, "heads", &heads);
  Take(j, "global_context", &global_context);
  Take(j, "eps_var", &eps_var);
  Take(j, "lr", &lr);
  Take(j, "batch_size", &batch_size);
  Take(j, "beta1", &beta1);
  Take(j, "beta2", &beta2);
  Take(j, "adam_eps", &adam_eps);
  Take(j, "patience", &patience);
  Take(j, "max_epochs", &max_epochs);
  Take(j, "seed", &seed);
  Take(j, "hidden_sizes", &hidden_sizes);
}

ExperimentConfig ExperimentConfig::FromJson(const json &j) {
  ExperimentConfig c;
  c.MergeJson(j);
  return c;
}

std::string ExperimentConfig::Hash() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(ToJson().dump())));
  return buf;
}

}  // namespace asplab
