// Copyright 2026 The picodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "picodes/codespec_io.hpp"

#include <cstdio>
#include <sstream>

namespace picodes {

namespace {

Json weights_json(const std::vector<WeightedLabel>& weights) {
  Json out = Json::object();
  for (const auto& entry : weights) out[occupation_key(entry.label)] = to_string(entry.weight);
  return out;
}

std::vector<WeightedLabel> weights_from_json(const Json& json, int n) {
  if (!json.is_object()) throw std::invalid_argument("weights must be an object");
  std::vector<WeightedLabel> out;
  for (const auto& [key, value] : json.items()) {
    Occupation label = parse_occupation_key(key);
    if (static_cast<int>(label.size()) != n) throw std::invalid_argument("weight label " + key + " has wrong length");
    out.push_back({std::move(label), parse_rational(value.get<std::string>())});
  }
  return out;
}

const Json& require(const Json& json, const char* field) {
  if (!json.contains(field)) throw std::invalid_argument(std::string("missing field '") + field + "'");
  return json.at(field);
}

}  // namespace

Json to_json(const CodeSpec& spec) {
  Json out;
  out["t"] = spec.params.t;
  out["w"] = spec.params.w;
  out["u"] = spec.params.u;
  out["n"] = spec.n();
  out["N"] = spec.total_excitation();
  Json basis = Json::array();
  for (const auto& label : spec.basis.labels) basis.push_back(label);
  out["basis"] = std::move(basis);
  Json x = Json::array();
  for (const auto& entry : spec.x) x.push_back(to_string(entry));
  out["x"] = std::move(x);
  out["zero_weights"] = weights_json(spec.zero_weights);
  out["one_weights"] = weights_json(spec.one_weights);
  out["distance"] = spec.distance;
  out["nullity"] = spec.nullity;
  return out;
}

Json to_json(const SynthesisFailure& failure) {
  Json out;
  out["status"] = "failure";
  out["reason"] = failure.reason_name();
  out["distance"] = failure.distance;
  out["required_distance"] = failure.required_distance;
  out["nullity"] = failure.nullity;
  return out;
}

Json to_json(const VerificationReport& report) {
  Json out;
  out["scope"] = scope_name(report.scope);
  out["gamma"] = report.gamma;
  out["pairs_checked"] = report.pairs_checked;
  out["max_violation"] = {{"nondeform", report.max_nondeformation_violation},
                          {"offdiag", report.max_offdiag_violation},
                          {"ortho", report.max_ortho_violation}};
  out["nondegenerate"] = report.nondegenerate;
  out["permutation_invariant"] = report.permutation_invariant;
  return out;
}

CodeSpec codespec_from_json(const Json& json) {
  try {
    CodeSpec spec;
    spec.params.t = require(json, "t").get<int>();
    spec.params.w = require(json, "w").get<int>();
    spec.params.u = require(json, "u").get<int>();
    spec.basis.n = require(json, "n").get<int>();
    if (require(json, "N").get<int>() != spec.basis.n) throw std::invalid_argument("N must equal n");
    for (const auto& label : require(json, "basis")) {
      spec.basis.labels.push_back(label.get<Occupation>());
      if (static_cast<int>(spec.basis.labels.back().size()) != spec.basis.n) {
        throw std::invalid_argument("basis label has wrong length");
      }
    }
    const auto& x = require(json, "x");
    spec.x = RationalVector(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
      spec.x(static_cast<Eigen::Index>(i)) = parse_rational(x[i].get<std::string>());
    }
    spec.zero_weights = weights_from_json(require(json, "zero_weights"), spec.basis.n);
    spec.one_weights = weights_from_json(require(json, "one_weights"), spec.basis.n);
    spec.distance = require(json, "distance").get<int>();
    spec.nullity = require(json, "nullity").get<int>();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed code spec: ") + e.what());
  }
}

std::string to_csv(const CodeSpec& spec) {
  auto lookup = [](const std::vector<WeightedLabel>& weights, const Occupation& label) -> std::string {
    for (const auto& entry : weights) {
      if (entry.label == label) return to_string(entry.weight);
    }
    return "0";
  };
  std::ostringstream out;
  out << "label,x,zero_weight,one_weight\n";
  for (std::size_t j = 0; j < spec.basis.size(); ++j) {
    const auto& label = spec.basis.labels[j];
    out << '"' << occupation_key(label) << "\"," << to_string(spec.x(static_cast<Eigen::Index>(j))) << ','
        << lookup(spec.zero_weights, label) << ',' << lookup(spec.one_weights, label) << '\n';
  }
  return out.str();
}

std::string dump_matrix(const ConstraintMatrix& m) {
  std::ostringstream out;
  out << "tau";
  for (const auto& label : m.columns.labels) out << ",\"" << occupation_key(label) << '"';
  out << '\n';
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    out << '"' << m.rows[i].partition.to_string() << '"';
    for (Eigen::Index j = 0; j < m.a.cols(); ++j) out << ',' << to_string(m.a(static_cast<Eigen::Index>(i), j));
    out << '\n';
  }
  return out.str();
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

}  // namespace picodes
