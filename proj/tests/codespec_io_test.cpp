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

#include "gtest/gtest.h"
#include "printed_examples.hpp"

namespace picodes {
namespace {

using testing::params_of;
using testing::printed_example;

CodeSpec example_code(int number) { return std::get<CodeSpec>(synthesize(params_of(printed_example(number)))); }

bool same_weights(const std::vector<WeightedLabel>& a, const std::vector<WeightedLabel>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].label != b[i].label || a[i].weight != b[i].weight) return false;
  }
  return true;
}

TEST(codespec_io, field_order) {
  const Json j = to_json(example_code(2));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"t", "w", "u", "n", "N", "basis", "x", "zero_weights", "one_weights",
                                            "distance", "nullity"}));
  EXPECT_EQ(j["x"], Json({"2", "-5", "3"}));
  EXPECT_EQ(j["zero_weights"]["6,0,0,0,0,0"], "2/5");
  EXPECT_EQ(j["zero_weights"]["1,1,1,1,1,1"], "3/5");
  EXPECT_EQ(j["one_weights"]["3,3,0,0,0,0"], "1");
}

TEST(codespec_io, round_trip) {
  for (int number : {1, 2, 3, 4, 5, 6}) {
    const CodeSpec original = example_code(number);
    const std::string text = to_json(original).dump(2);
    const CodeSpec back = codespec_from_json(Json::parse(text));
    EXPECT_EQ(back.params.t, original.params.t);
    EXPECT_EQ(back.params.w, original.params.w);
    EXPECT_EQ(back.params.u, original.params.u);
    EXPECT_EQ(back.basis.labels, original.basis.labels);
    EXPECT_EQ(back.x, original.x);
    EXPECT_TRUE(same_weights(back.zero_weights, original.zero_weights));
    EXPECT_TRUE(same_weights(back.one_weights, original.one_weights));
    EXPECT_EQ(back.distance, original.distance);
    EXPECT_EQ(back.nullity, original.nullity);
    // Byte stable.
    EXPECT_EQ(to_json(back).dump(2), text);
  }
}

TEST(codespec_io, rejects_malformed) {
  const Json good = to_json(example_code(1));
  Json missing = good;
  missing.erase("x");
  EXPECT_THROW(codespec_from_json(missing), std::invalid_argument);

  Json wrong_n = good;
  wrong_n["N"] = 4;
  EXPECT_THROW(codespec_from_json(wrong_n), std::invalid_argument);

  Json short_label = good;
  short_label["basis"][0] = Json::array({3, 0});
  EXPECT_THROW(codespec_from_json(short_label), std::invalid_argument);

  Json bad_weight = good;
  bad_weight["zero_weights"]["1,1,1"] = "1/0";
  EXPECT_THROW(codespec_from_json(bad_weight), std::invalid_argument);

  Json typed = good;
  typed["t"] = "one";
  EXPECT_THROW(codespec_from_json(typed), std::invalid_argument);

  EXPECT_THROW(codespec_from_json(Json::array()), std::invalid_argument);
}

TEST(codespec_io, failure_json) {
  const SynthesisFailure f{SynthesisFailure::Reason::nullity, 6, 5, 0};
  EXPECT_EQ(to_json(f).dump(), R"({"status":"failure","reason":"nullity","distance":6,"required_distance":5,"nullity":0})");
}

TEST(codespec_io, report_json) {
  VerificationReport r;
  r.scope = Scope::partition_reduced;
  r.gamma = 0.1;
  r.pairs_checked = 9;
  r.max_ortho_violation = 1e-17;
  r.nondegenerate = true;
  const Json j = to_json(r);
  EXPECT_EQ(j["scope"], "partition-reduced");
  EXPECT_EQ(j["max_violation"]["ortho"], 1e-17);
  EXPECT_EQ(j["pairs_checked"], 9);
  EXPECT_FALSE(j["permutation_invariant"].get<bool>());
}

TEST(codespec_io, csv_and_matrix_dump) {
  EXPECT_EQ(to_csv(example_code(2)),
            "label,x,zero_weight,one_weight\n"
            "\"6,0,0,0,0,0\",2,2/5,0\n"
            "\"3,3,0,0,0,0\",-5,0,1\n"
            "\"1,1,1,1,1,1\",3,3/5,0\n");
  EXPECT_EQ(dump_matrix(build_matrix(params_of(printed_example(2)))),
            "tau,\"6,0,0,0,0,0\",\"3,3,0,0,0,0\",\"1,1,1,1,1,1\"\n"
            "\"(1)\",1,1,1\n"
            "\"(2)\",5/2,1,0\n"
            "\"(1,1)\",0,3/5,1\n");
  EXPECT_EQ(format_real(0.98415), "0.98415");
  EXPECT_EQ(format_real(1.0), "1");
}

}  // namespace
}  // namespace picodes
