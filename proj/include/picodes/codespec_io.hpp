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

#ifndef PICODES_CODESPEC_IO_HPP
#define PICODES_CODESPEC_IO_HPP

#include <string>

#include <json.hpp>

#include "picodes/oracle.hpp"
#include "picodes/synthesis.hpp"

namespace picodes {

using Json = nlohmann::ordered_json;

Json to_json(const CodeSpec& spec);
Json to_json(const SynthesisFailure& failure);
Json to_json(const VerificationReport& report);

/// Throws std::invalid_argument when required fields are missing or
/// malformed.
CodeSpec codespec_from_json(const Json& json);

/// Rows "label,x,zero_weight,one_weight" with exact rational strings.
std::string to_csv(const CodeSpec& spec);

/// Matrix rows labeled by their error partition, exact rational entries.
std::string dump_matrix(const ConstraintMatrix& m);

/// Fixed 15-significant-digit decimal.
std::string format_real(double value);

}  // namespace picodes

#endif  // PICODES_CODESPEC_IO_HPP
