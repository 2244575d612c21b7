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

// Reference matrices and nullspace vectors for the six worked
// constructions (Examples 1-6), transcribed verbatim including the Example 5
// rows noted below. Test-only fixture data.

#ifndef PICODES_TESTS_PRINTED_EXAMPLES_HPP
#define PICODES_TESTS_PRINTED_EXAMPLES_HPP

#include <string>
#include <vector>

#include "picodes/synthesis.hpp"

namespace picodes::testing {

using Rows = std::vector<std::vector<std::string>>;

struct PrintedExample {
  std::string name;
  int t;
  int w;
  int u;
  Rows matrix;
  Rows nullspace;  // printed spanning vectors
};

inline SynthesisParams params_of(const PrintedExample& e) {
  SynthesisParams p;
  p.t = e.t;
  p.w = e.w;
  p.u = e.u;
  return p;
}

inline std::vector<PrintedExample> printed_examples() {
  return {
      {"Example 1", 1, 1, 3, {{"1", "1"}}, {{"1", "-1"}}},
      {"Example 2", 2, 2, 3,
       {{"1", "1", "1"}, {"5/2", "1", "0"}, {"0", "3/5", "1"}},
       {{"2/5", "-1", "3/5"}}},
      {"Example 3", 3, 3, 4,
       {{"1", "1", "1", "1"},
        {"11/2", "17/6", "3/2", "0"},
        {"0", "16/33", "8/11", "1"},
        {"55/3", "5", "1", "0"},
        {"0", "40/33", "12/11", "0"},
        {"0", "0", "16/55", "1"}},
       {{"-21/32", "99/32", "-55/16", "1"}}},
      {"Example 4", 4, 4, 5,
       {
        {"1", "1", "1", "1", "1", "1"},
        {"19/2", "23/4", "9/2", "13/4", "2", "0"},
        {"0", "15/38", "10/19", "25/38", "15/19", "1"},
        {"57", "93/4", "12", "7", "2", "0"},
        {"0", "135/76", "45/19", "75/38", "30/19", "0"},
        {"0", "0", "0", "25/114", "25/57", "1"},
        {"969/4", "137/2", "21", "11", "1", "0"},
        {"0", "485/76", "120/19", "75/19", "30/19", "0"},
        {"0", "105/19", "405/38", "100/19", "60/19", "0"},
        {"0", "0", "0", "425/684", "50/57", "0"},
        {"0", "0", "0", "0", "125/969", "1"}},
       {
        {"84/125", "-456/125", "-152/125", "1368/125", "-969/125", "1"}}},
      // Printed row 14 repeats the weight-4 (2,2) row and the (3,1,1) row is
      // absent; kept as printed.
      {"Example 5", 5, 5, 6,
       {
        {"1", "1", "1", "1", "1", "1", "1", "1"},
        {"29/2", "97/10", "73/10", "61/10", "49/10", "37/10", "5/2", "0"},
        {"0", "48/145", "72/145", "84/145", "96/145", "108/145", "24/29", "1"},
        {"406/3", "1022/15", "518/15", "428/15", "46/3", "28/3", "10/3", "0"},
        {"0", "336/145", "504/145", "426/145", "456/145", "378/145", "60/29", "0"},
        {"0", "0", "0", "162/1015", "216/1015", "54/145", "108/203", "1"},
        {"1827/2", "3547/10", "237/2", "103", "67/2", "18", "5/2", "0"},
        {"0", "2104/145", "2292/145", "1792/145", "280/29", "180/29", "80/29", "0"},
        {"0", "276/29", "3366/145", "321/29", "2112/145", "243/29", "150/29", "0"},
        {"0", "0", "0", "729/1015", "972/1015", "1269/1015", "270/203", "0"},
        {"0", "0", "0", "0", "0", "96/1015", "48/203", "1"},
        {"23751/5", "1417", "312", "286", "53", "27", "1", "0"},
        {"0", "10686/145", "1521/29", "1248/29", "606/29", "333/29", "60/29", "0"},
        {"0", "276/29", "3366/145", "321/29", "2112/145", "243/29", "150/29", "0"},
        {"0", "1196/29", "14586/145", "1040/29", "44", "18", "200/29", "0"},
        {"0", "0", "0", "1053/406", "594/145", "1593/406", "675/203", "0"},
        {"0", "0", "0", "0", "0", "312/1015", "120/203", "0"},
        {"0", "0", "0", "0", "0", "0", "144/2639", "1"}},
       {
        {"-21505/31104", "135575/31104", "39875/15552", "-55825/3888", "-25375/2592", "5075/144", "-2639/144", "1"}}},
      {"Example 6", 3, 4, 4,
       {{"1", "1", "1", "1", "1", "1"},
        {"15/2", "9/2", "7/2", "5/2", "3/2", "0"},
        {"0", "2/5", "8/15", "2/3", "4/5", "1"},
        {"35", "14", "7", "4", "1", "0"},
        {"0", "7/5", "28/15", "23/15", "6/5", "0"},
        {"0", "0", "0", "8/35", "16/35", "1"}},
       {{"-17/12", "115/24", "0", "-35/8", "0", "1"},
        {"-1/3", "4/3", "0", "-2", "1", "0"},
        {"1/3", "-4/3", "1", "0", "0", "0"}}},
  };
}

inline const PrintedExample& printed_example(int number) {
  static const auto all = printed_examples();
  return all.at(static_cast<std::size_t>(number - 1));
}

}  // namespace picodes::testing

#endif  // PICODES_TESTS_PRINTED_EXAMPLES_HPP
