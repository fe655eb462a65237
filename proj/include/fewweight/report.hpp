// Copyright 2026 The fewweight Authors.
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


#ifndef FEWWEIGHT_REPORT_HPP
#define FEWWEIGHT_REPORT_HPP

#include <json.hpp>

#include "fewweight/codes.hpp"
#include "fewweight/cycint.hpp"
#include "fewweight/theory.hpp"

namespace fewweight {

// Bumped whenever a field of any emitted document changes.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const CodeSpec& s);
nlohmann::json to_json(const WeightEnumerator& en);
nlohmann::json to_json(const Prediction& p);
nlohmann::json to_json(const GriesmerReport& g);
nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const CycInt& c);

// [[w, A_w], ...]
nlohmann::json pairs_json(const WeightPairs& pairs);

}  // namespace fewweight

#endif  // FEWWEIGHT_REPORT_HPP
