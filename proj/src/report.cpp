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


#include "fewweight/report.hpp"

namespace fewweight {

using nlohmann::json;

json pairs_json(const WeightPairs& pairs) {
  json a = json::array();
  for (const auto& [w, c] : pairs) a.push_back({w, c});
  return a;
}

json to_json(const CodeSpec& s) {
  return {{"q", s.q}, {"m", s.m}, {"e", s.e}, {"u", s.u}, {"v", s.v}, {"set", to_string(s.variant)}};
}

json to_json(const WeightEnumerator& en) {
  return {{"n", en.n},
          {"k", en.k},
          {"d", en.d},
          {"weight_count", en.pairs.size()},
          {"enumerator", pairs_json(en.pairs)}};
}

json to_json(const Prediction& p) {
  json h = json::array();
  for (const auto& x : p.hypotheses) h.push_back({{"name", x.name}, {"holds", x.holds}});
  json j = {{"applicable", p.applicable}, {"hypotheses", h}, {"flags", p.flags}};
  if (!p.applicable) {
    j["reason"] = p.reason;
    return j;
  }
  j["source"] = p.source;
  j["n"] = p.n;
  j["k"] = p.k;
  j["d"] = p.d;
  j["enumerator"] = pairs_json(p.pairs);
  j["moments_ok"] = p.moments_ok;
  return j;
}

json to_json(const GriesmerReport& g) {
  return {{"bound_length", g.bound_length},
          {"bound_d_plus_1", g.bound_d1},
          {"bound_d_plus_2", g.bound_d2},
          {"classification", g.classification},
          {"meets_equality", g.meets_equality},
          {"witness", g.witness}};
}

json to_json(const Report& r) {
  json mm = json::array();
  for (const auto& m : r.mismatches) {
    json x = {{"field", m.field}, {"predicted", m.predicted}, {"computed", m.computed}};
    if (m.field == "A_w") x["weight"] = m.weight;
    mm.push_back(x);
  }
  json j = {{"spec", to_json(r.spec)},
            {"applicable", r.predicted.applicable},
            {"source", r.predicted.applicable ? json(r.predicted.source) : json(nullptr)},
            {"predicted", to_json(r.predicted)},
            {"computed", to_json(r.computed)},
            {"method", r.method},
            {"pless_ok", r.pless_ok},
            {"match", r.predicted.applicable ? json(r.match) : json(nullptr)},
            {"mismatches", mm},
            {"griesmer", r.griesmer ? to_json(*r.griesmer) : json(nullptr)}};
  return j;
}

json to_json(const CycInt& c) {
  json j = {{"p", c.prime()}, {"coefficients", std::vector<std::int64_t>(c.coeffs().begin(), c.coeffs().end())}};
  if (auto v = c.as_integer()) j["integer"] = *v;
  return j;
}

}  // namespace fewweight
