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


#ifndef FEWWEIGHT_THEORY_HPP
#define FEWWEIGHT_THEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewweight/case_keys.hpp"
#include "fewweight/codes.hpp"
#include "fewweight/gf.hpp"

namespace fewweight {

// #{x in F_{q^m} : Tr(x^{q^e+1}) = u, Tr(x) = v}, x = 0 included.
// Throws OddQuotientUnsupported when m/gcd(m,e) is odd.
std::int64_t closed_form_N(const FieldCtx& ctx, FqIdx u, FqIdx v, unsigned e);

// Length of the E1 code for u = 0.
std::int64_t n_E1(const FieldCtx& ctx, unsigned e);

// #{x : Tr(x^{q^e+1}) + (a1/a2) Tr(x)^2 = 0}, x = 0 included.
std::int64_t lemma_n12_count(const FieldCtx& ctx, FqIdx a1, FqIdx a2, unsigned e);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

using WeightPairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

struct Prediction {
  bool applicable = false;
  std::string reason;  // why not applicable
  std::string source;  // which closed-form table produced the prediction
  std::uint64_t n = 0;
  unsigned k = 0;
  std::uint64_t d = 0;
  WeightPairs pairs;  // merged, zero rows dropped, ascending
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> flags;  // transcription readings that the oracle should watch
  bool moments_ok = false;         // frequency sum and first moment on the table itself
};

Prediction predict(const CodeSpec& spec);

struct GriesmerReport {
  std::uint64_t bound_length = 0;  // g(d) = sum_{i<k} ceil(d / q^i)
  std::uint64_t bound_d1 = 0;      // g(d+1)
  std::uint64_t bound_d2 = 0;      // g(d+2)
  std::string classification;      // optimal | almost_optimal_griesmer | neither
  bool meets_equality = false;
  std::string witness;
};

GriesmerReport griesmer(std::uint64_t q, std::uint64_t n, unsigned k, std::uint64_t d);

// sum A_w = q^k - 1 and sum w A_w = n q^{k-1} (q-1).
bool pless_check(const WeightPairs& pairs, std::uint64_t q, std::uint64_t n, unsigned k);
bool pless_check(const WeightEnumerator& en, std::uint64_t q);

struct Mismatch {
  std::string field;  // n | k | d | A_w
  std::uint64_t weight = 0;
  std::int64_t predicted = 0;
  std::int64_t computed = 0;
};

struct Report {
  CodeSpec spec;
  Prediction predicted;
  WeightEnumerator computed;
  std::string method;
  bool pless_ok = false;
  bool match = false;  // vacuously false when the prediction is not applicable
  std::vector<Mismatch> mismatches;
  std::optional<GriesmerReport> griesmer;
};

// Compares an enumerator against a prediction; never adjusts either side.
std::vector<Mismatch> compare(const Prediction& pred, const WeightEnumerator& en);

Report verify(const FieldCtx& ctx, const CodeSpec& spec, const WeightOptions& opts = {});

}  // namespace fewweight

#endif  // FEWWEIGHT_THEORY_HPP
