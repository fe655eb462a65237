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


#ifndef FEWWEIGHT_CODES_HPP
#define FEWWEIGHT_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewweight/gf.hpp"

namespace fewweight {

enum class Variant { D1, D2, D3, E1, E2 };

std::string to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& s);

struct CodeSpec {
  std::uint64_t q = 3;
  unsigned m = 4;
  unsigned e = 1;
  FqIdx u = 0;
  FqIdx v = 0;
  Variant variant = Variant::D1;
};

std::string to_string(const CodeSpec& s);

struct DefiningSet {
  CodeSpec spec;
  std::vector<Fel> members;  // ascending encoding, 0 never present
};

struct WeightEnumerator {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (weight, A_w), w > 0, ascending
  std::uint64_t n = 0;
  unsigned k = 0;
  std::uint64_t d = 0;  // 0 for the empty / zero code

  bool empty_code() const { return n == 0; }
  std::uint64_t total() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

// Naive weight computation is limited to fields of at most this order.
inline constexpr std::uint64_t kNaiveLimit = 6561;  // 3^8

enum class Method { transform, naive };

struct WeightOptions {
  Method method = Method::transform;
  unsigned jobs = 1;
  bool use_cache = true;  // only consulted when FEWWEIGHT_CACHE_DIR is set
};

// Throws SpecMismatch when q or m of the CodeSpec differ from ctx.
DefiningSet build_set(const FieldCtx& ctx, const CodeSpec& spec);

// (Tr(b d_1), ..., Tr(b d_n)) as F_q indices.
std::vector<FqIdx> codeword(const FieldCtx& ctx, const DefiningSet& set, Fel b);
std::uint64_t codeword_weight(const FieldCtx& ctx, const DefiningSet& set, Fel b);

// Exact character transform of a defining set:
//   F(y) = sum_{x in set} w^{Tr_p(x y)}
// stored as p exponent counts per y, and the per-b weights derived from it.
class CharacterTransform {
 public:
  CharacterTransform(const FieldCtx& ctx, const std::vector<Fel>& members, bool use_cache = true);

  // #{x in set : Tr(bx) = 0}; exact (throws std::logic_error otherwise).
  std::uint64_t zero_count(Fel b) const;
  std::uint64_t weight(Fel b) const { return size_ - zero_count(b); }
  // Weights for every b in ascending order, split over `jobs` threads.
  std::vector<std::uint64_t> all_weights(unsigned jobs = 1) const;
  const std::vector<std::uint32_t>& table() const { return table_; }
  bool loaded_from_cache() const { return from_cache_; }

 private:
  void compute(const std::vector<Fel>& members);
  std::string cache_path(std::uint64_t set_hash) const;
  bool load(const std::string& path, std::uint64_t set_hash);
  void store(const std::string& path, std::uint64_t set_hash) const;

  const FieldCtx* ctx_;
  std::uint64_t size_;
  std::vector<std::uint32_t> table_;  // order * p counts
  std::vector<Fel> zmul_;             // embedded F_q elements
  bool from_cache_ = false;
};

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 1469598103934665603ULL);

// Enumerator from per-b weights (all q^m of them).
WeightEnumerator enumerator_from_weights(const FieldCtx& ctx, std::uint64_t n, const std::vector<std::uint64_t>& w);

WeightEnumerator weight_distribution(const FieldCtx& ctx, const DefiningSet& set, const WeightOptions& opts = {});

struct ClosedWeight {
  std::uint64_t weight = 0;
  bool closed = true;  // false: case not covered, weight came from direct counting
  std::string note;
};

class SumEngine;
// Weight of c_b assembled from the theta / omega / psi closed forms.
ClosedWeight closed_form_weight(const SumEngine& eng, const DefiningSet& set, Fel b);

}  // namespace fewweight

#endif  // FEWWEIGHT_CODES_HPP
