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


#ifndef FEWWEIGHT_GF_HPP
#define FEWWEIGHT_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fewweight/cycint.hpp"

namespace fewweight {

// Element of F_{q^m}: base-p little-endian evaluation of its coordinates in
// the polynomial basis 1, X, ..., X^{n-1} (n = s*m).
using Fel = std::uint32_t;
// Element of F_q in the public encoding: base-p digits d_j against the basis
// 1, r, ..., r^{s-1}, r a root of subfield_modulus() (the degree-s Conway
// polynomial when tabulated). The encoding does not depend on m.
using FqIdx = std::uint32_t;

// Largest field order accepted by build_tower (3^16 < 2^26).
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 26;
// Up to this order multiplication goes through log/antilog tables.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

enum class Level { big, small };

enum class ModulusChoice { conway, smallest, given };

struct TowerOptions {
  ModulusChoice modulus = ModulusChoice::conway;
  std::vector<unsigned> given_modulus;  // used with ModulusChoice::given
};

bool is_prime(std::uint64_t n);
// (p, s) with q = p^s, or nullopt if q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
const std::vector<unsigned>* conway_polynomial(unsigned p, unsigned n);
bool is_irreducible(const std::vector<unsigned>& f, unsigned p);
// Lexicographically smallest monic irreducible of degree n.
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned n);

class FieldCtx {
 public:
  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned m() const { return m_; }
  unsigned ell() const { return m_ / 2; }
  unsigned degree() const { return n_; }  // s*m
  std::uint64_t q() const { return q_; }
  std::uint64_t order() const { return order_; }  // q^m
  unsigned m_p() const { return m_ % p_; }

  const std::vector<unsigned>& modulus() const { return modulus_; }
  const std::string& modulus_source() const { return modulus_source_; }
  const std::vector<unsigned>& subfield_modulus() const { return sub_modulus_; }
  Fel generator() const { return gen_; }
  bool has_tables() const { return !exp_.empty(); }

  std::vector<unsigned> digits(Fel x) const;
  Fel from_digits(const std::vector<unsigned>& d) const;

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel scale(unsigned c, Fel a) const;  // c in F_p
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, std::uint64_t k) const;
  Fel frob(Fel a, unsigned k) const;  // a^{p^k}
  Fel frob_q(Fel a, unsigned e) const { return frob(a, s_ * e); }  // a^{q^e}

  // Discrete log base the generator; requires tables and a != 0.
  std::uint32_t log(Fel a) const;
  Fel exp(std::uint64_t i) const;

  // Subfield F_q.
  Fel embed(FqIdx y) const;
  bool in_subfield(Fel x) const { return sub_of_.count(x) != 0; }
  FqIdx sub_index(Fel x) const;  // throws NotInSubfield
  FqIdx q_add(FqIdx a, FqIdx b) const;
  FqIdx q_sub(FqIdx a, FqIdx b) const;
  FqIdx q_neg(FqIdx a) const;
  FqIdx q_scale(unsigned c, FqIdx a) const;
  FqIdx q_mul(FqIdx a, FqIdx b) const;
  FqIdx q_inv(FqIdx a) const;
  FqIdx q_div(FqIdx a, FqIdx b) const { return q_mul(a, q_inv(b)); }
  FqIdx q_from_int(std::int64_t c) const;  // image of an integer in F_p

  // Tr: F_{q^m} -> F_q.
  FqIdx trace_q(Fel x) const;
  Fel trace_rel(Fel x) const { return embed(trace_q(x)); }
  // Tr^q_p on F_q; the Fel overload throws NotInSubfield.
  unsigned trace_abs(Fel y) const;
  unsigned trace_abs_q(FqIdx y) const { return sub_trace_[y]; }
  // Absolute trace F_{q^m} -> F_p.
  unsigned trace_p(Fel x) const;

  int quad_char(Fel x, Level level = Level::big) const;
  int quad_char_q(FqIdx y) const;
  CycInt add_char(Fel x, Level level = Level::big) const;
  CycInt add_char_q(FqIdx y) const { return CycInt::root_power(p_, trace_abs_q(y)); }

 private:
  friend FieldCtx build_tower(unsigned, unsigned, unsigned, const TowerOptions&);
  FieldCtx() = default;

  Fel poly_mul(Fel a, Fel b) const;
  Fel poly_pow(Fel a, std::uint64_t k) const;
  FqIdx trace_q_slow(Fel x) const;
  void build_tables();
  void build_subfield();
  void build_traces();

  unsigned p_ = 0, s_ = 0, m_ = 0, n_ = 0;
  std::uint64_t q_ = 0, order_ = 0;
  std::vector<unsigned> modulus_;
  std::string modulus_source_;
  std::vector<std::uint64_t> pow_p_;  // p^i for i <= n
  Fel gen_ = 0;

  std::vector<Fel> exp_;             // size order-1
  std::vector<std::uint32_t> log_;   // size order, log_[0] unused

  std::vector<unsigned> sub_modulus_;
  std::vector<Fel> sub_embed_;       // FqIdx -> Fel
  std::unordered_map<Fel, FqIdx> sub_of_;
  std::vector<FqIdx> sub_exp_;       // powers of g^{(Q-1)/(q-1)}, j < q-1
  std::vector<std::uint32_t> sub_log_;
  std::vector<unsigned> sub_trace_;  // Tr^q_p per FqIdx

  std::vector<FqIdx> basis_trace_;   // Tr(X^i)
  std::vector<FqIdx> trq_;           // full table when has_tables()
};

FieldCtx build_tower(unsigned p, unsigned s, unsigned m, const TowerOptions& opts = {});

}  // namespace fewweight

#endif  // FEWWEIGHT_GF_HPP
