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


#ifndef FEWWEIGHT_CHARSUMS_HPP
#define FEWWEIGHT_CHARSUMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fewweight/case_keys.hpp"
#include "fewweight/cycint.hpp"
#include "fewweight/gf.hpp"
#include "fewweight/linsolve.hpp"

namespace fewweight {

enum class Mode { brute, closed };

CycInt gauss_sum(const FieldCtx& ctx, Level level, Mode mode);
// True when the closed Gauss value exists for the level (even total degree).
bool gauss_closed_applicable(const FieldCtx& ctx, Level level);

// sum_x chi(a2 x^2 + a1 x + a0).
CycInt quad_weil(const FieldCtx& ctx, Fel a2, Fel a1, Fel a0, Mode mode);

// S(a, b) = sum_x chi(a x^{q^e+1} + b x).
CycInt weil_s(const FieldCtx& ctx, Fel a, Fel b, unsigned e, Mode mode);

struct ClosedValue {
  std::int64_t value = 0;
  std::string guard;  // which case fired
};

// Per-(field, e) state shared by the theta / omega / psi evaluations: the
// gamma solver and, for brute mode, per-x traces.
class SumEngine {
 public:
  SumEngine(const FieldCtx& ctx, unsigned e);

  const FieldCtx& ctx() const { return *ctx_; }
  unsigned e() const { return e_; }
  bool closed_supported() const { return keys_.has_value() && keys_->m_over_alpha_even; }
  const CaseKeys& keys() const;  // throws OddQuotientUnsupported
  const GammaSolver& solver() const { return solver_; }

  CycInt theta_brute(Fel b, FqIdx u, FqIdx v) const;
  ClosedValue theta_closed(Fel b, FqIdx u, FqIdx v, std::optional<Fel> gamma = std::nullopt) const;
  CycInt omega_brute(Fel b, FqIdx v) const;
  std::int64_t omega_closed(Fel b, FqIdx v) const;
  std::int64_t psi_brute(Fel b) const;
  ClosedValue psi_closed(Fel b, std::optional<Fel> gamma = std::nullopt) const;

  // Tr(x^{q^e+1}) and Tr(x) for every x, indexed by encoding.
  const std::vector<FqIdx>& trace_quad() const { return tr_quad_; }
  const std::vector<FqIdx>& trace_lin() const { return tr_lin_; }

 private:
  const FieldCtx* ctx_;
  unsigned e_;
  std::optional<CaseKeys> keys_;
  GammaSolver solver_;
  std::vector<FqIdx> tr_quad_;
  std::vector<FqIdx> tr_lin_;
};

CycInt theta(const FieldCtx& ctx, Fel b, FqIdx u, FqIdx v, unsigned e, Mode mode);
CycInt omega(const FieldCtx& ctx, Fel b, FqIdx v, Mode mode);
std::int64_t psi(const FieldCtx& ctx, Fel b, unsigned e, Mode mode);

}  // namespace fewweight

#endif  // FEWWEIGHT_CHARSUMS_HPP
