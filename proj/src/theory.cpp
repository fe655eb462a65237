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


#include <algorithm>
#include <map>
#include <stdexcept>

#include "fewweight/error.hpp"
#include "fewweight/theory.hpp"

namespace fewweight {

namespace {

struct NegativeExponent {
  int k;
};
struct OddHalf {};

CaseKeys even_keys(const FieldCtx& ctx, unsigned e) {
  const CaseKeys k = case_keys(ctx.q(), ctx.m(), e, ctx.p());
  if (!k.m_over_alpha_even) throw Error(Errc::OddQuotientUnsupported, "m/gcd(m,e) is odd");
  return k;
}

// Shared by closed_form_N and predict: fq supplies F_q arithmetic only, so a
// degree-one tower over F_q works as well as the big field.
std::int64_t n_formula(const FieldCtx& fq, const CaseKeys& k, std::uint64_t qq, unsigned m, FqIdx u, FqIdx v) {
  const std::int64_t top = ipow(qq, static_cast<int>(m) - 2);
  const std::int64_t mid = ipow(qq, static_cast<int>(k.ell + k.epsilon) - 1);
  const std::int64_t q = static_cast<std::int64_t>(qq);
  const FqIdx mp = fq.q_from_int(k.m_p);
  if (u == 0 && v == 0) return k.m_p != 0 ? top : top - (q - 1) * mid;
  if (v == 0) return k.m_p != 0 ? top - mid * fq.quad_char_q(fq.q_neg(fq.q_mul(u, mp))) : top + mid;
  const FqIdx disc = fq.q_sub(fq.q_mul(v, v), fq.q_mul(u, mp));
  if (k.m_p == 0 || disc == 0) return top;
  return top - mid * fq.quad_char_q(disc);
}

}  // namespace

std::int64_t closed_form_N(const FieldCtx& ctx, FqIdx u, FqIdx v, unsigned e) {
  return n_formula(ctx, even_keys(ctx, e), ctx.q(), ctx.m(), u, v);
}

std::int64_t n_E1(const FieldCtx& ctx, unsigned e) {
  const CaseKeys k = even_keys(ctx, e);
  const std::int64_t q = static_cast<std::int64_t>(ctx.q());
  return ipow(ctx.q(), static_cast<int>(ctx.m()) - 1) - (q - 1) * ipow(ctx.q(), static_cast<int>(k.ell + k.epsilon) - 1) - 1;
}

std::int64_t lemma_n12_count(const FieldCtx& ctx, FqIdx a1, FqIdx a2, unsigned e) {
  if (a1 == 0 || a2 == 0) throw Error(Errc::InvalidArgument, "a1, a2 must be nonzero");
  const CaseKeys k = even_keys(ctx, e);
  const std::int64_t q = static_cast<std::int64_t>(ctx.q());
  const FqIdx t = ctx.q_add(1, ctx.q_div(ctx.q_mul(a1, ctx.q_from_int(k.m_p)), a2));
  return ipow(ctx.q(), static_cast<int>(ctx.m()) - 1) -
         (q - 1) * ipow(ctx.q(), static_cast<int>(k.ell + k.epsilon) - 1) * ctx.quad_char_q(t);
}

// --- predictions ------------------------------------------------------------

namespace {

using Rows = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct Table {
  std::string source;
  std::int64_t n = 0;
  unsigned k = 0;
  Rows rows;
};

Prediction not_applicable(Prediction p, std::string why) {
  p.applicable = false;
  p.reason = std::move(why);
  return p;
}

}  // namespace

Prediction predict(const CodeSpec& spec) {
  Prediction out;
  const auto pp = prime_power(spec.q);
  if (!pp) return not_applicable(out, "q is not a prime power");
  const auto [p, s] = *pp;
  if (p == 2) return not_applicable(out, "q is even");
  if (spec.m % 2) return not_applicable(out, "m is odd");
  if (spec.e == 0 || spec.u >= spec.q || spec.v >= spec.q) return not_applicable(out, "parameters out of range");
  const CaseKeys keys = case_keys(spec.q, spec.m, spec.e, p);
  out.hypotheses.push_back({"m/alpha even", keys.m_over_alpha_even});
  if (!keys.m_over_alpha_even) return not_applicable(out, "m/alpha odd");

  const Variant var = spec.variant;
  if (var == Variant::E1 || var == Variant::E2) return not_applicable(out, "no closed-form table for " + to_string(var));
  if (var != Variant::D1 && spec.u != 0) return not_applicable(out, to_string(var) + " with u != 0 has no closed form");

  const FieldCtx fq = build_tower(p, s, 1);
  const std::int64_t q = static_cast<std::int64_t>(spec.q);
  const int m = static_cast<int>(spec.m), l = static_cast<int>(keys.ell), E = static_cast<int>(keys.epsilon);
  const bool mp0 = keys.m_p == 0;
  const FqIdx u = spec.u, v = spec.v;
  const FqIdx mp = fq.q_from_int(keys.m_p);
  const FqIdx disc = fq.q_sub(fq.q_mul(v, v), fq.q_mul(u, mp));

  const bool h_m = m > 3;
  const bool h_eps = mp0 || m > 2 * E + 2;
  out.hypotheses.push_back({"m > 3", h_m});
  out.hypotheses.push_back({"m > 2*eps + 2 when m_p != 0", h_eps});

  if (var == Variant::D1) {
    const std::int64_t n = n_formula(fq, keys, spec.q, spec.m, u, v) - (u == 0 && v == 0 ? 1 : 0);
    if (n == 0) {
      out.applicable = true;
      out.source = "D1/empty";
      out.moments_ok = true;
      return out;
    }
  }

  auto P = [&](int k) -> std::int64_t {
    if (k < 0) throw NegativeExponent{k};
    return ipow(spec.q, k);
  };
  auto half = [](std::int64_t x) -> std::int64_t {
    if (x % 2) throw OddHalf{};
    return x / 2;
  };

  Table t;
  try {
    if (!(h_m && h_eps)) {
      const bool cor = var == Variant::D1 && m == 4 && E == 1;
      out.hypotheses.push_back({"m = 4 and eps = 1", m == 4 && E == 1});
      if (!cor) return not_applicable(out, "hypotheses fail and no small-case table applies");
      if (v == 0 && u == 0) {
        t = {"D1/m=4,eps=1/v=0/u=0", q * q - 1, 2, {{(q - 1) * q, q * q - 1}}};
      } else if (v == 0) {
        if (fq.quad_char_q(fq.q_neg(fq.q_mul(u, mp))) != -1)
          return not_applicable(out, "small-case table needs eta1(-u m_p) = -1");
        t = {"D1/m=4,eps=1/v=0/u!=0", 2 * q * q, 3, {{2 * q * (q - 1), q * q * q - q}, {2 * q * q, q - 1}}};
      } else if (disc != 0) {
        if (fq.quad_char_q(disc) != -1) return not_applicable(out, "small-case table needs eta1(v^2 - u m_p) = -1");
        out.flags.push_back("small-case v != 0 condition read as eta1(v^2 - u m_p) = -1");
        t = {"D1/m=4,eps=1/v!=0/disc!=0",
             2 * q * q,
             4,
             {{q * q, 2 * (q - 1)}, {2 * q * (q - 1), q * q * q * q - q * q}, {2 * q * q, (q - 1) * (q - 1)}}};
      } else {
        t = {"D1/m=4,eps=1/v!=0/disc=0", q * q, 3, {{(q - 1) * q, q * q * q - q}, {q * q, q - 1}}};
      }
    } else if (var == Variant::D1 && v == 0) {
      const unsigned k = spec.m - 1;
      if (u == 0 && !mp0) {
        t = {"D1/v=0/u=0/m_p!=0", P(m - 2) - 1, k,
             {{(q - 1) * P(m - 3), P(m - 1) - (q - 1) * P(m - 2 * E - 2) - 1},
              {(q - 1) * (P(m - 3) + P(l + E - 2)), half((q - 1) * (P(m - 2 * E - 2) - P(l - E - 1)))},
              {(q - 1) * (P(m - 3) - P(l + E - 2)), half((q - 1) * (P(m - 2 * E - 2) + P(l - E - 1)))}}};
      } else if (u == 0) {
        t = {"D1/v=0/u=0/m_p=0", P(m - 2) - (q - 1) * P(l + E - 1) - 1, k,
             {{(q - 1) * P(m - 3), P(m - 2 * E - 3) - (q - 1) * P(l - E - 2) - 1},
              {(q - 1) * (P(m - 3) - P(l + E - 1)), (q - 1) * (P(m - 2 * E - 3) + P(l - E - 2))},
              {(q - 1) * (P(m - 3) + P(l + E - 2) - P(l + E - 1)), P(m - 1) - P(m - 2 * E - 2)}}};
      } else if (!mp0) {
        const std::int64_t eta = fq.quad_char_q(fq.q_neg(fq.q_mul(u, mp)));
        t = {"D1/v=0/u!=0/m_p!=0", P(m - 2) - P(l + E - 1) * eta, k,
             {{(q - 1) * P(m - 3), P(m - 2 * E - 2) - 1},
              {(q - 1) * P(m - 3) - P(l + E - 1) * eta + P(l + E - 2),
               half(P(m - 1) - P(m - 2 * E - 2) - P(m - 2 * E - 1) * eta + P(m - 1) * eta + P(l - E) - P(l - E - 1))},
              {(q - 1) * P(m - 3) - P(l + E - 1) * eta - P(l + E - 2),
               half(P(m - 1) - P(m - 2 * E - 2) + P(m - 2 * E - 1) * eta - P(m - 1) * eta - P(l - E) + P(l - E - 1))}}};
      } else {
        const std::int64_t x = half((q - 1) * (P(m - 2 * E - 3) + P(l - E - 2)));
        t = {"D1/v=0/u!=0/m_p=0", P(m - 2) + P(l + E - 1), k,
             {{(q - 1) * P(m - 3), P(m - 2 * E - 2) - x - 1},
              {(q - 1) * P(m - 3) + 2 * P(l + E - 1), x},
              {(q - 1) * (P(m - 3) + P(l + E - 2)), P(m - 1) - P(m - 2 * E - 2)}}};
      }
    } else if (var == Variant::D1) {
      const unsigned k = spec.m;
      if (!mp0 && disc != 0) {
        const std::int64_t eta = fq.quad_char_q(disc);
        out.flags.push_back("v != 0, disc != 0: third frequency read as (q-1)(q^{m-2eps-2} - q^{l-eps-1} eta1)");
        t = {"D1/v!=0/disc!=0/m_p!=0", P(m - 2) - P(l + E - 1) * eta, k,
             {{(q - 1) * P(m - 3), P(m - 2 * E - 2) - 1},
              {(q - 1) * P(m - 3) - P(l + E - 2) * eta, (q - 1) * (P(m - 2 * E - 2) - P(l - E - 1) * eta)},
              {(q - 1) * P(m - 3) - P(l + E - 1) * eta, (q - 1) * (P(m - 2 * E - 2) - 1)},
              {P(m - 2) - P(l + E - 1) * eta, q - 1},
              {(q - 1) * P(m - 3) - P(l + E - 1) * eta + P(l + E - 2),
               half((q - 1) * ((eta - 1) * (P(l - E - 1) + P(m - 2 * E - 2)) + P(l - E)) + P(m) * (eta + 1) -
                    P(m - 2 * E - 1) - P(m - 2 * E) * eta)},
              {(q - 1) * P(m - 3) - P(l + E - 1) * eta - P(l + E - 2),
               half((q - 1) * ((eta + 1) * (P(l - E - 1) - P(m - 2 * E - 2)) - P(l - E)) + P(m) * (1 - eta) +
                    P(m - 2 * E) * eta - P(m - 2 * E - 1))}}};
      } else if (mp0) {
        t = {"D1/v!=0/m_p=0", P(m - 2), k,
             {{(q - 1) * P(m - 3), P(m) - P(m - 2 * E) + P(m - 2 * E - 1) - q},
              {P(m - 2), q - 1},
              {(q - 1) * P(m - 3) - P(l + E - 2), (q - 1) * (P(m - 2 * E - 1) - P(m - 2 * E - 2))},
              {(q - 1) * (P(m - 3) + P(l + E - 2)), (q - 1) * P(m - 2 * E - 2)}}};
      } else {
        t = {"D1/v!=0/disc=0", P(m - 2), k,
             {{(q - 1) * P(m - 3), P(m) - P(m - 2 * E) + P(m - 2 * E - 1) - q},
              {(q - 1) * P(m - 3) - P(l + E - 2), half((q - 1) * (q - 1) * (P(m - 2 * E - 2) - P(l - E - 1)))},
              {(q - 1) * P(m - 3) + P(l + E - 2), half((q - 1) * (q - 1) * (P(m - 2 * E - 2) + P(l - E - 1)))},
              {P(m - 2), q - 1},
              {(q - 1) * (P(m - 3) + P(l + E - 2)), half((q - 1) * (P(m - 2 * E - 2) - P(l - E - 1)))},
              {(q - 1) * (P(m - 3) - P(l + E - 2)), half((q - 1) * (P(m - 2 * E - 2) + P(l - E - 1)))}}};
      }
    } else if (var == Variant::D2 && v == 0) {
      const unsigned k = spec.m;
      if (!mp0) {
        t = {"D2/u=0/v=0/m_p!=0", (q - 1) * (P(m - 2) - P(l + E - 1)), k,
             {{(q - 1) * (P(m - 2) - P(l + E - 1)), q - 1},
              {(q - 1) * (P(m - 2) - P(m - 3)), P(m - 2 * E - 2) - 1},
              {(q - 1) * (P(m - 2) - P(m - 3) - P(l + E - 2)), (q - 1) * (P(m - 2 * E - 2) - P(l - E - 1))},
              {(q - 1) * (P(m - 2) - P(m - 3) - P(l + E - 1)), (q - 1) * (P(m - 2 * E - 2) - 1)},
              {(q - 1) * (P(m - 2) - P(m - 3) - P(l + E - 1) - P(l + E - 2)),
               half((q - 1) * (P(m - 2 * E - 1) - P(l - E) + 2 * P(l - E - 1) - 2 * P(m - 2 * E - 2)))},
              {(q - 1) * (q - 1) * (P(m - 3) - P(l + E - 2)),
               P(m) + half(P(l - E + 1) - P(m - 2 * E) - P(m - 2 * E - 1) - P(l - E))}}};
      } else {
        t = {"D2/u=0/v=0/m_p=0", (q - 1) * P(m - 2), k,
             {{(q - 1) * P(m - 2), q - 1},
              {(q - 1) * (q - 1) * (P(m - 3) + P(l + E - 2)), (q - 1) * P(m - 2 * E - 2)},
              {(q - 1) * (P(m - 2) - P(m - 3) - P(l + E - 2)), (q - 1) * (q - 1) * P(m - 2 * E - 2)},
              {(q - 1) * (P(m - 2) - P(m - 3)), P(m) - P(m - 2 * E) + P(m - 2 * E - 1) - q}}};
      }
    } else if (var == Variant::D2) {
      const unsigned k = spec.m;
      if (!mp0) {
        const std::int64_t base = (q - 1) * (P(m - 2) - P(m - 3) - P(l + E - 1)) + P(l + E - 1);
        if (q > 3 && E > 0)
          out.flags.push_back("v != 0, m_p != 0: the q^m - q^{m-2eps} codewords sit (q-3)q^{l+eps-2} above the "
                              "row they are listed with");
        t = {"D2/u=0/v!=0/m_p!=0", (q - 1) * (P(m - 2) - P(l + E - 1)) + P(l + E - 1) - 1, k,
             {{(q - 1) * (P(m - 2) - P(l + E - 1)) - P(m - 2) + P(l + E - 1), q - 1},
              {(q - 1) * (q - 1) * (P(m - 3) - P(l + E - 2)),
               half((q - 1) * (P(l - E) - P(m - 2 * E - 1))) - P(m - 2 * E - 1) + P(m - 2 * E)},
              {base, (q - 1) * (P(m - 2 * E - 2) - 1)},
              {base + P(l + E - 2),
               half((q - 1) * (P(m - 2 * E - 1) - 2 * P(m - 2 * E - 2) - P(l - E) + 2 * P(l - E - 1)))},
              {base + (q - 2) * P(l + E - 2), P(m) - P(m - 2 * E)},
              {(q - 1) * (q - 1) * P(m - 3), P(m - 2 * E - 2) - 1},
              {(q - 1) * (q - 1) * P(m - 3) + P(l + E - 2), (q - 1) * (P(m - 2 * E - 2) - P(l - E - 1))}}};
      } else {
        t = {"D2/u=0/v!=0/m_p=0", (q - 1) * (P(m - 2) - P(l + E - 1)) - 1, k,
             {{(q - 1) * (q - 1) * (P(m - 3) - P(l + E - 2)), P(m) - P(m - 2 * E)},
              {(q - 1) * P(m - 2) - P(m - 2), q - 1},
              {(q - 1) * (P(m - 2) - P(m - 3) - P(l + E - 2)), (q - 1) * P(m - 2 * E - 2)},
              {(q - 1) * (P(m - 2) - P(m - 3)), P(m - 2 * E - 2) - (q - 1) * P(l - E - 1) - q},
              {(q - 1) * (P(m - 2) - P(m - 3) - P(l + E - 1)), (q - 1) * (P(m - 2 * E - 2) + P(l - E - 1))},
              {(q - 1) * (P(m - 2) - P(m - 3) - P(l + E - 1)) + P(l + E - 2),
               P(m - 2 * E) - 2 * P(m - 2 * E - 1) + P(m - 2 * E - 2)}}};
      }
    } else if (v == 0) {  // D3
      const unsigned k = spec.m;
      const std::int64_t w0 = 2 * P(m - 2) - P(m - 3);
      if (!mp0) {
        t = {"D3/u=0/v=0/m_p!=0", (q - 1) * (P(m - 2) - P(l + E - 1)) + P(m - 1) - 1, k,
             {{(q - 1) * (P(m - 2) - P(l + E - 1)), q - 1},
              {(q - 1) * w0, P(m - 2 * E - 2) - 1},
              {(q - 1) * (w0 - P(l + E - 2)), (q - 1) * (P(m - 2 * E - 2) - P(l - E - 1))},
              {(q - 1) * (w0 - P(l + E - 1)), (q - 1) * (P(m - 2 * E - 2) - 1)},
              {(q - 1) * (w0 - P(l + E - 1) - P(l + E - 2)),
               half((q - 1) * (P(m - 2 * E - 1) - P(l - E) + 2 * P(l - E - 1) - 2 * P(m - 2 * E - 2)))},
              {(q - 1) * (w0 - P(l + E - 1) + P(l + E - 2)),
               P(m) + half(P(l - E + 1) - P(m - 2 * E) - P(m - 2 * E - 1) - P(l - E))}}};
      } else {
        t = {"D3/u=0/v=0/m_p=0", (q - 1) * P(m - 2) + P(m - 1) - 1, k,
             {{(q - 1) * P(m - 2), q - 1},
              {(q - 1) * (w0 + P(l + E - 1) - P(l + E - 2)), (q - 1) * P(m - 2 * E - 2)},
              {(q - 1) * (w0 - P(l + E - 2)), (q - 1) * (q - 1) * P(m - 2 * E - 2)},
              {(q - 1) * w0, P(m) - P(m - 2 * E) + P(m - 2 * E - 1) - q}}};
      }
    } else {  // D3, v != 0
      const unsigned k = spec.m;
      const std::int64_t w0 = 2 * P(m - 2) - P(m - 3);
      if (!mp0) {
        if (q > 3 && E > 0)
          out.flags.push_back("v != 0, m_p != 0: the q^m - q^{m-2eps} codewords sit (q-3)q^{l+eps-2} above the "
                              "row they are listed with");
        t = {"D3/u=0/v!=0/m_p!=0", (q - 1) * (P(m - 2) - P(l + E - 1)) + P(m - 1) + P(l + E - 1) - 1, k,
             {{(q - 1) * (2 * P(m - 2) - P(l + E - 1)) + P(l + E - 1), q - 1},
              {(q - 1) * (q - 1) * (P(m - 3) - P(l + E - 2)) + (q - 1) * P(m - 2),
               half((q - 1) * (P(l - E) - P(m - 2 * E - 1))) - P(m - 2 * E - 1) + P(m - 2 * E)},
              {(q - 1) * (w0 - P(l + E - 1)) + P(l + E - 1), (q - 1) * (P(m - 2 * E - 2) - 1)},
              {(q - 1) * (w0 - P(l + E - 1)) + (q + 1) * P(l + E - 2),
               half((q - 1) * (P(m - 2 * E - 1) - 2 * P(m - 2 * E - 2) - P(l - E) + 2 * P(l - E - 1)))},
              {(q - 1) * (w0 - P(l + E - 1) + 2 * P(l + E - 2)), P(m) - P(m - 2 * E)},
              {(q - 1) * (q - 1) * P(m - 3) + (q - 1) * P(m - 2), P(m - 2 * E - 2) - 1},
              {(q - 1) * w0 + P(l + E - 2), (q - 1) * (P(m - 2 * E - 2) - P(l - E - 1))}}};
      } else {
        t = {"D3/u=0/v!=0/m_p=0", (q - 1) * (P(m - 2) - P(l + E - 1)) + P(m - 1) - 1, k,
             {{(q - 1) * (q - 1) * (P(m - 3) - P(l + E - 2)) + (q - 1) * P(m - 2), P(m) - P(m - 2 * E)},
              {2 * (q - 1) * P(m - 2), q - 1},
              {(q - 1) * (w0 - P(l + E - 2)), (q - 1) * P(m - 2 * E - 2)},
              {(q - 1) * w0, P(m - 2 * E - 2) - (q - 1) * P(l - E - 1) - q},
              {(q - 1) * (w0 - P(l + E - 1)), (q - 1) * (P(m - 2 * E - 2) + P(l - E - 1))},
              {(q - 1) * (w0 - P(l + E - 1)) + P(l + E - 2), P(m - 2 * E) - 2 * P(m - 2 * E - 1) + P(m - 2 * E - 2)}}};
      }
    }
  } catch (const NegativeExponent& ne) {
    return not_applicable(out, "closed form needs q^" + std::to_string(ne.k));
  } catch (const OddHalf&) {
    return not_applicable(out, "closed form has a non-integral frequency");
  }

  // Merge equal weights, drop empty rows; a negative row survives so the
  // comparison can report it.
  std::map<std::int64_t, std::int64_t> merged;
  for (const auto& [w, a] : t.rows)
    if (a != 0) merged[w] += a;
  out.applicable = true;
  out.source = t.source;
  out.n = static_cast<std::uint64_t>(std::max<std::int64_t>(t.n, 0));
  out.k = t.k;
  bool sane = t.n >= 0;
  for (const auto& [w, a] : merged) {
    if (a == 0) continue;
    if (w <= 0 || a < 0) {
      sane = false;
      out.flags.push_back("row (" + std::to_string(w) + ", " + std::to_string(a) + ") is not a valid weight/frequency");
      continue;
    }
    out.pairs.emplace_back(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(a));
  }
  out.d = out.pairs.empty() ? 0 : out.pairs.front().first;
  out.moments_ok = sane && pless_check(out.pairs, spec.q, out.n, out.k);
  return out;
}

// --- Griesmer / Pless ----------------------------------------------------------

namespace {

std::uint64_t griesmer_sum(std::uint64_t q, unsigned k, std::uint64_t d) {
  std::uint64_t g = 0, qi = 1;
  for (unsigned i = 0; i < k; ++i) {
    g += (d + qi - 1) / qi;
    if (qi > d) {
      g += k - i - 1;  // every remaining term is ceil(d / q^i) = 1
      break;
    }
    qi *= q;
  }
  return g;
}

}  // namespace

GriesmerReport griesmer(std::uint64_t q, std::uint64_t n, unsigned k, std::uint64_t d) {
  GriesmerReport r;
  if (k == 0 || d == 0) {
    r.classification = "neither";
    r.witness = "degenerate code (k = 0 or d = 0)";
    return r;
  }
  r.bound_length = griesmer_sum(q, k, d);
  r.bound_d1 = griesmer_sum(q, k, d + 1);
  r.bound_d2 = griesmer_sum(q, k, d + 2);
  r.meets_equality = r.bound_length == n;
  const std::string nn = std::to_string(n);
  if (r.bound_d1 > n) {
    r.classification = "optimal";
    r.witness = "g(d+1) = " + std::to_string(r.bound_d1) + " > n = " + nn;
  } else if (r.bound_d2 > n) {
    r.classification = "almost_optimal_griesmer";
    r.witness = "g(d+1) = " + std::to_string(r.bound_d1) + " <= n = " + nn + " < g(d+2) = " + std::to_string(r.bound_d2);
  } else {
    r.classification = "neither";
    r.witness = "g(d+2) = " + std::to_string(r.bound_d2) + " <= n = " + nn;
  }
  return r;
}

bool pless_check(const WeightPairs& pairs, std::uint64_t q, std::uint64_t n, unsigned k) {
  using u128 = unsigned __int128;
  u128 s0 = 0, s1 = 0;
  for (const auto& [w, a] : pairs) {
    s0 += a;
    s1 += u128{w} * a;
  }
  if (k == 0) return s0 == 0;
  u128 qk1 = 1;
  for (unsigned i = 0; i + 1 < k; ++i) qk1 *= q;
  return s0 == qk1 * q - 1 && s1 == u128{n} * qk1 * (q - 1);
}

bool pless_check(const WeightEnumerator& en, std::uint64_t q) { return pless_check(en.pairs, q, en.n, en.k); }

std::vector<Mismatch> compare(const Prediction& pred, const WeightEnumerator& en) {
  std::vector<Mismatch> out;
  auto scalar = [&](const char* f, std::uint64_t a, std::uint64_t b) {
    if (a != b) out.push_back({f, 0, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  };
  scalar("n", pred.n, en.n);
  scalar("k", pred.k, en.k);
  scalar("d", pred.d, en.d);
  std::map<std::uint64_t, std::pair<std::int64_t, std::int64_t>> rows;
  for (const auto& [w, a] : pred.pairs) rows[w].first = static_cast<std::int64_t>(a);
  for (const auto& [w, a] : en.pairs) rows[w].second = static_cast<std::int64_t>(a);
  for (const auto& [w, ab] : rows)
    if (ab.first != ab.second) out.push_back({"A_w", w, ab.first, ab.second});
  for (const auto& f : pred.flags)
    if (f.rfind("row (", 0) == 0) out.push_back({"table", 0, 0, 0});
  return out;
}

Report verify(const FieldCtx& ctx, const CodeSpec& spec, const WeightOptions& opts) {
  Report r;
  r.spec = spec;
  r.method = opts.method == Method::naive ? "naive" : "transform";
  const DefiningSet set = build_set(ctx, spec);
  r.computed = weight_distribution(ctx, set, opts);
  r.pless_ok = pless_check(r.computed, ctx.q());
  r.predicted = predict(spec);
  if (r.predicted.applicable) {
    r.mismatches = compare(r.predicted, r.computed);
    r.match = r.mismatches.empty();
  }
  if (r.computed.k >= 1 && r.computed.d >= 1) r.griesmer = griesmer(ctx.q(), r.computed.n, r.computed.k, r.computed.d);
  return r;
}

}  // namespace fewweight
