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


#include "fewweight/charsums.hpp"

#include <array>
#include <functional>

#include "fewweight/error.hpp"

namespace fewweight {
namespace {

// Small dense tables for F_q so the brute loops stay cheap.
struct QTables {
  unsigned q = 0, p = 0;
  std::vector<FqIdx> add, mul;
  std::vector<unsigned> tr;

  explicit QTables(const FieldCtx& ctx) : q(static_cast<unsigned>(ctx.q())), p(ctx.p()) {
    add.resize(std::size_t{q} * q);
    mul.resize(std::size_t{q} * q);
    tr.resize(q);
    for (FqIdx a = 0; a < q; ++a) {
      tr[a] = ctx.trace_abs_q(a);
      for (FqIdx b = 0; b < q; ++b) {
        add[a * q + b] = ctx.q_add(a, b);
        mul[a * q + b] = ctx.q_mul(a, b);
      }
    }
  }
  FqIdx plus(FqIdx a, FqIdx b) const { return add[a * q + b]; }
  FqIdx times(FqIdx a, FqIdx b) const { return mul[a * q + b]; }
};

// x^{q^e+1}
Fel quad_form(const FieldCtx& ctx, Fel x, unsigned e) { return ctx.mul(ctx.frob_q(x, e), x); }

const CaseKeys& require_keys(const std::optional<CaseKeys>& k) {
  if (!k || !k->m_over_alpha_even)
    throw Error(Errc::OddQuotientUnsupported, "closed forms need even m/gcd(m,e)");
  return *k;
}

std::optional<CaseKeys> try_keys(const FieldCtx& ctx, unsigned e) {
  if (ctx.m() % 2) return std::nullopt;
  return case_keys(ctx.q(), ctx.m(), e, ctx.p());
}

}  // namespace

// --- Gauss sums -------------------------------------------------------------

bool gauss_closed_applicable(const FieldCtx& ctx, Level level) {
  const unsigned d = level == Level::big ? ctx.degree() : ctx.s();
  return d % 2 == 0;
}

CycInt gauss_sum(const FieldCtx& ctx, Level level, Mode mode) {
  const unsigned p = ctx.p();
  if (mode == Mode::brute) {
    std::vector<std::int64_t> counts(p, 0);
    if (level == Level::big) {
      for (Fel x = 1; x < ctx.order(); ++x) counts[ctx.trace_p(x)] += ctx.quad_char(x);
    } else {
      for (FqIdx y = 1; y < ctx.q(); ++y) counts[ctx.trace_abs_q(y)] += ctx.quad_char_q(y);
    }
    return CycInt::from_exponent_counts<std::int64_t>(counts);
  }
  const unsigned d = level == Level::big ? ctx.degree() : ctx.s();
  if (d % 2) throw Error(Errc::ClosedFormInapplicable, "Gauss sum over an odd-degree field is not rational");
  const std::uint64_t sign_exp = std::uint64_t{d} * (p - 1) * (p - 1) / 8;
  std::int64_t v = ipow(p, static_cast<int>(d / 2));
  if ((d - 1) % 2) v = -v;
  if (sign_exp % 2) v = -v;
  return CycInt::integer(p, v);
}

// --- quadratic Weil sum -----------------------------------------------------

CycInt quad_weil(const FieldCtx& ctx, Fel a2, Fel a1, Fel a0, Mode mode) {
  if (a2 == 0) throw Error(Errc::ZeroLeadingCoefficient, "a2 must be nonzero");
  const unsigned p = ctx.p();
  if (mode == Mode::brute) {
    std::vector<std::int64_t> counts(p, 0);
    for (Fel x = 0; x < ctx.order(); ++x) {
      const Fel f = ctx.add(ctx.add(ctx.mul(a2, ctx.mul(x, x)), ctx.mul(a1, x)), a0);
      counts[ctx.trace_p(f)] += 1;
    }
    return CycInt::from_exponent_counts<std::int64_t>(counts);
  }
  const Fel four_a2 = ctx.scale(4 % p, a2);
  const Fel arg = ctx.sub(a0, ctx.div(ctx.mul(a1, a1), four_a2));
  const CycInt g = gauss_sum(ctx, Level::big, gauss_closed_applicable(ctx, Level::big) ? Mode::closed : Mode::brute);
  return ctx.add_char(arg) * g * ctx.quad_char(a2);
}

// --- S(a, b) ----------------------------------------------------------------

CycInt weil_s(const FieldCtx& ctx, Fel a, Fel b, unsigned e, Mode mode) {
  if (a == 0) throw Error(Errc::ZeroCoefficient, "a must be nonzero");
  const unsigned p = ctx.p();
  if (mode == Mode::brute) {
    std::vector<std::int64_t> counts(p, 0);
    for (Fel x = 0; x < ctx.order(); ++x)
      counts[ctx.trace_p(ctx.add(ctx.mul(a, quad_form(ctx, x, e)), ctx.mul(b, x)))] += 1;
    return CycInt::from_exponent_counts<std::int64_t>(counts);
  }
  const CaseKeys& k = require_keys(try_keys(ctx, e));
  const bool ell_even = (k.ell / k.alpha) % 2 == 0;
  const std::int64_t q_ell = ipow(ctx.q(), static_cast<int>(k.ell));
  const std::int64_t q_ell_alpha = ipow(ctx.q(), static_cast<int>(k.ell + k.alpha));
  const bool perm = is_permutation(ctx, a, e);

  if (b == 0) {
    // a^{(q^m-1)/(q^alpha+1)} == (-1)^{ell/alpha} exactly when f is not a permutation.
    std::int64_t v;
    if (ell_even) v = perm ? q_ell : -q_ell_alpha;
    else v = perm ? -q_ell : q_ell_alpha;
    return CycInt::integer(p, v);
  }
  const LinearSystem sys(ctx, build_map(ctx, a, e).matrix);
  const auto x0 = sys.solve(ctx.neg(ctx.frob_q(b, e)));
  const std::int64_t sign = ell_even ? 1 : -1;
  if (perm) {
    if (!x0) throw Error(Errc::UncoveredCase, "permutation map without a solution");
    const Fel arg = ctx.neg(ctx.mul(a, quad_form(ctx, *x0, e)));
    return ctx.add_char(arg) * (sign * q_ell);
  }
  if (!x0) return CycInt::integer(p, 0);
  const Fel arg = ctx.neg(ctx.mul(a, quad_form(ctx, *x0, e)));
  return ctx.add_char(arg) * (-sign * q_ell_alpha);
}

// --- engine -----------------------------------------------------------------

SumEngine::SumEngine(const FieldCtx& ctx, unsigned e)
    : ctx_(&ctx), e_(e), keys_(try_keys(ctx, e)), solver_(ctx, e) {
  tr_quad_.resize(ctx.order());
  tr_lin_.resize(ctx.order());
  for (Fel x = 0; x < ctx.order(); ++x) {
    tr_quad_[x] = ctx.trace_q(quad_form(ctx, x, e));
    tr_lin_[x] = ctx.trace_q(x);
  }
}

const CaseKeys& SumEngine::keys() const { return require_keys(keys_); }

CycInt SumEngine::theta_brute(Fel b, FqIdx u, FqIdx v) const {
  const FieldCtx& c = *ctx_;
  const QTables t(c);
  const unsigned q = t.q, p = t.p;
  // Histogram of (Tr(x^{q^e+1}), Tr(x), Tr(bx)) is an exact regrouping of the sum over x.
  std::vector<std::uint64_t> hist(std::size_t{q} * q * q, 0);
  for (Fel x = 0; x < c.order(); ++x)
    ++hist[(std::size_t{tr_quad_[x]} * q + tr_lin_[x]) * q + c.trace_q(c.mul(b, x))];

  const FqIdx mu = c.q_neg(u), mv = c.q_neg(v);
  std::vector<std::int64_t> counts(p, 0);
  for (FqIdx tp = 0; tp < q; ++tp)
    for (FqIdx tx = 0; tx < q; ++tx)
      for (FqIdx tb = 0; tb < q; ++tb) {
        const std::uint64_t h = hist[(std::size_t{tp} * q + tx) * q + tb];
        if (!h) continue;
        for (FqIdx y1 = 1; y1 < q; ++y1)
          for (FqIdx y2 = 0; y2 < q; ++y2) {
            const unsigned side = t.tr[t.plus(t.times(mu, y1), t.times(mv, y2))];
            const FqIdx part = t.plus(t.times(y1, tp), t.times(y2, tx));
            for (FqIdx y3 = 0; y3 < q; ++y3) {
              const unsigned ex = (t.tr[t.plus(part, t.times(y3, tb))] + side) % p;
              counts[ex] += static_cast<std::int64_t>(h);
            }
          }
      }
  return CycInt::from_exponent_counts<std::int64_t>(counts);
}

ClosedValue SumEngine::theta_closed(Fel b, FqIdx u, FqIdx v, std::optional<Fel> gamma_in) const {
  const CaseKeys& k = keys();
  if (b == 0) throw Error(Errc::InvalidArgument, "theta needs b != 0");
  const FieldCtx& c = *ctx_;
  const std::uint64_t q = c.q();
  const std::int64_t qq = static_cast<std::int64_t>(q);
  const std::int64_t K1 = ipow(q, static_cast<int>(k.ell + k.epsilon + 1));
  const std::int64_t K2 = ipow(q, static_cast<int>(k.ell + k.epsilon + 2));

  const auto sol = solver_.gamma(b);
  const bool inT = sol.has_value();
  const Fel gamma = inT ? gamma_in.value_or(*sol) : 0;
  const FqIdx t1 = inT ? c.trace_q(gamma) : 0;
  const FqIdx t2 = inT ? c.trace_q(quad_form(c, gamma, e_)) : 0;
  const FqIdx mp = c.q_from_int(c.m());
  const FqIdx A = c.q_sub(c.q_mul(t1, t1), c.q_mul(mp, t2));
  const FqIdx D = c.q_sub(c.q_mul(v, v), c.q_mul(u, mp));
  auto eta = [&](FqIdx y) { return static_cast<std::int64_t>(c.quad_char_q(y)); };

  struct Row {
    const char* guard;
    bool when;
    std::function<std::int64_t()> value;
  };
  std::vector<Row> rows;
  const bool z1 = t1 == 0, z2 = t2 == 0, zA = A == 0;
  const bool mp0 = mp == 0;
  const FqIdx w = c.q_neg(c.q_mul(u, mp));
  const FqIdx B = D != 0 ? c.q_add(c.q_mul(c.q_div(u, D), c.q_mul(t1, t1)), t2) : 0;
  const FqIdx C = v != 0 ? c.q_add(c.q_mul(c.q_div(u, c.q_mul(v, v)), c.q_mul(t1, t1)), t2) : 0;
  const bool zB = B == 0, zC = C == 0;

  if (u == 0 && v == 0) {
    if (!mp0) {
      rows = {
          {"u=0,v=0;mp!=0;notT|A=0", !inT || zA, [] { return std::int64_t{0}; }},
          {"u=0,v=0;mp!=0;T,t2=0,t1!=0", inT && z2 && !z1, [&] { return -(qq - 1) * K1; }},
          {"u=0,v=0;mp!=0;T,t2!=0,t1=0", inT && !z2 && z1,
           [&] { return -(qq - 1) * K1 * eta(c.q_neg(c.q_mul(mp, t2))); }},
          {"u=0,v=0;mp!=0;T,t2!=0,t1!=0,A!=0", inT && !z2 && !z1 && !zA, [&] { return -(qq - 1) * K1 * eta(A); }},
      };
    } else {
      rows = {
          {"u=0,v=0;mp=0;T,t2=0,t1=0", inT && z2 && z1, [&] { return -(qq - 1) * K2; }},
          {"u=0,v=0;mp=0;T,t1!=0|notT", (inT && !z1) || !inT, [&] { return -(qq - 1) * K1; }},
          {"u=0,v=0;mp=0;T,t2!=0,t1=0", inT && !z2 && z1, [] { return std::int64_t{0}; }},
      };
    }
  } else if (u != 0 && v == 0) {
    if (!mp0) {
      rows = {
          {"u!=0,v=0;mp!=0;notT", !inT, [&] { return -K1 * eta(w); }},
          {"u!=0,v=0;mp!=0;T,A=0", inT && zA, [&] { return -K2 * eta(w); }},
          {"u!=0,v=0;mp!=0;T,t2=0,t1!=0", inT && z2 && !z1, [&] { return K1; }},
          {"u!=0,v=0;mp!=0;T,t2!=0,t1=0", inT && !z2 && z1, [&] { return K1 * eta(c.q_neg(c.q_mul(mp, t2))); }},
          {"u!=0,v=0;mp!=0;T,t2!=0,t1!=0,A!=0", inT && !z2 && !z1 && !zA, [&] { return K1 * eta(A); }},
      };
    } else {
      rows = {
          {"u!=0,v=0;mp=0;T,t1=0,t2=0", inT && z1 && z2, [&] { return K2; }},
          {"u!=0,v=0;mp=0;T,t1!=0|notT", (inT && !z1) || !inT, [&] { return K1; }},
          {"u!=0,v=0;mp=0;T,t2!=0,t1=0", inT && !z2 && z1,
           [&] { return -K2 * eta(c.q_neg(c.q_mul(u, t2))); }},
      };
    }
  } else if (u == 0) {
    if (!mp0) {
      rows = {
          {"u=0,v!=0;mp!=0;notT", !inT, [&] { return -K1; }},
          {"u=0,v!=0;mp!=0;T,t2=0,t1=0", inT && z2 && z1, [&] { return -K2; }},
          {"u=0,v!=0;mp!=0;T,t2=0,t1!=0", inT && z2 && !z1, [&] { return -(qq - 1) * K1; }},
          {"u=0,v!=0;mp!=0;T,t2!=0,t1=0", inT && !z2 && z1, [&] { return K1 * eta(c.q_neg(c.q_mul(mp, t2))); }},
          {"u=0,v!=0;mp!=0;T,t2!=0,t1!=0,A=0", inT && !z2 && !z1 && zA, [] { return std::int64_t{0}; }},
          {"u=0,v!=0;mp!=0;T,t2!=0,t1!=0,A!=0", inT && !z2 && !z1 && !zA, [&] { return K1 * eta(A); }},
      };
    } else {
      rows = {
          {"u=0,v!=0;mp=0;T,t1=0|notT", (inT && z1) || !inT, [] { return std::int64_t{0}; }},
          {"u=0,v!=0;mp=0;T,t2=0,t1!=0", inT && z2 && !z1, [&] { return -(qq - 1) * K1; }},
          {"u=0,v!=0;mp=0;T,t2!=0,t1!=0", inT && !z2 && !z1, [&] { return K1; }},
      };
    }
  } else if (D != 0) {
    if (!mp0) {
      rows = {
          {"u,v!=0,D!=0;mp!=0;notT", !inT, [&] { return -K1 * eta(D); }},
          {"u,v!=0,D!=0;mp!=0;T,t1=0,t2=0", inT && z1 && z2, [&] { return -K2 * eta(D); }},
          {"u,v!=0,D!=0;mp!=0;T,t2=0,t1!=0", inT && z2 && !z1, [&] { return K1; }},
          {"u,v!=0,D!=0;mp!=0;T,t2!=0,t1=0", inT && !z2 && z1, [&] { return K1 * eta(c.q_neg(c.q_mul(mp, t2))); }},
          {"u,v!=0,D!=0;mp!=0;T,t2!=0,t1!=0,A=0", inT && !z2 && !z1 && zA, [] { return std::int64_t{0}; }},
          {"u,v!=0,D!=0;mp!=0;T,t2!=0,t1!=0,A!=0,B!=0", inT && !z2 && !z1 && !zA && !zB,
           [&] { return K1 * eta(A); }},
          {"u,v!=0,D!=0;mp!=0;T,t2!=0,t1!=0,A!=0,B=0", inT && !z2 && !z1 && !zA && zB,
           [&] { return -(qq - 1) * K1 * eta(D); }},
      };
    } else {
      rows = {
          {"u,v!=0,D!=0;mp=0;T,t1=0|notT", (inT && z1) || !inT, [] { return std::int64_t{0}; }},
          {"u,v!=0,D!=0;mp=0;T,t2=0,t1!=0|C!=0", inT && ((z2 && !z1) || (!z2 && !z1 && !zC)), [&] { return K1; }},
          {"u,v!=0,D!=0;mp=0;T,t2!=0,t1!=0,C=0", inT && !z2 && !z1 && zC, [&] { return -(qq - 1) * K1; }},
      };
    }
  } else {
    rows = {
        {"u,v!=0,D=0;notT|A=0", !inT || zA, [] { return std::int64_t{0}; }},
        {"u,v!=0,D=0;T,t2=0,t1!=0", inT && z2 && !z1, [&] { return K1; }},
        {"u,v!=0,D=0;T,t2!=0,t1=0", inT && !z2 && z1,
         [&] { return -(qq - 1) * K1 * eta(c.q_neg(c.q_mul(mp, t2))); }},
        {"u,v!=0,D=0;T,t2!=0,t1!=0,A!=0", inT && !z2 && !z1 && !zA, [&] { return K1 * eta(A); }},
    };
  }

  const Row* hit = nullptr;
  int fired = 0;
  for (const auto& r : rows)
    if (r.when) {
      ++fired;
      hit = &r;
    }
  if (fired != 1)
    throw Error(Errc::UncoveredCase, "theta case guards fired " + std::to_string(fired) + " times for b=" +
                                         std::to_string(b));
  return {hit->value(), hit->guard};
}

CycInt SumEngine::omega_brute(Fel b, FqIdx v) const {
  const FieldCtx& c = *ctx_;
  const QTables t(c);
  const unsigned q = t.q, p = t.p;
  std::vector<std::uint64_t> hist(std::size_t{q} * q, 0);
  for (Fel x = 0; x < c.order(); ++x) ++hist[std::size_t{tr_lin_[x]} * q + c.trace_q(c.mul(b, x))];
  const FqIdx mv = c.q_neg(v);
  std::vector<std::int64_t> counts(p, 0);
  for (FqIdx tx = 0; tx < q; ++tx)
    for (FqIdx tb = 0; tb < q; ++tb) {
      const std::uint64_t h = hist[std::size_t{tx} * q + tb];
      if (!h) continue;
      for (FqIdx y2 = 0; y2 < q; ++y2)
        for (FqIdx y3 = 0; y3 < q; ++y3) {
          const unsigned ex = (t.tr[t.plus(t.times(y2, tx), t.times(y3, tb))] + t.tr[t.times(mv, y2)]) % p;
          counts[ex] += static_cast<std::int64_t>(h);
        }
    }
  return CycInt::from_exponent_counts<std::int64_t>(counts);
}

std::int64_t SumEngine::omega_closed(Fel b, FqIdx v) const {
  const FieldCtx& c = *ctx_;
  const std::int64_t qm = static_cast<std::int64_t>(c.order());
  if (!c.in_subfield(b)) return qm;
  // Only y2 = -y3*b survives; the y3-sum is then q or 0.
  return c.q_mul(v, c.sub_index(b)) == 0 ? qm * static_cast<std::int64_t>(c.q()) : 0;
}

std::int64_t SumEngine::psi_brute(Fel b) const {
  const FieldCtx& c = *ctx_;
  std::int64_t n = 0;
  for (Fel x = 0; x < c.order(); ++x)
    if (tr_quad_[x] == 0 && c.trace_q(c.mul(b, x)) == 0) ++n;
  return n;
}

ClosedValue SumEngine::psi_closed(Fel b, std::optional<Fel> gamma_in) const {
  const CaseKeys& k = keys();
  if (b == 0) throw Error(Errc::InvalidArgument, "psi needs b != 0");
  const FieldCtx& c = *ctx_;
  const std::int64_t q = static_cast<std::int64_t>(c.q());
  const std::int64_t base = ipow(c.q(), static_cast<int>(c.m()) - 2);
  const auto sol = solver_.gamma(b);
  if (!sol) return {base - (q - 1) * ipow(c.q(), static_cast<int>(k.ell + k.epsilon) - 2), "notT"};
  const Fel gamma = gamma_in.value_or(*sol);
  if (c.trace_q(quad_form(c, gamma, e_)) == 0)
    return {base - (q - 1) * ipow(c.q(), static_cast<int>(k.ell + k.epsilon) - 1), "T,t2=0"};
  return {base, "T,t2!=0"};
}

// --- free-function surface ----------------------------------------------------

CycInt theta(const FieldCtx& ctx, Fel b, FqIdx u, FqIdx v, unsigned e, Mode mode) {
  const SumEngine eng(ctx, e);
  if (mode == Mode::brute) return eng.theta_brute(b, u, v);
  return CycInt::integer(ctx.p(), eng.theta_closed(b, u, v).value);
}

CycInt omega(const FieldCtx& ctx, Fel b, FqIdx v, Mode mode) {
  const SumEngine eng(ctx, 1);
  if (mode == Mode::brute) return eng.omega_brute(b, v);
  return CycInt::integer(ctx.p(), eng.omega_closed(b, v));
}

std::int64_t psi(const FieldCtx& ctx, Fel b, unsigned e, Mode mode) {
  const SumEngine eng(ctx, e);
  if (mode == Mode::brute) return eng.psi_brute(b);
  return eng.psi_closed(b).value;
}

}  // namespace fewweight
