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


#include <map>
#include <sstream>

#include "fewweight/charsums.hpp"
#include "fewweight/codes.hpp"
#include "fewweight/error.hpp"
#include "fewweight/theory.hpp"

namespace fewweight {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::D1: return "D1";
    case Variant::D2: return "D2";
    case Variant::D3: return "D3";
    case Variant::E1: return "E1";
    case Variant::E2: return "E2";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& s) {
  for (Variant v : {Variant::D1, Variant::D2, Variant::D3, Variant::E1, Variant::E2})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::string to_string(const CodeSpec& s) {
  std::ostringstream out;
  out << to_string(s.variant) << "(q=" << s.q << ",m=" << s.m << ",e=" << s.e << ",u=" << s.u << ",v=" << s.v << ")";
  return out.str();
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, a] : pairs) t += a;
  return t;
}

DefiningSet build_set(const FieldCtx& ctx, const CodeSpec& spec) {
  if (spec.q != ctx.q() || spec.m != ctx.m())
    throw Error(Errc::SpecMismatch, to_string(spec) + " does not match field of order " + std::to_string(ctx.q()) +
                                        "^" + std::to_string(ctx.m()));
  if (spec.e == 0) throw Error(Errc::InvalidArgument, "e must be positive");
  if (spec.u >= ctx.q() || spec.v >= ctx.q()) throw Error(Errc::InvalidArgument, "u, v must lie in [0, q)");

  DefiningSet out{spec, {}};
  for (Fel x = 1; x < ctx.order(); ++x) {
    const bool in1 = ctx.trace_q(ctx.mul(x, ctx.frob_q(x, spec.e))) == spec.u;
    const bool in2 = ctx.trace_q(x) == spec.v;
    bool keep = false;
    switch (spec.variant) {
      case Variant::D1: keep = in1 && in2; break;
      case Variant::D2: keep = in1 && !in2; break;
      case Variant::D3: keep = in1 || in2; break;
      case Variant::E1: keep = in1; break;
      case Variant::E2: keep = in2; break;
    }
    if (keep) out.members.push_back(x);
  }
  return out;
}

std::vector<FqIdx> codeword(const FieldCtx& ctx, const DefiningSet& set, Fel b) {
  std::vector<FqIdx> c;
  c.reserve(set.members.size());
  for (Fel x : set.members) c.push_back(ctx.trace_q(ctx.mul(b, x)));
  return c;
}

std::uint64_t codeword_weight(const FieldCtx& ctx, const DefiningSet& set, Fel b) {
  std::uint64_t w = 0;
  for (Fel x : set.members) w += ctx.trace_q(ctx.mul(b, x)) != 0;
  return w;
}

WeightEnumerator enumerator_from_weights(const FieldCtx& ctx, std::uint64_t n, const std::vector<std::uint64_t>& w) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (auto x : w) ++hist[x];
  const std::uint64_t zeros = hist[0];
  // The kernel of b -> c_b is an F_q-subspace, so its size is q^{m-k}.
  unsigned j = 0;
  std::uint64_t z = 1;
  while (z < zeros) {
    z *= ctx.q();
    ++j;
  }
  if (z != zeros) throw std::logic_error("zero-codeword count " + std::to_string(zeros) + " is not a power of q");

  WeightEnumerator out;
  out.n = n;
  out.k = ctx.m() - j;
  for (const auto& [wt, cnt] : hist) {
    if (wt == 0) continue;
    if (cnt % zeros) throw std::logic_error("weight multiplicity not divisible by kernel size");
    out.pairs.emplace_back(wt, cnt / zeros);
  }
  out.d = out.pairs.empty() ? 0 : out.pairs.front().first;
  return out;
}

WeightEnumerator weight_distribution(const FieldCtx& ctx, const DefiningSet& set, const WeightOptions& opts) {
  if (opts.method == Method::naive) {
    if (ctx.order() > kNaiveLimit)
      throw Error(Errc::SizeGuard, "naive enumeration is limited to fields of order <= " + std::to_string(kNaiveLimit));
    std::vector<std::uint64_t> w(ctx.order());
    for (Fel b = 0; b < ctx.order(); ++b) w[b] = codeword_weight(ctx, set, b);
    return enumerator_from_weights(ctx, set.members.size(), w);
  }
  const CharacterTransform ft(ctx, set.members, opts.use_cache);
  return enumerator_from_weights(ctx, set.members.size(), ft.all_weights(opts.jobs));
}

namespace {

std::int64_t d1_weight(const SumEngine& eng, Fel b, FqIdx u, FqIdx v, std::string& note) {
  const FieldCtx& c = eng.ctx();
  const std::int64_t q = static_cast<std::int64_t>(c.q());
  const std::int64_t n = closed_form_N(c, u, v, eng.e());
  if (b == 0) return 0;
  const ClosedValue th = eng.theta_closed(b, u, v);
  note += "theta:" + th.guard;
  const std::int64_t num = th.value + eng.omega_closed(b, v);
  if (num % (q * q * q)) throw std::logic_error("theta + omega not divisible by q^3");
  return n - num / (q * q * q);
}

std::int64_t e1_weight(const SumEngine& eng, Fel b, std::string& note) {
  if (b == 0) return 0;
  const ClosedValue ps = eng.psi_closed(b);
  note += "psi:" + ps.guard;
  return n_E1(eng.ctx(), eng.e()) + 1 - ps.value;
}

std::int64_t e2_weight(const FieldCtx& c, Fel b, FqIdx v) {
  if (b == 0) return 0;
  const std::int64_t q = static_cast<std::int64_t>(c.q());
  if (!c.in_subfield(b)) return (q - 1) * ipow(c.q(), static_cast<int>(c.m()) - 2);
  return v != 0 ? ipow(c.q(), static_cast<int>(c.m()) - 1) : 0;
}

}  // namespace

ClosedWeight closed_form_weight(const SumEngine& eng, const DefiningSet& set, Fel b) {
  const FieldCtx& c = eng.ctx();
  const CodeSpec& s = set.spec;
  ClosedWeight out;
  auto fallback = [&](const std::string& why) {
    out.weight = codeword_weight(c, set, b);
    out.closed = false;
    out.note = why;
    return out;
  };
  if (s.e != eng.e()) throw Error(Errc::SpecMismatch, "engine built for a different e");
  if (!eng.closed_supported()) return fallback("m/alpha odd");
  const bool u0 = s.u == 0;
  try {
    std::int64_t w = 0;
    switch (s.variant) {
      case Variant::D1: w = d1_weight(eng, b, s.u, s.v, out.note); break;
      case Variant::E1:
        if (!u0) return fallback("E1 with u != 0");
        w = e1_weight(eng, b, out.note);
        break;
      case Variant::E2: w = e2_weight(c, b, s.v); break;
      case Variant::D2:
        if (!u0) return fallback("D2 with u != 0");
        w = e1_weight(eng, b, out.note) - d1_weight(eng, b, 0, s.v, out.note);
        break;
      case Variant::D3:
        if (!u0) return fallback("D3 with u != 0");
        w = e1_weight(eng, b, out.note) - d1_weight(eng, b, 0, s.v, out.note) + e2_weight(c, b, s.v);
        break;
    }
    if (w < 0) throw std::logic_error("negative closed-form weight");
    out.weight = static_cast<std::uint64_t>(w);
    return out;
  } catch (const Error& e) {
    if (e.code() != Errc::UncoveredCase) throw;
    return fallback(e.what());
  }
}

}  // namespace fewweight
