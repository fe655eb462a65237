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


#include "fewweight/gf.hpp"

#include <algorithm>

#include "fewweight/error.hpp"

namespace fewweight {
namespace {

using Poly = std::vector<unsigned>;  // little-endian over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime: a^{p-2}.
  std::uint64_t r = 1, b = a % p;
  for (unsigned k = p - 2; k; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<unsigned>(r);
}

Poly poly_rem(Poly a, const Poly& f, unsigned p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const unsigned lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const unsigned c = static_cast<unsigned>(std::uint64_t{a.back()} * lead_inv % p);
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + p - static_cast<unsigned>(std::uint64_t{c} * f[i] % p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_rem(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p) ++p;
  unsigned s = 0;
  while (q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<unsigned>(p), s);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const std::vector<unsigned>& f_in, unsigned p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  const Poly x = {0, 1};
  Poly h = poly_rem(x, f, p);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    // h <- h^p mod f, so h = X^{p^k}.
    Poly acc = {1};
    for (unsigned i = 0; i < p; ++i) acc = poly_mulmod(acc, h, f, p);
    h = acc;
    Poly d = h;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    if (poly_gcd(d, f, p).size() > 1) return false;
  }
  return true;
}

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<unsigned> f(n + 1, 0);
    std::uint64_t t = code;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<unsigned>(t % p);
      t /= p;
    }
    f[n] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

// --- element plumbing -------------------------------------------------------

std::vector<unsigned> FieldCtx::digits(Fel x) const {
  std::vector<unsigned> d(n_);
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Fel FieldCtx::from_digits(const std::vector<unsigned>& d) const {
  Fel x = 0;
  for (unsigned i = std::min<std::size_t>(d.size(), n_); i-- > 0;) x = x * p_ + d[i] % p_;
  return x;
}

Fel FieldCtx::add(Fel a, Fel b) const {
  Fel r = 0;
  for (unsigned i = 0; i < n_ && (a | b); ++i) {
    r += static_cast<Fel>(((a % p_) + (b % p_)) % p_ * pow_p_[i]);
    a /= p_;
    b /= p_;
  }
  return r;
}

Fel FieldCtx::neg(Fel a) const {
  Fel r = 0;
  for (unsigned i = 0; i < n_ && a; ++i) {
    r += static_cast<Fel>((p_ - a % p_) % p_ * pow_p_[i]);
    a /= p_;
  }
  return r;
}

Fel FieldCtx::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel FieldCtx::scale(unsigned c, Fel a) const {
  c %= p_;
  Fel r = 0;
  for (unsigned i = 0; i < n_ && a; ++i) {
    r += static_cast<Fel>((a % p_) * c % p_ * pow_p_[i]);
    a /= p_;
  }
  return r;
}

Fel FieldCtx::poly_mul(Fel a, Fel b) const {
  return from_digits(poly_mulmod(digits(a), digits(b), modulus_, p_));
}

Fel FieldCtx::poly_pow(Fel a, std::uint64_t k) const {
  Fel r = 1;
  while (k) {
    if (k & 1) r = poly_mul(r, a);
    a = poly_mul(a, a);
    k >>= 1;
  }
  return r;
}

Fel FieldCtx::mul(Fel a, Fel b) const {
  if (a == 0 || b == 0) return 0;
  if (!has_tables()) return poly_mul(a, b);
  std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
  if (e >= order_ - 1) e -= order_ - 1;
  return exp_[e];
}

Fel FieldCtx::inv(Fel a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (!has_tables()) return poly_pow(a, order_ - 2);
  return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

Fel FieldCtx::pow(Fel a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t r = k % (order_ - 1);
  if (!has_tables()) return poly_pow(a, r);
  return exp_[std::uint64_t{log_[a]} * r % (order_ - 1)];
}

Fel FieldCtx::frob(Fel a, unsigned k) const { return pow(a, pow_p_[k % n_]); }

std::uint32_t FieldCtx::log(Fel a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "log of zero");
  if (!has_tables()) throw Error(Errc::InvalidArgument, "log tables not built for this field size");
  return log_[a];
}

Fel FieldCtx::exp(std::uint64_t i) const {
  if (!has_tables()) return poly_pow(gen_, i % (order_ - 1));
  return exp_[i % (order_ - 1)];
}

// --- subfield ---------------------------------------------------------------

Fel FieldCtx::embed(FqIdx y) const {
  if (y >= q_) throw Error(Errc::InvalidArgument, "F_q index out of range");
  return sub_embed_[y];
}

FqIdx FieldCtx::sub_index(Fel x) const {
  auto it = sub_of_.find(x);
  if (it == sub_of_.end()) throw Error(Errc::NotInSubfield, "element " + std::to_string(x) + " is not in F_q");
  return it->second;
}

FqIdx FieldCtx::q_add(FqIdx a, FqIdx b) const {
  FqIdx r = 0;
  for (unsigned i = 0; i < s_ && (a | b); ++i) {
    r += static_cast<FqIdx>(((a % p_) + (b % p_)) % p_ * pow_p_[i]);
    a /= p_;
    b /= p_;
  }
  return r;
}

FqIdx FieldCtx::q_scale(unsigned c, FqIdx a) const {
  c %= p_;
  FqIdx r = 0;
  for (unsigned i = 0; i < s_ && a; ++i) {
    r += static_cast<FqIdx>((a % p_) * c % p_ * pow_p_[i]);
    a /= p_;
  }
  return r;
}

FqIdx FieldCtx::q_neg(FqIdx a) const { return q_scale(p_ - 1, a); }
FqIdx FieldCtx::q_sub(FqIdx a, FqIdx b) const { return q_add(a, q_neg(b)); }

FqIdx FieldCtx::q_mul(FqIdx a, FqIdx b) const {
  if (a == 0 || b == 0) return 0;
  return sub_exp_[(sub_log_[a] + sub_log_[b]) % (q_ - 1)];
}

FqIdx FieldCtx::q_inv(FqIdx a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_q");
  return sub_exp_[(q_ - 1 - sub_log_[a]) % (q_ - 1)];
}

FqIdx FieldCtx::q_from_int(std::int64_t c) const {
  const std::int64_t pp = p_;
  return static_cast<FqIdx>(((c % pp) + pp) % pp);
}

// --- traces and characters ---------------------------------------------------

FqIdx FieldCtx::trace_q_slow(Fel x) const {
  FqIdx r = 0;
  for (unsigned i = 0; i < n_ && x; ++i) {
    const unsigned d = x % p_;
    if (d) r = q_add(r, q_scale(d, basis_trace_[i]));
    x /= p_;
  }
  return r;
}

FqIdx FieldCtx::trace_q(Fel x) const { return trq_.empty() ? trace_q_slow(x) : trq_[x]; }

unsigned FieldCtx::trace_abs(Fel y) const { return sub_trace_[sub_index(y)]; }

unsigned FieldCtx::trace_p(Fel x) const { return sub_trace_[trace_q(x)]; }

int FieldCtx::quad_char(Fel x, Level level) const {
  if (level == Level::small) return quad_char_q(sub_index(x));
  if (x == 0) return 0;
  if (has_tables()) return (log_[x] & 1) ? -1 : 1;
  return pow(x, (order_ - 1) / 2) == 1 ? 1 : -1;
}

int FieldCtx::quad_char_q(FqIdx y) const {
  if (y == 0) return 0;
  return (sub_log_[y] & 1) ? -1 : 1;
}

CycInt FieldCtx::add_char(Fel x, Level level) const {
  if (level == Level::small) return add_char_q(sub_index(x));
  return CycInt::root_power(p_, trace_p(x));
}

// --- construction -------------------------------------------------------------

void FieldCtx::build_tables() {
  exp_.assign(order_ - 1, 0);
  log_.assign(order_, 0);
  Fel x = 1;
  for (std::uint64_t i = 0; i + 1 < order_; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = poly_mul(x, gen_);
  }
}

void FieldCtx::build_subfield() {
  const Fel zeta = pow(gen_, (order_ - 1) / (q_ - 1));  // generates F_q^*
  const auto* conway = conway_polynomial(p_, s_);
  sub_modulus_ = conway ? *conway : smallest_irreducible(p_, s_);

  // Basis root: the first power of zeta that is a root of sub_modulus_.
  Fel root = 1;
  if (s_ > 1) {
    Fel cand = zeta;
    bool found = false;
    for (std::uint64_t j = 1; j < q_ && !found; ++j, cand = mul(cand, zeta)) {
      Fel val = 0;
      for (std::size_t i = sub_modulus_.size(); i-- > 0;) val = add(mul(val, cand), sub_modulus_[i]);
      if (val == 0) {
        root = cand;
        found = true;
      }
    }
    if (!found) throw Error(Errc::InvalidArgument, "subfield modulus has no root");
  }
  std::vector<Fel> zpow(s_);
  Fel z = 1;
  for (unsigned j = 0; j < s_; ++j) {
    zpow[j] = z;
    z = mul(z, root);
  }
  sub_embed_.assign(q_, 0);
  sub_of_.clear();
  sub_of_.reserve(q_);
  for (FqIdx y = 0; y < q_; ++y) {
    Fel x = 0;
    FqIdx t = y;
    for (unsigned j = 0; j < s_; ++j) {
      x = add(x, scale(t % p_, zpow[j]));
      t /= p_;
    }
    sub_embed_[y] = x;
    sub_of_.emplace(x, y);
  }
  if (sub_of_.size() != q_) throw Error(Errc::InvalidArgument, "subfield basis is degenerate");
  sub_exp_.assign(q_ - 1, 0);
  sub_log_.assign(q_, 0);
  Fel w = 1;
  for (std::uint64_t j = 0; j + 1 < q_; ++j) {
    const FqIdx y = sub_of_.at(w);
    sub_exp_[j] = y;
    sub_log_[y] = static_cast<std::uint32_t>(j);
    w = mul(w, zeta);
  }
  sub_trace_.assign(q_, 0);
  for (FqIdx y = 0; y < q_; ++y) {
    Fel acc = 0;
    for (unsigned i = 0; i < s_; ++i) acc = add(acc, frob(sub_embed_[y], i));
    if (acc >= p_) throw Error(Errc::InvalidArgument, "subfield trace left F_p");
    sub_trace_[y] = acc;
  }
}

void FieldCtx::build_traces() {
  basis_trace_.assign(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    const Fel b = static_cast<Fel>(pow_p_[i]);
    Fel acc = 0;
    for (unsigned j = 0; j < m_; ++j) acc = add(acc, frob_q(b, j));
    basis_trace_[i] = sub_index(acc);
  }
  if (!has_tables()) return;
  trq_.assign(order_, 0);
  unsigned top = 0;
  for (std::uint64_t c = 1; c < order_; ++c) {
    if (top + 1 < n_ && c >= pow_p_[top + 1]) ++top;
    const std::uint64_t d = c / pow_p_[top];
    trq_[c] = q_add(trq_[c - d * pow_p_[top]], q_scale(static_cast<unsigned>(d), basis_trace_[top]));
  }
}

FieldCtx build_tower(unsigned p, unsigned s, unsigned m, const TowerOptions& opts) {
  if (p == 2) throw Error(Errc::EvenP, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(Errc::NonPrimeP, std::to_string(p) + " is not prime");
  if (s == 0 || m == 0) throw Error(Errc::InvalidArgument, "s and m must be positive");
  const unsigned n = s * m;
  const std::uint64_t order = checked_power(p, n, kMaxOrder);
  if (order > kMaxOrder)
    throw Error(Errc::SizeOverflow, "p^(s*m) exceeds the supported order " + std::to_string(kMaxOrder));

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.s_ = s;
  ctx.m_ = m;
  ctx.n_ = n;
  ctx.q_ = checked_power(p, s, kMaxOrder);
  ctx.order_ = order;
  ctx.pow_p_.resize(n + 1);
  for (unsigned i = 0; i <= n; ++i) ctx.pow_p_[i] = checked_power(p, i, kMaxOrder);

  const std::vector<unsigned>* conway = conway_polynomial(p, n);
  if (opts.modulus == ModulusChoice::given) {
    ctx.modulus_ = opts.given_modulus;
    ctx.modulus_source_ = "given";
    if (ctx.modulus_.size() != n + 1 || ctx.modulus_.back() != 1 ||
        std::any_of(ctx.modulus_.begin(), ctx.modulus_.end(), [p](unsigned c) { return c >= p; }))
      throw Error(Errc::InvalidArgument, "given modulus must be monic of degree s*m with digits < p");
  } else if (opts.modulus == ModulusChoice::conway && conway) {
    ctx.modulus_ = *conway;
    ctx.modulus_source_ = "conway";
  } else {
    // Lower coefficients read as a base-p integer.
    ctx.modulus_source_ = "smallest";
    ctx.modulus_ = smallest_irreducible(p, n);
  }
  if (!is_irreducible(ctx.modulus_, p)) throw Error(Errc::InvalidArgument, "modulus is reducible over F_p");

  const auto factors = prime_factors(order - 1);
  auto primitive = [&](Fel c) {
    if (c == 0) return false;
    for (auto r : factors)
      if (ctx.poly_pow(c, (order - 1) / r) == 1) return false;
    return true;
  };
  ctx.gen_ = 0;
  if (n >= 2 && primitive(p)) ctx.gen_ = p;
  for (Fel c = 1; ctx.gen_ == 0 && c < order; ++c)
    if (primitive(c)) ctx.gen_ = c;

  if (order <= kTableLimit) ctx.build_tables();
  ctx.build_subfield();
  ctx.build_traces();
  return ctx;
}

}  // namespace fewweight
