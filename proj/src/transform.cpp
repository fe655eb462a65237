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
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fewweight/codes.hpp"
#include "fewweight/error.hpp"

namespace fewweight {

namespace {

constexpr char kMagic[4] = {'F', 'W', 'T', 'C'};
constexpr std::uint32_t kCacheVersion = 1;

template <typename T>
void put(std::ostream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
bool get(std::istream& in, T& v) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) return false;
  v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
  return true;
}

}  // namespace

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
  const auto* b = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 1099511628211ULL;
  }
  return h;
}

CharacterTransform::CharacterTransform(const FieldCtx& ctx, const std::vector<Fel>& members, bool use_cache)
    : ctx_(&ctx), size_(members.size()) {
  for (FqIdx z = 0; z < ctx.q(); ++z) zmul_.push_back(ctx.embed(z));

  std::string path;
  std::uint64_t set_hash = 0;
  if (use_cache && std::getenv("FEWWEIGHT_CACHE_DIR")) {
    set_hash = fnv1a(members.data(), members.size() * sizeof(Fel));
    path = cache_path(set_hash);
    if (load(path, set_hash)) {
      from_cache_ = true;
      return;
    }
  }
  compute(members);
  if (!path.empty()) store(path, set_hash);
}

void CharacterTransform::compute(const std::vector<Fel>& members) {
  const FieldCtx& c = *ctx_;
  const unsigned p = c.p(), n = c.degree();
  const std::uint64_t Q = c.order();

  // Gram matrix of the trace form on the polynomial basis.
  std::vector<Fel> beta(n);
  for (unsigned i = 0; i < n; ++i) {
    std::vector<unsigned> d(n, 0);
    d[i] = 1;
    beta[i] = c.from_digits(d);
  }
  std::vector<unsigned> gram(std::size_t{n} * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j)
      gram[i * n + j] = gram[j * n + i] = c.trace_p(c.mul(beta[i], beta[j]));

  // Indicator, reindexed by G*c_x so the butterfly output lands at c_y.
  table_.assign(Q * p, 0);
  std::vector<unsigned> pw(n);
  for (unsigned i = 0, v = 1; i < n; ++i, v *= p) pw[i] = v;
  for (Fel x : members) {
    const auto dx = c.digits(x);
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < n; ++i) {
      unsigned acc = 0;
      for (unsigned j = 0; j < n; ++j) acc += gram[i * n + j] * dx[j];
      idx += std::uint64_t{acc % p} * pw[i];
    }
    ++table_[idx * p];  // w^0
  }

  // Radix-p butterfly, one axis at a time; multiplying by w^t rotates counts.
  std::vector<std::uint32_t> in(std::size_t{p} * p), out(std::size_t{p} * p);
  for (unsigned axis = 0; axis < n; ++axis) {
    const std::uint64_t stride = pw[axis];
    for (std::uint64_t base = 0; base < Q; ++base) {
      if ((base / stride) % p != 0) continue;
      for (unsigned j = 0; j < p; ++j)
        std::memcpy(&in[j * p], &table_[(base + j * stride) * p], p * sizeof(std::uint32_t));
      std::fill(out.begin(), out.end(), 0);
      for (unsigned k = 0; k < p; ++k)
        for (unsigned j = 0; j < p; ++j) {
          const unsigned rot = (j * k) % p;
          for (unsigned t = 0; t < p; ++t) out[k * p + (t + rot) % p] += in[j * p + t];
        }
      for (unsigned k = 0; k < p; ++k)
        std::memcpy(&table_[(base + k * stride) * p], &out[k * p], p * sizeof(std::uint32_t));
    }
  }
}

std::uint64_t CharacterTransform::zero_count(Fel b) const {
  const FieldCtx& c = *ctx_;
  const unsigned p = c.p();
  std::vector<std::uint64_t> s(p, 0);
  for (Fel z : zmul_) {
    const std::uint32_t* f = &table_[std::uint64_t{c.mul(z, b)} * p];
    for (unsigned t = 0; t < p; ++t) s[t] += f[t];
  }
  // sum_z F(zb) = q * N0 must be a rational integer.
  for (unsigned t = 2; t < p; ++t)
    if (s[t] != s[1]) throw std::logic_error("character transform: non-integral fibre sum");
  const std::uint64_t qn0 = s[0] - s[1];
  if (s[0] < s[1] || qn0 % c.q() != 0) throw std::logic_error("character transform: inexact division by q");
  return qn0 / c.q();
}

std::vector<std::uint64_t> CharacterTransform::all_weights(unsigned jobs) const {
  const std::uint64_t Q = ctx_->order();
  std::vector<std::uint64_t> w(Q);
  jobs = std::max(1u, std::min<unsigned>(jobs, 64));
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t b = lo; b < hi; ++b) w[b] = weight(static_cast<Fel>(b));
  };
  if (jobs == 1) {
    work(0, Q);
    return w;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (Q + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t lo = j * chunk, hi = std::min(Q, lo + chunk);
    if (lo < hi) pool.emplace_back(work, lo, hi);
  }
  for (auto& t : pool) t.join();
  return w;
}

std::string CharacterTransform::cache_path(std::uint64_t set_hash) const {
  const FieldCtx& c = *ctx_;
  const auto& mod = c.modulus();
  const std::uint64_t mh = fnv1a(mod.data(), mod.size() * sizeof(unsigned));
  std::ostringstream name;
  name << "fwt_" << c.p() << "_" << c.s() << "_" << c.m() << "_" << std::hex << mh << "_" << set_hash << ".bin";
  return (std::filesystem::path(std::getenv("FEWWEIGHT_CACHE_DIR")) / name.str()).string();
}

bool CharacterTransform::load(const std::string& path, std::uint64_t set_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  const FieldCtx& c = *ctx_;
  char magic[4];
  std::uint32_t ver = 0, p = 0, s = 0, m = 0;
  std::uint64_t mh = 0, sh = 0, count = 0;
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) return false;
  if (!get(in, ver) || !get(in, p) || !get(in, s) || !get(in, m) || !get(in, mh) || !get(in, sh) || !get(in, count))
    return false;
  const auto& mod = c.modulus();
  if (ver != kCacheVersion || p != c.p() || s != c.s() || m != c.m() || sh != set_hash ||
      mh != fnv1a(mod.data(), mod.size() * sizeof(unsigned)) || count != c.order() * c.p())
    return false;
  std::vector<std::uint32_t> t(count);
  for (auto& x : t)
    if (!get(in, x)) return false;
  table_ = std::move(t);
  return true;
}

void CharacterTransform::store(const std::string& path, std::uint64_t set_hash) const {
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;  // caching is best-effort
    const FieldCtx& c = *ctx_;
    const auto& mod = c.modulus();
    out.write(kMagic, 4);
    put<std::uint32_t>(out, kCacheVersion);
    put<std::uint32_t>(out, c.p());
    put<std::uint32_t>(out, c.s());
    put<std::uint32_t>(out, c.m());
    put<std::uint64_t>(out, fnv1a(mod.data(), mod.size() * sizeof(unsigned)));
    put<std::uint64_t>(out, set_hash);
    put<std::uint64_t>(out, table_.size());
    for (auto x : table_) put<std::uint32_t>(out, x);
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace fewweight
