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

#include "fewweight/cycint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fewweight {

CycInt::CycInt(unsigned p) : p_(p), c_(p >= 2 ? p - 1 : 0, 0) {
  if (p < 2) throw std::invalid_argument("CycInt: p must be a prime >= 2");
}

CycInt CycInt::integer(unsigned p, std::int64_t value) {
  CycInt r(p);
  r.c_[0] = value;
  return r;
}

CycInt CycInt::root_power(unsigned p, std::uint64_t t) {
  std::vector<std::int64_t> full(p, 0);
  full[t % p] = 1;
  return reduce(p, full);
}

CycInt CycInt::reduce(unsigned p, std::span<const std::int64_t> full) {
  if (full.size() != p) throw std::invalid_argument("CycInt::reduce: length must equal p");
  CycInt r(p);
  const std::int64_t top = full[p - 1];
  for (unsigned i = 0; i + 1 < p; ++i) r.c_[i] = full[i] - top;
  return r;
}

bool CycInt::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

bool CycInt::is_rational_integer() const noexcept {
  return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(),
                     [](std::int64_t x) { return x == 0; });
}

std::optional<std::int64_t> CycInt::as_integer() const noexcept {
  if (c_.empty() || !is_rational_integer()) return std::nullopt;
  return c_[0];
}

std::int64_t CycInt::to_integer() const {
  auto v = as_integer();
  if (!v) throw std::domain_error("CycInt is not a rational integer: " + to_string());
  return *v;
}

CycInt CycInt::conj() const {
  std::vector<std::int64_t> full(p_, 0);
  for (unsigned t = 0; t + 1 < p_; ++t) full[(p_ - t) % p_] += c_[t];
  return reduce(p_, full);
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> acc = 0.0;
  for (unsigned t = 0; t < c_.size(); ++t) {
    const double angle = 2.0 * std::numbers::pi * t / p_;
    acc += static_cast<double>(c_[t]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (unsigned t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    if (!first) out << (c_[t] > 0 ? " + " : " - ");
    else if (c_[t] < 0) out << "-";
    const auto mag = c_[t] < 0 ? -c_[t] : c_[t];
    if (t == 0) out << mag;
    else {
      if (mag != 1) out << mag << "*";
      out << "w^" << t;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

void CycInt::check_compatible(const CycInt& rhs) const {
  if (p_ != rhs.p_) throw std::invalid_argument("CycInt: mismatched primes");
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
  check_compatible(rhs);
  // Multiply modulo w^p - 1, then fold w^{p-1}.
  std::vector<std::int64_t> full(p_, 0);
  for (unsigned i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j + 1 < p_; ++j) full[(i + j) % p_] += c_[i] * rhs.c_[j];
  }
  *this = reduce(p_, full);
  return *this;
}

CycInt& CycInt::operator*=(std::int64_t k) {
  for (auto& x : c_) x *= k;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

}  // namespace fewweight
