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

#ifndef FEWWEIGHT_CYCINT_HPP
#define FEWWEIGHT_CYCINT_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fewweight {

/// Exact element of the cyclotomic ring Z[w], w a primitive p-th root of
/// unity, stored as c_0 + c_1 w + ... + c_{p-2} w^{p-2}.
///
/// The representation is reduced modulo 1 + w + ... + w^{p-1}, which makes
/// it unique: two values are equal iff their coefficient vectors are.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(unsigned p);

  static CycInt integer(unsigned p, std::int64_t value);
  /// w^t for any t >= 0 (t is reduced mod p).
  static CycInt root_power(unsigned p, std::uint64_t t);
  /// sum_t counts[t] w^t for a length-p count vector.
  template <typename T>
  static CycInt from_exponent_counts(std::span<const T> counts);

  unsigned prime() const noexcept { return p_; }
  std::span<const std::int64_t> coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_rational_integer() const noexcept;
  std::optional<std::int64_t> as_integer() const noexcept;
  /// Throws std::domain_error unless is_rational_integer().
  std::int64_t to_integer() const;

  /// Complex conjugation, i.e. the automorphism w -> w^{-1}.
  CycInt conj() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);
  CycInt& operator*=(std::int64_t k);
  CycInt operator-() const;

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, std::int64_t k) { return a *= k; }
  friend CycInt operator*(std::int64_t k, CycInt a) { return a *= k; }
  friend bool operator==(const CycInt& a, const CycInt& b) = default;

 private:
  void check_compatible(const CycInt& rhs) const;
  // Folds a length-p vector (w^{p-1} present) into reduced form.
  static CycInt reduce(unsigned p, std::span<const std::int64_t> full);

  unsigned p_ = 0;
  std::vector<std::int64_t> c_;
};

template <typename T>
CycInt CycInt::from_exponent_counts(std::span<const T> counts) {
  std::vector<std::int64_t> full(counts.begin(), counts.end());
  return reduce(static_cast<unsigned>(full.size()), full);
}

}  // namespace fewweight

#endif  // FEWWEIGHT_CYCINT_HPP
