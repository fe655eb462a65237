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


#ifndef FEWWEIGHT_LINSOLVE_HPP
#define FEWWEIGHT_LINSOLVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fewweight/gf.hpp"

namespace fewweight {

// Dense matrix over F_p, row-major.
struct FpMatrix {
  unsigned rows = 0, cols = 0, p = 0;
  std::vector<unsigned> a;

  unsigned& at(unsigned r, unsigned c) { return a[std::size_t{r} * cols + c]; }
  unsigned at(unsigned r, unsigned c) const { return a[std::size_t{r} * cols + c]; }
};

// x -> a^{q^e} x^{q^{2e}} + a x as an F_p-matrix in the polynomial basis.
// Column i is the image of X^i.
struct LinearizedMap {
  FpMatrix matrix;
  Fel a = 1;
  unsigned e = 1;
  unsigned alpha = 1;  // gcd(m, e)

  Fel apply(const FieldCtx& ctx, Fel x) const;              // direct evaluation
  Fel apply_matrix(const FieldCtx& ctx, Fel x) const;       // via the matrix
};

struct SolveResult {
  bool solvable = false;
  std::optional<Fel> gamma;
  std::vector<Fel> kernel_basis;
};

// Gaussian elimination done once; solve() can then be called for many
// right-hand sides. Pivots are the first nonzero row in each column and free
// variables are set to zero, so solutions are reproducible.
class LinearSystem {
 public:
  LinearSystem(const FieldCtx& ctx, const FpMatrix& m);

  unsigned rank() const { return rank_; }
  const std::vector<Fel>& kernel_basis() const { return kernel_; }
  std::optional<Fel> solve(Fel rhs) const;
  bool in_image(Fel rhs) const { return solve(rhs).has_value(); }

 private:
  const FieldCtx* ctx_;
  unsigned n_;
  unsigned p_;
  FpMatrix reduced_;    // row echelon form R
  FpMatrix transform_;  // E with E*A = R
  std::vector<int> pivot_col_;  // per row, -1 past rank
  unsigned rank_ = 0;
  std::vector<Fel> kernel_;
};

unsigned gcd_u(unsigned a, unsigned b);

LinearizedMap build_map(const FieldCtx& ctx, Fel a, unsigned e);

bool is_permutation(const FieldCtx& ctx, Fel a, unsigned e);

// Solves X^{q^{2e}} + X = -b^{q^e}.
SolveResult solve_gamma(const FieldCtx& ctx, Fel b, unsigned e);

// Precomputed solver for the equation above, shared across many b.
class GammaSolver {
 public:
  GammaSolver(const FieldCtx& ctx, unsigned e);
  SolveResult solve(Fel b) const;
  std::optional<Fel> gamma(Fel b) const;
  const LinearSystem& system() const { return sys_; }

 private:
  const FieldCtx* ctx_;
  unsigned e_;
  LinearSystem sys_;
};

// #T; requires m/gcd(m,e) even.
std::uint64_t t_size(const FieldCtx& ctx, unsigned e);

}  // namespace fewweight

#endif  // FEWWEIGHT_LINSOLVE_HPP
