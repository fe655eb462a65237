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


#include "fewweight/linsolve.hpp"

#include <numeric>

#include "fewweight/error.hpp"

namespace fewweight {
namespace {

unsigned inv_p(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw Error(Errc::DivisionByZero, "inverse of zero mod p");
}

}  // namespace

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }

Fel LinearizedMap::apply(const FieldCtx& ctx, Fel x) const {
  const Fel lead = ctx.frob_q(a, e);
  return ctx.add(ctx.mul(lead, ctx.frob_q(x, 2 * e)), ctx.mul(a, x));
}

Fel LinearizedMap::apply_matrix(const FieldCtx& ctx, Fel x) const {
  const auto d = ctx.digits(x);
  std::vector<unsigned> out(matrix.rows, 0);
  for (unsigned r = 0; r < matrix.rows; ++r) {
    unsigned acc = 0;
    for (unsigned c = 0; c < matrix.cols; ++c) acc = (acc + matrix.at(r, c) * d[c]) % matrix.p;
    out[r] = acc;
  }
  return ctx.from_digits(out);
}

LinearizedMap build_map(const FieldCtx& ctx, Fel a, unsigned e) {
  if (a == 0) throw Error(Errc::ZeroCoefficient, "linearized map needs a != 0");
  if (e == 0) throw Error(Errc::InvalidArgument, "e must be >= 1");
  LinearizedMap f;
  f.a = a;
  f.e = e;
  f.alpha = std::gcd(ctx.m(), e);
  const unsigned n = ctx.degree();
  f.matrix = FpMatrix{n, n, ctx.p(), std::vector<unsigned>(std::size_t{n} * n, 0)};
  Fel basis = 1;
  for (unsigned i = 0; i < n; ++i) {
    const auto img = ctx.digits(f.apply(ctx, basis));
    for (unsigned r = 0; r < n; ++r) f.matrix.at(r, i) = img[r];
    basis *= ctx.p();
  }
  return f;
}

LinearSystem::LinearSystem(const FieldCtx& ctx, const FpMatrix& m)
    : ctx_(&ctx), n_(m.cols), p_(m.p), reduced_(m) {
  transform_ = FpMatrix{m.rows, m.rows, p_, std::vector<unsigned>(std::size_t{m.rows} * m.rows, 0)};
  for (unsigned i = 0; i < m.rows; ++i) transform_.at(i, i) = 1;
  pivot_col_.assign(m.rows, -1);

  auto row_axpy = [&](FpMatrix& mat, unsigned dst, unsigned src, unsigned k) {
    for (unsigned c = 0; c < mat.cols; ++c) mat.at(dst, c) = (mat.at(dst, c) + k * mat.at(src, c)) % p_;
  };
  auto row_scale = [&](FpMatrix& mat, unsigned r, unsigned k) {
    for (unsigned c = 0; c < mat.cols; ++c) mat.at(r, c) = mat.at(r, c) * k % p_;
  };
  auto row_swap = [&](FpMatrix& mat, unsigned r1, unsigned r2) {
    for (unsigned c = 0; c < mat.cols; ++c) std::swap(mat.at(r1, c), mat.at(r2, c));
  };

  unsigned row = 0;
  for (unsigned col = 0; col < n_ && row < m.rows; ++col) {
    unsigned piv = row;
    while (piv < m.rows && reduced_.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    row_swap(reduced_, row, piv);
    row_swap(transform_, row, piv);
    const unsigned k = inv_p(reduced_.at(row, col), p_);
    row_scale(reduced_, row, k);
    row_scale(transform_, row, k);
    for (unsigned r = 0; r < m.rows; ++r) {
      if (r == row || reduced_.at(r, col) == 0) continue;
      const unsigned f = p_ - reduced_.at(r, col);
      row_axpy(reduced_, r, row, f);
      row_axpy(transform_, r, row, f);
    }
    pivot_col_[row] = static_cast<int>(col);
    ++row;
  }
  rank_ = row;

  std::vector<bool> is_pivot(n_, false);
  for (unsigned r = 0; r < rank_; ++r) is_pivot[pivot_col_[r]] = true;
  for (unsigned free = 0; free < n_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<unsigned> x(n_, 0);
    x[free] = 1;
    for (unsigned r = 0; r < rank_; ++r) x[pivot_col_[r]] = (p_ - reduced_.at(r, free)) % p_;
    kernel_.push_back(ctx.from_digits(x));
  }
}

std::optional<Fel> LinearSystem::solve(Fel rhs) const {
  const auto d = ctx_->digits(rhs);
  const unsigned rows = transform_.rows;
  std::vector<unsigned> er(rows, 0);
  for (unsigned r = 0; r < rows; ++r) {
    unsigned acc = 0;
    for (unsigned c = 0; c < rows; ++c) acc = (acc + transform_.at(r, c) * d[c]) % p_;
    er[r] = acc;
  }
  for (unsigned r = rank_; r < rows; ++r)
    if (er[r] != 0) return std::nullopt;
  std::vector<unsigned> x(n_, 0);
  for (unsigned r = 0; r < rank_; ++r) x[pivot_col_[r]] = er[r];
  return ctx_->from_digits(x);
}

bool is_permutation(const FieldCtx& ctx, Fel a, unsigned e) {
  if (a == 0) throw Error(Errc::ZeroCoefficient, "a must be nonzero");
  const unsigned alpha = std::gcd(ctx.m(), e);
  if ((ctx.m() / alpha) % 2 != 0) return true;
  std::uint64_t qa = 1;
  for (unsigned i = 0; i < alpha; ++i) qa *= ctx.q();
  const Fel lhs = ctx.pow(a, (ctx.order() - 1) / (qa + 1));
  const Fel sign = ((ctx.ell() / alpha) % 2 == 0) ? Fel{1} : ctx.neg(1);
  return lhs != sign;
}

GammaSolver::GammaSolver(const FieldCtx& ctx, unsigned e)
    : ctx_(&ctx), e_(e), sys_(ctx, build_map(ctx, 1, e).matrix) {}

std::optional<Fel> GammaSolver::gamma(Fel b) const {
  return sys_.solve(ctx_->neg(ctx_->frob_q(b, e_)));
}

SolveResult GammaSolver::solve(Fel b) const {
  SolveResult r;
  r.gamma = gamma(b);
  r.solvable = r.gamma.has_value();
  r.kernel_basis = sys_.kernel_basis();
  return r;
}

SolveResult solve_gamma(const FieldCtx& ctx, Fel b, unsigned e) { return GammaSolver(ctx, e).solve(b); }

std::uint64_t t_size(const FieldCtx& ctx, unsigned e) {
  const unsigned alpha = std::gcd(ctx.m(), e);
  if ((ctx.m() / alpha) % 2 != 0) throw Error(Errc::OddCaseUnsupported, "m/gcd(m,e) is odd");
  // b -> -b^{q^e} is a bijection, so #T equals the size of the image.
  const LinearSystem sys(ctx, build_map(ctx, 1, e).matrix);
  std::uint64_t r = 1;
  for (unsigned i = 0; i < sys.rank(); ++i) r *= ctx.p();
  return r;
}

}  // namespace fewweight
