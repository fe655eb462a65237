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


#include <gtest/gtest.h>

#include <set>

#include "fewweight/case_keys.hpp"
#include "fewweight/error.hpp"
#include "fewweight/linsolve.hpp"

using namespace fewweight;

namespace {

struct Shape {
  unsigned p, s, m;
};
const Shape kFields[] = {{3, 1, 2}, {3, 1, 4}, {3, 1, 6}, {5, 1, 2}, {5, 1, 4}, {3, 2, 2}, {3, 2, 4}, {7, 1, 2}};

// a^{q^e} x^{q^{2e}} + a x without the matrix.
Fel direct(const FieldCtx& c, Fel a, unsigned e, Fel x) {
  return c.add(c.mul(c.frob_q(a, e), c.frob_q(x, 2 * e)), c.mul(a, x));
}

}  // namespace

TEST(Linsolve, MatrixMatchesDirectEvaluation) {
  for (const auto& sh : kFields) {
    const FieldCtx c = build_tower(sh.p, sh.s, sh.m);
    for (unsigned e = 1; e <= sh.m; ++e)
      for (Fel a : {Fel{1}, c.generator()}) {
        const LinearizedMap lm = build_map(c, a, e);
        EXPECT_EQ(lm.alpha, gcd_u(sh.m, e));
        for (Fel x = 0; x < c.order(); x += 1 + c.order() / 500) {
          ASSERT_EQ(lm.apply(c, x), direct(c, a, e, x));
          ASSERT_EQ(lm.apply_matrix(c, x), lm.apply(c, x));
        }
      }
  }
}

TEST(Linsolve, ZeroCoefficientRejected) {
  const FieldCtx c = build_tower(3, 1, 4);
  try {
    (void)build_map(c, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroCoefficient);
  }
}

TEST(Linsolve, RankNullityAndSolutions) {
  for (const auto& sh : kFields) {
    const FieldCtx c = build_tower(sh.p, sh.s, sh.m);
    for (unsigned e = 1; e <= sh.m; ++e) {
      const LinearizedMap lm = build_map(c, 1, e);
      const LinearSystem sys(c, lm.matrix);
      EXPECT_EQ(sys.rank() + sys.kernel_basis().size(), c.degree());
      for (Fel k : sys.kernel_basis()) EXPECT_EQ(lm.apply(c, k), 0u);
      std::set<Fel> image;
      for (Fel x = 0; x < c.order(); ++x) image.insert(lm.apply(c, x));
      std::uint64_t expect = 1;
      for (unsigned i = 0; i < sys.rank(); ++i) expect *= c.p();
      EXPECT_EQ(image.size(), expect);
      for (Fel r = 0; r < c.order(); ++r) {
        const auto sol = sys.solve(r);
        ASSERT_EQ(sol.has_value(), image.count(r) == 1) << r;
        if (sol) {
          ASSERT_EQ(lm.apply(c, *sol), r);
        }
      }
    }
  }
}

TEST(Linsolve, TSizeMatchesExhaustiveImage) {
  for (const auto& sh : kFields) {
    const FieldCtx c = build_tower(sh.p, sh.s, sh.m);
    for (unsigned e = 1; e <= sh.m; ++e) {
      const CaseKeys k = case_keys(c.q(), sh.m, e, sh.p);
      if (!k.m_over_alpha_even) {
        try {
          (void)t_size(c, e);
          FAIL();
        } catch (const Error& err) {
          EXPECT_EQ(err.code(), Errc::OddCaseUnsupported);
        }
        continue;
      }
      std::set<Fel> image;
      for (Fel x = 0; x < c.order(); ++x) image.insert(direct(c, 1, e, x));
      std::uint64_t count = 0;
      for (Fel b = 0; b < c.order(); ++b) count += image.count(c.neg(c.frob_q(b, e)));
      EXPECT_EQ(t_size(c, e), count);
      if (k.ell_over_alpha_even) EXPECT_EQ(count, static_cast<std::uint64_t>(ipow(c.q(), sh.m - 2 * k.alpha)));
      else EXPECT_EQ(count, c.order());
    }
  }
}

TEST(Linsolve, TSizeKnownValues) {
  EXPECT_EQ(t_size(build_tower(3, 1, 4), 2), 81u);
  EXPECT_EQ(t_size(build_tower(3, 1, 4), 1), 9u);
  EXPECT_EQ(t_size(build_tower(3, 1, 6), 1), 729u);
  EXPECT_EQ(t_size(build_tower(3, 1, 8), 1), 729u);
}

TEST(Linsolve, PermutationCriterionExhaustive) {
  for (const auto& sh : kFields) {
    const FieldCtx c = build_tower(sh.p, sh.s, sh.m);
    for (unsigned e = 1; e <= sh.m; ++e)
      for (Fel a = 1; a < c.order(); a += 1 + c.order() / 40) {
        std::set<Fel> image;
        for (Fel x = 0; x < c.order(); ++x) image.insert(direct(c, a, e, x));
        EXPECT_EQ(is_permutation(c, a, e), image.size() == c.order()) << sh.p << "^" << sh.s << " m=" << sh.m << " e=" << e
                                                                       << " a=" << a;
      }
  }
}

TEST(Linsolve, GammaSolvesEquation) {
  for (const auto& sh : kFields) {
    const FieldCtx c = build_tower(sh.p, sh.s, sh.m);
    for (unsigned e = 1; e <= sh.m; ++e) {
      const GammaSolver gs(c, e);
      for (Fel b = 0; b < c.order(); ++b) {
        const SolveResult r = gs.solve(b);
        const SolveResult r2 = solve_gamma(c, b, e);
        ASSERT_EQ(r.solvable, r2.solvable);
        ASSERT_EQ(r.gamma, r2.gamma);
        if (!r.solvable) continue;
        const Fel g = *r.gamma;
        ASSERT_EQ(c.add(c.frob_q(g, 2 * e), g), c.neg(c.frob_q(b, e)));
      }
    }
  }
}
