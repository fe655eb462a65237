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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "fewweight/charsums.hpp"
#include "fewweight/codes.hpp"
#include "fewweight/error.hpp"
#include "fewweight/theory.hpp"

using namespace fewweight;

namespace {

CodeSpec spec(std::uint64_t q, unsigned m, unsigned e, FqIdx u, FqIdx v, Variant var) {
  return CodeSpec{q, m, e, u, v, var};
}

FieldCtx field(std::uint64_t q, unsigned m, ModulusChoice mc = ModulusChoice::conway) {
  const auto [p, s] = *prime_power(q);
  return build_tower(p, s, m, {mc, {}});
}

const Variant kVariants[] = {Variant::D1, Variant::D2, Variant::D3, Variant::E1, Variant::E2};

}  // namespace

TEST(BuildSet, MembershipPredicates) {
  const FieldCtx c = field(3, 4);
  for (FqIdx u = 0; u < 3; ++u)
    for (FqIdx v = 0; v < 3; ++v) {
      std::set<Fel> d[5];
      for (int i = 0; i < 5; ++i) {
        const auto s = build_set(c, spec(3, 4, 1, u, v, kVariants[i]));
        EXPECT_TRUE(std::is_sorted(s.members.begin(), s.members.end()));
        EXPECT_EQ(std::count(s.members.begin(), s.members.end(), 0u), 0);
        d[i] = std::set<Fel>(s.members.begin(), s.members.end());
        EXPECT_EQ(d[i].size(), s.members.size());
      }
      // D1 = E1 n E2, D2 = E1 \ E2, D3 = E1 u E2.
      std::set<Fel> inter, diff, uni;
      std::set_intersection(d[3].begin(), d[3].end(), d[4].begin(), d[4].end(), std::inserter(inter, inter.end()));
      std::set_difference(d[3].begin(), d[3].end(), d[4].begin(), d[4].end(), std::inserter(diff, diff.end()));
      std::set_union(d[3].begin(), d[3].end(), d[4].begin(), d[4].end(), std::inserter(uni, uni.end()));
      EXPECT_EQ(d[0], inter);
      EXPECT_EQ(d[1], diff);
      EXPECT_EQ(d[2], uni);
      EXPECT_EQ(d[1].size(), d[3].size() - d[0].size());
    }
}

TEST(BuildSet, KnownSizes) {
  EXPECT_EQ(build_set(field(9, 4), spec(9, 4, 2, 0, 0, Variant::D1)).members.size(), 80u);
  EXPECT_EQ(build_set(field(3, 6), spec(3, 6, 1, 0, 0, Variant::D2)).members.size(), 162u);
  EXPECT_EQ(build_set(field(3, 4), spec(3, 4, 2, 0, 0, Variant::D3)).members.size(), 38u);
}

TEST(BuildSet, SizesAgreeWithCountingFormulas) {
  for (auto [q, m, e] : {std::tuple{3u, 4u, 1u}, {3u, 4u, 2u}, {3u, 6u, 1u}, {5u, 4u, 2u}, {9u, 4u, 2u}}) {
    const FieldCtx c = field(q, m);
    for (FqIdx u = 0; u < q; ++u)
      for (FqIdx v = 0; v < q; ++v) {
        const auto s = build_set(c, spec(q, m, e, u, v, Variant::D1));
        EXPECT_EQ(static_cast<std::int64_t>(s.members.size()) + (u == 0 && v == 0), closed_form_N(c, u, v, e));
      }
    EXPECT_EQ(static_cast<std::int64_t>(build_set(c, spec(q, m, e, 0, 0, Variant::E1)).members.size()), n_E1(c, e));
  }
}

TEST(BuildSet, SpecMismatch) {
  const FieldCtx c = field(3, 4);
  try {
    (void)build_set(c, spec(3, 6, 1, 0, 0, Variant::D1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SpecMismatch);
  }
}

TEST(Codeword, ZeroAndSubfieldWords) {
  const FieldCtx c = field(9, 4);
  const auto s = build_set(c, spec(9, 4, 2, 0, 0, Variant::D1));
  for (FqIdx z = 0; z < 9; ++z) {
    const auto w = codeword(c, s, c.embed(z));
    EXPECT_TRUE(std::all_of(w.begin(), w.end(), [](FqIdx x) { return x == 0; }));
  }
  const auto w = codeword(c, s, 1234);
  EXPECT_EQ(w.size(), 80u);
  EXPECT_EQ(static_cast<std::uint64_t>(std::count_if(w.begin(), w.end(), [](FqIdx x) { return x != 0; })),
            codeword_weight(c, s, 1234));
}

TEST(Transform, ZeroCountsMatchDirectCounts) {
  const FieldCtx c = field(5, 4);
  const auto s = build_set(c, spec(5, 4, 2, 1, 3, Variant::D3));
  const CharacterTransform ft(c, s.members, false);
  for (Fel b = 0; b < c.order(); b += 7) EXPECT_EQ(ft.weight(b), codeword_weight(c, s, b));
}

TEST(Transform, AgreesWithNaiveOnSmallFields) {
  for (auto [q, m, e] : {std::tuple{3u, 4u, 1u}, {3u, 4u, 2u}, {5u, 4u, 1u}, {3u, 6u, 2u}, {9u, 2u, 1u}}) {
    const FieldCtx c = field(q, m);
    for (FqIdx u = 0; u < q; u += 1 + q / 4)
      for (FqIdx v = 0; v < q; v += 1 + q / 4)
        for (Variant var : kVariants) {
          const auto s = build_set(c, spec(q, m, e, u, v, var));
          const auto a = weight_distribution(c, s, {Method::transform, 1, false});
          const auto b = weight_distribution(c, s, {Method::naive, 1, false});
          ASSERT_EQ(a, b) << to_string(s.spec);
          EXPECT_TRUE(pless_check(a, q)) << to_string(s.spec);
        }
  }
}

TEST(Transform, NaiveGuard) {
  const FieldCtx c = field(3, 10);
  const auto s = build_set(c, spec(3, 10, 1, 0, 0, Variant::D1));
  try {
    (void)weight_distribution(c, s, {Method::naive, 1, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeGuard);
  }
}

TEST(Transform, JobsInvariance) {
  const FieldCtx c = field(3, 8);
  const auto s = build_set(c, spec(3, 8, 1, 0, 1, Variant::D3));
  const auto ref = weight_distribution(c, s, {Method::transform, 1, false});
  for (unsigned j : {2u, 3u, 8u}) EXPECT_EQ(weight_distribution(c, s, {Method::transform, j, false}), ref);
}

TEST(Transform, RepresentationIndependence) {
  for (auto [q, m, e, u, v, var] : {std::tuple{3u, 4u, 2u, 1u, 1u, Variant::D1}, {9u, 4u, 2u, 0u, 2u, Variant::D1},
                                    {3u, 6u, 1u, 0u, 1u, Variant::D2}, {5u, 4u, 1u, 2u, 0u, Variant::E1}}) {
    const FieldCtx a = field(q, m, ModulusChoice::conway), b = field(q, m, ModulusChoice::smallest);
    ASSERT_NE(a.modulus(), b.modulus());
    const auto sp = spec(q, m, e, u, v, var);
    EXPECT_EQ(weight_distribution(a, build_set(a, sp)), weight_distribution(b, build_set(b, sp))) << to_string(sp);
  }
}

TEST(Transform, EmptySetGivesZeroCode) {
  // (3,4,1), u=1, v=0: N = 9 - 9*eta1(-m_p) = 0.
  const FieldCtx c = field(3, 4);
  const auto s = build_set(c, spec(3, 4, 1, 2, 0, Variant::D1));
  const auto s2 = build_set(c, spec(3, 4, 1, 1, 0, Variant::D1));
  const auto& empty = s.members.empty() ? s : s2;
  ASSERT_TRUE(empty.members.empty());
  const auto en = weight_distribution(c, empty);
  EXPECT_TRUE(en.empty_code());
  EXPECT_EQ(en.k, 0u);
  EXPECT_EQ(en.d, 0u);
  EXPECT_TRUE(en.pairs.empty());
}

TEST(Transform, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "fewweight_cache_test";
  std::filesystem::remove_all(dir);
  ::setenv("FEWWEIGHT_CACHE_DIR", dir.c_str(), 1);
  const FieldCtx c = field(3, 6);
  const auto s = build_set(c, spec(3, 6, 1, 0, 1, Variant::D3));
  const CharacterTransform first(c, s.members);
  EXPECT_FALSE(first.loaded_from_cache());
  const CharacterTransform second(c, s.members);
  EXPECT_TRUE(second.loaded_from_cache());
  EXPECT_EQ(first.table(), second.table());
  // A different set must not hit the same file.
  const auto s2 = build_set(c, spec(3, 6, 1, 0, 2, Variant::D3));
  EXPECT_FALSE(CharacterTransform(c, s2.members).loaded_from_cache());
  ::unsetenv("FEWWEIGHT_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST(Enumerator, KnownDistributions) {
  {
    const FieldCtx c = field(9, 4);
    const auto en = weight_distribution(c, build_set(c, spec(9, 4, 2, 0, 0, Variant::D1)));
    EXPECT_EQ(en.n, 80u);
    EXPECT_EQ(en.k, 3u);
    EXPECT_EQ(en.pairs, (WeightPairs{{64, 360}, {72, 80}, {80, 288}}));
  }
  {
    const FieldCtx c = field(3, 6);
    const auto en = weight_distribution(c, build_set(c, spec(3, 6, 1, 0, 1, Variant::D3)));
    EXPECT_EQ(en.n, 386u);
    EXPECT_EQ(en.k, 6u);
    EXPECT_EQ(en.pairs, (WeightPairs{{252, 180}, {255, 324}, {264, 162}, {270, 60}, {324, 2}}));
  }
}

TEST(ClosedWeight, MatchesBruteEverywhere) {
  for (auto [q, m, e, u, v, var] :
       {std::tuple{3u, 6u, 1u, 0u, 0u, Variant::D1}, {3u, 4u, 2u, 1u, 1u, Variant::D1}, {3u, 4u, 1u, 0u, 2u, Variant::D1},
        {3u, 6u, 1u, 0u, 1u, Variant::D2}, {3u, 6u, 1u, 0u, 0u, Variant::D3}, {3u, 4u, 2u, 0u, 0u, Variant::E1},
        {5u, 4u, 2u, 0u, 3u, Variant::D3}, {9u, 4u, 1u, 4u, 7u, Variant::D1}, {3u, 4u, 1u, 0u, 1u, Variant::E2}}) {
    const FieldCtx c = field(q, m);
    const SumEngine eng(c, e);
    const auto s = build_set(c, spec(q, m, e, u, v, var));
    for (Fel b = 0; b < c.order(); ++b) {
      const ClosedWeight w = closed_form_weight(eng, s, b);
      ASSERT_TRUE(w.closed) << w.note;
      ASSERT_EQ(w.weight, codeword_weight(c, s, b)) << to_string(s.spec) << " b=" << b << " " << w.note;
    }
  }
}

TEST(ClosedWeight, ZeroOnSubfieldForD1) {
  const FieldCtx c = field(9, 4);
  const SumEngine eng(c, 2);
  const auto s = build_set(c, spec(9, 4, 2, 3, 0, Variant::D1));
  for (FqIdx z = 0; z < 9; ++z) EXPECT_EQ(closed_form_weight(eng, s, c.embed(z)).weight, 0u);
}

TEST(ClosedWeight, FallsBackOutsideCoveredCases) {
  const FieldCtx c = field(3, 4);
  const SumEngine eng(c, 1);
  const auto s = build_set(c, spec(3, 4, 1, 1, 0, Variant::D2));
  const ClosedWeight w = closed_form_weight(eng, s, 5);
  EXPECT_FALSE(w.closed);
  EXPECT_EQ(w.weight, codeword_weight(c, s, 5));
}
