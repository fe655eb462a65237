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


// Conway polynomials for the small characteristics the tools exercise,
// stored little-endian (constant term first, leading 1 last).

#include <cstdint>
#include <vector>

#include "fewweight/gf.hpp"

namespace fewweight {
namespace {

struct ConwayRow {
  unsigned p;
  unsigned n;
  std::vector<unsigned> coeffs;
};

const std::vector<ConwayRow>& conway_rows() {
  static const std::vector<ConwayRow> rows = {
    {3, 1, {1, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {3, 7, {1, 0, 2, 0, 0, 0, 0, 1}},
    {3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
    {3, 9, {1, 1, 2, 2, 0, 0, 0, 0, 0, 1}},
    {3, 10, {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}},
    {3, 11, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 12, {2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1}},
    {3, 13, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 1, {3, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {5, 5, {3, 4, 0, 0, 0, 1}},
    {5, 6, {2, 0, 1, 4, 1, 0, 1}},
    {5, 7, {3, 3, 0, 0, 0, 0, 0, 1}},
    {5, 8, {2, 4, 3, 0, 1, 0, 0, 0, 1}},
    {5, 9, {3, 1, 0, 2, 0, 0, 0, 0, 0, 1}},
    {5, 10, {2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1}},
    {5, 11, {3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 12, {2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0, 1}},
    {5, 13, {3, 3, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {7, 1, {4, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
    {7, 4, {3, 4, 5, 0, 1}},
    {7, 5, {4, 1, 0, 0, 0, 1}},
    {7, 6, {3, 6, 4, 5, 1, 0, 1}},
    {7, 7, {4, 6, 0, 0, 0, 0, 0, 1}},
    {7, 8, {3, 2, 6, 4, 0, 0, 0, 0, 1}},
    {7, 9, {4, 6, 0, 1, 6, 0, 0, 0, 0, 1}},
    {7, 10, {3, 3, 2, 1, 4, 1, 1, 0, 0, 0, 1}},
    {7, 11, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {7, 12, {3, 0, 5, 0, 4, 2, 3, 5, 2, 0, 0, 0, 1}},
    {7, 13, {4, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
  };
  return rows;
}

}  // namespace

const std::vector<unsigned>* conway_polynomial(unsigned p, unsigned n) {
  for (const auto& row : conway_rows())
    if (row.p == p && row.n == n) return &row.coeffs;
  return nullptr;
}

}  // namespace fewweight
