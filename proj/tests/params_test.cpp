// Copyright 2026 The Authors.
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

#include "pebble/params.hpp"

namespace pebble {
namespace {

TEST(Params, RodCountIsAlreadyNormal) {
  const auto p = validate_and_normalize_params(2, 2, 3, 3);
  EXPECT_EQ(p, (sparsity_params{2, 2, 3, 3}));
}

TEST(Params, DividesByCommonDivisor) {
  EXPECT_EQ(validate_and_normalize_params(2, 4, 6, 2), (sparsity_params{1, 2, 3, 1}));
  EXPECT_EQ(validate_and_normalize_params(3, 3, 0, 0), (sparsity_params{1, 1, 0, 0}));
}

TEST(Params, RejectsViolatedCondition) {
  try {
    validate_and_normalize_params(1, 1, 1, 2);
    FAIL() << "expected ParameterConditionViolated";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parameter_condition_violated);
  }
}

TEST(Params, RejectsNonPositiveLambda) {
  for (int lam : {0, -1}) {
    try {
      validate_and_normalize_params(lam, 2, 2, 1);
      FAIL();
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::non_positive_lambda);
    }
  }
}

TEST(Params, RejectsNegativeCounts) {
  EXPECT_THROW(validate_and_normalize_params(1, -1, 3, 0), error);
  EXPECT_THROW(validate_and_normalize_params(1, 3, 3, -2), error);
}

TEST(Params, ZeroCapacityAllowedWhenConditionHolds) {
  EXPECT_EQ(validate_and_normalize_params(1, 0, 2, 1), (sparsity_params{1, 0, 2, 1}));
  EXPECT_THROW(validate_and_normalize_params(1, 0, 1, 1), error);
}

TEST(Params, NormalizationIsIdempotent) {
  for (int lam = 1; lam <= 6; ++lam)
    for (int k1 = 0; k1 <= 6; ++k1)
      for (int k2 = 0; k2 <= 6; ++k2)
        for (int l = 0; l <= 6; ++l) {
          if (k1 + k2 - lam < l) continue;
          const auto once = validate_and_normalize_params(lam, k1, k2, l);
          EXPECT_EQ(validate_and_normalize_params(once), once);
        }
}

}  // namespace
}  // namespace pebble
