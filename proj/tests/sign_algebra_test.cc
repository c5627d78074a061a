// Copyright 2026 The mbd Authors
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

#include "doctest.h"
#include "mbd/sign_algebra.hpp"
#include "oracle.hpp"

using namespace mbd;

namespace {

constexpr Sign M = Sign::kMinus, Z = Sign::kZero, P = Sign::kPlus;

SignSet set(std::initializer_list<Sign> signs) {
  SignSet s;
  for (Sign x : signs) s.insert(static_cast<std::size_t>(x));
  return s;
}

int as_int(Sign s) { return static_cast<int>(s) - 1; }

}  // namespace

TEST_CASE("sign_add examples") {
  CHECK(sign_add(P, Z) == set({P}));
  CHECK(sign_add(P, P) == set({P}));
  CHECK(sign_add(P, M) == set({M, Z, P}));
}

TEST_CASE("sign_sub examples") {
  CHECK(sign_sub(M, M) == set({M, Z, P}));
  CHECK(sign_sub(Z, M) == set({P}));
  CHECK(sign_sub(P, M) == set({P}));
}

TEST_CASE("refined examples") {
  CHECK(sign_add_refined(P, M, Magnitude::kLt) == set({M}));
  CHECK(sign_add_refined(P, M, Magnitude::kEq) == set({Z}));
  CHECK(sign_add_refined(P, M, Magnitude::kGt) == set({P}));
  // |d_in| < |d_out| with both negative.
  CHECK(sign_sub_refined(M, M, Magnitude::kLt) == set({P}));
}

TEST_CASE("addition laws over all pairs") {
  for (Sign a : kAllSigns) {
    CHECK(sign_add(a, Z) == sign_set(a));
    CHECK(negate(negate(a)) == a);
    for (Sign b : kAllSigns) {
      CHECK(sign_add(a, b) == sign_add(b, a));
      CHECK(sign_sub(a, b) == sign_add(a, negate(b)));
      CHECK_FALSE(sign_add(a, b).empty());
    }
  }
}

TEST_CASE("tables agree with integer arithmetic") {
  for (Sign a : kAllSigns) {
    for (Sign b : kAllSigns) {
      for (Sign c : kAllSigns) {
        CHECK(sign_add(a, b).contains(static_cast<std::size_t>(c)) ==
              oracle::sign_relation(false, as_int(a), as_int(b), as_int(c), std::nullopt));
        CHECK(sign_sub(a, b).contains(static_cast<std::size_t>(c)) ==
              oracle::sign_relation(true, as_int(a), as_int(b), as_int(c), std::nullopt));
        for (Magnitude m : kAllMagnitudes) {
          const int mi = static_cast<int>(m) - 1;
          CHECK(sign_add_refined(a, b, m).contains(static_cast<std::size_t>(c)) ==
                oracle::sign_relation(false, as_int(a), as_int(b), as_int(c), mi));
          CHECK(sign_sub_refined(a, b, m).contains(static_cast<std::size_t>(c)) ==
                oracle::sign_relation(true, as_int(a), as_int(b), as_int(c), mi));
        }
      }
    }
  }
}

TEST_CASE("refinement is sound and covers the unrefined result") {
  for (Sign a : kAllSigns) {
    for (Sign b : kAllSigns) {
      SignSet all;
      for (Magnitude m : kAllMagnitudes) {
        const SignSet r = sign_add_refined(a, b, m);
        CHECK(r.size() == 1);
        CHECK(r.is_subset_of(sign_add(a, b)));
        CHECK(sign_sub_refined(a, b, m).is_subset_of(sign_sub(a, b)));
        all |= r;
      }
      if (opposite(a, b)) CHECK(all == sign_add(a, b));
    }
  }
}

TEST_CASE("names") {
  CHECK(sign_name(M) == "minus");
  CHECK(sign_name(P) == "plus");
  CHECK(magnitude_name(Magnitude::kGt) == "gt");
  CHECK(magnitude_symbol(Magnitude::kLt) == "<");
  CHECK(opposite(P, M));
  CHECK_FALSE(opposite(P, Z));
}
