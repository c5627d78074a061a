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

/// @file sign_algebra.hpp
/// Qualitative arithmetic over {minus, zero, plus}. Adding opposite signs is
/// ambiguous, so results are sets. A magnitude comparison |a| vs |b|
/// resolves the ambiguity to a single sign.

#ifndef MBD_SIGN_ALGEBRA_HPP_
#define MBD_SIGN_ALGEBRA_HPP_

#include <array>
#include <cstddef>
#include <string_view>

#include "mbd/value_set.hpp"

namespace mbd {

/// Enumerator values equal the value indices in the builtin Sign domain.
enum class Sign : std::size_t { kMinus = 0, kZero = 1, kPlus = 2 };

/// |a| compared with |b|; indices in the builtin Magnitude domain.
enum class Magnitude : std::size_t { kLt = 0, kEq = 1, kGt = 2 };

inline constexpr std::array<Sign, 3> kAllSigns = {Sign::kMinus, Sign::kZero,
                                                  Sign::kPlus};
inline constexpr std::array<Magnitude, 3> kAllMagnitudes = {
    Magnitude::kLt, Magnitude::kEq, Magnitude::kGt};

/// A set of signs, indexed like the Sign domain.
using SignSet = ValueSet;

constexpr SignSet sign_set(Sign s) {
  return ValueSet::single(static_cast<std::size_t>(s));
}
inline constexpr SignSet kAnySign = ValueSet::full(3);

std::string_view sign_name(Sign s);
std::string_view magnitude_name(Magnitude m);
/// "<", "=", ">".
std::string_view magnitude_symbol(Magnitude m);

Sign negate(Sign s);
bool opposite(Sign a, Sign b);

SignSet sign_add(Sign a, Sign b);
SignSet sign_sub(Sign a, Sign b);

/// sign_add with |a| compared to |b| by `m`. Only constrains the result when
/// a and b are opposite nonzero signs.
SignSet sign_add_refined(Sign a, Sign b, Magnitude m);
SignSet sign_sub_refined(Sign a, Sign b, Magnitude m);

}  // namespace mbd

#endif  // MBD_SIGN_ALGEBRA_HPP_
