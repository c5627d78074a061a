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

#include "mbd/sign_algebra.hpp"

namespace mbd {

std::string_view sign_name(Sign s) {
  switch (s) {
    case Sign::kMinus: return "minus";
    case Sign::kZero: return "zero";
    case Sign::kPlus: return "plus";
  }
  return "zero";
}

std::string_view magnitude_name(Magnitude m) {
  switch (m) {
    case Magnitude::kLt: return "lt";
    case Magnitude::kEq: return "eq";
    case Magnitude::kGt: return "gt";
  }
  return "eq";
}

std::string_view magnitude_symbol(Magnitude m) {
  switch (m) {
    case Magnitude::kLt: return "<";
    case Magnitude::kEq: return "=";
    case Magnitude::kGt: return ">";
  }
  return "=";
}

Sign negate(Sign s) {
  switch (s) {
    case Sign::kMinus: return Sign::kPlus;
    case Sign::kPlus: return Sign::kMinus;
    case Sign::kZero: return Sign::kZero;
  }
  return Sign::kZero;
}

bool opposite(Sign a, Sign b) {
  return a != Sign::kZero && b != Sign::kZero && a != b;
}

SignSet sign_add(Sign a, Sign b) {
  if (a == Sign::kZero) return sign_set(b);
  if (b == Sign::kZero || a == b) return sign_set(a);
  return kAnySign;
}

SignSet sign_sub(Sign a, Sign b) { return sign_add(a, negate(b)); }

SignSet sign_add_refined(Sign a, Sign b, Magnitude m) {
  if (!opposite(a, b)) return sign_add(a, b);
  switch (m) {
    case Magnitude::kLt: return sign_set(b);
    case Magnitude::kEq: return sign_set(Sign::kZero);
    case Magnitude::kGt: return sign_set(a);
  }
  return kAnySign;
}

SignSet sign_sub_refined(Sign a, Sign b, Magnitude m) {
  return sign_add_refined(a, negate(b), m);
}

}  // namespace mbd
