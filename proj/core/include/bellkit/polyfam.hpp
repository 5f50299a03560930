/*
   Copyright 2026 The bellkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/polynomial.hpp"
#include "bellkit/rational.hpp"

namespace bellkit {

// Classical polynomial families realized through drivers with polynomial
// values. For every family except Laguerre the transform series is an
// exponential generating function, so P_n(x) = n! a_g(n); the Laguerre
// driver produces the ordinary generating function and L_n(x) = a_g(n).

/// B_0 .. B_n_max with the B_1 = -1/2 convention.
std::vector<Rational> bernoulli_numbers(std::size_t n_max);

enum class Family { Bernoulli, Euler, Hermite, Charlier, Laguerre, Touchard };

/// A family together with its parameter, when it takes one: alpha for
/// Laguerre, a for Charlier (a must be nonzero). The other families
/// ignore both fields.
struct FamilySpec {
  Family family = Family::Bernoulli;
  Rational alpha = Rational(0);
  Rational a = Rational(1);
};

/// Accepts the lowercase family name ("bernoulli", "euler", "hermite",
/// "charlier", "laguerre", "touchard"); throws std::invalid_argument
/// otherwise.
Family family_from_name(const std::string& name);

std::string family_name(Family family);

/// True when the family's series is an ordinary generating function
/// (only Laguerre); the rest are exponential.
bool family_is_ogf(Family family);

/// The driver g whose transform generates the family. Valid for
/// arguments 1 <= n <= max_index; calls beyond that range throw
/// std::domain_error. Throws std::domain_error for Charlier with a = 0.
Driver<Polynomial> family_driver(const FamilySpec& spec,
                                 std::size_t max_index);

/// P_0 .. P_upto by the family's own recurrence, independent of the
/// series machinery.
std::vector<Polynomial> family_table(const FamilySpec& spec,
                                     std::size_t upto);

/// P_n by the family's own recurrence.
Polynomial family_poly(const FamilySpec& spec, std::size_t n);

/// P_n through the transform: coefficients of the driver's series,
/// rescaled by n! for the exponential families. Agrees with
/// family_poly; the two paths share no code.
Polynomial family_poly_via_bell(const FamilySpec& spec, std::size_t n);

}  // namespace bellkit
