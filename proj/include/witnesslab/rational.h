// Copyright 2026 The witnesslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WITNESSLAB_RATIONAL_H
#define WITNESSLAB_RATIONAL_H

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace witnesslab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational &r);
double to_double(const Rational &r);

BigInt pow_int(std::uint64_t base, unsigned exponent);
inline Rational pow2(unsigned exponent) {
    return Rational(pow_int(2, exponent));
}
inline Rational pow3(unsigned exponent) {
    return Rational(pow_int(3, exponent));
}

}  // namespace witnesslab

#endif
