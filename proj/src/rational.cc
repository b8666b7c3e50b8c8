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

#include "witnesslab/rational.h"

#include <sstream>

namespace witnesslab {

std::string to_string(const Rational &r) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) {
        out << '/' << boost::multiprecision::denominator(r);
    }
    return out.str();
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

BigInt pow_int(std::uint64_t base, unsigned exponent) {
    return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace witnesslab
