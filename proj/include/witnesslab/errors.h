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

#ifndef WITNESSLAB_ERRORS_H
#define WITNESSLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace witnesslab {

/// Operands with incompatible qubit counts or matrix shapes.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds the dense-representation qubit cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Numeric argument outside its allowed range (probabilities, shot counts, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed identifiers, kind/system mismatches and other bad configuration.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sample records do not cover every term of a witness decomposition.
struct CoverageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two independent computation routes disagree.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace witnesslab

#endif
