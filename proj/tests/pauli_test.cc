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

#include "witnesslab/pauli.h"

#include <random>

#include <gtest/gtest.h>

#include "reference.h"
#include "witnesslab/errors.h"
#include "witnesslab/states.h"

using namespace witnesslab;

namespace {

std::string random_letters(std::mt19937_64 &rng, unsigned n) {
    std::string s;
    for (unsigned k = 0; k < n; k++) {
        s += "IXYZ"[rng() % 4];
    }
    return s;
}

}  // namespace

TEST(Pauli, SingleQubitProducts) {
    auto x = PauliString::parse("X");
    auto y = PauliString::parse("Y");
    auto z = PauliString::parse("Z");
    EXPECT_EQ(x * z, PauliString::parse("-iY"));
    EXPECT_EQ(z * x, PauliString::parse("iY"));
    EXPECT_EQ(x * y, PauliString::parse("iZ"));
    EXPECT_EQ(y * y, PauliString::parse("I"));
    EXPECT_FALSE(commutes(x, z));
    EXPECT_TRUE(commutes(x, x));
}

TEST(Pauli, ProductsAndCommutationMatchDense) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        std::string a = random_letters(rng, 3);
        std::string b = random_letters(rng, 3);
        auto p = PauliString::parse(a);
        auto q = PauliString::parse(b);
        ref::Mat pa = ref::pauli(a);
        ref::Mat qb = ref::pauli(b);
        EXPECT_LT((p.to_dense() - pa).norm(), 1e-12) << a;
        EXPECT_LT(((p * q).to_dense() - pa * qb).norm(), 1e-12) << a << "*" << b;
        bool dense_commute = (pa * qb - qb * pa).norm() < 1e-12;
        EXPECT_EQ(commutes(p, q), dense_commute) << a << "," << b;
    }
}

TEST(Pauli, ParseAndPrint) {
    for (const char *text : {"+XYZ", "-IIY", "+iZ", "-iXX"}) {
        EXPECT_EQ(PauliString::parse(text).str(), text);
    }
    EXPECT_EQ(PauliString::parse("XYIZ").letters(), "XYIZ");
    EXPECT_EQ(PauliString::parse("XYIZ").weight(), 3u);
    EXPECT_TRUE(PauliString::parse("-YY").is_hermitian());
    EXPECT_FALSE(PauliString::parse("iXZ").is_hermitian());
    EXPECT_EQ(PauliString::parse("-YY").letter_sign(), -1);
    EXPECT_THROW(PauliString::parse("XQ"), ValidationError);
    EXPECT_THROW(PauliString::parse("X") * PauliString::parse("XX"), DimensionError);
}

TEST(Pauli, StabilizerProductGivesMinusYY) {
    // XX * ZZ on one Bell pair
    auto p = PauliString::parse("XX") * PauliString::parse("ZZ");
    EXPECT_EQ(p.letters(), "YY");
    EXPECT_EQ(p.letter_sign(), -1);
}

TEST(Pauli, ExpectationMatchesDense) {
    std::mt19937_64 rng(5);
    StateVector v = build_he_state(2);
    ref::Vec r = ref::he_state(2);
    for (int trial = 0; trial < 50; trial++) {
        std::string a = random_letters(rng, 4);
        double want = ref::expect(ref::pauli(a), r);
        EXPECT_NEAR(expectation(PauliString::parse(a), v).real(), want, 1e-12) << a;
        EXPECT_NEAR(expectation(PauliString::parse(a), DensityOperator::pure(v)).real(), want, 1e-12) << a;
    }
    // X1 Z1 acting on |0>: apply reproduces the dense action.
    StateVector b = StateVector::basis(2, 2);
    auto p = PauliString::parse("YX");
    ref::Vec dense = ref::pauli("YX") * b.amplitudes();
    EXPECT_LT((apply(p, b).amplitudes() - dense).norm(), 1e-12);
}

TEST(Pauli, QubitIndexMap) {
    QubitIndexMap map(3);
    EXPECT_EQ(map.num_qubits(), 6u);
    EXPECT_EQ(map.qubit(1, Particle::A), 0u);
    EXPECT_EQ(map.qubit(1, Particle::B), 1u);
    EXPECT_EQ(map.qubit(3, Particle::B), 5u);
    EXPECT_EQ(map.label(4), "A3");
    EXPECT_EQ(map.dof_of(3), 2u);
    EXPECT_EQ(map.particle_of(3), Particle::B);
    for (unsigned q = 0; q < 6; q++) {
        EXPECT_EQ(map.qubit_from_label(map.label(q)), q);
    }
    EXPECT_THROW(map.qubit(4, Particle::A), DimensionError);
}
