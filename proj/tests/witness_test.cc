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

#include "witnesslab/witness.h"

#include <cmath>

#include <gtest/gtest.h>

#include "reference.h"
#include "witnesslab/errors.h"
#include "witnesslab/graph.h"
#include "witnesslab/states.h"

using namespace witnesslab;

namespace {

std::vector<std::string> he_gens(unsigned n_dofs) {
    std::vector<std::string> g;
    for (unsigned k = 0; k < 2 * n_dofs; k++) {
        g.push_back(ref::he_generator(n_dofs, k));
    }
    return g;
}

std::vector<std::pair<unsigned, unsigned>> edges_of(const GraphSpec &g) {
    return {g.edges().begin(), g.edges().end()};
}

std::vector<std::string> graph_gens(const GraphSpec &g) {
    std::vector<std::string> out;
    for (unsigned k = 0; k < g.num_vertices(); k++) {
        out.push_back(ref::graph_generator(g.num_vertices(), k, edges_of(g)));
    }
    return out;
}

/// Projector onto the stabilizer-basis vector |s>.
ref::Mat basis_projector(const std::vector<std::string> &gens, std::uint64_t s) {
    auto n = static_cast<unsigned>(gens.size());
    ref::Mat p = ref::identity(n);
    for (unsigned k = 0; k < n; k++) {
        double sign = (s >> k) & 1 ? -1.0 : 1.0;
        p = p * (ref::identity(n) + sign * ref::pauli(gens[k])) / 2.0;
    }
    return p;
}

ref::Mat reference_dense(WitnessKind kind, const std::vector<std::string> &gens, const ref::Vec &target) {
    switch (kind) {
        case WitnessKind::Wtilde:
            return ref::w_tilde(target);
        case WitnessKind::W1:
            return ref::w1(gens);
        case WitnessKind::W2:
            return ref::w2(gens);
        case WitnessKind::W3:
            return ref::w3(gens);
        default:
            break;
    }
    throw std::logic_error("no reference");
}

const WitnessKind kMain[] = {WitnessKind::Wtilde, WitnessKind::W1, WitnessKind::W2, WitnessKind::W3};

}  // namespace

TEST(Witness, ParseIds) {
    auto he = StabilizerSet::hyperentangled(3);
    EXPECT_EQ(WitnessSpec::parse("wtilde", he).kind(), WitnessKind::Wtilde);
    EXPECT_EQ(WitnessSpec::parse("wj:3", he).dof(), 3u);
    EXPECT_EQ(WitnessSpec::parse("wjalt:2", he).id(), "wjalt:2");
    EXPECT_THROW(WitnessSpec::parse("wj:4", he), ValidationError);
    EXPECT_THROW(WitnessSpec::parse("w9", he), ValidationError);
    EXPECT_THROW(WitnessSpec::parse("wj:1", StabilizerSet::graph(GraphSpec::path(4))), ValidationError);
}

TEST(Witness, DenseMatchesOperatorDefinitions) {
    for (unsigned n = 1; n <= 3; n++) {
        auto he = StabilizerSet::hyperentangled(n);
        for (WitnessKind kind : kMain) {
            ref::Mat want = reference_dense(kind, he_gens(n), ref::he_state(n));
            EXPECT_LT((build_dense(WitnessSpec(kind, he)) - want).norm(), 1e-10) << witness_id(kind) << " n=" << n;
        }
        for (unsigned j = 1; j <= n; j++) {
            std::string xx = ref::he_generator(n, 2 * j - 2), zz = ref::he_generator(n, 2 * j - 1);
            ref::Mat wj = ref::identity(2 * n) - ref::pauli(xx) - ref::pauli(zz);
            ref::Mat alt = (ref::identity(2 * n) - ref::pauli(xx) - ref::pauli(zz) - ref::pauli(zz) * ref::pauli(xx)) / 2.0;
            EXPECT_LT((build_dense(WitnessSpec(WitnessKind::PerDof, he, j)) - wj).norm(), 1e-10);
            EXPECT_LT((build_dense(WitnessSpec(WitnessKind::PerDofAlt, he, j)) - alt).norm(), 1e-10);
        }
        ref::Vec xi = ref::he_state(n);
        ref::Mat qudit = ref::identity(2 * n) / std::pow(2.0, n) - xi * xi.adjoint();
        EXPECT_LT((build_dense(WitnessSpec(WitnessKind::QuditBipartite, he)) - qudit).norm(), 1e-10);
    }
    for (GraphSpec g : {GraphSpec::path(5), GraphSpec::star(4), GraphSpec::ring(5)}) {
        auto set = StabilizerSet::graph(g);
        for (WitnessKind kind : kMain) {
            ref::Mat want = reference_dense(kind, graph_gens(g), ref::graph_state(g.num_vertices(), edges_of(g)));
            EXPECT_LT((build_dense(WitnessSpec(kind, set)) - want).norm(), 1e-10) << witness_id(kind) << " " << g.edge_list();
        }
    }
}

TEST(Witness, DiagonalEigenvaluesMatchDenseOnStabilizerBasis) {
    auto check = [](const StabilizerSet &set, const std::vector<std::string> &gens, const ref::Vec &target,
                    WitnessKind kind, unsigned dof) {
        DiagonalWitness diag(kind, set.num_qubits(), dof);
        ref::Mat w = kind == WitnessKind::PerDof || kind == WitnessKind::PerDofAlt || kind == WitnessKind::QuditBipartite
                         ? build_dense(WitnessSpec(kind, set, dof))
                         : reference_dense(kind, gens, target);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << set.num_qubits()); s++) {
            double want = ref::expect(w, basis_projector(gens, s));
            EXPECT_NEAR(diag.eigenvalue_double(s), want, 1e-10) << witness_id(kind, dof) << " s=" << s;
            EXPECT_NEAR(to_double(diag.eigenvalue(s)), want, 1e-10);
        }
    };
    for (unsigned n = 1; n <= 3; n++) {
        auto he = StabilizerSet::hyperentangled(n);
        for (WitnessKind kind : kMain) {
            check(he, he_gens(n), ref::he_state(n), kind, 0);
        }
        check(he, he_gens(n), ref::he_state(n), WitnessKind::PerDof, n);
        check(he, he_gens(n), ref::he_state(n), WitnessKind::PerDofAlt, 1);
        check(he, he_gens(n), ref::he_state(n), WitnessKind::QuditBipartite, 0);
    }
    for (GraphSpec g : {GraphSpec::path(3), GraphSpec::star(5), GraphSpec::ring(5)}) {
        for (WitnessKind kind : kMain) {
            check(StabilizerSet::graph(g), graph_gens(g), ref::graph_state(g.num_vertices(), edges_of(g)), kind, 0);
        }
    }
}

TEST(Witness, TraceTableAtFourQubits) {
    EXPECT_EQ(closed_form_trace(WitnessKind::Wtilde, 4), Rational(14));
    EXPECT_EQ(closed_form_trace(WitnessKind::W1, 4), Rational(48));
    EXPECT_EQ(closed_form_trace(WitnessKind::W2, 4), Rational(32));
    EXPECT_EQ(closed_form_trace(WitnessKind::W3, 4), Rational(80, 3));
    EXPECT_EQ(noise_threshold(WitnessKind::Wtilde, 4), Rational(8, 15));
    EXPECT_EQ(noise_threshold(WitnessKind::W1, 4), Rational(1, 4));
    EXPECT_EQ(noise_threshold(WitnessKind::W2, 4), Rational(1, 3));
    EXPECT_EQ(noise_threshold(WitnessKind::W3, 4), Rational(3, 8));
    EXPECT_EQ(noise_threshold(WitnessKind::W2, 5), Rational(4, 13));
    EXPECT_EQ(*printed_noise_threshold(WitnessKind::W2, 5), Rational(8, 29));
    EXPECT_THROW(noise_threshold(WitnessKind::QuditBipartite, 4), ValidationError);
}

TEST(Witness, TraceRoutesAgree) {
    for (unsigned big_n = 2; big_n <= 14; big_n++) {
        for (WitnessKind kind : kMain) {
            Rational closed = closed_form_trace(kind, big_n);
            EXPECT_EQ(bitstring_trace(DiagonalWitness(kind, big_n)), closed) << witness_id(kind) << " N=" << big_n;
        }
    }
    // Dense reference traces, built without the library.
    for (unsigned n = 1; n <= 3; n++) {
        for (WitnessKind kind : kMain) {
            double want = reference_dense(kind, he_gens(n), ref::he_state(n)).trace().real();
            EXPECT_NEAR(to_double(closed_form_trace(kind, 2 * n)), want, 1e-9) << witness_id(kind);
        }
    }
    for (unsigned v : {3u, 5u, 7u}) {
        GraphSpec g = GraphSpec::path(v);
        for (WitnessKind kind : kMain) {
            double want = reference_dense(kind, graph_gens(g), ref::graph_state(v, edges_of(g))).trace().real();
            EXPECT_NEAR(to_double(closed_form_trace(kind, v)), want, 1e-9 * std::abs(want)) << witness_id(kind);
        }
    }
    EXPECT_EQ(closed_form_trace(WitnessKind::PerDof, 6), Rational(64));
    EXPECT_EQ(closed_form_trace(WitnessKind::PerDofAlt, 6), Rational(32));
    EXPECT_EQ(closed_form_trace(WitnessKind::QuditBipartite, 6), Rational(7));
    EXPECT_EQ(bitstring_trace(DiagonalWitness(WitnessKind::QuditBipartite, 6)), Rational(7));
    EXPECT_THROW(bitstring_trace(DiagonalWitness(WitnessKind::W1, 24), 20), CapacityError);
    TraceReport report = trace(WitnessSpec(WitnessKind::W3, StabilizerSet::hyperentangled(3)));
    EXPECT_EQ(*report.bitstring, report.closed_form);
    EXPECT_NEAR(*report.dense, to_double(report.closed_form), 1e-9);
}

TEST(Witness, ThresholdsMatchTableCells) {
    for (unsigned big_n = 2; big_n <= 20; big_n++) {
        double d = std::pow(2.0, big_n);
        double w1 = 1.0 / big_n;
        double wt = 0.5 / (1 - 1 / d);
        double w2 = big_n % 2 == 0 ? 0.25 / (1 - 1 / std::sqrt(d)) : 0.25 / (1 - 3 / (4 * std::sqrt(2 * d)));
        double w3 = big_n % 2 == 0 ? (1.0 / 3) / (1 - 1 / std::pow(std::sqrt(d), std::log2(3.0)))
                                   : (1.0 / 3) / (1 - 1 / (2 * std::pow(std::sqrt(d / 2), std::log2(3.0))));
        EXPECT_NEAR(to_double(noise_threshold(WitnessKind::W1, big_n)), w1, 1e-12);
        EXPECT_NEAR(to_double(noise_threshold(WitnessKind::Wtilde, big_n)), wt, 1e-12);
        EXPECT_NEAR(to_double(noise_threshold(WitnessKind::W3, big_n)), w3, 1e-12);
        EXPECT_NEAR(to_double(*printed_noise_threshold(WitnessKind::W2, big_n)), w2, 1e-12);
        if (big_n % 2 == 0) {
            EXPECT_NEAR(to_double(noise_threshold(WitnessKind::W2, big_n)), w2, 1e-12);
        } else {
            double derived = d / (3 * d - 3 * std::sqrt(2 * d) + d);
            EXPECT_NEAR(to_double(noise_threshold(WitnessKind::W2, big_n)), derived, 1e-12);
            EXPECT_GT(std::abs(derived - w2), 1e-6);
        }
    }
}

TEST(Witness, NormalizedOnTarget) {
    for (unsigned n = 1; n <= 6; n++) {
        for (WitnessKind kind : kMain) {
            EXPECT_EQ(DiagonalWitness(kind, 2 * n).eigenvalue(0), Rational(-1));
        }
        for (unsigned j = 1; j <= n; j++) {
            EXPECT_EQ(DiagonalWitness(WitnessKind::PerDof, 2 * n, j).eigenvalue(0), Rational(-1));
        }
    }
    for (unsigned n = 1; n <= 3; n++) {
        auto he = StabilizerSet::hyperentangled(n);
        StateVector xi = build_he_state(n);
        for (WitnessKind kind : kMain) {
            EXPECT_NEAR(expectation(WitnessSpec(kind, he), xi), -1.0, 1e-12);
        }
    }
}

TEST(Witness, ExpansionReassemblesOperator) {
    auto he = StabilizerSet::hyperentangled(2);
    for (WitnessKind kind : kMain) {
        WitnessSpec spec(kind, he);
        std::vector<Rational> c = stabilizer_expansion(build_diagonal(spec));
        ref::Mat sum = ref::Mat::Zero(16, 16);
        for (std::uint64_t m = 0; m < c.size(); m++) {
            ref::Mat prod = ref::identity(4);
            for (unsigned k = 0; k < 4; k++) {
                if ((m >> k) & 1) {
                    prod = prod * ref::pauli(ref::he_generator(2, k));
                }
            }
            sum += to_double(c[m]) * prod;
        }
        EXPECT_LT((sum - reference_dense(kind, he_gens(2), ref::he_state(2))).norm(), 1e-10);
    }
}

TEST(Witness, WorkedExamples) {
    ExampleStates ex = build_example_states();
    auto he = StabilizerSet::hyperentangled(2);
    WitnessSpec w1(WitnessKind::PerDof, he, 1), w2(WitnessKind::PerDof, he, 2), wt(WitnessKind::Wtilde, he);
    EXPECT_NEAR(expectation(w2, ex.psi1), -1.0, 1e-12);
    EXPECT_NEAR(expectation(w1, ex.psi2), -1.0, 1e-12);
    EXPECT_NEAR(expectation(w1, ex.psi1), 0.0, 1e-12);
    EXPECT_NEAR(expectation(w2, ex.psi2), 0.0, 1e-12);
    EXPECT_NEAR(expectation(w1, ex.rho_prime), -0.5, 1e-12);
    EXPECT_NEAR(expectation(w2, ex.rho_prime), -0.5, 1e-12);
    EXPECT_NEAR(expectation(wt, ex.rho_prime), 0.0, 1e-12);
    auto pops = stabilizer_populations(he, ex.rho_prime);
    EXPECT_NEAR(expectation_diagonal(build_diagonal(wt), pops), 0.0, 1e-12);
    EXPECT_NEAR(expectation_diagonal(build_diagonal(w1), pops), -0.5, 1e-12);
}

TEST(Witness, PopulationsMatchProjectors) {
    auto he = StabilizerSet::hyperentangled(2);
    ExampleStates ex = build_example_states();
    auto pops = stabilizer_populations(he, ex.rho_prime);
    double total = 0;
    for (std::uint64_t s = 0; s < 16; s++) {
        EXPECT_NEAR(pops[s], ref::expect(basis_projector(he_gens(2), s), ex.rho_prime.matrix()), 1e-12);
        total += pops[s];
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Witness, NoisyExpectationCrossesZeroAtThreshold) {
    for (unsigned n : {2u, 3u}) {
        ref::Vec xi = ref::he_state(n);
        for (WitnessKind kind : kMain) {
            double p_m = to_double(noise_threshold(kind, 2 * n));
            EXPECT_NEAR(noisy_expectation(kind, 2 * n, p_m), 0.0, 1e-12);
            EXPECT_LT(noisy_expectation(kind, 2 * n, p_m - 0.01), 0.0);
            EXPECT_GT(noisy_expectation(kind, 2 * n, p_m + 0.01), 0.0);
            ref::Mat w = reference_dense(kind, he_gens(n), xi);
            double d = std::pow(2.0, 2 * n);
            for (double p : {0.1, p_m, 0.7}) {
                ref::Mat rho = (1 - p) * xi * xi.adjoint() + p * ref::identity(2 * n) / d;
                EXPECT_NEAR(noisy_expectation(kind, 2 * n, p), ref::expect(w, rho), 1e-12);
            }
        }
    }
}

TEST(Witness, CertificatesAgainstWtilde) {
    for (unsigned big_n = 2; big_n <= 12; big_n++) {
        for (WitnessKind kind : {WitnessKind::W1, WitnessKind::W2, WitnessKind::W3}) {
            Certificate cert = certify_witness(DiagonalWitness(kind, big_n), 1.0);
            EXPECT_TRUE(cert.valid) << witness_id(kind) << " N=" << big_n;
            EXPECT_GE(cert.min_value, -1e-9);
        }
    }
    // Dense reference: W - Wtilde is positive semidefinite.
    for (GraphSpec g : {GraphSpec::path(4), GraphSpec::star(5), GraphSpec::ring(6)}) {
        auto gens = graph_gens(g);
        ref::Mat wt = ref::w_tilde(ref::graph_state(g.num_vertices(), edges_of(g)));
        for (WitnessKind kind : {WitnessKind::W1, WitnessKind::W2, WitnessKind::W3}) {
            ref::Mat diff = reference_dense(kind, gens, ref::Vec()) - wt;
            Eigen::SelfAdjointEigenSolver<ref::Mat> es(diff);
            EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9) << witness_id(kind) << " " << g.edge_list();
        }
    }
    Certificate w3 = certify_witness(DiagonalWitness::w3_with_constant(6, Rational(2)), 1.0);
    EXPECT_NEAR(w3.value_at_zero, 0.0, 1e-12);
    EXPECT_NEAR(w3.min_single_bit, 0.0, 1e-12);
    EXPECT_TRUE(w3.valid);
    // A smaller constant breaks the certificate at s = 0.
    Certificate low = certify_witness(DiagonalWitness::w3_with_constant(6, Rational(3, 2)), 1.0);
    EXPECT_FALSE(low.valid);
    EXPECT_EQ(low.argmin, 0u);
    // W1 scaled below Wtilde: alpha = 2 fails.
    EXPECT_FALSE(certify_witness(DiagonalWitness(WitnessKind::W1, 4), 2.0).valid);
}

TEST(Witness, Detection) {
    auto he = StabilizerSet::hyperentangled(2);
    WitnessSpec wt(WitnessKind::Wtilde, he);
    ExampleStates ex = build_example_states();
    EXPECT_TRUE(detect_hyperentanglement(build_he_state(2), wt).detected);
    EXPECT_FALSE(detect_hyperentanglement(ex.rho_prime, wt).detected);
    EXPECT_FALSE(detect_hyperentanglement(ex.psi1, wt).detected);
    EXPECT_FALSE(detect_hyperentanglement(ex.psi2, wt).detected);
    DetectionReport noisy = detect_hyperentanglement(add_white_noise(build_he_state(2), 0.4), wt);
    EXPECT_TRUE(noisy.detected);
    EXPECT_NEAR(noisy.main_value, -0.25, 1e-12);
    EXPECT_EQ(noisy.verdict(), "hyperentanglement detected");
    // Margin larger than the violation suppresses the verdict.
    EXPECT_FALSE(detect_hyperentanglement(add_white_noise(build_he_state(2), 0.4), wt, 0.3).detected);
}
