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

#include "witnesslab/separability.h"

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "reference.h"
#include "witnesslab/errors.h"
#include "witnesslab/states.h"
#include "witnesslab/witness.h"

using namespace witnesslab;

namespace {

ref::Vec random_unit(std::mt19937_64 &rng, Eigen::Index d) {
    std::normal_distribution<double> g;
    ref::Vec v(d);
    for (Eigen::Index k = 0; k < d; k++) {
        v[k] = {g(rng), g(rng)};
    }
    return v.normalized();
}

}  // namespace

TEST(Separability, PartitionFamilySize) {
    for (unsigned n = 1; n <= 4; n++) {
        auto parts = enumerate_partitions(n);
        EXPECT_EQ(parts.size(), n * (std::size_t{1} << (2 * n - 2)));
        std::set<std::string> labels;
        for (const auto &p : parts) {
            EXPECT_TRUE(labels.insert(p.label()).second);
            EXPECT_EQ(p.left_mask & p.right_mask, 0u);
            EXPECT_EQ(p.left_mask | p.right_mask, (std::uint64_t{1} << (2 * n)) - 1);
            // A_j left, B_j right
            EXPECT_TRUE((p.left_mask >> (2 * p.dof - 2)) & 1);
            EXPECT_TRUE((p.right_mask >> (2 * p.dof - 1)) & 1);
        }
    }
    EXPECT_EQ(enumerate_partitions(2)[0].label(), "j=1;I=;J=A2,B2");
}

TEST(Separability, PerPartitionValuesFollowSplitPairs) {
    for (unsigned n = 1; n <= 3; n++) {
        StateVector xi = build_he_state(n);
        for (const auto &p : enumerate_partitions(n)) {
            EXPECT_NEAR(max_overlap_svd(xi, p), std::pow(0.5, p.split_pairs()), 1e-12) << p.label();
        }
    }
}

TEST(Separability, OverlapBound) {
    for (unsigned n = 1; n <= 3; n++) {
        OverlapBoundReport r = verify_overlap_bound(n);
        EXPECT_NEAR(r.result.max_overlap_sq, 0.5, 1e-9);
        EXPECT_TRUE(r.bound_holds);
        EXPECT_TRUE(r.saturating_confirmed);
        EXPECT_EQ(r.result.argmax_partition.split_pairs(), 1u);
        EXPECT_EQ(r.result.method, OracleMethod::Svd);
    }
}

TEST(Separability, RandomProductStatesStayBelowBound) {
    // Independent of the SVD: sample product states directly.
    std::mt19937_64 rng(2024);
    ref::Vec xi = ref::he_state(2);
    for (const auto &p : enumerate_partitions(2)) {
        auto nl = static_cast<unsigned>(std::popcount(p.left_mask));
        double best = 0;
        for (int t = 0; t < 300; t++) {
            ref::Vec l = random_unit(rng, Eigen::Index{1} << nl);
            ref::Vec r = random_unit(rng, Eigen::Index{1} << (4 - nl));
            StateVector phi = embed_product(l, r, p.left_mask, 4);
            best = std::max(best, std::norm(xi.dot(phi.amplitudes())));
        }
        EXPECT_LE(best, max_overlap_svd(build_he_state(2), p) + 1e-12);
    }
}

TEST(Separability, SearchConvergesToSvd) {
    for (unsigned n = 1; n <= 3; n++) {
        StateVector xi = build_he_state(n);
        for (const auto &p : enumerate_partitions(n)) {
            SearchOptions opt;
            opt.restarts = 10;
            opt.seed = 7;
            OracleResult r = search_overlap(xi, p, opt);
            double svd = max_overlap_svd(xi, p);
            EXPECT_NEAR(r.max_overlap_sq, svd, 1e-6) << p.label();
            EXPECT_LE(r.max_overlap_sq, svd + 1e-9);
            EXPECT_GT(r.iterations, 0u);
        }
    }
}

TEST(Separability, SearchIteratesKeepWtildeNonnegative) {
    auto he = StabilizerSet::hyperentangled(2);
    ref::Mat wt = build_dense(WitnessSpec(WitnessKind::Wtilde, he));
    StateVector xi = build_he_state(2);
    double previous = -1;
    int drops = 0;
    int calls = 0;
    for (const auto &p : enumerate_partitions(2)) {
        SearchOptions opt;
        opt.restarts = 3;
        opt.on_iterate = [&](const Amplitudes &l, const Amplitudes &r, double overlap) {
            StateVector phi = embed_product(l, r, p.left_mask, 4);
            EXPECT_GE(ref::expect(wt, phi.amplitudes()), -1e-12);
            EXPECT_NEAR(overlap, xi.overlap_sq(phi), 1e-12);
            if (overlap < previous - 1e-12) {
                drops++;
            }
            previous = overlap;
            calls++;
        };
        search_overlap(xi, p, opt);
        previous = -1;
    }
    EXPECT_GT(calls, 0);
    // Only a new restart may lower the overlap: two per partition.
    EXPECT_LE(drops, 2 * 8);
    SearchOptions none;
    none.restarts = 0;
    EXPECT_THROW(search_overlap(xi, enumerate_partitions(2)[0], none), DomainError);
}

TEST(Separability, SearchFamilyMaximum) {
    SearchOptions opt;
    opt.seed = 7;
    OverlapBoundReport r = search_overlap_bound(2, opt);
    EXPECT_NEAR(r.result.max_overlap_sq, 0.5, 1e-6);
    EXPECT_EQ(r.result.method, OracleMethod::Search);
    EXPECT_TRUE(r.saturating_confirmed);
}

TEST(Separability, QuditCutIsStricter) {
    for (unsigned n = 1; n <= 3; n++) {
        EXPECT_NEAR(qudit_overlap_bound(n), std::pow(0.5, n), 1e-9);
    }
    EXPECT_EQ(Bipartition::particle_cut(2).label(), "A|B");
    EXPECT_EQ(Bipartition::particle_cut(2).left_mask, 0b0101u);
}

TEST(Separability, Errors) {
    StateVector xi = build_he_state(2);
    EXPECT_THROW(max_overlap_svd(xi, 0u), DimensionError);
    EXPECT_THROW(max_overlap_svd(xi, 0b1111u), DimensionError);
    EXPECT_THROW(max_overlap_svd(xi, enumerate_partitions(1)[0]), DimensionError);
}
