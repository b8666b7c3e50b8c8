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

// Reference constructions for tests. Everything here is built from explicit
// Kronecker products and index loops so it shares no code with the library.
#ifndef WITNESSLAB_TESTS_REFERENCE_H
#define WITNESSLAB_TESTS_REFERENCE_H

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ref {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat letter_matrix(char c) {
    Mat m = Mat::Zero(2, 2);
    switch (c) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, C(0, -1), C(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Letter k acts on qubit k, the bit of weight 2^k.
inline Mat pauli(const std::string &letters) {
    Mat out = Mat::Identity(1, 1);
    for (char c : letters) {
        out = kron(letter_matrix(c), out);
    }
    return out;
}

/// X on qubit q and Z on its neighbours, as a letter string.
inline std::string graph_generator(unsigned n, unsigned q, const std::vector<std::pair<unsigned, unsigned>> &edges) {
    std::string s(n, 'I');
    s[q] = 'X';
    for (auto [a, b] : edges) {
        if (a == q) {
            s[b] = 'Z';
        }
        if (b == q) {
            s[a] = 'Z';
        }
    }
    return s;
}

/// XX and ZZ on the pair (2j, 2j+1), j 0-based.
inline std::string he_generator(unsigned n_dofs, unsigned k) {
    std::string s(2 * n_dofs, 'I');
    char c = k % 2 == 0 ? 'X' : 'Z';
    s[2 * (k / 2)] = c;
    s[2 * (k / 2) + 1] = c;
    return s;
}

/// Product of Bell pairs: amplitude 2^{-n/2} where each pair's bits agree.
inline Vec he_state(unsigned n_dofs) {
    std::size_t d = std::size_t{1} << (2 * n_dofs);
    Vec v = Vec::Zero(static_cast<Eigen::Index>(d));
    double amp = std::pow(2.0, -0.5 * n_dofs);
    for (std::size_t i = 0; i < d; i++) {
        bool ok = true;
        for (unsigned j = 0; j < n_dofs; j++) {
            ok = ok && (((i >> (2 * j)) & 1) == ((i >> (2 * j + 1)) & 1));
        }
        if (ok) {
            v[static_cast<Eigen::Index>(i)] = amp;
        }
    }
    return v;
}

/// (-1)^{edges with both ends set} / sqrt(D).
inline Vec graph_state(unsigned n, const std::vector<std::pair<unsigned, unsigned>> &edges) {
    std::size_t d = std::size_t{1} << n;
    Vec v(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; i++) {
        int sign = 1;
        for (auto [a, b] : edges) {
            if (((i >> a) & 1) && ((i >> b) & 1)) {
                sign = -sign;
            }
        }
        v[static_cast<Eigen::Index>(i)] = sign / std::sqrt(static_cast<double>(d));
    }
    return v;
}

inline Mat identity(unsigned n) {
    return Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
}

/// (1 + S)/2 products over the generators listed.
inline Mat projector_product(const std::vector<std::string> &gens, const std::vector<unsigned> &which, unsigned n) {
    Mat out = identity(n);
    for (unsigned k : which) {
        out = out * (identity(n) + pauli(gens[k])) / 2.0;
    }
    return out;
}

/// Dense W1, W2, W3 and Wtilde from their operator definitions over
/// generators S_1..S_N (`gens` 0-based) and the target vector.
inline Mat w_tilde(const Vec &target) {
    auto n = static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(target.size())));
    return identity(n) - 2.0 * target * target.adjoint();
}

inline Mat w1(const std::vector<std::string> &gens) {
    auto n = static_cast<unsigned>(gens.size());
    Mat out = static_cast<double>(n - 1) * identity(n);
    for (const auto &g : gens) {
        out -= pauli(g);
    }
    return out;
}

inline Mat w2(const std::vector<std::string> &gens) {
    auto n = static_cast<unsigned>(gens.size());
    std::vector<unsigned> odd, even;  // 1-based parity of k
    for (unsigned k = 0; k < n; k++) {
        (k % 2 == 0 ? odd : even).push_back(k);
    }
    return 3.0 * identity(n) - 2.0 * (projector_product(gens, odd, n) + projector_product(gens, even, n));
}

inline Mat w3(const std::vector<std::string> &gens) {
    auto n = static_cast<unsigned>(gens.size());
    Mat prod = identity(n);
    for (unsigned k = 0; k + 1 < n; k += 2) {
        prod = prod * (identity(n) + pauli(gens[k]) + pauli(gens[k + 1])) / 3.0;
    }
    if (n % 2 == 1) {
        prod = prod * (identity(n) + pauli(gens[n - 1])) / 2.0;
    }
    return 2.0 * identity(n) - 3.0 * prod;
}

inline double expect(const Mat &w, const Vec &v) {
    return (v.adjoint() * w * v)(0, 0).real();
}

inline double expect(const Mat &w, const Mat &rho) {
    return (w * rho).trace().real();
}

}  // namespace ref

#endif
