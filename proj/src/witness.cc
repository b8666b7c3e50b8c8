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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "witnesslab/errors.h"
#include "witnesslab/pauli.h"
#include "witnesslab/states.h"
#include "witnesslab/walsh.h"

namespace witnesslab {

namespace {

constexpr std::uint64_t kOddGeneratorBits = 0x5555555555555555ULL;   // 1-based odd k
constexpr std::uint64_t kEvenGeneratorBits = 0xAAAAAAAAAAAAAAAAULL;  // 1-based even k

std::int64_t ipow(std::int64_t base, unsigned exponent) {
    std::int64_t out = 1;
    while (exponent--) {
        out *= base;
    }
    return out;
}

int sign_of_bit(std::uint64_t s, unsigned k) {
    return ((s >> k) & 1) ? -1 : 1;
}

bool needs_dof(WitnessKind kind) {
    return kind == WitnessKind::PerDof || kind == WitnessKind::PerDofAlt;
}

bool needs_he(WitnessKind kind) {
    return needs_dof(kind) || kind == WitnessKind::QuditBipartite;
}

Rational dimension(unsigned n_qubits) {
    return pow2(n_qubits);
}

void require_normalized(WitnessKind kind) {
    if (kind == WitnessKind::QuditBipartite) {
        throw ValidationError("the qudit witness is not normalized to <T|W|T> = -1; p_M is undefined for it");
    }
}

}  // namespace

std::string witness_id(WitnessKind kind, unsigned dof) {
    switch (kind) {
        case WitnessKind::Wtilde:
            return "wtilde";
        case WitnessKind::W1:
            return "w1";
        case WitnessKind::W2:
            return "w2";
        case WitnessKind::W3:
            return "w3";
        case WitnessKind::PerDof:
            return "wj:" + std::to_string(dof);
        case WitnessKind::PerDofAlt:
            return "wjalt:" + std::to_string(dof);
        case WitnessKind::QuditBipartite:
            return "qudit";
    }
    return "?";
}

WitnessSpec::WitnessSpec(WitnessKind kind, StabilizerSet system, unsigned dof)
    : kind_(kind), system_(std::move(system)), dof_(needs_dof(kind) ? dof : 0) {
    if (needs_he(kind) && !system_.is_hyperentangled()) {
        throw ValidationError("witness " + witness_id(kind, dof) + " needs a hyperentangled system");
    }
    if (needs_dof(kind) && (dof == 0 || dof > system_.num_dofs())) {
        throw ValidationError("DOF index " + std::to_string(dof) + " outside 1.." +
                              std::to_string(system_.num_dofs()));
    }
}

WitnessSpec WitnessSpec::parse(std::string_view id, StabilizerSet system) {
    static const std::pair<std::string_view, WitnessKind> kPlain[] = {
        {"wtilde", WitnessKind::Wtilde}, {"w1", WitnessKind::W1},       {"w2", WitnessKind::W2},
        {"w3", WitnessKind::W3},         {"qudit", WitnessKind::QuditBipartite},
    };
    for (auto [name, kind] : kPlain) {
        if (id == name) {
            return WitnessSpec(kind, std::move(system));
        }
    }
    for (auto [prefix, kind] : {std::pair{std::string_view("wj:"), WitnessKind::PerDof},
                                std::pair{std::string_view("wjalt:"), WitnessKind::PerDofAlt}}) {
        if (id.starts_with(prefix)) {
            std::string_view digits = id.substr(prefix.size());
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
                digits.size() > 3) {
                throw ValidationError("bad DOF index in witness id '" + std::string(id) + "'");
            }
            return WitnessSpec(kind, std::move(system), static_cast<unsigned>(std::stoul(std::string(digits))));
        }
    }
    throw ValidationError("unknown witness id '" + std::string(id) + "'");
}

// ---- DiagonalWitness ----------------------------------------------------------

DiagonalWitness::DiagonalWitness(WitnessKind kind, unsigned n_stabilizers, unsigned dof)
    : kind_(kind), n_(n_stabilizers), dof_(needs_dof(kind) ? dof : 0), denominator_(1), shift_(0) {
    if (n_ == 0 || n_ > 62) {
        throw ValidationError("diagonal witnesses support 1..62 stabilizers");
    }
    if (needs_he(kind) && n_ % 2) {
        throw ValidationError("witness " + witness_id(kind, dof) + " needs an even stabilizer count");
    }
    if (needs_dof(kind) && (dof == 0 || dof > n_ / 2)) {
        throw ValidationError("DOF index " + std::to_string(dof) + " outside 1.." + std::to_string(n_ / 2));
    }
    switch (kind) {
        case WitnessKind::W3:
            denominator_ = ipow(3, n_ / 2);
            break;
        case WitnessKind::PerDofAlt:
            denominator_ = 2;
            break;
        case WitnessKind::QuditBipartite:
            denominator_ = ipow(2, n_ / 2);
            break;
        default:
            break;
    }
}

DiagonalWitness::DiagonalWitness(const WitnessSpec &spec)
    : DiagonalWitness(spec.kind(), spec.num_qubits(), spec.dof()) {
}

DiagonalWitness DiagonalWitness::w3_with_constant(unsigned n_stabilizers, const Rational &c0) {
    return DiagonalWitness(WitnessKind::W3, n_stabilizers).shifted(c0 - 2);
}

DiagonalWitness DiagonalWitness::shifted(const Rational &delta) const {
    DiagonalWitness out = *this;
    out.shift_ += delta;
    return out;
}

std::int64_t DiagonalWitness::scaled_eigenvalue(std::uint64_t s) const {
    switch (kind_) {
        case WitnessKind::Wtilde:
            return s == 0 ? -1 : 1;
        case WitnessKind::W1:
            return std::int64_t{n_} - 1 - (std::int64_t{n_} - 2 * std::popcount(s));
        case WitnessKind::W2: {
            std::uint64_t all = (std::uint64_t{1} << n_) - 1;
            int odd_clear = (s & kOddGeneratorBits & all) == 0;
            int even_clear = (s & kEvenGeneratorBits & all) == 0;
            return 3 - 2 * (odd_clear + even_clear);
        }
        case WitnessKind::W3: {
            std::int64_t prod = 1;
            for (unsigned j = 0; j < n_ / 2; j++) {
                prod *= 1 + sign_of_bit(s, 2 * j) + sign_of_bit(s, 2 * j + 1);
            }
            if (n_ % 2 && ((s >> (n_ - 1)) & 1)) {
                prod = 0;
            }
            return 2 * denominator_ - 3 * prod;
        }
        case WitnessKind::PerDof: {
            unsigned xx = 2 * dof_ - 2;
            return 1 - sign_of_bit(s, xx) - sign_of_bit(s, xx + 1);
        }
        case WitnessKind::PerDofAlt: {
            unsigned xx = 2 * dof_ - 2;
            int a = sign_of_bit(s, xx);
            int b = sign_of_bit(s, xx + 1);
            return 1 - a - b - a * b;
        }
        case WitnessKind::QuditBipartite:
            return s == 0 ? 1 - denominator_ : 1;
    }
    throw std::logic_error("unreachable");
}

Rational DiagonalWitness::eigenvalue(std::uint64_t s) const {
    return Rational(scaled_eigenvalue(s), denominator_) + shift_;
}

double DiagonalWitness::eigenvalue_double(std::uint64_t s) const {
    return static_cast<double>(scaled_eigenvalue(s)) / static_cast<double>(denominator_) + to_double(shift_);
}

DiagonalWitness build_diagonal(const WitnessSpec &spec) {
    return DiagonalWitness(spec);
}

std::vector<Rational> stabilizer_expansion(const DiagonalWitness &diag) {
    unsigned n = diag.num_stabilizers();
    if (n > 16) {
        throw CapacityError("stabilizer expansion is limited to 16 stabilizers");
    }
    std::vector<std::int64_t> scaled(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < scaled.size(); s++) {
        scaled[s] = diag.scaled_eigenvalue(s);
    }
    walsh_hadamard(std::span<std::int64_t>(scaled));
    Rational norm = Rational(diag.denominator()) * dimension(n);
    std::vector<Rational> coeffs(scaled.size());
    for (std::size_t m = 0; m < scaled.size(); m++) {
        coeffs[m] = Rational(scaled[m]) / norm;
    }
    coeffs[0] += diag.shift();
    return coeffs;
}

// ---- dense construction -------------------------------------------------------

Matrix build_dense(const WitnessSpec &spec, const DenseLimits &limits) {
    const StabilizerSet &sys = spec.system();
    unsigned n = sys.num_qubits();
    check_density_capacity(n, limits);
    auto dim = Eigen::Index{1} << n;
    const Matrix id = Matrix::Identity(dim, dim);
    auto gen = [&](unsigned k) -> const PauliString & { return sys.generator(k); };

    switch (spec.kind()) {
        case WitnessKind::Wtilde: {
            Amplitudes t = build_target_state(sys, limits).amplitudes();
            return id - 2.0 * t * t.adjoint();
        }
        case WitnessKind::QuditBipartite: {
            Amplitudes t = build_target_state(sys, limits).amplitudes();
            double inv_d = std::ldexp(1.0, -static_cast<int>(sys.num_dofs()));
            return inv_d * id - t * t.adjoint();
        }
        case WitnessKind::W1: {
            Matrix w = static_cast<double>(n - 1) * id;
            for (unsigned k = 0; k < n; k++) {
                w -= gen(k).to_dense();
            }
            return w;
        }
        case WitnessKind::W2: {
            Matrix odd = id;
            Matrix even = id;
            for (unsigned k = 0; k < n; k++) {
                Matrix &proj = k % 2 == 0 ? odd : even;
                proj = 0.5 * (proj + apply_left(gen(k), proj));
            }
            return 3.0 * id - 2.0 * (odd + even);
        }
        case WitnessKind::W3: {
            Matrix prod = id;
            for (unsigned j = 0; j < n / 2; j++) {
                prod = (prod + apply_left(gen(2 * j), prod) + apply_left(gen(2 * j + 1), prod)) / 3.0;
            }
            if (n % 2) {
                prod = 0.5 * (prod + apply_left(gen(n - 1), prod));
            }
            return 2.0 * id - 3.0 * prod;
        }
        case WitnessKind::PerDof: {
            unsigned xx = 2 * spec.dof() - 2;
            return id - gen(xx + 1).to_dense() - gen(xx).to_dense();
        }
        case WitnessKind::PerDofAlt: {
            unsigned xx = 2 * spec.dof() - 2;
            Matrix zz = gen(xx + 1).to_dense();
            return 0.5 * (id - zz - gen(xx).to_dense() - apply_left(gen(xx + 1), gen(xx).to_dense()));
        }
    }
    throw std::logic_error("unreachable");
}

// ---- traces ---------------------------------------------------------------------

Rational closed_form_trace(WitnessKind kind, unsigned n_qubits) {
    if (n_qubits == 0 || n_qubits > 62) {
        throw ValidationError("qubit count must be in 1..62");
    }
    unsigned big_n = n_qubits;
    Rational d = dimension(big_n);
    switch (kind) {
        case WitnessKind::Wtilde:
            return d - 2;
        case WitnessKind::W1:
            return Rational(big_n - 1) * d;
        case WitnessKind::W2:
            // 3D - 4 sqrt(D) for even N, 3D - 3 sqrt(2D) for odd N.
            if (big_n % 2 == 0) {
                return 3 * d - 4 * pow2(big_n / 2);
            }
            return 3 * d - 3 * pow2((big_n + 1) / 2);
        case WitnessKind::W3:
            // (sqrt D)^{log2 3} = 3^{N/2} for even N; (sqrt(D/2))^{log2 3} = 3^{(N-1)/2} for odd N.
            if (big_n % 2 == 0) {
                return 2 * d - 3 * d / pow3(big_n / 2);
            }
            return 2 * d - 3 * d / (2 * pow3((big_n - 1) / 2));
        case WitnessKind::PerDof:
            return d;
        case WitnessKind::PerDofAlt:
            return d / 2;
        case WitnessKind::QuditBipartite:
            if (big_n % 2) {
                throw ValidationError("qudit witness needs an even qubit count");
            }
            return d / pow2(big_n / 2) - 1;
    }
    throw std::logic_error("unreachable");
}

Rational bitstring_trace(const DiagonalWitness &diag, unsigned max_qubits) {
    unsigned n = diag.num_stabilizers();
    if (n > max_qubits || n > 40) {
        throw CapacityError("bit-string trace over 2^" + std::to_string(n) + " strings exceeds the limit of 2^" +
                            std::to_string(max_qubits));
    }
    __int128 sum = 0;
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < count; s++) {
        sum += diag.scaled_eigenvalue(s);
    }
    bool negative = sum < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-sum) : static_cast<unsigned __int128>(sum);
    BigInt big = BigInt(static_cast<std::uint64_t>(mag >> 64)) << 64;
    big += BigInt(static_cast<std::uint64_t>(mag));
    if (negative) {
        big = -big;
    }
    return Rational(big) / diag.denominator() + diag.shift() * dimension(n);
}

double dense_trace(const WitnessSpec &spec, const DenseLimits &limits) {
    return build_dense(spec, limits).trace().real();
}

TraceReport trace(const WitnessSpec &spec, unsigned dense_max_qubits) {
    unsigned n = spec.num_qubits();
    TraceReport report{closed_form_trace(spec.kind(), n), std::nullopt, std::nullopt};
    if (n <= 30) {
        report.bitstring = bitstring_trace(DiagonalWitness(spec));
        if (*report.bitstring != report.closed_form) {
            throw ConsistencyError("closed-form trace " + to_string(report.closed_form) + " != bit-string sum " +
                                   to_string(*report.bitstring) + " for " + spec.id());
        }
    }
    if (n <= dense_max_qubits) {
        report.dense = dense_trace(spec);
        double expected = to_double(report.closed_form);
        if (std::abs(*report.dense - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
            throw ConsistencyError("dense trace disagrees with closed form for " + spec.id());
        }
    }
    return report;
}

// ---- noise thresholds -------------------------------------------------------------

Rational noise_threshold(WitnessKind kind, unsigned n_qubits) {
    require_normalized(kind);
    Rational d = dimension(n_qubits);
    return d / (closed_form_trace(kind, n_qubits) + d);
}

Rational noise_threshold(const WitnessSpec &spec) {
    return noise_threshold(spec.kind(), spec.num_qubits());
}

std::optional<Rational> printed_noise_threshold(WitnessKind kind, unsigned n_qubits) {
    unsigned big_n = n_qubits;
    Rational quarter(1, 4);
    Rational third(1, 3);
    switch (kind) {
        case WitnessKind::W1:
            return Rational(1, big_n);
        case WitnessKind::W2:
            if (big_n % 2 == 0) {
                return quarter / (1 - 1 / pow2(big_n / 2));
            }
            // The printed cell has sqrt(2D) where the trace column implies sqrt(D/2).
            return quarter / (1 - Rational(3) / (4 * pow2((big_n + 1) / 2)));
        case WitnessKind::W3:
            if (big_n % 2 == 0) {
                return third / (1 - 1 / pow3(big_n / 2));
            }
            return third / (1 - 1 / (2 * pow3((big_n - 1) / 2)));
        case WitnessKind::Wtilde:
            return Rational(1, 2) / (1 - 1 / dimension(big_n));
        default:
            return std::nullopt;
    }
}

// ---- expectation values -------------------------------------------------------------

double expectation(const Matrix &witness, const DensityOperator &rho) {
    if (witness.rows() != rho.matrix().rows() || witness.cols() != rho.matrix().cols()) {
        throw DimensionError("witness and state dimensions differ");
    }
    // Tr[W rho] = sum_{ab} W_ab rho_ba
    return (witness.array() * rho.matrix().transpose().array()).sum().real();
}

double expectation(const Matrix &witness, const StateVector &state) {
    if (static_cast<std::uint64_t>(witness.rows()) != state.dimension()) {
        throw DimensionError("witness and state dimensions differ");
    }
    return state.amplitudes().dot(witness * state.amplitudes()).real();
}

double expectation(const WitnessSpec &spec, const DensityOperator &rho, const DenseLimits &limits) {
    if (rho.num_qubits() != spec.num_qubits()) {
        throw DimensionError("state has " + std::to_string(rho.num_qubits()) + " qubits, witness acts on " +
                             std::to_string(spec.num_qubits()));
    }
    return expectation(build_dense(spec, limits), rho);
}

double expectation(const WitnessSpec &spec, const StateVector &state, const DenseLimits &limits) {
    if (state.num_qubits() != spec.num_qubits()) {
        throw DimensionError("state has " + std::to_string(state.num_qubits()) + " qubits, witness acts on " +
                             std::to_string(spec.num_qubits()));
    }
    return expectation(build_dense(spec, limits), state);
}

namespace {

template <typename State>
std::vector<double> populations_impl(const StabilizerSet &system, const State &state) {
    unsigned n = system.num_qubits();
    if (state.num_qubits() != n) {
        throw DimensionError("state and stabilizer set act on different qubit counts");
    }
    check_density_capacity(n);
    std::vector<double> values(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < values.size(); m++) {
        values[m] = expectation(system.product(m), state).real();
    }
    walsh_hadamard(std::span<double>(values));
    double scale = std::ldexp(1.0, -static_cast<int>(n));
    for (double &v : values) {
        v *= scale;
    }
    return values;
}

}  // namespace

std::vector<double> stabilizer_populations(const StabilizerSet &system, const DensityOperator &rho) {
    return populations_impl(system, rho);
}

std::vector<double> stabilizer_populations(const StabilizerSet &system, const StateVector &state) {
    return populations_impl(system, state);
}

double expectation_diagonal(const DiagonalWitness &diag, const std::vector<double> &populations) {
    if (populations.size() != (std::size_t{1} << diag.num_stabilizers())) {
        throw DimensionError("population vector does not match the stabilizer count");
    }
    double acc = 0;
    for (std::uint64_t s = 0; s < populations.size(); s++) {
        acc += diag.eigenvalue_double(s) * populations[s];
    }
    return acc;
}

double noisy_expectation(WitnessKind kind, unsigned n_qubits, double p_noise) {
    if (!(p_noise >= 0.0 && p_noise <= 1.0)) {
        throw DomainError("noise probability must lie in [0, 1]");
    }
    DiagonalWitness diag(kind, n_qubits, needs_dof(kind) ? 1 : 0);
    double at_target = to_double(diag.eigenvalue(0));
    double trace_over_d = to_double(closed_form_trace(kind, n_qubits) / dimension(n_qubits));
    return (1.0 - p_noise) * at_target + p_noise * trace_over_d;
}

// ---- certification --------------------------------------------------------------------

Certificate certify_witness(const DiagonalWitness &candidate, double alpha) {
    unsigned n = candidate.num_stabilizers();
    if (n > 30) {
        throw CapacityError("certificate scans are limited to 30 stabilizers");
    }
    if (!(alpha > 0)) {
        throw DomainError("alpha must be positive");
    }
    DiagonalWitness reference(WitnessKind::Wtilde, n);
    Certificate cert{alpha, std::numeric_limits<double>::infinity(), 0, {}, 0.0,
                     std::numeric_limits<double>::infinity(), false};
    std::uint64_t count = std::uint64_t{1} << n;
    std::vector<double> values(count);
    for (std::uint64_t s = 0; s < count; s++) {
        double v = candidate.eigenvalue_double(s) - alpha * reference.eigenvalue_double(s);
        values[s] = v;
        if (v < cert.min_value) {
            cert.min_value = v;
            cert.argmin = s;
        }
        if (std::popcount(s) == 1) {
            cert.min_single_bit = std::min(cert.min_single_bit, v);
        }
    }
    cert.value_at_zero = values[0];
    for (std::uint64_t s = 0; s < count && cert.minimizers.size() < 4096; s++) {
        if (values[s] <= cert.min_value + 1e-12) {
            cert.minimizers.push_back(s);
        }
    }
    cert.valid = cert.min_value >= -1e-9;
    return cert;
}

Certificate certify_witness(const WitnessSpec &candidate, double alpha) {
    return certify_witness(DiagonalWitness(candidate), alpha);
}

// ---- detection --------------------------------------------------------------------------

namespace {

template <typename State>
DetectionReport detect_impl(const State &state, const WitnessSpec &main_witness, double margin) {
    const StabilizerSet &sys = main_witness.system();
    if (!sys.is_hyperentangled()) {
        throw ValidationError("hyperentanglement detection needs an HE system");
    }
    if (state.num_qubits() != sys.num_qubits()) {
        throw DimensionError("state and witness act on different qubit counts");
    }
    if (margin < 0) {
        throw DomainError("significance margin must be non-negative");
    }
    double cutoff = -(margin + 1e-12);
    DetectionReport report{};
    report.all_dofs_entangled = true;
    for (unsigned j = 1; j <= sys.num_dofs(); j++) {
        double v = expectation(WitnessSpec(WitnessKind::PerDof, sys, j), state);
        report.per_dof.push_back(v);
        report.all_dofs_entangled = report.all_dofs_entangled && v < cutoff;
    }
    report.main_value = expectation(main_witness, state);
    report.main_negative = report.main_value < cutoff;
    report.detected = report.all_dofs_entangled && report.main_negative;
    return report;
}

}  // namespace

DetectionReport detect_hyperentanglement(const DensityOperator &rho, const WitnessSpec &main_witness, double margin) {
    return detect_impl(rho, main_witness, margin);
}

DetectionReport detect_hyperentanglement(const StateVector &state, const WitnessSpec &main_witness, double margin) {
    return detect_impl(state, main_witness, margin);
}

}  // namespace witnesslab
