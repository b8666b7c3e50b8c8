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

#include <bit>
#include <string>

#include "witnesslab/errors.h"

namespace witnesslab {

namespace {

std::uint64_t qubit_mask(unsigned n_qubits) {
    return n_qubits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_qubits) - 1;
}

int parity(std::uint64_t bits) {
    return std::popcount(bits) & 1;
}

const Complex kQuarterTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_same_size(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli strings act on " + std::to_string(p.num_qubits()) + " and " +
                             std::to_string(q.num_qubits()) + " qubits");
    }
}

}  // namespace

PauliString::PauliString(unsigned n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, unsigned quarter_turns)
    : n_qubits_(n_qubits), x_mask_(x_mask), z_mask_(z_mask), quarter_turns_(quarter_turns % 4) {
    if (n_qubits == 0 || n_qubits > kMaxPauliQubits) {
        throw DimensionError("Pauli string size must be in 1.." + std::to_string(kMaxPauliQubits));
    }
    if ((x_mask | z_mask) & ~qubit_mask(n_qubits)) {
        throw DimensionError("Pauli masks do not fit in " + std::to_string(n_qubits) + " qubits");
    }
}

PauliString PauliString::parse(std::string_view text) {
    unsigned letter_turns = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        letter_turns = text.front() == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        letter_turns += 1;
        text.remove_prefix(1);
    }
    std::uint64_t xs = 0;
    std::uint64_t zs = 0;
    unsigned num_y = 0;
    if (text.empty() || text.size() > kMaxPauliQubits) {
        throw ValidationError("Pauli string needs 1.." + std::to_string(kMaxPauliQubits) + " letters");
    }
    for (size_t k = 0; k < text.size(); k++) {
        std::uint64_t bit = std::uint64_t{1} << k;
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                xs |= bit;
                break;
            case 'Z':
                zs |= bit;
                break;
            case 'Y':
                xs |= bit;
                zs |= bit;
                num_y++;
                break;
            default:
                throw ValidationError("bad Pauli letter '" + std::string(1, text[k]) + "'");
        }
    }
    // Y = iXZ, so the X^x Z^z form carries i^{#Y} on top of the letter phase.
    return PauliString(static_cast<unsigned>(text.size()), xs, zs, letter_turns + num_y);
}

PauliString PauliString::single(unsigned n_qubits, unsigned qubit, char letter) {
    if (qubit >= n_qubits) {
        throw DimensionError("qubit index out of range");
    }
    std::string text(n_qubits, 'I');
    text[qubit] = letter;
    return parse(text);
}

unsigned PauliString::weight() const {
    return static_cast<unsigned>(std::popcount(support()));
}

Complex PauliString::phase() const {
    return kQuarterTurns[quarter_turns_];
}

unsigned PauliString::letter_quarter_turns() const {
    auto num_y = static_cast<unsigned>(std::popcount(x_mask_ & z_mask_));
    return (quarter_turns_ + 3 * num_y) % 4;
}

bool PauliString::is_hermitian() const {
    return letter_quarter_turns() % 2 == 0;
}

int PauliString::letter_sign() const {
    if (!is_hermitian()) {
        throw DomainError("Pauli string " + str() + " is not Hermitian");
    }
    return letter_quarter_turns() == 0 ? 1 : -1;
}

char PauliString::letter(unsigned qubit) const {
    bool x = (x_mask_ >> qubit) & 1;
    bool z = (z_mask_ >> qubit) & 1;
    return "IXZY"[x + 2 * z];
}

std::string PauliString::letters() const {
    std::string out(n_qubits_, 'I');
    for (unsigned k = 0; k < n_qubits_; k++) {
        out[k] = letter(k);
    }
    return out;
}

std::string PauliString::str() const {
    static const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    return kPrefix[letter_quarter_turns()] + letters();
}

Matrix PauliString::to_dense() const {
    check_density_capacity(n_qubits_);
    auto dim = Eigen::Index{1} << n_qubits_;
    Matrix m = Matrix::Zero(dim, dim);
    Complex ph = phase();
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); b++) {
        m(static_cast<Eigen::Index>(b ^ x_mask_), static_cast<Eigen::Index>(b)) = parity(z_mask_ & b) ? -ph : ph;
    }
    return m;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    unsigned turns = p.quarter_turns() + q.quarter_turns() + 2 * static_cast<unsigned>(parity(p.z_mask() & q.x_mask()));
    return PauliString(p.num_qubits(), p.x_mask() ^ q.x_mask(), p.z_mask() ^ q.z_mask(), turns);
}

bool commutes(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    return parity((p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask())) == 0;
}

StateVector apply(const PauliString &p, const StateVector &v) {
    if (p.num_qubits() != v.num_qubits()) {
        throw DimensionError("Pauli string and state act on different qubit counts");
    }
    Amplitudes out(v.amplitudes().size());
    Complex ph = p.phase();
    for (std::uint64_t b = 0; b < v.dimension(); b++) {
        Complex amp = v[b] * ph;
        out[static_cast<Eigen::Index>(b ^ p.x_mask())] = parity(p.z_mask() & b) ? -amp : amp;
    }
    return StateVector(v.num_qubits(), std::move(out));
}

Matrix apply_left(const PauliString &p, const Matrix &m) {
    if (static_cast<std::uint64_t>(m.rows()) != (std::uint64_t{1} << p.num_qubits())) {
        throw DimensionError("matrix rows do not match the Pauli string size");
    }
    Matrix out(m.rows(), m.cols());
    Complex ph = p.phase();
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(m.rows()); b++) {
        Complex f = parity(p.z_mask() & b) ? -ph : ph;
        out.row(static_cast<Eigen::Index>(b ^ p.x_mask())) = f * m.row(static_cast<Eigen::Index>(b));
    }
    return out;
}

Complex expectation(const PauliString &p, const StateVector &v) {
    if (p.num_qubits() != v.num_qubits()) {
        throw DimensionError("Pauli string and state act on different qubit counts");
    }
    Complex acc = 0;
    for (std::uint64_t b = 0; b < v.dimension(); b++) {
        Complex term = std::conj(v[b ^ p.x_mask()]) * v[b];
        acc += parity(p.z_mask() & b) ? -term : term;
    }
    return acc * p.phase();
}

Complex expectation(const PauliString &p, const DensityOperator &rho) {
    if (p.num_qubits() != rho.num_qubits()) {
        throw DimensionError("Pauli string and state act on different qubit counts");
    }
    const Matrix &m = rho.matrix();
    Complex acc = 0;
    for (std::uint64_t c = 0; c < rho.dimension(); c++) {
        Complex term = m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ p.x_mask()));
        acc += parity(p.z_mask() & c) ? -term : term;
    }
    return acc * p.phase();
}

QubitIndexMap::QubitIndexMap(unsigned n_dofs) : n_dofs_(n_dofs) {
    if (n_dofs == 0 || 2 * n_dofs > kMaxPauliQubits) {
        throw DimensionError("DOF count must be in 1.." + std::to_string(kMaxPauliQubits / 2));
    }
}

unsigned QubitIndexMap::qubit(unsigned dof, Particle particle) const {
    if (dof == 0 || dof > n_dofs_) {
        throw DimensionError("DOF index " + std::to_string(dof) + " outside 1.." + std::to_string(n_dofs_));
    }
    return 2 * dof - 2 + (particle == Particle::B ? 1 : 0);
}

unsigned QubitIndexMap::dof_of(unsigned qubit) const {
    if (qubit >= num_qubits()) {
        throw DimensionError("qubit index out of range");
    }
    return qubit / 2 + 1;
}

Particle QubitIndexMap::particle_of(unsigned qubit) const {
    if (qubit >= num_qubits()) {
        throw DimensionError("qubit index out of range");
    }
    return qubit % 2 == 0 ? Particle::A : Particle::B;
}

std::string QubitIndexMap::label(unsigned qubit) const {
    return (particle_of(qubit) == Particle::A ? "A" : "B") + std::to_string(dof_of(qubit));
}

unsigned QubitIndexMap::qubit_from_label(std::string_view label) const {
    if (label.size() < 2 || (label[0] != 'A' && label[0] != 'B')) {
        throw ValidationError("bad DOF label '" + std::string(label) + "'");
    }
    unsigned dof = 0;
    for (char c : label.substr(1)) {
        if (c < '0' || c > '9') {
            throw ValidationError("bad DOF label '" + std::string(label) + "'");
        }
        dof = dof * 10 + static_cast<unsigned>(c - '0');
    }
    return qubit(dof, label[0] == 'A' ? Particle::A : Particle::B);
}

}  // namespace witnesslab
