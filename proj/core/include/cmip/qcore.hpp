// Copyright 2026 The cmip Authors
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

// Finite-dimensional state and operator arithmetic over labeled
// tensor-product mode bases.

#ifndef CMIP_QCORE_HPP
#define CMIP_QCORE_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace cmip {

using complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

namespace labels {
inline constexpr std::string_view kSignalPol = "signal_pol";
inline constexpr std::string_view kSignalPath = "signal_path";
inline constexpr std::string_view kIdlerPol = "idler_pol";
}  // namespace labels

/// One subsystem of a mode basis: a label plus its ordered basis symbols.
struct Factor {
    std::string label;
    std::vector<std::string> symbols;

    std::size_t dimension() const { return symbols.size(); }
    bool operator==(const Factor&) const = default;

    static Factor polarization(std::string_view label);
    static Factor path(std::string_view label);
};

/// Ordered list of factors; the first factor is the most significant digit
/// of the flat index.
class ModeBasis {
public:
    ModeBasis() = default;
    explicit ModeBasis(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return factors_.size(); }

    std::optional<std::size_t> position(std::string_view label) const;
    /// Position of `label`; throws BasisError when absent.
    std::size_t require(std::string_view label) const;

    std::size_t index_of(std::span<const std::size_t> digits) const;
    std::vector<std::size_t> digits_of(std::size_t index) const;
    /// Flat index from basis symbols, one per factor.
    std::size_t index_of_symbols(std::span<const std::string> symbols) const;
    std::vector<std::string> symbols_of(std::size_t index) const;

    bool disjoint(const ModeBasis& other) const;
    ModeBasis concat(const ModeBasis& other) const;
    /// Sub-basis of the factors named in `keep`, in this basis' order.
    ModeBasis select(std::span<const std::string> keep) const;
    ModeBasis without(std::string_view label) const;

    bool operator==(const ModeBasis& other) const { return factors_ == other.factors_; }

private:
    std::vector<Factor> factors_;
    std::size_t dimension_ = 1;
};

/// (signal_pol) single-photon polarization basis.
ModeBasis polarization_basis();
/// (signal_pol, signal_path)
ModeBasis signal_basis();
/// (signal_pol, signal_path, idler_pol)
ModeBasis two_photon_basis();
/// (signal_pol, idler_pol)
ModeBasis polarization_pair_basis();

class StateVector {
public:
    /// Unchecked: amplitudes may carry any norm (branch components).
    StateVector(ModeBasis basis, CVector amplitudes);

    /// Normalized construction. Norms within 1e-9 of one are rescaled,
    /// anything else throws NormalizationError.
    static StateVector normalized(ModeBasis basis, CVector amplitudes);

    /// Single basis vector named by one symbol per factor.
    static StateVector basis_state(ModeBasis basis, std::span<const std::string> symbols);

    const ModeBasis& basis() const { return basis_; }
    const CVector& amplitudes() const { return amplitudes_; }
    complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }
    std::size_t dimension() const { return basis_.dimension(); }

    double norm() const { return amplitudes_.norm(); }
    double squared_norm() const { return amplitudes_.squaredNorm(); }
    complex inner(const StateVector& other) const;

    /// Same state relabeled onto another basis of equal dimension.
    StateVector relabeled(ModeBasis basis) const;

private:
    ModeBasis basis_;
    CVector amplitudes_;
};

class Operator {
public:
    Operator(ModeBasis basis, CMatrix matrix);

    /// Verifies U^dagger U = I within 1e-12 entrywise.
    static Operator unitary(ModeBasis basis, CMatrix matrix);
    static Operator identity(ModeBasis basis);

    const ModeBasis& basis() const { return basis_; }
    const CMatrix& matrix() const { return matrix_; }
    bool is_unitary() const { return unitary_; }

private:
    ModeBasis basis_;
    CMatrix matrix_;
    bool unitary_ = false;
};

class DensityMatrix {
public:
    /// Checks Hermiticity (1e-10), unit trace (1e-10) and eigenvalues >= -1e-8.
    DensityMatrix(ModeBasis basis, CMatrix matrix);

    static DensityMatrix pure(const StateVector& state);
    /// Eigenvalues clipped at zero and trace renormalized to one.
    static DensityMatrix repaired(ModeBasis basis, const CMatrix& matrix);
    static DensityMatrix maximally_mixed(ModeBasis basis);

    const ModeBasis& basis() const { return basis_; }
    const CMatrix& matrix() const { return matrix_; }
    std::size_t dimension() const { return basis_.dimension(); }

private:
    ModeBasis basis_;
    CMatrix matrix_;
};

struct PostselectResult {
    /// Renormalized conditional state on the basis without the measured
    /// factor; empty when the outcome is impossible.
    std::optional<StateVector> state;
    double probability = 0.0;
};

inline constexpr double kImpossibleOutcome = 1e-15;

/// Kronecker product on the concatenated basis.
StateVector tensor(const StateVector& a, const StateVector& b);
Operator kron(const Operator& a, const Operator& b);

StateVector apply(const Operator& op, const StateVector& state);
/// Applies `op` to the factors of `state` named by op's basis, identity
/// on the rest.
StateVector apply_local(const Operator& op, const StateVector& state);
DensityMatrix conjugate(const Operator& op, const DensityMatrix& rho);

PostselectResult postselect(const StateVector& state, std::string_view factor,
                            std::string_view symbol);
/// Unnormalized component of `state` with `factor` = `symbol`, factor removed.
StateVector project(const StateVector& state, std::string_view factor, std::string_view symbol);

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep);

/// <target|rho|target>
double fidelity(const DensityMatrix& rho, const StateVector& target);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho);
double concurrence(const StateVector& two_qubit_state);

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
struct HermitianEigen {
    Eigen::VectorXd values;  // ascending
    CMatrix vectors;         // columns
};
HermitianEigen hermitian_eigen(const CMatrix& m, double off_diagonal_tol = 1e-12);

/// Principal square root of a positive semidefinite Hermitian matrix.
CMatrix psd_sqrt(const CMatrix& m);

}  // namespace cmip

#endif  // CMIP_QCORE_HPP
