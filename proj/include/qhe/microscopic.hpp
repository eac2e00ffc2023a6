#pragma once

// Qubit coupled to a single resonant bosonic mode in a truncated Fock space.
// Checks that energy-preserving joint unitaries reproduce the extremal
// thermal operation on the qubit populations.
//
// Basis ordering of the joint space: index(s, n) = s * (n_max + 1) + n with
// s = 0 (g) or 1 (e) and n = 0..n_max. The state |e, n_max> has no partner
// inside the truncation and is left untouched by every coupling.

#include <Eigen/Dense>
#include <vector>

#include "qhe/core_maps.hpp"

namespace qhe {

using CMatrix = Eigen::MatrixXcd;

struct FockTruncation {
  int n_max;
  /// Mode quantum, resonant with the qubit gap.
  double Omega;
  double beta;
  /// Largest accepted normalized thermal weight above n_max.
  double tail_bound = 1e-3;

  void validate() const;
  int dim() const { return 2 * (n_max + 1); }
  int index(int s, int n) const { return s * (n_max + 1) + n; }
  /// Thermal weight beyond n_max relative to the untruncated partition sum,
  /// e^{-beta Omega (n_max + 1)}.
  double tail_weight() const;
};

/// Diagonal of the truncated thermal mode state, renormalized over 0..n_max.
/// Throws TruncationTooSmall if the tail weight exceeds tail_bound.
std::vector<double> boson_thermal_state(const FockTruncation& tr);

/// Density matrix on qubit (x) mode.
class JointState {
 public:
  JointState(CMatrix rho, const FockTruncation& tr);

  /// Diagonal qubit state (p_g, p_e) tensored with a diagonal mode state.
  static JointState product(const PopulationVector& qubit, const std::vector<double>& mode,
                            const FockTruncation& tr);

  const CMatrix& rho() const { return rho_; }
  JointState evolved(const CMatrix& U) const;
  /// Partial trace over the mode.
  Eigen::Matrix2cd reduced_qubit() const;
  /// Throws ConsistencyError unless Hermitian, PSD (min eigenvalue >= -1e-10)
  /// and of unit trace within 1e-10.
  void check_invariants() const;

 private:
  CMatrix rho_;
  FockTruncation tr_;
};

/// Exchanges one excitation: |g,0> fixed, |g,n> <-> |e,n-1> for n >= 1.
CMatrix swap_unitary(const FockTruncation& tr);

struct InducedMap {
  Mat2 m;
  /// Largest deviation of a column sum from 1.
  double column_sum_error;
};

/// Population map Tr_B[U (rho_S (x) rho_B^th) U^dagger] built column by column
/// from the inputs |g><g| and |e><e|.
InducedMap induced_population_map(const CMatrix& U, const FockTruncation& tr);

enum class CouplingKind { intensity_dependent, standard };

/// J (sigma_+ E_- + sigma_- E_+) in the interaction picture, with E_- the
/// number-normalized lowering operator (intensity_dependent) or a itself
/// (standard).
CMatrix jc_hamiltonian(double J, const FockTruncation& tr, CouplingKind kind);

/// exp(-i H t) assembled from the 2x2 block of each excitation sector.
CMatrix jc_unitary(double J, double t, const FockTruncation& tr, CouplingKind kind);

/// exp(-i H t) from a dense eigendecomposition of H; cross-check for jc_unitary.
CMatrix jc_unitary_dense(double J, double t, const FockTruncation& tr, CouplingKind kind);

InducedMap jc_evolution_map(double J, double t, const FockTruncation& tr, CouplingKind kind);

/// max |M - eto(Omega, beta)| entrywise.
double eto_deviation(const InducedMap& map, const FockTruncation& tr);

/// H_S + H_B at resonance: diag(Omega (s + n)).
CMatrix bare_hamiltonian(const FockTruncation& tr);

struct ApproximationRow {
  CouplingKind kind;
  double Jt;
  double deviation;
};

/// Deviation from the ETO over a grid of interaction times, both couplings,
/// each sorted by Jt.
std::vector<ApproximationRow> eto_approximation_report(double J, const FockTruncation& tr,
                                                       std::vector<double> t_grid);

}  // namespace qhe
