#include "qhe/microscopic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {

using cd = std::complex<double>;

void FockTruncation::validate() const {
  if (n_max < 0) throw InvalidParameter("n_max must be nonnegative");
  if (!(Omega > 0.0) || !(beta > 0.0)) {
    throw InvalidParameter("mode quantum and inverse temperature must be positive");
  }
  if (!(tail_bound > 0.0)) throw InvalidParameter("tail bound must be positive");
}

double FockTruncation::tail_weight() const { return std::exp(-beta * Omega * (n_max + 1)); }

std::vector<double> boson_thermal_state(const FockTruncation& tr) {
  tr.validate();
  if (tr.tail_weight() > tr.tail_bound) {
    throw TruncationTooSmall("thermal tail weight " + std::to_string(tr.tail_weight()) +
                             " above bound " + std::to_string(tr.tail_bound) + " at n_max=" +
                             std::to_string(tr.n_max));
  }
  std::vector<double> w(static_cast<std::size_t>(tr.n_max + 1));
  double z = 0.0;
  for (int n = 0; n <= tr.n_max; ++n) {
    w[n] = std::exp(-tr.beta * tr.Omega * n);
    z += w[n];
  }
  for (double& x : w) x /= z;
  return w;
}

JointState::JointState(CMatrix rho, const FockTruncation& tr) : rho_(std::move(rho)), tr_(tr) {
  if (rho_.rows() != tr.dim() || rho_.cols() != tr.dim()) {
    throw InvalidParameter("joint state dimension does not match the truncation");
  }
}

JointState JointState::product(const PopulationVector& qubit, const std::vector<double>& mode,
                               const FockTruncation& tr) {
  if (static_cast<int>(mode.size()) != tr.n_max + 1) {
    throw InvalidParameter("mode state size does not match n_max");
  }
  CMatrix rho = CMatrix::Zero(tr.dim(), tr.dim());
  const double p[2] = {qubit.p_g(), qubit.p_e()};
  for (int s = 0; s < 2; ++s) {
    for (int n = 0; n <= tr.n_max; ++n) rho(tr.index(s, n), tr.index(s, n)) = p[s] * mode[n];
  }
  return {std::move(rho), tr};
}

JointState JointState::evolved(const CMatrix& U) const {
  return {U * rho_ * U.adjoint(), tr_};
}

Eigen::Matrix2cd JointState::reduced_qubit() const {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      for (int n = 0; n <= tr_.n_max; ++n) r(s, t) += rho_(tr_.index(s, n), tr_.index(t, n));
    }
  }
  return r;
}

void JointState::check_invariants() const {
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) throw ConsistencyError("joint state is not Hermitian");
  const double tr = rho_.trace().real();
  if (std::fabs(tr - 1.0) > 1e-10) throw ConsistencyError("joint state trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw ConsistencyError("joint state is not positive semidefinite");
  }
}

CMatrix swap_unitary(const FockTruncation& tr) {
  tr.validate();
  CMatrix U = CMatrix::Zero(tr.dim(), tr.dim());
  U(tr.index(0, 0), tr.index(0, 0)) = 1.0;
  U(tr.index(1, tr.n_max), tr.index(1, tr.n_max)) = 1.0;
  for (int n = 1; n <= tr.n_max; ++n) {
    U(tr.index(0, n), tr.index(1, n - 1)) = 1.0;
    U(tr.index(1, n - 1), tr.index(0, n)) = 1.0;
  }
  return U;
}

namespace {

// Inputs are diagonal product states, so only |U_ik|^2 enters the output
// populations: p_out(i) = sum_k |U_ik|^2 rho_kk.
InducedMap population_map_unchecked(const CMatrix& U, const FockTruncation& tr) {
  const std::vector<double> mode = boson_thermal_state(tr);
  const Eigen::MatrixXd P = U.cwiseAbs2();
  InducedMap out{{}, 0.0};
  for (int s = 0; s < 2; ++s) {
    double q[2] = {0.0, 0.0};
    for (int n = 0; n <= tr.n_max; ++n) {
      const int k = tr.index(s, n);
      for (int r = 0; r < 2; ++r) {
        for (int m = 0; m <= tr.n_max; ++m) q[r] += P(tr.index(r, m), k) * mode[n];
      }
    }
    out.m(0, s) = q[0];
    out.m(1, s) = q[1];
    out.column_sum_error = std::max(out.column_sum_error, std::fabs(q[0] + q[1] - 1.0));
  }
  return out;
}

}  // namespace

InducedMap induced_population_map(const CMatrix& U, const FockTruncation& tr) {
  tr.validate();
  if (U.rows() != tr.dim() || U.cols() != tr.dim()) {
    throw InvalidParameter("unitary dimension does not match the truncation");
  }
  const CMatrix I = CMatrix::Identity(tr.dim(), tr.dim());
  if ((U.adjoint() * U - I).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidParameter("joint evolution is not unitary");
  }
  return population_map_unchecked(U, tr);
}

namespace {

double sector_coupling(int k, CouplingKind kind) {
  return kind == CouplingKind::intensity_dependent ? 1.0 : std::sqrt(static_cast<double>(k));
}

}  // namespace

CMatrix jc_hamiltonian(double J, const FockTruncation& tr, CouplingKind kind) {
  tr.validate();
  CMatrix H = CMatrix::Zero(tr.dim(), tr.dim());
  // <e,k-1| H |g,k> = J c_k for k = 1..n_max.
  for (int k = 1; k <= tr.n_max; ++k) {
    const double c = J * sector_coupling(k, kind);
    H(tr.index(1, k - 1), tr.index(0, k)) = c;
    H(tr.index(0, k), tr.index(1, k - 1)) = c;
  }
  return H;
}

CMatrix jc_unitary(double J, double t, const FockTruncation& tr, CouplingKind kind) {
  tr.validate();
  if (!(t >= 0.0)) throw InvalidParameter("interaction time must be nonnegative");
  CMatrix U = CMatrix::Zero(tr.dim(), tr.dim());
  U(tr.index(0, 0), tr.index(0, 0)) = 1.0;
  U(tr.index(1, tr.n_max), tr.index(1, tr.n_max)) = 1.0;
  for (int k = 1; k <= tr.n_max; ++k) {
    const double theta = J * sector_coupling(k, kind) * t;
    const int g = tr.index(0, k);
    const int e = tr.index(1, k - 1);
    U(g, g) = std::cos(theta);
    U(e, e) = std::cos(theta);
    U(g, e) = cd(0.0, -std::sin(theta));
    U(e, g) = cd(0.0, -std::sin(theta));
  }
  return U;
}

CMatrix jc_unitary_dense(double J, double t, const FockTruncation& tr, CouplingKind kind) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(jc_hamiltonian(J, tr, kind));
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<cd>() * cd(0.0, -t)).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

InducedMap jc_evolution_map(double J, double t, const FockTruncation& tr, CouplingKind kind) {
  // Unitary by construction (a rotation per sector); skip the dense check.
  return population_map_unchecked(jc_unitary(J, t, tr, kind), tr);
}

double eto_deviation(const InducedMap& map, const FockTruncation& tr) {
  return map.m.max_abs_diff(eto(tr.Omega, tr.beta).matrix());
}

CMatrix bare_hamiltonian(const FockTruncation& tr) {
  tr.validate();
  CMatrix H = CMatrix::Zero(tr.dim(), tr.dim());
  for (int s = 0; s < 2; ++s) {
    for (int n = 0; n <= tr.n_max; ++n) H(tr.index(s, n), tr.index(s, n)) = tr.Omega * (s + n);
  }
  return H;
}

std::vector<ApproximationRow> eto_approximation_report(double J, const FockTruncation& tr,
                                                       std::vector<double> t_grid) {
  if (t_grid.empty()) throw InvalidParameter("time grid is empty");
  if (!(J > 0.0)) throw InvalidParameter("coupling J must be positive");
  std::sort(t_grid.begin(), t_grid.end());
  std::vector<ApproximationRow> rows;
  rows.reserve(2 * t_grid.size());
  for (CouplingKind kind : {CouplingKind::intensity_dependent, CouplingKind::standard}) {
    for (double t : t_grid) {
      rows.push_back({kind, J * t, eto_deviation(jc_evolution_map(J, t, tr, kind), tr)});
    }
  }
  return rows;
}

}  // namespace qhe
