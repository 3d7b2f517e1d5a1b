#pragma once

// Translation-invariant quasifree states of the majorana chain described by a
// piecewise-constant 2x2 symbol Q(p) on [-pi, pi), and their evolution under
// the glider shift m_{2x} -> m_{2x-2}, m_{2x+1} -> m_{2x+3}.
//
// The glider shift multiplies q12 by e^{2itp} and q21 by e^{-2itp}; this
// twist is kept as an integer and applied analytically.

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace cqca {

struct SymbolPiece {
  double lo, hi;  // half-open [lo, hi)
  Eigen::Matrix2cd q;
};

struct SymbolQ {
  std::vector<SymbolPiece> pieces;
  int twist = 0;

  /// Q(p) including the twist; p = pi is read from the last piece.
  Eigen::Matrix2cd at(double p) const;
  /// Hermiticity, Q(-p) = 2 - Q(p)^T and 0 <= Q(p) <= 2, checked at every
  /// piece midpoint and on a uniform grid away from breakpoints.
  std::vector<std::string> validate() const;
};

/// The family interpolating between all spins up (A = 0) and a glider
/// invariant state (A = 1). Throws DomainError for A outside [0, 1].
SymbolQ symbol_omega_A(double A);

SymbolQ evolve_symbol(const SymbolQ& q, int steps);

/// M[2x+i][2y+j] = omega(m_{2x+i} m_{2y+j}) for x, y = 0..L-1.
Eigen::MatrixXcd two_point_matrix(const SymbolQ& q, int L);

/// -sum (l/2) log2(l/2) over the given eigenvalues of a two-point matrix.
/// A spectrum symmetric about 1 is summed pairwise as binary entropies.
/// Throws DomainError("symbol violates positivity") for eigenvalues outside
/// [-1e-9, 2 + 1e-9].
double entropy_from_eigenvalues(const Eigen::VectorXd& eigenvalues);
/// Entanglement entropy in qubits. Throws DomainError if M is not Hermitian.
double entropy(const Eigen::MatrixXcd& m);

/// S(t) of omega_A restricted to L sites, t = 0..steps.
std::vector<double> entropy_timeseries(double A, int L, int steps);

/// True iff every piece has vanishing off-diagonal entries.
bool check_invariance(const SymbolQ& q);
/// max |omega(m_{2x} m_{2y+1})| over the window for t = 0..steps.
std::vector<double> check_convergence(const SymbolQ& q, int L, int steps);

/// Wick expansion omega(m_a m_b m_c m_d) = M_ab M_cd - M_ac M_bd + M_ad M_bc
/// for distinct indices.
std::complex<double> four_point(const Eigen::MatrixXcd& m, int a, int b, int c, int d);

}  // namespace cqca
