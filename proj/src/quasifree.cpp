#include "cqca/quasifree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cqca/error.hpp"

namespace cqca {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kClampTol = 1e-9;
constexpr double kZeroTol = 1e-12;

// (1 / 2pi) * integral over [a, b) of e^{-ipk} dp.
cd fourier(double a, double b, long k) {
  if (k == 0) return (b - a) / (2 * kPi);
  const double kk = double(k);
  return (std::exp(cd(0, -a * kk)) - std::exp(cd(0, -b * kk))) / cd(0, 2 * kPi * kk);
}

bool is_breakpoint(const SymbolQ& q, double p) {
  for (const auto& piece : q.pieces)
    if (std::abs(p - piece.lo) < 1e-9 || std::abs(p - piece.hi) < 1e-9 || std::abs(p + piece.lo) < 1e-9 ||
        std::abs(p + piece.hi) < 1e-9)
      return true;
  return false;
}

}  // namespace

Eigen::Matrix2cd SymbolQ::at(double p) const {
  if (pieces.empty()) throw DomainError("empty symbol");
  const SymbolPiece* hit = &pieces.back();
  for (const auto& piece : pieces)
    if (p >= piece.lo && p < piece.hi) {
      hit = &piece;
      break;
    }
  Eigen::Matrix2cd m = hit->q;
  m(0, 1) *= std::exp(cd(0, 2.0 * twist * p));
  m(1, 0) *= std::exp(cd(0, -2.0 * twist * p));
  return m;
}

std::vector<std::string> SymbolQ::validate() const {
  std::vector<std::string> out;
  std::vector<double> samples;
  for (const auto& piece : pieces) samples.push_back(0.5 * (piece.lo + piece.hi));
  constexpr int kGrid = 256;
  for (int k = 0; k < kGrid; ++k) {
    const double p = -kPi + (k + 0.5) * 2 * kPi / kGrid;
    if (!is_breakpoint(*this, p)) samples.push_back(p);
  }
  bool herm = true, sym = true, pos = true;
  for (double p : samples) {
    const Eigen::Matrix2cd m = at(p);
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kClampTol) herm = false;
    const Eigen::Matrix2cd reflected = 2 * Eigen::Matrix2cd::Identity() - m.transpose();
    if ((at(-p) - reflected).cwiseAbs().maxCoeff() > kClampTol) sym = false;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kClampTol || es.eigenvalues().maxCoeff() > 2 + kClampTol) pos = false;
  }
  if (!herm) out.emplace_back("symbol is not Hermitian");
  if (!sym) out.emplace_back("symbol violates Q(-p) = 2 - Q(p)^T");
  if (!pos) out.emplace_back("symbol eigenvalues leave [0, 2]");
  return out;
}

SymbolQ symbol_omega_A(double A) {
  if (!(A >= 0 && A <= 1)) throw DomainError("A must lie in [0, 1]");
  const cd i(0, 1);
  Eigen::Matrix2cd outer, lower, upper;
  outer << 1, i, -i, 1;
  lower << 0, 0, 0, 0;
  upper << 2, 0, 0, 2;
  const double b = kPi * A;
  const SymbolPiece raw[] = {{-kPi, -b, outer}, {-b, 0, lower}, {0, b, upper}, {b, kPi, outer}};
  SymbolQ q;
  for (const auto& piece : raw) {
    if (piece.hi <= piece.lo) continue;
    if (!q.pieces.empty() && q.pieces.back().q == piece.q && q.pieces.back().hi == piece.lo)
      q.pieces.back().hi = piece.hi;
    else
      q.pieces.push_back(piece);
  }
  return q;
}

SymbolQ evolve_symbol(const SymbolQ& q, int steps) {
  if (steps < 0) throw DomainError("negative horizon");
  SymbolQ r = q;
  r.twist += steps;
  return r;
}

Eigen::MatrixXcd two_point_matrix(const SymbolQ& q, int L) {
  if (L < 1) throw DomainError("window must contain at least one site");
  // Toeplitz: every block depends on d = x - y only.
  const long t2 = 2L * q.twist;
  std::vector<Eigen::Matrix2cd> blocks(std::size_t(2 * L - 1), Eigen::Matrix2cd::Zero());
  for (int d = -(L - 1); d <= L - 1; ++d) {
    Eigen::Matrix2cd& b = blocks[std::size_t(d + L - 1)];
    for (const auto& piece : q.pieces) {
      b(0, 0) += piece.q(0, 0) * fourier(piece.lo, piece.hi, d);
      b(1, 1) += piece.q(1, 1) * fourier(piece.lo, piece.hi, d);
      if (piece.q(0, 1) != cd(0)) b(0, 1) += piece.q(0, 1) * fourier(piece.lo, piece.hi, d - t2);
      if (piece.q(1, 0) != cd(0)) b(1, 0) += piece.q(1, 0) * fourier(piece.lo, piece.hi, d + t2);
    }
  }
  Eigen::MatrixXcd m(2 * L, 2 * L);
  for (int x = 0; x < L; ++x)
    for (int y = 0; y < L; ++y) m.block<2, 2>(2 * x, 2 * y) = blocks[std::size_t(x - y + L - 1)];
  return m;
}

double entropy_from_eigenvalues(const Eigen::VectorXd& eigenvalues) {
  std::vector<double> l(eigenvalues.begin(), eigenvalues.end());
  for (double& v : l) {
    if (v < -kClampTol || v > 2 + kClampTol) throw DomainError("symbol violates positivity");
    v = std::clamp(v, 0.0, 2.0);
  }
  std::sort(l.begin(), l.end());
  const std::size_t n = l.size();
  bool paired = n % 2 == 0;
  for (std::size_t k = 0; paired && k < n / 2; ++k) paired = std::abs(l[k] + l[n - 1 - k] - 2) <= kClampTol;

  double s = 0;
  if (paired) {
    // Pairs 1 - nu, 1 + nu contribute the binary entropy h(nu), written with
    // log1p so that nu near 0 gives exactly one qubit.
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double nu = std::clamp(0.5 * (l[n - 1 - k] - l[k]), 0.0, 1.0);
      if (1 - nu <= kZeroTol) continue;
      const double bracket = (1 + nu) * std::log1p(nu) + (1 - nu) * std::log1p(-nu);
      s += std::clamp(1 - bracket / (2 * std::numbers::ln2), 0.0, 1.0);
    }
    return s;
  }
  for (double v : l) {
    if (v <= kZeroTol || v >= 2 - kZeroTol) continue;
    s -= 0.5 * v * std::log2(0.5 * v);
  }
  return s;
}

double entropy(const Eigen::MatrixXcd& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kClampTol) throw DomainError("two-point matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return entropy_from_eigenvalues(es.eigenvalues());
}

std::vector<double> entropy_timeseries(double A, int L, int steps) {
  if (steps < 0) throw DomainError("negative horizon");
  const SymbolQ q = symbol_omega_A(A);
  std::vector<double> out;
  out.reserve(std::size_t(steps) + 1);
  for (int t = 0; t <= steps; ++t) out.push_back(entropy(two_point_matrix(evolve_symbol(q, t), L)));
  return out;
}

bool check_invariance(const SymbolQ& q) {
  for (const auto& piece : q.pieces)
    if (std::abs(piece.q(0, 1)) > kZeroTol || std::abs(piece.q(1, 0)) > kZeroTol) return false;
  return true;
}

std::vector<double> check_convergence(const SymbolQ& q, int L, int steps) {
  if (steps < 0) throw DomainError("negative horizon");
  std::vector<double> out;
  for (int t = 0; t <= steps; ++t) {
    const Eigen::MatrixXcd m = two_point_matrix(evolve_symbol(q, t), L);
    double worst = 0;
    for (int x = 0; x < L; ++x)
      for (int y = 0; y < L; ++y) worst = std::max(worst, std::abs(m(2 * x, 2 * y + 1)));
    out.push_back(worst);
  }
  return out;
}

std::complex<double> four_point(const Eigen::MatrixXcd& m, int a, int b, int c, int d) {
  return m(a, b) * m(c, d) - m(a, c) * m(b, d) + m(a, d) * m(b, c);
}

}  // namespace cqca
