#pragma once

#include <optional>
#include <span>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kTieTol = 1e-9;

/// Dense real symmetric matrix; setters write both triangles.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(int order);

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v);
  void add_diagonal(double shift);
  /// y = M x
  void multiply(std::span<const double> x, std::span<double> y) const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> vector;  // unit Euclidean norm, sum of entries >= 0
  double residual = 0.0;       // ||M x - rho x||_2
  int method_iterations = 0;   // Jacobi sweeps

  /// The eigenvector rescaled so that its largest entry is 1.
  std::vector<double> max_entry_normalized() const;
};

struct EigenDecomposition {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi; stops when the off-diagonal Frobenius norm drops to 1e-13
/// (scaled by the matrix norm when that exceeds 1).
EigenDecomposition jacobi_eigen(const DenseSymMatrix& m);

struct PowerResult {
  double rho = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  int iterations = 0;
};

/// Power iteration on M + shift*I from the all-ones vector, Rayleigh quotient
/// estimate. Throws NumericError if neither the residual nor the quotient
/// settles before the cap.
PowerResult power_iteration(const DenseSymMatrix& m, double shift, double tol, int max_iterations = 400000);

/// Largest eigenvalue of an arbitrary symmetric matrix via Jacobi.
double largest_eigenvalue(const DenseSymMatrix& m);

DenseSymMatrix adjacency_matrix(const Graph& g);
DenseSymMatrix degree_matrix(const Graph& g);
DenseSymMatrix signless_laplacian_matrix(const Graph& g);
/// alpha*D + (1-alpha)*A, alpha in [0, 1].
DenseSymMatrix alpha_matrix(const Graph& g, double alpha);

/// Largest eigenvalue of A_alpha(G) with its eigenvector. Jacobi is the
/// primary method; shifted power iteration must agree within 10*tol.
SpectralResult alpha_index(const Graph& g, double alpha, double tol = kDefaultTol);

/// q(G) = 2 * rho_{1/2}(G).
double signless_laplacian_index(const Graph& g, double tol = kDefaultTol);

/// Larger root of x^2 - (an+s-1)x + (2an - as - a - n + s)s, the alpha-index
/// of K_s v co-K_{n-s}.
double join_quotient_index(int n, int s, double alpha);

/// rho(rho + 1 - alpha n) >= (1 - alpha)(n - s)s, for 0 < alpha < 1.
bool f_inequality(double rho, int n, int s, double alpha);

struct JoinLowerBounds {
  double basic = 0.0;             // alpha(n-1) + (1-alpha)(k-1)
  std::optional<double> strong;   // alpha n + (2k-1-(2k+1)alpha)/(2 alpha), when n >= threshold
  double threshold = 0.0;
};

/// Lower bounds on the alpha-index of K_k v co-K_{n-k}.
JoinLowerBounds nikiforov_lower_bound(int n, int k, double alpha);

struct QuotientMatrix {
  std::vector<VertexSet> cells;
  std::vector<std::vector<int>> cross_degree;  // [i][j]: neighbours in cell j of any vertex of cell i

  /// alpha * diag(row sums) + (1 - alpha) * cross_degree.
  std::vector<std::vector<double>> alpha_weighted(double alpha) const;
  /// Largest eigenvalue of alpha_weighted(alpha), computed through the
  /// similar symmetric matrix diag(sqrt|C_i|) B diag(1/sqrt|C_j|).
  double largest_eigenvalue(double alpha) const;
};

/// Throws StructuralError naming two vertices of one cell with different
/// neighbour counts into some cell, or DomainError if cells do not
/// partition V(G).
QuotientMatrix quotient_matrix(const Graph& g, std::span<const VertexSet> cells);

}  // namespace alphax
