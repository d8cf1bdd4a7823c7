#include "alphax/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "alphax/errors.hpp"

namespace alphax {
namespace {

void check_alpha_closed(double alpha, const char* what) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError(std::string(what) + ": alpha must lie in [0, 1]");
}

void check_alpha_open(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError(std::string(what) + ": alpha must lie in (0, 1)");
}

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double eigen_residual(const DenseSymMatrix& m, std::span<const double> x, double rho) {
  std::vector<double> y(x.size());
  m.multiply(x, y);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= rho * x[i];
  return norm2(y);
}

}  // namespace

DenseSymMatrix::DenseSymMatrix(int order)
    : n_(order), a_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {
  if (order < 0) throw DomainError("DenseSymMatrix: negative order");
}

void DenseSymMatrix::set(int i, int j, double v) {
  a_[static_cast<std::size_t>(i) * n_ + j] = v;
  a_[static_cast<std::size_t>(j) * n_ + i] = v;
}

void DenseSymMatrix::add_diagonal(double shift) {
  for (int i = 0; i < n_; ++i) a_[static_cast<std::size_t>(i) * n_ + i] += shift;
}

void DenseSymMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (int i = 0; i < n_; ++i) {
    const double* row = &a_[static_cast<std::size_t>(i) * n_];
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

std::vector<double> SpectralResult::max_entry_normalized() const {
  std::vector<double> out = vector;
  double top = 0.0;
  for (double v : out) top = std::max(top, std::abs(v));
  if (top > 0.0)
    for (double& v : out) v /= top;
  return out;
}

EigenDecomposition jacobi_eigen(const DenseSymMatrix& m) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };
  double frob = 0.0;
  for (int i = 0; i < n; ++i) {
    V(i, i) = 1.0;
    for (int j = 0; j < n; ++j) {
      A(i, j) = m(i, j);
      frob += m(i, j) * m(i, j);
    }
  }
  const double threshold = 1e-13 * std::max(1.0, std::sqrt(frob));
  constexpr int kMaxSweeps = 100;

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * A(i, j) * A(i, j);
    return std::sqrt(s);
  };

  int sweeps = 0;
  double off = off_norm();
  while (off > threshold) {
    if (sweeps == kMaxSweeps) throw NumericError("jacobi_eigen: no convergence", off);
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_norm();
  }

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return A(x, x) < A(y, y); });
  EigenDecomposition out;
  out.sweeps = sweeps;
  for (int k : idx) {
    out.values.push_back(A(k, k));
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[i] = V(i, k);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

PowerResult power_iteration(const DenseSymMatrix& m, double shift, double tol, int max_iterations) {
  const int n = m.order();
  if (n == 0) throw DomainError("power_iteration: empty matrix");
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(static_cast<std::size_t>(n));
  double previous = -1.0;
  int steady = 0;
  double residual = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    m.multiply(x, y);
    for (int i = 0; i < n; ++i) y[i] += shift * x[i];
    double mu = 0.0;
    for (int i = 0; i < n; ++i) mu += x[i] * y[i];
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) r2 += (y[i] - mu * x[i]) * (y[i] - mu * x[i]);
    residual = std::sqrt(r2);
    steady = std::abs(mu - previous) <= 1e-15 * std::max(1.0, std::abs(mu)) ? steady + 1 : 0;
    previous = mu;
    if (residual <= tol || (steady >= 20 && residual <= std::sqrt(tol))) {
      return PowerResult{mu - shift, x, residual, it};
    }
    const double len = norm2(y);
    if (len == 0.0) return PowerResult{mu - shift, x, residual, it};
    for (int i = 0; i < n; ++i) x[i] = y[i] / len;
  }
  throw NumericError("power_iteration: no convergence after " + std::to_string(max_iterations) + " iterations",
                     residual);
}

double largest_eigenvalue(const DenseSymMatrix& m) {
  if (m.order() == 0) throw DomainError("largest_eigenvalue: empty matrix");
  return jacobi_eigen(m).values.back();
}

DenseSymMatrix adjacency_matrix(const Graph& g) { return alpha_matrix(g, 0.0); }

DenseSymMatrix degree_matrix(const Graph& g) { return alpha_matrix(g, 1.0); }

DenseSymMatrix signless_laplacian_matrix(const Graph& g) {
  DenseSymMatrix q(g.order());
  for (int v = 0; v < g.order(); ++v) q.set(v, v, g.degree(v));
  for (auto [u, v] : g.edges()) q.set(u, v, 1.0);
  return q;
}

DenseSymMatrix alpha_matrix(const Graph& g, double alpha) {
  check_alpha_closed(alpha, "alpha_matrix");
  DenseSymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, alpha * g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0 - alpha);
  return m;
}

SpectralResult alpha_index(const Graph& g, double alpha, double tol) {
  check_alpha_closed(alpha, "alpha_index");
  if (g.order() < 1) throw DomainError("alpha_index: graph has no vertices");
  if (!(tol > 0.0)) throw DomainError("alpha_index: tolerance must be positive");
  const DenseSymMatrix m = alpha_matrix(g, alpha);
  const EigenDecomposition eig = jacobi_eigen(m);

  SpectralResult out;
  out.rho = eig.values.back();
  out.vector = eig.vectors.back();
  out.method_iterations = eig.sweeps;
  if (std::accumulate(out.vector.begin(), out.vector.end(), 0.0) < 0.0)
    for (double& v : out.vector) v = -v;
  const double len = norm2(out.vector);
  for (double& v : out.vector) v /= len;
  out.residual = eigen_residual(m, out.vector, out.rho);
  if (out.residual > tol) throw NumericError("alpha_index: Jacobi residual above tolerance", out.residual);

  // A_alpha + n I is positive definite (|lambda| <= n - 1), so the top
  // eigenvalue strictly dominates under the shift.
  const PowerResult check = power_iteration(m, static_cast<double>(g.order()), tol);
  if (std::abs(check.rho - out.rho) > 10.0 * tol) {
    throw NumericError("alpha_index: Jacobi " + std::to_string(out.rho) + " and power iteration " +
                           std::to_string(check.rho) + " disagree",
                       check.residual);
  }
  return out;
}

double signless_laplacian_index(const Graph& g, double tol) { return 2.0 * alpha_index(g, 0.5, tol).rho; }

double join_quotient_index(int n, int s, double alpha) {
  if (s < 1 || n <= s) throw DomainError("join_quotient_index: need n > s >= 1");
  check_alpha_closed(alpha, "join_quotient_index");
  const double nn = n;
  const double ss = s;
  const double b = -(alpha * nn + ss - 1.0);
  const double c = (2.0 * alpha * nn - alpha * ss - alpha - nn + ss) * ss;
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) throw NumericError("join_quotient_index: negative discriminant", disc);
  const double q = -0.5 * (b + (b >= 0.0 ? 1.0 : -1.0) * std::sqrt(disc));
  if (q == 0.0) return 0.0;
  return std::max(q, c / q);
}

bool f_inequality(double rho, int n, int s, double alpha) {
  check_alpha_open(alpha, "f_inequality");
  return rho * (rho + 1.0 - alpha * n) >= (1.0 - alpha) * (n - s) * s;
}

JoinLowerBounds nikiforov_lower_bound(int n, int k, double alpha) {
  check_alpha_open(alpha, "nikiforov_lower_bound");
  if (k < 1 || n < k) throw DomainError("nikiforov_lower_bound: need n >= k >= 1");
  const double kk = k;
  JoinLowerBounds out;
  out.basic = alpha * (n - 1) + (1.0 - alpha) * (kk - 1.0);
  out.threshold = (2 * kk - 1) * (2 * kk - 1) / (2 * alpha * alpha) - (8 * kk * kk - 2 * kk - 1) / (2 * alpha) +
                  2 * kk * (kk + 1);
  if (n >= out.threshold) out.strong = alpha * n + (2 * kk - 1 - (2 * kk + 1) * alpha) / (2 * alpha);
  return out;
}

std::vector<std::vector<double>> QuotientMatrix::alpha_weighted(double alpha) const {
  check_alpha_closed(alpha, "QuotientMatrix::alpha_weighted");
  const std::size_t k = cells.size();
  std::vector<std::vector<double>> w(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    const int degree = std::accumulate(cross_degree[i].begin(), cross_degree[i].end(), 0);
    for (std::size_t j = 0; j < k; ++j) w[i][j] = (1.0 - alpha) * cross_degree[i][j];
    w[i][i] += alpha * degree;
  }
  return w;
}

double QuotientMatrix::largest_eigenvalue(double alpha) const {
  const auto w = alpha_weighted(alpha);
  const int k = static_cast<int>(cells.size());
  DenseSymMatrix s(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      s.set(i, j, w[i][j] * std::sqrt(static_cast<double>(cells[i].size()) / cells[j].size()));
    }
  }
  return alphax::largest_eigenvalue(s);
}

QuotientMatrix quotient_matrix(const Graph& g, std::span<const VertexSet> cells) {
  VertexSet covered;
  for (VertexSet c : cells) {
    if (c.empty()) throw DomainError("quotient_matrix: empty cell");
    if (!(c & covered).empty()) throw DomainError("quotient_matrix: cells overlap");
    covered = covered | c;
  }
  if (covered != VertexSet::range(g.order())) throw DomainError("quotient_matrix: cells do not cover V(G)");

  QuotientMatrix out;
  out.cells.assign(cells.begin(), cells.end());
  out.cross_degree.assign(cells.size(), std::vector<int>(cells.size(), 0));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int lead = cells[i].first();
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const int expected = (g.neighbors(lead) & cells[j]).size();
      for (int v : cells[i].members()) {
        if ((g.neighbors(v) & cells[j]).size() != expected) {
          throw StructuralError("quotient_matrix: vertices " + std::to_string(lead) + " and " +
                                    std::to_string(v) + " have different neighbour counts into cell " +
                                    std::to_string(j),
                                lead, v);
        }
      }
      out.cross_degree[i][j] = expected;
    }
  }
  return out;
}

}  // namespace alphax
