#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>

#include "ortho2c/deltoid.hpp"
#include "ortho2c/gauss.hpp"
#include "ortho2c/poly.hpp"

namespace ortho2c {

enum class WeightKind { hermite, disk, deltoid_first, deltoid_second, custom };

/// Moment table for user-supplied weights: m_{k,j} for k >= j, k + j <= max_degree.
/// The missing half follows from m_{k,j} = conj(m_{j,k}).
struct MomentTable {
  int max_degree = 0;
  std::map<std::pair<int, int>, Complex> entries;
};

/// All weights are normalized to unit mass; moments are taken against the
/// normalized density.  The deltoid weights are (3(v-v-)(v+-v))^{+-1/2} in the
/// slice factorization of deltoid.hpp, with the mass computed by quadrature.
class WeightSpec {
 public:
  static WeightSpec hermite() { return WeightSpec(WeightKind::hermite); }
  static WeightSpec disk(double lambda) {
    if (lambda <= -1.0) throw Error("disk weight: lambda must exceed -1");
    WeightSpec w(WeightKind::disk);
    w.lambda_ = lambda;
    return w;
  }
  static WeightSpec deltoid_t() { return WeightSpec(WeightKind::deltoid_first); }
  static WeightSpec deltoid_u() { return WeightSpec(WeightKind::deltoid_second); }
  static WeightSpec custom(MomentTable table) {
    for (const auto& [kj, v] : table.entries) {
      if (kj.first < kj.second) throw Error("custom moments: store only k >= j entries");
      if (kj.first == kj.second && std::abs(v.imag()) > 1e-14 * (1.0 + std::abs(v)))
        throw Error("custom moments: diagonal moments must be real");
    }
    WeightSpec w(WeightKind::custom);
    w.table_ = std::make_shared<const MomentTable>(std::move(table));
    return w;
  }

  WeightKind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  const MomentTable& table() const {
    if (!table_) throw Error("weight has no moment table");
    return *table_;
  }
  bool is_deltoid() const {
    return kind_ == WeightKind::deltoid_first || kind_ == WeightKind::deltoid_second;
  }
  /// Exponent of the deltoid density factor.
  double alpha() const {
    if (!is_deltoid()) throw Error("alpha() only meaningful for deltoid weights");
    return kind_ == WeightKind::deltoid_second ? 0.5 : -0.5;
  }
  /// Invariance under z -> -z; makes all odd-degree moments vanish.
  bool centrally_symmetric() const {
    return kind_ == WeightKind::hermite || kind_ == WeightKind::disk;
  }
  std::string name() const {
    switch (kind_) {
      case WeightKind::hermite: return "hermite";
      case WeightKind::disk: return "disk";
      case WeightKind::deltoid_first: return "deltoid-t";
      case WeightKind::deltoid_second: return "deltoid-u";
      case WeightKind::custom: return "custom";
    }
    return "?";
  }

 private:
  explicit WeightSpec(WeightKind k) : kind_(k) {}
  WeightKind kind_;
  double lambda_ = 0.0;
  std::shared_ptr<const MomentTable> table_;
};

namespace detail {

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// (x)_m = x (x+1) ... (x+m-1)
inline double pochhammer(double x, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= (x + i);
  return r;
}

struct DeltoidCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int>, Complex> moments;  // key: (sign, k, j)
  std::optional<double> mass[2];
};
inline DeltoidCache& deltoid_cache() {
  static DeltoidCache c;
  return c;
}

inline double deltoid_abs_tol(double alpha) { return alpha > 0 ? 1e-10 : 3e-9; }
inline double deltoid_accept_err(double alpha) { return alpha > 0 ? 1e-8 : 1e-6; }

inline double deltoid_mass(double alpha) {
  auto& c = deltoid_cache();
  const int idx = alpha > 0 ? 1 : 0;
  {
    std::lock_guard<std::mutex> lk(c.mu);
    if (c.mass[idx]) return *c.mass[idx];
  }
  auto r = deltoid_region_integral(
      alpha, [](double, double) -> Complex { return 1.0; }, deltoid_abs_tol(alpha));
  if (r.error > deltoid_accept_err(alpha))
    throw Error("deltoid mass quadrature: achieved error " + std::to_string(r.error));
  std::lock_guard<std::mutex> lk(c.mu);
  c.mass[idx] = r.value.real();
  return r.value.real();
}

inline Complex deltoid_moment(double alpha, int k, int j) {
  // the region and weight are invariant under z -> e^{2 pi i/3} z, so moments
  // with k - j not divisible by 3 vanish
  if ((k - j) % 3 != 0) return 0.0;
  if (k < j) return std::conj(deltoid_moment(alpha, j, k));
  auto& c = deltoid_cache();
  const std::tuple<int, int, int> key{alpha > 0 ? 1 : 0, k, j};
  {
    std::lock_guard<std::mutex> lk(c.mu);
    auto it = c.moments.find(key);
    if (it != c.moments.end()) return it->second;
  }
  const double mass = deltoid_mass(alpha);
  auto f = [k, j](double x, double y) -> Complex {
    const Complex z(x, y);
    return std::pow(z, k) * std::pow(std::conj(z), j);
  };
  auto r = deltoid_region_integral(alpha, f, deltoid_abs_tol(alpha));
  if (r.error > deltoid_accept_err(alpha))
    throw Error("deltoid moment quadrature: achieved error " + std::to_string(r.error));
  const Complex m = r.value / mass;
  std::lock_guard<std::mutex> lk(c.mu);
  c.moments[key] = m;
  return m;
}

}  // namespace detail

/// m_{k,j} = int z^k zbar^j w dx dy against the unit-mass weight.
inline Complex moment(const WeightSpec& w, int k, int j) {
  if (k < 0 || j < 0) throw Error("moment: negative exponent");
  switch (w.kind()) {
    case WeightKind::hermite:
      return k == j ? Complex(detail::factorial(k)) : Complex(0.0);
    case WeightKind::disk: {
      if (k != j) return 0.0;
      double r = 1.0;  // k! / (lambda+2)_k, computed as a stable product
      for (int i = 1; i <= k; ++i) r *= double(i) / (w.lambda() + 1.0 + i);
      return r;
    }
    case WeightKind::deltoid_first:
    case WeightKind::deltoid_second:
      return detail::deltoid_moment(w.alpha(), k, j);
    case WeightKind::custom: {
      const auto& t = w.table();
      if (k + j > t.max_degree)
        throw Error("moment m_{" + std::to_string(k) + "," + std::to_string(j) +
                    "} beyond table degree " + std::to_string(t.max_degree));
      const bool swap = k < j;
      auto it = t.entries.find(swap ? std::make_pair(j, k) : std::make_pair(k, j));
      if (it == t.entries.end())
        throw Error("moment m_{" + std::to_string(k) + "," + std::to_string(j) +
                    "} missing from table");
      return swap ? std::conj(it->second) : it->second;
    }
  }
  throw Error("moment: unknown weight kind");
}

/// <f, g> = int f conj(g) w; expands both polynomials against the moments.
inline Complex inner_product(const WeightSpec& w, const CPoly& f, const CPoly& g) {
  Complex s = 0.0;
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms())
      s += cf * std::conj(cg) * moment(w, ef.a + eg.b, ef.b + eg.a);
  return s;
}

inline Eigen::MatrixXcd gram(const WeightSpec& w, const std::vector<CPoly>& fs,
                             const std::vector<CPoly>& gs) {
  Eigen::MatrixXcd G(fs.size(), gs.size());
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = 0; j < gs.size(); ++j) G(i, j) = inner_product(w, fs[i], gs[j]);
  return G;
}

/// Flat index of the degree-k, position-s monomial z^{k-s} zbar^s in the
/// dense-by-degree ordering.
inline int monomial_index(int k, int s) { return k * (k + 1) / 2 + s; }
inline int monomial_count(int n) { return (n + 1) * (n + 2) / 2; }

struct MomentMatrix {
  int n = 0;
  Eigen::MatrixXcd mat;
  double min_eig = 0.0, max_eig = 0.0;
};

/// Moment matrix of all monomials of degree <= n.  Block (k, j) has entries
/// m_{k-s+t, s+j-t}.  Verified Hermitian positive definite and invariant
/// under the half-turn conjugation M = D conj(M) D, D = J_1 + ... + J_{n+1}.
inline MomentMatrix moment_matrix(const WeightSpec& w, int n) {
  const int N = monomial_count(n);
  Eigen::MatrixXcd M(N, N);
  for (int k = 0; k <= n; ++k)
    for (int s = 0; s <= k; ++s)
      for (int j = 0; j <= n; ++j)
        for (int t = 0; t <= j; ++t)
          M(monomial_index(k, s), monomial_index(j, t)) = moment(w, k - s + t, s + j - t);

  const double scale = M.cwiseAbs().maxCoeff();
  if ((M - M.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw Error("moment matrix: not Hermitian");
  double jres = 0.0;
  for (int k = 0; k <= n; ++k)
    for (int s = 0; s <= k; ++s)
      for (int j = 0; j <= n; ++j)
        for (int t = 0; t <= j; ++t)
          jres = std::max(jres, std::abs(M(monomial_index(k, s), monomial_index(j, t)) -
                                         std::conj(M(monomial_index(k, k - s),
                                                     monomial_index(j, j - t)))));
  if (jres > 1e-12 * scale) throw Error("moment matrix: conjugation symmetry violated");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  if (es.info() != Eigen::Success) throw Error("moment matrix: eigensolve failed");
  MomentMatrix out{n, std::move(M), es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
  if (out.min_eig <= 1e-12 * out.max_eig)
    throw Error("moment matrix not positive definite: min eigenvalue " +
                std::to_string(out.min_eig));
  return out;
}

/// int f w over the weight's region, for the unit-mass weight.  Hermite and
/// disk use polar product rules that are exact for polynomials; the deltoid
/// weights use adaptive slice quadrature (throws if the achieved error
/// estimate exceeds the acceptance threshold).
inline Complex region_integral(const WeightSpec& w, const CPoly& f,
                               double* achieved_error = nullptr) {
  const int deg = f.degree();
  const int M = deg + 1;  // trapezoid modes: exact for e^{i k theta}, |k| <= deg
  auto theta_avg = [&](double r) -> Complex {
    Complex s = 0.0;
    for (int m = 0; m < M; ++m) {
      const double th = 2.0 * M_PI * m / M;
      s += eval(f, Complex(r * std::cos(th), r * std::sin(th)));
    }
    return s / double(M);
  };
  switch (w.kind()) {
    case WeightKind::hermite: {
      GaussRule g = gauss_laguerre(deg / 2 + 2);
      Complex s = 0.0;
      for (size_t i = 0; i < g.nodes.size(); ++i)
        s += g.weights[i] * theta_avg(std::sqrt(g.nodes[i]));
      if (achieved_error) *achieved_error = 0.0;
      return s;
    }
    case WeightKind::disk: {
      const double lam = w.lambda();
      GaussRule g = gauss_jacobi(deg / 2 + 2, lam, 0.0);
      Complex s = 0.0;
      for (size_t i = 0; i < g.nodes.size(); ++i) {
        const double u = 0.5 * (1.0 + g.nodes[i]);
        s += g.weights[i] * theta_avg(std::sqrt(u));
      }
      if (achieved_error) *achieved_error = 0.0;
      return s * (lam + 1.0) / std::pow(2.0, lam + 1.0);
    }
    case WeightKind::deltoid_first:
    case WeightKind::deltoid_second: {
      const double a = w.alpha();
      const double mass = detail::deltoid_mass(a);
      auto fn = [&](double x, double y) { return eval(f, Complex(x, y)); };
      auto r = deltoid_region_integral(a, fn, detail::deltoid_abs_tol(a));
      if (r.error > detail::deltoid_accept_err(a))
        throw Error("region integral: achieved error " + std::to_string(r.error) +
                    " exceeds acceptance threshold");
      if (achieved_error) *achieved_error = r.error / mass;
      return r.value / mass;
    }
    case WeightKind::custom:
      throw Error("region integral unavailable for table-defined weights");
  }
  throw Error("region_integral: unknown weight kind");
}

}  // namespace ortho2c
