#include "pglgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "pglgraph/error.hpp"

namespace pglgraph {

namespace {

void require_symmetric(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw error(errc::not_symmetric, "matrix is not square");
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (a(i, j) != a(j, i)) throw error(errc::not_symmetric, "matrix is not symmetric");
    }
  }
}

}  // namespace

void tridiagonalize(Eigen::MatrixXd a, std::vector<double>& d, std::vector<double>& e) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index m = n - k - 1;
    Eigen::VectorXd v = a.col(k).tail(m);
    const double norm = v.norm();
    if (norm == 0.0) continue;
    const double alpha = v(0) > 0 ? -norm : norm;
    v(0) -= alpha;
    const double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    v /= vnorm;
    auto sub = a.bottomRightCorner(m, m);
    const Eigen::VectorXd p = sub * v;
    const Eigen::VectorXd w = p - v.dot(p) * v;
    sub.noalias() -= 2.0 * (v * w.transpose() + w * v.transpose());
    a(k + 1, k) = a(k, k + 1) = alpha;
    a.col(k).tail(m - 1).setZero();
    a.row(k).tail(m - 1).setZero();
  }
  d.resize(n);
  e.assign(n > 0 ? n - 1 : 0, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) d[i] = a(i, i);
  for (Eigen::Index i = 0; i + 1 < n; ++i) e[i] = a(i + 1, i);
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const std::size_t n = d.size();
  e.resize(n, 0.0);
  const std::size_t cap = 30 * std::max<std::size_t>(n, 1);
  std::size_t iterations = 0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iterations > cap) throw error(errc::no_convergence, "QL iteration cap reached");
      // Wilkinson-type shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  return d;
}

std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& a) {
  require_symmetric(a);
  std::vector<double> d, e;
  tridiagonalize(a, d, e);
  auto ev = tridiagonal_eigenvalues(std::move(d), std::move(e));
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXd& input) {
  require_symmetric(input);
  Eigen::MatrixXd a = input;
  const Eigen::Index n = a.rows();
  const double scale = std::max(a.norm(), 1.0);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    }
    if (std::sqrt(off) <= 1e-15 * scale) {
      const Eigen::VectorXd d = a.diagonal();
      std::vector<double> ev(d.data(), d.data() + n);
      std::sort(ev.begin(), ev.end(), std::greater<>());
      return ev;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  throw error(errc::no_convergence, "Jacobi sweeps exhausted");
}

Eigen::VectorXd inverse_iteration(const Eigen::MatrixXd& a, double lambda, int iterations) {
  const Eigen::Index n = a.rows();
  const double shift = lambda + 1e-10 * std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a - shift * Eigen::MatrixXd::Identity(n, n));
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(n, 1.0, 2.0);
  v.normalize();
  for (int it = 0; it < iterations; ++it) {
    v = lu.solve(v);
    v.normalize();
  }
  return v;
}

double sampled_residual(const Eigen::MatrixXd& a, const std::vector<double>& eigenvalues, std::size_t samples) {
  if (eigenvalues.empty() || samples == 0) return 0.0;
  const double norm_inf = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
  double worst = 0.0;
  samples = std::min(samples, eigenvalues.size());
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = samples == 1 ? 0 : s * (eigenvalues.size() - 1) / (samples - 1);
    const Eigen::VectorXd v = inverse_iteration(a, eigenvalues[i]);
    worst = std::max(worst, (a * v - eigenvalues[i] * v).norm() / norm_inf);
  }
  return worst;
}

std::vector<Cluster> cluster(const std::vector<double>& sorted_desc, double tol) {
  std::vector<Cluster> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted_desc.size(); ++i) {
    if (i > 0 && sorted_desc[i - 1] - sorted_desc[i] <= tol) {
      ++out.back().multiplicity;
    } else {
      if (!out.empty()) out.back().value = sum / static_cast<double>(out.back().multiplicity);
      out.push_back({0.0, 1});
      sum = 0.0;
    }
    sum += sorted_desc[i];
  }
  if (!out.empty()) out.back().value = sum / static_cast<double>(out.back().multiplicity);
  return out;
}

SpectrumReport make_report(std::vector<double> eigenvalues, std::size_t k, std::uint32_t q) {
  SpectrumReport r;
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  r.eigenvalues = std::move(eigenvalues);
  r.k = k;
  r.q = q;
  const double kd = static_cast<double>(k);
  const double tol = 1e-6 * std::max(kd, 1.0);
  r.clustered = cluster(r.eigenvalues, tol);
  for (double x : r.eigenvalues) {
    if (std::abs(std::abs(x) - kd) <= tol) {
      r.trivial.push_back(x);
    } else {
      r.max_nontrivial_abs = std::max(r.max_nontrivial_abs, std::abs(x));
    }
  }
  r.ramanujan_bound = k >= 1 ? 2.0 * std::sqrt(kd - 1.0) : 0.0;
  r.paper_bound = 2.0 * std::sqrt(static_cast<double>(q));
  return r;
}

CertResult certify(const SpectrumReport& rep, std::optional<double> tol) {
  const double kd = static_cast<double>(rep.k);
  const double t = tol.value_or(1e-8 * kd);
  CertResult c{true, true};
  for (double x : rep.eigenvalues) {
    const double a = std::abs(x);
    if (a >= kd - t) continue;
    if (a > rep.ramanujan_bound + t) c.ramanujan = false;
    if (a > rep.paper_bound + t) c.paper_bound_holds = false;
  }
  return c;
}

std::uint64_t closed_walks(const Graph& g, unsigned m) {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> cur(g.n()), nxt(g.n());
  for (std::size_t s = 0; s < g.n(); ++s) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[s] = 1;
    for (unsigned step = 0; step < m; ++step) {
      std::fill(nxt.begin(), nxt.end(), 0);
      for (std::size_t v = 0; v < g.n(); ++v) {
        if (cur[v] == 0) continue;
        for (auto w : g.adj[v]) nxt[w] += cur[v];
      }
      cur.swap(nxt);
    }
    total += cur[s];
  }
  return total;
}

MomentReport moment_check(const Graph& g, const std::vector<double>& eigenvalues) {
  MomentReport r;
  const double n = static_cast<double>(g.n());
  const double k = static_cast<double>(std::max<std::size_t>(g.k(), 1));
  for (unsigned m = 0; m <= 4; ++m) {
    double s = 0.0;
    for (double x : eigenvalues) s += std::pow(x, m);
    const double w = static_cast<double>(closed_walks(g, m));
    r.spectral.push_back(s);
    r.walks.push_back(w);
    if (std::abs(s - w) > 1e-6 * n * std::pow(k, m)) r.ok = false;
  }
  return r;
}

MatchReport match_multiset(std::vector<double> computed, std::vector<double> predicted, double tol) {
  if (computed.size() != predicted.size()) {
    throw error(errc::cardinality_mismatch, std::to_string(computed.size()) + " computed vs " +
                                                std::to_string(predicted.size()) + " predicted");
  }
  std::sort(computed.begin(), computed.end(), std::greater<>());
  std::sort(predicted.begin(), predicted.end(), std::greater<>());
  MatchReport r;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const double dist = std::abs(computed[i] - predicted[i]);
    if (i == 0 || dist > r.max_distance) {
      r.max_distance = dist;
      r.worst_index = i;
      r.worst_computed = computed[i];
      r.worst_predicted = predicted[i];
    }
  }
  r.success = r.max_distance <= tol;
  return r;
}

bool is_sub_multiset(std::vector<double> sub, std::vector<double> sup, double tol) {
  std::sort(sub.begin(), sub.end());
  std::sort(sup.begin(), sup.end());
  std::size_t j = 0;
  for (double x : sub) {
    while (j < sup.size() && sup[j] < x - tol) ++j;
    if (j == sup.size() || sup[j] > x + tol) return false;
    ++j;
  }
  return true;
}

}  // namespace pglgraph
