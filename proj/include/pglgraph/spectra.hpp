#pragma once

// Dense symmetric eigensolver (Householder tridiagonalization + implicit QL),
// a cyclic Jacobi reference, spectrum reports and multiset comparison.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pglgraph/cayley.hpp"

namespace pglgraph {

/// Reduces symmetric a to tridiagonal form: diagonal d, off-diagonal e
/// (e[i] couples rows i and i+1; e has n-1 entries).
void tridiagonalize(Eigen::MatrixXd a, std::vector<double>& d, std::vector<double>& e);
/// Eigenvalues of a symmetric tridiagonal matrix, unsorted. NoConvergence
/// after 30n QL iterations.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e);

/// All eigenvalues, sorted descending. NotSymmetric unless a == a^T exactly.
std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& a);
/// Cyclic Jacobi rotations; slow reference implementation.
std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXd& a);

/// Eigenvector for an (approximate) eigenvalue by shifted inverse iteration.
Eigen::VectorXd inverse_iteration(const Eigen::MatrixXd& a, double lambda, int iterations = 3);
/// Largest ||A v - lambda v|| / ||A||_inf over `samples` evenly spaced eigenvalues.
double sampled_residual(const Eigen::MatrixXd& a, const std::vector<double>& eigenvalues, std::size_t samples);

struct Cluster {
  double value = 0;
  std::size_t multiplicity = 0;
};

/// Groups sorted-descending values whose neighbours differ by at most tol.
std::vector<Cluster> cluster(const std::vector<double>& sorted_desc, double tol);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // descending
  std::vector<Cluster> clustered;
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::vector<double> trivial;  // eigenvalues within tol of +-k
  double max_nontrivial_abs = 0;
  double ramanujan_bound = 0;  // 2 sqrt(k-1)
  double paper_bound = 0;      // 2 sqrt(q)
};

SpectrumReport make_report(std::vector<double> eigenvalues, std::size_t k, std::uint32_t q);

struct CertResult {
  bool ramanujan = false;
  bool paper_bound_holds = false;
};

/// Tolerance defaults to 1e-8 k.
CertResult certify(const SpectrumReport& rep, std::optional<double> tol = std::nullopt);

struct MomentReport {
  bool ok = true;
  std::vector<double> spectral;  // sum of lambda^m, m = 0..4
  std::vector<double> walks;     // closed m-walks
};

/// Compares power sums of the spectrum with closed-walk counts for m = 0..4.
MomentReport moment_check(const Graph& g, const std::vector<double>& eigenvalues);
/// Closed walks of length m in g (sum over vertices), counted combinatorially.
std::uint64_t closed_walks(const Graph& g, unsigned m);

struct MatchReport {
  bool success = false;
  double max_distance = 0;
  std::size_t worst_index = 0;
  double worst_computed = 0;
  double worst_predicted = 0;
};

/// Sorts both lists and pairs them in order. CardinalityMismatch if sizes differ.
MatchReport match_multiset(std::vector<double> computed, std::vector<double> predicted, double tol = 1e-6);
/// True when every element of sub can be paired with a distinct element of sup within tol.
bool is_sub_multiset(std::vector<double> sub, std::vector<double> sup, double tol);

}  // namespace pglgraph
