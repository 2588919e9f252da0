#pragma once

// Eigenvalues of the coset operators predicted from character sums, Gauss
// sums and epsilon factors, and their assembly into full spectra.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pglgraph/context.hpp"

namespace pglgraph {

struct PredictedEntry {
  double value = 0;
  double imag = 0;  // residue discarded when the value was made real
  std::size_t multiplicity = 0;
  std::string source;
};

struct PredictedSpectrum {
  std::vector<PredictedEntry> entries;
  std::size_t total() const noexcept;
  /// Values repeated by multiplicity, sorted descending.
  std::vector<double> expanded() const;
};

/// Sum of mu(y) over the solutions (y, x) of (y+c)^2 - delta x^2 = c^2 - 1.
double k_eigen_nondiscrete(const Context& ctx, MultChar mu, elem c);
/// -sum_b sum_w Lambda(w) - [y = 1], w in E^x with N w = y(b^2 - delta) and
/// Tr w = -(y+1) b - delta x.
cplx s_yx(const Context& ctx, TorusChar lambda, elem y, elem x);
/// Same sum by enumerating all of E^x.
cplx s_yx_brute(const Context& ctx, TorusChar lambda, elem y, elem x);
/// Average of s_yx over the conic solutions for c.
double k_eigen_discrete(const Context& ctx, TorusChar lambda, elem c);

PredictedSpectrum u_predicted_spectrum(const Context& ctx, elem t);

/// Sum of mu(x(delta-1) / ((x-1)(x(delta-c)-(1-c)))) over x in F^x, x != 1, (1-c)/(delta-c).
double a_eigen_nondiscrete(const Context& ctx, MultChar mu, elem c);
/// (q-1)^-1 q^-1 sum_beta beta((1-c)/(1-delta)) Gamma(beta^-1, psi)^2 eps(pi, beta, psi).
double a_eigen_generic(const Context& ctx, const RepParam& rep, elem c, AddChar psi = {1});
/// Same eigenvalue through the Kloosterman-type sums (discrete series and mu != 1).
double a_eigen_kloosterman(const Context& ctx, const RepParam& rep, elem c, AddChar psi = {1});

struct Eigenpair {
  double value = 0;
  Eigen::VectorXd vector;
};

struct Block {
  Eigen::MatrixXd matrix;  // column j is the image of basis vector j
  std::vector<Eigenpair> pairs;
};

/// T on the characteristic functions f1, f2, f3 of the three U-A double cosets.
Block a_psi0_block(std::uint32_t q);
/// T on {W_1, W_D0} for the Steinberg representation with trivial mu.
Block a_steinberg1_block(std::uint32_t q);

struct FixedDim {
  std::string label;
  unsigned degree = 0;
  unsigned dim = 0;
};

/// Every irreducible representation of G (one per class), with the dimension
/// of its H-fixed vectors.
std::vector<FixedDim> fixed_space_dims(const Characters& chars, SubgroupKind kind);
/// d_pi for a representation of degree > 1.
unsigned expected_fixed_dim(const Characters& chars, const RepParam& rep, SubgroupKind kind);

PredictedSpectrum assemble_predicted(const Context& ctx, Family family, elem param);

}  // namespace pglgraph
