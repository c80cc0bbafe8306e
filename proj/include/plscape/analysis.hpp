#pragma once

#include "plscape/diagram.hpp"
#include "plscape/landscape.hpp"
#include "plscape/matrix.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace plscape {

/// Level weights P_ν(k - 1) for k = 1, 2, ...
struct PoissonWeights {
  double nu;
};

/// Product-form weight w(k, t) = w_k * u(t). Explicit level weights are
/// extended by zero; u defaults to the constant 1.
struct WeightSpec {
  std::variant<std::vector<Rational>, PoissonWeights> level_weights;
  std::optional<PiecewiseLinearFunction> t_factor;
};

/// ∫ f(t)^p dt, exact.
Rational integral_power(const PiecewiseLinearFunction& f, unsigned p);

/// Σ_k (∫ λ_k^p)^{1/p}, exponent applied per level. Throws InputError for p == 0.
double p_norm(const Landscape& l, unsigned p);

/// sup_{k,t} λ_k(t).
Rational sup_norm(const Landscape& l);

/// Σ_k (∫ |λ_k - λ'_k|^p)^{1/p}. For p == 1 the value is exact; see
/// l1_distance.
double p_distance(const Landscape& l1, const Landscape& l2, unsigned p);
Rational l1_distance(const Landscape& l1, const Landscape& l2);

/// sup_{k,t} |λ_k(t) - λ'_k(t)|.
Rational sup_distance(const Landscape& l1, const Landscape& l2);

/// Σ_k ∫ λ_k λ'_k, exact.
Rational inner_product(const Landscape& l1, const Landscape& l2);

/// Σ_k w_k ∫ u λ_k λ'_k with explicit rational weights; u == nullptr means u ≡ 1.
Rational weighted_inner_product(const Landscape& l1, const Landscape& l2,
                                std::span<const Rational> level_weights,
                                const PiecewiseLinearFunction* t_factor = nullptr);

/// General weight; Poisson weights make the result inexact.
double weighted_inner_product(const Landscape& l1, const Landscape& l2, const WeightSpec& w);

/// ν^k e^{-ν} / k!, evaluated in log space. Throws InputError for ν <= 0.
double poisson_weight(double nu, unsigned k);

/// Σ_k P_ν(k - 1) ∫ λ_k λ'_k.
double poisson_kernel(double nu, const Landscape& l1, const Landscape& l2);

/// Σ_k P_ν(k - 1) (∫ λ_k^2)^{1/2}.
double poisson_norm(double nu, const Landscape& l);

struct PlainKernel {};
struct PoissonKernel {
  double nu;
};
struct WeightedKernel {
  WeightSpec weights;
};
using Kernel = std::variant<PlainKernel, PoissonKernel, WeightedKernel>;

/// G(i, j) = kernel(λ(D_i), λ(D_j)). Entries are computed in parallel;
/// the result does not depend on scheduling.
Eigen::MatrixXd gram_matrix(const DiagramFamily& family, const Kernel& kernel);

/// Exact Gram matrix of the plain landscape kernel.
RationalMatrix gram_matrix_exact(const DiagramFamily& family);

}  // namespace plscape
