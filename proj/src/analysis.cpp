#include "plscape/analysis.hpp"

#include "plscape/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace plscape {

namespace {

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0;
  double compensation_ = 0;
};

std::vector<Rational> merged_abscissae(std::initializer_list<const PiecewiseLinearFunction*> fs) {
  std::vector<Rational> ts;
  for (const auto* f : fs) {
    if (f == nullptr) continue;
    for (const auto& p : f->breakpoints()) ts.push_back(p.t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

Rational power(Rational x, unsigned p) {
  Rational result = 1;
  while (p) {
    if (p & 1u) result *= x;
    x *= x;
    p >>= 1u;
  }
  return result;
}

// ∫ over [0, w] of |v(s)|^p where v is linear from v0 to v1 and does not
// change sign.
Rational segment_power_integral(const Rational& w, const Rational& v0, const Rational& v1, unsigned p) {
  const Rational a = abs(v0);
  const Rational b = abs(v1);
  if (a == b) return w * power(a, p);
  return w * (power(b, p + 1) - power(a, p + 1)) / (Rational(p + 1) * (b - a));
}

// ∫ |f - g|^p over the merged partition, splitting pieces where f - g
// changes sign.
Rational difference_power_integral(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g,
                                   unsigned p) {
  const auto ts = merged_abscissae({&f, &g});
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Rational& t0 = ts[i];
    const Rational& t1 = ts[i + 1];
    const Rational v0 = f(t0) - g(t0);
    const Rational v1 = f(t1) - g(t1);
    if ((v0 < 0 && v1 > 0) || (v0 > 0 && v1 < 0)) {
      const Rational root = t0 + (t1 - t0) * v0 / (v0 - v1);
      total += segment_power_integral(root - t0, v0, Rational(0), p);
      total += segment_power_integral(t1 - root, Rational(0), v1, p);
    } else {
      total += segment_power_integral(t1 - t0, v0, v1, p);
    }
  }
  return total;
}

// ∫ f g (and optionally u) over the merged partition, in closed form.
Rational product_integral(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g,
                          const PiecewiseLinearFunction* u) {
  if (f.is_zero() || g.is_zero()) return 0;
  const auto ts = merged_abscissae({&f, &g, u});
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Rational w = ts[i + 1] - ts[i];
    const Rational f0 = f(ts[i]), f1 = f(ts[i + 1]);
    const Rational g0 = g(ts[i]), g1 = g(ts[i + 1]);
    if (u == nullptr) {
      total += w * (2 * f0 * g0 + f0 * g1 + f1 * g0 + 2 * f1 * g1) / 6;
    } else {
      const Rational h0 = (*u)(ts[i]), h1 = (*u)(ts[i + 1]);
      total += w *
               (3 * f0 * g0 * h0 + f0 * g0 * h1 + f0 * g1 * h0 + f1 * g0 * h0 + f0 * g1 * h1 +
                f1 * g0 * h1 + f1 * g1 * h0 + 3 * f1 * g1 * h1) /
               12;
    }
  }
  return total;
}

double root(const Rational& x, unsigned p) {
  if (p == 1) return to_double(x);
  if (p == 2) return std::sqrt(to_double(x));
  return std::pow(to_double(x), 1.0 / static_cast<double>(p));
}

void require_positive_nu(double nu) {
  if (!(nu > 0) || !std::isfinite(nu)) throw InputError("Poisson weight requires finite nu > 0");
}

}  // namespace

Rational integral_power(const PiecewiseLinearFunction& f, unsigned p) {
  Rational total = 0;
  const auto pts = f.breakpoints();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += segment_power_integral(pts[i + 1].t - pts[i].t, pts[i].v, pts[i + 1].v, p);
  }
  return total;
}

double p_norm(const Landscape& l, unsigned p) {
  if (p == 0) throw InputError("p_norm: p must be positive");
  CompensatedSum sum;
  for (const auto& f : l.levels()) sum.add(root(integral_power(f, p), p));
  return sum.value();
}

Rational sup_norm(const Landscape& l) {
  // λ_1 dominates every other level.
  Rational best = 0;
  if (l.empty()) return best;
  for (const auto& p : l.level(1).breakpoints()) best = std::max(best, p.v);
  return best;
}

double p_distance(const Landscape& l1, const Landscape& l2, unsigned p) {
  if (p == 0) throw InputError("p_distance: p must be positive");
  CompensatedSum sum;
  const std::size_t depth = std::max(l1.depth(), l2.depth());
  for (std::size_t k = 1; k <= depth; ++k) {
    sum.add(root(difference_power_integral(l1.level(k), l2.level(k), p), p));
  }
  return sum.value();
}

Rational l1_distance(const Landscape& l1, const Landscape& l2) {
  Rational total = 0;
  const std::size_t depth = std::max(l1.depth(), l2.depth());
  for (std::size_t k = 1; k <= depth; ++k) total += difference_power_integral(l1.level(k), l2.level(k), 1);
  return total;
}

Rational sup_distance(const Landscape& l1, const Landscape& l2) {
  // |f - g| is piecewise linear on the merged partition, so its max sits
  // on a merged breakpoint.
  Rational best = 0;
  const std::size_t depth = std::max(l1.depth(), l2.depth());
  for (std::size_t k = 1; k <= depth; ++k) {
    const auto& f = l1.level(k);
    const auto& g = l2.level(k);
    for (const auto& t : merged_abscissae({&f, &g})) best = std::max(best, abs(f(t) - g(t)));
  }
  return best;
}

Rational inner_product(const Landscape& l1, const Landscape& l2) {
  Rational total = 0;
  const std::size_t depth = std::min(l1.depth(), l2.depth());
  for (std::size_t k = 1; k <= depth; ++k) total += product_integral(l1.level(k), l2.level(k), nullptr);
  return total;
}

Rational weighted_inner_product(const Landscape& l1, const Landscape& l2,
                                std::span<const Rational> level_weights,
                                const PiecewiseLinearFunction* t_factor) {
  Rational total = 0;
  const std::size_t depth = std::min({l1.depth(), l2.depth(), level_weights.size()});
  for (std::size_t k = 1; k <= depth; ++k) {
    const Rational& w = level_weights[k - 1];
    if (w < 0) throw InputError("negative level weight at level " + std::to_string(k));
    if (w == 0) continue;
    total += w * product_integral(l1.level(k), l2.level(k), t_factor);
  }
  return total;
}

double weighted_inner_product(const Landscape& l1, const Landscape& l2, const WeightSpec& w) {
  const PiecewiseLinearFunction* u = w.t_factor ? &*w.t_factor : nullptr;
  if (const auto* explicit_weights = std::get_if<std::vector<Rational>>(&w.level_weights)) {
    return to_double(weighted_inner_product(l1, l2, *explicit_weights, u));
  }
  const double nu = std::get<PoissonWeights>(w.level_weights).nu;
  require_positive_nu(nu);
  CompensatedSum sum;
  const std::size_t depth = std::min(l1.depth(), l2.depth());
  for (std::size_t k = 1; k <= depth; ++k) {
    sum.add(poisson_weight(nu, static_cast<unsigned>(k - 1)) *
            to_double(product_integral(l1.level(k), l2.level(k), u)));
  }
  return sum.value();
}

double poisson_weight(double nu, unsigned k) {
  require_positive_nu(nu);
  return std::exp(static_cast<double>(k) * std::log(nu) - nu - std::lgamma(static_cast<double>(k) + 1.0));
}

double poisson_kernel(double nu, const Landscape& l1, const Landscape& l2) {
  return weighted_inner_product(l1, l2, WeightSpec{PoissonWeights{nu}, std::nullopt});
}

double poisson_norm(double nu, const Landscape& l) {
  require_positive_nu(nu);
  CompensatedSum sum;
  for (std::size_t k = 1; k <= l.depth(); ++k) {
    sum.add(poisson_weight(nu, static_cast<unsigned>(k - 1)) * std::sqrt(to_double(integral_power(l.level(k), 2))));
  }
  return sum.value();
}

namespace {

// Runs body(i) for i in [0, n) on a few threads; each i is written by
// exactly one thread.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
}

std::vector<Landscape> landscapes_of(const DiagramFamily& family) {
  std::vector<Landscape> ls(family.size());
  parallel_for(family.size(), [&](std::size_t i) { ls[i] = landscape_of(family[i]); });
  return ls;
}

}  // namespace

Eigen::MatrixXd gram_matrix(const DiagramFamily& family, const Kernel& kernel) {
  if (family.empty()) throw InputError("gram_matrix: empty family");
  // Workers must not throw, so reject bad parameters up front.
  if (const auto* p = std::get_if<PoissonKernel>(&kernel)) require_positive_nu(p->nu);
  if (const auto* w = std::get_if<WeightedKernel>(&kernel)) {
    if (const auto* p = std::get_if<PoissonWeights>(&w->weights.level_weights)) require_positive_nu(p->nu);
    if (const auto* ws = std::get_if<std::vector<Rational>>(&w->weights.level_weights)) {
      for (const auto& x : *ws) {
        if (x < 0) throw InputError("negative level weight " + to_string(x));
      }
    }
  }
  const auto ls = landscapes_of(family);
  const auto n = static_cast<Eigen::Index>(family.size());
  Eigen::MatrixXd g(n, n);
  parallel_for(family.size(), [&](std::size_t row) {
    const auto i = static_cast<Eigen::Index>(row);
    for (Eigen::Index j = i; j < n; ++j) {
      const auto& a = ls[row];
      const auto& b = ls[static_cast<std::size_t>(j)];
      const double value = std::visit(
          [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, PlainKernel>) {
              return to_double(inner_product(a, b));
            } else if constexpr (std::is_same_v<K, PoissonKernel>) {
              return poisson_kernel(k.nu, a, b);
            } else {
              return weighted_inner_product(a, b, k.weights);
            }
          },
          kernel);
      g(i, j) = value;
      g(j, i) = value;
    }
  });
  return g;
}

RationalMatrix gram_matrix_exact(const DiagramFamily& family) {
  if (family.empty()) throw InputError("gram_matrix: empty family");
  const auto ls = landscapes_of(family);
  const auto n = static_cast<Eigen::Index>(family.size());
  RationalMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = inner_product(ls[static_cast<std::size_t>(i)], ls[static_cast<std::size_t>(j)]);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

}  // namespace plscape
