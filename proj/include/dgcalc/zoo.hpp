/**
 * @file zoo.hpp
 * @brief Generators for the named operators of linear elasticity and linearized gravity.
 *
 * Every generator instantiates its formula with a constant metric, so the
 * results are LinDiffOp matrices over Q[d1..dn] with labelled bundles.
 * Symmetric 2-tensors use the components (i <= j) in lexicographic order,
 * with pairing weight 2 off the diagonal.
 */
#pragma once

#include "dgcalc/diffop.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dgcalc::zoo {

enum class MetricKind { Euclidean, Minkowski };

class Metric {
public:
    /// Any constant symmetric matrix with nonzero determinant.
    explicit Metric(std::vector<std::vector<Rational>> entries);
    static Metric diagonal(const std::vector<Rational>& diag);

    [[nodiscard]] int n() const noexcept { return static_cast<int>(g_.size()); }
    [[nodiscard]] const Rational& lower(int i, int j) const { return g_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    [[nodiscard]] const Rational& upper(int i, int j) const
    {
        return inv_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    [[nodiscard]] std::string describe() const;

private:
    std::vector<std::vector<Rational>> g_;
    std::vector<std::vector<Rational>> inv_;
};

/// Euclidean: identity. Minkowski: diag(+1, ..., +1, -1).
Metric metric(MetricKind kind, int n);
MetricKind parse_metric_kind(const std::string& s);

/// Ordered pairs (i <= j), zero-based.
std::vector<std::pair<int, int>> sym_pairs(int n);
/// Symmetric tensor bundle with weights 1 on the diagonal and 2 off it.
Bundle sym_bundle(const std::string& name, const std::string& prefix, int n);
/// Zero-based index of the component (min(i,j), max(i,j)).
int sym_index(int n, int i, int j);
Bundle tangent_bundle(const std::string& name, const std::string& prefix, int n);

/// Independent curvature components ((i<j), (k<l)) with (i,j) <= (k,l), minus one per 4-subset.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> riemann_components(int n);

LinDiffOp killing(const Metric& w);
LinDiffOp conformal_killing(const Metric& w);
LinDiffOp weyl_killing(const Metric& w);
LinDiffOp riemann_lin(const Metric& w);
LinDiffOp ricci_lin(const Metric& w);
LinDiffOp einstein_lin(const Metric& w);
LinDiffOp c_map(const Metric& w);
/// Exact inverse of c_map; n != 2.
LinDiffOp c_map_inverse(const Metric& w);
/// Trace-free part of every curvature component (n >= 3); rows may be dependent.
LinDiffOp weyl_components(const Metric& w);
/// The first n(n+1)(n+2)(n-3)/12 independent rows of weyl_components; requires n >= 4.
LinDiffOp weyl_lin(const Metric& w);
LinDiffOp cauchy(const Metric& w);
LinDiffOp grad3();
LinDiffOp curl3();
LinDiffOp div3();
/// d on r-forms, 0 <= r < n.
LinDiffOp exterior_derivative(int n, int r);
LinDiffOp lame(const Rational& lambda, const Rational& mu, int n);
LinDiffOp dalembertian(const Metric& w, const Bundle& b);
LinDiffOp hooke2d(const Rational& lambda, const Rational& mu);
LinDiffOp hooke2d_inverse(const Rational& lambda, const Rational& mu);

struct Cosserat {
    LinDiffOp spencer_d1;
    LinDiffOp equilibrium;
    LinDiffOp parametrization;
    /// equilibrium = equilibrium_scale * adjoint(spencer_d1).
    Rational equilibrium_scale;
};
Cosserat cosserat2d();

struct Dims {
    int n = 0;
    long long f1 = 0;
    long long f1hat = 0;
    /// Group dimensions: isometries, Weyl group, conformal group.
    long long isometry = 0;
    long long weyl_group = 0;
    long long conformal = 0;
    /// dim J_q(T) for q = 0..4.
    std::vector<long long> jet_tangent;
    /// dim S_q T* (x) T for q = 0..4.
    std::vector<long long> sym_tangent;
    /// Spencer bundle dims C_r = C(n,r) * g for each group g (isometry, Weyl, conformal).
    std::vector<std::vector<long long>> spencer;
    /// Spencer bundles of the full jet system J_3(T), r = 0..n.
    std::vector<long long> full;
    /// Janet bundle dims, full minus Spencer.
    std::vector<std::vector<long long>> janet;
};
Dims dims(int n);

long long binomial(int n, int k);
/// dim J_q(E) for rank-m bundle E over n dimensions.
long long jet_dim(int n, int m, int q);

struct Diagram1 {
    std::vector<std::vector<long long>> spencer;
    std::vector<long long> full;
    std::vector<std::vector<long long>> janet;
};
/// The stored n = 2 table.
Diagram1 diagram1_table();

/// Names accepted by make().
std::vector<std::string> generator_names();
/// Builds a generator by name; lambda and mu are used by lame and hooke2d, r by exterior_derivative.
LinDiffOp make(const std::string& name, int n, MetricKind kind, const Rational& lambda = Rational(1),
               const Rational& mu = Rational(1), int r = 1);

}  // namespace dgcalc::zoo
