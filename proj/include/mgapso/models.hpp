#pragma once

// Least-squares surrogate models used by the model-based behaviors.
//
// Both fitters work on centred and scaled coordinates, solve the normal
// equations, reject systems whose condition estimate exceeds
// `max_condition`, and hand back coefficients in the original coordinates.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mgapso/core.hpp"

namespace mgapso
{

template <typename Scalar>
inline constexpr Scalar max_condition = Scalar(1e10);

/// Normal-equation least squares with a condition-number guard.
template <typename DerivedA, typename DerivedY>
std::optional<VectorX<typename DerivedA::Scalar>>
ols_solve(const Eigen::MatrixBase<DerivedA> &design, const Eigen::MatrixBase<DerivedY> &y)
{
	using Scalar = typename DerivedA::Scalar;
	if (design.rows() < design.cols() || design.rows() != y.rows())
		return std::nullopt;
	const MatrixX<Scalar> normal = design.transpose() * design;
	const VectorX<Scalar> rhs = design.transpose() * y;
	Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> eig(normal, Eigen::EigenvaluesOnly);
	if (eig.info() != Eigen::Success)
		return std::nullopt;
	const Scalar lo = eig.eigenvalues().minCoeff();
	const Scalar hi = eig.eigenvalues().maxCoeff();
	if (!(lo > Scalar(0)) || hi / lo > max_condition<Scalar>)
		return std::nullopt;
	VectorX<Scalar> coef = normal.ldlt().solve(rhs);
	if (!coef.allFinite())
		return std::nullopt;
	return coef;
}

/// Separable quadratic: sum_d (a_d x_d^2 + b_d x_d) + c.
template <typename Scalar>
struct QuadraticModel
{
	VectorX<Scalar> a;
	VectorX<Scalar> b;
	Scalar c = Scalar(0);

	std::size_t dim() const { return static_cast<std::size_t>(a.size()); }

	/// Contribution of one coordinate, a_d x^2 + b_d x.
	Scalar along(std::size_t d, Scalar x) const { return a[d] * x * x + b[d] * x; }

	template <typename Derived>
	Scalar operator()(const Eigen::MatrixBase<Derived> &x) const
	{
		Scalar s = c;
		for (std::size_t d = 0; d < dim(); ++d)
			s += along(d, x[d]);
		return s;
	}
};

/// Fits a QuadraticModel to `points` (one sample per row). Needs at least
/// 2*dim + 1 rows and spread in every coordinate.
template <typename DerivedX, typename DerivedY>
std::optional<QuadraticModel<typename DerivedX::Scalar>>
fit_quadratic(const Eigen::MatrixBase<DerivedX> &points, const Eigen::MatrixBase<DerivedY> &values)
{
	using Scalar = typename DerivedX::Scalar;
	const Eigen::Index n = points.rows(), dim = points.cols();
	if (dim < 1 || n < 2 * dim + 1 || values.rows() != n)
		return std::nullopt;

	const VectorX<Scalar> origin = points.colwise().mean().transpose();
	VectorX<Scalar> scale(dim);
	for (Eigen::Index d = 0; d < dim; ++d)
	{
		scale[d] = (points.col(d).array() - origin[d]).abs().maxCoeff();
		if (!(scale[d] > Scalar(0)))
			return std::nullopt;
	}

	MatrixX<Scalar> design(n, 2 * dim + 1);
	for (Eigen::Index i = 0; i < n; ++i)
	{
		for (Eigen::Index d = 0; d < dim; ++d)
		{
			const Scalar u = (points(i, d) - origin[d]) / scale[d];
			design(i, d) = u * u;
			design(i, dim + d) = u;
		}
		design(i, 2 * dim) = Scalar(1);
	}
	const auto coef = ols_solve(design, values);
	if (!coef)
		return std::nullopt;

	QuadraticModel<Scalar> m;
	m.a.resize(dim);
	m.b.resize(dim);
	m.c = (*coef)[2 * dim];
	for (Eigen::Index d = 0; d < dim; ++d)
	{
		const Scalar alpha = (*coef)[d], beta = (*coef)[dim + d];
		const Scalar s = scale[d], o = origin[d];
		m.a[d] = alpha / (s * s);
		m.b[d] = beta / s - Scalar(2) * alpha * o / (s * s);
		m.c += alpha * o * o / (s * s) - beta * o / s;
	}
	return m;
}

inline std::optional<QuadraticModel<double>> fit_quadratic(const std::vector<Sample> &samples)
{
	if (samples.empty())
		return std::nullopt;
	const auto n = static_cast<Eigen::Index>(samples.size());
	Matrix points(n, samples.front().x.size());
	Vector values(n);
	for (Eigen::Index i = 0; i < n; ++i)
	{
		points.row(i) = samples[i].x.transpose();
		values[i] = samples[i].value;
	}
	return fit_quadratic(points, values);
}

/// Minimiser of a x^2 + b x on [lower, upper]: the vertex when the parabola
/// opens upward and its vertex is inside, otherwise the better endpoint
/// (lower wins ties).
template <typename Scalar>
Scalar bounded_parabola_peak(Scalar a, Scalar b, Scalar lower, Scalar upper)
{
	if (a > Scalar(0))
	{
		const Scalar vertex = -b / (Scalar(2) * a);
		if (vertex >= lower && vertex <= upper)
			return vertex;
	}
	const Scalar at_lower = a * lower * lower + b * lower;
	const Scalar at_upper = a * upper * upper + b * upper;
	return at_lower <= at_upper ? lower : upper;
}

/// Per-coordinate bounded minimiser of a quadratic model.
template <typename Scalar>
VectorX<Scalar> bounded_model_peak(const QuadraticModel<Scalar> &m, const VectorX<Scalar> &lower,
								   const VectorX<Scalar> &upper)
{
	VectorX<Scalar> peak(m.a.size());
	for (Eigen::Index d = 0; d < peak.size(); ++d)
		peak[d] = bounded_parabola_peak(m.a[d], m.b[d], lower[d], upper[d]);
	return peak;
}

/// One-dimensional polynomial c + sum_{i=1..p} a_i x^i.
///
/// Fitted models keep their scaled form (u = (x - origin) / scale) for
/// evaluation; `coefficients()` expands it back to powers of x.
template <typename Scalar>
class PolynomialModel
{
public:
	PolynomialModel() = default;

	/// From plain coefficients: intercept then a_1..a_p.
	static PolynomialModel from_coefficients(const VectorX<Scalar> &coefficients)
	{
		return PolynomialModel(coefficients, Scalar(0), Scalar(1));
	}

	PolynomialModel(VectorX<Scalar> scaled, Scalar origin, Scalar scale)
		: scaled_(std::move(scaled)), origin_(origin), scale_(scale)
	{
	}

	std::size_t degree() const { return scaled_.size() > 0 ? static_cast<std::size_t>(scaled_.size() - 1) : 0; }

	Scalar operator()(Scalar x) const
	{
		const Scalar u = (x - origin_) / scale_;
		Scalar acc = Scalar(0);
		for (Eigen::Index i = scaled_.size() - 1; i >= 0; --i)
			acc = acc * u + scaled_[i];
		return acc;
	}

	/// Intercept then a_1..a_p in powers of x.
	VectorX<Scalar> coefficients() const
	{
		const Eigen::Index p = scaled_.size();
		VectorX<Scalar> raw = VectorX<Scalar>::Zero(p);
		// gamma_i ((x - m)/s)^i = gamma_i s^-i sum_j C(i,j) x^j (-m)^(i-j)
		for (Eigen::Index i = 0; i < p; ++i)
		{
			const Scalar lead = scaled_[i] / std::pow(scale_, Scalar(i));
			Scalar binom = Scalar(1);
			for (Eigen::Index j = 0; j <= i; ++j)
			{
				raw[j] += lead * binom * std::pow(-origin_, Scalar(i - j));
				binom = binom * Scalar(i - j) / Scalar(j + 1);
			}
		}
		return raw;
	}

	Scalar intercept() const { return coefficients()[0]; }

private:
	VectorX<Scalar> scaled_;
	Scalar origin_ = Scalar(0);
	Scalar scale_ = Scalar(1);
};

/// OLS fit of `values` against powers 1..degree of `xs` plus an intercept.
/// Needs degree + 1 distinct abscissae.
template <typename DerivedX, typename DerivedY>
std::optional<PolynomialModel<typename DerivedX::Scalar>>
fit_polynomial_1d(const Eigen::MatrixBase<DerivedX> &xs, const Eigen::MatrixBase<DerivedY> &values,
				  std::size_t degree)
{
	using Scalar = typename DerivedX::Scalar;
	const Eigen::Index n = xs.size();
	const auto p = static_cast<Eigen::Index>(degree);
	if (degree < 1 || n < p + 1 || values.size() != n)
		return std::nullopt;

	std::vector<Scalar> distinct(static_cast<std::size_t>(n));
	for (Eigen::Index i = 0; i < n; ++i)
		distinct[static_cast<std::size_t>(i)] = xs[i];
	std::sort(distinct.begin(), distinct.end());
	distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
	if (static_cast<Eigen::Index>(distinct.size()) < p + 1)
		return std::nullopt;

	const Scalar origin = (distinct.front() + distinct.back()) / Scalar(2);
	const Scalar scale = (distinct.back() - distinct.front()) / Scalar(2);
	if (!(scale > Scalar(0)))
		return std::nullopt;

	MatrixX<Scalar> design(n, p + 1);
	for (Eigen::Index i = 0; i < n; ++i)
	{
		const Scalar u = (xs[i] - origin) / scale;
		Scalar power = Scalar(1);
		for (Eigen::Index j = 0; j <= p; ++j)
		{
			design(i, j) = power;
			power *= u;
		}
	}
	auto coef = ols_solve(design, values);
	if (!coef)
		return std::nullopt;
	return PolynomialModel<Scalar>(std::move(*coef), origin, scale);
}

/// Fit along coordinate `d` of each sample.
inline std::optional<PolynomialModel<double>>
fit_polynomial_1d(const std::vector<Sample> &samples, std::size_t d, std::size_t degree)
{
	const auto n = static_cast<Eigen::Index>(samples.size());
	Vector xs(n), values(n);
	for (Eigen::Index i = 0; i < n; ++i)
	{
		if (static_cast<std::size_t>(samples[i].x.size()) <= d)
			return std::nullopt;
		xs[i] = samples[i].x[d];
		values[i] = samples[i].value;
	}
	return fit_polynomial_1d(xs, values, degree);
}

inline constexpr std::size_t grid_points = 1000;

/// Grid minimiser of a 1-D model over [lower, upper] using `grid_points`
/// equally spaced points including both ends. Ties go to the smaller
/// coordinate. The grid is built symmetrically about the midpoint.
template <typename Model, typename Scalar>
Scalar poly_grid_min(const Model &model, Scalar lower, Scalar upper)
{
	if (!(lower < upper))
		return lower;
	const Scalar mid = (lower + upper) / Scalar(2);
	const Scalar half = (upper - lower) / Scalar(2);
	const auto last = static_cast<long>(grid_points - 1);
	Scalar best_x = lower;
	Scalar best_value = model(lower);
	for (long i = 1; i <= last; ++i)
	{
		const Scalar x = i == last ? upper : mid + half * Scalar(2 * i - last) / Scalar(last);
		const Scalar v = model(x);
		if (v < best_value)
		{
			best_value = v;
			best_x = x;
		}
	}
	return best_x;
}

} // namespace mgapso
