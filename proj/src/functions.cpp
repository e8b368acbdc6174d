#include "mgapso/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mgapso/rng.hpp"

namespace mgapso
{

namespace
{
constexpr double domain = 5.0;

struct NamedFunction
{
	FunctionId id;
	std::string_view name;
};

constexpr NamedFunction function_names[] = {
	{FunctionId::Sphere, "sphere"},
	{FunctionId::Ellipsoid, "ellipsoid"},
	{FunctionId::Rastrigin, "rastrigin"},
	{FunctionId::LinearSlope, "linear_slope"},
	{FunctionId::AttractiveSector, "attractive_sector"},
	{FunctionId::StepEllipsoid, "step_ellipsoid"},
	{FunctionId::Rosenbrock, "rosenbrock"},
	{FunctionId::Schwefel, "schwefel"},
};

Matrix random_rotation(std::size_t dim, RngStream &rng)
{
	const auto n = static_cast<Eigen::Index>(dim);
	Matrix g(n, n);
	for (Eigen::Index i = 0; i < n; ++i)
		for (Eigen::Index j = 0; j < n; ++j)
			g(i, j) = rng.normal();
	Eigen::HouseholderQR<Matrix> qr(g);
	Matrix q = qr.householderQ() * Matrix::Identity(n, n);
	const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
	for (Eigen::Index j = 0; j < n; ++j)
		if (r(j, j) < 0.0)
			q.col(j) = -q.col(j);
	return q;
}

/// 10^(exponent * (i-1)/(D-1)); 1 for D == 1.
double ramp(double exponent, Eigen::Index i, Eigen::Index dim)
{
	if (dim <= 1)
		return 1.0;
	return std::pow(10.0, exponent * static_cast<double>(i) / static_cast<double>(dim - 1));
}

double boundary_penalty(const Vector &x)
{
	double pen = 0.0;
	for (Eigen::Index i = 0; i < x.size(); ++i)
	{
		const double over = std::abs(x[i]) - domain;
		if (over > 0.0)
			pen += over * over;
	}
	return pen;
}

double sign_draw(RngStream &rng) { return rng.uniform() < 0.5 ? -1.0 : 1.0; }
} // namespace

std::string_view name_of(FunctionId id)
{
	for (const auto &f : function_names)
		if (f.id == id)
			return f.name;
	return "?";
}

FunctionId function_from_name(std::string_view name)
{
	for (const auto &f : function_names)
		if (f.name == name)
			return f.id;
	throw ConfigError("unknown function '" + std::string(name) + "'");
}

const std::vector<FunctionId> &all_functions()
{
	static const std::vector<FunctionId> ids = [] {
		std::vector<FunctionId> v;
		for (const auto &f : function_names)
			v.push_back(f.id);
		return v;
	}();
	return ids;
}

const std::vector<std::size_t> &supported_dims()
{
	static const std::vector<std::size_t> dims{2, 3, 5, 10, 20, 40};
	return dims;
}

double t_osz(double x)
{
	if (x == 0.0)
		return 0.0;
	const double xh = std::log(std::abs(x));
	const double c1 = x > 0.0 ? 10.0 : 5.5;
	const double c2 = x > 0.0 ? 7.9 : 3.1;
	const double s = x > 0.0 ? 1.0 : -1.0;
	return s * std::exp(xh + 0.049 * (std::sin(c1 * xh) + std::sin(c2 * xh)));
}

std::uint64_t instance_seed(FunctionId id, std::size_t instance, std::size_t dim)
{
	return mix_seed(mix_seed(static_cast<std::uint64_t>(id) + 1, instance), dim);
}

BenchFunction::BenchFunction(FunctionId id, std::size_t instance, std::size_t dim)
	: ObjectiveFunction(Bounds::cube(dim, -domain, domain)), id_(id), instance_(instance)
{
	if (std::find(supported_dims().begin(), supported_dims().end(), dim) == supported_dims().end())
		throw ConfigError("unsupported dimension " + std::to_string(dim));
	if (instance < 1)
		throw ConfigError("instance numbers start at 1");

	RngStream rng(instance_seed(id, instance, dim));
	const auto n = static_cast<Eigen::Index>(dim);
	f_opt_ = std::round(rng.uniform(-1000.0, 1000.0) * 100.0) / 100.0;

	x_opt_.resize(n);
	switch (id)
	{
	case FunctionId::LinearSlope:
		for (Eigen::Index i = 0; i < n; ++i)
			x_opt_[i] = domain * sign_draw(rng);
		break;
	case FunctionId::Schwefel:
		sign_.resize(n);
		for (Eigen::Index i = 0; i < n; ++i)
		{
			sign_[i] = sign_draw(rng);
			x_opt_[i] = 0.5 * 4.2096874633 * sign_[i];
		}
		break;
	case FunctionId::Rosenbrock:
		for (Eigen::Index i = 0; i < n; ++i)
			x_opt_[i] = rng.uniform(-3.0, 3.0);
		break;
	default:
		for (Eigen::Index i = 0; i < n; ++i)
			x_opt_[i] = rng.uniform(-4.0, 4.0);
		break;
	}

	if (id == FunctionId::AttractiveSector || id == FunctionId::StepEllipsoid)
	{
		rot_r_ = random_rotation(dim, rng);
		rot_q_ = random_rotation(dim, rng);
	}
	if (id == FunctionId::Schwefel)
		schwefel_shift_ = raw(x_opt_);
}

double BenchFunction::raw(const Vector &x) const
{
	const Eigen::Index n = x.size();
	switch (id_)
	{
	case FunctionId::Sphere:
		return (x - x_opt_).squaredNorm();

	case FunctionId::Ellipsoid:
	{
		double s = 0.0;
		for (Eigen::Index i = 0; i < n; ++i)
		{
			const double z = t_osz(x[i] - x_opt_[i]);
			s += ramp(6.0, i, n) * z * z;
		}
		return s;
	}

	case FunctionId::Rastrigin:
	{
		double s = 0.0;
		for (Eigen::Index i = 0; i < n; ++i)
		{
			const double z = x[i] - x_opt_[i];
			s += 10.0 + z * z - 10.0 * std::cos(2.0 * std::numbers::pi * z);
		}
		return s;
	}

	case FunctionId::LinearSlope:
	{
		double s = 0.0;
		for (Eigen::Index i = 0; i < n; ++i)
		{
			const double si = (x_opt_[i] > 0.0 ? 1.0 : -1.0) * ramp(1.0, i, n);
			const double z = x_opt_[i] * x[i] < domain * domain ? x[i] : x_opt_[i];
			s += domain * std::abs(si) - si * z;
		}
		return s;
	}

	case FunctionId::AttractiveSector:
	{
		Vector y = rot_r_ * (x - x_opt_);
		for (Eigen::Index i = 0; i < n; ++i)
			y[i] *= ramp(0.5, i, n);
		const Vector z = rot_q_ * y;
		double s = 0.0;
		for (Eigen::Index i = 0; i < n; ++i)
		{
			const double scale = z[i] * x_opt_[i] > 0.0 ? 100.0 : 1.0;
			s += (scale * z[i]) * (scale * z[i]);
		}
		return std::pow(t_osz(s), 0.9);
	}

	case FunctionId::StepEllipsoid:
	{
		Vector y = rot_r_ * (x - x_opt_);
		for (Eigen::Index i = 0; i < n; ++i)
			y[i] *= ramp(0.5, i, n);
		Vector rounded(n);
		for (Eigen::Index i = 0; i < n; ++i)
			rounded[i] = std::abs(y[i]) > 0.5 ? std::floor(0.5 + y[i])
											   : std::floor(0.5 + 10.0 * y[i]) / 10.0;
		const Vector z = rot_q_ * rounded;
		double s = 0.0;
		for (Eigen::Index i = 0; i < n; ++i)
			s += ramp(2.0, i, n) * z[i] * z[i];
		return 0.1 * std::max(std::abs(y[0]) / 1e4, s) + boundary_penalty(x);
	}

	case FunctionId::Rosenbrock:
	{
		const double scale = std::max(1.0, std::sqrt(static_cast<double>(n)) / 8.0);
		const Vector z = (scale * (x - x_opt_)).array() + 1.0;
		double s = 0.0;
		for (Eigen::Index i = 0; i + 1 < n; ++i)
		{
			const double a = z[i] * z[i] - z[i + 1];
			const double b = z[i] - 1.0;
			s += 100.0 * a * a + b * b;
		}
		return s;
	}

	case FunctionId::Schwefel:
	{
		const Vector two_abs_opt = 2.0 * x_opt_.cwiseAbs();
		const Vector xh = 2.0 * sign_.cwiseProduct(x);
		Vector zh = xh;
		for (Eigen::Index i = 1; i < n; ++i)
			zh[i] = xh[i] + 0.25 * (xh[i - 1] - two_abs_opt[i - 1]);
		Vector z(n);
		for (Eigen::Index i = 0; i < n; ++i)
			z[i] = 100.0 * (ramp(0.5, i, n) * (zh[i] - two_abs_opt[i]) + two_abs_opt[i]);
		double s = 0.0;
		for (Eigen::Index i = 0; i < n; ++i)
			s += z[i] * std::sin(std::sqrt(std::abs(z[i])));
		return -s / (100.0 * static_cast<double>(n)) + 4.189828872724339 +
			   100.0 * boundary_penalty(z / 100.0);
	}
	}
	return 0.0;
}

double BenchFunction::value(const Vector &x) const
{
	if (id_ == FunctionId::Schwefel)
		return raw(x) - schwefel_shift_ + f_opt_;
	return raw(x) + f_opt_;
}

std::unique_ptr<BenchFunction> make_function(FunctionId id, std::size_t instance, std::size_t dim)
{
	return std::make_unique<BenchFunction>(id, instance, dim);
}

std::unique_ptr<BenchFunction> make_function(std::string_view name, std::size_t instance,
											 std::size_t dim)
{
	return make_function(function_from_name(name), instance, dim);
}

} // namespace mgapso
