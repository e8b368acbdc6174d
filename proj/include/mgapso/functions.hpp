#pragma once

// Self-contained BBOB-style noiseless test functions.
//
// Every function lives on [-5, 5]^dim and is built per (function, instance,
// dim) from a seeded stream: optimum location, optimum value and, where the
// definition uses them, rotation matrices. Closed forms, with z the
// transformed coordinates, x_opt the optimum and f_opt the offset:
//
//   sphere            z = x - x_opt;  sum z_i^2
//   ellipsoid         z = Tosz(x - x_opt);  sum 10^(6 (i-1)/(D-1)) z_i^2
//   rastrigin         z = x - x_opt;  sum (10 + z_i^2 - 10 cos(2 pi z_i))
//   linear_slope      x_opt_i = 5 sign_i, s_i = sign_i 10^((i-1)/(D-1)),
//                     z_i = x_i if x_opt_i x_i < 25 else x_opt_i;
//                     sum (5 |s_i| - s_i z_i)
//   attractive_sector z = Q L R (x - x_opt), s_i = 100 if z_i x_opt_i > 0 else 1;
//                     Tosz(sum (s_i z_i)^2)^0.9
//   step_ellipsoid    y = L R (x - x_opt), y~_i = round(y_i) if |y_i| > 0.5
//                     else round(10 y_i) / 10, z = Q y~;
//                     0.1 max(|y_1| / 1e4, sum 10^(2 (i-1)/(D-1)) z_i^2) + pen(x)
//   rosenbrock        z = max(1, sqrt(D)/8) (x - x_opt) + 1;
//                     sum_{i<D} 100 (z_i^2 - z_{i+1})^2 + (z_i - 1)^2
//   schwefel          BBOB f20 form g(x); value g(x) - g(x_opt)
//
// with L = diag(10^(0.5 (i-1)/(D-1))) (conditioning 10), Q, R random
// rotations, pen(x) = sum max(0, |x_i| - 5)^2, and f_opt added to all.
// x_opt is uniform in [-4, 4]^D (rosenbrock: [-3, 3]^D; linear_slope and
// schwefel: sign-vector corners). f_opt is uniform in [-1000, 1000] rounded
// to 0.01.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mgapso/core.hpp"

namespace mgapso
{

enum class FunctionId
{
	Sphere,
	Ellipsoid,
	Rastrigin,
	LinearSlope,
	AttractiveSector,
	StepEllipsoid,
	Rosenbrock,
	Schwefel,
};

std::string_view name_of(FunctionId id);
FunctionId function_from_name(std::string_view name);
const std::vector<FunctionId> &all_functions();
const std::vector<std::size_t> &supported_dims();

class BenchFunction : public ObjectiveFunction
{
public:
	BenchFunction(FunctionId id, std::size_t instance, std::size_t dim);

	FunctionId id() const { return id_; }
	std::size_t instance() const { return instance_; }
	double optimum_value() const { return f_opt_; }
	const Vector &optimum() const { return x_opt_; }

	/// Uncounted evaluation (used by tests and for offset checks).
	double peek(const Vector &x) const { return value(x); }

protected:
	double value(const Vector &x) const override;

private:
	double raw(const Vector &x) const;

	FunctionId id_;
	std::size_t instance_;
	Vector x_opt_;
	double f_opt_ = 0.0;
	Matrix rot_q_;
	Matrix rot_r_;
	Vector sign_;
	double schwefel_shift_ = 0.0;
};

/// Instance seed of (function, instance, dim); independent of run seeds.
std::uint64_t instance_seed(FunctionId id, std::size_t instance, std::size_t dim);

std::unique_ptr<BenchFunction> make_function(FunctionId id, std::size_t instance, std::size_t dim);
std::unique_ptr<BenchFunction> make_function(std::string_view name, std::size_t instance,
											 std::size_t dim);

/// Oscillation transform T_osz applied to one coordinate.
double t_osz(double x);

} // namespace mgapso
