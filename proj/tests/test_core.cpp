#include <doctest.h>

#include <cmath>
#include <limits>

#include "mgapso/core.hpp"
#include "mgapso/rng.hpp"

using namespace mgapso;

namespace
{

class Quadratic : public ObjectiveFunction
{
public:
	using ObjectiveFunction::ObjectiveFunction;
	double result = 0.0;
	bool use_result = false;

protected:
	double value(const Vector &x) const override { return use_result ? result : x.squaredNorm(); }
};

} // namespace

TEST_CASE("bounds validate and contain")
{
	const Bounds b = Bounds::cube(3, -5.0, 5.0);
	CHECK(b.dim() == 3);
	CHECK(b.contains(Vector::Zero(3)));
	CHECK(b.contains(Vector::Constant(3, 5.0)));
	CHECK_FALSE(b.contains(Vector::Constant(3, 5.0001)));
	CHECK(b.width() == Vector::Constant(3, 10.0));
	CHECK_THROWS_AS(Bounds(Vector::Constant(2, 1.0), Vector::Constant(2, 0.0)), ConfigError);
	CHECK_THROWS_AS(Bounds(Vector::Zero(2), Vector::Zero(3)), ConfigError);

	const Bounds inner(Vector::Constant(3, -1.0), Vector::Constant(3, 7.0));
	const Bounds cut = b.intersect(inner);
	CHECK(cut.lower == Vector::Constant(3, -1.0));
	CHECK(cut.upper == Vector::Constant(3, 5.0));
	CHECK(b.contains(cut));
}

TEST_CASE("clamp projects coordinatewise")
{
	const Bounds b = Bounds::cube(2, -1.0, 1.0);
	Vector x(2);
	x << 3.0, -0.5;
	const Vector c = clamp(x, b);
	CHECK(c[0] == 1.0);
	CHECK(c[1] == -0.5);
}

TEST_CASE("objective counts evaluations and rejects non-finite values")
{
	Quadratic f(Bounds::cube(2, -1.0, 1.0));
	const Sample s = f.evaluate(Vector::Constant(2, 0.5));
	CHECK(s.value == doctest::Approx(0.5));
	CHECK(f.evaluations() == 1);

	f.use_result = true;
	f.result = std::numeric_limits<double>::quiet_NaN();
	CHECK_THROWS_AS(f.evaluate(Vector::Zero(2)), NonFiniteValueError);
	f.result = std::numeric_limits<double>::infinity();
	try
	{
		f.evaluate(Vector::Constant(2, 0.25));
		FAIL("expected a throw");
	}
	catch (const NonFiniteValueError &e)
	{
		CHECK(e.point() == Vector::Constant(2, 0.25));
	}
}

TEST_CASE("rng streams are reproducible and in range")
{
	RngStream a(7), b(7), c(8);
	bool differs = false;
	for (int i = 0; i < 1000; ++i)
	{
		const double u = a.uniform();
		CHECK(u == b.uniform());
		CHECK(u >= 0.0);
		CHECK(u < 1.0);
		differs |= u != c.uniform();
		const auto k = a.index(7);
		CHECK(k == b.index(7));
		CHECK(k < 7);
	}
	CHECK(differs);
	CHECK(mix_seed(1, 2) != mix_seed(2, 1));
}

TEST_CASE("normal draws have unit moments")
{
	RngStream rng(3);
	const int n = 200000;
	double sum = 0.0, sq = 0.0;
	for (int i = 0; i < n; ++i)
	{
		const double z = rng.normal();
		sum += z;
		sq += z * z;
	}
	const double mean = sum / n;
	CHECK(std::abs(mean) < 4.0 / std::sqrt(n));
	CHECK(std::abs(sq / n - 1.0) < 0.02);
}
