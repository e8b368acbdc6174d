#include <doctest.h>

#include <cmath>

#include "mgapso/archive.hpp"
#include "mgapso/behaviors.hpp"
#include "mgapso/rng.hpp"

using namespace mgapso;

namespace
{

Vector vec(std::initializer_list<double> xs)
{
	Vector x(static_cast<Eigen::Index>(xs.size()));
	Eigen::Index i = 0;
	for (double v : xs)
		x[i++] = v;
	return x;
}

Particle particle(const Vector &x, const Vector &v, const Vector &best, double best_value = 0.0)
{
	return {x, v, {best, best_value}, {}};
}

} // namespace

TEST_CASE("pso velocity special cases")
{
	const Particle p = particle(vec({1, 2}), vec({0.5, -0.5}), vec({0, 0}));
	const Sample nb{vec({3, 3}), -1.0};
	const Vector ones = Vector::Ones(2);

	CHECK(pso_velocity(p, nb, false, {0.0, 0.0, 0.0}, ones, ones).isZero());

	const Particle still = particle(vec({1, 1}), vec({2, -4}), vec({1, 1}));
	const Vector v = pso_velocity(still, {vec({1, 1}), 0.0}, false, {1.4, 1.4, 0.64}, ones, ones);
	CHECK(v.isApprox(0.64 * vec({2, -4})));

	const Vector social = pso_velocity(p, nb, false, {0.0, 1.0, 0.0}, Vector::Zero(2), ones);
	CHECK(social.isApprox(nb.x - p.x));

	// own neighborhood best: no social pull
	const Vector own = pso_velocity(p, nb, true, {0.0, 1.0, 0.0}, Vector::Zero(2), ones);
	CHECK(own.isZero());
}

TEST_CASE("de trial deterministic core")
{
	const Vector best = vec({0, 0}), a = vec({1, 0}), b = vec({0, 1});
	const Vector target = vec({4, 4});
	CHECK(de_trial(target, best, a, b, 1.0, 1.0, 0, Vector::Zero(2)) == vec({1, -1}));
	CHECK(de_trial(target, vec({2, 3}), a, b, 0.0, 1.0, 1, Vector::Zero(2)) == vec({2, 3}));

	const Vector only_j = de_trial(target, best, a, b, 1.0, 0.0, 1, Vector::Constant(2, 0.5));
	CHECK(only_j[0] == 4.0);
	CHECK(only_j[1] == -1.0);
}

TEST_CASE("de trial with rng")
{
	RngStream rng(4);
	const Particle p = particle(vec({0.5, 0.5}), Vector::Zero(2), vec({0.25, 0.25}));
	const std::vector<Sample> pop{{vec({0, 0}), 0.0}, {vec({1, 0}), 1.0}, {vec({0, 1}), 1.0}};
	DeParams params;
	params.crossover_probability = 0.0;
	for (int i = 0; i < 50; ++i)
	{
		const auto t = de_trial(p, 0, pop[0], pop, params, rng);
		REQUIRE(t);
		// CR = 0: only j_rand may differ from the personal best
		int diff = 0;
		for (Eigen::Index d = 0; d < 2; ++d)
			diff += (*t)[d] != p.best.x[d];
		CHECK(diff <= 1);
	}
	const std::vector<Sample> tiny{{vec({0, 0}), 0.0}, {vec({1, 0}), 1.0}};
	CHECK_FALSE(de_trial(p, 0, tiny[0], tiny, params, rng));
}

TEST_CASE("de velocity is a difference")
{
	const Particle p = particle(vec({1, 1}), Vector::Zero(2), vec({1, 1}));
	CHECK(de_velocity(p, vec({3, 0})) == vec({2, -1}));
	CHECK(de_velocity(p, p.x).isZero());
}

TEST_CASE("apply move clamps and zeroes clamped velocity")
{
	const Bounds b = Bounds::cube(2, -5.0, 5.0);
	Particle p = particle(vec({4, 0}), Vector::Zero(2), vec({4, 0}));
	apply_move(p, {vec({3, 1}), std::nullopt}, b);
	CHECK(p.x == vec({5, 1}));
	CHECK(p.v == vec({0, 1}));

	apply_move(p, {vec({-1, -1}), vec({0.1, 0.2})}, b);
	CHECK(p.x == vec({0.1, 0.2}));
}

TEST_CASE("quadratic move on exact sphere samples goes to the optimum")
{
	RngStream rng(9);
	const std::size_t dim = 3;
	SampleArchive archive(dim);
	for (int i = 0; i < 40; ++i)
	{
		Vector x(3);
		for (auto &v : x)
			v = rng.uniform(-1.0, 1.0);
		archive.store({x, x.squaredNorm()});
	}
	const Particle p = particle(vec({0.3, -0.2, 0.1}), Vector::Zero(3), vec({0.3, -0.2, 0.1}));
	const auto m = quadratic_move(p, archive, 5 * dim, Bounds::cube(dim, -5.0, 5.0));
	REQUIRE(m);
	REQUIRE(m->target);
	CHECK(m->target->norm() < 1e-9);
	CHECK((m->velocity + p.x).norm() < 1e-9);

	SampleArchive small(dim);
	for (int i = 0; i < 6; ++i)
		small.store({Vector::Constant(3, double(i)), double(i)});
	CHECK_FALSE(quadratic_move(p, small, 15, Bounds::cube(dim, -5.0, 5.0)));
}

TEST_CASE("polynomial move on a separable quartic")
{
	// t = x - m: t^4 - 2 t^2 + 0.1 t, double well with a tilt
	const std::size_t dim = 3;
	const Vector centers = vec({0.3, -1.2, 2.0});
	const auto f = [&](const Vector &x) {
		double s = 0.0;
		for (Eigen::Index d = 0; d < x.size(); ++d)
		{
			const double t = x[d] - centers[d];
			s += t * t * t * t - 2.0 * t * t + 0.1 * t;
		}
		return s;
	};
	const Vector anchor = vec({0.0, 0.0, 0.0});
	SampleArchive archive(dim);
	const std::size_t k = 4 * dim + 1;
	for (Eigen::Index d = 0; d < 3; ++d)
		for (std::size_t i = 0; i < k; ++i)
		{
			Vector x = anchor;
			x[d] = centers[d] - 2.5 + 5.0 * double(i) / double(k - 1);
			archive.store({x, f(x)});
		}

	const Particle p = particle(anchor, Vector::Zero(3), anchor);
	const auto m = polynomial_move(p, archive, 4, k, Bounds::cube(dim, -5.0, 5.0));
	REQUIRE(m);
	for (Eigen::Index d = 0; d < 3; ++d)
	{
		// true minimiser of t^4 - 2 t^2 + 0.1 t by a dense scan
		double best_t = 0.0, best = 1e300;
		for (int i = 0; i <= 2000000; ++i)
		{
			const double t = -2.5 + 5.0 * i / 2000000.0;
			const double v = t * t * t * t - 2.0 * t * t + 0.1 * t;
			if (v < best)
			{
				best = v;
				best_t = t;
			}
		}
		CHECK(std::abs((*m->target)[d] - (centers[d] + best_t)) <= 5.0 / 999.0);
	}
}
