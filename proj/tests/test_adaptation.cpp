#include <doctest.h>

#include <cmath>

#include "mgapso/adaptation.hpp"
#include "mgapso/rng.hpp"

using namespace mgapso;

namespace
{

AdaptationParams on()
{
	AdaptationParams p;
	p.enabled = true;
	return p;
}

} // namespace

TEST_CASE("initial probabilities follow the weights")
{
	const BehaviorPool pool({1000, 1000, 1, 1});
	const auto p = pool.probabilities();
	CHECK(p[0] == doctest::Approx(1000.0 / 2002.0));
	CHECK(p[2] == doctest::Approx(1.0 / 2002.0));
}

TEST_CASE("single nonzero weight always wins")
{
	BehaviorPool pool({0, 3, 0, 0});
	RngStream rng(1);
	for (int i = 0; i < 1000; ++i)
		CHECK(pool.sample(rng) == BehaviorKind::De);
	CHECK(pool.usage()[1] == 1000);
	CHECK_THROWS_AS(BehaviorPool({0, 0, 0, 0}), ConfigError);
	CHECK_THROWS_AS(BehaviorPool({-1, 1, 0, 0}), ConfigError);
}

TEST_CASE("uniform weights draw within three sigma")
{
	BehaviorPool pool({1, 1, 1, 1});
	RngStream rng(17);
	const int n = 100000;
	std::array<int, 4> counts{};
	for (int i = 0; i < n; ++i)
		++counts[index_of(pool.sample(rng))];
	const double sigma = std::sqrt(n * 0.25 * 0.75);
	for (int c : counts)
		CHECK(std::abs(c - n * 0.25) <= 3.0 * sigma);
}

TEST_CASE("improvement registration")
{
	BehaviorPool pool({1, 1, 1, 1}, on());
	pool.register_improvement(BehaviorKind::De, -2.0);
	CHECK(pool.window_improvement()[1] == 0.0);
	pool.register_improvement(BehaviorKind::De, 10.0 - 7.0);
	CHECK(pool.window_improvement()[1] == 3.0);
	CHECK(pool.recompute());
	CHECK(pool.window_improvement()[1] == 0.0);
	CHECK_FALSE(pool.recompute());
}

TEST_CASE("equal improvers get equal averages")
{
	BehaviorPool pool({1000, 1000, 1, 1}, on());
	for (int it = 0; it < 30; ++it)
	{
		pool.count_use(BehaviorKind::Pso);
		pool.count_use(BehaviorKind::De);
		pool.register_improvement(BehaviorKind::Pso, 0.5);
		pool.register_improvement(BehaviorKind::De, 0.5);
		pool.recompute();
	}
	CHECK(pool.moving_average()[0] == doctest::Approx(pool.moving_average()[1]));
}

TEST_CASE("a persistent improver comes to dominate")
{
	BehaviorPool pool({1000, 1000, 1, 1}, on());
	RngStream rng(3);
	for (int it = 0; it < 100; ++it)
	{
		for (int i = 0; i < 20; ++i)
		{
			const auto k = pool.sample(rng);
			if (k == BehaviorKind::Quadratic)
				pool.register_improvement(k, 1.0);
		}
		// keep the stall counter at zero even when QUAD was not drawn
		pool.register_improvement(BehaviorKind::Quadratic, 1e-3);
		pool.recompute();
	}
	const auto p = pool.probabilities();
	CHECK(p[2] > p[0]);
	CHECK(p[2] > p[1]);
	CHECK(p[2] > p[3]);
}

TEST_CASE("stagnation equalizes enabled behaviors")
{
	BehaviorPool pool({1000, 1000, 1, 1}, on());
	for (std::size_t it = 0; it < pool.params().equalization_horizon; ++it)
		pool.recompute();
	const auto p = pool.probabilities();
	for (int k = 1; k < 4; ++k)
		CHECK(std::abs(p[k] - p[0]) <= 1e-12);

	BehaviorPool partial({1000, 1000, 0, 0}, on());
	for (std::size_t it = 0; it < 50; ++it)
		partial.recompute();
	CHECK(partial.probabilities()[0] == 0.5);
	CHECK(partial.probabilities()[2] == 0.0);
}

TEST_CASE("alpha zero and disabled adaptation freeze the weights")
{
	AdaptationParams frozen = on();
	frozen.alpha = 0.0;
	BehaviorPool a({1000, 1000, 1, 1}, frozen), b({1000, 1000, 1, 1});
	for (int it = 0; it < 20; ++it)
	{
		for (auto *pool : {&a, &b})
		{
			pool->count_use(BehaviorKind::De);
			pool->register_improvement(BehaviorKind::De, 5.0);
			pool->recompute();
		}
	}
	for (int k = 0; k < 4; ++k)
	{
		CHECK(a.probabilities()[k] == BehaviorPool({1000, 1000, 1, 1}).probabilities()[k]);
		CHECK(b.probabilities()[k] == a.probabilities()[k]);
	}
}

TEST_CASE("probabilities stay normalized and floored")
{
	BehaviorPool pool({1000, 1000, 1, 1}, on());
	RngStream rng(8);
	for (int it = 0; it < 500; ++it)
	{
		for (int i = 0; i < 10; ++i)
		{
			const auto k = pool.sample(rng);
			if (rng.uniform() < 0.1)
				pool.register_improvement(k, rng.uniform(0.0, 100.0));
		}
		pool.recompute();
		const auto p = pool.probabilities();
		double sum = 0.0, total = 0.0;
		for (double w : pool.weights())
			total += w;
		for (double v : p)
		{
			sum += v;
			CHECK(v >= pool.params().floor / total - 1e-15);
		}
		CHECK(std::abs(sum - 1.0) <= 1e-12);
	}
}

TEST_CASE("scaling deltas keeps the ranking")
{
	const auto drive = [](double scale) {
		BehaviorPool pool({1, 1, 1, 1}, on());
		for (int it = 0; it < 40; ++it)
		{
			for (auto k : all_behaviors)
				pool.count_use(k);
			pool.register_improvement(BehaviorKind::Pso, 1.0 * scale);
			pool.register_improvement(BehaviorKind::De, 3.0 * scale);
			pool.register_improvement(BehaviorKind::Polynomial, 2.0 * scale);
			pool.recompute();
		}
		return pool.probabilities();
	};
	const auto a = drive(1.0), b = drive(1e-6);
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j < 4; ++j)
			CHECK((a[i] < a[j]) == (b[i] < b[j]));
}

TEST_CASE("fallback usage moves to PSO")
{
	BehaviorPool pool({1, 1, 1, 1});
	pool.count_use(BehaviorKind::Polynomial);
	pool.reattribute_to_pso(BehaviorKind::Polynomial);
	CHECK(pool.usage()[3] == 0);
	CHECK(pool.usage()[0] == 1);
}
