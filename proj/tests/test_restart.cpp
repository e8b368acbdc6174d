#include <doctest.h>

#include "mgapso/functions.hpp"
#include "mgapso/restart.hpp"
#include "mgapso/rng.hpp"

using namespace mgapso;

namespace
{

std::vector<Sample> swarm(RngStream &rng, std::size_t n, std::size_t dim, bool same_value)
{
	std::vector<Sample> out;
	for (std::size_t i = 0; i < n; ++i)
	{
		Vector x(static_cast<Eigen::Index>(dim));
		for (auto &v : x)
			v = rng.uniform(-5.0, 5.0);
		out.push_back({x, same_value ? 3.0 : rng.uniform()});
	}
	return out;
}

} // namespace

TEST_CASE("spreads")
{
	std::vector<Sample> s{{Vector::Zero(2), 1.0}, {Vector::Ones(2) * 2.0, 4.0}};
	s[1].x[1] = -1.0;
	CHECK(location_spread(s) == 2.0);
	CHECK(value_spread(s) == 3.0);
}

TEST_CASE("collapsed swarm restarts")
{
	const std::vector<Sample> same(5, Sample{Vector::Constant(3, 1.0), 2.0});
	CHECK(restart_trigger(same, 0, {}) == RestartTrigger::LocationSpread);
}

TEST_CASE("spread swarm continues")
{
	RngStream rng(1);
	const auto s = swarm(rng, 20, 3, false);
	RestartManager m({});
	m.end_iteration(true);
	CHECK(m.should_continue(s));
}

TEST_CASE("plateau triggers the value criterion")
{
	RngStream rng(2);
	const auto s = swarm(rng, 20, 3, true);
	CHECK(restart_trigger(s, 0, {}) == RestartTrigger::ValueSpread);
}

TEST_CASE("stall counter")
{
	RngStream rng(3);
	const auto s = swarm(rng, 20, 2, false);
	RestartManager m({1e-7, 1e-12, 4});
	std::size_t iterations = 0;
	while (m.should_continue(s))
	{
		m.end_iteration(false);
		++iterations;
	}
	CHECK(iterations == 5);
	CHECK(m.check(s) == RestartTrigger::Stall);
	m.begin_segment();
	CHECK(m.should_continue(s));
}

TEST_CASE("tighter thresholds never add restarts")
{
	RngStream rng(4);
	for (int trial = 0; trial < 300; ++trial)
	{
		auto s = swarm(rng, 6, 2, false);
		const double shrink = std::pow(10.0, -rng.uniform(0.0, 12.0));
		for (auto &v : s)
		{
			v.x *= shrink;
			v.value *= shrink;
		}
		const std::size_t since = rng.index(30);
		const RestartThresholds loose{rng.uniform(0.0, 1e-6), rng.uniform(0.0, 1e-6), 15};
		const RestartThresholds tight{loose.eps_x * 0.5, loose.eps_f * 0.5, 20};
		if (restart_trigger(s, since, loose) == RestartTrigger::None)
			CHECK(restart_trigger(s, since, tight) == RestartTrigger::None);
	}
}

TEST_CASE("thresholds scale with the domain")
{
	const RestartThresholds t = RestartParams{}.resolve(Bounds::cube(5, -5.0, 5.0));
	CHECK(t.eps_x == doctest::Approx(1e-7));
	CHECK(t.eps_f == 1e-12);
	CHECK(t.max_stall_iterations == 50);
}

TEST_CASE("step ellipsoid plateau")
{
	auto f = make_function(FunctionId::StepEllipsoid, 1, 5);
	// a plateau away from the optimum, where the rounded term dominates
	RngStream rng(6);
	std::vector<Sample> pbests;
	const Vector center = (f->optimum().array() + 1.3).min(5.0).matrix();
	for (int i = 0; i < 10; ++i)
	{
		Vector x = center;
		for (auto &v : x)
			v += rng.uniform(-1e-4, 1e-4);
		pbests.push_back({x, f->peek(x)});
	}
	CHECK(value_spread(pbests) == 0.0);
	CHECK(location_spread(pbests) > 1e-7);
	CHECK(restart_trigger(pbests, 0, RestartParams{}.resolve(f->bounds())) ==
		  RestartTrigger::ValueSpread);
}
