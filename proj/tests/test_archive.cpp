#include <doctest.h>

#include <sstream>

#include "mgapso/archive.hpp"
#include "oracles.hpp"

using namespace mgapso;

namespace
{

Sample at(std::initializer_list<double> xs, double value)
{
	Vector x(static_cast<Eigen::Index>(xs.size()));
	Eigen::Index i = 0;
	for (double v : xs)
		x[i++] = v;
	return {x, value};
}

std::vector<Vector> positions(const std::vector<Sample> &s)
{
	std::vector<Vector> out;
	for (const auto &v : s)
		out.push_back(v.x);
	return out;
}

} // namespace

TEST_CASE("exact lookup is a cache")
{
	SampleArchive a(2);
	CHECK_FALSE(a.lookup_exact(at({0.0, 0.0}, 0).x));
	a.store(at({1.0, 2.0}, 5.0));
	const auto hit = a.lookup_exact(at({1.0, 2.0}, 0).x);
	REQUIRE(hit);
	CHECK(hit->value == 5.0);
	CHECK_FALSE(a.contains(at({1.0, 2.000001}, 0).x));

	a.store(at({1.0, 2.0}, 4.0));
	CHECK(a.size() == 1);
	CHECK(a.lookup_exact(at({1.0, 2.0}, 0).x)->value == 4.0);
}

TEST_CASE("nearest_to_point small example")
{
	SampleArchive a(2);
	a.store(at({0, 0}, 1));
	a.store(at({3, 0}, 2));
	a.store(at({0, 1}, 3));
	a.store(at({-1, 0}, 4));
	const auto nn = a.nearest_to_point(at({0, 0}, 0).x, 3);
	REQUIRE(nn.size() == 3);
	CHECK(nn[0].value == 1);
	// (0,1) and (-1,0) tie at distance 1; the older one comes first.
	CHECK(nn[1].value == 3);
	CHECK(nn[2].value == 4);

	CHECK(a.nearest_to_point(at({0, 0}, 0).x, 10).size() == 4);
	CHECK_THROWS_AS(SampleArchive(2).nearest_to_point(at({0, 0}, 0).x, 1), InsufficientSamples);
}

TEST_CASE("nearest_to_line ignores the free coordinate")
{
	SampleArchive a(2);
	a.store(at({100, 0.5}, 1));
	a.store(at({0, 2}, 2));
	a.store(at({-50, 0}, 3));
	const auto nn = a.nearest_to_line(at({0, 0}, 0).x, 0, 2);
	REQUIRE(nn.size() == 2);
	CHECK(nn[0].value == 3);
	CHECK(nn[1].value == 1);
}

TEST_CASE("kNN matches brute force on random archives")
{
	RngStream rng(11);
	for (int trial = 0; trial < 200; ++trial)
	{
		const std::size_t dim = 1 + rng.index(4);
		const bool lattice = trial % 2 == 0;
		SampleArchive a(dim);
		const std::size_t n = 1 + rng.index(300);
		for (std::size_t i = 0; i < n; ++i)
			a.store({oracle::random_point(rng, dim, lattice), rng.uniform()});
		REQUIRE(a.check_invariants());

		const Vector q = oracle::random_point(rng, dim, lattice);
		const std::size_t k = 1 + rng.index(20);
		const auto got = a.nearest_to_point(q, k);
		const auto want = oracle::brute_knn(a.samples(), k, [&](const Vector &x) {
			return oracle::point_distance(x, q);
		});
		REQUIRE(got.size() == want.size());
		for (std::size_t i = 0; i < got.size(); ++i)
			CHECK(got[i].x == a.samples()[want[i]].x);

		const std::size_t free_dim = rng.index(dim);
		const auto got_line = a.nearest_to_line(q, free_dim, k);
		const auto want_line = oracle::brute_knn(a.samples(), k, [&](const Vector &x) {
			return oracle::line_distance(x, q, free_dim);
		});
		REQUIRE(got_line.size() == want_line.size());
		for (std::size_t i = 0; i < got_line.size(); ++i)
			CHECK(got_line[i].x == a.samples()[want_line[i]].x);
	}
}

TEST_CASE("capacity overflow restarts the index")
{
	SampleArchive a(1, 3);
	for (int i = 0; i < 3; ++i)
		a.store(at({double(i)}, i));
	CHECK(a.size() == 3);
	CHECK(a.resets() == 0);
	a.store(at({1.0}, 9)); // overwrite, no growth
	CHECK(a.size() == 3);
	a.store(at({7.0}, 7));
	CHECK(a.resets() == 1);
	CHECK(a.size() == 1);
	CHECK(a.contains(at({7.0}, 0).x));
	CHECK_FALSE(a.contains(at({0.0}, 0).x));
}

TEST_CASE("csv dump and clear")
{
	SampleArchive a(2);
	a.store(at({1, 2}, 3));
	std::ostringstream os;
	a.write_csv(os);
	CHECK(os.str() == "x_1,x_2,value\n1,2,3\n");
	a.clear();
	CHECK(a.empty());
	CHECK(a.check_invariants());
	CHECK(positions(a.samples()).empty());
}

TEST_CASE("invariants hold under many inserts")
{
	RngStream rng(5);
	SampleArchive a(3);
	for (int i = 0; i < 2000; ++i)
	{
		a.store({oracle::random_point(rng, 3, false), 0.0});
		if (i % 250 == 0)
			REQUIRE(a.check_invariants());
	}
	CHECK(a.check_invariants());
	CHECK(a.size() == 2000);
}
