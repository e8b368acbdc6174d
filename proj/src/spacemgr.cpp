#include "mgapso/spacemgr.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgapso
{

const Sample &OptimaLedger::best() const
{
	if (entries_.empty())
		throw std::logic_error("OptimaLedger::best on an empty ledger");
	return *std::min_element(entries_.begin(), entries_.end(),
							 [](const Sample &a, const Sample &b) { return a.value < b.value; });
}

void OptimaLedger::write_csv(std::ostream &os) const
{
	const Eigen::Index dim = entries_.empty() ? 0 : entries_.front().x.size();
	os << "restart_index";
	for (Eigen::Index d = 0; d < dim; ++d)
		os << ",x_" << (d + 1);
	os << ",value\n";
	for (std::size_t i = 0; i < entries_.size(); ++i)
	{
		os << i;
		for (Eigen::Index d = 0; d < dim; ++d)
			os << "," << format_double(entries_[i].x[d]);
		os << "," << format_double(entries_[i].value) << "\n";
	}
}

std::string_view name_of(InitStrategy s)
{
	switch (s)
	{
	case InitStrategy::Full:
		return "full";
	case InitStrategy::RandomBox:
		return "random_box";
	case InitStrategy::NearBest:
		return "near_best";
	}
	return "?";
}

Bounds box_between(const Vector &a, const Vector &b, const Bounds &full, double margin,
				   double min_half_width)
{
	const Vector lo = a.cwiseMin(b), hi = a.cwiseMax(b);
	const Vector grow = (margin * (hi - lo)).cwiseMax(min_half_width * full.width());
	return Bounds(lo - grow, hi + grow).intersect(full);
}

Bounds box_around(const Vector &center, const Bounds &full, double half_width)
{
	const Vector h = half_width * full.width();
	return Bounds(center - h, center + h).intersect(full);
}

BoundsChoice next_bounds(const OptimaLedger &ledger, const Bounds &full, const SpaceParams &params,
						 RngStream &rng)
{
	const auto &w = params.weights;
	const double total = w.full + w.random_box + w.near_best;
	if (!(w.full >= 0.0 && w.random_box >= 0.0 && w.near_best >= 0.0 && total > 0.0))
		throw ConfigError("initialization strategy weights must be non-negative with a positive sum");

	const double u = rng.uniform() * total;
	InitStrategy strategy = InitStrategy::Full;
	if (u >= w.full + w.random_box)
		strategy = w.near_best > 0.0 ? InitStrategy::NearBest : InitStrategy::RandomBox;
	else if (u >= w.full)
		strategy = InitStrategy::RandomBox;

	if (ledger.size() < 2 || strategy == InitStrategy::Full)
		return {InitStrategy::Full, full};

	if (strategy == InitStrategy::NearBest)
		return {strategy, box_around(ledger.best().x, full, params.near_best_half_width)};

	const std::size_t n = ledger.size();
	const std::size_t i = rng.index(n);
	std::size_t j = rng.index(n - 1);
	if (j >= i)
		++j;
	return {strategy, box_between(ledger.entries()[i].x, ledger.entries()[j].x, full,
								  params.random_box_margin, params.near_best_half_width)};
}

std::vector<std::size_t> ring_neighborhood(std::size_t i, std::size_t n)
{
	if (n <= 1)
		return {i};
	if (n == 2)
		return {i, 1 - i};
	return {(i + n - 1) % n, i, (i + 1) % n};
}

std::vector<Particle> init_swarm(const Bounds &bounds, std::size_t n, RngStream &rng,
								 const Evaluator &evaluate)
{
	if (n < 2)
		throw ConfigError("population size must be at least 2");
	const Eigen::Index dim = bounds.lower.size();
	std::vector<Particle> swarm(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		Vector x(dim);
		for (Eigen::Index d = 0; d < dim; ++d)
			x[d] = rng.uniform(bounds.lower[d], bounds.upper[d]);
		swarm[i].x = std::move(x);
		swarm[i].neighborhood = ring_neighborhood(i, n);
	}
	for (std::size_t i = 0; i < n; ++i)
	{
		std::size_t j = rng.index(n - 1);
		if (j >= i)
			++j;
		swarm[i].v = (swarm[i].x - swarm[j].x) / 2.0;
	}
	for (auto &p : swarm)
		p.best = evaluate(p.x);
	return swarm;
}

} // namespace mgapso
