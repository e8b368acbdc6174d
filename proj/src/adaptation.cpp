#include "mgapso/adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgapso
{

BehaviorPool::BehaviorPool(BehaviorWeights initial, AdaptationParams params)
	: params_(params), initial_(initial), weights_(initial), average_(initial)
{
	for (std::size_t k = 0; k < behavior_count; ++k)
	{
		if (!(initial_[k] >= 0.0) || !std::isfinite(initial_[k]))
			throw ConfigError("behavior weights must be finite and non-negative");
		enabled_[k] = initial_[k] > 0.0;
		total_weight_ += initial_[k];
	}
	if (!(total_weight_ > 0.0))
		throw ConfigError("at least one behavior weight must be positive");
	if (!(params_.alpha >= 0.0 && params_.alpha <= 1.0))
		throw ConfigError("adaptation alpha must lie in [0, 1]");
	if (!(params_.floor > 0.0))
		throw ConfigError("adaptation floor must be positive");
	if (params_.equalization_horizon == 0)
		throw ConfigError("equalization horizon must be positive");
}

BehaviorKind BehaviorPool::sample(RngStream &rng)
{
	double total = 0.0;
	for (double w : weights_)
		total += w;
	const double u = rng.uniform() * total;
	double cumulative = 0.0;
	std::size_t chosen = behavior_count;
	for (std::size_t k = 0; k < behavior_count; ++k)
	{
		if (weights_[k] <= 0.0)
			continue;
		chosen = k;
		cumulative += weights_[k];
		if (u < cumulative)
			break;
	}
	if (chosen == behavior_count)
		throw std::logic_error("behavior pool has no positive weight");
	++usage_[chosen];
	return all_behaviors[chosen];
}

void BehaviorPool::reattribute_to_pso(BehaviorKind from)
{
	auto &count = usage_[index_of(from)];
	if (count > 0)
		--count;
	++usage_[index_of(BehaviorKind::Pso)];
}

void BehaviorPool::register_improvement(BehaviorKind k, double delta)
{
	if (delta > 0.0 && std::isfinite(delta))
		window_delta_[index_of(k)] += delta;
}

void BehaviorPool::equalize()
{
	std::size_t n = 0;
	for (bool e : enabled_)
		n += e;
	const double share = total_weight_ / static_cast<double>(n);
	for (std::size_t k = 0; k < behavior_count; ++k)
		average_[k] = enabled_[k] ? share : 0.0;
}

bool BehaviorPool::recompute()
{
	BehaviorWeights rate{};
	double total_rate = 0.0;
	for (std::size_t k = 0; k < behavior_count; ++k)
	{
		rate[k] = window_delta_[k] / static_cast<double>(std::max<std::size_t>(1, usage_[k]));
		total_rate += rate[k];
	}
	const bool improved = total_rate > 0.0;
	stall_ = improved ? 0 : stall_ + 1;

	if (params_.enabled)
	{
		if (improved)
		{
			for (std::size_t k = 0; k < behavior_count; ++k)
				if (enabled_[k])
					average_[k] = (1.0 - params_.alpha) * average_[k] +
								  params_.alpha * total_weight_ * (rate[k] / total_rate);
		}
		else if (stall_ >= params_.equalization_horizon)
			equalize();
		for (std::size_t k = 0; k < behavior_count; ++k)
			weights_[k] = enabled_[k] ? std::max(params_.floor, average_[k]) : 0.0;
	}

	window_delta_.fill(0.0);
	usage_.fill(0);
	return improved;
}

BehaviorWeights BehaviorPool::probabilities() const
{
	double total = 0.0;
	for (double w : weights_)
		total += w;
	BehaviorWeights p{};
	for (std::size_t k = 0; k < behavior_count; ++k)
		p[k] = weights_[k] / total;
	return p;
}

} // namespace mgapso
