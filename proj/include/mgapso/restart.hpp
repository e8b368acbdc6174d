#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mgapso/core.hpp"

namespace mgapso
{

enum class RestartTrigger
{
	None,
	LocationSpread, // personal-best coordinates collapsed
	ValueSpread,	// personal-best values collapsed (frozen plateau)
	Stall,			// too many iterations without a global-best update
};

std::string_view name_of(RestartTrigger t);

struct RestartThresholds
{
	double eps_x = 1e-7;
	double eps_f = 1e-12;
	std::size_t max_stall_iterations = 50;
};

/// Configurable form; the absolute thresholds depend on the problem.
struct RestartParams
{
	double eps_x_relative = 1e-8;		 // times the largest full-bounds width
	double eps_f = 1e-12;
	std::size_t stall_iterations_per_dim = 10; // max stall = this * dim

	RestartThresholds resolve(const Bounds &full) const;
};

/// Largest per-coordinate range (max - min) over the personal bests.
double location_spread(const std::vector<Sample> &personal_bests);
/// max - min of the personal-best values.
double value_spread(const std::vector<Sample> &personal_bests);

/// First criterion that fires, in the order location, value, stall.
RestartTrigger restart_trigger(const std::vector<Sample> &personal_bests,
							   std::size_t iterations_since_improvement,
							   const RestartThresholds &thresholds);

/// Tracks global-best update intervals for one run segment.
class RestartManager
{
public:
	explicit RestartManager(RestartThresholds thresholds) : thresholds_(thresholds) {}

	void begin_segment() { since_improvement_ = 0; }
	void end_iteration(bool global_best_improved)
	{
		since_improvement_ = global_best_improved ? 0 : since_improvement_ + 1;
	}

	RestartTrigger check(const std::vector<Sample> &personal_bests) const
	{
		return restart_trigger(personal_bests, since_improvement_, thresholds_);
	}
	bool should_continue(const std::vector<Sample> &personal_bests) const
	{
		return check(personal_bests) == RestartTrigger::None;
	}

	std::size_t iterations_since_improvement() const { return since_improvement_; }
	const RestartThresholds &thresholds() const { return thresholds_; }

private:
	RestartThresholds thresholds_;
	std::size_t since_improvement_ = 0;
};

} // namespace mgapso
