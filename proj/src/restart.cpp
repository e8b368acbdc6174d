#include "mgapso/restart.hpp"

#include <algorithm>

namespace mgapso
{

std::string_view name_of(RestartTrigger t)
{
	switch (t)
	{
	case RestartTrigger::None:
		return "none";
	case RestartTrigger::LocationSpread:
		return "location_spread";
	case RestartTrigger::ValueSpread:
		return "value_spread";
	case RestartTrigger::Stall:
		return "stall";
	}
	return "?";
}

RestartThresholds RestartParams::resolve(const Bounds &full) const
{
	return {eps_x_relative * full.width().maxCoeff(), eps_f, stall_iterations_per_dim * full.dim()};
}

double location_spread(const std::vector<Sample> &personal_bests)
{
	if (personal_bests.empty())
		return 0.0;
	Vector lo = personal_bests.front().x, hi = lo;
	for (const auto &s : personal_bests)
	{
		lo = lo.cwiseMin(s.x);
		hi = hi.cwiseMax(s.x);
	}
	return (hi - lo).maxCoeff();
}

double value_spread(const std::vector<Sample> &personal_bests)
{
	if (personal_bests.empty())
		return 0.0;
	const auto [lo, hi] = std::minmax_element(
		personal_bests.begin(), personal_bests.end(),
		[](const Sample &a, const Sample &b) { return a.value < b.value; });
	return hi->value - lo->value;
}

RestartTrigger restart_trigger(const std::vector<Sample> &personal_bests,
							   std::size_t iterations_since_improvement,
							   const RestartThresholds &thresholds)
{
	if (location_spread(personal_bests) < thresholds.eps_x)
		return RestartTrigger::LocationSpread;
	if (value_spread(personal_bests) < thresholds.eps_f)
		return RestartTrigger::ValueSpread;
	if (iterations_since_improvement > thresholds.max_stall_iterations)
		return RestartTrigger::Stall;
	return RestartTrigger::None;
}

} // namespace mgapso
