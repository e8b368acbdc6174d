#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mgapso/adaptation.hpp"
#include "mgapso/behaviors.hpp"
#include "mgapso/functions.hpp"
#include "mgapso/record.hpp"
#include "mgapso/restart.hpp"
#include "mgapso/spacemgr.hpp"

namespace mgapso
{

/// Algorithm settings. Every field has a usable default.
struct OptimizerConfig
{
	std::size_t population_per_dim = 10;
	std::size_t population = 0; // overrides population_per_dim when non-zero

	BehaviorWeights behavior_weights{1000.0, 1000.0, 1.0, 1.0};
	AssignmentMode assignment = AssignmentMode::Mixed;
	AdaptationParams adaptation;

	PsoParams pso;
	DeParams de;
	ModelParams model;

	RestartParams restart;
	SpaceParams space;

	std::size_t archive_capacity = SampleArchive::default_capacity;
	bool reset_archive_on_restart = true;
	bool use_cache = true;
	bool dump_archive = false; // keep the final archive as CSV in the record

	std::size_t population_for(std::size_t dim) const
	{
		return population != 0 ? population : population_per_dim * dim;
	}

	/// Throws ConfigError naming the offending setting.
	void validate(std::size_t dim, std::uint64_t budget) const;
};

struct RunSpec
{
	FunctionId function = FunctionId::Sphere;
	std::size_t dim = 2;
	std::size_t instance = 1;
	std::uint64_t seed = 1;
	std::uint64_t budget = 0; // 0 means dim * 10^4
	std::vector<double> targets = default_targets;

	std::uint64_t effective_budget() const { return budget != 0 ? budget : dim * 10000; }
};

/// Runs the full loop on an arbitrary objective until the budget is spent
/// or, when `optimum_value` is known, the tightest target is reached.
RunRecord optimize(ObjectiveFunction &f, const OptimizerConfig &config, std::uint64_t seed,
				   std::uint64_t budget, std::optional<double> optimum_value = std::nullopt,
				   const std::vector<double> &targets = default_targets);

/// Benchmark run: builds the function instance and calls `optimize`.
RunRecord run(const OptimizerConfig &config, const RunSpec &spec);

} // namespace mgapso
