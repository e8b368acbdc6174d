#pragma once

#include <array>
#include <cstddef>

#include "mgapso/behaviors.hpp"
#include "mgapso/rng.hpp"

namespace mgapso
{

struct AdaptationParams
{
	bool enabled = false;
	double alpha = 0.1;					  // moving-average coefficient
	double floor = 1.0;					  // minimum weight of an enabled behavior
	std::size_t equalization_horizon = 50; // iterations without improvement
};

/// How behaviors reach particles: redrawn every iteration, or drawn once per
/// run segment and kept.
enum class AssignmentMode
{
	Mixed,
	Static,
};

using BehaviorWeights = std::array<double, behavior_count>;

/// Weighted behavior pool with improvement-driven adaptation.
///
/// Each behavior keeps a moving average (in weight units) of its share of the
/// per-use global-best improvement of the iteration. Behaviors with a zero
/// initial weight are disabled and stay at zero. After
/// `equalization_horizon` iterations with no improvement at all, every
/// enabled behavior gets the same weight.
class BehaviorPool
{
public:
	BehaviorPool(BehaviorWeights initial, AdaptationParams params = {});

	/// Roulette draw; counts one use of the drawn behavior.
	BehaviorKind sample(RngStream &rng);
	/// Counts a use without drawing (static assignment).
	void count_use(BehaviorKind k) { ++usage_[index_of(k)]; }
	/// Moves one counted use from `from` to PSO (model fallback).
	void reattribute_to_pso(BehaviorKind from);

	void register_improvement(BehaviorKind k, double delta);
	/// Closes the iteration window. Returns whether any improvement was seen.
	bool recompute();

	const BehaviorWeights &weights() const { return weights_; }
	const BehaviorWeights &moving_average() const { return average_; }
	const std::array<std::size_t, behavior_count> &usage() const { return usage_; }
	const BehaviorWeights &window_improvement() const { return window_delta_; }
	BehaviorWeights probabilities() const;
	std::size_t iterations_without_improvement() const { return stall_; }
	const AdaptationParams &params() const { return params_; }

private:
	void equalize();

	AdaptationParams params_;
	BehaviorWeights initial_;
	BehaviorWeights weights_;
	BehaviorWeights average_;
	BehaviorWeights window_delta_{};
	std::array<std::size_t, behavior_count> usage_{};
	std::array<bool, behavior_count> enabled_{};
	double total_weight_ = 0.0;
	std::size_t stall_ = 0;
};

} // namespace mgapso
