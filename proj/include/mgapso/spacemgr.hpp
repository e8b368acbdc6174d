#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string_view>
#include <vector>

#include "mgapso/core.hpp"
#include "mgapso/rng.hpp"

namespace mgapso
{

/// Best sample of every finished run segment, in completion order.
class OptimaLedger
{
public:
	void append(Sample s) { entries_.push_back(std::move(s)); }
	const std::vector<Sample> &entries() const { return entries_; }
	std::size_t size() const { return entries_.size(); }
	bool empty() const { return entries_.empty(); }
	/// Lowest-valued entry (first one on ties). Requires a non-empty ledger.
	const Sample &best() const;

	/// restart_index,x_1..x_dim,value
	void write_csv(std::ostream &os) const;

private:
	std::vector<Sample> entries_;
};

enum class InitStrategy
{
	Full,
	RandomBox,
	NearBest,
};

std::string_view name_of(InitStrategy s);

struct InitStrategyWeights
{
	double full = 0.5;
	double random_box = 0.3;
	double near_best = 0.2;
};

struct SpaceParams
{
	InitStrategyWeights weights;
	double random_box_margin = 0.1;	   // fraction of the box's own width, per side
	double near_best_half_width = 0.01; // fraction of the full width
};

struct BoundsChoice
{
	InitStrategy strategy = InitStrategy::Full;
	Bounds bounds;
};

/// Picks an initialization strategy at random and builds its box. The result
/// is always inside `full`; ledgers with fewer than two entries yield `full`.
BoundsChoice next_bounds(const OptimaLedger &ledger, const Bounds &full, const SpaceParams &params,
						 RngStream &rng);

/// Box spanned by two optima, grown by `margin` of its width on each side
/// (at least `min_half_width` of the full width) and cut to `full`.
Bounds box_between(const Vector &a, const Vector &b, const Bounds &full, double margin,
				   double min_half_width);
/// Cube of half-width `half_width * full width` around `center`, cut to `full`.
Bounds box_around(const Vector &center, const Bounds &full, double half_width);

using Evaluator = std::function<Sample(const Vector &)>;

/// Uniform positions in `bounds`, velocities (x_i - x_j) / 2 for a random
/// partner j != i, ring-3 neighborhoods, then every position is evaluated
/// and becomes the particle's personal best.
std::vector<Particle> init_swarm(const Bounds &bounds, std::size_t n, RngStream &rng,
								 const Evaluator &evaluate);

/// Ring topology: {i-1, i, i+1} modulo n.
std::vector<std::size_t> ring_neighborhood(std::size_t i, std::size_t n);

} // namespace mgapso
