#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mgapso/archive.hpp"
#include "mgapso/core.hpp"
#include "mgapso/rng.hpp"

namespace mgapso
{

enum class BehaviorKind : std::size_t
{
	Pso = 0,
	De = 1,
	Quadratic = 2,
	Polynomial = 3,
};

inline constexpr std::size_t behavior_count = 4;
inline constexpr std::array<BehaviorKind, behavior_count> all_behaviors{
	BehaviorKind::Pso, BehaviorKind::De, BehaviorKind::Quadratic, BehaviorKind::Polynomial};

constexpr std::size_t index_of(BehaviorKind k) { return static_cast<std::size_t>(k); }
std::string_view name_of(BehaviorKind k);

struct PsoParams
{
	double c1 = 1.4;
	double c2 = 1.4;
	double omega = 0.64;
};

struct DeParams
{
	double crossover_probability = 0.9;
	double f_min = 0.0;
	double f_max = 1.4;
};

struct ModelParams
{
	std::size_t quadratic_k_per_dim = 5; // k = 5 * dim
	std::size_t polynomial_degree = 4;
	std::size_t polynomial_k_per_dim = 4; // k = 4 * dim + 1

	std::size_t quadratic_k(std::size_t dim) const { return quadratic_k_per_dim * dim; }
	std::size_t polynomial_k(std::size_t dim) const { return polynomial_k_per_dim * dim + 1; }
};

/// Result of a behavior: the new velocity and, for behaviors that propose a
/// point directly (DE and the models), that point. When `target` is set the
/// particle moves exactly onto it; velocity is `target - x`.
struct Move
{
	Vector velocity;
	std::optional<Vector> target;
};

/// Applies a move: position becomes target (or x + v), is clamped to
/// `bounds`, and velocity components of clamped coordinates are zeroed.
void apply_move(Particle &p, const Move &move, const Bounds &bounds);

// PSO (SPSO-2007 style update)

/// v' = omega v + c1 r1 (best - x) + c2 r2 (nb - x), with the social term
/// dropped when the particle is its own neighborhood best.
Vector pso_velocity(const Particle &p, const Sample &neighborhood_best, bool own_best,
					const PsoParams &params, const Vector &r1, const Vector &r2);
Vector pso_velocity(const Particle &p, const Sample &neighborhood_best, bool own_best,
					const PsoParams &params, RngStream &rng);

// DE/best/1/bin

/// Deterministic core: mutant = best + f (a - b); binomial crossover against
/// `target`, taking the mutant where uniforms[d] < cr or d == j_rand.
Vector de_trial(const Vector &target, const Vector &global_best, const Vector &a, const Vector &b,
				double f, double cr, std::size_t j_rand, const Vector &uniforms);

/// Draws r1 != r2 from `population` without `self_index`, F from
/// [f_min, f_max] and crosses against the particle's personal best.
/// Returns nothing when fewer than two donors are available.
std::optional<Vector> de_trial(const Particle &p, std::size_t self_index, const Sample &global_best,
							   const std::vector<Sample> &population, const DeParams &params,
							   RngStream &rng);

Vector de_velocity(const Particle &p, const Vector &trial);

// Model-based moves. Both return nothing when the archive cannot support a
// fit; the caller substitutes PSO.

/// Separable quadratic fitted to the k nearest samples to the personal best,
/// minimised per coordinate within `bounds`.
std::optional<Move> quadratic_move(const Particle &p, const SampleArchive &archive, std::size_t k,
								   const Bounds &bounds);

/// Per-coordinate degree-`degree` polynomial fitted to the k samples nearest
/// to the axis line through x, grid-minimised over the fitting range.
std::optional<Move> polynomial_move(const Particle &p, const SampleArchive &archive,
									std::size_t degree, std::size_t k, const Bounds &bounds);

} // namespace mgapso
