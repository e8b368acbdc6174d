#include "mgapso/behaviors.hpp"

#include <algorithm>
#include <stdexcept>

#include "mgapso/models.hpp"

namespace mgapso
{

std::string_view name_of(BehaviorKind k)
{
	switch (k)
	{
	case BehaviorKind::Pso:
		return "PSO";
	case BehaviorKind::De:
		return "DE";
	case BehaviorKind::Quadratic:
		return "QUAD";
	case BehaviorKind::Polynomial:
		return "POLY";
	}
	return "?";
}

void apply_move(Particle &p, const Move &move, const Bounds &bounds)
{
	const Vector raw = move.target ? *move.target : Vector(p.x + move.velocity);
	Vector v = move.velocity;
	const Vector x = clamp(raw, bounds);
	for (Eigen::Index d = 0; d < x.size(); ++d)
		if (x[d] != raw[d])
			v[d] = 0.0;
	p.x = x;
	p.v = std::move(v);
}

Vector pso_velocity(const Particle &p, const Sample &neighborhood_best, bool own_best,
					const PsoParams &params, const Vector &r1, const Vector &r2)
{
	Vector v = params.omega * p.v +
			   params.c1 * r1.cwiseProduct(p.best.x - p.x);
	if (!own_best)
		v += params.c2 * r2.cwiseProduct(neighborhood_best.x - p.x);
	return v;
}

Vector pso_velocity(const Particle &p, const Sample &neighborhood_best, bool own_best,
					const PsoParams &params, RngStream &rng)
{
	const Eigen::Index dim = p.x.size();
	Vector r1(dim), r2(dim);
	for (Eigen::Index d = 0; d < dim; ++d)
		r1[d] = rng.uniform();
	for (Eigen::Index d = 0; d < dim; ++d)
		r2[d] = rng.uniform();
	return pso_velocity(p, neighborhood_best, own_best, params, r1, r2);
}

Vector de_trial(const Vector &target, const Vector &global_best, const Vector &a, const Vector &b,
				double f, double cr, std::size_t j_rand, const Vector &uniforms)
{
	Vector trial = target;
	for (Eigen::Index d = 0; d < trial.size(); ++d)
		if (uniforms[d] < cr || static_cast<std::size_t>(d) == j_rand)
			trial[d] = global_best[d] + f * (a[d] - b[d]);
	return trial;
}

std::optional<Vector> de_trial(const Particle &p, std::size_t self_index, const Sample &global_best,
							   const std::vector<Sample> &population, const DeParams &params,
							   RngStream &rng)
{
	std::vector<std::size_t> donors;
	donors.reserve(population.size());
	for (std::size_t i = 0; i < population.size(); ++i)
		if (i != self_index)
			donors.push_back(i);
	if (donors.size() < 2)
		return std::nullopt;

	const std::size_t first = rng.index(donors.size());
	std::size_t second = rng.index(donors.size() - 1);
	if (second >= first)
		++second;
	const double f = rng.uniform(params.f_min, params.f_max);
	const Eigen::Index dim = p.x.size();
	const auto j_rand = static_cast<std::size_t>(rng.index(static_cast<std::uint64_t>(dim)));
	Vector uniforms(dim);
	for (Eigen::Index d = 0; d < dim; ++d)
		uniforms[d] = rng.uniform();
	return de_trial(p.best.x, global_best.x, population[donors[first]].x,
					population[donors[second]].x, f, params.crossover_probability, j_rand, uniforms);
}

Vector de_velocity(const Particle &p, const Vector &trial) { return trial - p.x; }

std::optional<Move> quadratic_move(const Particle &p, const SampleArchive &archive, std::size_t k,
								   const Bounds &bounds)
{
	const std::size_t dim = archive.dim();
	if (archive.size() < 2 * dim + 1)
		return std::nullopt;
	const auto model = fit_quadratic(archive.nearest_to_point(p.best.x, k));
	if (!model)
		return std::nullopt;
	Vector peak = bounded_model_peak(*model, bounds.lower, bounds.upper);
	if (!peak.allFinite())
		return std::nullopt;
	return Move{peak - p.x, std::move(peak)};
}

std::optional<Move> polynomial_move(const Particle &p, const SampleArchive &archive,
									std::size_t degree, std::size_t k, const Bounds &bounds)
{
	const std::size_t dim = archive.dim();
	if (archive.empty() || archive.size() < k)
		return std::nullopt;
	Vector proposal(static_cast<Eigen::Index>(dim));
	for (std::size_t d = 0; d < dim; ++d)
	{
		const auto samples = archive.nearest_to_line(p.x, d, k);
		const auto model = fit_polynomial_1d(samples, d, degree);
		if (!model)
			return std::nullopt;
		double lo = samples.front().x[d], hi = lo;
		for (const auto &s : samples)
		{
			lo = std::min(lo, s.x[d]);
			hi = std::max(hi, s.x[d]);
		}
		proposal[d] = poly_grid_min(*model, lo, hi);
	}
	proposal = clamp(proposal, bounds);
	if (!proposal.allFinite())
		return std::nullopt;
	return Move{proposal - p.x, std::move(proposal)};
}

} // namespace mgapso
