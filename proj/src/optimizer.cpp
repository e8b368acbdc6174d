#include "mgapso/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "mgapso/archive.hpp"

namespace mgapso
{

void OptimizerConfig::validate(std::size_t dim, std::uint64_t budget) const
{
	const std::size_t n = population_for(dim);
	if (dim == 0)
		throw ConfigError("dim: must be positive");
	if (n < 2)
		throw ConfigError("population: must be at least 2");
	if (budget < n)
		throw ConfigError("budget: must cover one initialization (" + std::to_string(n) +
						  " evaluations)");
	for (double w : behavior_weights)
		if (!(w >= 0.0) || !std::isfinite(w))
			throw ConfigError("weights: behavior weights must be finite and non-negative");
	if (behavior_weights[0] + behavior_weights[1] + behavior_weights[2] + behavior_weights[3] <= 0.0)
		throw ConfigError("weights: at least one behavior weight must be positive");
	if (!(de.crossover_probability >= 0.0 && de.crossover_probability <= 1.0))
		throw ConfigError("de.cr: must lie in [0, 1]");
	if (!(de.f_min <= de.f_max))
		throw ConfigError("de.f_range: lower end exceeds upper end");
	if (model.polynomial_degree < 2)
		throw ConfigError("model.poly_degree: must be at least 2");
	if (model.quadratic_k(dim) < 2 * dim + 1)
		throw ConfigError("model.quad_k_per_dim: k must be at least 2*dim+1");
	if (model.polynomial_k(dim) < model.polynomial_degree + 1)
		throw ConfigError("model.poly_k_per_dim: k must be at least degree+1");
	if (archive_capacity < std::max(model.quadratic_k(dim), model.polynomial_k(dim)))
		throw ConfigError("archive.capacity: smaller than a model's nearest-sample count");
	if (!(restart.eps_x_relative >= 0.0) || !(restart.eps_f >= 0.0))
		throw ConfigError("restart: thresholds must be non-negative");
	const auto &w = space.weights;
	if (!(w.full >= 0.0 && w.random_box >= 0.0 && w.near_best >= 0.0) ||
		w.full + w.random_box + w.near_best <= 0.0)
		throw ConfigError("init.weights: must be non-negative with a positive sum");
	if (!(adaptation.alpha >= 0.0 && adaptation.alpha <= 1.0))
		throw ConfigError("adaptation.alpha: must lie in [0, 1]");
	if (!(adaptation.floor > 0.0))
		throw ConfigError("adaptation.floor: must be positive");
	if (adaptation.equalization_horizon == 0)
		throw ConfigError("adaptation.horizon: must be positive");
}

namespace
{

struct StopRun
{
};

class Engine
{
public:
	Engine(ObjectiveFunction &f, const OptimizerConfig &config, std::uint64_t seed,
		   std::uint64_t budget, std::optional<double> optimum, const std::vector<double> &targets)
		: f_(f), config_(config), budget_(budget), optimum_(optimum), rng_(seed),
		  archive_(f.dim(), config.archive_capacity),
		  pool_(config.behavior_weights, config.adaptation),
		  restart_(config.restart.resolve(f.bounds())), n_(config.population_for(f.dim()))
	{
		record_.dim = f.dim();
		record_.seed = seed;
		record_.budget = budget;
		record_.optimum_value = optimum.value_or(std::numeric_limits<double>::quiet_NaN());
		record_.targets = targets;
		record_.first_hits.assign(targets.size(), std::nullopt);
		record_.best_value = std::numeric_limits<double>::infinity();
		tightest_ = targets.empty() ? -std::numeric_limits<double>::infinity()
									: *std::min_element(targets.begin(), targets.end());
	}

	RunRecord run()
	{
		try
		{
			optimize_segments();
		}
		catch (const StopRun &)
		{
		}
		record_.evaluations = f_.evaluations();
		if (config_.dump_archive)
		{
			std::ostringstream os;
			archive_.write_csv(os);
			record_.archive_csv = os.str();
		}
		record_.iterations = iteration_;
		return std::move(record_);
	}

private:
	Sample evaluate(const Vector &x)
	{
		if (f_.evaluations() >= budget_)
			throw StopRun{};
		Sample s = f_.evaluate(x);
		archive_.store(s);
		if (s.value < record_.best_value)
		{
			record_.best_value = s.value;
			record_.best_x = s.x;
			record_.trajectory.emplace_back(f_.evaluations(), s.value);
			if (optimum_)
			{
				const double precision = s.value - *optimum_;
				for (std::size_t t = 0; t < record_.targets.size(); ++t)
					if (!record_.first_hits[t] && precision <= record_.targets[t])
						record_.first_hits[t] = f_.evaluations();
				pending_stop_ = precision <= tightest_;
			}
		}
		return s;
	}

	/// Checked after the sample has been folded into the swarm state.
	void stop_if_solved()
	{
		if (pending_stop_)
			throw StopRun{};
	}

	void optimize_segments()
	{
		const Bounds &full = f_.bounds();
		Bounds bounds = full;
		OptimaLedger &ledger = record_.optima;
		while (true)
		{
			if (config_.reset_archive_on_restart)
				archive_.clear();

			swarm_ = init_swarm(bounds, n_, rng_, [this](const Vector &x) { return evaluate(x); });
			personal_bests_.clear();
			for (const auto &p : swarm_)
				personal_bests_.push_back(p.best);
			segment_best_ = *std::min_element(
				personal_bests_.begin(), personal_bests_.end(),
				[](const Sample &a, const Sample &b) { return a.value < b.value; });
			stop_if_solved();

			if (config_.assignment == AssignmentMode::Static)
			{
				assigned_.clear();
				for (std::size_t i = 0; i < n_; ++i)
					assigned_.push_back(pool_.sample(rng_));
			}

			restart_.begin_segment();
			RestartTrigger trigger;
			while ((trigger = restart_.check(personal_bests_)) == RestartTrigger::None)
				iterate();

			ledger.append(segment_best_);
			const BoundsChoice next = next_bounds(ledger, full, config_.space, rng_);
			record_.restarts.push_back(
				{iteration_, f_.evaluations(), trigger, segment_best_.value, next.strategy});
			bounds = next.bounds;
		}
	}

	std::size_t neighborhood_best(std::size_t i) const
	{
		std::size_t best = i;
		for (std::size_t j : swarm_[i].neighborhood)
			if (personal_bests_[j].value < personal_bests_[best].value)
				best = j;
		return best;
	}

	Move pso_move(std::size_t i)
	{
		const std::size_t nb = neighborhood_best(i);
		return {pso_velocity(swarm_[i], personal_bests_[nb], nb == i, config_.pso, rng_),
				std::nullopt};
	}

	/// Computes the move for particle i; `kind` is rewritten to PSO when a
	/// behavior cannot produce a proposal.
	Move compute_move(std::size_t i, BehaviorKind &kind)
	{
		const Particle &p = swarm_[i];
		std::optional<Move> move;
		switch (kind)
		{
		case BehaviorKind::Pso:
			return pso_move(i);
		case BehaviorKind::De:
			if (auto trial = de_trial(p, i, segment_best_, personal_bests_, config_.de, rng_))
				move = Move{de_velocity(p, *trial), std::move(*trial)};
			break;
		case BehaviorKind::Quadratic:
			move = quadratic_move(p, archive_, config_.model.quadratic_k(f_.dim()), f_.bounds());
			break;
		case BehaviorKind::Polynomial:
			move = polynomial_move(p, archive_, config_.model.polynomial_degree,
								   config_.model.polynomial_k(f_.dim()), f_.bounds());
			break;
		}
		if (move)
			return std::move(*move);
		++record_.model_fallbacks;
		pool_.reattribute_to_pso(kind);
		kind = BehaviorKind::Pso;
		return pso_move(i);
	}

	void iterate()
	{
		bool improved = false;
		for (std::size_t i = 0; i < n_; ++i)
		{
			BehaviorKind kind;
			if (config_.assignment == AssignmentMode::Mixed)
				kind = pool_.sample(rng_);
			else
			{
				kind = assigned_[i];
				pool_.count_use(kind);
			}
			const Move move = compute_move(i, kind);
			Particle &p = swarm_[i];
			apply_move(p, move, f_.bounds());

			Sample s;
			std::optional<Sample> cached;
			if (config_.use_cache)
				cached = archive_.lookup_exact(p.x);
			if (cached)
			{
				s = std::move(*cached);
				++record_.cache_hits;
			}
			else
				s = evaluate(p.x);

			pool_.register_improvement(kind, std::max(0.0, segment_best_.value - s.value));
			if (s.value < p.best.value)
			{
				p.best = s;
				personal_bests_[i] = s;
			}
			if (s.value < segment_best_.value)
			{
				segment_best_ = s;
				improved = true;
			}
			stop_if_solved();
		}
		pool_.recompute();
		record_.shares.push_back({iteration_, pool_.probabilities(), improved});
		restart_.end_iteration(improved);
		++iteration_;
	}

	ObjectiveFunction &f_;
	const OptimizerConfig &config_;
	std::uint64_t budget_;
	std::optional<double> optimum_;
	double tightest_;
	bool pending_stop_ = false;

	RngStream rng_;
	SampleArchive archive_;
	BehaviorPool pool_;
	RestartManager restart_;
	std::size_t n_;

	std::vector<Particle> swarm_;
	std::vector<Sample> personal_bests_;
	std::vector<BehaviorKind> assigned_;
	Sample segment_best_;
	std::size_t iteration_ = 0;

	RunRecord record_;
};

} // namespace

RunRecord optimize(ObjectiveFunction &f, const OptimizerConfig &config, std::uint64_t seed,
				   std::uint64_t budget, std::optional<double> optimum_value,
				   const std::vector<double> &targets)
{
	config.validate(f.dim(), budget);
	return Engine(f, config, seed, budget, optimum_value, targets).run();
}

RunRecord run(const OptimizerConfig &config, const RunSpec &spec)
{
	auto f = make_function(spec.function, spec.instance, spec.dim);
	RunRecord r = optimize(*f, config, spec.seed, spec.effective_budget(), f->optimum_value(),
						   spec.targets);
	r.function = std::string(name_of(spec.function));
	r.instance = spec.instance;
	return r;
}

} // namespace mgapso
