#include "mgapso/record.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace mgapso
{

namespace
{
std::string fmt(double v) { return format_double(v); }

void write_key(std::ostream &os, const RunRecord &r)
{
	os << r.function << "," << r.instance << "," << r.dim;
}
} // namespace

bool RunRecord::solved(double target) const
{
	for (std::size_t t = 0; t < targets.size(); ++t)
		if (targets[t] == target)
			return first_hits[t].has_value();
	return best_precision() <= target;
}

std::vector<EcdfPoint> ecdf(const std::vector<RunRecord> &records, const std::vector<double> &targets,
							double step)
{
	if (records.empty())
		throw std::invalid_argument("ecdf: no records");
	if (!(step > 0.0))
		throw std::invalid_argument("ecdf: step must be positive");

	// First-hit cost per (record, target), in evaluations per dimension.
	std::vector<double> costs;
	double max_budget = 1.0;
	for (const auto &r : records)
	{
		max_budget = std::max(max_budget, static_cast<double>(r.budget) / static_cast<double>(r.dim));
		for (double target : targets)
		{
			std::optional<std::uint64_t> hit;
			for (std::size_t t = 0; t < r.targets.size(); ++t)
				if (r.targets[t] == target)
					hit = r.first_hits[t];
			costs.push_back(hit ? static_cast<double>(*hit) / static_cast<double>(r.dim)
								: std::numeric_limits<double>::infinity());
		}
	}
	std::sort(costs.begin(), costs.end());

	const double total = static_cast<double>(costs.size());
	const auto steps = static_cast<long>(std::ceil(std::log10(max_budget) / step - 1e-9));
	std::vector<EcdfPoint> curve;
	for (long i = 0; i <= std::max(0L, steps); ++i)
	{
		const double a = static_cast<double>(i) * step;
		const double limit = std::pow(10.0, a);
		const auto reached = std::upper_bound(costs.begin(), costs.end(), limit) - costs.begin();
		curve.push_back({a, static_cast<double>(reached) / total});
	}
	return curve;
}

void write_trajectory_header(std::ostream &os)
{
	os << "function,instance,dim,seed,eval_index,best_value\n";
}

void write_trajectory(std::ostream &os, const RunRecord &r)
{
	for (const auto &[evals, value] : r.trajectory)
	{
		write_key(os, r);
		os << "," << r.seed << "," << evals << "," << fmt(value) << "\n";
	}
}

void write_summary_header(std::ostream &os)
{
	os << "function,instance,dim,target,first_hit_evals\n";
}

void write_summary(std::ostream &os, const RunRecord &r)
{
	for (std::size_t t = 0; t < r.targets.size(); ++t)
	{
		write_key(os, r);
		os << "," << fmt(r.targets[t]) << ",";
		if (r.first_hits[t])
			os << *r.first_hits[t];
		os << "\n";
	}
}

void write_ecdf(std::ostream &os, const std::vector<EcdfPoint> &curve)
{
	os << "budget_per_dim_log10,fraction_solved\n";
	for (const auto &p : curve)
		os << fmt(p.log10_evals_per_dim) << "," << fmt(p.fraction) << "\n";
}

void write_shares_header(std::ostream &os)
{
	os << "function,instance,dim,iteration,P_PSO,P_DE,P_QUAD,P_POLY,improved\n";
}

void write_shares(std::ostream &os, const RunRecord &r)
{
	for (const auto &s : r.shares)
	{
		write_key(os, r);
		os << "," << s.iteration;
		for (double p : s.probabilities)
			os << "," << fmt(p);
		os << "," << (s.improved ? 1 : 0) << "\n";
	}
}

void write_restarts_header(std::ostream &os)
{
	os << "function,instance,dim,iteration,evaluations,trigger,best_value,next_init\n";
}

void write_restarts(std::ostream &os, const RunRecord &r)
{
	for (const auto &e : r.restarts)
	{
		write_key(os, r);
		os << "," << e.iteration << "," << e.evaluations << "," << name_of(e.trigger) << ","
		   << fmt(e.best_value) << "," << name_of(e.next_strategy) << "\n";
	}
}

void write_optima_header(std::ostream &os, std::size_t dim)
{
	os << "function,instance,dim,restart_index";
	for (std::size_t d = 0; d < dim; ++d)
		os << ",x_" << (d + 1);
	os << ",value\n";
}

void write_optima(std::ostream &os, const RunRecord &r)
{
	const auto &entries = r.optima.entries();
	for (std::size_t i = 0; i < entries.size(); ++i)
	{
		write_key(os, r);
		os << "," << i;
		for (Eigen::Index d = 0; d < entries[i].x.size(); ++d)
			os << "," << fmt(entries[i].x[d]);
		os << "," << fmt(entries[i].value) << "\n";
	}
}

} // namespace mgapso
