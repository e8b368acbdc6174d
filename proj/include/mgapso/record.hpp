#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mgapso/adaptation.hpp"
#include "mgapso/core.hpp"
#include "mgapso/restart.hpp"
#include "mgapso/spacemgr.hpp"

namespace mgapso
{

/// Precision targets (distance to the optimum value).
inline const std::vector<double> default_targets{1e1, 1e-1, 1e-4, 1e-8};

struct RestartEvent
{
	std::size_t iteration = 0;
	std::uint64_t evaluations = 0;
	RestartTrigger trigger = RestartTrigger::None;
	double best_value = 0.0; // segment best at restart
	InitStrategy next_strategy = InitStrategy::Full;
};

struct ShareEntry
{
	std::size_t iteration = 0;
	BehaviorWeights probabilities{};
	bool improved = false;
};

struct RunRecord
{
	std::string function;
	std::size_t instance = 0;
	std::size_t dim = 0;
	std::uint64_t seed = 0;
	std::uint64_t budget = 0;
	double optimum_value = 0.0;

	/// (evaluation index, best value so far); one entry per improvement.
	std::vector<std::pair<std::uint64_t, double>> trajectory;
	std::vector<double> targets;
	/// First evaluation index reaching each target, parallel to `targets`.
	std::vector<std::optional<std::uint64_t>> first_hits;

	std::vector<RestartEvent> restarts;
	std::vector<ShareEntry> shares;
	OptimaLedger optima;

	std::uint64_t evaluations = 0;
	std::uint64_t cache_hits = 0;
	std::uint64_t model_fallbacks = 0;
	std::size_t iterations = 0;
	double best_value = 0.0;
	Vector best_x;
	std::string archive_csv; // final archive contents, when requested

	double best_precision() const { return best_value - optimum_value; }
	bool solved(double target) const;
};

/// One point of a runtime profile.
struct EcdfPoint
{
	double log10_evals_per_dim = 0.0;
	double fraction = 0.0;
};

/// Fraction of (record, target) pairs reached within dim * 10^a evaluations,
/// for a = 0, step, 2 step, ... up to the largest budget in `records`.
std::vector<EcdfPoint> ecdf(const std::vector<RunRecord> &records, const std::vector<double> &targets,
							double step = 0.1);

// CSV writers. Doubles are written in shortest round-trip form.
void write_trajectory_header(std::ostream &os);
void write_trajectory(std::ostream &os, const RunRecord &r);
void write_summary_header(std::ostream &os);
void write_summary(std::ostream &os, const RunRecord &r);
void write_ecdf(std::ostream &os, const std::vector<EcdfPoint> &curve);
void write_shares_header(std::ostream &os);
void write_shares(std::ostream &os, const RunRecord &r);
void write_restarts_header(std::ostream &os);
void write_restarts(std::ostream &os, const RunRecord &r);
void write_optima_header(std::ostream &os, std::size_t dim);
void write_optima(std::ostream &os, const RunRecord &r);

} // namespace mgapso
