#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mgapso/config.hpp"
#include "mgapso/record.hpp"

namespace mgapso
{

/// Outcome of one scheduled run: the record, or the error that aborted it.
struct RunOutcome
{
	RunSpec spec;
	RunRecord record;
	std::string error; // empty on success
};

/// Runs every scheduled (function, dim, instance) on up to `config.jobs`
/// threads. Results are in schedule order regardless of completion order.
std::vector<RunOutcome> run_matrix(const RunConfig &config);

/// Output file names inside the output directory.
struct OutputFiles
{
	static constexpr const char *trajectory = "trajectory.csv";
	static constexpr const char *summary = "summary.csv";
	static constexpr const char *ecdf = "ecdf.csv";
	static constexpr const char *shares = "behavior_shares.csv";
	static constexpr const char *restarts = "restarts.csv";
	static constexpr const char *optima = "optima.csv";
	static constexpr const char *config = "effective_config.cfg";
	static constexpr const char *status = "status.txt";
};

/// Runs the matrix and writes all outputs. Returns 0 iff every run completed
/// and every file was written; progress and errors go to `log`.
int run_experiment(const RunConfig &config, std::ostream &log);

} // namespace mgapso
