#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mgapso/functions.hpp"
#include "mgapso/optimizer.hpp"

namespace mgapso
{

/// Bad command line or config file. The message names the offending key.
class UsageError : public ConfigError
{
	using ConfigError::ConfigError;
};

/// `--help` was given; `what()` holds the help text.
class HelpRequested : public std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Experiment matrix plus algorithm settings.
struct RunConfig
{
	std::vector<FunctionId> functions;
	std::vector<std::size_t> dims{2};
	std::vector<std::size_t> instances{1};
	std::uint64_t seed = 1;
	std::uint64_t budget = 0; // 0 means dim * 10^4 per run
	std::vector<double> targets = default_targets;
	OptimizerConfig algorithm;
	std::string output;
	std::size_t jobs = 1;

	/// Per-run seed derived from the master seed.
	std::uint64_t run_seed(FunctionId id, std::size_t dim, std::size_t instance) const;
	std::vector<RunSpec> schedule() const;
};

/// Default output directory: $MGAPSO_OUTPUT_DIR, else "mgapso_out".
std::string default_output_dir();

/// Overwrites `config.algorithm` fields with a named ablation setting:
/// PD, PDL, PDLP, PDLPr, PDa, PDnm. Matrix fields are left alone.
void apply_preset(RunConfig &config, std::string_view name);
const std::vector<std::string> &preset_names();

/// Sets one dotted key (`pso.omega`, `de.f_range`, ...) from text.
void apply_key(RunConfig &config, const std::string &key, const std::string &value);
const std::vector<std::string> &config_keys();

/// Flat `key = value` lines with `#` comments.
std::map<std::string, std::string> read_config_file(const std::string &path);

/// Defaults < preset < config file < command-line flags.
RunConfig parse_config(int argc, const char *const *argv);
/// Same precedence for already-split key/value maps (file, then flags).
RunConfig build_config(const std::map<std::string, std::string> &file_keys,
					   const std::map<std::string, std::string> &flag_keys);

/// Writes every key in a form `read_config_file` accepts.
void write_config(std::ostream &os, const RunConfig &config);

} // namespace mgapso
