#include "mgapso/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

namespace mgapso
{

namespace
{

std::string trim(std::string_view s)
{
	const auto first = s.find_first_not_of(" \t\r\n");
	if (first == std::string_view::npos)
		return {};
	const auto last = s.find_last_not_of(" \t\r\n");
	return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string &s, char sep)
{
	std::vector<std::string> parts;
	std::string current;
	std::istringstream is(s);
	while (std::getline(is, current, sep))
		parts.push_back(trim(current));
	if (!s.empty() && s.back() == sep)
		parts.emplace_back();
	return parts;
}

[[noreturn]] void bad(const std::string &key, const std::string &value, const std::string &what)
{
	throw UsageError(key + ": " + what + " (got '" + value + "')");
}

std::uint64_t parse_uint(const std::string &key, const std::string &value)
{
	std::uint64_t out = 0;
	const std::string v = trim(value);
	const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
	if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
		bad(key, value, "expected a non-negative integer");
	return out;
}

std::size_t parse_positive(const std::string &key, const std::string &value)
{
	const auto v = parse_uint(key, value);
	if (v == 0)
		bad(key, value, "expected a positive integer");
	return static_cast<std::size_t>(v);
}

double parse_double(const std::string &key, const std::string &value)
{
	const std::string v = trim(value);
	if (v.empty())
		bad(key, value, "expected a number");
	char *end = nullptr;
	errno = 0;
	const double out = std::strtod(v.c_str(), &end);
	if (end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(out))
		bad(key, value, "expected a finite number");
	return out;
}

double parse_non_negative(const std::string &key, const std::string &value)
{
	const double v = parse_double(key, value);
	if (v < 0.0)
		bad(key, value, "must be non-negative");
	return v;
}

double parse_probability(const std::string &key, const std::string &value)
{
	const double v = parse_double(key, value);
	if (v < 0.0 || v > 1.0)
		bad(key, value, "must lie in [0, 1]");
	return v;
}

bool parse_bool(const std::string &key, const std::string &value)
{
	std::string v = trim(value);
	std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
	if (v == "on" || v == "true" || v == "1" || v == "yes")
		return true;
	if (v == "off" || v == "false" || v == "0" || v == "no")
		return false;
	bad(key, value, "expected on/off");
}

std::vector<double> parse_doubles(const std::string &key, const std::string &value, char sep,
								  std::size_t count)
{
	const auto parts = split(value, sep);
	if (count != 0 && parts.size() != count)
		bad(key, value, "expected " + std::to_string(count) + " values separated by '" + sep + "'");
	std::vector<double> out;
	for (const auto &p : parts)
		out.push_back(parse_double(key, p));
	return out;
}

/// "1-15", "2,5,10" or a mix.
std::vector<std::size_t> parse_index_list(const std::string &key, const std::string &value)
{
	std::vector<std::size_t> out;
	for (const auto &part : split(value, ','))
	{
		const auto dash = part.find('-');
		if (dash != std::string::npos && dash > 0)
		{
			const auto lo = parse_positive(key, part.substr(0, dash));
			const auto hi = parse_positive(key, part.substr(dash + 1));
			if (lo > hi)
				bad(key, value, "empty range");
			for (std::size_t i = lo; i <= hi; ++i)
				out.push_back(i);
		}
		else
			out.push_back(parse_positive(key, part));
	}
	if (out.empty())
		bad(key, value, "expected at least one value");
	return out;
}

std::string fmt(double v) { return format_double(v); }

template <typename T, typename F>
std::string join(const std::vector<T> &v, F &&to_string, char sep = ',')
{
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i)
	{
		if (i)
			out += sep;
		out += to_string(v[i]);
	}
	return out;
}

struct FlagKey
{
	const char *flag;
	const char *key;
	const char *help;
};

// Command-line spelling of every config key.
const FlagKey flag_table[] = {
	{"--function", "function", "function name(s), comma separated"},
	{"--dim", "dim", "dimension(s), e.g. 5 or 2,5,10"},
	{"--instances", "instances", "instance list or range, e.g. 1-15"},
	{"--seed", "seed", "master seed"},
	{"--budget", "budget", "evaluations per run (0 = dim * 10^4)"},
	{"--targets", "targets", "precision targets, comma separated"},
	{"--output", "output", "output directory"},
	{"--jobs", "jobs", "parallel runs"},
	{"--population", "population", "population size (0 = population_per_dim * dim)"},
	{"--population-per-dim", "population_per_dim", "population per dimension"},
	{"--weights", "weights", "behavior weights pso:de:quad:poly"},
	{"--assignment", "assignment", "mixed | static"},
	{"--adaptation", "adaptation.enabled", "on | off"},
	{"--adaptation-alpha", "adaptation.alpha", "moving-average coefficient"},
	{"--adaptation-floor", "adaptation.floor", "minimum weight of an enabled behavior"},
	{"--adaptation-horizon", "adaptation.horizon", "iterations without improvement before equalizing"},
	{"--pso-c1", "pso.c1", "PSO cognitive factor"},
	{"--pso-c2", "pso.c2", "PSO social factor"},
	{"--pso-omega", "pso.omega", "PSO inertia"},
	{"--de-cr", "de.cr", "DE crossover probability"},
	{"--de-f-range", "de.f_range", "DE scaling factor range lo:hi"},
	{"--quad-k-per-dim", "model.quad_k_per_dim", "quadratic model samples per dimension"},
	{"--poly-degree", "model.poly_degree", "polynomial model degree"},
	{"--poly-k-per-dim", "model.poly_k_per_dim", "polynomial model samples per dimension (k = this*dim+1)"},
	{"--restart-eps-x", "restart.eps_x", "location spread threshold, relative to the domain width"},
	{"--restart-eps-f", "restart.eps_f", "value spread threshold"},
	{"--restart-stall-per-dim", "restart.stall_per_dim", "iterations without improvement per dimension"},
	{"--init-weights", "init.weights", "initialization strategy weights full:random_box:near_best"},
	{"--init-box-margin", "init.box_margin", "random box margin (fraction of its width)"},
	{"--init-near-best-width", "init.near_best_width", "near-best half width (fraction of domain)"},
	{"--archive-capacity", "archive.capacity", "samples archive capacity"},
	{"--archive-reset", "archive.reset_on_restart", "clear archive on restart: on | off"},
	{"--cache", "cache", "use the archive as an evaluation cache: on | off"},
	{"--dump-archive", "dump_archive", "write the final samples archive per run: on | off"},
};

} // namespace

std::uint64_t RunConfig::run_seed(FunctionId id, std::size_t dim, std::size_t instance) const
{
	return mix_seed(seed, instance_seed(id, instance, dim));
}

std::vector<RunSpec> RunConfig::schedule() const
{
	std::vector<RunSpec> specs;
	for (FunctionId id : functions)
		for (std::size_t dim : dims)
			for (std::size_t instance : instances)
				specs.push_back({id, dim, instance, run_seed(id, dim, instance), budget, targets});
	return specs;
}

std::string default_output_dir()
{
	if (const char *env = std::getenv("MGAPSO_OUTPUT_DIR"); env && *env)
		return env;
	return "mgapso_out";
}

const std::vector<std::string> &preset_names()
{
	static const std::vector<std::string> names{"PD", "PDL", "PDLP", "PDLPr", "PDa", "PDnm"};
	return names;
}

void apply_preset(RunConfig &config, std::string_view name)
{
	OptimizerConfig &a = config.algorithm;
	const InitStrategyWeights full_only{1.0, 0.0, 0.0};
	const InitStrategyWeights guided{};
	a.assignment = AssignmentMode::Mixed;
	a.adaptation.enabled = false;
	a.space.weights = full_only;
	if (name == "PD")
		a.behavior_weights = {1000.0, 1000.0, 0.0, 0.0};
	else if (name == "PDL")
		a.behavior_weights = {1000.0, 1000.0, 1.0, 0.0};
	else if (name == "PDLP")
		a.behavior_weights = {1000.0, 1000.0, 1.0, 1.0};
	else if (name == "PDLPr")
	{
		a.behavior_weights = {1000.0, 1000.0, 1.0, 1.0};
		a.space.weights = guided;
	}
	else if (name == "PDa")
	{
		a.behavior_weights = {1000.0, 1000.0, 0.0, 0.0};
		a.adaptation.enabled = true;
	}
	else if (name == "PDnm")
	{
		a.behavior_weights = {1000.0, 1000.0, 0.0, 0.0};
		a.assignment = AssignmentMode::Static;
	}
	else
		throw UsageError("preset: unknown preset '" + std::string(name) + "'");
}

const std::vector<std::string> &config_keys()
{
	static const std::vector<std::string> keys = [] {
		std::vector<std::string> k;
		for (const auto &f : flag_table)
			k.emplace_back(f.key);
		return k;
	}();
	return keys;
}

void apply_key(RunConfig &c, const std::string &key, const std::string &value)
{
	OptimizerConfig &a = c.algorithm;
	if (key == "function")
	{
		c.functions.clear();
		for (const auto &name : split(value, ','))
		{
			try
			{
				c.functions.push_back(function_from_name(name));
			}
			catch (const ConfigError &)
			{
				bad(key, value, "unknown function '" + name + "'");
			}
		}
		if (c.functions.empty())
			bad(key, value, "expected at least one function");
	}
	else if (key == "dim")
	{
		c.dims = parse_index_list(key, value);
		for (std::size_t d : c.dims)
			if (std::find(supported_dims().begin(), supported_dims().end(), d) == supported_dims().end())
				bad(key, value, "supported dimensions are 2, 3, 5, 10, 20, 40");
	}
	else if (key == "instances")
		c.instances = parse_index_list(key, value);
	else if (key == "seed")
		c.seed = parse_uint(key, value);
	else if (key == "budget")
		c.budget = parse_uint(key, value);
	else if (key == "targets")
	{
		c.targets = parse_doubles(key, value, ',', 0);
		for (double t : c.targets)
			if (!(t > 0.0))
				bad(key, value, "targets must be positive");
	}
	else if (key == "output")
		c.output = trim(value);
	else if (key == "jobs")
		c.jobs = parse_positive(key, value);
	else if (key == "dump_archive")
		c.algorithm.dump_archive = parse_bool(key, value);
	else if (key == "population")
	{
		a.population = parse_uint(key, value);
		if (a.population == 1)
			bad(key, value, "must be at least 2");
	}
	else if (key == "population_per_dim")
		a.population_per_dim = parse_positive(key, value);
	else if (key == "weights")
	{
		const auto w = parse_doubles(key, value, ':', behavior_count);
		for (std::size_t k = 0; k < behavior_count; ++k)
		{
			if (w[k] < 0.0)
				bad(key, value, "weights must be non-negative");
			a.behavior_weights[k] = w[k];
		}
		if (w[0] + w[1] + w[2] + w[3] <= 0.0)
			bad(key, value, "at least one weight must be positive");
	}
	else if (key == "assignment")
	{
		const std::string v = trim(value);
		if (v == "mixed")
			a.assignment = AssignmentMode::Mixed;
		else if (v == "static")
			a.assignment = AssignmentMode::Static;
		else
			bad(key, value, "expected mixed or static");
	}
	else if (key == "adaptation.enabled")
		a.adaptation.enabled = parse_bool(key, value);
	else if (key == "adaptation.alpha")
		a.adaptation.alpha = parse_probability(key, value);
	else if (key == "adaptation.floor")
	{
		a.adaptation.floor = parse_double(key, value);
		if (!(a.adaptation.floor > 0.0))
			bad(key, value, "must be positive");
	}
	else if (key == "adaptation.horizon")
		a.adaptation.equalization_horizon = parse_positive(key, value);
	else if (key == "pso.c1")
		a.pso.c1 = parse_double(key, value);
	else if (key == "pso.c2")
		a.pso.c2 = parse_double(key, value);
	else if (key == "pso.omega")
		a.pso.omega = parse_double(key, value);
	else if (key == "de.cr")
		a.de.crossover_probability = parse_probability(key, value);
	else if (key == "de.f_range")
	{
		const auto r = parse_doubles(key, value, ':', 2);
		if (r[0] > r[1])
			bad(key, value, "lower end exceeds upper end");
		a.de.f_min = r[0];
		a.de.f_max = r[1];
	}
	else if (key == "model.quad_k_per_dim")
		a.model.quadratic_k_per_dim = parse_positive(key, value);
	else if (key == "model.poly_degree")
	{
		a.model.polynomial_degree = parse_positive(key, value);
		if (a.model.polynomial_degree < 2)
			bad(key, value, "must be at least 2");
	}
	else if (key == "model.poly_k_per_dim")
		a.model.polynomial_k_per_dim = parse_positive(key, value);
	else if (key == "restart.eps_x")
		a.restart.eps_x_relative = parse_non_negative(key, value);
	else if (key == "restart.eps_f")
		a.restart.eps_f = parse_non_negative(key, value);
	else if (key == "restart.stall_per_dim")
		a.restart.stall_iterations_per_dim = parse_positive(key, value);
	else if (key == "init.weights")
	{
		const auto w = parse_doubles(key, value, ':', 3);
		if (w[0] < 0.0 || w[1] < 0.0 || w[2] < 0.0 || w[0] + w[1] + w[2] <= 0.0)
			bad(key, value, "weights must be non-negative with a positive sum");
		a.space.weights = {w[0], w[1], w[2]};
	}
	else if (key == "init.box_margin")
		a.space.random_box_margin = parse_non_negative(key, value);
	else if (key == "init.near_best_width")
	{
		a.space.near_best_half_width = parse_double(key, value);
		if (!(a.space.near_best_half_width > 0.0))
			bad(key, value, "must be positive");
	}
	else if (key == "archive.capacity")
		a.archive_capacity = parse_positive(key, value);
	else if (key == "archive.reset_on_restart")
		a.reset_archive_on_restart = parse_bool(key, value);
	else if (key == "cache")
		a.use_cache = parse_bool(key, value);
	else
		throw UsageError(key + ": unknown key");
}

std::map<std::string, std::string> read_config_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw UsageError("config: cannot read '" + path + "'");
	std::map<std::string, std::string> keys;
	std::string line;
	std::size_t number = 0;
	while (std::getline(in, line))
	{
		++number;
		if (const auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		const std::string t = trim(line);
		if (t.empty())
			continue;
		const auto eq = t.find('=');
		if (eq == std::string::npos)
			throw UsageError("config: line " + std::to_string(number) + " is not 'key = value'");
		const std::string key = trim(t.substr(0, eq));
		if (key != "preset" && std::find(config_keys().begin(), config_keys().end(), key) ==
								   config_keys().end())
			throw UsageError(key + ": unknown key (config line " + std::to_string(number) + ")");
		keys[key] = trim(t.substr(eq + 1));
	}
	return keys;
}

RunConfig build_config(const std::map<std::string, std::string> &file_keys,
					   const std::map<std::string, std::string> &flag_keys)
{
	std::map<std::string, std::string> merged = file_keys;
	for (const auto &[k, v] : flag_keys)
		merged[k] = v;

	RunConfig c;
	c.output = default_output_dir();
	if (const auto it = merged.find("preset"); it != merged.end())
	{
		apply_preset(c, trim(it->second));
		merged.erase(it);
	}
	// Fixed key order so later keys never depend on map ordering.
	for (const auto &key : config_keys())
		if (const auto it = merged.find(key); it != merged.end())
		{
			apply_key(c, key, it->second);
			merged.erase(it);
		}
	if (!merged.empty())
		throw UsageError(merged.begin()->first + ": unknown key");
	if (c.functions.empty())
		throw UsageError("function: required (e.g. --function sphere)");
	for (std::size_t dim : c.dims)
	{
		const std::uint64_t budget = c.budget != 0 ? c.budget : dim * 10000;
		try
		{
			c.algorithm.validate(dim, budget);
		}
		catch (const ConfigError &e)
		{
			throw UsageError(e.what());
		}
	}
	return c;
}

RunConfig parse_config(int argc, const char *const *argv)
{
	CLI::App app{"Hybrid PSO/DE/surrogate optimizer with a BBOB-style benchmark harness", "mgapso"};
	std::map<std::string, std::string> values;
	std::vector<std::pair<std::string, CLI::Option *>> options;
	for (const auto &f : flag_table)
	{
		auto *opt = app.add_option(f.flag, values[f.key], f.help);
		options.emplace_back(f.key, opt);
	}
	std::string preset, config_path;
	auto *preset_opt = app.add_option("--preset", preset, "ablation preset: PD PDL PDLP PDLPr PDa PDnm");
	app.add_option("--config", config_path, "config file with 'key = value' lines");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &)
	{
		throw HelpRequested(app.help());
	}
	catch (const CLI::ParseError &e)
	{
		throw UsageError(std::string("command line: ") + e.what());
	}

	std::map<std::string, std::string> flag_keys;
	for (const auto &[key, opt] : options)
		if (opt->count() > 0)
			flag_keys[key] = values[key];
	if (preset_opt->count() > 0)
		flag_keys["preset"] = preset;

	std::map<std::string, std::string> file_keys;
	if (!config_path.empty())
		file_keys = read_config_file(config_path);
	return build_config(file_keys, flag_keys);
}

void write_config(std::ostream &os, const RunConfig &c)
{
	const OptimizerConfig &a = c.algorithm;
	const auto on_off = [](bool b) { return b ? "on" : "off"; };
	os << "# effective configuration\n";
	os << "function = " << join(c.functions, [](FunctionId f) { return std::string(name_of(f)); }) << "\n";
	os << "dim = " << join(c.dims, [](std::size_t d) { return std::to_string(d); }) << "\n";
	os << "instances = " << join(c.instances, [](std::size_t i) { return std::to_string(i); }) << "\n";
	os << "seed = " << c.seed << "\n";
	os << "budget = " << c.budget << "\n";
	os << "targets = " << join(c.targets, fmt) << "\n";
	os << "output = " << c.output << "\n";
	os << "jobs = " << c.jobs << "\n";
	os << "population = " << a.population << "\n";
	os << "population_per_dim = " << a.population_per_dim << "\n";
	os << "weights = "
	   << join(std::vector<double>(a.behavior_weights.begin(), a.behavior_weights.end()), fmt, ':')
	   << "\n";
	os << "assignment = " << (a.assignment == AssignmentMode::Mixed ? "mixed" : "static") << "\n";
	os << "adaptation.enabled = " << on_off(a.adaptation.enabled) << "\n";
	os << "adaptation.alpha = " << fmt(a.adaptation.alpha) << "\n";
	os << "adaptation.floor = " << fmt(a.adaptation.floor) << "\n";
	os << "adaptation.horizon = " << a.adaptation.equalization_horizon << "\n";
	os << "pso.c1 = " << fmt(a.pso.c1) << "\n";
	os << "pso.c2 = " << fmt(a.pso.c2) << "\n";
	os << "pso.omega = " << fmt(a.pso.omega) << "\n";
	os << "de.cr = " << fmt(a.de.crossover_probability) << "\n";
	os << "de.f_range = " << fmt(a.de.f_min) << ":" << fmt(a.de.f_max) << "\n";
	os << "model.quad_k_per_dim = " << a.model.quadratic_k_per_dim << "\n";
	os << "model.poly_degree = " << a.model.polynomial_degree << "\n";
	os << "model.poly_k_per_dim = " << a.model.polynomial_k_per_dim << "\n";
	os << "restart.eps_x = " << fmt(a.restart.eps_x_relative) << "\n";
	os << "restart.eps_f = " << fmt(a.restart.eps_f) << "\n";
	os << "restart.stall_per_dim = " << a.restart.stall_iterations_per_dim << "\n";
	os << "init.weights = " << fmt(a.space.weights.full) << ":" << fmt(a.space.weights.random_box)
	   << ":" << fmt(a.space.weights.near_best) << "\n";
	os << "init.box_margin = " << fmt(a.space.random_box_margin) << "\n";
	os << "init.near_best_width = " << fmt(a.space.near_best_half_width) << "\n";
	os << "archive.capacity = " << a.archive_capacity << "\n";
	os << "archive.reset_on_restart = " << on_off(a.reset_archive_on_restart) << "\n";
	os << "cache = " << on_off(a.use_cache) << "\n";
	os << "dump_archive = " << on_off(c.algorithm.dump_archive) << "\n";
}

} // namespace mgapso
