#include "mgapso/experiment.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

namespace mgapso
{

namespace fs = std::filesystem;

std::vector<RunOutcome> run_matrix(const RunConfig &config)
{
	const std::vector<RunSpec> specs = config.schedule();
	std::vector<RunOutcome> outcomes(specs.size());
	std::atomic<std::size_t> next{0};

	const auto worker = [&] {
		for (std::size_t i = next++; i < specs.size(); i = next++)
		{
			outcomes[i].spec = specs[i];
			try
			{
				outcomes[i].record = run(config.algorithm, specs[i]);
			}
			catch (const std::exception &e)
			{
				outcomes[i].error = e.what();
			}
		}
	};

	const std::size_t threads = std::max<std::size_t>(1, std::min(config.jobs, specs.size()));
	if (threads == 1)
		worker();
	else
	{
		std::vector<std::thread> pool;
		for (std::size_t t = 0; t < threads; ++t)
			pool.emplace_back(worker);
		for (auto &th : pool)
			th.join();
	}
	return outcomes;
}

namespace
{

bool prepare_directory(const fs::path &dir, std::ostream &log)
{
	std::error_code ec;
	fs::create_directories(dir, ec);
	if (ec || !fs::is_directory(dir))
	{
		log << "error: cannot create output directory " << dir << ": " << ec.message() << "\n";
		return false;
	}
	const fs::path probe = dir / OutputFiles::status;
	std::ofstream out(probe);
	if (!(out << "running\n"))
	{
		log << "error: output directory " << dir << " is not writable\n";
		return false;
	}
	return true;
}

template <typename Write>
bool write_file(const fs::path &path, std::ostream &log, Write &&write)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
	{
		log << "error: cannot open " << path << "\n";
		return false;
	}
	write(out);
	out.flush();
	if (!out)
	{
		log << "error: failed writing " << path << "\n";
		return false;
	}
	return true;
}

} // namespace

int run_experiment(const RunConfig &config, std::ostream &log)
{
	const fs::path dir(config.output);
	if (!prepare_directory(dir, log))
		return 2;

	bool ok = write_file(dir / OutputFiles::config, log,
						 [&](std::ostream &os) { write_config(os, config); });

	const auto outcomes = run_matrix(config);
	std::vector<RunRecord> records;
	std::vector<std::string> failures;
	for (const auto &o : outcomes)
	{
		if (o.error.empty())
			records.push_back(o.record);
		else
			failures.push_back(std::string(name_of(o.spec.function)) + " dim " +
							   std::to_string(o.spec.dim) + " instance " +
							   std::to_string(o.spec.instance) + ": " + o.error);
	}
	for (const auto &f : failures)
		log << "run failed: " << f << "\n";

	ok &= write_file(dir / OutputFiles::trajectory, log, [&](std::ostream &os) {
		write_trajectory_header(os);
		for (const auto &r : records)
			write_trajectory(os, r);
	});
	ok &= write_file(dir / OutputFiles::summary, log, [&](std::ostream &os) {
		write_summary_header(os);
		for (const auto &r : records)
			write_summary(os, r);
	});
	ok &= write_file(dir / OutputFiles::ecdf, log, [&](std::ostream &os) {
		if (records.empty())
			write_ecdf(os, {});
		else
			write_ecdf(os, ecdf(records, config.targets));
	});
	ok &= write_file(dir / OutputFiles::shares, log, [&](std::ostream &os) {
		write_shares_header(os);
		for (const auto &r : records)
			write_shares(os, r);
	});
	ok &= write_file(dir / OutputFiles::restarts, log, [&](std::ostream &os) {
		write_restarts_header(os);
		for (const auto &r : records)
			write_restarts(os, r);
	});
	ok &= write_file(dir / OutputFiles::optima, log, [&](std::ostream &os) {
		std::size_t dim = 0;
		for (const auto &r : records)
			dim = std::max(dim, r.dim);
		write_optima_header(os, dim);
		for (const auto &r : records)
			write_optima(os, r);
	});
	if (config.algorithm.dump_archive)
		for (const auto &r : records)
		{
			const auto name = "archive_" + r.function + "_d" + std::to_string(r.dim) + "_i" +
							  std::to_string(r.instance) + ".csv";
			ok &= write_file(dir / name, log, [&](std::ostream &os) { os << r.archive_csv; });
		}

	const bool complete = ok && failures.empty();
	write_file(dir / OutputFiles::status, log, [&](std::ostream &os) {
		os << (complete ? "complete" : "incomplete") << "\n";
		for (const auto &f : failures)
			os << "failed: " << f << "\n";
	});

	for (const auto &r : records)
	{
		log << r.function << " dim " << r.dim << " instance " << r.instance << ": best df "
			<< r.best_precision() << " after " << r.evaluations << " evaluations, "
			<< r.restarts.size() << " restarts\n";
	}
	return complete ? 0 : 1;
}

} // namespace mgapso
