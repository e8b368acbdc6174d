#include <iostream>

#include "mgapso/config.hpp"
#include "mgapso/experiment.hpp"

int main(int argc, char **argv)
{
	try
	{
		const mgapso::RunConfig config = mgapso::parse_config(argc, argv);
		return mgapso::run_experiment(config, std::cerr);
	}
	catch (const mgapso::HelpRequested &help)
	{
		std::cout << help.what();
		return 0;
	}
	catch (const mgapso::UsageError &e)
	{
		std::cerr << "usage error: " << e.what() << "\n";
		return 64;
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
}
