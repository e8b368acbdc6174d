#pragma once

#include <cstdint>
#include <random>

namespace mgapso
{

/// Seeded random stream. The engine is mt19937_64 and every distribution is
/// derived from its raw 64-bit output here rather than through <random>
/// distributions, whose algorithms differ between standard libraries.
class RngStream
{
public:
	explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

	std::uint64_t seed() const { return seed_; }

	std::uint64_t next_u64() { return engine_(); }

	/// Uniform in [0, 1) with 53 random bits.
	double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

	double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

	/// Uniform integer in [0, n), unbiased (rejection sampling).
	std::uint64_t index(std::uint64_t n);

	/// Standard normal via Box-Muller (one value per call, no caching).
	double normal();

private:
	std::uint64_t seed_;
	std::mt19937_64 engine_;
};

/// splitmix64 finalizer, used to derive independent sub-seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x)
{
	x += 0x9E3779B97F4A7C15ull;
	x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
	x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
	return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b)
{
	return mix_seed(mix_seed(a) ^ (b + 0x632BE59BD9B4E019ull));
}

} // namespace mgapso
