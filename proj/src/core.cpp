#include "mgapso/core.hpp"
#include "mgapso/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mgapso
{

namespace
{
std::string describe_non_finite(const Vector &x, double value)
{
	std::ostringstream os;
	os.precision(17);
	os << "objective returned " << value << " at x = (";
	for (Eigen::Index i = 0; i < x.size(); ++i)
		os << (i ? ", " : "") << x[i];
	os << ")";
	return os.str();
}
} // namespace

NonFiniteValueError::NonFiniteValueError(const Vector &x, double value)
	: std::runtime_error(describe_non_finite(x, value)), x_(x)
{
}

Bounds::Bounds(Vector lo, Vector hi) : lower(std::move(lo)), upper(std::move(hi))
{
	if (lower.size() < 1)
		throw ConfigError("bounds must have at least one dimension");
	if (lower.size() != upper.size())
		throw ConfigError("bounds lower/upper length mismatch");
	for (Eigen::Index d = 0; d < lower.size(); ++d)
		if (!(lower[d] <= upper[d]))
			throw ConfigError("bounds lower > upper in dimension " + std::to_string(d));
}

Bounds Bounds::cube(std::size_t dim, double lo, double hi)
{
	const auto n = static_cast<Eigen::Index>(dim);
	return Bounds(Vector::Constant(n, lo), Vector::Constant(n, hi));
}

bool Bounds::contains(const Vector &x) const
{
	return x.size() == lower.size() && (x.array() >= lower.array()).all() &&
		   (x.array() <= upper.array()).all();
}

bool Bounds::contains(const Bounds &other) const
{
	return other.dim() == dim() && (other.lower.array() >= lower.array()).all() &&
		   (other.upper.array() <= upper.array()).all();
}

Bounds Bounds::intersect(const Bounds &other) const
{
	Vector lo = lower.cwiseMax(other.lower);
	Vector hi = upper.cwiseMin(other.upper);
	for (Eigen::Index d = 0; d < lo.size(); ++d)
		if (lo[d] > hi[d])
			lo[d] = hi[d] = std::clamp(other.lower[d], lower[d], upper[d]);
	return Bounds(std::move(lo), std::move(hi));
}

Sample ObjectiveFunction::evaluate(const Vector &x)
{
	if (static_cast<std::size_t>(x.size()) != dim())
		throw std::invalid_argument("evaluate: dimension mismatch");
	++evaluations_;
	const double v = value(x);
	if (!std::isfinite(v))
		throw NonFiniteValueError(x, v);
	return {x, v};
}

Vector clamp(const Vector &x, const Bounds &b)
{
	if (x.size() != b.lower.size())
		throw std::invalid_argument("clamp: dimension mismatch");
	return x.cwiseMax(b.lower).cwiseMin(b.upper);
}

std::uint64_t RngStream::index(std::uint64_t n)
{
	if (n == 0)
		throw std::invalid_argument("RngStream::index: empty range");
	const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
								std::numeric_limits<std::uint64_t>::max() % n;
	std::uint64_t r;
	do
		r = engine_();
	while (r >= limit);
	return r % n;
}

double RngStream::normal()
{
	double u1;
	do
		u1 = uniform();
	while (u1 <= 0.0);
	const double u2 = uniform();
	return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace mgapso

namespace mgapso
{

std::string format_double(double v)
{
	char buf[32];
	const auto res = std::to_chars(buf, buf + sizeof buf, v);
	return std::string(buf, res.ptr);
}

} // namespace mgapso
