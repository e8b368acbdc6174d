#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mgapso
{

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<double>;
using Matrix = MatrixX<double>;

/// Raised when an objective returns NaN or infinity. Aborts the run.
class NonFiniteValueError : public std::runtime_error
{
public:
	NonFiniteValueError(const Vector &x, double value);
	const Vector &point() const { return x_; }

private:
	Vector x_;
};

/// Invalid configuration or precondition violation detected before a run.
class ConfigError : public std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

struct Bounds
{
	Vector lower;
	Vector upper;

	Bounds() = default;
	Bounds(Vector lo, Vector hi);

	static Bounds cube(std::size_t dim, double lo, double hi);

	std::size_t dim() const { return static_cast<std::size_t>(lower.size()); }
	Vector width() const { return upper - lower; }
	bool contains(const Vector &x) const;
	bool contains(const Bounds &other) const;

	/// Intersection with `other`; collapses to a point per dimension when disjoint.
	Bounds intersect(const Bounds &other) const;

	friend bool operator==(const Bounds &a, const Bounds &b)
	{
		return a.lower == b.lower && a.upper == b.upper;
	}
};

struct Sample
{
	Vector x;
	double value = 0.0;
};

struct Particle
{
	Vector x;
	Vector v;
	Sample best;
	std::vector<std::size_t> neighborhood;
};

/// Box-constrained scalar objective with an evaluation counter.
class ObjectiveFunction
{
public:
	explicit ObjectiveFunction(Bounds bounds) : bounds_(std::move(bounds)) {}
	virtual ~ObjectiveFunction() = default;

	std::size_t dim() const { return bounds_.dim(); }
	const Bounds &bounds() const { return bounds_; }
	std::uint64_t evaluations() const { return evaluations_; }

	/// Counted evaluation; throws NonFiniteValueError on NaN/inf.
	Sample evaluate(const Vector &x);

protected:
	virtual double value(const Vector &x) const = 0;

private:
	Bounds bounds_;
	std::uint64_t evaluations_ = 0;
};

inline Sample evaluate(ObjectiveFunction &f, const Vector &x) { return f.evaluate(x); }

/// Shortest text that reads back as exactly `v`.
std::string format_double(double v);

/// Coordinate-wise projection into `b`.
Vector clamp(const Vector &x, const Bounds &b);

} // namespace mgapso
