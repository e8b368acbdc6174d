#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "mgapso/core.hpp"

namespace mgapso
{

/// kNN query against an archive with no samples.
class InsufficientSamples : public std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Spatial archive of evaluated samples backed by an in-memory R-tree.
///
/// Serves two purposes: an exact-coordinate evaluation cache, and the data
/// source for the model-based behaviors (kNN to a point, kNN to an
/// axis-parallel line). When a new key would exceed the capacity the whole
/// index is dropped and restarted empty before the insert.
///
/// kNN results are ordered by (squared distance, insertion order), so equal
/// distances favour the older sample.
class SampleArchive
{
public:
	static constexpr std::size_t default_capacity = 20000;

	explicit SampleArchive(std::size_t dim, std::size_t capacity = default_capacity,
						   std::size_t min_fanout = 2, std::size_t max_fanout = 8);

	std::size_t dim() const { return dim_; }
	std::size_t size() const { return samples_.size(); }
	bool empty() const { return samples_.empty(); }
	std::size_t capacity() const { return capacity_; }
	/// Number of capacity-triggered restarts since construction.
	std::size_t resets() const { return resets_; }

	/// Stored samples in insertion order. Index = insertion rank.
	const std::vector<Sample> &samples() const { return samples_; }

	void store(const Sample &s);
	std::optional<Sample> lookup_exact(const Vector &x) const;
	bool contains(const Vector &x) const { return find_entry(x).has_value(); }

	std::vector<Sample> nearest_to_point(const Vector &x, std::size_t k) const;
	std::vector<Sample> nearest_to_line(const Vector &anchor, std::size_t free_dim,
										std::size_t k) const;

	void clear();

	/// CSV dump: x_1..x_dim,value
	void write_csv(std::ostream &os) const;

	/// Structural self-check: parent boxes contain children, every leaf sample
	/// is inside all ancestors, fanout bounds hold away from the root.
	bool check_invariants() const;

private:
	struct Node
	{
		Vector lo;
		Vector hi;
		bool leaf = true;
		std::size_t parent = npos;
		std::vector<std::size_t> items; // sample indices (leaf) or node indices
	};

	static constexpr std::size_t npos = static_cast<std::size_t>(-1);

	std::optional<std::size_t> find_entry(const Vector &x) const;
	void insert_entry(std::size_t sample_index);
	std::size_t choose_leaf(const Vector &x) const;
	void split(std::size_t node_index);
	void refit(std::size_t node_index);
	void item_box(const Node &n, std::size_t item, Vector &lo, Vector &hi) const;

	template <typename Distance, typename BoxDistance>
	std::vector<Sample> knn(std::size_t k, Distance dist, BoxDistance box_dist) const;

	bool check_node(std::size_t node_index, std::size_t depth, std::size_t &leaf_depth,
					std::size_t &seen) const;

	std::size_t dim_;
	std::size_t capacity_;
	std::size_t min_fanout_;
	std::size_t max_fanout_;
	std::size_t resets_ = 0;
	std::vector<Sample> samples_;
	std::vector<Node> nodes_;
	std::size_t root_ = npos;
};

} // namespace mgapso
