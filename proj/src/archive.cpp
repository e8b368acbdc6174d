#include "mgapso/archive.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

namespace mgapso
{

namespace
{
// Node cost is the box margin (sum of side lengths). Volume degenerates to
// zero or overflows for point data in higher dimensions; margin does not.
double margin(const Vector &lo, const Vector &hi) { return (hi - lo).sum(); }

double union_margin(const Vector &alo, const Vector &ahi, const Vector &blo, const Vector &bhi)
{
	return (ahi.cwiseMax(bhi) - alo.cwiseMin(blo)).sum();
}

double squared_gap(double q, double lo, double hi)
{
	double g = 0.0;
	if (q < lo)
		g = lo - q;
	else if (q > hi)
		g = q - hi;
	return g * g;
}
} // namespace

SampleArchive::SampleArchive(std::size_t dim, std::size_t capacity, std::size_t min_fanout,
							 std::size_t max_fanout)
	: dim_(dim), capacity_(capacity), min_fanout_(min_fanout), max_fanout_(max_fanout)
{
	if (dim_ == 0)
		throw ConfigError("archive dimension must be positive");
	if (capacity_ == 0)
		throw ConfigError("archive capacity must be positive");
	if (min_fanout_ < 1 || max_fanout_ < 2 * min_fanout_)
		throw ConfigError("archive fanout requires 1 <= min and 2*min <= max");
}

void SampleArchive::clear()
{
	samples_.clear();
	nodes_.clear();
	root_ = npos;
}

void SampleArchive::store(const Sample &s)
{
	if (static_cast<std::size_t>(s.x.size()) != dim_)
		throw std::invalid_argument("SampleArchive::store: dimension mismatch");
	if (const auto existing = find_entry(s.x))
	{
		samples_[*existing].value = s.value;
		return;
	}
	if (samples_.size() >= capacity_)
	{
		clear();
		++resets_;
	}
	samples_.push_back(s);
	insert_entry(samples_.size() - 1);
}

std::optional<Sample> SampleArchive::lookup_exact(const Vector &x) const
{
	if (static_cast<std::size_t>(x.size()) != dim_)
		throw std::invalid_argument("SampleArchive::lookup_exact: dimension mismatch");
	if (const auto i = find_entry(x))
		return samples_[*i];
	return std::nullopt;
}

std::optional<std::size_t> SampleArchive::find_entry(const Vector &x) const
{
	if (root_ == npos)
		return std::nullopt;
	std::vector<std::size_t> stack{root_};
	while (!stack.empty())
	{
		const Node &n = nodes_[stack.back()];
		stack.pop_back();
		if ((x.array() < n.lo.array()).any() || (x.array() > n.hi.array()).any())
			continue;
		if (n.leaf)
		{
			for (std::size_t i : n.items)
				if (samples_[i].x == x)
					return i;
		}
		else
			stack.insert(stack.end(), n.items.begin(), n.items.end());
	}
	return std::nullopt;
}

void SampleArchive::item_box(const Node &n, std::size_t item, Vector &lo, Vector &hi) const
{
	if (n.leaf)
		lo = hi = samples_[item].x;
	else
	{
		lo = nodes_[item].lo;
		hi = nodes_[item].hi;
	}
}

std::size_t SampleArchive::choose_leaf(const Vector &x) const
{
	std::size_t current = root_;
	while (!nodes_[current].leaf)
	{
		const Node &n = nodes_[current];
		std::size_t best = n.items.front();
		double best_growth = 0.0, best_margin = 0.0;
		bool first = true;
		for (std::size_t child : n.items)
		{
			const Node &c = nodes_[child];
			const double m = margin(c.lo, c.hi);
			const double growth = union_margin(c.lo, c.hi, x, x) - m;
			if (first || growth < best_growth || (growth == best_growth && m < best_margin))
			{
				best = child;
				best_growth = growth;
				best_margin = m;
				first = false;
			}
		}
		current = best;
	}
	return current;
}

void SampleArchive::insert_entry(std::size_t sample_index)
{
	const Vector &x = samples_[sample_index].x;
	if (root_ == npos)
	{
		nodes_.push_back(Node{x, x, true, npos, {sample_index}});
		root_ = nodes_.size() - 1;
		return;
	}
	const std::size_t leaf = choose_leaf(x);
	nodes_[leaf].items.push_back(sample_index);
	for (std::size_t n = leaf; n != npos; n = nodes_[n].parent)
	{
		nodes_[n].lo = nodes_[n].lo.cwiseMin(x);
		nodes_[n].hi = nodes_[n].hi.cwiseMax(x);
	}
	if (nodes_[leaf].items.size() > max_fanout_)
		split(leaf);
}

void SampleArchive::refit(std::size_t node_index)
{
	Node &n = nodes_[node_index];
	Vector lo, hi, ilo, ihi;
	item_box(n, n.items.front(), lo, hi);
	for (std::size_t k = 1; k < n.items.size(); ++k)
	{
		item_box(n, n.items[k], ilo, ihi);
		lo = lo.cwiseMin(ilo);
		hi = hi.cwiseMax(ihi);
	}
	n.lo = std::move(lo);
	n.hi = std::move(hi);
}

// Guttman's quadratic split, with margin as the cost measure.
void SampleArchive::split(std::size_t node_index)
{
	const std::vector<std::size_t> items = nodes_[node_index].items;
	const bool leaf = nodes_[node_index].leaf;
	const std::size_t count = items.size();

	std::vector<Vector> lo(count), hi(count);
	for (std::size_t i = 0; i < count; ++i)
		item_box(nodes_[node_index], items[i], lo[i], hi[i]);

	std::size_t seed_a = 0, seed_b = 1;
	double worst = -1.0;
	for (std::size_t i = 0; i < count; ++i)
		for (std::size_t j = i + 1; j < count; ++j)
		{
			const double waste = union_margin(lo[i], hi[i], lo[j], hi[j]) - margin(lo[i], hi[i]) -
								 margin(lo[j], hi[j]);
			if (waste > worst)
			{
				worst = waste;
				seed_a = i;
				seed_b = j;
			}
		}

	std::vector<std::size_t> group_a{seed_a}, group_b{seed_b};
	Vector alo = lo[seed_a], ahi = hi[seed_a], blo = lo[seed_b], bhi = hi[seed_b];
	std::vector<bool> assigned(count, false);
	assigned[seed_a] = assigned[seed_b] = true;
	std::size_t remaining = count - 2;

	while (remaining > 0)
	{
		if (group_a.size() + remaining <= min_fanout_ || group_b.size() + remaining <= min_fanout_)
		{
			auto &target = group_a.size() + remaining <= min_fanout_ ? group_a : group_b;
			for (std::size_t i = 0; i < count; ++i)
				if (!assigned[i])
				{
					target.push_back(i);
					assigned[i] = true;
				}
			break;
		}
		std::size_t pick = count;
		double pick_diff = -1.0, pick_da = 0.0, pick_db = 0.0;
		const double ma = margin(alo, ahi), mb = margin(blo, bhi);
		for (std::size_t i = 0; i < count; ++i)
		{
			if (assigned[i])
				continue;
			const double da = union_margin(alo, ahi, lo[i], hi[i]) - ma;
			const double db = union_margin(blo, bhi, lo[i], hi[i]) - mb;
			if (std::abs(da - db) > pick_diff)
			{
				pick_diff = std::abs(da - db);
				pick = i;
				pick_da = da;
				pick_db = db;
			}
		}
		bool to_a;
		if (pick_da != pick_db)
			to_a = pick_da < pick_db;
		else if (ma != mb)
			to_a = ma < mb;
		else
			to_a = group_a.size() <= group_b.size();
		if (to_a)
		{
			group_a.push_back(pick);
			alo = alo.cwiseMin(lo[pick]);
			ahi = ahi.cwiseMax(hi[pick]);
		}
		else
		{
			group_b.push_back(pick);
			blo = blo.cwiseMin(lo[pick]);
			bhi = bhi.cwiseMax(hi[pick]);
		}
		assigned[pick] = true;
		--remaining;
	}

	// Keep original item order inside each group for reproducible traversal.
	std::sort(group_a.begin(), group_a.end());
	std::sort(group_b.begin(), group_b.end());

	Node sibling;
	sibling.leaf = leaf;
	sibling.parent = nodes_[node_index].parent;
	for (std::size_t i : group_b)
		sibling.items.push_back(items[i]);
	nodes_[node_index].items.clear();
	for (std::size_t i : group_a)
		nodes_[node_index].items.push_back(items[i]);

	nodes_.push_back(std::move(sibling));
	const std::size_t sibling_index = nodes_.size() - 1;
	if (!leaf)
		for (std::size_t child : nodes_[sibling_index].items)
			nodes_[child].parent = sibling_index;
	refit(node_index);
	refit(sibling_index);

	const std::size_t parent = nodes_[node_index].parent;
	if (parent == npos)
	{
		Node root;
		root.leaf = false;
		root.items = {node_index, sibling_index};
		nodes_.push_back(std::move(root));
		root_ = nodes_.size() - 1;
		nodes_[node_index].parent = nodes_[sibling_index].parent = root_;
		refit(root_);
		return;
	}
	nodes_[parent].items.push_back(sibling_index);
	if (nodes_[parent].items.size() > max_fanout_)
		split(parent);
}

template <typename Distance, typename BoxDistance>
std::vector<Sample> SampleArchive::knn(std::size_t k, Distance dist, BoxDistance box_dist) const
{
	if (samples_.empty())
		throw InsufficientSamples("kNN query on an empty samples archive");
	if (k == 0)
		return {};
	k = std::min(k, samples_.size());

	using Candidate = std::pair<double, std::size_t>; // (squared distance, insertion rank)
	std::priority_queue<Candidate> best;			   // max-heap, worst on top
	using Pending = std::pair<double, std::size_t>;
	std::priority_queue<Pending, std::vector<Pending>, std::greater<>> frontier;
	frontier.emplace(box_dist(nodes_[root_]), root_);

	while (!frontier.empty())
	{
		const auto [bound, node_index] = frontier.top();
		frontier.pop();
		// Equal bounds may still hide an older sample at the same distance.
		if (best.size() == k && bound > best.top().first)
			break;
		const Node &n = nodes_[node_index];
		if (n.leaf)
		{
			for (std::size_t i : n.items)
			{
				const Candidate c{dist(samples_[i].x), i};
				if (best.size() < k)
					best.push(c);
				else if (c < best.top())
				{
					best.pop();
					best.push(c);
				}
			}
		}
		else
		{
			for (std::size_t child : n.items)
			{
				const double b = box_dist(nodes_[child]);
				if (best.size() < k || b <= best.top().first)
					frontier.emplace(b, child);
			}
		}
	}

	std::vector<Candidate> ordered;
	ordered.reserve(best.size());
	while (!best.empty())
	{
		ordered.push_back(best.top());
		best.pop();
	}
	std::reverse(ordered.begin(), ordered.end());
	std::vector<Sample> out;
	out.reserve(ordered.size());
	for (const auto &c : ordered)
		out.push_back(samples_[c.second]);
	return out;
}

std::vector<Sample> SampleArchive::nearest_to_point(const Vector &x, std::size_t k) const
{
	if (static_cast<std::size_t>(x.size()) != dim_)
		throw std::invalid_argument("nearest_to_point: dimension mismatch");
	const auto dist = [&](const Vector &p) {
		double s = 0.0;
		for (std::size_t d = 0; d < dim_; ++d)
		{
			const double diff = p[d] - x[d];
			s += diff * diff;
		}
		return s;
	};
	const auto box_dist = [&](const Node &n) {
		double s = 0.0;
		for (std::size_t d = 0; d < dim_; ++d)
			s += squared_gap(x[d], n.lo[d], n.hi[d]);
		return s;
	};
	return knn(k, dist, box_dist);
}

std::vector<Sample> SampleArchive::nearest_to_line(const Vector &anchor, std::size_t free_dim,
												   std::size_t k) const
{
	if (static_cast<std::size_t>(anchor.size()) != dim_)
		throw std::invalid_argument("nearest_to_line: dimension mismatch");
	if (free_dim >= dim_)
		throw std::invalid_argument("nearest_to_line: free dimension out of range");
	const auto dist = [&](const Vector &p) {
		double s = 0.0;
		for (std::size_t d = 0; d < dim_; ++d)
		{
			if (d == free_dim)
				continue;
			const double diff = p[d] - anchor[d];
			s += diff * diff;
		}
		return s;
	};
	const auto box_dist = [&](const Node &n) {
		double s = 0.0;
		for (std::size_t d = 0; d < dim_; ++d)
			if (d != free_dim)
				s += squared_gap(anchor[d], n.lo[d], n.hi[d]);
		return s;
	};
	return knn(k, dist, box_dist);
}

void SampleArchive::write_csv(std::ostream &os) const
{
	for (std::size_t d = 0; d < dim_; ++d)
		os << "x_" << (d + 1) << ",";
	os << "value\n";
	for (const auto &s : samples_)
	{
		for (std::size_t d = 0; d < dim_; ++d)
			os << format_double(s.x[d]) << ",";
		os << format_double(s.value) << "\n";
	}
}

bool SampleArchive::check_node(std::size_t node_index, std::size_t depth, std::size_t &leaf_depth,
							   std::size_t &seen) const
{
	const Node &n = nodes_[node_index];
	if (node_index != root_ && (n.items.size() < min_fanout_ || n.items.size() > max_fanout_))
		return false;
	if (n.items.empty())
		return false;
	Vector lo, hi;
	for (std::size_t item : n.items)
	{
		item_box(n, item, lo, hi);
		if ((lo.array() < n.lo.array()).any() || (hi.array() > n.hi.array()).any())
			return false;
	}
	if (n.leaf)
	{
		if (leaf_depth == npos)
			leaf_depth = depth;
		seen += n.items.size();
		return leaf_depth == depth;
	}
	for (std::size_t child : n.items)
	{
		if (nodes_[child].parent != node_index)
			return false;
		if (!check_node(child, depth + 1, leaf_depth, seen))
			return false;
	}
	return true;
}

bool SampleArchive::check_invariants() const
{
	if (samples_.size() > capacity_)
		return false;
	if (root_ == npos)
		return samples_.empty();
	std::size_t leaf_depth = npos, seen = 0;
	return check_node(root_, 0, leaf_depth, seen) && seen == samples_.size();
}

} // namespace mgapso
