#pragma once

#include <uposet/errors.hpp>
#include <uposet/poset.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace uposet
{

/// A partition of the elements into chains.
///
/// Each chain lists its elements in increasing order. Chains are sorted by
/// length (longest first) and then by smallest element, so `lengths()` is a
/// weakly decreasing sequence c_1 >= c_2 >= ... summing to n.
struct ChainDecomposition
{
	std::vector<std::vector<Element>> chains;

	[[nodiscard]] std::size_t size() const noexcept { return chains.size(); }

	[[nodiscard]] std::vector<std::size_t> lengths() const
	{
		std::vector<std::size_t> out;
		out.reserve(chains.size());
		for (const auto& c : chains)
			out.push_back(c.size());
		return out;
	}

	friend bool operator==(const ChainDecomposition&, const ChainDecomposition&) = default;
};

namespace detail
{

/// Hopcroft-Karp maximum matching on a bipartite graph with equally many
/// left and right vertices. adjacency[u] lists right neighbours of left u.
class BipartiteMatching
{
public:
	static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

	explicit BipartiteMatching(std::vector<std::vector<std::size_t>> adjacency, std::size_t right_size)
		: adj_(std::move(adjacency)), match_left_(adj_.size(), none), match_right_(right_size, none),
		  dist_(adj_.size())
	{
		while (layer())
			for (std::size_t u = 0; u < adj_.size(); ++u)
				if (match_left_[u] == none)
					augment(u);
	}

	[[nodiscard]] const std::vector<std::vector<std::size_t>>& adjacency() const noexcept { return adj_; }
	[[nodiscard]] const std::vector<std::size_t>& left_mates() const noexcept { return match_left_; }
	[[nodiscard]] const std::vector<std::size_t>& right_mates() const noexcept { return match_right_; }

	[[nodiscard]] std::size_t size() const noexcept
	{
		return static_cast<std::size_t>(std::count_if(match_left_.begin(), match_left_.end(),
													  [](std::size_t v) { return v != none; }));
	}

	/// Left vertices reachable from a free left vertex along alternating
	/// paths, and the right vertices visited on the way (König's sets).
	void alternating_reach(std::vector<bool>& left_seen, std::vector<bool>& right_seen) const
	{
		left_seen.assign(adj_.size(), false);
		right_seen.assign(match_right_.size(), false);
		std::queue<std::size_t> q;
		for (std::size_t u = 0; u < adj_.size(); ++u)
			if (match_left_[u] == none)
			{
				left_seen[u] = true;
				q.push(u);
			}
		while (!q.empty())
		{
			const auto u = q.front();
			q.pop();
			for (auto v : adj_[u])
			{
				if (right_seen[v] || match_left_[u] == v)
					continue;
				right_seen[v] = true;
				const auto w = match_right_[v];
				if (w != none && !left_seen[w])
				{
					left_seen[w] = true;
					q.push(w);
				}
			}
		}
	}

private:
	static constexpr std::size_t infinity = std::numeric_limits<std::size_t>::max();

	// BFS from free left vertices; true if some free right vertex is reachable.
	bool layer()
	{
		std::queue<std::size_t> q;
		for (std::size_t u = 0; u < adj_.size(); ++u)
		{
			if (match_left_[u] == none)
			{
				dist_[u] = 0;
				q.push(u);
			}
			else
				dist_[u] = infinity;
		}
		bool found = false;
		while (!q.empty())
		{
			const auto u = q.front();
			q.pop();
			for (auto v : adj_[u])
			{
				const auto w = match_right_[v];
				if (w == none)
					found = true;
				else if (dist_[w] == infinity)
				{
					dist_[w] = dist_[u] + 1;
					q.push(w);
				}
			}
		}
		return found;
	}

	bool augment(std::size_t u)
	{
		for (auto v : adj_[u])
		{
			const auto w = match_right_[v];
			if (w == none || (dist_[w] == dist_[u] + 1 && augment(w)))
			{
				match_left_[u] = v;
				match_right_[v] = u;
				return true;
			}
		}
		dist_[u] = infinity;
		return false;
	}

	std::vector<std::vector<std::size_t>> adj_;
	std::vector<std::size_t> match_left_;
	std::vector<std::size_t> match_right_;
	std::vector<std::size_t> dist_;
};

/// Left copy u joined to right copy v whenever u < v.
inline BipartiteMatching comparability_matching(const Poset& p)
{
	const auto n = p.size();
	std::vector<std::vector<std::size_t>> adj(n);
	for (Element u = 0; u < n; ++u)
		for (Element v = p.strict_up(u).next_set(0); v < n; v = p.strict_up(u).next_set(v + 1))
			adj[u].push_back(v);
	return BipartiteMatching(std::move(adj), n);
}

inline void sort_chains(ChainDecomposition& d)
{
	std::sort(d.chains.begin(), d.chains.end(), [](const auto& a, const auto& b) {
		if (a.size() != b.size())
			return a.size() > b.size();
		return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
	});
}

} // namespace detail

/// Minimum chain decomposition: each matched edge u -> v of a maximum
/// matching makes v the successor of u in its chain, so the number of
/// chains is n minus the matching size.
inline ChainDecomposition min_chain_decomposition(const Poset& p)
{
	const auto n = p.size();
	const auto matching = detail::comparability_matching(p);
	const auto& next = matching.left_mates();
	const auto& prev = matching.right_mates();

	ChainDecomposition d;
	for (Element start = 0; start < n; ++start)
	{
		if (prev[start] != detail::BipartiteMatching::none)
			continue;
		std::vector<Element> c;
		for (auto e = start; e != detail::BipartiteMatching::none; e = next[e])
			c.push_back(e);
		d.chains.push_back(std::move(c));
	}
	detail::sort_chains(d);
	return d;
}

/// Maximum antichain from a minimum vertex cover of the comparability
/// bipartite graph: element x is kept when neither of its copies is in the
/// cover, i.e. its left copy is alternating-reachable and its right copy
/// is not. Returned in ascending element order.
inline std::vector<Element> max_antichain(const Poset& p)
{
	const auto matching = detail::comparability_matching(p);
	std::vector<bool> left_seen, right_seen;
	matching.alternating_reach(left_seen, right_seen);
	std::vector<Element> out;
	for (Element x = 0; x < p.size(); ++x)
		if (left_seen[x] && !right_seen[x])
			out.push_back(x);
	return out;
}

/// Width of the poset (size of a largest antichain).
inline std::size_t width(const Poset& p) { return p.size() - detail::comparability_matching(p).size(); }

/// A chain decomposition with at most `a` chains, or InfeasibleError when
/// the width exceeds a. The minimum decomposition is returned as is; it is
/// not split to reach exactly a chains.
inline ChainDecomposition decomposition_into_exactly(const Poset& p, std::size_t a)
{
	if (a > p.size())
		throw Error("chain budget " + std::to_string(a) + " exceeds poset size " + std::to_string(p.size()));
	auto d = min_chain_decomposition(p);
	if (d.size() > a)
		throw InfeasibleError("poset has an antichain of size " + std::to_string(d.size()) + " > " + std::to_string(a));
	return d;
}

} // namespace uposet
