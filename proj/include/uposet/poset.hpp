#pragma once

#include <uposet/errors.hpp>
#include <uposet/subset_mask.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uposet
{

using Element = std::size_t;
using Relation = std::pair<Element, Element>;

/// A finite poset on elements 0..n-1, stored as its strict relation.
///
/// Row u of the relation is the set of v with u < v; the transposed rows
/// are kept alongside for downset queries. The relation is always
/// irreflexive, antisymmetric and transitively closed; every constructor
/// establishes this and reflexivity is supplied by leq().
class Poset
{
public:
	/// The n-element antichain.
	explicit Poset(std::size_t n = 0)
		: n_(n), up_(n, SubsetMask(n)), down_(n, SubsetMask(n))
	{}

	/// Wraps an already closed strict relation; validates all three axioms.
	static Poset from_closed_rows(std::vector<SubsetMask> up)
	{
		Poset p(up.size());
		for (Element u = 0; u < p.n_; ++u)
		{
			if (up[u].size() != p.n_)
				throw Error("relation row has wrong width");
		}
		p.up_ = std::move(up);
		p.rebuild_down();
		if (const auto err = p.axiom_violation(); !err.empty())
			throw Error("not a strict partial order: " + err);
		return p;
	}

	[[nodiscard]] std::size_t size() const noexcept { return n_; }

	/// Strict comparison u < v.
	[[nodiscard]] bool less(Element u, Element v) const noexcept { return up_[u].test(v); }

	/// Reflexive comparison u <= v.
	[[nodiscard]] bool leq(Element u, Element v) const noexcept { return u == v || less(u, v); }

	[[nodiscard]] bool comparable(Element u, Element v) const noexcept { return leq(u, v) || leq(v, u); }

	/// Elements strictly above u.
	[[nodiscard]] const SubsetMask& strict_up(Element u) const noexcept { return up_[u]; }

	/// Elements strictly below v.
	[[nodiscard]] const SubsetMask& strict_down(Element v) const noexcept { return down_[v]; }

	/// Relation pairs (u, v) with u < v and nothing strictly between them.
	[[nodiscard]] std::vector<Relation> cover_relations() const
	{
		std::vector<Relation> covers;
		for (Element u = 0; u < n_; ++u)
		{
			for (Element v = up_[u].next_set(0); v < n_; v = up_[u].next_set(v + 1))
			{
				// u < w < v for some w iff up(u) meets down(v)
				if ((up_[u] & down_[v]).empty())
					covers.emplace_back(u, v);
			}
		}
		return covers;
	}

	/// Empty string iff the stored relation is a strict partial order.
	[[nodiscard]] std::string axiom_violation() const
	{
		for (Element u = 0; u < n_; ++u)
		{
			if (up_[u].test(u))
				return "reflexive pair at " + std::to_string(u);
			for (Element v = up_[u].next_set(0); v < n_; v = up_[u].next_set(v + 1))
			{
				if (up_[v].test(u))
					return "symmetric pair " + std::to_string(u) + "," + std::to_string(v);
				if (!up_[v].is_subset_of(up_[u]))
					return "not transitive through " + std::to_string(u) + "<" + std::to_string(v);
			}
		}
		return {};
	}

	friend bool operator==(const Poset& a, const Poset& b) noexcept { return a.up_ == b.up_; }

private:
	void rebuild_down()
	{
		down_.assign(n_, SubsetMask(n_));
		for (Element u = 0; u < n_; ++u)
			for (Element v = up_[u].next_set(0); v < n_; v = up_[u].next_set(v + 1))
				down_[v].set(u);
	}

	std::size_t n_;
	std::vector<SubsetMask> up_;
	std::vector<SubsetMask> down_;

	friend Poset from_relations(std::size_t n, std::span<const Relation> pairs);
};

/// Transitive closure of the generator pairs (u < v), 0-indexed.
///
/// Pairs need not be covers and duplicates are ignored. Throws CycleError
/// as soon as closing through some pivot makes an element lie below itself.
inline Poset from_relations(std::size_t n, std::span<const Relation> pairs)
{
	std::vector<SubsetMask> reach(n, SubsetMask(n));
	for (const auto& [u, v] : pairs)
	{
		if (u >= n || v >= n)
			throw Error("relation (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
						std::to_string(n == 0 ? 0 : n - 1));
		if (u == v)
			throw CycleError("element " + std::to_string(u) + " related to itself");
		reach[u].set(v);
	}
	// Warshall over bit rows: after pivot k, reach holds all paths whose
	// interior uses pivots <= k. A cycle through k shows up on the diagonal.
	for (Element k = 0; k < n; ++k)
	{
		for (Element i = 0; i < n; ++i)
		{
			if (reach[i].test(k))
			{
				reach[i] |= reach[k];
				if (reach[i].test(i))
					throw CycleError("cycle through elements " + std::to_string(i) + " and " + std::to_string(k));
			}
		}
	}
	Poset p(n);
	p.up_ = std::move(reach);
	p.rebuild_down();
	return p;
}

inline Poset from_relations(std::size_t n, std::initializer_list<Relation> pairs)
{
	return from_relations(n, std::span<const Relation>(pairs.begin(), pairs.size()));
}

inline Poset chain(std::size_t n)
{
	std::vector<Relation> pairs;
	for (Element i = 0; i + 1 < n; ++i)
		pairs.emplace_back(i, i + 1);
	return from_relations(n, pairs);
}

inline Poset antichain(std::size_t n) { return Poset(n); }

/// Random poset: arcs u -> v with probability edge_prob for u before v in a
/// uniformly random linear order, then transitively closed.
inline Poset random_poset(std::size_t n, double edge_prob, std::uint64_t seed)
{
	if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
		throw Error("edge probability must lie in [0, 1]");
	std::mt19937_64 rng(seed);
	std::vector<Element> order(n);
	std::iota(order.begin(), order.end(), Element{0});
	std::shuffle(order.begin(), order.end(), rng);
	std::bernoulli_distribution arc(edge_prob);
	std::vector<Relation> pairs;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (arc(rng))
				pairs.emplace_back(order[i], order[j]);
	return from_relations(n, pairs);
}

} // namespace uposet
