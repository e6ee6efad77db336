#pragma once

#include <uposet/dilworth.hpp>
#include <uposet/embedding.hpp>
#include <uposet/errors.hpp>
#include <uposet/partitions.hpp>
#include <uposet/poset.hpp>
#include <uposet/set_family.hpp>
#include <uposet/subset_mask.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace uposet
{

/// Default materialization cap, in sets.
inline constexpr std::size_t default_family_cap = std::size_t{1} << 24;

/// Largest ground set accepted by member_of_chain_family.
inline constexpr std::size_t membership_cap = 4096;

/// Consecutive cells C_1, ..., C_k of [n] with |C_i| = c_i.
/// Cell i covers 0-indexed bits [boundaries[i], boundaries[i+1]).
struct CellLayout
{
	std::vector<std::size_t> boundaries{0};

	static CellLayout from_partition(const PartitionSeq& c)
	{
		CellLayout layout;
		for (auto part : c.parts)
			layout.boundaries.push_back(layout.boundaries.back() + part);
		return layout;
	}

	[[nodiscard]] std::size_t cells() const noexcept { return boundaries.size() - 1; }
	[[nodiscard]] std::size_t begin(std::size_t i) const noexcept { return boundaries[i]; }
	[[nodiscard]] std::size_t end(std::size_t i) const noexcept { return boundaries[i + 1]; }

	/// True iff s meets every cell in a prefix of that cell (possibly empty).
	[[nodiscard]] bool is_prefix_union(const SubsetMask& s) const
	{
		for (std::size_t i = 0; i < cells(); ++i)
		{
			std::size_t j = begin(i);
			while (j < end(i) && s.test(j))
				++j;
			if (s.next_set(j) < end(i))
				return false;
		}
		return s.next_set(boundaries.back()) == s.size();
	}
};

namespace detail
{

inline void check_partition_of(std::size_t n, const PartitionSeq& c)
{
	if (!c.valid() || c.sum() != n)
		throw Error("not a partition of " + std::to_string(n));
}

// Visits every set that meets each cell in a prefix, as a single word (n <= 64).
template <class Visit>
void for_each_prefix_word(const CellLayout& layout, std::size_t cell, std::uint64_t acc, Visit& visit)
{
	if (cell == layout.cells())
	{
		visit(acc);
		return;
	}
	const auto lo = layout.begin(cell);
	const auto len = layout.end(cell) - lo;
	std::uint64_t prefix = 0;
	for (std::size_t t = 0;; ++t)
	{
		for_each_prefix_word(layout, cell + 1, acc | (prefix << lo), visit);
		if (t == len)
			break;
		prefix = (prefix << 1) | 1u;
	}
}

template <class Visit>
void for_each_prefix_mask(const CellLayout& layout, std::size_t cell, SubsetMask& acc, Visit& visit)
{
	if (cell == layout.cells())
	{
		visit(acc);
		return;
	}
	const auto lo = layout.begin(cell);
	const auto hi = layout.end(cell);
	for_each_prefix_mask(layout, cell + 1, acc, visit);
	for (auto j = lo; j < hi; ++j)
	{
		acc.set(j);
		for_each_prefix_mask(layout, cell + 1, acc, visit);
	}
	for (auto j = lo; j < hi; ++j)
		acc.reset(j);
}

inline std::uint64_t saturating_product_of_successors(const PartitionSeq& c)
{
	constexpr auto max = std::numeric_limits<std::uint64_t>::max();
	std::uint64_t prod = 1;
	for (auto part : c.parts)
	{
		const std::uint64_t factor = part + 1;
		if (prod > max / factor)
			return max;
		prod *= factor;
	}
	return prod;
}

} // namespace detail

/// Product of (c_i + 1), the size of family_for_partition(n, c).
inline BigInt prefix_family_size(const PartitionSeq& c)
{
	BigInt prod = 1;
	for (auto part : c.parts)
		prod *= part + 1;
	return prod;
}

/// All subsets of [n] meeting each cell of the layout given by c in a prefix.
inline SetFamily family_for_partition(std::size_t n, const PartitionSeq& c)
{
	detail::check_partition_of(n, c);
	const auto layout = CellLayout::from_partition(c);
	std::vector<SubsetMask> sets;
	SubsetMask acc(n);
	auto collect = [&](const SubsetMask& s) { sets.push_back(s); };
	detail::for_each_prefix_mask(layout, 0, acc, collect);
	return SetFamily(n, std::move(sets));
}

/// Total number of sets generated (before deduplication) when materializing
/// chain_family(n, a), saturating at 2^64 - 1. The scan stops early once the
/// running total passes stop_above.
inline std::uint64_t chain_family_volume(std::size_t n, std::size_t a,
										 std::uint64_t stop_above = std::numeric_limits<std::uint64_t>::max())
{
	constexpr auto max = std::numeric_limits<std::uint64_t>::max();
	std::uint64_t volume = 0;
	for_each_partition(n, a, [&](const PartitionSeq& c) {
		const auto prod = detail::saturating_product_of_successors(c);
		volume = prod > max - volume ? max : volume + prod;
		return volume <= stop_above;
	});
	return volume;
}

/// Union of family_for_partition(n, c) over all partitions c of n into at
/// most a parts. Throws MemoryLimit when the generated volume exceeds cap.
inline SetFamily chain_family(std::size_t n, std::size_t a, std::size_t cap = default_family_cap)
{
	if (n == 0 || a == 0 || a > n)
		throw Error("chain family needs 1 <= a <= n");
	if (const auto volume = chain_family_volume(n, a, cap); volume > cap)
		throw MemoryLimit("chain family for n=" + std::to_string(n) + ", a=" + std::to_string(a) +
						  " generates more than " + std::to_string(cap) + " sets");

	std::vector<SubsetMask> sets;
	if (n <= 26)
	{
		std::vector<bool> seen(std::size_t{1} << n, false);
		for_each_partition(n, a, [&](const PartitionSeq& c) {
			const auto layout = CellLayout::from_partition(c);
			auto mark = [&](std::uint64_t w) { seen[w] = true; };
			detail::for_each_prefix_word(layout, 0, 0, mark);
		});
		for (std::uint64_t w = 0; w < seen.size(); ++w)
			if (seen[w])
				sets.push_back(SubsetMask::from_word(n, w));
		return SetFamily(n, std::move(sets));
	}
	if (n <= 64)
	{
		std::vector<std::uint64_t> words;
		for_each_partition(n, a, [&](const PartitionSeq& c) {
			const auto layout = CellLayout::from_partition(c);
			auto push = [&](std::uint64_t w) { words.push_back(w); };
			detail::for_each_prefix_word(layout, 0, 0, push);
		});
		std::sort(words.begin(), words.end());
		words.erase(std::unique(words.begin(), words.end()), words.end());
		sets.reserve(words.size());
		for (auto w : words)
			sets.push_back(SubsetMask::from_word(n, w));
		return SetFamily(n, std::move(sets));
	}
	for_each_partition(n, a, [&](const PartitionSeq& c) {
		const auto layout = CellLayout::from_partition(c);
		SubsetMask acc(n);
		auto push = [&](const SubsetMask& s) { sets.push_back(s); };
		detail::for_each_prefix_mask(layout, 0, acc, push);
	});
	return SetFamily(n, std::move(sets));
}

/// Membership in chain_family(n, a) without materializing it.
///
/// T is a member iff [n] can be cut into at most a consecutive cells of
/// weakly decreasing length, each met by T in a prefix. Dynamic program over
/// (cell start, largest allowed cell length) giving the fewest cells needed;
/// O(n^2) time and memory.
inline bool member_of_chain_family(const SubsetMask& t, std::size_t n, std::size_t a)
{
	if (t.size() != n)
		throw Error("mask ground set differs from n");
	if (n > membership_cap)
		throw LimitError("chain-family membership limited to n <= " + std::to_string(membership_cap));
	if (n == 0)
		return true;

	std::vector<std::size_t> ones_before(n + 1, 0);
	for (std::size_t i = 0; i < n; ++i)
		ones_before[i + 1] = ones_before[i] + (t.test(i) ? 1 : 0);
	std::vector<std::size_t> run(n + 1, 0);
	for (std::size_t i = n; i-- > 0;)
		run[i] = t.test(i) ? run[i + 1] + 1 : 0;

	constexpr std::uint16_t unreachable = std::numeric_limits<std::uint16_t>::max();
	const std::size_t width = n + 1;
	// fewest[pos * width + len]: cells needed to cover bits pos..n-1 using
	// lengths <= len in weakly decreasing order
	std::vector<std::uint16_t> fewest(width * width, unreachable);
	for (std::size_t len = 0; len <= n; ++len)
		fewest[n * width + len] = 0;
	for (std::size_t pos = n; pos-- > 0;)
	{
		for (std::size_t len = 1; len <= n; ++len)
		{
			auto best = fewest[pos * width + len - 1];
			if (pos + len <= n)
			{
				const auto ones = ones_before[pos + len] - ones_before[pos];
				const auto tail = fewest[(pos + len) * width + len];
				if (ones == std::min(run[pos], len) && tail != unreachable && tail + 1 < best)
					best = static_cast<std::uint16_t>(tail + 1);
			}
			fewest[pos * width + len] = best;
		}
	}
	return fewest[n] <= a;
}

/// Embedding of a poset of width at most a into [n] whose images all lie in
/// chain_family(n, a).
///
/// Elements are renamed along a minimum chain decomposition (chains in
/// decomposition order, each chain bottom to top) and element j is sent to
/// the renamed indices of its downset.
inline Embedding embed_bounded_antichain(const Poset& p, std::size_t a)
{
	const auto n = p.size();
	const auto d = decomposition_into_exactly(p, a);
	std::vector<std::size_t> rank(n);
	std::size_t next = 0;
	for (const auto& c : d.chains)
		for (auto e : c)
			rank[e] = next++;

	Embedding f{n, {}};
	f.images.reserve(n);
	for (Element j = 0; j < n; ++j)
	{
		SubsetMask s(n);
		s.set(rank[j]);
		const auto& below = p.strict_down(j);
		for (auto i = below.next_set(0); i < n; i = below.next_set(i + 1))
			s.set(rank[i]);
		f.images.push_back(std::move(s));
	}
	return f;
}

} // namespace uposet
