#pragma once

#include <uposet/errors.hpp>
#include <uposet/poset.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace uposet
{

inline constexpr std::size_t default_enumeration_cap = 6;
inline constexpr std::size_t bruteforce_antichain_cap = 20;

namespace detail
{

using SmallRows = std::vector<std::uint32_t>;

inline Poset to_poset(const SmallRows& up)
{
	const auto n = up.size();
	std::vector<SubsetMask> rows;
	rows.reserve(n);
	for (auto r : up)
		rows.push_back(SubsetMask::from_word(n, r));
	return Poset::from_closed_rows(std::move(rows));
}

// Extends a closed strict relation on 0..k-1 by element k in every possible
// way. A labelled poset on k+1 elements restricts to exactly one poset on the
// first k, so each result is produced once.
template <class Visit>
void extend_posets(SmallRows& up, std::size_t n, Visit& visit)
{
	const auto k = up.size();
	if (k == n)
	{
		visit(up);
		return;
	}
	const std::uint32_t all = (std::uint32_t{1} << k) - 1;
	std::vector<std::uint32_t> down(k, 0);
	for (std::size_t u = 0; u < k; ++u)
		for (std::size_t v = 0; v < k; ++v)
			if ((up[u] >> v) & 1u)
				down[v] |= std::uint32_t{1} << u;

	for (std::uint32_t below = 0; below <= all; ++below)
	{
		bool closed = true;
		std::uint32_t common_up = all;
		for (std::uint32_t rest = below; rest != 0; rest &= rest - 1)
		{
			const auto d = static_cast<std::size_t>(std::countr_zero(rest));
			if ((down[d] & ~below) != 0)
			{
				closed = false;
				break;
			}
			common_up &= up[d];
		}
		if (!closed)
			continue;
		// every element above the new one must lie above all of `below`
		const std::uint32_t candidates = common_up & ~below;
		for (std::uint32_t above = candidates;; above = (above - 1) & candidates)
		{
			bool up_closed = true;
			for (std::uint32_t rest = above; rest != 0; rest &= rest - 1)
			{
				const auto z = static_cast<std::size_t>(std::countr_zero(rest));
				if ((up[z] & ~above) != 0)
				{
					up_closed = false;
					break;
				}
			}
			if (up_closed)
			{
				SmallRows next = up;
				for (std::uint32_t rest = below; rest != 0; rest &= rest - 1)
					next[static_cast<std::size_t>(std::countr_zero(rest))] |= std::uint32_t{1} << k;
				next.push_back(above);
				extend_posets(next, n, visit);
			}
			if (above == 0)
				break;
		}
	}
}

} // namespace detail

/// Calls visit(const Poset&) once for every labelled poset on n elements.
template <class Visit>
void enumerate_posets(std::size_t n, Visit&& visit, std::size_t cap = default_enumeration_cap)
{
	if (n > cap || n > 8)
		throw LimitError("poset enumeration limited to n <= " + std::to_string(cap < 8 ? cap : 8));
	detail::SmallRows up;
	auto adapt = [&](const detail::SmallRows& rows) { visit(detail::to_poset(rows)); };
	detail::extend_posets(up, n, adapt);
}

inline std::vector<Poset> all_posets(std::size_t n, std::size_t cap = default_enumeration_cap)
{
	std::vector<Poset> out;
	enumerate_posets(n, [&](const Poset& p) { out.push_back(p); }, cap);
	return out;
}

/// A largest antichain by exhaustive search over all element subsets.
/// Among the largest, returns the one with the numerically smallest mask.
inline std::vector<Element> max_antichain_bruteforce(const Poset& p)
{
	const auto n = p.size();
	if (n > bruteforce_antichain_cap)
		throw LimitError("brute-force antichain search limited to n <= " + std::to_string(bruteforce_antichain_cap));
	std::vector<std::uint32_t> comparable(n, 0);
	for (Element u = 0; u < n; ++u)
		for (Element v = 0; v < n; ++v)
			if (u != v && p.comparable(u, v))
				comparable[u] |= std::uint32_t{1} << v;

	std::uint32_t best = 0;
	int best_size = 0;
	const std::uint32_t limit = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
	for (std::uint32_t s = 1; s != 0 && s <= limit; ++s)
	{
		if (std::popcount(s) <= best_size)
			continue;
		bool independent = true;
		for (std::uint32_t rest = s; rest != 0; rest &= rest - 1)
		{
			if (comparable[static_cast<std::size_t>(std::countr_zero(rest))] & s)
			{
				independent = false;
				break;
			}
		}
		if (independent)
		{
			best = s;
			best_size = std::popcount(s);
		}
	}
	std::vector<Element> out;
	for (std::uint32_t rest = best; rest != 0; rest &= rest - 1)
		out.push_back(static_cast<Element>(std::countr_zero(rest)));
	return out;
}

} // namespace uposet
