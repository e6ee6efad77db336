#pragma once

#include <uposet/embedding.hpp>
#include <uposet/errors.hpp>
#include <uposet/poset.hpp>
#include <uposet/subset_mask.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace uposet
{

/// Smallest l with C(l, floor(l/2)) >= a.
inline std::size_t min_ell(std::size_t a)
{
	if (a == 0)
		throw Error("min_ell needs a >= 1");
	for (std::size_t ell = 0;; ++ell)
	{
		const std::size_t k = ell / 2;
		unsigned __int128 central = 1;
		for (std::size_t i = 1; i <= k; ++i)
			central = central * (ell - k + i) / i;
		if (central >= a)
			return ell;
	}
}

/// Partition of a poset around an antichain A into the elements below A,
/// A itself with distinct floor(l/2)-subset labels, and everything else.
///
/// Ground-set indexing (0-indexed bits, 1-indexed in print): below element
/// below[i] owns bit i, labels live in bits [b, b+l), above element above[j]
/// owns bit b + l + j.
struct AntichainSplit
{
	std::vector<Element> below;
	std::vector<std::pair<Element, SubsetMask>> antichain;
	std::vector<Element> above;
	std::size_t b = 0;
	std::size_t ell = 0;

	/// Ground set size n - a + l.
	[[nodiscard]] std::size_t ground_size() const noexcept { return below.size() + ell + above.size(); }
};

/// Splits p around the antichain `a_set` (|a_set| >= 2).
///
/// below = elements outside A lying under some member of A; above = the rest
/// outside A; both in ascending element order. Antichain members, ascending,
/// receive the floor(l/2)-subsets of the label block in colexicographic order.
inline AntichainSplit classify(const Poset& p, std::vector<Element> a_set)
{
	const auto n = p.size();
	std::sort(a_set.begin(), a_set.end());
	if (std::adjacent_find(a_set.begin(), a_set.end()) != a_set.end())
		throw NotAnAntichain("antichain lists an element twice");
	if (a_set.size() < 2)
		throw SizeError("antichain construction needs |A| >= 2, got " + std::to_string(a_set.size()));
	for (auto e : a_set)
		if (e >= n)
			throw Error("antichain element " + std::to_string(e) + " outside poset");
	for (std::size_t i = 0; i < a_set.size(); ++i)
		for (std::size_t j = i + 1; j < a_set.size(); ++j)
			if (p.comparable(a_set[i], a_set[j]))
				throw NotAnAntichain("elements " + std::to_string(a_set[i]) + " and " + std::to_string(a_set[j]) +
									 " are comparable");

	SubsetMask in_a(n), under_a(n);
	for (auto y : a_set)
	{
		in_a.set(y);
		under_a |= p.strict_down(y);
	}

	AntichainSplit split;
	for (Element e = 0; e < n; ++e)
	{
		if (in_a.test(e))
			continue;
		if (under_a.test(e))
			split.below.push_back(e);
		else
			split.above.push_back(e);
	}
	split.b = split.below.size();
	split.ell = min_ell(a_set.size());

	const auto m = n - a_set.size() + split.ell;
	const std::size_t k = split.ell / 2;
	// Gosper's hack walks k-subsets of [0, l) in increasing numeric order,
	// which is colexicographic order.
	std::uint64_t label = (std::uint64_t{1} << k) - 1;
	for (auto y : a_set)
	{
		SubsetMask s(m);
		for (std::size_t i = 0; i < split.ell; ++i)
			if ((label >> i) & 1u)
				s.set(split.b + i);
		split.antichain.emplace_back(y, std::move(s));
		const std::uint64_t low = label & (~label + 1);
		const std::uint64_t ripple = label + low;
		label = (((ripple ^ label) >> 2) / low) | ripple;
	}
	return split;
}

/// Embedding into [n - a + l] of a poset containing the antichain `a_set`
/// of size a >= 2, l = min_ell(a):
///
///   f(x_i) = {j <= b : x_j <= x_i}
///   f(y_S) = {i <= b : x_i <= y_S} + S + {above j : not y_S <= z_j}
///   f(z_j) = {i <= b : x_i <= z_j} + [b+1, b+l] + {above i : not z_j <= z_i}
inline Embedding embed_with_antichain(const Poset& p, const std::vector<Element>& a_set)
{
	const auto split = classify(p, a_set);
	const auto n = p.size();
	const auto m = split.ground_size();
	const auto b = split.b;
	const auto top = b + split.ell;

	SubsetMask label_block(m);
	label_block.set_range(b, top);

	auto below_part = [&](Element v) {
		SubsetMask s(m);
		for (std::size_t i = 0; i < b; ++i)
			if (p.leq(split.below[i], v))
				s.set(i);
		return s;
	};
	auto above_part = [&](Element v) {
		SubsetMask s(m);
		for (std::size_t j = 0; j < split.above.size(); ++j)
			if (!p.leq(v, split.above[j]))
				s.set(top + j);
		return s;
	};

	Embedding f{m, std::vector<SubsetMask>(n)};
	for (auto x : split.below)
		f.images[x] = below_part(x);
	for (const auto& [y, label] : split.antichain)
		f.images[y] = below_part(y) | label | above_part(y);
	for (auto z : split.above)
		f.images[z] = below_part(z) | label_block | above_part(z);
	return f;
}

} // namespace uposet
