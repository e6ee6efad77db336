#pragma once

#include <uposet/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

namespace uposet
{

using BigInt = boost::multiprecision::cpp_int;

/// An integer partition c_1 >= c_2 >= ... >= c_k >= 1.
struct PartitionSeq
{
	std::vector<std::size_t> parts;

	[[nodiscard]] std::size_t sum() const noexcept { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }
	[[nodiscard]] std::size_t count() const noexcept { return parts.size(); }

	[[nodiscard]] bool valid() const noexcept
	{
		for (std::size_t i = 0; i < parts.size(); ++i)
			if (parts[i] == 0 || (i > 0 && parts[i] > parts[i - 1]))
				return false;
		return true;
	}

	friend bool operator==(const PartitionSeq&, const PartitionSeq&) = default;
};

namespace detail
{

// Returns false once the visitor asked to stop.
template <class Visit>
bool partitions_rec(std::size_t remaining, std::size_t max_part, std::size_t parts_left,
					std::vector<std::size_t>& prefix, Visit& visit)
{
	if (remaining == 0)
	{
		if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const PartitionSeq&>, bool>)
			return visit(PartitionSeq{prefix});
		else
		{
			visit(PartitionSeq{prefix});
			return true;
		}
	}
	if (parts_left == 0)
		return true;
	const std::size_t top = std::min(max_part, remaining);
	for (std::size_t c = top; c >= 1; --c)
	{
		// the remaining parts can absorb at most c each
		if (c * parts_left < remaining)
			break;
		prefix.push_back(c);
		const bool go_on = partitions_rec(remaining - c, c, parts_left - 1, prefix, visit);
		prefix.pop_back();
		if (!go_on)
			return false;
	}
	return true;
}

} // namespace detail

/// Visits every partition of n into at most max_parts parts, each once, in
/// reverse lexicographic order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
/// A visitor returning bool stops the walk by returning false.
template <class Visit>
void for_each_partition(std::size_t n, std::size_t max_parts, Visit&& visit)
{
	std::vector<std::size_t> prefix;
	detail::partitions_rec(n, n, max_parts, prefix, visit);
}

inline std::vector<PartitionSeq> partitions(std::size_t n, std::size_t max_parts)
{
	std::vector<PartitionSeq> out;
	for_each_partition(n, max_parts, [&](const PartitionSeq& c) { out.push_back(c); });
	return out;
}

/// p(0), ..., p(n) by Euler's pentagonal number recurrence
/// p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<BigInt> partition_counts_upto(std::size_t n)
{
	std::vector<BigInt> p(n + 1);
	p[0] = 1;
	for (std::size_t i = 1; i <= n; ++i)
	{
		BigInt total = 0;
		for (std::size_t k = 1;; ++k)
		{
			const std::size_t g1 = k * (3 * k - 1) / 2;
			if (g1 > i)
				break;
			const std::size_t g2 = k * (3 * k + 1) / 2;
			BigInt term = p[i - g1];
			if (g2 <= i)
				term += p[i - g2];
			if (k % 2 == 1)
				total += term;
			else
				total -= term;
		}
		p[i] = std::move(total);
	}
	return p;
}

inline BigInt partition_count(std::size_t n) { return partition_counts_upto(n)[n]; }

/// Leading Hardy-Ramanujan term exp(pi sqrt(2n/3)) / (4 sqrt(3) n).
/// A sanity check on partition_count, never used to compute it.
inline double hardy_ramanujan(std::size_t n)
{
	if (n == 0)
		throw Error("Hardy-Ramanujan estimate needs n >= 1");
	const double x = static_cast<double>(n);
	return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * std::sqrt(3.0) * x);
}

} // namespace uposet
