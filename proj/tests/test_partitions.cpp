#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <uposet/partitions.hpp>

#include <cmath>
#include <numbers>

using namespace uposet;

TEST_CASE("partitions/reverse lexicographic stream", "[partitions]")
{
	const auto p42 = partitions(4, 2);
	REQUIRE(p42.size() == 3);
	REQUIRE(p42[0].parts == std::vector<std::size_t>{4});
	REQUIRE(p42[1].parts == std::vector<std::size_t>{3, 1});
	REQUIRE(p42[2].parts == std::vector<std::size_t>{2, 2});

	const auto single = partitions(9, 1);
	REQUIRE(single.size() == 1);
	REQUIRE(single[0].parts == std::vector<std::size_t>{9});

	const auto all5 = partitions(5, 5);
	REQUIRE(all5.size() == 7);
	REQUIRE(all5.back().parts == std::vector<std::size_t>(5, 1));
	for (std::size_t i = 1; i < all5.size(); ++i)
		REQUIRE(all5[i].parts < all5[i - 1].parts);
}

TEST_CASE("partitions/every part sequence is a valid partition", "[partitions]")
{
	for (std::size_t n = 1; n <= 18; ++n)
		for (std::size_t k = 1; k <= n; ++k)
			for_each_partition(n, k, [&](const PartitionSeq& c) {
				REQUIRE(c.valid());
				REQUIRE(c.sum() == n);
				REQUIRE(c.count() <= k);
			});
}

TEST_CASE("partition_count/small values", "[partitions]")
{
	REQUIRE(partition_count(0) == 1);
	REQUIRE(partition_count(1) == 1);
	REQUIRE(partition_count(10) == 42);
	REQUIRE(partition_count(50) == 204226);
	REQUIRE(partitions(10, 10).size() == 42);
	REQUIRE(partitions(50, 50).size() == 204226);
}

TEST_CASE("partition_count/stream count agrees up to 40", "[partitions]")
{
	const auto p = partition_counts_upto(40);
	for (std::size_t n = 0; n <= 40; ++n)
	{
		std::size_t streamed = 0;
		for_each_partition(n, n, [&](const PartitionSeq&) { ++streamed; });
		REQUIRE(p[n] == streamed);
	}
}

TEST_CASE("partition_count/agrees with two-index recurrence up to 300", "[partitions]")
{
	const auto p = partition_counts_upto(300);
	for (std::size_t n = 0; n <= 300; ++n)
		REQUIRE(p[n] == oracle::partition_count_dp(n));
}

TEST_CASE("hardy_ramanujan/leading term", "[partitions]")
{
	REQUIRE(hardy_ramanujan(1) ==
			Catch::Approx(std::exp(std::numbers::pi * std::sqrt(2.0 / 3.0)) / (4.0 * std::sqrt(3.0))).epsilon(1e-12));
	const double r100 = partition_count(100).convert_to<double>() / hardy_ramanujan(100);
	const double r1000 = partition_count(1000).convert_to<double>() / hardy_ramanujan(1000);
	REQUIRE(r100 >= 0.90);
	REQUIRE(r100 <= 1.00);
	REQUIRE(std::abs(1.0 - r1000) < std::abs(1.0 - r100));
	REQUIRE_THROWS_AS(hardy_ramanujan(0), Error);
}
