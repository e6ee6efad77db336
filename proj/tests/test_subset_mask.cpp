#include <catch_amalgamated.hpp>

#include <uposet/subset_mask.hpp>

#include <random>

using uposet::SubsetMask;

TEST_CASE("SubsetMask/basic bit operations", "[mask]")
{
	auto s = SubsetMask::from_elements(5, {1, 3});
	REQUIRE(s.size() == 5);
	REQUIRE(s.test(0));
	REQUIRE_FALSE(s.test(1));
	REQUIRE(s.test(2));
	REQUIRE(s.count() == 2);
	REQUIRE(s.to_string() == "1,3");
	REQUIRE(SubsetMask(5).to_string() == "-");

	REQUIRE(s.is_subset_of(SubsetMask::full(5)));
	REQUIRE_FALSE(SubsetMask::full(5).is_subset_of(s));
	REQUIRE(s.fits_within(3));
	REQUIRE_FALSE(s.fits_within(2));
	REQUIRE(s.next_set(1) == 2);
	REQUIRE(s.next_set(3) == 5);
}

TEST_CASE("SubsetMask/wide ground sets", "[mask]")
{
	SubsetMask s(130);
	s.set(0);
	s.set(64);
	s.set(129);
	REQUIRE(s.count() == 3);
	REQUIRE(s.next_set(1) == 64);
	REQUIRE(s.next_set(65) == 129);
	REQUIRE(s.fits_within(130));
	REQUIRE_FALSE(s.fits_within(129));
	REQUIRE(s.to_string() == "1,65,130");
	REQUIRE(SubsetMask::parse(130, "1,65,130") == s);

	auto w = SubsetMask::from_elements(3, {2}).widened(70);
	REQUIRE(w.size() == 70);
	REQUIRE(w.to_string() == "2");
	REQUIRE_THROWS_AS(SubsetMask::from_elements(70, {70}).widened(3), uposet::Error);
}

TEST_CASE("SubsetMask/ordering is numeric with element 1 least significant", "[mask]")
{
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 500; ++trial)
	{
		const std::uint64_t x = rng() >> 44, y = rng() >> 44;
		const auto a = SubsetMask::from_word(20, x);
		const auto b = SubsetMask::from_word(20, y);
		REQUIRE((a < b) == (x < y));
		REQUIRE((a == b) == (x == y));
		REQUIRE(a.is_subset_of(b) == ((x & ~y) == 0));
	}
}

TEST_CASE("SubsetMask/parse rejects malformed text", "[mask]")
{
	REQUIRE_THROWS_AS(SubsetMask::parse(4, ""), uposet::ParseError);
	REQUIRE_THROWS_AS(SubsetMask::parse(4, "0"), uposet::ParseError);
	REQUIRE_THROWS_AS(SubsetMask::parse(4, "5"), uposet::ParseError);
	REQUIRE_THROWS_AS(SubsetMask::parse(4, "2,1"), uposet::ParseError);
	REQUIRE_THROWS_AS(SubsetMask::parse(4, "1,,2"), uposet::ParseError);
	REQUIRE_THROWS_AS(SubsetMask::parse(4, "1,x"), uposet::ParseError);
	REQUIRE(SubsetMask::parse(4, "-").empty());
}
