// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include "oracles.hpp"

#include <uposet/uposet.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace uposet;

namespace
{

struct Outcome
{
	bool pass = true;
	std::string detail;

	void fail(const std::string& why)
	{
		if (pass)
			detail = why;
		pass = false;
	}
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
	return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Every labelled poset on n = 1..5 embeds into build_universal(n).
Outcome exhaustive_universality()
{
	Outcome o;
	const auto start = Clock::now();
	const std::size_t expected[] = {0, 1, 3, 19, 219, 4231};
	std::size_t total = 0;
	for (std::size_t n = 1; n <= 5; ++n)
	{
		const auto filtered = oracle::count_posets_by_filter(n);
		if (filtered != expected[n])
			o.fail("relation-filter count " + std::to_string(filtered) + " at n=" + std::to_string(n));
		const auto u = build_universal(n);
		std::size_t count = 0, failures = 0;
		enumerate_posets(n, [&](const Poset& p) {
			++count;
			const auto e = embed(u, p);
			if (!certify(u, p, e.embedding))
				++failures;
		});
		if (count != expected[n])
			o.fail("enumerated " + std::to_string(count) + " posets at n=" + std::to_string(n));
		if (failures != 0)
			o.fail(std::to_string(failures) + " failed embeddings at n=" + std::to_string(n));
		total += count;
	}
	const auto secs = seconds_since(start);
	if (secs >= 300.0)
		o.fail("took " + std::to_string(secs) + " s");
	if (o.pass)
		o.detail = std::to_string(total) + " posets, 0 failures, " + std::to_string(secs) + " s";
	return o;
}

// 2. Chain-cover size equals maximum antichain size.
Outcome dilworth_equality()
{
	Outcome o;
	std::size_t checked = 0;
	auto check = [&](const Poset& p) {
		++checked;
		const auto chains = min_chain_decomposition(p).size();
		const auto anti = max_antichain(p).size();
		const auto brute = max_antichain_bruteforce(p).size();
		if (chains != anti || anti != brute)
			o.fail("chains=" + std::to_string(chains) + " antichain=" + std::to_string(anti) +
				   " brute=" + std::to_string(brute) + " on\n" + io::to_text(p));
	};
	for (std::size_t n = 1; n <= 5; ++n)
		enumerate_posets(n, check);
	std::mt19937_64 rng(20251016);
	for (int trial = 0; trial < 1000; ++trial)
	{
		const std::size_t n = 1 + rng() % 15;
		check(random_poset(n, static_cast<double>(rng() % 100) / 150.0, rng()));
	}
	if (o.pass)
		o.detail = std::to_string(checked) + " posets, 0 discrepancies";
	return o;
}

// 3. |family_for_partition(n, c)| = prod (c_i + 1) for every partition, n <= 20.
Outcome prefix_family_sizes()
{
	Outcome o;
	std::size_t checked = 0;
	for (std::size_t n = 1; n <= 20; ++n)
		for_each_partition(n, n, [&](const PartitionSeq& c) {
			++checked;
			BigInt expected = 1;
			for (auto part : c.parts)
				expected *= part + 1;
			const auto size = family_for_partition(n, c).size();
			if (BigInt(size) != expected)
				o.fail("n=" + std::to_string(n) + ": size " + std::to_string(size) + " != " + expected.str());
		});
	if (o.pass)
		o.detail = std::to_string(checked) + " partitions";
	return o;
}

// 4. |chain_family(n, a)| <= p(n) a (n/a + 1)^a, right side in rationals.
Outcome chain_family_bound()
{
	using boost::multiprecision::cpp_rational;
	Outcome o;
	const auto p = partition_counts_upto(20);
	std::size_t checked = 0;
	for (std::size_t n = 1; n <= 20; ++n)
		for (std::size_t a = 1; a <= n; ++a)
		{
			++checked;
			const auto size = chain_family(n, a, std::size_t{1} << 26).size();
			const cpp_rational base = cpp_rational(BigInt(n), BigInt(a)) + 1;
			cpp_rational bound = cpp_rational(p[n] * a);
			for (std::size_t i = 0; i < a; ++i)
				bound *= base;
			if (cpp_rational(BigInt(size)) > bound)
				o.fail("n=" + std::to_string(n) + " a=" + std::to_string(a) + ": " + std::to_string(size) + " > bound");
		}
	if (o.pass)
		o.detail = std::to_string(checked) + " (n, a) pairs";
	return o;
}

// 5. Antichain construction on 10^4 random posets with planted antichains.
Outcome antichain_at_scale()
{
	Outcome o;
	const auto start = Clock::now();
	std::mt19937_64 rng(60);
	for (int trial = 0; trial < 10000; ++trial)
	{
		const std::size_t n = 2 + rng() % 59;
		const std::size_t lo = std::max<std::size_t>(2, default_threshold(n));
		const std::size_t a = lo + rng() % (n - lo + 1);
		auto [p, planted] = oracle::planted_antichain_poset(n, a, 0.02 + static_cast<double>(rng() % 50) / 100.0, rng);
		const auto f = embed_with_antichain(p, planted);
		const auto m = n - a + min_ell(a);
		if (f.m != m)
			o.fail("ground set " + std::to_string(f.m) + " != " + std::to_string(m));
		for (const auto& s : f.images)
			if (!s.fits_within(m))
				o.fail("image outside [m]");
		if (!check_embedding(p, f))
			o.fail("check_embedding failed at n=" + std::to_string(n) + " a=" + std::to_string(a));
	}
	const auto secs = seconds_since(start);
	if (secs >= 120.0)
		o.fail("took " + std::to_string(secs) + " s");
	if (o.pass)
		o.detail = "10000 posets, 0 failures, " + std::to_string(secs) + " s";
	return o;
}

// 6. Exact cardinalities for 4 <= n <= 20 against the bound and 2^n.
Outcome universal_cardinality()
{
	// Recorded on first computation and confirmed by an independent
	// set-union count; regressions against these are failures.
	static const std::pair<std::size_t, unsigned long> fixture[] = {
		{4, 16},	   {5, 32},		  {6, 64},		 {7, 128},		{8, 256},	  {9, 512},
		{10, 1024},	   {11, 2048},	  {12, 4096},	 {13, 5354},	{14, 10122},  {15, 19476},
		{16, 27960},   {17, 51284},	  {18, 94447},	 {19, 200454},	{20, 371008},
	};
	Outcome o;
	std::ostringstream summary;
	for (const auto& [n, recorded] : fixture)
	{
		const auto card = build_universal(n).cardinality();
		if (card != recorded)
			o.fail("n=" + std::to_string(n) + ": cardinality " + card.str() + " != fixture " + std::to_string(recorded));
		if (card > size_bound(n))
			o.fail("n=" + std::to_string(n) + ": above size_bound");
		if (card > (BigInt(1) << n))
			o.fail("n=" + std::to_string(n) + ": above 2^n");
		if (n == 20)
			summary << "n=20: " << card << " <= " << size_bound(20) << ", 2^20=" << (1u << 20);
	}
	if (o.pass)
		o.detail = summary.str();
	return o;
}

// 7. Partition engine.
Outcome partition_engine()
{
	Outcome o;
	const auto p = partition_counts_upto(40);
	for (std::size_t n = 0; n <= 40; ++n)
	{
		std::size_t streamed = 0;
		for_each_partition(n, n, [&](const PartitionSeq&) { ++streamed; });
		if (p[n] != streamed)
			o.fail("n=" + std::to_string(n) + ": recurrence " + p[n].str() + " vs stream " + std::to_string(streamed));
	}
	if (partition_count(50) != 204226 || partitions(50, 50).size() != 204226)
		o.fail("p(50) != 204226");
	const double r100 = partition_count(100).convert_to<double>() / hardy_ramanujan(100);
	const double r1000 = partition_count(1000).convert_to<double>() / hardy_ramanujan(1000);
	if (!(r100 >= 0.90 && r100 <= 1.00))
		o.fail("p(100)/HR(100) = " + std::to_string(r100));
	if (!(std::abs(1.0 - r1000) < std::abs(1.0 - r100)))
		o.fail("ratio at 1000 not closer to 1");
	if (o.pass)
		o.detail = "p(100)/HR=" + std::to_string(r100) + ", p(1000)/HR=" + std::to_string(r1000);
	return o;
}

std::pair<int, std::string> run_cli(const std::string& args)
{
	const std::string cmd = std::string(UPOSET_CLI) + " " + args + " 2>/dev/null";
	FILE* pipe = popen(cmd.c_str(), "r");
	if (!pipe)
		return {-1, {}};
	std::string out;
	char buf[4096];
	while (auto got = fread(buf, 1, sizeof buf, pipe))
		out.append(buf, got);
	const int status = pclose(pipe);
	return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 8. CLI output is byte-identical across runs.
Outcome determinism()
{
	Outcome o;
	const std::pair<std::size_t, double> cases[] = {{9, 0.3}, {30, 0.1}, {45, 0.05}};
	for (const auto& [n, prob] : cases)
	{
		const auto path = "acceptance_poset_" + std::to_string(n) + ".txt";
		std::ofstream(path, std::ios::binary) << io::to_text(random_poset(n, prob, n));
		const auto first = run_cli("embed --in " + path);
		const auto second = run_cli("embed --in " + path);
		if (first.first != 0 || first.second.find("VERIFIED") == std::string::npos)
			o.fail("embed failed on " + path);
		if (first != second)
			o.fail("embed output differs on " + path);
		std::filesystem::remove(path);
	}
	for (const char* args : {"family --n 12 --a 4", "family --n 18"})
	{
		const auto first = run_cli(args);
		const auto second = run_cli(args);
		if (first.first != 0)
			o.fail(std::string(args) + " failed");
		if (first != second)
			o.fail(std::string(args) + " output differs");
	}
	if (o.pass)
		o.detail = "3 embed inputs, 2 family invocations";
	return o;
}

// 9. write -> parse -> write is byte-identical.
Outcome round_trips()
{
	Outcome o;
	std::mt19937_64 rng(909);
	for (int trial = 0; trial < 100; ++trial)
	{
		const std::size_t n = 1 + rng() % 40;
		const auto p = random_poset(n, static_cast<double>(rng() % 40) / 100.0, rng());
		const auto ptext = io::to_text(p);
		if (io::to_text(io::poset_from_text(ptext)) != ptext || !(io::poset_from_text(ptext) == p))
			o.fail("poset round trip");

		const std::size_t m = 1 + rng() % 90;
		std::vector<SubsetMask> sets;
		const std::size_t count = rng() % 50;
		for (std::size_t k = 0; k < count; ++k)
		{
			SubsetMask s(m);
			for (std::size_t i = 0; i < m; ++i)
				if (rng() % 3 == 0)
					s.set(i);
			sets.push_back(s);
		}
		const SetFamily fam(m, sets);
		const auto ftext = io::to_text(fam);
		if (io::to_text(io::family_from_text(ftext)) != ftext || !(io::family_from_text(ftext) == fam))
			o.fail("family round trip");

		const auto e = embed(UniversalFamily(n, default_threshold(n), 1 << 14), p).embedding;
		const auto etext = io::to_text(e);
		if (io::to_text(io::embedding_from_text(etext)) != etext || !(io::embedding_from_text(etext) == e))
			o.fail("embedding round trip");
	}
	if (o.pass)
		o.detail = "100 posets, families and embeddings";
	return o;
}

} // namespace

int main()
{
	const std::pair<const char*, std::function<Outcome()>> criteria[] = {
		{"1 exhaustive universality n<=5", exhaustive_universality},
		{"2 Dilworth equality", dilworth_equality},
		{"3 prefix family size formula", prefix_family_sizes},
		{"4 chain family size bound", chain_family_bound},
		{"5 antichain embedding at scale", antichain_at_scale},
		{"6 universal family cardinality", universal_cardinality},
		{"7 partition engine", partition_engine},
		{"8 CLI determinism", determinism},
		{"9 format round trips", round_trips},
	};
	int failed = 0;
	for (const auto& [name, run] : criteria)
	{
		Outcome o;
		try
		{
			o = run();
		}
		catch (const std::exception& e)
		{
			o.fail(std::string("exception: ") + e.what());
		}
		std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << std::endl;
		if (!o.pass)
			++failed;
	}
	std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
	return failed == 0 ? 0 : 1;
}
