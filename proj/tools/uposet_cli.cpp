// uposet: build universal set families, embed posets into them and report
// their sizes.
//
// Exit codes: 0 success, 1 bad arguments or input, 2 materialization cap
// exceeded, 3 internal verification failure.

#include <uposet/uposet.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_cap = 2;
constexpr int exit_verify = 3;

struct Config
{
	std::size_t n = 0;
	std::optional<std::size_t> a;
	std::size_t cap = uposet::default_family_cap;
	std::uint64_t seed = 1;
	double edge_prob = 0.3;
	std::string in_path;
	std::string out_path;
	std::string range;
	bool list = false;
};

// Writes to --out when given, stdout otherwise.
template <class Write>
void emit(const std::string& path, Write write)
{
	if (path.empty())
	{
		write(std::cout);
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw uposet::Error("cannot open '" + path + "' for writing");
	write(out);
}

std::string fixed(double x, int digits = 6)
{
	std::ostringstream s;
	s << std::fixed << std::setprecision(digits) << x;
	return s.str();
}

double log2_big(const uposet::BigInt& v) { return std::log2(v.convert_to<double>()); }

int cmd_family(const Config& cfg)
{
	const auto a = cfg.a.value_or(uposet::default_threshold(cfg.n));
	const auto family = uposet::chain_family(cfg.n, a, cfg.cap);
	emit(cfg.out_path, [&](std::ostream& out) { uposet::io::write_family(out, family); });
	return exit_ok;
}

int cmd_embed(const Config& cfg)
{
	std::ifstream in(cfg.in_path, std::ios::binary);
	if (!in)
		throw uposet::ParseError("cannot open '" + cfg.in_path + "'");
	const auto poset = uposet::io::read_poset(in);
	if (poset.size() == 0)
		throw uposet::ParseError("poset must have at least one element");
	const auto a = cfg.a.value_or(uposet::default_threshold(poset.size()));
	const auto u = uposet::build_universal(poset.size(), a, cfg.cap);
	const auto result = uposet::embed(u, poset);
	if (const auto check = uposet::certify(u, poset, result.embedding); !check)
	{
		std::cerr << "verification failed: " << check.reason << '\n';
		return exit_verify;
	}
	emit(cfg.out_path, [&](std::ostream& out) { uposet::io::write_embedding(out, result.embedding); });
	std::cout << "branch=" << uposet::to_string(result.branch) << " width=" << result.width << " a=" << u.a()
			  << " m=" << u.m() << '\n';
	std::cout << "VERIFIED\n";
	return exit_ok;
}

int cmd_verify_all(const Config& cfg)
{
	const auto r = uposet::verify_universality(cfg.n);
	std::cout << "n=" << r.n << " total=" << r.total << " passed=" << r.passed << " chain=" << r.chain_branch
			  << " antichain=" << r.antichain_branch << " lattice=" << r.lattice_branch << '\n';
	std::cout << r.passed << '/' << r.total << '\n';
	for (const auto& p : r.failures)
		std::cout << "FAILED:\n" << uposet::io::to_text(p);
	return r.ok() ? exit_ok : exit_verify;
}

std::pair<std::size_t, std::size_t> parse_range(const Config& cfg)
{
	if (cfg.range.empty())
		return {cfg.n, cfg.n};
	const auto dots = cfg.range.find("..");
	try
	{
		if (dots == std::string::npos)
		{
			const auto v = std::stoul(cfg.range);
			return {v, v};
		}
		return {std::stoul(cfg.range.substr(0, dots)), std::stoul(cfg.range.substr(dots + 2))};
	}
	catch (const std::logic_error&)
	{
		throw uposet::ParseError("range must look like 12..20 or 15");
	}
}

int cmd_stats(const Config& cfg)
{
	const auto [lo, hi] = parse_range(cfg);
	if (lo == 0 || hi < lo)
		throw uposet::ParseError("stats needs 1 <= lo <= hi");
	for (auto n = lo; n <= hi; ++n)
	{
		const auto a = cfg.a.value_or(uposet::default_threshold(n));
		const uposet::UniversalFamily u(n, a, cfg.cap);
		const auto bound = uposet::size_bound(n);
		std::cout << "n=" << n << " a=" << u.a() << " ell=" << u.ell() << " m=" << u.m();
		if (u.materialized())
		{
			const auto card = u.cardinality();
			const auto bits = log2_big(card);
			std::cout << " cardinality=" << card << " size_bound=" << bound << " pow2_n=" << (uposet::BigInt(1) << n)
					  << " ratio_bits=" << fixed(bits / static_cast<double>(n))
					  << " excess_per_sqrt_n=" << fixed((bits - 2.0 * static_cast<double>(n) / 3.0) / std::sqrt(static_cast<double>(n)));
		}
		else
		{
			std::cout << " cardinality=predicate-only size_bound=" << bound << " pow2_n=" << (uposet::BigInt(1) << n)
					  << " ratio_bits=predicate-only excess_per_sqrt_n=predicate-only";
		}
		std::cout << '\n';
	}
	return exit_ok;
}

int cmd_partitions(const Config& cfg)
{
	std::cout << uposet::partition_count(cfg.n) << '\n';
	if (cfg.list)
	{
		uposet::for_each_partition(cfg.n, cfg.n, [](const uposet::PartitionSeq& c) {
			for (std::size_t i = 0; i < c.parts.size(); ++i)
				std::cout << (i ? " " : "") << c.parts[i];
			std::cout << '\n';
		});
	}
	return exit_ok;
}

int cmd_random_poset(const Config& cfg)
{
	const auto p = uposet::random_poset(cfg.n, cfg.edge_prob, cfg.seed);
	emit(cfg.out_path, [&](std::ostream& out) { uposet::io::write_poset(out, p); });
	return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Universal poset families inside the Boolean lattice"};
	app.require_subcommand(1);
	Config cfg;

	auto* family = app.add_subcommand("family", "Write the chain family over [n] for threshold a");
	family->add_option("--n", cfg.n, "Ground set size")->required()->check(CLI::PositiveNumber);
	family->add_option("--a", cfg.a, "Chain budget (default ceil(n/3))")->check(CLI::PositiveNumber);
	family->add_option("--cap", cfg.cap, "Maximum number of generated sets");
	family->add_option("--out", cfg.out_path, "Output file (default stdout)");

	auto* embed = app.add_subcommand("embed", "Embed a poset file into the universal family and verify it");
	embed->add_option("--in", cfg.in_path, "Poset file")->required();
	embed->add_option("--a", cfg.a, "Antichain threshold (default ceil(n/3))")->check(CLI::PositiveNumber);
	embed->add_option("--cap", cfg.cap, "Maximum number of generated sets");
	embed->add_option("--out", cfg.out_path, "Embedding file (default stdout)");

	auto* verify = app.add_subcommand("verify-all", "Embed and verify every labelled poset on n <= 5 elements");
	verify->add_option("--n", cfg.n, "Number of elements")->required();

	auto* stats = app.add_subcommand("stats", "Cardinality and bound per n");
	stats->add_option("--n", cfg.range, "n or range lo..hi")->required();
	stats->add_option("--a", cfg.a, "Fixed threshold instead of ceil(n/3)")->check(CLI::PositiveNumber);
	stats->add_option("--cap", cfg.cap, "Maximum number of generated sets");

	auto* parts = app.add_subcommand("partitions", "Print p(n), optionally every partition of n");
	parts->add_option("--n", cfg.n, "Integer to partition")->required();
	parts->add_flag("--list", cfg.list, "Also list the partitions, reverse lexicographic");

	auto* rnd = app.add_subcommand("random-poset", "Write a random poset (random order, random arcs, closure)");
	rnd->add_option("--n", cfg.n, "Number of elements")->required();
	rnd->add_option("--p", cfg.edge_prob, "Arc probability")->check(CLI::Range(0.0, 1.0));
	rnd->add_option("--seed", cfg.seed, "Random seed");
	rnd->add_option("--out", cfg.out_path, "Output file (default stdout)");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp& e)
	{
		return app.exit(e);
	}
	catch (const CLI::CallForAllHelp& e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError& e)
	{
		app.exit(e);
		return exit_usage;
	}

	try
	{
		if (*family)
			return cmd_family(cfg);
		if (*embed)
			return cmd_embed(cfg);
		if (*verify)
			return cmd_verify_all(cfg);
		if (*stats)
			return cmd_stats(cfg);
		if (*parts)
			return cmd_partitions(cfg);
		if (*rnd)
			return cmd_random_poset(cfg);
	}
	catch (const uposet::MemoryLimit& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_cap;
	}
	catch (const uposet::VerificationError& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_verify;
	}
	catch (const uposet::Error& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_usage;
	}
	return exit_usage;
}
