#pragma once

#include <uposet/antichain_embed.hpp>
#include <uposet/chain_family.hpp>
#include <uposet/dilworth.hpp>
#include <uposet/embedding.hpp>
#include <uposet/enumerate.hpp>
#include <uposet/errors.hpp>
#include <uposet/partitions.hpp>
#include <uposet/poset.hpp>
#include <uposet/set_family.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace uposet
{

inline constexpr std::size_t universality_check_cap = 5;

/// Default antichain threshold ceil(n/3).
inline constexpr std::size_t default_threshold(std::size_t n) noexcept { return (n + 2) / 3; }

/// The union of the chain family over [n] (posets of width <= a) and the
/// whole Boolean lattice on [m], m = n - a + l (posets with an antichain of
/// size a), viewed inside 2^[n].
///
/// The lattice part is never materialized; the chain part is materialized
/// when its generation volume fits the cap and answered by a predicate
/// otherwise. For a < 2 the antichain construction does not apply and the
/// family is all of 2^[n].
class UniversalFamily
{
public:
	UniversalFamily(std::size_t n, std::size_t a, std::size_t cap = default_family_cap)
		: n_(n), a_(a)
	{
		if (n == 0)
			throw Error("universal family needs n >= 1");
		if (a == 0 || a > n)
			throw Error("threshold a must satisfy 1 <= a <= n");
		ell_ = min_ell(a);
		full_lattice_ = a < 2;
		m_ = full_lattice_ ? n : n - a + ell_;
		if (!full_lattice_ && chain_family_volume(n, a, cap) <= cap)
			explicit_ = chain_family(n, a, cap);
	}

	[[nodiscard]] std::size_t n() const noexcept { return n_; }
	[[nodiscard]] std::size_t a() const noexcept { return a_; }
	[[nodiscard]] std::size_t ell() const noexcept { return ell_; }
	/// Ground size of the lattice part.
	[[nodiscard]] std::size_t m() const noexcept { return m_; }
	/// True when the small-threshold fallback makes the family all of 2^[n].
	[[nodiscard]] bool full_lattice() const noexcept { return full_lattice_; }
	[[nodiscard]] bool materialized() const noexcept { return full_lattice_ || explicit_.has_value(); }
	[[nodiscard]] const std::optional<SetFamily>& explicit_part() const noexcept { return explicit_; }

	[[nodiscard]] bool in_lattice_part(const SubsetMask& t) const { return t.fits_within(m_); }

	[[nodiscard]] bool in_chain_part(const SubsetMask& t) const
	{
		if (explicit_)
			return explicit_->contains(t);
		return member_of_chain_family(t, n_, a_);
	}

	[[nodiscard]] bool contains(const SubsetMask& t) const
	{
		if (t.size() != n_)
			return false;
		return full_lattice_ || in_lattice_part(t) || in_chain_part(t);
	}

	/// |chain part| + 2^m - |chain part inside [m]|. LimitError when the chain
	/// part is predicate-only.
	[[nodiscard]] BigInt cardinality() const
	{
		if (full_lattice_)
			return BigInt(1) << n_;
		if (!explicit_)
			throw LimitError("cardinality needs the chain family materialized (n=" + std::to_string(n_) + ")");
		std::size_t overlap = 0;
		for (const auto& s : *explicit_)
			if (s.fits_within(m_))
				++overlap;
		return BigInt(explicit_->size()) + (BigInt(1) << m_) - overlap;
	}

private:
	std::size_t n_;
	std::size_t a_;
	std::size_t ell_ = 0;
	std::size_t m_ = 0;
	bool full_lattice_ = false;
	std::optional<SetFamily> explicit_;
};

inline UniversalFamily build_universal(std::size_t n)
{
	return UniversalFamily(n, default_threshold(n));
}

inline UniversalFamily build_universal(std::size_t n, std::size_t a, std::size_t cap = default_family_cap)
{
	return UniversalFamily(n, a, cap);
}

inline bool membership(const UniversalFamily& u, const SubsetMask& t) { return u.contains(t); }

inline BigInt cardinality(const UniversalFamily& u) { return u.cardinality(); }

/// p(n) a (ceil(n/a) + 1)^a + 2^(n - a + l) with a = ceil(n/3), l = min_ell(a).
inline BigInt size_bound(std::size_t n)
{
	if (n == 0)
		throw Error("size bound needs n >= 1");
	const auto a = default_threshold(n);
	const auto per_cell = (n + a - 1) / a + 1;
	BigInt chain_term = partition_count(n) * a * boost::multiprecision::pow(BigInt(per_cell), static_cast<unsigned>(a));
	return chain_term + (BigInt(1) << (n - a + min_ell(a)));
}

enum class Branch
{
	chain,     ///< width <= a, chain-cell construction
	antichain, ///< width > a, labelled antichain construction
	lattice,   ///< a < 2, plain downset embedding
};

inline const char* to_string(Branch b) noexcept
{
	switch (b)
	{
	case Branch::chain: return "chain";
	case Branch::antichain: return "antichain";
	case Branch::lattice: return "lattice";
	}
	return "?";
}

struct UniversalEmbedding
{
	Embedding embedding; ///< always over ground set [n]
	Branch branch;
	std::size_t width;
};

/// Embeds p into the universal family: chain construction when its width is
/// at most a, otherwise the antichain construction on the a smallest
/// elements of a maximum antichain.
inline UniversalEmbedding embed(const UniversalFamily& u, const Poset& p)
{
	const auto n = u.n();
	if (p.size() != n)
		throw SizeMismatch("poset has " + std::to_string(p.size()) + " elements, family built for " + std::to_string(n));

	UniversalEmbedding out{{}, Branch::lattice, 0};
	const auto antichain = max_antichain(p);
	out.width = antichain.size();
	if (u.full_lattice())
		out.embedding = folklore_embed(p);
	else if (out.width <= u.a())
	{
		out.branch = Branch::chain;
		out.embedding = embed_bounded_antichain(p, u.a());
	}
	else
	{
		out.branch = Branch::antichain;
		const std::vector<Element> chosen(antichain.begin(), antichain.begin() + static_cast<std::ptrdiff_t>(u.a()));
		auto f = embed_with_antichain(p, chosen);
		for (auto& s : f.images)
			s = s.widened(n);
		f.m = n;
		out.embedding = std::move(f);
	}
#ifdef UPOSET_CHECKED
	if (const auto check = check_embedding(p, out.embedding); !check)
		throw VerificationError("embedding failed its check: " + check.reason);
	for (const auto& s : out.embedding.images)
		if (!u.contains(s))
			throw VerificationError("image " + s.to_string() + " outside the universal family");
#endif
	return out;
}

/// Full certificate: order-faithful, injective, and every image a member.
inline EmbeddingCheck certify(const UniversalFamily& u, const Poset& p, const Embedding& f)
{
	auto check = check_embedding(p, f);
	if (!check)
		return check;
	for (Element j = 0; j < f.images.size(); ++j)
		if (!u.contains(f.images[j]))
			return {false, std::pair{j, j}, "image of " + std::to_string(j) + " not in the universal family"};
	return check;
}

struct UniversalityReport
{
	std::size_t n = 0;
	std::size_t total = 0;
	std::size_t passed = 0;
	std::size_t chain_branch = 0;
	std::size_t antichain_branch = 0;
	std::size_t lattice_branch = 0;
	std::vector<Poset> failures;

	[[nodiscard]] bool ok() const noexcept { return passed == total; }
};

/// Embeds and certifies every labelled poset on n <= 5 elements.
inline UniversalityReport verify_universality(std::size_t n)
{
	if (n > universality_check_cap)
		throw LimitError("exhaustive universality check limited to n <= " + std::to_string(universality_check_cap));
	if (n == 0)
		throw Error("universality check needs n >= 1");
	const auto u = build_universal(n);
	UniversalityReport r;
	r.n = n;
	enumerate_posets(n, [&](const Poset& p) {
		++r.total;
		bool ok = false;
		try
		{
			const auto e = embed(u, p);
			ok = static_cast<bool>(certify(u, p, e.embedding));
			switch (e.branch)
			{
			case Branch::chain: ++r.chain_branch; break;
			case Branch::antichain: ++r.antichain_branch; break;
			case Branch::lattice: ++r.lattice_branch; break;
			}
		}
		catch (const Error&)
		{
			ok = false;
		}
		if (ok)
			++r.passed;
		else
			r.failures.push_back(p);
	});
	return r;
}

} // namespace uposet
