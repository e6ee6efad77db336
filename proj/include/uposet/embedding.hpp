#pragma once

#include <uposet/poset.hpp>
#include <uposet/subset_mask.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uposet
{

/// Images of the elements of a poset in the Boolean lattice on [m].
/// images[j] is the image of element j.
struct Embedding
{
	std::size_t m = 0;
	std::vector<SubsetMask> images;

	friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Verdict of check_embedding. On failure `witness` names an ordered pair
/// (u, v) on which the embedding is wrong.
struct EmbeddingCheck
{
	bool ok = true;
	std::optional<std::pair<Element, Element>> witness;
	std::string reason;

	explicit operator bool() const noexcept { return ok; }
};

/// Downset embedding into [n]: element j goes to {i+1 : i <= j}.
inline Embedding folklore_embed(const Poset& p)
{
	const auto n = p.size();
	Embedding f{n, {}};
	f.images.reserve(n);
	for (Element j = 0; j < n; ++j)
	{
		SubsetMask s = p.strict_down(j);
		s.set(j);
		f.images.push_back(std::move(s));
	}
	return f;
}

/// Checks that f is injective and that u <= v iff f(u) is a subset of f(v),
/// over every ordered pair including both directions of incomparable pairs.
inline EmbeddingCheck check_embedding(const Poset& p, const Embedding& f)
{
	const auto n = p.size();
	if (f.images.size() != n)
		return {false, std::nullopt, "expected " + std::to_string(n) + " images, got " + std::to_string(f.images.size())};
	for (Element j = 0; j < n; ++j)
		if (f.images[j].size() != f.m)
			return {false, std::pair{j, j}, "image of " + std::to_string(j) + " not over the ground set"};

	std::vector<Element> by_image(n);
	for (Element j = 0; j < n; ++j)
		by_image[j] = j;
	std::sort(by_image.begin(), by_image.end(), [&](Element a, Element b) { return f.images[a] < f.images[b]; });
	for (std::size_t k = 1; k < n; ++k)
	{
		const auto a = std::min(by_image[k - 1], by_image[k]);
		const auto b = std::max(by_image[k - 1], by_image[k]);
		if (f.images[a] == f.images[b])
			return {false, std::pair{a, b}, "elements share an image"};
	}

	for (Element u = 0; u < n; ++u)
	{
		for (Element v = 0; v < n; ++v)
		{
			const bool ordered = p.leq(u, v);
			const bool contained = f.images[u].is_subset_of(f.images[v]);
			if (ordered != contained)
				return {false, std::pair{u, v},
						ordered ? "order not preserved by inclusion" : "inclusion without order"};
		}
	}
	return {};
}

} // namespace uposet
