#pragma once

#include <uposet/errors.hpp>
#include <uposet/subset_mask.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace uposet
{

/// Sorted, duplicate-free collection of subsets of one ground set [m].
class SetFamily
{
public:
	SetFamily() = default;

	explicit SetFamily(std::size_t m) : m_(m) {}

	SetFamily(std::size_t m, std::vector<SubsetMask> sets) : m_(m), sets_(std::move(sets))
	{
		for (const auto& s : sets_)
			if (s.size() != m_)
				throw Error("set over [" + std::to_string(s.size()) + "] in family over [" + std::to_string(m_) + "]");
		std::sort(sets_.begin(), sets_.end());
		sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
	}

	[[nodiscard]] std::size_t ground_size() const noexcept { return m_; }
	[[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
	[[nodiscard]] const std::vector<SubsetMask>& sets() const noexcept { return sets_; }

	[[nodiscard]] auto begin() const noexcept { return sets_.begin(); }
	[[nodiscard]] auto end() const noexcept { return sets_.end(); }

	[[nodiscard]] bool contains(const SubsetMask& s) const
	{
		return s.size() == m_ && std::binary_search(sets_.begin(), sets_.end(), s);
	}

	friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
	std::size_t m_ = 0;
	std::vector<SubsetMask> sets_;
};

} // namespace uposet
