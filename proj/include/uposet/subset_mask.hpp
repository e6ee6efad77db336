#pragma once

#include <uposet/errors.hpp>

#include <bit>
#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace uposet
{

/// A subset of the ground set [m] = {1, ..., m}.
///
/// Bit i (0-indexed) stands for ground element i+1. Masks over at most 64
/// elements live inline; larger ground sets spill to the heap. Ordering is
/// the numeric order of the bit string read as an unsigned integer with
/// ground element 1 as the least significant bit, which is the canonical
/// order used by set families and their serialization.
class SubsetMask
{
public:
	using word_type = std::uint64_t;
	static constexpr std::size_t word_bits = 64;

	SubsetMask() = default;

	explicit SubsetMask(std::size_t m)
		: m_(m), words_(word_count(m), word_type{0})
	{}

	/// Builds a mask from 1-indexed ground elements.
	static SubsetMask from_elements(std::size_t m, std::initializer_list<std::size_t> elements)
	{
		SubsetMask s(m);
		for (auto e : elements)
		{
			if (e == 0 || e > m)
				throw Error("ground element " + std::to_string(e) + " outside [" + std::to_string(m) + "]");
			s.set(e - 1);
		}
		return s;
	}

	/// Mask over [m] with only the low bits of `bits` (m <= 64).
	static SubsetMask from_word(std::size_t m, word_type bits)
	{
		SubsetMask s(m);
		if (m > 0)
			s.words_[0] = bits & low_mask(m < word_bits ? m : word_bits);
		return s;
	}

	/// The full ground set [m].
	static SubsetMask full(std::size_t m)
	{
		SubsetMask s(m);
		s.set_range(0, m);
		return s;
	}

	[[nodiscard]] std::size_t size() const noexcept { return m_; }
	[[nodiscard]] std::size_t num_words() const noexcept { return words_.size(); }
	[[nodiscard]] word_type word(std::size_t k) const noexcept { return words_[k]; }

	[[nodiscard]] bool test(std::size_t i) const noexcept
	{
		return (words_[i / word_bits] >> (i % word_bits)) & 1u;
	}

	void set(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
	void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

	/// Sets bits [first, last).
	void set_range(std::size_t first, std::size_t last) noexcept
	{
		for (std::size_t i = first; i < last; ++i)
			set(i);
	}

	[[nodiscard]] std::size_t count() const noexcept
	{
		std::size_t c = 0;
		for (auto w : words_)
			c += static_cast<std::size_t>(std::popcount(w));
		return c;
	}

	[[nodiscard]] bool empty() const noexcept
	{
		for (auto w : words_)
			if (w != 0)
				return false;
		return true;
	}

	/// Subset test; both masks must share the ground set size.
	[[nodiscard]] bool is_subset_of(const SubsetMask& other) const noexcept
	{
		for (std::size_t k = 0; k < words_.size(); ++k)
			if ((words_[k] & ~other.words_[k]) != 0)
				return false;
		return true;
	}

	/// True iff no bit at position >= limit is set.
	[[nodiscard]] bool fits_within(std::size_t limit) const noexcept
	{
		for (std::size_t k = 0; k < words_.size(); ++k)
		{
			const std::size_t lo = k * word_bits;
			if (lo >= limit)
			{
				if (words_[k] != 0)
					return false;
			}
			else if (limit - lo < word_bits && (words_[k] & ~low_mask(limit - lo)) != 0)
				return false;
		}
		return true;
	}

	/// Index of the lowest set bit at or after `from`, or size() if none.
	[[nodiscard]] std::size_t next_set(std::size_t from) const noexcept
	{
		if (from >= m_)
			return m_;
		std::size_t k = from / word_bits;
		word_type w = words_[k] & (~word_type{0} << (from % word_bits));
		while (true)
		{
			if (w != 0)
				return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
			if (++k == words_.size())
				return m_;
			w = words_[k];
		}
	}

	/// Copy of this mask over a larger (or equal) ground set.
	[[nodiscard]] SubsetMask widened(std::size_t new_m) const
	{
		if (new_m < m_ && !fits_within(new_m))
			throw Error("cannot narrow a mask below its largest element");
		SubsetMask s(new_m);
		for (std::size_t k = 0; k < s.words_.size() && k < words_.size(); ++k)
			s.words_[k] = words_[k];
		return s;
	}

	SubsetMask& operator|=(const SubsetMask& other) noexcept
	{
		for (std::size_t k = 0; k < words_.size(); ++k)
			words_[k] |= other.words_[k];
		return *this;
	}

	SubsetMask& operator&=(const SubsetMask& other) noexcept
	{
		for (std::size_t k = 0; k < words_.size(); ++k)
			words_[k] &= other.words_[k];
		return *this;
	}

	friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) noexcept { return a |= b; }
	friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) noexcept { return a &= b; }

	friend bool operator==(const SubsetMask& a, const SubsetMask& b) noexcept
	{
		return a.m_ == b.m_ && a.words_ == b.words_;
	}

	friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) noexcept
	{
		if (auto c = a.m_ <=> b.m_; c != 0)
			return c;
		for (std::size_t k = a.words_.size(); k-- > 0;)
			if (auto c = a.words_[k] <=> b.words_[k]; c != 0)
				return c;
		return std::strong_ordering::equal;
	}

	/// 1-indexed ascending elements, e.g. {1,2} -> "1,2"; the empty set is "-".
	[[nodiscard]] std::string to_string() const
	{
		if (empty())
			return "-";
		std::string out;
		for (std::size_t i = next_set(0); i < m_; i = next_set(i + 1))
		{
			if (!out.empty())
				out += ',';
			out += std::to_string(i + 1);
		}
		return out;
	}

	/// Inverse of to_string. Requires strictly ascending elements within [m].
	static SubsetMask parse(std::size_t m, std::string_view text);

private:
	static constexpr std::size_t word_count(std::size_t m) noexcept { return (m + word_bits - 1) / word_bits; }
	static constexpr word_type low_mask(std::size_t bits) noexcept
	{
		return bits >= word_bits ? ~word_type{0} : (word_type{1} << bits) - 1;
	}

	std::size_t m_ = 0;
	boost::container::small_vector<word_type, 1> words_;
};

inline SubsetMask SubsetMask::parse(std::size_t m, std::string_view text)
{
	SubsetMask s(m);
	if (text == "-")
		return s;
	if (text.empty())
		throw ParseError("empty set must be written as '-'");
	std::size_t last = 0;
	std::size_t pos = 0;
	while (pos <= text.size())
	{
		const auto comma = text.find(',', pos);
		const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
		if (token.empty())
			throw ParseError("empty element in set '" + std::string(text) + "'");
		std::size_t value = 0;
		for (char ch : token)
		{
			if (ch < '0' || ch > '9')
				throw ParseError("non-digit in set '" + std::string(text) + "'");
			value = value * 10 + static_cast<std::size_t>(ch - '0');
			if (value > m)
				break;
		}
		if (value == 0 || value > m)
			throw ParseError("element outside [" + std::to_string(m) + "] in '" + std::string(text) + "'");
		if (value <= last)
			throw ParseError("elements must be strictly ascending in '" + std::string(text) + "'");
		s.set(value - 1);
		last = value;
		if (comma == std::string_view::npos)
			break;
		pos = comma + 1;
	}
	return s;
}

} // namespace uposet
