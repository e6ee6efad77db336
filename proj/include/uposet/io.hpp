#pragma once

#include <uposet/embedding.hpp>
#include <uposet/errors.hpp>
#include <uposet/poset.hpp>
#include <uposet/set_family.hpp>
#include <uposet/subset_mask.hpp>

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace uposet::io
{

namespace detail
{

inline std::string_view trim(std::string_view s)
{
	const auto first = s.find_first_not_of(" \t\r");
	if (first == std::string_view::npos)
		return {};
	const auto last = s.find_last_not_of(" \t\r");
	return s.substr(first, last - first + 1);
}

inline std::size_t parse_count(std::string_view text, std::string_view what, std::size_t line_no)
{
	std::size_t value = 0;
	const auto* end = text.data() + text.size();
	const auto [ptr, ec] = std::from_chars(text.data(), end, value);
	if (text.empty() || ec != std::errc{} || ptr != end)
		throw ParseError("line " + std::to_string(line_no) + ": bad " + std::string(what) + " '" + std::string(text) + "'");
	return value;
}

// Reads the next non-empty, non-comment line; false at end of input.
inline bool next_line(std::istream& in, std::string& line, std::string_view& content, std::size_t& line_no)
{
	while (std::getline(in, line))
	{
		++line_no;
		content = trim(line);
		if (!content.empty() && content.front() != '#')
			return true;
	}
	return false;
}

// Parses "key=<value>" and returns the value.
inline std::size_t parse_field(std::string_view token, std::string_view key, std::size_t line_no)
{
	if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=')
		throw ParseError("line " + std::to_string(line_no) + ": expected " + std::string(key) + "=<value>");
	return parse_count(token.substr(key.size() + 1), key, line_no);
}

} // namespace detail

/// Poset text: first line n, then one cover relation "u < v" per line in
/// ascending (u, v) order. Readers also accept '#' comment lines, blank
/// lines, and arbitrary (not only cover) generator pairs.
inline void write_poset(std::ostream& out, const Poset& p)
{
	out << p.size() << '\n';
	for (const auto& [u, v] : p.cover_relations())
		out << u << " < " << v << '\n';
}

inline Poset read_poset(std::istream& in)
{
	std::string line;
	std::string_view content;
	std::size_t line_no = 0;
	if (!detail::next_line(in, line, content, line_no))
		throw ParseError("empty poset file");
	const auto n = detail::parse_count(content, "element count", line_no);
	std::vector<Relation> pairs;
	while (detail::next_line(in, line, content, line_no))
	{
		const auto lt = content.find('<');
		if (lt == std::string_view::npos)
			throw ParseError("line " + std::to_string(line_no) + ": expected 'u < v'");
		const auto u = detail::parse_count(detail::trim(content.substr(0, lt)), "element", line_no);
		const auto v = detail::parse_count(detail::trim(content.substr(lt + 1)), "element", line_no);
		if (u >= n || v >= n)
			throw ParseError("line " + std::to_string(line_no) + ": element outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
		pairs.emplace_back(u, v);
	}
	return from_relations(n, pairs);
}

/// Family text: "m=<m> count=<k>", then one set per line in mask order,
/// comma-separated ascending 1-indexed elements, "-" for the empty set.
inline void write_family(std::ostream& out, const SetFamily& f)
{
	out << "m=" << f.ground_size() << " count=" << f.size() << '\n';
	for (const auto& s : f)
		out << s.to_string() << '\n';
}

inline SetFamily read_family(std::istream& in)
{
	std::string line;
	std::string_view content;
	std::size_t line_no = 0;
	if (!detail::next_line(in, line, content, line_no))
		throw ParseError("empty family file");
	const auto space = content.find(' ');
	if (space == std::string_view::npos)
		throw ParseError("family header must be 'm=<m> count=<k>'");
	const auto m = detail::parse_field(content.substr(0, space), "m", line_no);
	const auto count = detail::parse_field(detail::trim(content.substr(space + 1)), "count", line_no);
	std::vector<SubsetMask> sets;
	while (detail::next_line(in, line, content, line_no))
	{
		auto s = SubsetMask::parse(m, content);
		if (!sets.empty() && !(sets.back() < s))
			throw ParseError("line " + std::to_string(line_no) + ": sets must be strictly ascending");
		sets.push_back(std::move(s));
	}
	if (sets.size() != count)
		throw ParseError("header announces " + std::to_string(count) + " sets, found " + std::to_string(sets.size()));
	return SetFamily(m, std::move(sets));
}

/// Embedding text: "n=<n> m=<m>", then "j: <set>" for elements j = 0..n-1.
inline void write_embedding(std::ostream& out, const Embedding& f)
{
	out << "n=" << f.images.size() << " m=" << f.m << '\n';
	for (std::size_t j = 0; j < f.images.size(); ++j)
		out << j << ": " << f.images[j].to_string() << '\n';
}

inline Embedding read_embedding(std::istream& in)
{
	std::string line;
	std::string_view content;
	std::size_t line_no = 0;
	if (!detail::next_line(in, line, content, line_no))
		throw ParseError("empty embedding file");
	const auto space = content.find(' ');
	if (space == std::string_view::npos)
		throw ParseError("embedding header must be 'n=<n> m=<m>'");
	const auto n = detail::parse_field(content.substr(0, space), "n", line_no);
	const auto m = detail::parse_field(detail::trim(content.substr(space + 1)), "m", line_no);
	Embedding f{m, {}};
	while (detail::next_line(in, line, content, line_no))
	{
		const auto colon = content.find(':');
		if (colon == std::string_view::npos)
			throw ParseError("line " + std::to_string(line_no) + ": expected '<j>: <set>'");
		const auto j = detail::parse_count(detail::trim(content.substr(0, colon)), "element", line_no);
		if (j != f.images.size())
			throw ParseError("line " + std::to_string(line_no) + ": elements must appear in order 0.." +
							 std::to_string(n == 0 ? 0 : n - 1));
		f.images.push_back(SubsetMask::parse(m, detail::trim(content.substr(colon + 1))));
	}
	if (f.images.size() != n)
		throw ParseError("header announces " + std::to_string(n) + " images, found " + std::to_string(f.images.size()));
	return f;
}

template <class T, class Writer>
std::string to_text(const T& value, Writer write)
{
	std::ostringstream out;
	write(out, value);
	return out.str();
}

inline std::string to_text(const Poset& p) { return to_text(p, [](std::ostream& o, const Poset& v) { write_poset(o, v); }); }
inline std::string to_text(const SetFamily& f)
{
	return to_text(f, [](std::ostream& o, const SetFamily& v) { write_family(o, v); });
}
inline std::string to_text(const Embedding& f)
{
	return to_text(f, [](std::ostream& o, const Embedding& v) { write_embedding(o, v); });
}

inline Poset poset_from_text(const std::string& text)
{
	std::istringstream in(text);
	return read_poset(in);
}
inline SetFamily family_from_text(const std::string& text)
{
	std::istringstream in(text);
	return read_family(in);
}
inline Embedding embedding_from_text(const std::string& text)
{
	std::istringstream in(text);
	return read_embedding(in);
}

} // namespace uposet::io
