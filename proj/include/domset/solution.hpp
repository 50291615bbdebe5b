#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace domset {

// A vertex set D that remembers insertion order.
//
// erase() is O(1): it leaves a tombstone in the order array which is dropped
// the next time members() is read. Survivors keep their relative order. The
// lazy compaction means a const Solution must not be read from several
// threads while tombstones are pending; solver runs own their solutions.
class Solution {
public:
	Solution() = default;
	explicit Solution(std::size_t n) : in_set_(n, 0), slot_(n, 0) { }

	std::size_t universe() const noexcept { return in_set_.size(); }
	std::size_t size() const noexcept { return live_; }
	bool empty() const noexcept { return live_ == 0; }

	bool contains(Vertex v) const {
		assert(v < in_set_.size());
		return in_set_[v] != 0;
	}

	// Appends v; returns false if v was already a member.
	bool insert(Vertex v) {
		assert(v < in_set_.size());
		if (in_set_[v])
			return false;
		if (dead_ > live_ + 64)
			compact();
		in_set_[v] = 1;
		slot_[v] = order_.size();
		order_.push_back(v);
		++live_;
		return true;
	}

	bool erase(Vertex v) {
		assert(v < in_set_.size());
		if (!in_set_[v])
			return false;
		in_set_[v] = 0;
		--live_;
		++dead_;
		return true;
	}

	// Members in insertion order.
	std::span<const Vertex> members() const {
		if (dead_ > 0)
			compact();
		return order_;
	}

	std::vector<Vertex> sorted_members() const {
		auto ms = members();
		std::vector<Vertex> out(ms.begin(), ms.end());
		std::sort(out.begin(), out.end());
		return out;
	}

	std::span<const std::uint8_t> membership() const noexcept { return in_set_; }

	friend bool operator==(const Solution &a, const Solution &b) {
		auto ma = a.members(), mb = b.members();
		return a.universe() == b.universe() && std::equal(ma.begin(), ma.end(), mb.begin(), mb.end());
	}

private:
	bool live_entry(std::size_t i) const {
		Vertex v = order_[i];
		return in_set_[v] && slot_[v] == i;
	}

	void compact() const {
		std::size_t out = 0;
		for (std::size_t i = 0; i < order_.size(); ++i) {
			if (!live_entry(i))
				continue;
			Vertex v = order_[i];
			slot_[v] = out;
			order_[out++] = v;
		}
		order_.resize(out);
		dead_ = 0;
	}

	std::vector<std::uint8_t> in_set_;
	mutable std::vector<std::size_t> slot_;
	mutable std::vector<Vertex> order_;
	std::size_t live_ = 0;
	mutable std::size_t dead_ = 0;
};

inline Solution make_solution(std::size_t n, std::span<const Vertex> members) {
	Solution s(n);
	for (Vertex v : members)
		s.insert(v);
	return s;
}

// PACE heuristic-track output: |D|, then one 1-based id per line, ascending.
inline void write_solution(std::ostream &out, const Solution &s) {
	auto sorted = s.sorted_members();
	out << sorted.size() << '\n';
	for (Vertex v : sorted)
		out << v + 1 << '\n';
}

inline std::string solution_to_string(const Solution &s) {
	std::ostringstream out;
	write_solution(out, s);
	return out.str();
}

// Parses the output format above into 0-based ids. Ranges are checked by
// verify(), which knows n. `c` comment lines are skipped.
inline std::vector<Vertex> read_solution(std::istream &in) {
	std::vector<Vertex> ids;
	std::string line;
	std::size_t lineno = 0;
	bool have_count = false;
	std::uint64_t declared = 0;
	while (std::getline(in, line)) {
		++lineno;
		auto s = detail::trim(line);
		if (s.empty() || s.front() == 'c')
			continue;
		auto value = detail::parse_uint(s, lineno, have_count ? "vertex id" : "solution size");
		if (!have_count) {
			declared = value;
			have_count = true;
			continue;
		}
		if (value == 0 || value > std::numeric_limits<Vertex>::max())
			throw ParseError(lineno, "vertex id out of range");
		if (ids.size() == declared)
			throw ParseError(lineno, "more ids than the declared size " + std::to_string(declared));
		ids.push_back(static_cast<Vertex>(value - 1));
	}
	if (!have_count)
		throw ParseError(lineno + 1, "missing solution size line");
	if (ids.size() != declared)
		throw ParseError(lineno + 1, "declared " + std::to_string(declared) + " ids, found "
				+ std::to_string(ids.size()));
	return ids;
}

} // namespace domset
