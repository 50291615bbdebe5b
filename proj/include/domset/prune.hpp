#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graph.hpp"
#include "solution.hpp"

namespace domset {

// cover[x] = |{d in D : x in N[d]}|.
class CoverCounts {
public:
	CoverCounts() = default;
	explicit CoverCounts(std::size_t n) : count_(n, 0) { }

	std::uint32_t operator[](Vertex x) const { return count_[x]; }
	std::size_t size() const noexcept { return count_.size(); }
	std::span<const std::uint32_t> values() const noexcept { return count_; }

	// Returns the number of vertices that went from 0 to 1.
	std::size_t add(const Graph &g, Vertex d) {
		std::size_t fresh = 0;
		for_each_closed(g, d, [&](Vertex x) { fresh += count_[x]++ == 0 ? 1 : 0; });
		return fresh;
	}

	// Returns the number of vertices that went from 1 to 0.
	std::size_t remove(const Graph &g, Vertex d) {
		std::size_t lost = 0;
		for_each_closed(g, d, [&](Vertex x) { lost += --count_[x] == 0 ? 1 : 0; });
		return lost;
	}

	// True if every x in N[d] is covered at least twice, i.e. d is redundant.
	bool redundant(const Graph &g, Vertex d) const {
		if (count_[d] < 2)
			return false;
		for (Vertex x : g.neighbors(d))
			if (count_[x] < 2)
				return false;
		return true;
	}

	friend bool operator==(const CoverCounts &, const CoverCounts &) = default;

private:
	std::vector<std::uint32_t> count_;
};

inline CoverCounts compute_cover_counts(const Graph &g, const Solution &s) {
	CoverCounts c(g.n());
	for (Vertex d : s.members())
		c.add(g, d);
	return c;
}

// One newest-first pass over D with live counts; every redundant member is
// removed on the spot. Returns the number of removed vertices.
inline std::size_t backward_prune(const Graph &g, Solution &s, CoverCounts &c) {
	auto members = s.members();
	std::vector<Vertex> order(members.begin(), members.end());
	std::size_t removed = 0;
	for (auto it = order.rbegin(); it != order.rend(); ++it) {
		if (!c.redundant(g, *it))
			continue;
		c.remove(g, *it);
		s.erase(*it);
		++removed;
	}
	return removed;
}

inline std::size_t backward_prune(const Graph &g, Solution &s) {
	auto c = compute_cover_counts(g, s);
	return backward_prune(g, s, c);
}

} // namespace domset
