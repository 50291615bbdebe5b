#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "solution.hpp"

namespace domset {

struct VerifyReport {
	bool valid = false;
	std::optional<Vertex> first_uncovered;
	std::size_t size = 0;
};

// Checks domination from scratch. Duplicate ids count once; an id >= n throws.
inline VerifyReport verify(const Graph &g, std::span<const Vertex> ids) {
	std::vector<std::uint8_t> chosen(g.n(), 0), covered(g.n(), 0);
	VerifyReport report;
	for (Vertex d : ids) {
		if (d >= g.n())
			throw std::out_of_range("solution vertex " + std::to_string(std::uint64_t{d} + 1)
					+ " exceeds n = " + std::to_string(g.n()));
		if (chosen[d])
			continue;
		chosen[d] = 1;
		++report.size;
		for_each_closed(g, d, [&](Vertex x) { covered[x] = 1; });
	}
	for (Vertex x = 0; x < g.n(); ++x) {
		if (!covered[x]) {
			report.first_uncovered = x;
			break;
		}
	}
	report.valid = !report.first_uncovered;
	return report;
}

inline VerifyReport verify(const Graph &g, const Solution &s) {
	return verify(g, s.members());
}

struct Optimum {
	std::size_t size = 0;
	std::vector<Vertex> witness;
};

inline constexpr std::size_t oracle_max_n = 24;

namespace detail {

struct ExactSearch {
	std::vector<std::uint32_t> closed;
	std::uint32_t full = 0;
	std::vector<Vertex> picked;

	// Branches on the members of N[x] for the lowest undominated x.
	bool search(std::uint32_t covered, std::size_t budget) {
		if (covered == full)
			return true;
		if (budget == 0)
			return false;
		auto x = static_cast<Vertex>(std::countr_one(covered));
		std::uint32_t options = closed[x];
		while (options) {
			auto u = static_cast<Vertex>(std::countr_zero(options));
			options &= options - 1;
			picked.push_back(u);
			if (search(covered | closed[u], budget - 1))
				return true;
			picked.pop_back();
		}
		return false;
	}
};

} // namespace detail

// Exact domination number by iterative deepening; refuses n > oracle_max_n.
inline Optimum brute_force_optimum(const Graph &g) {
	if (g.n() > oracle_max_n)
		throw std::invalid_argument("exact oracle limited to n <= " + std::to_string(oracle_max_n)
				+ ", got n = " + std::to_string(g.n()));
	detail::ExactSearch s;
	s.full = (std::uint32_t{1} << g.n()) - 1;
	s.closed.resize(g.n());
	for (Vertex v = 0; v < g.n(); ++v)
		for_each_closed(g, v, [&](Vertex u) { s.closed[v] |= std::uint32_t{1} << u; });
	for (std::size_t k = 0;; ++k) {
		s.picked.clear();
		if (s.search(0, k)) {
			std::sort(s.picked.begin(), s.picked.end());
			return {k, s.picked};
		}
	}
}

} // namespace domset
