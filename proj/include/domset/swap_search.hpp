#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "deadline.hpp"
#include "graph.hpp"
#include "prune.hpp"
#include "reduce.hpp"
#include "solution.hpp"

namespace domset {

// A dominating set together with its live cover counts.
struct SearchState {
	SearchState(const Graph &g, Solution s)
	: solution{std::move(s)}, counts{compute_cover_counts(g, solution)} { }

	Solution solution;
	CoverCounts counts;
};

struct SwapBudget {
	SwapBudget(std::size_t attempt_cap, Deadline deadline)
	: attempt_cap{attempt_cap}, deadline{deadline} {
		if (attempt_cap == 0)
			throw std::invalid_argument("swap attempt cap must be positive");
	}

	std::size_t attempt_cap;
	Deadline deadline;
};

// Vertices of N[w] that w alone covers.
inline std::vector<Vertex> uniquely_covered(const Graph &g, const CoverCounts &c, Vertex w) {
	std::vector<Vertex> u;
	for_each_closed(g, w, [&](Vertex x) {
		if (c[x] == 1)
			u.push_back(x);
	});
	return u;
}

struct SwapResult {
	enum class Kind { none, removed, swapped };

	Kind kind = Kind::none;
	Vertex replacement = 0;
	std::size_t checks = 0;
};

// Removes w if it covers nothing uniquely. Otherwise looks for t not in D
// whose closed neighborhood contains every vertex uniquely covered by w and
// performs D <- D - w + t. Any such t lies in N[x] for each uniquely covered
// x, so the candidates are N[x] for the lowest-degree one. Without an rng the
// first valid t in that order is taken, with one a uniformly random one.
// Domination is preserved in every outcome.
inline SwapResult try_one_swap(const Graph &g, SearchState &state, Vertex w, std::mt19937_64 *rng = nullptr) {
	assert(state.solution.contains(w));
	SwapResult result;
	auto unique = uniquely_covered(g, state.counts, w);
	if (unique.empty()) {
		state.counts.remove(g, w);
		state.solution.erase(w);
		result.kind = SwapResult::Kind::removed;
		return result;
	}

	Vertex pivot = unique.front();
	for (Vertex x : unique)
		if (g.degree(x) < g.degree(pivot))
			pivot = x;

	std::size_t valid = 0;
	Vertex chosen = w;
	for (Vertex t : g.closed_neighborhood(pivot)) {
		if (state.solution.contains(t))
			continue;
		++result.checks;
		bool covers = true;
		for (Vertex x : unique) {
			if (x != pivot && !g.closed_adjacent(t, x)) {
				covers = false;
				break;
			}
		}
		if (!covers)
			continue;
		++valid;
		if (!rng) {
			chosen = t;
			break;
		}
		// reservoir sampling
		if (std::uniform_int_distribution<std::size_t>(0, valid - 1)(*rng) == 0)
			chosen = t;
	}
	if (valid == 0)
		return result;

	state.counts.remove(g, w);
	state.solution.erase(w);
	state.counts.add(g, chosen);
	state.solution.insert(chosen);
	result.kind = SwapResult::Kind::swapped;
	result.replacement = chosen;
	return result;
}

struct SwapStats {
	std::size_t sweeps = 0;
	std::size_t swaps = 0;
	std::size_t removals = 0;
	std::size_t pruned = 0;
};

// Sweeps D trying one swap per member, until a sweep changes nothing, the
// attempt cap is reached or the deadline passes. Members are visited in
// insertion order, or in a fresh random order per sweep when an rng is
// given. After a sweep with any change the set is pruned again, so |D|
// never grows.
inline SwapStats swap_phase(const Graph &g, SearchState &state, const SwapBudget &budget,
		std::mt19937_64 *rng = nullptr) {
	constexpr std::size_t clock_stride = 64;
	SwapStats stats;
	std::size_t checks = 0, next_clock = 0;
	bool out_of_time = false;

	for (std::size_t sweep = 0; sweep < budget.attempt_cap && !out_of_time; ++sweep) {
		if (budget.deadline.expired())
			break;
		auto members = state.solution.members();
		std::vector<Vertex> snapshot(members.begin(), members.end());
		if (rng)
			std::shuffle(snapshot.begin(), snapshot.end(), *rng);
		bool changed = false;
		for (Vertex w : snapshot) {
			if (!state.solution.contains(w))
				continue;
			auto r = try_one_swap(g, state, w, rng);
			checks += r.checks + 1;
			if (r.kind == SwapResult::Kind::removed) {
				++stats.removals;
				changed = true;
			} else if (r.kind == SwapResult::Kind::swapped) {
				++stats.swaps;
				changed = true;
			}
			if (checks >= next_clock) {
				next_clock = checks + clock_stride;
				if (budget.deadline.expired()) {
					out_of_time = true;
					break;
				}
			}
		}
		++stats.sweeps;
		if (changed)
			stats.pruned += backward_prune(g, state.solution, state.counts);
		assert(state.counts == compute_cover_counts(g, state.solution));
		if (!changed)
			break;
	}
	return stats;
}

// Repairs any undominated vertex x (ascending) by adding the vertex of N[x]
// that covers the most still-undominated vertices. Returns the number added.
inline std::size_t safety_patch(const Graph &g, Solution &s) {
	CoverState state(g);
	for (Vertex d : s.members())
		add_to_d(state, g, d);
	if (state.undominated_count == 0)
		return 0;

	std::size_t added = 0;
	for (Vertex x = 0; x < g.n() && state.undominated_count > 0; ++x) {
		if (state.dominated[x])
			continue;
		Vertex best = x;
		std::size_t best_gain = 0;
		for_each_closed(g, x, [&](Vertex t) {
			std::size_t gain = 0;
			for_each_closed(g, t, [&](Vertex y) { gain += state.dominated[y] ? 0 : 1; });
			if (gain > best_gain || (gain == best_gain && t < best)) {
				best = t;
				best_gain = gain;
			}
		});
		add_to_d(state, g, best);
		++added;
	}
	s = std::move(state.solution);
	return added;
}

} // namespace domset
