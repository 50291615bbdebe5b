#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "solution.hpp"

namespace domset {

// Per-run domination bookkeeping shared by the constructive stages.
// Invariant: dominated[v] iff some u in N[v] is in the solution.
struct CoverState {
	explicit CoverState(const Graph &g)
	: dominated(g.n(), 0), undominated_count{g.n()}, solution(g.n()) { }

	bool in_d(Vertex v) const { return solution.contains(v); }

	std::vector<std::uint8_t> dominated;
	std::size_t undominated_count;
	Solution solution;
};

// Idempotent: a vertex already in D is left alone.
inline void add_to_d(CoverState &state, const Graph &g, Vertex v) {
	if (!state.solution.insert(v))
		return;
	for_each_closed(g, v, [&](Vertex x) {
		if (!state.dominated[x]) {
			state.dominated[x] = 1;
			--state.undominated_count;
		}
	});
}

// A degree-0 vertex belongs to every dominating set.
inline std::size_t apply_isolate_rule(CoverState &state, const Graph &g) {
	std::size_t added = 0;
	for (Vertex v = 0; v < g.n(); ++v) {
		if (g.degree(v) == 0 && !state.in_d(v)) {
			add_to_d(state, g, v);
			++added;
		}
	}
	return added;
}

// An undominated leaf u forces its unique neighbor. Leaves are examined once,
// in ascending id order, against the degrees of the input graph.
inline std::size_t apply_leaf_rule(CoverState &state, const Graph &g) {
	std::size_t added = 0;
	for (Vertex u = 0; u < g.n(); ++u) {
		if (g.degree(u) != 1 || state.dominated[u])
			continue;
		Vertex v = g.neighbors(u).front();
		if (!state.in_d(v)) {
			add_to_d(state, g, v);
			++added;
		}
	}
	return added;
}

inline std::size_t apply_reductions(CoverState &state, const Graph &g) {
	return apply_isolate_rule(state, g) + apply_leaf_rule(state, g);
}

} // namespace domset
