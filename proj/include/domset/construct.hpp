#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <vector>

#include "graph.hpp"
#include "reduce.hpp"
#include "solution.hpp"

namespace domset {

// Number of currently undominated vertices in N[v].
inline std::size_t true_gain(const CoverState &state, const Graph &g, Vertex v) {
	std::size_t gain = 0;
	for_each_closed(g, v, [&](Vertex x) { gain += state.dominated[x] ? 0 : 1; });
	return gain;
}

// Max-queue of (gain estimate, vertex). A key packs the gain in the high
// word and the complemented id in the low word, so equal gains pop the
// smallest id first. Stored keys are upper bounds on current gains.
class GainQueue {
public:
	void push(std::size_t gain, Vertex v) {
		heap_.push((static_cast<std::uint64_t>(gain) << 32) | static_cast<std::uint32_t>(~v));
	}

	bool empty() const { return heap_.empty(); }
	std::size_t size() const { return heap_.size(); }

	struct Entry {
		std::size_t gain;
		Vertex v;
	};

	Entry top() const {
		auto key = heap_.top();
		return {static_cast<std::size_t>(key >> 32), static_cast<Vertex>(~static_cast<std::uint32_t>(key))};
	}

	Entry pop() {
		auto e = top();
		heap_.pop();
		return e;
	}

private:
	std::priority_queue<std::uint64_t> heap_;
};

// Extends state.solution until every vertex is dominated. Each accepted
// vertex has maximum current gain, ties broken towards the smaller id.
inline void lazy_greedy(CoverState &state, const Graph &g) {
	if (state.undominated_count == 0)
		return;

	GainQueue pq;
	for (Vertex v = 0; v < g.n(); ++v)
		if (!state.in_d(v))
			pq.push(g.degree(v) + 1, v);

	Vertex fallback_cursor = 0;
	while (state.undominated_count > 0) {
		if (pq.empty()) {
			while (state.dominated[fallback_cursor])
				++fallback_cursor;
			add_to_d(state, g, fallback_cursor);
			continue;
		}
		auto [key, v] = pq.pop();
		if (state.in_d(v))
			continue;
		auto gain = true_gain(state, g, v);
		// gains never increase, so a zero-gain vertex is useless from here on
		if (gain == 0)
			continue;
		if (gain < key) {
			pq.push(gain, v);
			continue;
		}
		add_to_d(state, g, v);
	}
}

// Plain greedy baseline: no reductions, no pruning.
inline Solution greedy_ln(const Graph &g) {
	CoverState state(g);
	lazy_greedy(state, g);
	return std::move(state.solution);
}

} // namespace domset
