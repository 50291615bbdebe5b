#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "deadline.hpp"
#include "graph.hpp"
#include "prune.hpp"
#include "solution.hpp"
#include "verify.hpp"

namespace domset {

struct AnnealConfig {
	double initial_temperature = 1.0;
	double cooling_factor = 0.995;
	double min_temperature = 1e-6;
	// 0 selects max(100, n)
	std::size_t moves_per_epoch = 0;
	std::uint64_t seed = 0;
	// At least one of the two bounds must be set.
	std::optional<Millis> time_budget;
	std::optional<std::size_t> max_epochs;
	const std::atomic<bool> *interrupt = nullptr;

	std::size_t epoch_length(std::size_t n) const {
		return moves_per_epoch ? moves_per_epoch : std::max<std::size_t>(100, n);
	}
};

// Geometric cooling, clamped at the configured floor.
inline double decay(double temperature, const AnnealConfig &cfg) {
	return std::max(temperature * cfg.cooling_factor, cfg.min_temperature);
}

struct AnnealStats {
	std::size_t epochs = 0;
	std::size_t moves = 0;
	std::size_t removals = 0;
	std::size_t exchanges = 0;
	std::size_t additions = 0;
	double final_temperature = 0;
};

namespace detail {

// Unordered set of dominators with O(1) random pick, insert and erase.
class DenseSet {
public:
	explicit DenseSet(std::size_t n) : pos_(n, npos) { }

	bool contains(Vertex v) const { return pos_[v] != npos; }
	std::size_t size() const { return items_.size(); }
	bool empty() const { return items_.empty(); }
	Vertex operator[](std::size_t i) const { return items_[i]; }
	const std::vector<Vertex> &items() const { return items_; }

	void insert(Vertex v) {
		assert(!contains(v));
		pos_[v] = items_.size();
		items_.push_back(v);
	}

	void erase(Vertex v) {
		assert(contains(v));
		auto i = pos_[v];
		items_[i] = items_.back();
		pos_[items_[i]] = i;
		items_.pop_back();
		pos_[v] = npos;
	}

private:
	static constexpr std::size_t npos = static_cast<std::size_t>(-1);
	std::vector<std::size_t> pos_;
	std::vector<Vertex> items_;
};

} // namespace detail

// Simulated annealing over feasible dominating sets, objective |D|.
//
// Each step draws one move: removal (40%) of a random member that is
// redundant, exchange (40%) of a random member d for a random non-member
// neighbor t that covers everything d covers uniquely, or addition (20%) of
// a random non-member, accepted with probability exp(-1/T). Temperature
// decays once per epoch. Returns the smallest set seen, seed included.
inline Solution sa_solve(const Graph &g, const Solution &seed_solution, const AnnealConfig &cfg,
		AnnealStats *stats_out = nullptr) {
	if (seed_solution.universe() != g.n() || !verify(g, seed_solution).valid)
		throw std::invalid_argument("annealing seed is not a dominating set of the graph");
	if (!cfg.time_budget && !cfg.max_epochs)
		throw std::invalid_argument("annealing needs a time budget or an epoch cap");
	if (!(cfg.initial_temperature > 0) || !(cfg.cooling_factor > 0 && cfg.cooling_factor < 1))
		throw std::invalid_argument("annealing schedule out of range");

	AnnealStats stats;
	stats.final_temperature = cfg.initial_temperature;
	Solution best = seed_solution;
	if ((cfg.time_budget && cfg.time_budget->count() <= 0) || (cfg.max_epochs && *cfg.max_epochs == 0)
			|| g.n() == 0) {
		if (stats_out)
			*stats_out = stats;
		return best;
	}

	auto deadline = cfg.time_budget ? Deadline::after(*cfg.time_budget, cfg.interrupt)
			: Deadline::never(cfg.interrupt);
	std::mt19937_64 rng(cfg.seed);
	std::uniform_int_distribution<int> move_kind(0, 99);
	std::uniform_real_distribution<double> unit(0.0, 1.0);
	std::uniform_int_distribution<Vertex> any_vertex(0, static_cast<Vertex>(g.n() - 1));
	auto pick = [&rng](std::size_t size) {
		return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
	};

	detail::DenseSet dom(g.n());
	for (Vertex d : seed_solution.members())
		dom.insert(d);
	CoverCounts counts = compute_cover_counts(g, seed_solution);
	std::size_t best_size = dom.size();

	const std::size_t epoch_length = cfg.epoch_length(g.n());
	double temperature = cfg.initial_temperature;
	bool stop = false;

	while (!stop) {
		for (std::size_t i = 0; i < epoch_length; ++i) {
			if ((stats.moves & 255) == 0 && deadline.expired()) {
				stop = true;
				break;
			}
			++stats.moves;
			int kind = move_kind(rng);
			if (kind < 40) {
				if (dom.empty())
					continue;
				Vertex d = dom[pick(dom.size())];
				if (!counts.redundant(g, d))
					continue;
				counts.remove(g, d);
				dom.erase(d);
				++stats.removals;
				if (dom.size() < best_size) {
					best_size = dom.size();
					best = make_solution(g.n(), dom.items());
				}
			} else if (kind < 80) {
				if (dom.empty())
					continue;
				Vertex d = dom[pick(dom.size())];
				auto nb = g.neighbors(d);
				if (nb.empty())
					continue;
				Vertex t = nb[pick(nb.size())];
				if (dom.contains(t))
					continue;
				bool covers = true;
				for_each_closed(g, d, [&](Vertex x) {
					if (covers && counts[x] == 1 && !g.closed_adjacent(t, x))
						covers = false;
				});
				if (!covers)
					continue;
				counts.remove(g, d);
				dom.erase(d);
				counts.add(g, t);
				dom.insert(t);
				++stats.exchanges;
			} else {
				Vertex t = any_vertex(rng);
				if (dom.contains(t))
					continue;
				if (unit(rng) >= std::exp(-1.0 / temperature))
					continue;
				counts.add(g, t);
				dom.insert(t);
				++stats.additions;
			}
		}
		++stats.epochs;
		temperature = decay(temperature, cfg);
		assert(counts == compute_cover_counts(g, make_solution(g.n(), dom.items())));
		if (cfg.max_epochs && stats.epochs >= *cfg.max_epochs)
			stop = true;
	}
	stats.final_temperature = temperature;
	if (stats_out)
		*stats_out = stats;
	return best;
}

} // namespace domset
