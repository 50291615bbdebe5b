#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "anneal.hpp"
#include "construct.hpp"
#include "deadline.hpp"
#include "graph.hpp"
#include "prune.hpp"
#include "reduce.hpp"
#include "solution.hpp"
#include "swap_search.hpp"
#include "verify.hpp"

namespace domset {

enum class Algorithm { hedom5, greedy, sa };

// Epoch cap for sa when neither a wall-clock budget nor a cap is given.
inline constexpr std::size_t default_sa_epochs = 1000;

inline std::string_view to_string(Algorithm a) {
	switch (a) {
	case Algorithm::hedom5: return "hedom5";
	case Algorithm::greedy: return "greedy";
	case Algorithm::sa: return "sa";
	}
	return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
	if (name == "hedom5")
		return Algorithm::hedom5;
	if (name == "greedy" || name == "greedy-ln")
		return Algorithm::greedy;
	if (name == "sa")
		return Algorithm::sa;
	return std::nullopt;
}

struct SolverConfig {
	Algorithm algorithm = Algorithm::hedom5;
	// Unset means attempt-counted budgets only (reproducible runs).
	std::optional<Millis> time_budget = Millis{10'000};
	std::size_t attempt_cap = 2000;
	std::uint64_t seed = 0;
	AnnealConfig anneal;
	bool reductions = true;
	const std::atomic<bool> *interrupt = nullptr;
};

// Sizes after each stage of a run, for tracing and monotonicity checks.
struct StageTrace {
	std::size_t reduced = 0;
	std::size_t greedy = 0;
	std::size_t pruned = 0;
	std::size_t swapped = 0;
	std::size_t patch_added = 0;
	std::size_t final_size = 0;
	SwapStats swap;
	AnnealStats anneal;
	double reduce_ms = 0, greedy_ms = 0, prune_ms = 0, swap_ms = 0, anneal_ms = 0, total_ms = 0;
};

// One `key=value` line per stage, for a diagnostic stream.
inline void write_trace(std::ostream &out, Algorithm algo, const StageTrace &t) {
	auto line = [&](std::string_view stage, std::size_t size, double ms) {
		out << "c trace algo=" << to_string(algo) << " stage=" << stage << " size=" << size << " ms=" << ms
			<< '\n';
	};
	if (algo == Algorithm::hedom5) {
		line("reduce", t.reduced, t.reduce_ms);
		line("greedy", t.greedy, t.greedy_ms);
		line("prune", t.pruned, t.prune_ms);
		line("swap", t.swapped, t.swap_ms);
		out << "c trace algo=hedom5 stage=swap-stats sweeps=" << t.swap.sweeps << " swaps=" << t.swap.swaps
			<< " removals=" << t.swap.removals << " pruned=" << t.swap.pruned << '\n';
	} else {
		line("greedy", t.greedy, t.greedy_ms);
		if (algo == Algorithm::sa) {
			line("anneal", t.final_size - t.patch_added, t.anneal_ms);
			out << "c trace algo=sa stage=anneal-stats epochs=" << t.anneal.epochs << " moves=" << t.anneal.moves
				<< " removals=" << t.anneal.removals << " exchanges=" << t.anneal.exchanges
				<< " additions=" << t.anneal.additions << " temperature=" << t.anneal.final_temperature << '\n';
		}
	}
	out << "c trace algo=" << to_string(algo) << " stage=patch added=" << t.patch_added << '\n';
	line("final", t.final_size, t.total_ms);
}

namespace detail {

inline Deadline stage_deadline(const SolverConfig &cfg, Clock::time_point start) {
	if (!cfg.time_budget)
		return Deadline::never(cfg.interrupt);
	// 5% of the global budget is held back for output
	auto usable = std::chrono::duration_cast<Millis>(*cfg.time_budget * 95 / 100);
	return Deadline::at(start + usable, cfg.interrupt);
}

} // namespace detail

// Runs the selected algorithm and returns a verified dominating set.
//
// hedom5: isolate and leaf rules, lazy greedy, one backward prune, budgeted
// 1-swap sweeps, then the safety patch. Only the swap stage is time-limited.
// greedy: greedy_ln. sa: sa_solve seeded with greedy_ln.
inline Solution solve(const Graph &g, const SolverConfig &cfg, StageTrace *trace = nullptr) {
	const auto start = Clock::now();
	StageTrace t;
	Solution result;

	if (cfg.algorithm == Algorithm::hedom5) {
		auto mark = Clock::now();
		CoverState state(g);
		if (cfg.reductions)
			apply_reductions(state, g);
		t.reduced = state.solution.size();
		t.reduce_ms = elapsed_ms(mark);

		mark = Clock::now();
		lazy_greedy(state, g);
		t.greedy = state.solution.size();
		t.greedy_ms = elapsed_ms(mark);

		mark = Clock::now();
		SearchState search(g, std::move(state.solution));
		backward_prune(g, search.solution, search.counts);
		t.pruned = search.solution.size();
		t.prune_ms = elapsed_ms(mark);

		mark = Clock::now();
		std::mt19937_64 rng(cfg.seed);
		t.swap = swap_phase(g, search, SwapBudget(cfg.attempt_cap, detail::stage_deadline(cfg, start)), &rng);
		t.swapped = search.solution.size();
		t.swap_ms = elapsed_ms(mark);
		result = std::move(search.solution);
	} else {
		auto mark = Clock::now();
		result = greedy_ln(g);
		t.greedy = result.size();
		t.greedy_ms = elapsed_ms(mark);

		if (cfg.algorithm == Algorithm::sa) {
			mark = Clock::now();
			AnnealConfig anneal = cfg.anneal;
			anneal.seed = cfg.seed;
			anneal.interrupt = cfg.interrupt;
			if (cfg.time_budget) {
				auto until = *detail::stage_deadline(cfg, start).until();
				anneal.time_budget = std::max(Millis{0},
						std::chrono::duration_cast<Millis>(until - Clock::now()));
			} else if (!anneal.max_epochs) {
				anneal.max_epochs = default_sa_epochs;
			}
			result = sa_solve(g, result, anneal, &t.anneal);
			t.anneal_ms = elapsed_ms(mark);
		}
	}

	t.patch_added = safety_patch(g, result);
	t.final_size = result.size();
	t.total_ms = elapsed_ms(start);
	if (!verify(g, result).valid)
		throw std::logic_error("solver produced a non-dominating set");
	if (trace)
		*trace = t;
	return result;
}

} // namespace domset
