#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "domset/construct.hpp"
#include "domset/generate.hpp"
#include "domset/verify.hpp"
#include "oracles.hpp"

using namespace domset;
using namespace domset::testing;

namespace {

std::vector<Vertex> members_of(const Solution &s) {
	auto ms = s.members();
	return {ms.begin(), ms.end()};
}

} // namespace

TEST(TrueGain, Examples) {
	auto g = star(3);
	CoverState fresh(g);
	EXPECT_EQ(true_gain(fresh, g, 0), 4u);

	CoverState full(g);
	add_to_d(full, g, 0);
	EXPECT_EQ(true_gain(full, g, 2), 0u);

	auto p3 = path(3);
	CoverState s(p3);
	add_to_d(s, p3, 0);
	// N[3] = {2, 3}, only vertex 3 is still undominated
	EXPECT_EQ(true_gain(s, p3, 2), 1u);
}

TEST(GainQueue, TiesPopSmallestId) {
	GainQueue q;
	q.push(3, 7);
	q.push(5, 9);
	q.push(5, 2);
	q.push(3, 1);
	EXPECT_EQ(q.pop().v, 2u);
	EXPECT_EQ(q.pop().v, 9u);
	auto e = q.pop();
	EXPECT_EQ(e.v, 1u);
	EXPECT_EQ(e.gain, 3u);
	EXPECT_EQ(q.pop().v, 7u);
	EXPECT_TRUE(q.empty());
}

TEST(LazyGreedy, StarPicksCenter) {
	auto g = star(4);
	CoverState s(g);
	lazy_greedy(s, g);
	EXPECT_EQ(members_of(s.solution), (std::vector<Vertex>{0}));
	EXPECT_EQ(brute_force_optimum(g).size, 1u);
}

TEST(LazyGreedy, TwoTriangles) {
	auto g = make_graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
	CoverState s(g);
	lazy_greedy(s, g);
	EXPECT_EQ(members_of(s.solution), (std::vector<Vertex>{0, 3}));
	EXPECT_EQ(gamma_by_enumeration(g), 2u);
}

TEST(LazyGreedy, AlreadyDominatedAddsNothing) {
	auto g = star(4);
	CoverState s(g);
	add_to_d(s, g, 0);
	lazy_greedy(s, g);
	EXPECT_EQ(s.solution.size(), 1u);
}

TEST(GreedyLn, Examples) {
	EXPECT_EQ(members_of(greedy_ln(parse_ds("p ds 1 0\n"))), (std::vector<Vertex>{0}));
	EXPECT_EQ(greedy_ln(star(4)).size(), 1u);
	auto p4 = path(4);
	EXPECT_EQ(gamma_by_enumeration(p4), 2u);
	EXPECT_EQ(greedy_ln(p4).size(), 2u);
}

TEST(LazyEagerEquivalence, AllGraphsUpToSixVertices) {
	for (std::size_t n = 1; n <= 6; ++n) {
		const std::uint64_t pairs = n * (n - 1) / 2;
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
			auto g = from_edge_mask(n, mask);
			ASSERT_EQ(members_of(greedy_ln(g)), eager_greedy(g)) << to_ds_string(g);
		}
	}
}

// After reductions the lazy stage must still match an eager rescoring run
// started from the same partial state.
TEST(LazyEagerEquivalence, FromReducedState) {
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 150; ++trial) {
		auto g = generate_instance(trial % 2 ? InstanceKind::tree : InstanceKind::gnp,
				{.n = 5 + rng() % 60, .p = 0.08}, rng());
		CoverState s(g);
		apply_reductions(s, g);
		std::vector<bool> covered(s.dominated.begin(), s.dominated.end());
		auto prefix = members_of(s.solution);
		lazy_greedy(s, g);
		ASSERT_EQ(members_of(s.solution), eager_greedy(g, covered, prefix));
	}
}

TEST(GreedyProperty, ValidAndWithinLogBound) {
	std::mt19937_64 rng(17);
	for (int trial = 0; trial < 200; ++trial) {
		auto kind = static_cast<InstanceKind>(trial % 4);
		GenParams p{.n = 1 + rng() % 14, .p = 0.1 + 0.5 * (rng() % 100) / 100.0, .rows = 1 + rng() % 4,
			.cols = 1 + rng() % 4, .stars = 1 + rng() % 3, .max_leaves = 4};
		auto g = generate_instance(kind, p, rng());
		auto sol = greedy_ln(g);
		ASSERT_TRUE(verify(g, sol).valid);
		auto gamma = brute_force_optimum(g).size;
		double bound = (std::log(static_cast<double>(g.max_degree() + 1)) + 1.0) * static_cast<double>(gamma);
		EXPECT_LE(static_cast<double>(sol.size()), bound + 1e-9);
	}
}
