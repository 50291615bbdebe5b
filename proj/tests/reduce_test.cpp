#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "domset/generate.hpp"
#include "domset/reduce.hpp"
#include "oracles.hpp"

using namespace domset;
using namespace domset::testing;

namespace {

void expect_consistent(const Graph &g, const CoverState &s) {
	std::size_t undominated = 0;
	for (Vertex x = 0; x < g.n(); ++x) {
		bool covered = s.in_d(x);
		for (Vertex u : g.neighbors(x))
			covered = covered || s.in_d(u);
		EXPECT_EQ(static_cast<bool>(s.dominated[x]), covered) << "vertex " << x;
		undominated += covered ? 0 : 1;
	}
	EXPECT_EQ(s.undominated_count, undominated);
}

// Smallest dominating set that contains every vertex of `forced`.
std::size_t gamma_containing(const Graph &g, const std::vector<Vertex> &forced) {
	std::uint64_t forced_mask = 0;
	for (Vertex v : forced)
		forced_mask |= std::uint64_t{1} << v;
	std::size_t best = g.n();
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
		if ((mask & forced_mask) != forced_mask)
			continue;
		std::vector<Vertex> set;
		for (Vertex v = 0; v < g.n(); ++v)
			if (mask >> v & 1)
				set.push_back(v);
		if (set.size() < best && dominates(g, set))
			best = set.size();
	}
	return best;
}

} // namespace

TEST(AddToD, StarCenter) {
	auto g = star(3);
	CoverState s(g);
	add_to_d(s, g, 0);
	EXPECT_EQ(s.undominated_count, 0u);
	EXPECT_EQ(s.solution.size(), 1u);
	expect_consistent(g, s);
}

TEST(AddToD, Idempotent) {
	auto g = star(3);
	CoverState s(g);
	add_to_d(s, g, 1);
	add_to_d(s, g, 1);
	EXPECT_EQ(s.solution.size(), 1u);
	EXPECT_EQ(s.undominated_count, 2u);
	expect_consistent(g, s);
}

TEST(AddToD, IsolatedVertex) {
	auto g = parse_ds("p ds 3 1\n2 3\n");
	CoverState s(g);
	add_to_d(s, g, 0);
	EXPECT_EQ(s.undominated_count, 2u);
	EXPECT_TRUE(s.dominated[0]);
	EXPECT_FALSE(s.dominated[1]);
}

TEST(IsolateRule, Examples) {
	auto isolates = parse_ds("p ds 4 0\n");
	CoverState a(isolates);
	EXPECT_EQ(apply_isolate_rule(a, isolates), 4u);
	EXPECT_EQ(a.undominated_count, 0u);

	auto connected_graph = path(4);
	CoverState b(connected_graph);
	EXPECT_EQ(apply_isolate_rule(b, connected_graph), 0u);

	auto mixed = parse_ds("p ds 3 1\n2 3\n");
	CoverState c(mixed);
	EXPECT_EQ(apply_isolate_rule(c, mixed), 1u);
	EXPECT_TRUE(c.in_d(0));
}

TEST(LeafRule, PathOfThree) {
	auto g = path(3);
	CoverState s(g);
	EXPECT_EQ(apply_leaf_rule(s, g), 1u);
	EXPECT_TRUE(s.in_d(1));
	EXPECT_EQ(s.undominated_count, 0u);
	EXPECT_EQ(gamma_by_enumeration(g), 1u);
}

TEST(LeafRule, StarSkipsDominatedLeaves) {
	auto g = star(5);
	CoverState s(g);
	EXPECT_EQ(apply_leaf_rule(s, g), 1u);
	EXPECT_EQ(s.solution.size(), 1u);
	EXPECT_TRUE(s.in_d(0));
}

TEST(LeafRule, CycleHasNoLeaves) {
	auto g = cycle(4);
	CoverState s(g);
	EXPECT_EQ(apply_leaf_rule(s, g), 0u);
}

TEST(LeafRule, IsolatedEdgeForcesOneEnd) {
	auto g = parse_ds("p ds 2 1\n1 2\n");
	CoverState s(g);
	EXPECT_EQ(apply_leaf_rule(s, g), 1u);
	// vertex 0 is examined first and forces vertex 1
	EXPECT_TRUE(s.in_d(1));
	EXPECT_EQ(s.undominated_count, 0u);
}

TEST(ReductionProperty, InvariantsAndSafety) {
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 300; ++trial) {
		Graph g;
		std::size_t n = 1 + rng() % 14;
		switch (trial % 3) {
		case 0: g = generate_instance(InstanceKind::gnp, {.n = n, .p = 0.05 + 0.3 * (rng() % 100) / 100.0}, rng()); break;
		case 1: g = generate_instance(InstanceKind::tree, {.n = n}, rng()); break;
		default: g = generate_instance(InstanceKind::star_forest, {.stars = 1 + rng() % 4, .max_leaves = 3}, rng()); break;
		}
		CoverState s(g);
		apply_isolate_rule(s, g);
		expect_consistent(g, s);
		auto after_isolates = s.solution.size();
		apply_leaf_rule(s, g);
		expect_consistent(g, s);
		EXPECT_GE(s.solution.size(), after_isolates);

		for (Vertex v = 0; v < g.n(); ++v) {
			if (g.degree(v) == 0) {
				EXPECT_TRUE(s.in_d(v));
			}
			if (g.degree(v) == 1) {
				EXPECT_TRUE(s.dominated[v]);
			}
		}
		auto forced = s.solution.members();
		EXPECT_EQ(gamma_containing(g, {forced.begin(), forced.end()}), gamma_by_enumeration(g))
			<< to_ds_string(g);
	}
}
