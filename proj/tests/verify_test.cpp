#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "domset/generate.hpp"
#include "domset/reduce.hpp"
#include "domset/verify.hpp"
#include "oracles.hpp"

using namespace domset;
using namespace domset::testing;

TEST(Verify, Examples) {
	auto g = star(4);
	auto center = verify(g, std::vector<Vertex>{0});
	EXPECT_TRUE(center.valid);
	EXPECT_EQ(center.size, 1u);
	EXPECT_FALSE(center.first_uncovered);

	auto empty = verify(g, std::vector<Vertex>{});
	EXPECT_FALSE(empty.valid);
	EXPECT_EQ(empty.first_uncovered, Vertex{0});

	auto leaves = verify(g, std::vector<Vertex>{3, 4});
	EXPECT_FALSE(leaves.valid);
	EXPECT_EQ(leaves.first_uncovered, Vertex{1});

	auto all = verify(g, std::vector<Vertex>{0, 1, 2, 3, 4, 4});
	EXPECT_TRUE(all.valid);
	EXPECT_EQ(all.size, 5u);

	EXPECT_THROW(verify(g, std::vector<Vertex>{5}), std::out_of_range);
}

TEST(BruteForce, Examples) {
	EXPECT_EQ(brute_force_optimum(path(4)).size, 2u);
	EXPECT_EQ(brute_force_optimum(cycle(6)).size, 2u);
	EXPECT_EQ(brute_force_optimum(complete(5)).size, 1u);
	EXPECT_EQ(gamma_by_enumeration(path(4)), 2u);
	EXPECT_EQ(gamma_by_enumeration(cycle(6)), 2u);
	EXPECT_EQ(brute_force_optimum(parse_ds("p ds 24 0\n")).size, 24u);
}

TEST(BruteForce, RefusesLargeGraphs) {
	EXPECT_THROW(brute_force_optimum(path(25)), std::invalid_argument);
}

// The branching search against plain subset enumeration.
TEST(BruteForce, MatchesEnumeration) {
	std::mt19937_64 rng(2);
	for (int trial = 0; trial < 300; ++trial) {
		auto g = generate_instance(static_cast<InstanceKind>(trial % 4),
				{.n = 1 + rng() % 13, .p = (rng() % 100) / 100.0, .rows = 1 + rng() % 3, .cols = 1 + rng() % 4,
					.stars = 1 + rng() % 3, .max_leaves = 3},
				rng());
		auto opt = brute_force_optimum(g);
		EXPECT_EQ(opt.size, gamma_by_enumeration(g)) << to_ds_string(g);
		EXPECT_EQ(opt.witness.size(), opt.size);
		EXPECT_TRUE(verify(g, opt.witness).valid);
	}
}

TEST(VerifyProperty, AgreesWithCoverState) {
	std::mt19937_64 rng(9);
	for (int trial = 0; trial < 200; ++trial) {
		auto g = generate_instance(InstanceKind::gnp, {.n = 1 + rng() % 50, .p = 0.08}, rng());
		CoverState st(g);
		std::vector<Vertex> picked;
		for (Vertex v = 0; v < g.n(); ++v)
			if (rng() % 3 == 0) {
				picked.push_back(v);
				add_to_d(st, g, v);
			}
		auto report = verify(g, picked);
		EXPECT_EQ(report.valid, st.undominated_count == 0);
		EXPECT_EQ(report.valid, dominates(g, picked));
		if (!report.valid) {
			EXPECT_FALSE(st.dominated[*report.first_uncovered]);
		}
	}
}
