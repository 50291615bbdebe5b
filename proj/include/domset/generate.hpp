#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace domset {

enum class InstanceKind { gnp, tree, grid, star_forest };

inline std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
	if (name == "gnp")
		return InstanceKind::gnp;
	if (name == "tree")
		return InstanceKind::tree;
	if (name == "grid")
		return InstanceKind::grid;
	if (name == "star-forest")
		return InstanceKind::star_forest;
	return std::nullopt;
}

inline std::string_view to_string(InstanceKind k) {
	switch (k) {
	case InstanceKind::gnp: return "gnp";
	case InstanceKind::tree: return "tree";
	case InstanceKind::grid: return "grid";
	case InstanceKind::star_forest: return "star-forest";
	}
	return "?";
}

// Only the fields relevant to the chosen kind are read:
//   gnp: n, p        tree: n        grid: rows, cols
//   star-forest: stars, max_leaves (each star gets 0..max_leaves leaves)
struct GenParams {
	std::size_t n = 0;
	double p = 0.0;
	std::size_t rows = 0;
	std::size_t cols = 0;
	std::size_t stars = 0;
	std::size_t max_leaves = 0;
};

namespace detail {

inline Graph relabel(std::size_t n, std::vector<Edge> edges, std::mt19937_64 &rng) {
	std::vector<Vertex> perm(n);
	std::iota(perm.begin(), perm.end(), Vertex{0});
	std::shuffle(perm.begin(), perm.end(), rng);
	for (auto &e : edges)
		e = {perm[e.u], perm[e.v]};
	return Graph::from_edges(n, std::move(edges));
}

// Erdős–Rényi G(n, p) by geometric skipping over the pair sequence.
inline Graph gnp(std::size_t n, double p, std::mt19937_64 &rng) {
	std::vector<Edge> edges;
	if (p >= 1.0) {
		for (Vertex u = 0; u < n; ++u)
			for (Vertex v = u + 1; v < n; ++v)
				edges.push_back({u, v});
		return Graph::from_edges(n, std::move(edges));
	}
	if (p > 0.0) {
		std::uniform_real_distribution<double> unit(0.0, 1.0);
		const double log_q = std::log1p(-p);
		std::int64_t v = 1, w = -1;
		const auto nn = static_cast<std::int64_t>(n);
		while (v < nn) {
			double r = unit(rng);
			w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
			while (w >= v && v < nn) {
				w -= v;
				++v;
			}
			if (v < nn)
				edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
		}
	}
	return Graph::from_edges(n, std::move(edges));
}

} // namespace detail

// Deterministic for a fixed seed. Throws std::invalid_argument on bad params.
inline Graph generate_instance(InstanceKind kind, const GenParams &params, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	switch (kind) {
	case InstanceKind::gnp:
		if (params.n < 1)
			throw std::invalid_argument("gnp needs n >= 1");
		if (!(params.p >= 0.0 && params.p <= 1.0))
			throw std::invalid_argument("gnp needs p in [0, 1]");
		return detail::gnp(params.n, params.p, rng);

	case InstanceKind::tree: {
		if (params.n < 1)
			throw std::invalid_argument("tree needs n >= 1");
		std::vector<Edge> edges;
		edges.reserve(params.n - 1);
		for (Vertex v = 1; v < params.n; ++v)
			edges.push_back({std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v});
		return detail::relabel(params.n, std::move(edges), rng);
	}

	case InstanceKind::grid: {
		if (params.rows < 1 || params.cols < 1)
			throw std::invalid_argument("grid needs rows >= 1 and cols >= 1");
		std::vector<Edge> edges;
		auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * params.cols + c); };
		for (std::size_t r = 0; r < params.rows; ++r) {
			for (std::size_t c = 0; c < params.cols; ++c) {
				if (c + 1 < params.cols)
					edges.push_back({id(r, c), id(r, c + 1)});
				if (r + 1 < params.rows)
					edges.push_back({id(r, c), id(r + 1, c)});
			}
		}
		return Graph::from_edges(params.rows * params.cols, std::move(edges));
	}

	case InstanceKind::star_forest: {
		if (params.stars < 1)
			throw std::invalid_argument("star-forest needs stars >= 1");
		std::vector<Edge> edges;
		std::uniform_int_distribution<std::size_t> leaves(0, params.max_leaves);
		Vertex next = 0;
		for (std::size_t s = 0; s < params.stars; ++s) {
			Vertex center = next++;
			for (std::size_t k = leaves(rng); k > 0; --k)
				edges.push_back({center, next++});
		}
		return detail::relabel(next, std::move(edges), rng);
	}
	}
	throw std::invalid_argument("unknown instance kind");
}

inline std::string to_ds_string(const Graph &g) {
	std::ostringstream out;
	write_ds(out, g);
	return out.str();
}

} // namespace domset
