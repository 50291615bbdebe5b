#pragma once

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domset {

// Internal vertex id, 0-based. The I/O boundary converts to/from 1-based ids.
using Vertex = std::uint32_t;

struct Edge {
	Vertex u;
	Vertex v;
};

class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t line, const std::string &what)
	: std::runtime_error("line " + std::to_string(line) + ": " + what), line_{line} { }

	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

// Range over N[v]: v itself first, then its neighbors in ascending order.
class ClosedNeighborhood {
public:
	class iterator {
	public:
		using value_type = Vertex;
		using difference_type = std::ptrdiff_t;

		iterator() = default;
		iterator(Vertex self, const Vertex *nbr, difference_type i)
		: self_{self}, nbr_{nbr}, i_{i} { }

		Vertex operator*() const { return i_ < 0 ? self_ : nbr_[i_]; }
		iterator &operator++() { ++i_; return *this; }
		iterator operator++(int) { auto tmp = *this; ++i_; return tmp; }
		bool operator==(const iterator &other) const { return i_ == other.i_; }

	private:
		Vertex self_ = 0;
		const Vertex *nbr_ = nullptr;
		difference_type i_ = 0;
	};

	ClosedNeighborhood(Vertex self, std::span<const Vertex> nbr)
	: self_{self}, nbr_{nbr} { }

	iterator begin() const { return {self_, nbr_.data(), -1}; }
	iterator end() const { return {self_, nbr_.data(), static_cast<std::ptrdiff_t>(nbr_.size())}; }
	std::size_t size() const { return nbr_.size() + 1; }

private:
	Vertex self_;
	std::span<const Vertex> nbr_;
};

// Immutable simple undirected graph in CSR layout. Neighbor slices are sorted.
class Graph {
public:
	Graph() : off_(1, 0) { }

	// Builds the CSR arrays from an arbitrary edge list. Self-loops are
	// dropped and parallel edges collapsed; endpoints must be < n.
	static Graph from_edges(std::size_t n, std::vector<Edge> edges) {
		for (auto &e : edges) {
			if (e.u >= n || e.v >= n)
				throw std::out_of_range("edge endpoint out of range");
			if (e.u > e.v)
				std::swap(e.u, e.v);
		}
		std::erase_if(edges, [](const Edge &e) { return e.u == e.v; });
		std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
			return a.u != b.u ? a.u < b.u : a.v < b.v;
		});
		edges.erase(std::unique(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
			return a.u == b.u && a.v == b.v;
		}), edges.end());

		Graph g;
		g.n_ = n;
		g.m_ = edges.size();
		g.off_.assign(n + 1, 0);
		for (const auto &e : edges) {
			++g.off_[e.u + 1];
			++g.off_[e.v + 1];
		}
		for (std::size_t v = 0; v < n; ++v)
			g.off_[v + 1] += g.off_[v];
		g.nbr_.resize(2 * g.m_);
		std::vector<std::size_t> fill(g.off_.begin(), g.off_.end() - 1);
		// Pairs are sorted by (u, v), so every slice is filled in ascending order.
		for (const auto &e : edges) {
			g.nbr_[fill[e.u]++] = e.v;
			g.nbr_[fill[e.v]++] = e.u;
		}
		for (std::size_t v = 0; v < n; ++v)
			g.max_degree_ = std::max(g.max_degree_, g.degree(static_cast<Vertex>(v)));
		return g;
	}

	std::size_t n() const noexcept { return n_; }
	std::size_t m() const noexcept { return m_; }
	std::size_t max_degree() const noexcept { return max_degree_; }

	std::size_t degree(Vertex v) const {
		assert(v < n_);
		return off_[v + 1] - off_[v];
	}

	std::span<const Vertex> neighbors(Vertex v) const {
		assert(v < n_);
		return {nbr_.data() + off_[v], off_[v + 1] - off_[v]};
	}

	ClosedNeighborhood closed_neighborhood(Vertex v) const {
		return {v, neighbors(v)};
	}

	bool adjacent(Vertex u, Vertex v) const {
		auto nb = neighbors(u);
		return std::binary_search(nb.begin(), nb.end(), v);
	}

	// v in N[u]
	bool closed_adjacent(Vertex u, Vertex v) const {
		return u == v || adjacent(u, v);
	}

	std::span<const std::size_t> offsets() const noexcept { return off_; }
	std::span<const Vertex> adjacency() const noexcept { return nbr_; }

	std::vector<Edge> edges() const {
		std::vector<Edge> out;
		out.reserve(m_);
		for (std::size_t u = 0; u < n_; ++u)
			for (Vertex v : neighbors(static_cast<Vertex>(u)))
				if (u < v)
					out.push_back({static_cast<Vertex>(u), v});
		return out;
	}

	friend bool operator==(const Graph &, const Graph &) = default;

private:
	std::size_t n_ = 0;
	std::size_t m_ = 0;
	std::size_t max_degree_ = 0;
	std::vector<std::size_t> off_;
	std::vector<Vertex> nbr_;
};

template <typename F>
inline void for_each_closed(const Graph &g, Vertex v, F &&f) {
	f(v);
	for (Vertex u : g.neighbors(v))
		f(u);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
	const char *ws = " \t\r\n\f\v";
	auto b = s.find_first_not_of(ws);
	if (b == std::string_view::npos)
		return {};
	auto e = s.find_last_not_of(ws);
	return s.substr(b, e - b + 1);
}

// Splits on blanks; sets overflow if there are more than out.size() tokens.
inline std::size_t tokenize(std::string_view s, std::span<std::string_view> out, bool &overflow) {
	std::size_t count = 0;
	overflow = false;
	std::size_t i = 0;
	while (i < s.size()) {
		while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
			++i;
		if (i >= s.size())
			break;
		std::size_t j = i;
		while (j < s.size() && s[j] != ' ' && s[j] != '\t')
			++j;
		if (count == out.size()) {
			overflow = true;
			return count;
		}
		out[count++] = s.substr(i, j - i);
		i = j;
	}
	return count;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char *what) {
	std::uint64_t value = 0;
	auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
	if (ec != std::errc{} || ptr != tok.data() + tok.size())
		throw ParseError(line, std::string("expected non-negative integer for ") + what
				+ ", got '" + std::string(tok) + "'");
	return value;
}

} // namespace detail

// Reads a PACE `.ds` instance: `c` comment lines, one `p ds n m` header,
// then exactly m lines `u v` with 1 <= u, v <= n.
inline Graph parse_ds(std::istream &in) {
	std::size_t n = 0, declared_m = 0, lineno = 0, edge_lines = 0;
	bool have_header = false;
	std::vector<Edge> edges;
	std::string line;
	std::string_view tok[4];
	bool overflow = false;

	while (std::getline(in, line)) {
		++lineno;
		auto s = detail::trim(line);
		if (s.empty() || s.front() == 'c')
			continue;
		auto count = detail::tokenize(s, tok, overflow);
		if (!have_header) {
			if (overflow || count != 4 || tok[0] != "p" || tok[1] != "ds")
				throw ParseError(lineno, "expected header 'p ds <n> <m>'");
			n = detail::parse_uint(tok[2], lineno, "vertex count");
			declared_m = detail::parse_uint(tok[3], lineno, "edge count");
			if (n == 0)
				throw ParseError(lineno, "vertex count must be positive");
			if (n > std::uint64_t{std::numeric_limits<Vertex>::max()})
				throw ParseError(lineno, "vertex count too large");
			have_header = true;
			edges.reserve(std::min<std::size_t>(declared_m, std::size_t{1} << 24));
			continue;
		}
		if (tok[0] == "p")
			throw ParseError(lineno, "duplicate header");
		if (overflow || count != 2)
			throw ParseError(lineno, "expected edge line '<u> <v>'");
		if (edge_lines == declared_m)
			throw ParseError(lineno, "more edge lines than declared (" + std::to_string(declared_m) + ")");
		auto u = detail::parse_uint(tok[0], lineno, "vertex id");
		auto v = detail::parse_uint(tok[1], lineno, "vertex id");
		if (u < 1 || u > n || v < 1 || v > n)
			throw ParseError(lineno, "vertex id out of range [1, " + std::to_string(n) + "]");
		edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
		++edge_lines;
	}
	if (!have_header)
		throw ParseError(lineno + 1, "missing header 'p ds <n> <m>'");
	if (edge_lines < declared_m)
		throw ParseError(lineno + 1, "expected " + std::to_string(declared_m) + " edge lines, found "
				+ std::to_string(edge_lines));
	return Graph::from_edges(n, std::move(edges));
}

inline Graph parse_ds(std::string_view text) {
	std::string buf(text);
	std::istringstream in(buf);
	return parse_ds(in);
}

// Serializes g as `.ds`; the output reparses to an identical Graph.
inline void write_ds(std::ostream &out, const Graph &g) {
	out << "p ds " << g.n() << ' ' << g.m() << '\n';
	for (const auto &e : g.edges())
		out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

} // namespace domset
