#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "pipeline.hpp"
#include "verify.hpp"

namespace domset {

// One (instance, algorithm, seed) run. Only rows with valid = true count
// towards size statistics; failed runs carry an error message instead.
struct BenchRecord {
	std::string instance;
	Algorithm algo = Algorithm::hedom5;
	std::uint64_t seed = 0;
	std::size_t n = 0;
	std::size_t m = 0;
	std::optional<std::size_t> size;
	std::optional<std::size_t> opt;
	bool valid = false;
	std::optional<double> ms;
	std::string error;

	std::optional<std::size_t> gap() const {
		if (size && opt)
			return *size - *opt;
		return std::nullopt;
	}
};

struct BenchSummary {
	Algorithm algo = Algorithm::hedom5;
	std::size_t runs = 0;
	std::size_t valid = 0;
	double mean_size = 0;
	std::size_t wins = 0;
	std::optional<double> mean_gap;
};

struct BenchOptions {
	std::filesystem::path dir;
	std::vector<Algorithm> algos{Algorithm::greedy, Algorithm::sa, Algorithm::hedom5};
	std::vector<std::uint64_t> seeds{0};
	// algorithm and seed are overridden per run
	SolverConfig base;
	std::size_t oracle_max_n = 16;
	std::size_t jobs = 1;
	// false leaves the ms column empty so output is byte-reproducible
	bool record_time = true;
};

struct BenchResult {
	std::vector<BenchRecord> records;
	std::vector<BenchSummary> summaries;
	std::size_t instances = 0;
};

inline std::vector<std::filesystem::path> list_instances(const std::filesystem::path &dir) {
	std::vector<std::filesystem::path> files;
	for (const auto &entry : std::filesystem::directory_iterator(dir))
		if (entry.path().extension() == ".ds")
			files.push_back(entry.path());
	std::sort(files.begin(), files.end());
	return files;
}

namespace detail {

inline std::vector<BenchRecord> bench_instance(const std::filesystem::path &file, const BenchOptions &opt) {
	std::vector<BenchRecord> rows;
	auto name = file.filename().string();
	auto fail_all = [&](const std::string &why) {
		for (auto seed : opt.seeds)
			for (auto algo : opt.algos) {
				BenchRecord r;
				r.instance = name;
				r.algo = algo;
				r.seed = seed;
				r.error = why;
				rows.push_back(std::move(r));
			}
	};

	Graph g;
	try {
		std::ifstream in(file);
		if (!in)
			throw std::runtime_error("cannot open " + file.string());
		g = parse_ds(in);
	} catch (const std::exception &e) {
		fail_all(e.what());
		return rows;
	}

	std::optional<std::size_t> opt_size;
	if (g.n() <= std::min(opt.oracle_max_n, oracle_max_n))
		opt_size = brute_force_optimum(g).size;

	for (auto seed : opt.seeds) {
		for (auto algo : opt.algos) {
			BenchRecord r;
			r.instance = name;
			r.algo = algo;
			r.seed = seed;
			r.n = g.n();
			r.m = g.m();
			r.opt = opt_size;
			SolverConfig cfg = opt.base;
			cfg.algorithm = algo;
			cfg.seed = seed;
			try {
				auto start = Clock::now();
				auto sol = solve(g, cfg);
				double ms = elapsed_ms(start);
				// never trust the solver's own check
				auto report = verify(g, sol);
				r.valid = report.valid;
				if (report.valid)
					r.size = report.size;
				else
					r.error = "not dominating";
				if (opt.record_time)
					r.ms = ms;
			} catch (const std::exception &e) {
				r.error = e.what();
			}
			rows.push_back(std::move(r));
		}
	}
	return rows;
}

} // namespace detail

inline std::vector<BenchSummary> summarize(const std::vector<BenchRecord> &records,
		const std::vector<Algorithm> &algos) {
	std::vector<BenchSummary> out;
	std::map<Algorithm, std::size_t> index;
	for (auto a : algos) {
		index[a] = out.size();
		out.push_back({a, 0, 0, 0.0, 0, std::nullopt});
	}
	std::vector<double> size_sum(out.size(), 0), gap_sum(out.size(), 0);
	std::vector<std::size_t> gap_count(out.size(), 0);
	std::map<std::pair<std::string, std::uint64_t>, std::size_t> best;
	for (const auto &r : records) {
		auto &s = out[index.at(r.algo)];
		++s.runs;
		if (!r.valid)
			continue;
		++s.valid;
		size_sum[index[r.algo]] += static_cast<double>(*r.size);
		if (auto gap = r.gap()) {
			gap_sum[index[r.algo]] += static_cast<double>(*gap);
			++gap_count[index[r.algo]];
		}
		auto key = std::make_pair(r.instance, r.seed);
		auto it = best.find(key);
		if (it == best.end() || *r.size < it->second)
			best[key] = *r.size;
	}
	for (const auto &r : records)
		if (r.valid && *r.size == best.at({r.instance, r.seed}))
			++out[index.at(r.algo)].wins;
	for (std::size_t i = 0; i < out.size(); ++i) {
		if (out[i].valid)
			out[i].mean_size = size_sum[i] / static_cast<double>(out[i].valid);
		if (gap_count[i])
			out[i].mean_gap = gap_sum[i] / static_cast<double>(gap_count[i]);
	}
	return out;
}

// Runs every algorithm and seed over the `.ds` files of opt.dir (sorted by
// name). Rows come out in (instance, seed, algorithm) order regardless of
// the number of worker threads.
inline BenchResult run_bench(const BenchOptions &opt) {
	auto files = list_instances(opt.dir);
	std::vector<std::vector<BenchRecord>> per_file(files.size());
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i; (i = next.fetch_add(1)) < files.size();)
			per_file[i] = detail::bench_instance(files[i], opt);
	};
	std::size_t jobs = std::clamp<std::size_t>(opt.jobs, 1, std::max<std::size_t>(1, files.size()));
	{
		std::vector<std::jthread> pool;
		for (std::size_t j = 1; j < jobs; ++j)
			pool.emplace_back(worker);
		worker();
	}

	BenchResult result;
	result.instances = files.size();
	for (auto &rows : per_file)
		for (auto &r : rows)
			result.records.push_back(std::move(r));
	result.summaries = summarize(result.records, opt.algos);
	return result;
}

inline constexpr std::string_view bench_csv_header = "instance,algo,seed,n,m,size,opt,gap,valid,ms";

inline void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
	out << bench_csv_header << '\n';
	for (const auto &r : records) {
		out << r.instance << ',' << to_string(r.algo) << ',' << r.seed << ',' << r.n << ',' << r.m << ',';
		if (r.size)
			out << *r.size;
		out << ',';
		if (r.opt)
			out << *r.opt;
		out << ',';
		if (auto gap = r.gap())
			out << *gap;
		out << ',' << (r.valid ? 1 : 0) << ',';
		if (r.ms) {
			std::ostringstream ms;
			ms << std::fixed << std::setprecision(3) << *r.ms;
			out << ms.str();
		}
		out << '\n';
	}
}

inline void write_summary_csv(std::ostream &out, const std::vector<BenchSummary> &summaries) {
	out << "algo,runs,valid,mean_size,wins,mean_gap\n";
	for (const auto &s : summaries) {
		std::ostringstream line;
		line << std::fixed << std::setprecision(3);
		line << to_string(s.algo) << ',' << s.runs << ',' << s.valid << ',' << s.mean_size << ',' << s.wins << ',';
		if (s.mean_gap)
			line << *s.mean_gap;
		out << line.str() << '\n';
	}
}

} // namespace domset
