// Command-line front end: solve, verify, oracle, gen, bench.
//
// Exit codes: 0 success, 1 invalid solution, 2 usage error, 3 input/output error.

#include <atomic>
#include <csignal>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domset/domset.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

std::atomic<bool> g_interrupt{false};

extern "C" void on_terminate(int) {
	g_interrupt.store(true, std::memory_order_relaxed);
}

struct IoError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

domset::Graph load_graph(const std::string &path) {
	if (path.empty() || path == "-")
		return domset::parse_ds(std::cin);
	std::ifstream in(path);
	if (!in)
		throw IoError("cannot open " + path);
	return domset::parse_ds(in);
}

struct SolverFlags {
	std::string algo = "hedom5";
	std::int64_t time_budget_ms = 10'000;
	std::size_t attempt_cap = 2000;
	std::uint64_t seed = 0;
	double sa_t0 = 1.0;
	double sa_cool = 0.995;
	std::optional<std::size_t> sa_epochs;
	std::size_t sa_moves = 0;
	bool no_wallclock = false;
	bool no_reductions = false;

	void add_budget_options(CLI::App *cmd) {
		cmd->add_option("--time-budget", time_budget_ms, "Wall-clock budget per run in ms")
			->check(CLI::NonNegativeNumber)->capture_default_str();
		cmd->add_option("--attempt-cap", attempt_cap, "Maximum 1-swap sweeps")
			->check(CLI::PositiveNumber)->capture_default_str();
		cmd->add_option("--sa-t0", sa_t0, "Annealing start temperature")
			->check(CLI::PositiveNumber)->capture_default_str();
		cmd->add_option("--sa-cool", sa_cool, "Annealing cooling factor in (0,1)")
			->check(CLI::Range(0.0, 1.0))->capture_default_str();
		cmd->add_option("--sa-epochs", sa_epochs, "Annealing epoch cap (default 1000 with --no-wallclock)");
		cmd->add_option("--sa-moves", sa_moves, "Moves per annealing epoch (0: max(100, n))");
		cmd->add_flag("--no-wallclock", no_wallclock, "Use attempt/epoch budgets only, for reproducible runs");
		cmd->add_flag("--no-reductions", no_reductions, "Skip the isolate and leaf rules in hedom5");
	}

	domset::SolverConfig config() const {
		domset::SolverConfig cfg;
		cfg.algorithm = *domset::parse_algorithm(algo);
		cfg.attempt_cap = attempt_cap;
		cfg.seed = seed;
		cfg.reductions = !no_reductions;
		cfg.interrupt = &g_interrupt;
		if (no_wallclock)
			cfg.time_budget.reset();
		else
			cfg.time_budget = domset::Millis{time_budget_ms};
		cfg.anneal.initial_temperature = sa_t0;
		cfg.anneal.cooling_factor = sa_cool;
		cfg.anneal.moves_per_epoch = sa_moves;
		cfg.anneal.max_epochs = sa_epochs;
		return cfg;
	}
};

const std::vector<std::string> algo_names{"hedom5", "greedy", "greedy-ln", "sa"};

int run_solve(const std::string &input, const SolverFlags &flags, bool trace) {
	auto g = load_graph(input);
	domset::StageTrace stages;
	auto cfg = flags.config();
	auto sol = domset::solve(g, cfg, &stages);
	if (trace)
		domset::write_trace(std::cerr, cfg.algorithm, stages);
	domset::write_solution(std::cout, sol);
	std::cout.flush();
	return exit_ok;
}

int run_verify(const std::string &graph_path, const std::string &solution_path) {
	auto g = load_graph(graph_path);
	std::ifstream in(solution_path);
	if (!in)
		throw IoError("cannot open " + solution_path);
	auto ids = domset::read_solution(in);
	domset::VerifyReport report;
	try {
		report = domset::verify(g, ids);
	} catch (const std::out_of_range &e) {
		std::cout << "invalid: " << e.what() << '\n';
		return exit_invalid;
	}
	if (!report.valid) {
		std::cout << "invalid: vertex " << *report.first_uncovered + 1 << " is not dominated\n";
		return exit_invalid;
	}
	std::cout << "valid size=" << report.size << '\n';
	return exit_ok;
}

int run_oracle(const std::string &input) {
	auto g = load_graph(input);
	if (g.n() > domset::oracle_max_n) {
		std::cerr << "oracle: n = " << g.n() << " exceeds the exact limit " << domset::oracle_max_n << '\n';
		return exit_usage;
	}
	auto opt = domset::brute_force_optimum(g);
	domset::write_solution(std::cout, domset::make_solution(g.n(), opt.witness));
	return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Minimum dominating set heuristics (hedom5, greedy, simulated annealing)"};
	app.require_subcommand(1);

	// solve
	auto *solve_cmd = app.add_subcommand("solve", "Solve a .ds instance and print the solution");
	SolverFlags solve_flags;
	std::string solve_input;
	bool trace = false;
	solve_cmd->add_option("input", solve_input, "Instance file (default: stdin)");
	solve_cmd->add_option("--algo", solve_flags.algo, "hedom5 | greedy | sa")
		->check(CLI::IsMember(algo_names))->capture_default_str();
	solve_cmd->add_option("--seed", solve_flags.seed, "RNG seed")->capture_default_str();
	solve_cmd->add_flag("--trace", trace, "Print per-stage sizes and timings to stderr");
	solve_flags.add_budget_options(solve_cmd);

	// verify
	auto *verify_cmd = app.add_subcommand("verify", "Check that a solution dominates a graph");
	std::string verify_graph, verify_solution;
	verify_cmd->add_option("graph", verify_graph, "Instance file")->required();
	verify_cmd->add_option("solution", verify_solution, "Solution file")->required();

	// oracle
	auto *oracle_cmd = app.add_subcommand("oracle", "Exact domination number for n <= 24");
	std::string oracle_input;
	oracle_cmd->add_option("input", oracle_input, "Instance file (default: stdin)");

	// gen
	auto *gen_cmd = app.add_subcommand("gen", "Generate a random .ds instance");
	std::string gen_kind = "gnp", gen_out;
	domset::GenParams gen_params;
	std::uint64_t gen_seed = 0;
	gen_cmd->add_option("--kind", gen_kind, "gnp | tree | grid | star-forest")
		->check(CLI::IsMember({"gnp", "tree", "grid", "star-forest"}))->capture_default_str();
	gen_cmd->add_option("--n", gen_params.n, "Vertex count (gnp, tree)");
	gen_cmd->add_option("--p", gen_params.p, "Edge probability (gnp)");
	gen_cmd->add_option("--rows", gen_params.rows, "Grid rows");
	gen_cmd->add_option("--cols", gen_params.cols, "Grid columns");
	gen_cmd->add_option("--stars", gen_params.stars, "Number of stars (star-forest)");
	gen_cmd->add_option("--max-leaves", gen_params.max_leaves, "Maximum leaves per star (star-forest)");
	gen_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
	gen_cmd->add_option("--out", gen_out, "Output file (default: stdout)");

	// bench
	auto *bench_cmd = app.add_subcommand("bench", "Compare algorithms over a directory of .ds files");
	SolverFlags bench_flags;
	bench_flags.time_budget_ms = 1000;
	std::string bench_dir, bench_out, bench_summary;
	std::vector<std::string> bench_algos{"greedy", "sa", "hedom5"};
	std::vector<std::uint64_t> bench_seeds;
	std::uint64_t bench_seed = 0;
	std::size_t oracle_cutoff = 16, jobs = 1;
	bench_cmd->add_option("--dir", bench_dir, "Directory of .ds instances")->required();
	bench_cmd->add_option("--algos", bench_algos, "Comma-separated algorithms")
		->delimiter(',')->check(CLI::IsMember(algo_names));
	auto *seed_opt = bench_cmd->add_option("--seed", bench_seed, "RNG seed");
	bench_cmd->add_option("--seeds", bench_seeds, "Comma-separated seeds")->delimiter(',')->excludes(seed_opt);
	bench_cmd->add_option("--out", bench_out, "CSV output file (default: stdout)");
	bench_cmd->add_option("--summary", bench_summary, "Summary CSV file (default: stdout)");
	bench_cmd->add_option("--oracle-max-n", oracle_cutoff, "Run the exact oracle up to this n")
		->check(CLI::Range(0, 24))->capture_default_str();
	bench_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
	bench_flags.add_budget_options(bench_cmd);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return exit_usage;
	}

	std::signal(SIGTERM, on_terminate);
	std::signal(SIGINT, on_terminate);

	try {
		if (*solve_cmd)
			return run_solve(solve_input, solve_flags, trace);
		if (*verify_cmd)
			return run_verify(verify_graph, verify_solution);
		if (*oracle_cmd)
			return run_oracle(oracle_input);

		if (*gen_cmd) {
			domset::Graph g;
			try {
				g = domset::generate_instance(*domset::parse_instance_kind(gen_kind), gen_params, gen_seed);
			} catch (const std::invalid_argument &e) {
				std::cerr << "gen: " << e.what() << '\n';
				return exit_usage;
			}
			if (gen_out.empty()) {
				domset::write_ds(std::cout, g);
			} else {
				std::ofstream out(gen_out);
				if (!out)
					throw IoError("cannot write " + gen_out);
				domset::write_ds(out, g);
			}
			return exit_ok;
		}

		if (*bench_cmd) {
			domset::BenchOptions opt;
			opt.dir = bench_dir;
			if (!std::filesystem::is_directory(opt.dir))
				throw IoError("not a directory: " + bench_dir);
			opt.algos.clear();
			for (const auto &a : bench_algos)
				opt.algos.push_back(*domset::parse_algorithm(a));
			opt.seeds = bench_seeds.empty() ? std::vector<std::uint64_t>{bench_seed} : bench_seeds;
			opt.base = bench_flags.config();
			opt.oracle_max_n = oracle_cutoff;
			opt.jobs = jobs;
			opt.record_time = !bench_flags.no_wallclock;

			auto result = domset::run_bench(opt);
			if (result.instances == 0)
				std::cerr << "warning: no .ds files in " << bench_dir << '\n';

			auto emit = [](const std::string &path, auto &&write) {
				if (path.empty()) {
					write(std::cout);
					return;
				}
				std::ofstream out(path);
				if (!out)
					throw IoError("cannot write " + path);
				write(out);
			};
			emit(bench_out, [&](std::ostream &o) { domset::write_bench_csv(o, result.records); });
			emit(bench_summary, [&](std::ostream &o) { domset::write_summary_csv(o, result.summaries); });
			return exit_ok;
		}
	} catch (const domset::ParseError &e) {
		std::cerr << "parse error: " << e.what() << '\n';
		return exit_io;
	} catch (const IoError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_io;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_io;
	}
	return exit_usage;
}
