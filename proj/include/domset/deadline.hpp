#pragma once

#include <atomic>
#include <chrono>
#include <optional>

namespace domset {

using Clock = std::chrono::steady_clock;
using Millis = std::chrono::milliseconds;

// Wall-clock cutoff plus an optional external stop flag (set from a signal
// handler, for instance). An unlimited deadline only honours the flag.
class Deadline {
public:
	static Deadline never(const std::atomic<bool> *interrupt = nullptr) {
		return Deadline{std::nullopt, interrupt};
	}

	static Deadline after(Millis budget, const std::atomic<bool> *interrupt = nullptr) {
		return Deadline{Clock::now() + budget, interrupt};
	}

	static Deadline at(Clock::time_point when, const std::atomic<bool> *interrupt = nullptr) {
		return Deadline{when, interrupt};
	}

	bool unlimited() const noexcept { return !until_; }
	std::optional<Clock::time_point> until() const noexcept { return until_; }
	const std::atomic<bool> *interrupt() const noexcept { return interrupt_; }

	bool interrupted() const noexcept {
		return interrupt_ && interrupt_->load(std::memory_order_relaxed);
	}

	bool expired() const {
		return interrupted() || (until_ && Clock::now() >= *until_);
	}

private:
	Deadline(std::optional<Clock::time_point> until, const std::atomic<bool> *interrupt)
	: until_{until}, interrupt_{interrupt} { }

	std::optional<Clock::time_point> until_;
	const std::atomic<bool> *interrupt_;
};

inline double elapsed_ms(Clock::time_point since) {
	return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

} // namespace domset
