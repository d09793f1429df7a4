#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isle/rng.hpp"

namespace isle {

struct Operation {
  int machine = 0;
  std::int64_t duration = 0;
};

// Classic JSSP instance: ops[j][k] is the k-th operation of job j.
// Within a job every machine appears exactly once.
struct JobShopInstance {
  int n_jobs = 0;
  int n_machines = 0;
  std::vector<std::vector<Operation>> ops;

  int genome_length() const { return n_jobs * n_machines; }
};

struct Schedule {
  // start[j][k] is the start time of ops[j][k].
  std::vector<std::vector<std::int64_t>> start;
  std::int64_t makespan = 0;
};

// Parses the plain benchmark format:
//   first non-comment line: "n_jobs n_machines"
//   then n_jobs lines of 2*n_machines integers (machine, duration alternating)
//   '#' starts a comment line
// Throws ParseError with the offending 1-based line number.
JobShopInstance parse_instance(std::string_view text);

// Convenience: read and parse a file. Throws Error if unreadable.
JobShopInstance load_instance(const std::string& path);

// Semi-active decoder: scan the genome left to right, the t-th occurrence of
// job j schedules ops[j][t] at max(job ready, machine ready).
// Throws ArgumentError on an infeasible genome.
Schedule decode(std::span<const int> genome, const JobShopInstance& instance);

// Makespan of the decoded schedule; lower is better.
std::int64_t evaluate(std::span<const int> genome, const JobShopInstance& instance);

// Uniformly shuffled multiset with each job id repeated n_machines times.
std::vector<int> random_genome(const JobShopInstance& instance, Rng& rng);

// True iff each job id in [0, n_jobs) occurs exactly n_machines times.
bool is_feasible_genome(std::span<const int> genome, const JobShopInstance& instance);

}  // namespace isle
