#include "isle/jobshop.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "isle/errors.hpp"

namespace isle {

namespace {

// Splits a line into integer tokens; returns false on any non-integer token.
bool tokenize_ints(const std::string& line, std::vector<std::int64_t>& out) {
  out.clear();
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

JobShopInstance parse_instance(std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string line;
  int line_no = 0;

  JobShopInstance inst;
  bool have_header = false;
  int jobs_read = 0;
  std::vector<std::int64_t> nums;

  while (std::getline(input, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;

    if (!tokenize_ints(line, nums)) {
      throw ParseError(line_no, "expected integers, got '" + line + "'");
    }

    if (!have_header) {
      if (nums.size() != 2) {
        throw ParseError(line_no, "header must be 'n_jobs n_machines'");
      }
      if (nums[0] <= 0 || nums[1] <= 0) {
        throw ParseError(line_no, "n_jobs and n_machines must be positive");
      }
      inst.n_jobs = static_cast<int>(nums[0]);
      inst.n_machines = static_cast<int>(nums[1]);
      inst.ops.assign(inst.n_jobs, {});
      have_header = true;
      continue;
    }

    if (jobs_read >= inst.n_jobs) {
      throw ParseError(line_no, "extra data after " + std::to_string(inst.n_jobs) + " job rows");
    }
    if (nums.size() != static_cast<std::size_t>(2 * inst.n_machines)) {
      throw ParseError(line_no, "job row needs " + std::to_string(2 * inst.n_machines) +
                                    " integers, got " + std::to_string(nums.size()));
    }

    auto& row = inst.ops[jobs_read];
    row.reserve(inst.n_machines);
    std::vector<bool> machine_seen(inst.n_machines, false);
    for (int k = 0; k < inst.n_machines; ++k) {
      std::int64_t m = nums[2 * k];
      std::int64_t d = nums[2 * k + 1];
      if (m < 0 || m >= inst.n_machines) {
        throw ParseError(line_no, "machine id " + std::to_string(m) + " out of range [0, " +
                                      std::to_string(inst.n_machines) + ")");
      }
      if (machine_seen[m]) {
        throw ParseError(line_no, "machine " + std::to_string(m) + " repeated within a job");
      }
      if (d < 0) {
        throw ParseError(line_no, "negative duration " + std::to_string(d));
      }
      machine_seen[m] = true;
      row.push_back({static_cast<int>(m), d});
    }
    ++jobs_read;
  }

  if (!have_header) throw ParseError(line_no, "empty instance: missing header");
  if (jobs_read != inst.n_jobs) {
    throw ParseError(line_no, "expected " + std::to_string(inst.n_jobs) + " job rows, got " +
                                  std::to_string(jobs_read));
  }
  return inst;
}

JobShopInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

Schedule decode(std::span<const int> genome, const JobShopInstance& instance) {
  if (genome.size() != static_cast<std::size_t>(instance.genome_length())) {
    throw ArgumentError("genome length " + std::to_string(genome.size()) + " != " +
                        std::to_string(instance.genome_length()));
  }

  Schedule sched;
  sched.start.assign(instance.n_jobs, std::vector<std::int64_t>(instance.n_machines, 0));

  std::vector<int> next_op(instance.n_jobs, 0);
  std::vector<std::int64_t> job_ready(instance.n_jobs, 0);
  std::vector<std::int64_t> machine_ready(instance.n_machines, 0);

  for (int gene : genome) {
    if (gene < 0 || gene >= instance.n_jobs) {
      throw ArgumentError("job id " + std::to_string(gene) + " out of range");
    }
    int t = next_op[gene];
    if (t >= instance.n_machines) {
      throw ArgumentError("job " + std::to_string(gene) + " occurs more than " +
                          std::to_string(instance.n_machines) + " times");
    }
    const Operation& op = instance.ops[gene][t];
    std::int64_t start = std::max(job_ready[gene], machine_ready[op.machine]);
    std::int64_t end = start + op.duration;
    sched.start[gene][t] = start;
    job_ready[gene] = end;
    machine_ready[op.machine] = end;
    next_op[gene] = t + 1;
    sched.makespan = std::max(sched.makespan, end);
  }

  for (int j = 0; j < instance.n_jobs; ++j) {
    if (next_op[j] != instance.n_machines) {
      throw ArgumentError("job " + std::to_string(j) + " occurs " + std::to_string(next_op[j]) +
                          " times, expected " + std::to_string(instance.n_machines));
    }
  }
  return sched;
}

std::int64_t evaluate(std::span<const int> genome, const JobShopInstance& instance) {
  return decode(genome, instance).makespan;
}

std::vector<int> random_genome(const JobShopInstance& instance, Rng& rng) {
  std::vector<int> genome;
  genome.reserve(instance.genome_length());
  for (int j = 0; j < instance.n_jobs; ++j) {
    genome.insert(genome.end(), instance.n_machines, j);
  }
  shuffle(genome, rng);
  return genome;
}

bool is_feasible_genome(std::span<const int> genome, const JobShopInstance& instance) {
  if (genome.size() != static_cast<std::size_t>(instance.genome_length())) return false;
  std::vector<int> count(instance.n_jobs, 0);
  for (int gene : genome) {
    if (gene < 0 || gene >= instance.n_jobs) return false;
    if (++count[gene] > instance.n_machines) return false;
  }
  return true;
}

}  // namespace isle
