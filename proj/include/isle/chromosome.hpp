#pragma once

#include <utility>
#include <vector>

namespace isle {

// One individual: a job-repetition permutation plus a cached makespan.
// The genome lists job ids; job j appearing for the t-th time stands for
// the t-th operation of job j.
struct Chromosome {
  std::vector<int> genome;
  double fitness = 0.0;
  bool evaluated = false;

  Chromosome() = default;
  explicit Chromosome(std::vector<int> g) : genome(std::move(g)) {}

  void set_fitness(double f) {
    fitness = f;
    evaluated = true;
  }

  void invalidate() {
    fitness = 0.0;
    evaluated = false;
  }

  friend bool operator==(const Chromosome& a, const Chromosome& b) {
    if (a.genome != b.genome || a.evaluated != b.evaluated) return false;
    return !a.evaluated || a.fitness == b.fitness;
  }
};

using Population = std::vector<Chromosome>;

}  // namespace isle
