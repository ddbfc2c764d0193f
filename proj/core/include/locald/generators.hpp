#pragma once
// Seeded graph family generators.  All randomness flows through Rng below so
// results are bit-identical across standard libraries (std::*_distribution is
// implementation-defined; we avoid it).

#include <cstdint>
#include <map>
#include <string>

#include "locald/graph.hpp"

namespace locald {

// Thin deterministic wrapper over mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next();
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n);
  // uniform in [0, 1)
  double real();
  // number of "heads" before the first "tail", P(tail) = p
  int geometric(double p);

 private:
  std::uint64_t s_;
  std::uint64_t x_[2] = {0, 0};
  bool init_ = false;
  void seed_state();
};

struct GraphFamilySpec {
  std::string family;                   // path|cycle|grid|tree|clique|star|er|bipartite|high_girth
  std::map<std::string, double> params; // n, rows, cols, p, left, right, degree, girth
  std::uint64_t seed = 0;

  // "family:key=val,key=val[:seed=S]" e.g. "er:n=100,p=0.05:seed=7"
  static GraphFamilySpec parse(const std::string& text);
  std::string to_string() const;
};

Graph generate(const GraphFamilySpec& spec);

}  // namespace locald
