#pragma once

// Seeded random inputs for the property suites.

#include <cstdint>
#include <random>

#include "repairaf/framework.hpp"
#include "repairaf/reductions.hpp"
#include "repairaf/relational.hpp"

namespace testsupport {

/// mt19937_64 with a portable bounded draw (std distributions differ between
/// standard libraries, this does not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool chance(int percent) { return between(1, 100) <= percent; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class InstanceClass { FdOnly, IdOnly, Mixed, Multirel };

struct InstanceLimits {
  int max_tuples = 8;
  int max_dependencies = 4;
  int max_domain = 4;
};

/// Unirelational for the first three classes; Multirel spreads tuples over
/// two relations and adds at least one cross-relation ID.
repairaf::Instance random_instance(Rng& rng, InstanceClass cls, const InstanceLimits& limits = {});

/// Arguments "a0".."a<n-1>" with random attacks, self-attacks included.
repairaf::ArgFramework random_framework(Rng& rng, int max_args = 10, int density_percent = 25);

/// Up to max_vars variables and max_clauses clauses of 1..3 literals.
repairaf::CnfFormula random_cnf(Rng& rng, int max_vars = 6, int max_clauses = 6);

/// |Y|, |Z| in 1..max_block, variables shuffled between the blocks.
repairaf::Qbf2Formula random_qbf(Rng& rng, int max_block = 3, int max_clauses = 6);

}  // namespace testsupport
