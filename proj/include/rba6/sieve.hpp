#pragma once
// Census enumeration: all integer parameter sets with |phi_i| <= delta_i and
// integral structure constants up to an order bound, one record per
// index-permutation equivalence class.

#include <optional>
#include <vector>

#include "rba6/taxonomy.hpp"

namespace rba6 {

struct CensusRecord {
  ParameterSet params;  // canonical representative
  CharacterTable table;
  bool integral;       // all lambda_ijk integers (gate for inclusion)
  bool table_algebra;  // all lambda_ijk >= 0
  bool mult_integral;  // m_phi and m_chi both integers
  bool std_bounds;     // |phi_i| <= delta_i and |chi_i| <= 2 delta_i
  bool primitive;      // only the trivial closed subsets
  bool evenness_pass;  // scheme-feasibility filter verdict
  FamilyLabel family;
};

// Sort the (delta_i, phi_i) pairs for i = 1..3 lexicographically descending;
// the (4,5) swap fixes the parameters, so this picks the class representative.
ParameterSet canonicalize(const ParameterSet& ps);

// Partial search-tree assignment: degrees first, then phis.  phi entries are
// meaningful only once all four degrees are present.
struct SearchPrefix {
  long max_order;
  std::vector<long> delta;
  std::vector<long> phi;
};
enum class PruneVerdict { Keep, Cut };
PruneVerdict prune(const SearchPrefix& p);

// Stage-1 filter over the integers: the chi values determined by the
// parameters must be rational with denominators dividing the right lcm
// combination; equivalently a handful of divisibility conditions.  Also cuts
// the all-ratios-equal degeneration and m_chi <= 0.
bool chi_divisibility_filter(const long d[4], const long p[4]);

// Stage-2 filter in doubles: assemble the transition matrix numerically and
// test all 216 structure constants against integrality (tolerance 1e-6).
// Sets ta when all of them are also nonnegative.
bool numeric_lambda_check(const long d[4], const long p[4], bool& ta);

// Full exact pipeline for one parameter set: character table, transition
// matrix (all-plus signs), verification, basis, tensor.  Throws
// std::domain_error when validation or verification fails.
AlgebraRecord realize_record(const ParameterSet& ps);

// Taxonomy pass over an exact record.
CensusRecord classify_record(const AlgebraRecord& rec);

// One record per equivalence class with n <= max_order and integral lambda
// (nonnegative too when require_ta), sorted by (n, canonical parameters).
// jobs > 1 partitions the degree loop across threads; output is identical
// for any job count.
std::vector<CensusRecord> enumerate(long max_order, bool require_ta,
                                    int jobs = 1);

}  // namespace rba6
