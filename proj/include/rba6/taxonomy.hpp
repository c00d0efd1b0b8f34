#pragma once
// Structural classification: closed subsets, kernel of phi, center/rank-4
// fusion tests, association-scheme feasibility filters, the complete
// m_phi = 1 classification, and family labeling for census output.

#include <optional>
#include <string>
#include <vector>

#include "rba6/tensor.hpp"

namespace rba6 {

struct ClosedSubset {
  std::vector<int> idx;  // contains 0, sorted
  Rational order;        // sum of degrees
  bool star_invariant;   // contains 4 iff contains 5
  bool normal;           // left and right coset supports agree elementwise
};

// All subsets containing 0 whose pairwise product supports stay inside;
// brute force over the 2^5 candidates.  Pre: table-algebra tensor
// (nonnegative lambda), so support tests are meaningful.
std::vector<ClosedSubset> closed_subsets(const StructureTensor& t,
                                         const std::array<Rational, 6>& delta);

// ker phi = { i : phi_i = delta_i } (always includes 0).  Closedness is a
// separate question: it can fail for RBAs with negative structure
// constants.
std::vector<int> kernel_phi(const CharacterTable& t);
bool is_closed(const std::vector<int>& idx, const StructureTensor& t);

// Center fusion: present iff {phi_i/delta_i : i=0..5} has at most three
// distinct values.  I is the ratio class of a chosen value != 1, J the
// complement of I in {1..5}.
struct CenterPartition {
  std::vector<int> I, J;
};
std::optional<CenterPartition> center_fusion(const ParameterSet& ps);

// Rank-4 commutative real fusion profile for a *-invariant nonempty proper
// K subset of I: degrees (1, o(K), o(I\K), o(J)), multiplicities
// (1, m_phi, m_chi, m_chi).  Throws std::domain_error on an invalid K.
struct FusionProfile {
  std::array<Rational, 4> degrees;
  std::array<Rational, 4> mults;
};
FusionProfile rank4_fusion_profile(const ParameterSet& ps,
                                   const CenterPartition& part,
                                   const std::vector<int>& K);

// Scheme-feasibility filter: in an association scheme lambda_iji * delta_i
// is even whenever j != 0 is symmetric and delta_i > 1.  Pre: integral
// table-algebra tensor.
struct EvennessWitness {
  int i, j;
  Integer lambda;  // lambda_iji, odd with delta_i odd
};
struct EvennessResult {
  bool pass;
  std::vector<EvennessWitness> witnesses;  // all odd lambda_iji delta_i pairs
  int i = -1, j = -1;                      // first witness, for convenience
  Integer lambda = 0;
};
EvennessResult evenness_filter(const StructureTensor& t,
                               const std::array<Rational, 6>& delta);

// m_phi = 1 classification.
enum class Mphi1Kind { WreathRank5, RealBipartite, NonRealBipartite };

// Witness for integrality of the non-real bipartite family: odd positive
// alpha, gamma, k1, k2 with delta = (alpha gamma k1, alpha gamma k2,
// alpha^2 k1 k2, d4), gcd(k1,k2) = 1, alpha^2 < 2 gamma, and d4 dividing
// gamma k1 k2 (with cofactor beta), gamma k1 (alpha gamma k1 - 1),
// gamma k2 (alpha gamma k2 - 1), and k1 k2 (alpha^2 k1 k2 - 1).
struct BipartiteWitness {
  Integer alpha, gamma, k1, k2, beta;
};

struct Mphi1Report {
  Mphi1Kind kind;
  bool integral_predicted;
  std::optional<BipartiteWitness> witness;  // non-real bipartite, integral
};

// Pre: m_phi = 1.  Branches on |ker phi| in {3, 5}: 5 is the rank-2 over
// rank-5 wreath (never integral); 3 with a symmetric kernel is the real
// bipartite family (integral iff the thin degree is 1, the other three
// degrees are equal and even, and 8 | n - 2); 3 with kernel {0,4,5} is the
// non-real bipartite family (integral iff a witness exists).
Mphi1Report classify_mphi1(const ParameterSet& ps, const CharacterTable& t,
                           const StructureTensor& tensor);

// The alpha = 1 generator: present iff gamma = (k1 k2 + 1)/(k1 + k2) is an
// odd integer and (k1 + k2) | (k_i^2 - 1); yields the non-real bipartite
// parameter set with delta = (gamma k1, gamma k2, k1 k2, k1 k2).
std::optional<ParameterSet> lemma_2ks_generator(long k1, long k2);

struct FamilyLabel {
  std::string tag;     // template id, e.g. "C3:K", "p-array", "EoK", "primitive"
  std::string detail;  // best-effort human label, e.g. "C3:K11"
};

struct AlgebraRecord {
  ParameterSet params;
  CharacterTable table;
  StandardBasis basis;
  StructureTensor tensor;
};

// Template match, most specific first: p-array, PG, C3:K, the m_phi = 1
// bipartite families, E o K circle products, then closed-subset-derived
// extension labels (U:K/U:D, K:T, T:K/T:D), then "primitive" when only the
// trivial closed subsets exist, else "other".  Labels are best-effort.
FamilyLabel match_family(const AlgebraRecord& rec);

// Literature facts (strongly regular graph tables etc.) keyed by a profile
// string; these are cited annotations, never computed.
struct LiteratureNote {
  std::string profile;
  std::string fact;
};
std::vector<LiteratureNote> literature_notes(const ParameterSet& ps);

}  // namespace rba6
