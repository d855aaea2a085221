#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "walkbound/exactnum.hpp"
#include "walkbound/rational.hpp"
#include "walkbound/wsum.hpp"

namespace walkbound {

// Set families over a ground set [n], n <= 24, as sorted lists of n-bit
// masks.  Bit i of a mask is membership of element i+1; the text form is a
// string whose i-th character (from the left) is that bit.

constexpr int kFamilyMaxGround = 24;

struct SetFamily {
  int n = 0;
  std::vector<std::uint32_t> members;  // sorted ascending, no duplicates
  struct Flags {
    std::optional<long> k_intersecting_for;
    std::optional<bool> is_antichain;
    std::optional<int> diameter;
  } flags;
};

std::string mask_to_bits(std::uint32_t mask, int n);
std::uint32_t bits_to_mask(const std::string& bits);

// The signed subset sum s_A = sum_{i in A} a_i - sum_{i not in A} a_i for
// the generating weight vector.
Rat signed_subset_sum(const WeightVector& w, std::uint32_t mask);

/// All A with s_A >= x.  |F| = 2^n * P{S_n >= x} (checked by tests).
SetFamily build_family_geq(const WeightVector& w, const Rat& x);
/// All A with s_A = x.
SetFamily build_family_eq(const WeightVector& w, const Rat& x);

// Serial references computing s_A per mask with plain rational arithmetic;
// used to test the scaled-integer parallel builders.
SetFamily build_family_geq_reference(const WeightVector& w, const Rat& x);
SetFamily build_family_eq_reference(const WeightVector& w, const Rat& x);

struct PairWitness {
  std::uint32_t a = 0, b = 0;  // a < b numerically
};

struct FamilyCheck {
  bool ok = true;
  std::optional<PairWitness> witness;
};

/// Every pair of members intersects in at least k elements (vacuous for
/// families of size <= 1).  On failure the first violating pair in
/// lexicographic mask order is returned.
FamilyCheck check_k_intersecting(const SetFamily& f, long k);

/// No member contains another.
FamilyCheck check_antichain(const SetFamily& f);

/// max over pairs of |A xor B| (0 for a singleton family).  Throws
/// std::domain_error for an empty family.
int diameter(const SetFamily& f);

// Fused pairwise statistics used by audits: minimum intersection size and
// maximum symmetric difference over all pairs, in one parallel pass.
struct PairStats {
  long min_intersection = 0;  // meaningful when pairs > 0
  int max_symdiff = 0;
  std::uint64_t pairs = 0;
};
PairStats pairwise_stats(const SetFamily& f);

struct FamilyAuditReport {
  int n = 0;
  Rat x;
  long k = 0;  // ceil(x)
  std::size_t geq_size = 0, eq_size = 0;
  bool geq_k_intersecting = false;
  int geq_diameter = -1;        // -1 when the family is empty
  bool diameter_within = true;  // diam(F_geq) <= n - k (vacuous when empty)
  // Antichain status of F_x; not applicable (nullopt) when a weight is zero.
  std::optional<bool> eq_antichain;
  bool eq_k_intersecting = false;
  // Cardinality bounds; absent when k > n (bounds inapplicable, families
  // necessarily empty for |a_i| <= 1).
  std::optional<BigCount> katona, milner, kleitman;
  bool geq_within_katona = true, geq_within_kleitman = true,
       eq_within_milner = true;
  bool katona_tight = false, milner_tight = false;
  bool bridge_geq_ok = false, bridge_eq_ok = false;  // |F| = 2^n * prob
  bool passed() const;
};

/// Builds both families with k = ceil(x), checks the structural claims
/// (k-intersecting, antichain where applicable, diameter) and compares the
/// cardinalities against the Katona / Milner / Kleitman bounds and the
/// distribution probabilities.
FamilyAuditReport audit_family(const WeightVector& w, const Rat& x);

void write_family(std::ostream& out, const SetFamily& f);
SetFamily read_family(std::istream& in);

}  // namespace walkbound
