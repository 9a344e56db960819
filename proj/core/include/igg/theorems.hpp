#pragma once

#include "igg/graph_classes.hpp"
#include "igg/group_spec.hpp"
#include "igg/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace igg {

// Structural predicates deciding, from Sylow-level facts alone, whether the
// intersection subgroup graph of a nilpotent group falls in each class.
// Legitimate because a finite nilpotent group is the direct product of its
// Sylow subgroups. Preconditions throw Error(precondition_violated).

bool predicate_perfect_nilpotent(const StructuralProfile& p);       // nilpotent, not a p-group
bool predicate_triangle_free_nilpotent(const StructuralProfile& p); // nilpotent
bool predicate_bipartite_nilpotent(const StructuralProfile& p);     // nilpotent (same classification)
bool predicate_cluster_nilpotent(const StructuralProfile& p);       // nilpotent
bool predicate_clawfree_nilpotent(const StructuralProfile& p);      // nilpotent
bool predicate_cograph(const StructuralProfile& p);                 // nilpotent (p-groups included)

enum class ChordalPrediction { yes, no, necessary_only };
ChordalPrediction predicate_chordal(const StructuralProfile& p); // nilpotent or solvable

// Family classifications by parameter.
bool predicate_dihedral(long n, GraphClass cls);    // cograph/chordal: n a prime power
bool predicate_symmetric(long n, GraphClass cls);   // cograph/chordal: n == 3
bool predicate_alternating(long n, GraphClass cls); // cograph/chordal: n <= 4

// A firm claim must match the computed verdict; an ambiguous claim is
// reported either way and never fails a verification run. Ambiguous claims
// come from classification entries whose source rule is internally
// inconsistent or leaves the case undetermined (see the source strings).
enum class ClaimStatus { firm, ambiguous };

struct ClassificationClaim {
  GroupSpec spec;
  GraphClass cls = GraphClass::cograph;
  bool predicted = false;
  std::string source; // rule identifier, non-empty
  ClaimStatus status = ClaimStatus::firm;
};

// Deterministic catalog: cyclic, dihedral, generalized quaternion, symmetric
// and alternating (n = 3..5), elementary abelian, C_{p^k} x C_p, Heisenberg,
// and nilpotent products of per-prime Sylow constructors, every group paired
// with each classification rule that applies to it.
std::vector<ClassificationClaim> build_catalog(int max_order);

// Claims for one group profile (used by both the catalog builder and the
// verification harness; the harness cross-checks the catalog's predictions
// against profiles computed from real lattices).
std::vector<ClassificationClaim> claims_for_profile(const GroupSpec& spec, const StructuralProfile& profile);

struct VerificationRow {
  ClassificationClaim claim;
  std::optional<bool> computed;
  std::optional<ClassCertificate> certificate;
  bool agree = true;        // predicted == computed (true when skipped and not firm)
  bool prediction_consistent = true; // catalog prediction matches the lattice-profile prediction
  std::string note;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  int firm_total = 0;
  int ambiguous_total = 0;
  std::vector<size_t> firm_disagreements; // indices into rows (includes firm cap errors)
  std::vector<size_t> ambiguous_disagreements;
  int skipped = 0;

  bool ok() const { return firm_disagreements.empty(); }
  std::string to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  EnumLimits limits;
  int perfect_cap = kDefaultPerfectCap;
  int jobs = 0;
};

VerificationReport run_verification(const std::vector<ClassificationClaim>& catalog,
                                    const VerifyOptions& opts = {});

} // namespace igg
