#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stepcomp/realizability.hpp"
#include "stepcomp/tournament.hpp"

namespace stepcomp {

/// Parameters of an exhaustive run over the 2^{m*n} orientations of K_{m,n}.
struct EnumerationSpec {
  int m = 1;
  int n = 1;
  /// Visit only canonical representatives under row/column relabelings
  /// (plus the side swap when m = n). Off by default so counts equal
  /// 2^{m*n}.
  bool dedup = false;
  int shards = 1;
  /// Refuse runs with more than this many matrix bits.
  int bit_limit = 24;
  /// Above 12 bits the fast path is cross-checked against the definitional
  /// operator on codes with code % stride == offset.
  std::uint64_t equivalence_stride = 997;
  std::uint64_t equivalence_offset = 0;
};

inline constexpr int kMaxStoredViolations = 100;

struct ExtremalEdgeData {
  std::uint64_t min_edges = 0;
  std::uint64_t max_edges = 0;
  std::string min_witness;  // orientation bit string attaining the minimum
  std::string max_witness;
};

struct VerificationReport {
  std::string check_id;
  int m = 0;
  int n = 0;
  bool dedup = false;
  int shards = 1;
  std::uint64_t orientations_tested = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // bit strings, first 100 by code
  std::map<std::string, std::string> observations;
  std::optional<ExtremalEdgeData> extremal;
  double wall_seconds = 0.0;

  bool verified() const { return violation_count == 0; }
  /// Line-oriented key: value rendering. Deterministic for a given run
  /// configuration and identical across shard counts; pass
  /// include_run_details to append shard count and timing.
  std::string to_text(bool include_run_details = false) const;
};

/// Smallest integer code in the orbit of `code` under row permutations x
/// column permutations (x transpose when m = n). Exact, factorial cost;
/// sides capped at 8 for sanity.
std::uint64_t canonical_orientation_code(int m, int n, std::uint64_t code);

/// Invokes the visitor once per orientation (or canonical class when dedup
/// is on) in ascending code order; returns the number of visits.
std::uint64_t enumerate_orientations(
    const EnumerationSpec& spec,
    const std::function<void(const BipartiteTournament&, std::uint64_t)>&
        visitor);

/// Sharded exhaustive run of an arbitrary per-orientation predicate;
/// orientations where it returns false are recorded as violations.
VerificationReport run_orientation_check(
    const EnumerationSpec& spec, const std::string& check_id,
    const std::function<bool(const BipartiteTournament&)>& ok);

/// The step graph has at most one non-trivial component or is exactly two
/// complete components of size >= 3.
VerificationReport verify_component_theorem(const EnumerationSpec& spec);

/// Every non-trivial component has diameter <= 3; the maximum observed
/// diameter is reported.
VerificationReport verify_diameter_theorem(const EnumerationSpec& spec);

/// Per-orientation structural invariants: non-isolated vertices have an
/// out-neighbor; same-side edges come from common out-neighbors and cross
/// edges from one-two-step witnesses; the arc/out-degree adjacency rule;
/// all-out-degrees >= 2 iff complete cross edges; every cross edge has a
/// same-side neighbor at one end; the complete-component trichotomy;
/// connected outputs have a degree-3 vertex, are never unicyclic, and at
/// diameter 3 carry a triangle and edge-sharing cycles; plus the fast-path
/// vs definitional equivalence (exhaustive to 12 bits, sampled above).
VerificationReport verify_invariant_suite(const EnumerationSpec& spec);

/// Minimum and maximum (1,2)-step edge counts with witness orientations.
/// Asserts the minimum equals 0 for m = n = 2 and C(n,2) otherwise
/// (m >= n); the maximum is recorded without assertion.
VerificationReport extremal_edge_counts(const EnumerationSpec& spec);

/// Enumerates trees up to isomorphism through max_order (<= 7) and decides
/// realizability for each; the star K_{1,4} must be the only hit and no
/// search may come back indeterminate.
VerificationReport tree_census(int max_order, const SearchBudget& budget = {});

}  // namespace stepcomp
