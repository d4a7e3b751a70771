#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradsym/serialize.hpp"

namespace gradsym {

// ---- random corpus ----

struct CorpusOptions {
  std::uint64_t seed = 20240611;
  std::size_t count = 50;
  std::vector<std::uint32_t> primes{2, 3};
  std::size_t max_dim = 5;
};

/// Unital subalgebras of M_2 / M_3 over F_p generated by one or two random
/// matrices (full or upper triangular), trivially graded. Deterministic in
/// the seed.
std::vector<GradedAlgebra> random_algebra_corpus(const CorpusOptions& opts = {});

struct NamedAlgebra {
  std::string name;
  GradedAlgebra algebra;
};

/// Constructor-generated algebras over F_2 of dimension at most max_dim:
/// scalar, group, field and matrix algebras, good gradings, trivial
/// extensions, crossed products, their products, tensor products and
/// ungradings. Structurally equal duplicates are dropped.
std::vector<NamedAlgebra> small_f2_corpus(std::size_t max_dim = 4);

// ---- single statements ----

/// [K (x) A, K (x) A] = K (x) [A, A] with K of degree m over the field of A.
bool replicate_scalar_extension(const GradedAlgebra& a, std::uint32_t m);

enum class CheckStatus { Holds, Fails, Skipped };
std::string check_status_name(CheckStatus s);

struct CheckResult {
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  Json data;
};

/// dim_l [D,D] = dim_l D - 1 with l = center(D). Throws NotDivision when D is
/// certifiably not a division algebra; skipped when undecided.
CheckResult replicate_commutator_dim(const GradedAlgebra& d);

/// The center of a graded division algebra is symmetric when char k does not
/// divide |G|. Skipped when the hypotheses fail or are undecided.
CheckResult replicate_center_theorem(const GradedAlgebra& a);

// ---- hunt ----

struct HuntParams {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> ext_degrees{1, 2};
  std::vector<Group> groups{Group::cyclic(2), Group::product({2, 2}), Group::cyclic(4)};
  /// Codes of the values allowed for alpha(g,h), g,h != e; empty means all of K^*.
  std::vector<std::uint32_t> alpha_values;
  /// Skip alpha failing the twisted cocycle identity before building anything.
  bool cocycle_prefilter = true;
  /// Largest number of candidates to enumerate in this run; 0 = no limit.
  std::uint64_t budget = 0;
  unsigned workers = 1;
  /// Position to start from (block index, offset inside the block).
  std::uint64_t start_block = 0;
  std::uint64_t start_offset = 0;
};

/// Groups of order <= max_order available to the hunt, in a fixed order.
std::vector<Group> hunt_groups(std::size_t max_order);

struct HuntBlock {
  std::uint32_t ext_degree = 1;
  Group group;
  /// sigma as images in Z/m of each group element (Frobenius powers).
  std::vector<std::vector<std::uint32_t>> homs;
  std::uint64_t alpha_choices = 0;  // saturating
  std::uint64_t candidates = 0;     // saturating
};

struct HuntReport {
  Json params;
  std::vector<HuntBlock> blocks;
  std::uint64_t candidates_enumerated = 0;
  std::uint64_t cocycle_rejections = 0;
  std::uint64_t associativity_failures = 0;
  /// Candidates that produced a valid crossed product and were decided.
  std::uint64_t instances_tested = 0;
  std::uint64_t division_count = 0;
  std::uint64_t division_unknown = 0;
  std::uint64_t symmetric_count = 0;
  std::uint64_t posterior_scans = 0;
  std::uint64_t division_criterion_mismatches = 0;
  std::vector<Json> non_symmetric_instances;
  std::vector<Json> no_base_field_point_instances;
  bool truncated = false;
  std::uint64_t next_block = 0;
  std::uint64_t next_offset = 0;
  std::string coverage;
};

std::vector<HuntBlock> hunt_blocks(const HuntParams& params);
HuntReport hunt_counterexample(const HuntParams& params);
Json hunt_report_to_json(const HuntReport& r);

/// Checkpoint: the report so far plus its SHA-256.
Json hunt_checkpoint(const HuntParams& params, const HuntReport& r);
/// Verifies the hash and continues the enumeration from the recorded position.
HuntReport resume_hunt(const Json& checkpoint, std::uint64_t budget = 0, unsigned workers = 1);

/// The crossed product for one candidate, if its data is consistent.
std::optional<CrossedProductSpec> hunt_candidate(const HuntParams& params, const HuntBlock& block,
                                                 std::uint64_t offset);

// ---- suite ----

struct SuiteOptions {
  /// Instance to corrupt (one structure constant changed), e.g. "quaternions".
  std::string corrupt;
  /// Restrict to one criterion name; empty runs all.
  std::string only;
};

struct SuiteEntry {
  std::string name;
  bool passed = false;
  std::string detail;
  Json certificates = Json::array();
};

/// Names of the replication checks, in execution order.
const std::vector<std::string>& suite_names();
std::vector<SuiteEntry> run_suite(const SuiteOptions& opts = {});
Json suite_to_json(const std::vector<SuiteEntry>& entries);

/// Instances referenced by the suite ("quaternions", "cyclic3", ...).
const std::vector<std::string>& suite_instance_names();

/// Regression value for the p = 2 hunt over F_2, F_4 and C_2, C_2xC_2, C_4.
inline constexpr std::uint64_t kHuntRegressionInstances = 97;

}  // namespace gradsym
