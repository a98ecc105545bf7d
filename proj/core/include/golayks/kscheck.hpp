#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "golayks/bases.hpp"
#include "golayks/codes.hpp"

namespace golayks {

/// Incidence classes of a basis system: how many rays occur in how many
/// bases, e.g. 220 rays each in 27 bases. Classes are sorted by occurrence.
struct IncidenceClass {
    std::uint64_t ray_count = 0;
    std::uint64_t occurrence = 0;
};

struct IncidenceSymbol {
    std::vector<IncidenceClass> classes;
    std::uint64_t total_bases = 0;
    int basis_size = 0;

    /// Rendering like "220_27 132_9496 12_35696 - 140647_12".
    std::string to_string() const;
};

/// Bounded feasibility instance: does sum coeff_j * x_j = target have an
/// integer solution with 0 <= x_j <= bounds_j?
struct DiophantineInstance {
    std::vector<std::uint64_t> coefficients;
    std::vector<std::uint64_t> bounds;
    std::uint64_t target = 0;

    std::string to_string() const;
};

struct DiophantineResult {
    bool feasible = false;
    std::vector<std::uint64_t> witness;  // empty when infeasible
};

enum class OracleVerdict { feasible, infeasible, unknown };

const char* to_string(OracleVerdict v);

struct ExactCoverResult {
    OracleVerdict verdict = OracleVerdict::unknown;
    std::vector<int> assigned_one;    // selected ray labels, when feasible
    std::vector<int> unconstrained;   // rays outside every basis
    std::uint64_t nodes = 0;
};

/// Machine-checkable KS verdict: the incidence counting argument and the
/// independent search oracle, recorded side by side.
struct KSCertificate {
    std::string system_id;
    IncidenceSymbol symbol;
    DiophantineInstance instance;
    bool diophantine_feasible = false;
    std::vector<std::uint64_t> witness;
    OracleVerdict oracle_verdict = OracleVerdict::unknown;
    std::vector<int> oracle_assignment;  // value-1 ray labels when feasible
    bool ks_proved = false;
};

/// Groups rays by occurrence count and checks the double-counting
/// identity before returning. Throws std::logic_error on inconsistency.
IncidenceSymbol incidence_symbol(const BasisSystem& bs);

/// Exact decision by dynamic programming over reachable sums; a verified
/// witness is returned whenever feasible.
DiophantineResult diophantine_feasible(const DiophantineInstance& inst);

/// Complete backtracking search for a 0/1 ray assignment with exactly one
/// value-1 ray per basis. Branches on the most-constrained basis, lowest
/// label first. Infeasible is a proof; unknown only on budget exhaustion.
ExactCoverResult exact_cover_search(const BasisSystem& bs,
                                    std::uint64_t budget = kDefaultSearchBudget);

/// Builds the symbol, derives the Diophantine instance (coefficients =
/// class occurrences, bounds = class sizes, target = total bases), runs
/// both deciders and cross-checks them. A counting-infeasible /
/// search-feasible contradiction throws std::logic_error.
KSCertificate ks_certificate(const BasisSystem& bs,
                             std::uint64_t oracle_budget = kDefaultSearchBudget);

/// Generic binary-code construction: divisibility test, seed-basis
/// search, and (when both are favorable) the translated system and its
/// certificate.
struct PipelineReport {
    std::string code_name;
    int length = 0;
    int dimension = 0;
    std::uint64_t ray_count = 0;
    bool divisibility_ok = false;  // true when 2n does not divide 2^(k-1)
    SeedOutcome seed_outcome = SeedOutcome::proven_absent;
    std::optional<Basis> seed_basis;
    std::uint64_t seed_nodes = 0;
    std::optional<KSCertificate> certificate;
};

PipelineReport generic_binary_pipeline(const GeneratorMatrix& G,
                                       std::uint64_t budget = kDefaultSearchBudget,
                                       std::uint64_t oracle_budget = 1'000'000);

}  // namespace golayks
