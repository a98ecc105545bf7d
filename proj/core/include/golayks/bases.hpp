#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "golayks/rays.hpp"

namespace golayks {

/// Default node budget for clique search and enumeration.
inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000ull;

/// A set of mutually orthogonal ray labels of full (effective) dimension,
/// kept sorted.
struct Basis {
    std::vector<int> ray_labels;
};

struct BasisSystem {
    std::string system_id;
    int basis_size = 0;
    std::size_t ray_total = 0;
    std::vector<Basis> bases;
    std::map<int, std::uint64_t> occurrence;  // every ray label, including zeros
    std::string ordering;                     // "canonical" | "translation-table"
    std::vector<std::vector<int>> matrix;     // translation-table rows, column order kept

    /// Independent re-check of every basis against the ray system (size,
    /// distinctness, pairwise orthogonality) and of the occurrence map.
    /// Throws std::logic_error on any violation.
    void verify(const RaySystem& rs) const;
};

enum class SeedOutcome { found, exhausted, proven_absent };

struct SeedResult {
    SeedOutcome outcome = SeedOutcome::proven_absent;
    std::optional<Basis> basis;
    std::uint64_t nodes = 0;
};

/// Backtracking search for one clique of size rs.basis_size() in the
/// orthogonality graph, branching on candidates by descending degree
/// within the candidate set (ties by label). Deterministic for a fixed
/// budget; absence within budget is reported, never thrown.
SeedResult find_seed_basis(const RaySystem& rs, std::uint64_t budget = kDefaultSearchBudget);

/// Binary systems only: replace each ray by the ray of (its codeword XOR
/// the codeword of t), preserving order, without sorting.
std::vector<int> translate_labels(const std::vector<int>& labels, int t_label,
                                  const RaySystem& rs);

/// Sorted-label variant of translate_labels.
Basis translate_basis(const Basis& b, int t_label, const RaySystem& rs);

/// One translated basis per ray label, in label order; the matrix field
/// keeps the seed's column order per row.
BasisSystem generate_translated_system(const Basis& seed, const RaySystem& rs);

/// All size-cliques of the orthogonality graph in lexicographic order of
/// sorted labels. Complete or throws BudgetExhaustedError; never partial.
BasisSystem enumerate_all_bases(const RaySystem& rs, int size,
                                std::uint64_t budget = kDefaultSearchBudget);

/// Sub-system of rays whose vectors have exactly w nonzero entries.
RaySystem filter_rays_by_weight(const RaySystem& rs, int w);

/// Sub-system of rays orthogonal to every anchor; effective dimension
/// drops by the anchor count. Anchors must be mutually orthogonal.
RaySystem restrict_system(const RaySystem& rs, const std::vector<int>& anchors);

}  // namespace golayks
