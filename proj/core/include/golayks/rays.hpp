#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "golayks/codes.hpp"

namespace golayks {

/// Canonical projective ray: integer vector over {-1,0,+1} with the first
/// nonzero entry fixed to +1.
struct Ray {
    std::vector<std::int8_t> entries;
    int label = 0;
    std::string source_code;

    int dimension() const { return static_cast<int>(entries.size()); }
    int nonzero_count() const;
};

long long inner_product(const Ray& a, const Ray& b);

/// Ray from a binary codeword: 0 -> +1, 1 -> -1, canonicalized to first
/// entry +1. The label is min(n, q^k+1-n) over the complement pair.
Ray binary_codeword_to_ray(const Codeword& c, const std::string& source_code = {});

/// Ray from a nonzero ternary codeword: {0,1,2} -> {0,+1,-1}, negated if
/// needed so the first nonzero entry is +1. Rejects the zero codeword.
Ray ternary_codeword_to_ray(const Codeword& c, const std::string& source_code = {});

/// Immutable set of labeled rays with a precomputed orthogonality relation.
/// Adjacency is kept as per-ray bitsets over ray indices.
class RaySystem {
  public:
    /// Rays must carry distinct labels; adjacency is computed from exact
    /// integer inner products. basis_size is the clique size that counts
    /// as a basis (ambient dimension, minus anchors for restrictions).
    RaySystem(std::string id, int basis_size, std::vector<Ray> rays);

    const std::string& id() const { return id_; }
    std::size_t size() const { return rays_.size(); }
    int dimension() const { return dim_; }
    int basis_size() const { return basis_size_; }

    const std::vector<Ray>& rays() const { return rays_; }
    bool has_label(int label) const { return label_to_index_.count(label) != 0; }
    const Ray& by_label(int label) const;
    int label_at(std::size_t index) const { return rays_[index].label; }
    std::size_t index_of(int label) const;

    bool orthogonal(int label_a, int label_b) const;
    int degree(int label) const;
    std::uint64_t orthogonal_pair_count() const;
    std::map<int, std::size_t> degree_histogram() const;

    /// Adjacency row of the ray at the given index, as a bitset over indices.
    std::span<const std::uint64_t> adjacency_row(std::size_t index) const;
    std::size_t words_per_row() const { return words_; }

    /// Binary systems only: source codeword bits of a ray / ray label of
    /// codeword bits (either complement member). Throws when unavailable.
    std::uint64_t source_bits(int label) const;
    int label_of_bits(std::uint64_t bits) const;
    bool has_codeword_index() const { return !bits_to_label_.empty(); }

  private:
    std::string id_;
    int dim_ = 0;
    int basis_size_ = 0;
    std::size_t words_ = 0;
    std::vector<Ray> rays_;  // sorted by label
    std::unordered_map<int, std::size_t> label_to_index_;
    std::vector<std::uint64_t> adjacency_;  // rays_.size() * words_
    std::unordered_map<std::uint64_t, int> bits_to_label_;
    std::vector<std::uint64_t> source_bits_;  // per ray, binary systems
};

/// Deduplicated canonical ray system of a code (binary: one ray per
/// complement pair; ternary: one per +/- pair, zero word dropped).
RaySystem build_ray_system(const GeneratorMatrix& G,
                           std::uint64_t limit = kDefaultMaterializeLimit);

}  // namespace golayks
