#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "golayks/errors.hpp"

namespace golayks {

using Digit = std::uint8_t;
using DigitVec = std::vector<Digit>;

/// Default cap on streamed codeword scans (weight/distance computations).
inline constexpr std::uint64_t kDefaultScanLimit = 1ull << 26;

/// Default cap on materialized codeword lists.
inline constexpr std::uint64_t kDefaultMaterializeLimit = 1ull << 20;

/// k x N generator matrix over GF(2) or GF(3). Rows must be linearly
/// independent; digits are stored as {0,...,q-1} (GF(3) digit 2 means -1).
struct GeneratorMatrix {
    int field_order = 2;
    std::vector<DigitVec> rows;
    std::string name;

    int length() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    int dimension() const { return static_cast<int>(rows.size()); }
    std::uint64_t codeword_count() const;

    /// Throws std::invalid_argument on shape, digit-range or rank violations.
    void validate() const;
};

struct Codeword {
    DigitVec digits;
    DigitVec coeffs;
    /// Eq.-(2)-style label (coefficient bits read as a big-endian integer,
    /// plus one). Zero when the code is not binary.
    long label = 0;
};

struct CodeSpec {
    int length = 0;
    int dimension = 0;
    int min_distance = 0;
    int field_order = 0;
};

GeneratorMatrix golay_binary_generator();
GeneratorMatrix golay_ternary_generator();
GeneratorMatrix qr48_generator();
GeneratorMatrix extended_hamming8_generator();

/// Built-in code lookup: "golay24", "golay12", "qr48", "hamming8".
/// Throws std::invalid_argument for unknown names.
GeneratorMatrix code_by_name(const std::string& name);

/// Label of a binary coefficient vector: one more than its value as a
/// big-endian binary integer. Throws on non-binary digits.
long label_of(const DigitVec& coeffs);

Codeword encode(const DigitVec& coeffs, const GeneratorMatrix& G);

int hamming_distance(const Codeword& a, const Codeword& b);
int weight(const Codeword& c);

/// All q^k codewords in ascending coefficient order (binary: ascending
/// label). Throws EnumerationLimitError when q^k > limit.
std::vector<Codeword> enumerate_codewords(const GeneratorMatrix& G,
                                          std::uint64_t limit = kDefaultMaterializeLimit);

/// Streamed visit of all q^k codewords in ascending coefficient order.
/// Binary codes with N <= 64 use a packed fast path.
void for_each_codeword(const GeneratorMatrix& G,
                       const std::function<void(const Codeword&)>& visit,
                       std::uint64_t limit = kDefaultScanLimit);

std::map<int, std::uint64_t> weight_distribution(const GeneratorMatrix& G,
                                                 std::uint64_t limit = kDefaultScanLimit);

int min_distance(const GeneratorMatrix& G, std::uint64_t limit = kDefaultScanLimit);

CodeSpec code_spec(const GeneratorMatrix& G, std::uint64_t limit = kDefaultScanLimit);

/// Generator with one column deleted; rank is re-verified.
GeneratorMatrix puncture(const GeneratorMatrix& G, int position);

/// Rank over GF(field_order) by row reduction.
int gf_rank(const GeneratorMatrix& G);

/// Pack a binary digit vector (length <= 64) into bits, digit i -> bit i.
std::uint64_t pack_bits(const DigitVec& digits);

}  // namespace golayks
