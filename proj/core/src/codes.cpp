#include "golayks/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace golayks {

namespace {

// Right half of the binary Golay generator (Conway's matrix), identity
// block split off at the left.
constexpr const char* kGolay24Right[12] = {
    "101000111011", "110100011101", "011010001111", "101101000111",
    "110110100011", "111011010001", "011101101001", "001110110101",
    "000111011011", "100011101101", "010001110111", "111111111110",
};

// Right half of the ternary Golay generator; 2 stands for -1.
constexpr Digit kGolay12Right[6][6] = {
    {0, 1, 1, 1, 1, 1}, {2, 0, 1, 2, 2, 1}, {2, 1, 0, 1, 2, 2},
    {2, 2, 1, 0, 1, 2}, {2, 2, 2, 1, 0, 1}, {2, 1, 2, 2, 1, 0},
};

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

DigitVec coeffs_at(std::uint64_t index, int k, int q) {
    DigitVec c(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = static_cast<Digit>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
    return c;
}

}  // namespace

std::uint64_t GeneratorMatrix::codeword_count() const {
    return ipow(static_cast<std::uint64_t>(field_order), dimension());
}

void GeneratorMatrix::validate() const {
    if (field_order != 2 && field_order != 3)
        throw std::invalid_argument("generator matrix: field order must be 2 or 3");
    if (rows.empty()) throw std::invalid_argument("generator matrix: no rows");
    const std::size_t n = rows.front().size();
    if (n == 0 || rows.size() > n)
        throw std::invalid_argument("generator matrix: need 1 <= k <= N");
    for (const auto& row : rows) {
        if (row.size() != n)
            throw std::invalid_argument("generator matrix: ragged rows");
        for (Digit d : row)
            if (d >= field_order)
                throw std::invalid_argument("generator matrix: digit out of range");
    }
    if (gf_rank(*this) != dimension())
        throw std::invalid_argument("generator matrix: rows are linearly dependent");
}

GeneratorMatrix golay_binary_generator() {
    GeneratorMatrix G;
    G.field_order = 2;
    G.name = "golay24";
    for (int i = 0; i < 12; ++i) {
        DigitVec row(24, 0);
        row[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < 12; ++j)
            row[static_cast<std::size_t>(12 + j)] = static_cast<Digit>(kGolay24Right[i][j] - '0');
        G.rows.push_back(std::move(row));
    }
    return G;
}

GeneratorMatrix golay_ternary_generator() {
    GeneratorMatrix G;
    G.field_order = 3;
    G.name = "golay12";
    for (int i = 0; i < 6; ++i) {
        DigitVec row(12, 0);
        row[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < 6; ++j) row[static_cast<std::size_t>(6 + j)] = kGolay12Right[i][j];
        G.rows.push_back(std::move(row));
    }
    return G;
}

GeneratorMatrix qr48_generator() {
    // Extended quadratic-residue code of length 48: rows are the cyclic
    // shifts s = 0..23 of the residue idempotent sum_{r in QR(47)} x^r,
    // each closed with an overall parity digit. The shift rows are
    // linearly independent (checked by validate below).
    constexpr int p = 47;
    bool residue[p] = {};
    for (int x = 1; x < p; ++x) residue[(x * x) % p] = true;
    std::uint64_t idem = 0;
    for (int r = 1; r < p; ++r)
        if (residue[r]) idem |= 1ull << r;

    GeneratorMatrix G;
    G.field_order = 2;
    G.name = "qr48";
    const std::uint64_t mask = (1ull << p) - 1;
    for (int s = 0; s < 24; ++s) {
        const std::uint64_t row = ((idem << s) | (idem >> (p - s))) & mask;
        DigitVec digits(48, 0);
        for (int j = 0; j < p; ++j) digits[static_cast<std::size_t>(j)] = (row >> j) & 1;
        digits[47] = static_cast<Digit>(std::popcount(row) & 1);
        G.rows.push_back(std::move(digits));
    }
    G.validate();
    return G;
}

GeneratorMatrix extended_hamming8_generator() {
    GeneratorMatrix G;
    G.field_order = 2;
    G.name = "hamming8";
    const Digit rows[4][8] = {
        {1, 0, 0, 0, 0, 1, 1, 1},
        {0, 1, 0, 0, 1, 0, 1, 1},
        {0, 0, 1, 0, 1, 1, 0, 1},
        {0, 0, 0, 1, 1, 1, 1, 0},
    };
    for (const auto& r : rows) G.rows.emplace_back(r, r + 8);
    return G;
}

GeneratorMatrix code_by_name(const std::string& name) {
    if (name == "golay24") return golay_binary_generator();
    if (name == "golay12") return golay_ternary_generator();
    if (name == "qr48") return qr48_generator();
    if (name == "hamming8") return extended_hamming8_generator();
    throw std::invalid_argument("unknown code name: " + name);
}

long label_of(const DigitVec& coeffs) {
    long value = 0;
    for (Digit d : coeffs) {
        if (d > 1) throw std::invalid_argument("label: non-binary coefficient");
        value = value * 2 + d;
    }
    return value + 1;
}

Codeword encode(const DigitVec& coeffs, const GeneratorMatrix& G) {
    if (static_cast<int>(coeffs.size()) != G.dimension())
        throw std::invalid_argument("encode: coefficient length != k");
    const int q = G.field_order;
    for (Digit d : coeffs)
        if (d >= q) throw std::invalid_argument("encode: coefficient digit out of range");

    Codeword c;
    c.coeffs = coeffs;
    c.digits.assign(static_cast<std::size_t>(G.length()), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const auto& row = G.rows[i];
        for (std::size_t j = 0; j < row.size(); ++j)
            c.digits[j] = static_cast<Digit>((c.digits[j] + coeffs[i] * row[j]) % q);
    }
    if (q == 2) c.label = label_of(coeffs);
    return c;
}

int hamming_distance(const Codeword& a, const Codeword& b) {
    if (a.digits.size() != b.digits.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.digits.size(); ++i) d += a.digits[i] != b.digits[i];
    return d;
}

int weight(const Codeword& c) {
    int w = 0;
    for (Digit d : c.digits) w += d != 0;
    return w;
}

std::vector<Codeword> enumerate_codewords(const GeneratorMatrix& G, std::uint64_t limit) {
    const std::uint64_t total = G.codeword_count();
    if (total > limit)
        throw EnumerationLimitError("enumerate_codewords: " + std::to_string(total) +
                                    " codewords exceed limit " + std::to_string(limit));
    std::vector<Codeword> out;
    out.reserve(total);
    for_each_codeword(G, [&](const Codeword& c) { out.push_back(c); }, total);
    return out;
}

void for_each_codeword(const GeneratorMatrix& G,
                       const std::function<void(const Codeword&)>& visit,
                       std::uint64_t limit) {
    const std::uint64_t total = G.codeword_count();
    if (total > limit)
        throw EnumerationLimitError("for_each_codeword: " + std::to_string(total) +
                                    " codewords exceed limit " + std::to_string(limit));
    const int k = G.dimension();
    const int q = G.field_order;
    const int n = G.length();

    if (q == 2 && n <= 64) {
        std::vector<std::uint64_t> packed;
        packed.reserve(G.rows.size());
        for (const auto& row : G.rows) packed.push_back(pack_bits(row));
        Codeword c;
        c.digits.assign(static_cast<std::size_t>(n), 0);
        for (std::uint64_t a = 0; a < total; ++a) {
            std::uint64_t bits = 0;
            for (int i = 0; i < k; ++i)
                if ((a >> (k - 1 - i)) & 1) bits ^= packed[static_cast<std::size_t>(i)];
            c.coeffs = coeffs_at(a, k, 2);
            for (int j = 0; j < n; ++j)
                c.digits[static_cast<std::size_t>(j)] = (bits >> j) & 1;
            c.label = static_cast<long>(a) + 1;
            visit(c);
        }
        return;
    }

    for (std::uint64_t a = 0; a < total; ++a) visit(encode(coeffs_at(a, k, q), G));
}

std::map<int, std::uint64_t> weight_distribution(const GeneratorMatrix& G, std::uint64_t limit) {
    const std::uint64_t total = G.codeword_count();
    if (total > limit)
        throw EnumerationLimitError("weight_distribution: " + std::to_string(total) +
                                    " codewords exceed limit " + std::to_string(limit));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(G.length()) + 1, 0);

    if (G.field_order == 2 && G.length() <= 64) {
        // Gray-code walk: one row XOR per codeword.
        std::vector<std::uint64_t> packed;
        for (const auto& row : G.rows) packed.push_back(pack_bits(row));
        std::uint64_t cur = 0;
        counts[0] = 1;
        for (std::uint64_t i = 1; i < total; ++i) {
            cur ^= packed[static_cast<std::size_t>(std::countr_zero(i))];
            ++counts[static_cast<std::size_t>(std::popcount(cur))];
        }
    } else {
        for_each_codeword(G, [&](const Codeword& c) { ++counts[static_cast<std::size_t>(weight(c))]; },
                          limit);
    }

    std::map<int, std::uint64_t> dist;
    for (std::size_t w = 0; w < counts.size(); ++w)
        if (counts[w]) dist[static_cast<int>(w)] = counts[w];
    return dist;
}

int min_distance(const GeneratorMatrix& G, std::uint64_t limit) {
    const auto dist = weight_distribution(G, limit);
    for (const auto& [w, n] : dist)
        if (w > 0) return w;
    throw std::logic_error("min_distance: trivial code");
}

CodeSpec code_spec(const GeneratorMatrix& G, std::uint64_t limit) {
    return CodeSpec{G.length(), G.dimension(), min_distance(G, limit), G.field_order};
}

GeneratorMatrix puncture(const GeneratorMatrix& G, int position) {
    if (position < 0 || position >= G.length())
        throw std::invalid_argument("puncture: column index out of range");
    GeneratorMatrix P;
    P.field_order = G.field_order;
    P.name = G.name + ":punctured" + std::to_string(position);
    for (const auto& row : G.rows) {
        DigitVec r = row;
        r.erase(r.begin() + position);
        P.rows.push_back(std::move(r));
    }
    P.validate();
    return P;
}

int gf_rank(const GeneratorMatrix& G) {
    const int q = G.field_order;
    std::vector<std::vector<int>> m;
    m.reserve(G.rows.size());
    for (const auto& row : G.rows) m.emplace_back(row.begin(), row.end());
    const int nrows = static_cast<int>(m.size());
    const int ncols = m.empty() ? 0 : static_cast<int>(m.front().size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(piv)]);
        // Normalize pivot to 1 (q is prime, inverse by scan).
        const int pv = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        int inv = 1;
        while ((pv * inv) % q != 1) ++inv;
        for (auto& x : m[static_cast<std::size_t>(rank)]) x = (x * inv) % q;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            const int f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int cc = 0; cc < ncols; ++cc) {
                auto& x = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)];
                x = ((x - f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)]) % q + q) % q;
            }
        }
        ++rank;
    }
    return rank;
}

std::uint64_t pack_bits(const DigitVec& digits) {
    if (digits.size() > 64) throw std::invalid_argument("pack_bits: length > 64");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (digits[i]) bits |= 1ull << i;
    return bits;
}

}  // namespace golayks
