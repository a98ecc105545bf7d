#include "golayks/rays.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace golayks {

int Ray::nonzero_count() const {
    int w = 0;
    for (auto e : entries) w += e != 0;
    return w;
}

long long inner_product(const Ray& a, const Ray& b) {
    if (a.entries.size() != b.entries.size())
        throw std::invalid_argument("inner_product: dimension mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        s += static_cast<long long>(a.entries[i]) * b.entries[i];
    return s;
}

Ray binary_codeword_to_ray(const Codeword& c, const std::string& source_code) {
    Ray r;
    r.source_code = source_code;
    r.entries.reserve(c.digits.size());
    for (Digit d : c.digits) {
        if (d > 1) throw std::invalid_argument("binary_codeword_to_ray: non-binary digit");
        r.entries.push_back(d == 0 ? 1 : -1);
    }
    const bool flip = !r.entries.empty() && r.entries.front() < 0;
    if (flip)
        for (auto& e : r.entries) e = static_cast<std::int8_t>(-e);
    if (c.label > 0) {
        const long total = 1l << c.coeffs.size();
        r.label = static_cast<int>(std::min(c.label, total + 1 - c.label));
    }
    return r;
}

Ray ternary_codeword_to_ray(const Codeword& c, const std::string& source_code) {
    Ray r;
    r.source_code = source_code;
    r.entries.reserve(c.digits.size());
    for (Digit d : c.digits) {
        if (d > 2) throw std::invalid_argument("ternary_codeword_to_ray: digit out of range");
        r.entries.push_back(d == 0 ? 0 : (d == 1 ? 1 : -1));
    }
    auto first_nonzero = std::find_if(r.entries.begin(), r.entries.end(),
                                      [](std::int8_t e) { return e != 0; });
    if (first_nonzero == r.entries.end())
        throw std::invalid_argument("ternary_codeword_to_ray: zero codeword has no ray");
    if (*first_nonzero < 0)
        for (auto& e : r.entries) e = static_cast<std::int8_t>(-e);
    return r;
}

RaySystem::RaySystem(std::string id, int basis_size, std::vector<Ray> rays)
    : id_(std::move(id)), basis_size_(basis_size), rays_(std::move(rays)) {
    // Empty systems are legal (e.g. restriction by a full basis).
    std::sort(rays_.begin(), rays_.end(),
              [](const Ray& a, const Ray& b) { return a.label < b.label; });
    dim_ = rays_.empty() ? 0 : rays_.front().dimension();
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const Ray& r = rays_[i];
        if (r.dimension() != dim_)
            throw std::invalid_argument("RaySystem: mixed ray dimensions");
        if (!label_to_index_.emplace(r.label, i).second)
            throw std::invalid_argument("RaySystem: duplicate ray label " +
                                        std::to_string(r.label));
    }

    const std::size_t n = rays_.size();
    words_ = (n + 63) / 64;
    adjacency_.assign(n * words_, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (inner_product(rays_[i], rays_[j]) == 0) {
                adjacency_[i * words_ + j / 64] |= 1ull << (j % 64);
                adjacency_[j * words_ + i / 64] |= 1ull << (i % 64);
            }

    // Codeword index for binary systems (no zero entries, dim <= 64):
    // both complement bit patterns map back to the ray label.
    const bool binary = dim_ > 0 && dim_ <= 64 &&
                        std::all_of(rays_.begin(), rays_.end(), [&](const Ray& r) {
                            return r.nonzero_count() == dim_;
                        });
    if (binary && n > 0) {
        source_bits_.resize(n);
        const std::uint64_t full = dim_ == 64 ? ~0ull : (1ull << dim_) - 1;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t bits = 0;
            for (int j = 0; j < dim_; ++j)
                if (rays_[i].entries[static_cast<std::size_t>(j)] < 0) bits |= 1ull << j;
            source_bits_[i] = bits;
            bits_to_label_[bits] = rays_[i].label;
            bits_to_label_[bits ^ full] = rays_[i].label;
        }
    }
}

const Ray& RaySystem::by_label(int label) const { return rays_[index_of(label)]; }

std::size_t RaySystem::index_of(int label) const {
    auto it = label_to_index_.find(label);
    if (it == label_to_index_.end())
        throw std::invalid_argument("RaySystem: unknown ray label " + std::to_string(label));
    return it->second;
}

bool RaySystem::orthogonal(int label_a, int label_b) const {
    const std::size_t i = index_of(label_a), j = index_of(label_b);
    return (adjacency_[i * words_ + j / 64] >> (j % 64)) & 1;
}

int RaySystem::degree(int label) const {
    const std::size_t i = index_of(label);
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w)
        d += std::popcount(adjacency_[i * words_ + w]);
    return d;
}

std::uint64_t RaySystem::orthogonal_pair_count() const {
    std::uint64_t twice = 0;
    for (std::uint64_t w : adjacency_) twice += static_cast<std::uint64_t>(std::popcount(w));
    return twice / 2;
}

std::map<int, std::size_t> RaySystem::degree_histogram() const {
    std::map<int, std::size_t> hist;
    for (const Ray& r : rays_) ++hist[degree(r.label)];
    return hist;
}

std::span<const std::uint64_t> RaySystem::adjacency_row(std::size_t index) const {
    return {adjacency_.data() + index * words_, words_};
}

std::uint64_t RaySystem::source_bits(int label) const {
    if (source_bits_.empty())
        throw std::logic_error("RaySystem: no codeword index (not a binary +/-1 system)");
    return source_bits_[index_of(label)];
}

int RaySystem::label_of_bits(std::uint64_t bits) const {
    auto it = bits_to_label_.find(bits);
    if (it == bits_to_label_.end())
        throw std::invalid_argument("RaySystem: codeword bits match no ray");
    return it->second;
}

RaySystem build_ray_system(const GeneratorMatrix& G, std::uint64_t limit) {
    const std::uint64_t total = G.codeword_count();
    if (total > limit)
        throw EnumerationLimitError("build_ray_system: " + std::to_string(total) +
                                    " codewords exceed limit " + std::to_string(limit));
    std::vector<Ray> rays;
    if (G.field_order == 2) {
        // One ray per complement pair: keep the representative whose first
        // coefficient digit is 0 (label <= q^k / 2).
        const long half = static_cast<long>(total / 2);
        for_each_codeword(G, [&](const Codeword& c) {
            if (c.label > half) return;
            Ray r = binary_codeword_to_ray(c, G.name);
            rays.push_back(std::move(r));
        }, limit);
    } else {
        // One ray per +/- pair, labeled 1.. in ascending coefficient order
        // of first occurrence; the zero codeword is dropped.
        std::map<std::vector<std::int8_t>, int> seen;
        int next = 1;
        for_each_codeword(G, [&](const Codeword& c) {
            if (weight(c) == 0) return;
            Ray r = ternary_codeword_to_ray(c, G.name);
            auto [it, inserted] = seen.emplace(r.entries, next);
            if (!inserted) return;
            r.label = next++;
            rays.push_back(std::move(r));
        }, limit);
    }
    return RaySystem(G.name, G.length(), std::move(rays));
}

}  // namespace golayks
