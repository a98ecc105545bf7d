#include "golayks/bases.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace golayks {

namespace {

int popcount_words(const std::uint64_t* w, std::size_t n) {
    int c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(w[i]);
    return c;
}

int intersection_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    int c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

void require_valid_basis(const std::vector<int>& labels, const RaySystem& rs,
                         const char* who) {
    if (static_cast<int>(labels.size()) != rs.basis_size())
        throw std::invalid_argument(std::string(who) + ": wrong basis cardinality");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j])
                throw std::invalid_argument(std::string(who) + ": repeated ray label");
            if (!rs.orthogonal(labels[i], labels[j]))
                throw std::invalid_argument(std::string(who) + ": rays " +
                                            std::to_string(labels[i]) + "," +
                                            std::to_string(labels[j]) + " not orthogonal");
        }
    }
}

}  // namespace

void BasisSystem::verify(const RaySystem& rs) const {
    if (ray_total != rs.size()) throw std::logic_error("BasisSystem: ray_total mismatch");
    if (basis_size != rs.basis_size())
        throw std::logic_error("BasisSystem: basis_size mismatch");
    std::map<int, std::uint64_t> recount;
    for (const Ray& r : rs.rays()) recount[r.label] = 0;
    for (const Basis& b : bases) {
        if (static_cast<int>(b.ray_labels.size()) != basis_size)
            throw std::logic_error("BasisSystem: basis of wrong cardinality");
        if (!std::is_sorted(b.ray_labels.begin(), b.ray_labels.end()))
            throw std::logic_error("BasisSystem: basis labels not sorted");
        for (std::size_t i = 0; i < b.ray_labels.size(); ++i) {
            ++recount.at(b.ray_labels[i]);
            for (std::size_t j = i + 1; j < b.ray_labels.size(); ++j) {
                if (b.ray_labels[i] == b.ray_labels[j])
                    throw std::logic_error("BasisSystem: repeated label in basis");
                if (!rs.orthogonal(b.ray_labels[i], b.ray_labels[j]))
                    throw std::logic_error("BasisSystem: non-orthogonal pair in basis");
            }
        }
    }
    if (recount != occurrence) throw std::logic_error("BasisSystem: occurrence map mismatch");
    std::uint64_t sum = 0;
    for (const auto& [label, n] : occurrence) sum += n;
    if (sum != bases.size() * static_cast<std::uint64_t>(basis_size))
        throw std::logic_error("BasisSystem: double-count identity violated");
}

SeedResult find_seed_basis(const RaySystem& rs, std::uint64_t budget) {
    SeedResult result;
    const int target = rs.basis_size();
    const std::size_t m = rs.size();
    if (target <= 0) {
        result.outcome = SeedOutcome::found;
        result.basis = Basis{};
        return result;
    }
    if (m == 0) return result;  // proven_absent

    // Branch order: descending degree, ties by ascending label.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rs.degree(rs.label_at(a)) > rs.degree(rs.label_at(b));
    });
    std::vector<std::size_t> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[order[i]] = i;

    const std::size_t words = (m + 63) / 64;
    std::vector<std::uint64_t> adj(m * words, 0);
    for (std::size_t i = 0; i < m; ++i) {
        auto row = rs.adjacency_row(i);
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                adj[pos[i] * words + pos[j] / 64] |= 1ull << (pos[j] % 64);
            }
        }
    }

    std::vector<std::size_t> chosen;
    std::vector<std::uint64_t> buf((static_cast<std::size_t>(target) + 1) * words, 0);
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    // Returns true once a clique of the target size is completed.
    auto rec = [&](auto&& self, int depth, std::uint64_t* cand) -> bool {
        if (depth == target) return true;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        std::vector<std::size_t> verts;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                verts.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        if (depth + static_cast<int>(verts.size()) < target) return false;
        // Greedy: try the candidate keeping the largest candidate set first.
        std::vector<int> score(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            score[i] = intersection_count(cand, &adj[verts[i] * words], words);
        std::vector<std::size_t> idx(verts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
        std::uint64_t* next = cand + words;  // per-depth scratch row in buf
        for (std::size_t pick : idx) {
            const std::size_t v = verts[pick];
            if (depth + 1 + score[pick] < target) continue;
            for (std::size_t w = 0; w < words; ++w) next[w] = cand[w] & adj[v * words + w];
            chosen.push_back(v);
            if (self(self, depth + 1, next)) return true;
            chosen.pop_back();
            if (out_of_budget) return false;
            cand[v / 64] &= ~(1ull << (v % 64));  // v exhausted in this subtree
        }
        return false;
    };

    std::uint64_t* root = buf.data();
    for (std::size_t i = 0; i < m; ++i) root[i / 64] |= 1ull << (i % 64);
    const bool found = rec(rec, 0, root);
    result.nodes = nodes;
    if (found) {
        Basis b;
        for (std::size_t v : chosen) b.ray_labels.push_back(rs.label_at(order[v]));
        std::sort(b.ray_labels.begin(), b.ray_labels.end());
        result.basis = std::move(b);
        result.outcome = SeedOutcome::found;
    } else {
        result.outcome = out_of_budget ? SeedOutcome::exhausted : SeedOutcome::proven_absent;
    }
    return result;
}

std::vector<int> translate_labels(const std::vector<int>& labels, int t_label,
                                  const RaySystem& rs) {
    const std::uint64_t t_bits = rs.source_bits(t_label);
    std::vector<int> out;
    out.reserve(labels.size());
    for (int l : labels) out.push_back(rs.label_of_bits(rs.source_bits(l) ^ t_bits));
    return out;
}

Basis translate_basis(const Basis& b, int t_label, const RaySystem& rs) {
    Basis out{translate_labels(b.ray_labels, t_label, rs)};
    std::sort(out.ray_labels.begin(), out.ray_labels.end());
    return out;
}

BasisSystem generate_translated_system(const Basis& seed, const RaySystem& rs) {
    require_valid_basis(seed.ray_labels, rs, "generate_translated_system");
    BasisSystem bs;
    bs.system_id = rs.id() + ":translated";
    bs.basis_size = rs.basis_size();
    bs.ray_total = rs.size();
    bs.ordering = "translation-table";
    for (const Ray& r : rs.rays()) bs.occurrence[r.label] = 0;
    bs.bases.reserve(rs.size());
    bs.matrix.reserve(rs.size());
    for (const Ray& r : rs.rays()) {
        std::vector<int> row = translate_labels(seed.ray_labels, r.label, rs);
        Basis b{row};
        std::sort(b.ray_labels.begin(), b.ray_labels.end());
        for (int l : b.ray_labels) ++bs.occurrence[l];
        bs.bases.push_back(std::move(b));
        bs.matrix.push_back(std::move(row));
    }
    return bs;
}

BasisSystem enumerate_all_bases(const RaySystem& rs, int size, std::uint64_t budget) {
    if (size <= 0) throw std::invalid_argument("enumerate_all_bases: size must be positive");
    BasisSystem bs;
    bs.system_id = rs.id();
    bs.basis_size = size;
    bs.ray_total = rs.size();
    bs.ordering = "canonical";
    for (const Ray& r : rs.rays()) bs.occurrence[r.label] = 0;

    const std::size_t m = rs.size();
    const std::size_t words = rs.words_per_row();
    std::vector<std::uint64_t> buf((static_cast<std::size_t>(size) + 1) * std::max<std::size_t>(words, 1), 0);
    std::vector<std::size_t> chosen;
    std::uint64_t nodes = 0;

    // Rays are index-sorted by label, so ascending-index emission is
    // lexicographic in sorted label lists.
    auto rec = [&](auto&& self, int depth, std::uint64_t* cand) -> void {
        if (depth == size) {
            Basis b;
            b.ray_labels.reserve(chosen.size());
            for (std::size_t v : chosen) b.ray_labels.push_back(rs.label_at(v));
            for (int l : b.ray_labels) ++bs.occurrence[l];
            bs.bases.push_back(std::move(b));
            return;
        }
        if (++nodes > budget)
            throw BudgetExhaustedError("enumerate_all_bases: node budget " +
                                       std::to_string(budget) + " exhausted");
        if (depth + popcount_words(cand, words) < size) return;
        std::uint64_t* next = cand + words;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                auto row = rs.adjacency_row(v);
                // Candidates stay above v to emit each clique once.
                for (std::size_t u = 0; u < words; ++u) next[u] = cand[u] & row[u];
                next[w] &= ~((v % 64 == 63) ? ~0ull : ((1ull << (v % 64 + 1)) - 1));
                for (std::size_t u = 0; u < w; ++u) next[u] = 0;
                chosen.push_back(v);
                self(self, depth + 1, next);
                chosen.pop_back();
            }
        }
    };

    if (m > 0) {
        std::uint64_t* root = buf.data();
        for (std::size_t i = 0; i < m; ++i) root[i / 64] |= 1ull << (i % 64);
        rec(rec, 0, root);
    }
    return bs;
}

RaySystem filter_rays_by_weight(const RaySystem& rs, int w) {
    std::vector<Ray> kept;
    for (const Ray& r : rs.rays())
        if (r.nonzero_count() == w) kept.push_back(r);
    return RaySystem(rs.id() + ":w" + std::to_string(w), rs.basis_size(), std::move(kept));
}

RaySystem restrict_system(const RaySystem& rs, const std::vector<int>& anchors) {
    if (anchors.empty()) return RaySystem(rs.id(), rs.basis_size(), rs.rays());
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        rs.index_of(anchors[i]);  // throws on unknown label
        for (std::size_t j = i + 1; j < anchors.size(); ++j) {
            if (anchors[i] == anchors[j])
                throw std::invalid_argument("restrict_system: repeated anchor");
            if (!rs.orthogonal(anchors[i], anchors[j]))
                throw std::invalid_argument("restrict_system: anchors not mutually orthogonal");
        }
    }
    std::vector<Ray> kept;
    for (const Ray& r : rs.rays()) {
        bool ok = true;
        for (int a : anchors)
            if (a == r.label || !rs.orthogonal(a, r.label)) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(r);
    }
    std::string id = rs.id() + ":restrict";
    for (int a : anchors) id += "-" + std::to_string(a);
    return RaySystem(id, rs.basis_size() - static_cast<int>(anchors.size()), std::move(kept));
}

}  // namespace golayks
