#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "golayks/bases.hpp"
#include "golayks/codes.hpp"
#include "golayks/errors.hpp"
#include "golayks/rays.hpp"

using namespace golayks;

namespace {

const RaySystem& binary_system() {
    static const RaySystem rs = build_ray_system(golay_binary_generator());
    return rs;
}

const RaySystem& ternary_system() {
    static const RaySystem rs = build_ray_system(golay_ternary_generator());
    return rs;
}

}  // namespace

TEST_CASE("the reference seed basis is a valid basis") {
    const RaySystem& rs = binary_system();
    REQUIRE(fixtures::kSeedBasis.size() == 24);
    for (std::size_t i = 0; i < fixtures::kSeedBasis.size(); ++i)
        for (std::size_t j = i + 1; j < fixtures::kSeedBasis.size(); ++j)
            CHECK(rs.orthogonal(fixtures::kSeedBasis[i], fixtures::kSeedBasis[j]));
}

TEST_CASE("find_seed_basis finds a 24-clique in the binary system") {
    const SeedResult res = find_seed_basis(binary_system());
    REQUIRE(res.outcome == SeedOutcome::found);
    REQUIRE(res.basis.has_value());
    const auto& labels = res.basis->ray_labels;
    CHECK(labels.size() == 24);
    CHECK(std::is_sorted(labels.begin(), labels.end()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            CHECK(binary_system().orthogonal(labels[i], labels[j]));
}

TEST_CASE("find_seed_basis respects its node budget") {
    const SeedResult res = find_seed_basis(binary_system(), 3);
    CHECK(res.outcome == SeedOutcome::exhausted);
    CHECK(!res.basis.has_value());
    CHECK(res.nodes >= 3);
}

TEST_CASE("find_seed_basis proves absence on the punctured binary system") {
    const RaySystem rs = build_ray_system(puncture(golay_binary_generator(), 23));
    const SeedResult res = find_seed_basis(rs);
    CHECK(res.outcome == SeedOutcome::proven_absent);
}

TEST_CASE("translation") {
    const RaySystem& rs = binary_system();

    SUBCASE("translating by ray 1 (zero codeword) is the identity") {
        CHECK(translate_labels(fixtures::kSeedBasis, 1, rs) == fixtures::kSeedBasis);
    }
    SUBCASE("reference rows for t = 2, 3, 2048") {
        CHECK(translate_labels(fixtures::kSeedBasis, 2, rs) == fixtures::kSeedTranslatedBy2);
        CHECK(translate_labels(fixtures::kSeedBasis, 3, rs) == fixtures::kSeedTranslatedBy3);
        CHECK(translate_labels(fixtures::kSeedBasis, 2048, rs) ==
              fixtures::kSeedTranslatedBy2048);
    }
    SUBCASE("translating twice by the same ray is the identity") {
        for (int t : {2, 3, 500, 2048}) {
            const auto once = translate_labels(fixtures::kSeedBasis, t, rs);
            CHECK(translate_labels(once, t, rs) == fixtures::kSeedBasis);
        }
    }
    SUBCASE("translate_basis sorts its result") {
        Basis seed{fixtures::kSeedBasis};
        const Basis tb = translate_basis(seed, 2048, rs);
        CHECK(std::is_sorted(tb.ray_labels.begin(), tb.ray_labels.end()));
        auto sorted = fixtures::kSeedTranslatedBy2048;
        std::sort(sorted.begin(), sorted.end());
        CHECK(tb.ray_labels == sorted);
    }
}

TEST_CASE("translated basis system") {
    const RaySystem& rs = binary_system();
    const BasisSystem bs = generate_translated_system(Basis{fixtures::kSeedBasis}, rs);

    CHECK(bs.bases.size() == 2048);
    CHECK(bs.basis_size == 24);
    CHECK(bs.ordering == "translation-table");
    REQUIRE(bs.matrix.size() == 2048);
    CHECK(bs.matrix[0] == fixtures::kSeedBasis);
    CHECK(bs.matrix[1] == fixtures::kSeedTranslatedBy2);
    CHECK(bs.matrix[2] == fixtures::kSeedTranslatedBy3);
    CHECK(bs.matrix[2047] == fixtures::kSeedTranslatedBy2048);
    CHECK_NOTHROW(bs.verify(rs));

    SUBCASE("every ray occurs in exactly 24 bases") {
        REQUIRE(bs.occurrence.size() == 2048);
        for (const auto& [label, n] : bs.occurrence) CHECK(n == 24);
    }
    SUBCASE("each matrix column is a permutation of all 2048 labels") {
        for (int col : {0, 5, 23}) {
            std::set<int> seen;
            for (const auto& row : bs.matrix) seen.insert(row[static_cast<std::size_t>(col)]);
            CHECK(seen.size() == 2048);
        }
    }
    SUBCASE("verify rejects a tampered basis") {
        BasisSystem bad = bs;
        bad.bases[7].ray_labels[0] = bad.bases[7].ray_labels[1];
        CHECK_THROWS_AS(bad.verify(rs), std::logic_error);

        BasisSystem wrong_occ = bs;
        wrong_occ.occurrence[1] = 23;
        CHECK_THROWS_AS(wrong_occ.verify(rs), std::logic_error);
    }
}

TEST_CASE("full ternary enumeration") {
    const RaySystem& rs = ternary_system();
    const BasisSystem bs = enumerate_all_bases(rs, 12);
    CHECK(bs.bases.size() == 140647);
    CHECK(bs.ordering == "canonical");
    CHECK_NOTHROW(bs.verify(rs));

    // Occurrence spectrum: 220 rays in 27 bases, 132 in 9496, 12 in 35696.
    std::map<std::uint64_t, int> spectrum;
    for (const auto& [label, n] : bs.occurrence) ++spectrum[n];
    REQUIRE(spectrum.size() == 3);
    CHECK(spectrum.at(27) == 220);
    CHECK(spectrum.at(9496) == 132);
    CHECK(spectrum.at(35696) == 12);

    SUBCASE("bases come out in lexicographic order, no duplicates") {
        for (std::size_t i = 1; i < bs.bases.size(); ++i)
            CHECK(bs.bases[i - 1].ray_labels < bs.bases[i].ray_labels);
    }
    SUBCASE("occurrence spectrum matches ray weight classes") {
        for (const auto& [label, n] : bs.occurrence) {
            const int w = rs.by_label(label).nonzero_count();
            const std::uint64_t expect = w == 6 ? 9496 : w == 9 ? 27 : 35696;
            CHECK(n == expect);
        }
    }
}

TEST_CASE("enumeration throws when the budget runs out") {
    CHECK_THROWS_AS(enumerate_all_bases(ternary_system(), 12, 100), BudgetExhaustedError);
}

TEST_CASE("weight filtering") {
    const RaySystem& rs = ternary_system();
    CHECK(filter_rays_by_weight(rs, 6).size() == 132);
    CHECK(filter_rays_by_weight(rs, 9).size() == 220);
    CHECK(filter_rays_by_weight(rs, 12).size() == 12);
    CHECK(filter_rays_by_weight(rs, 7).size() == 0);

    const RaySystem w9 = filter_rays_by_weight(rs, 9);
    CHECK(w9.basis_size() == 12);
    const BasisSystem bs = enumerate_all_bases(w9, 12);
    CHECK(bs.bases.size() == 495);
    for (const auto& [label, n] : bs.occurrence) CHECK(n == 27);
    CHECK_NOTHROW(bs.verify(w9));
}

TEST_CASE("punctured ternary system has no 11-bases") {
    const RaySystem rs = build_ray_system(puncture(golay_ternary_generator(), 11));
    const BasisSystem bs = enumerate_all_bases(rs, rs.basis_size());
    CHECK(bs.bases.empty());
    for (const auto& [label, n] : bs.occurrence) CHECK(n == 0);
}

TEST_CASE("restriction") {
    const RaySystem& rs = binary_system();
    const std::vector<int> anchors(fixtures::kSeedBasis.begin(),
                                   fixtures::kSeedBasis.begin() + 4);
    const RaySystem sub = restrict_system(rs, anchors);
    CHECK(sub.size() == 280);
    CHECK(sub.basis_size() == 20);

    const BasisSystem bs = enumerate_all_bases(sub, 20);
    CHECK(bs.bases.size() == 72);
    CHECK_NOTHROW(bs.verify(sub));

    SUBCASE("anchor order does not change the result") {
        std::vector<int> shuffled{anchors[2], anchors[0], anchors[3], anchors[1]};
        const RaySystem sub2 = restrict_system(rs, shuffled);
        CHECK(sub2.size() == sub.size());
        CHECK(enumerate_all_bases(sub2, 20).bases.size() == 72);
    }
    SUBCASE("non-orthogonal anchors are rejected") {
        int other = 0;
        for (int l = 2; l <= 2048; ++l)
            if (!rs.orthogonal(1, l)) {
                other = l;
                break;
            }
        REQUIRE(other != 0);
        CHECK_THROWS_AS(restrict_system(rs, {1, other}), std::invalid_argument);
    }
    SUBCASE("restricting by a full basis leaves an empty system") {
        const RaySystem empty = restrict_system(rs, fixtures::kSeedBasis);
        CHECK(empty.size() == 0);
        CHECK(empty.basis_size() == 0);
    }
}
