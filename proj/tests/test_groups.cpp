#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symsos/group.hpp"
#include "symsos/irreps.hpp"

using namespace symsos;

namespace {

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool irrep_mats_equal(const Irrep& ir, int a, int b, int ab, double tol = 1e-10) {
    for (int r = 0; r < ir.dim(); ++r) {
        for (int c = 0; c < ir.dim(); ++c) {
            Cplx prod(0, 0);
            for (int k = 0; k < ir.dim(); ++k) prod += ir.entry(a, r, k) * ir.entry(b, k, c);
            if (std::abs(prod - ir.entry(ab, r, c)) > tol) return false;
        }
    }
    return true;
}

void check_family(const GroupSpec& spec, int pairs_to_check = 100) {
    const Group g = build_group(spec);
    const auto irreps = builtin_irreps(spec, g);

    CHECK(irreps.size() == g.classes().size());
    long dimsq = 0;
    for (const auto& ir : irreps) dimsq += static_cast<long>(ir.dim()) * ir.dim();
    CHECK(dimsq == static_cast<long>(g.size()));

    // Trivial representation first.
    for (std::size_t e = 0; e < g.size(); ++e) CHECK(std::abs(irreps[0].entry(static_cast<int>(e), 0, 0) - Cplx(1, 0)) < 1e-14);

    // Multiplicativity on random pairs.
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> dist(0, static_cast<int>(g.size()) - 1);
    for (int t = 0; t < pairs_to_check; ++t) {
        const int a = dist(rng), b = dist(rng);
        const int ab = g.index_of(g.element(a).compose(g.element(b)));
        for (const auto& ir : irreps) CHECK(irrep_mats_equal(ir, a, b, ab));
    }

    // Identity maps to the identity matrix.
    for (const auto& ir : irreps) {
        for (int r = 0; r < ir.dim(); ++r)
            for (int c = 0; c < ir.dim(); ++c)
                CHECK(std::abs(ir.entry(g.identity_index(), r, c) - (r == c ? Cplx(1, 0) : Cplx(0, 0))) < 1e-14);
    }

    // Character row orthogonality under the class-weighted inner product.
    const auto table = character_table(g, irreps);
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        for (std::size_t j = 0; j < irreps.size(); ++j) {
            Cplx acc(0, 0);
            for (std::size_t c = 0; c < g.classes().size(); ++c) {
                acc += static_cast<double>(g.classes()[c].size()) * table.values[i][c] *
                       std::conj(table.values[j][c]);
            }
            acc /= static_cast<double>(g.size());
            CHECK(std::abs(acc - (i == j ? Cplx(1, 0) : Cplx(0, 0))) < 1e-9);
        }
    }

    // Multiplicity dimension identity across degrees.
    for (int r = 0; r <= 4; ++r) {
        const auto m = multiplicities(g, irreps, r);
        long total = 0;
        for (std::size_t i = 0; i < m.size(); ++i) total += m[i] * irreps[i].dim();
        CHECK(total == binom(g.npoints() + r, r));
    }
}

}  // namespace

TEST_CASE("closure: S3 from two transpositions") {
    std::vector<Perm> gens{Perm({1, 0, 2}), Perm({0, 2, 1})};
    const Group g = Group::close(gens, 3);
    CHECK(g.size() == 6);
    CHECK(g.classes().size() == 3);
    // Classes: identity, the three transpositions, the two 3-cycles.
    CHECK(g.classes()[0].size() == 1);
    CHECK(g.classes()[1].size() == 3);
    CHECK(g.classes()[2].size() == 2);
    CHECK(g.element(g.class_representatives()[0]).is_identity());
}

TEST_CASE("closure: empty generators give the trivial group") {
    const Group g = Group::close({}, 4);
    CHECK(g.size() == 1);
    CHECK(g.classes().size() == 1);
}

TEST_CASE("closure: dihedral generators give order 2n") {
    for (int n : {3, 4, 5, 8, 12}) {
        const Group g = build_group(GroupSpec::dihedral(n));
        CHECK(g.size() == static_cast<std::size_t>(2 * n));
    }
}

TEST_CASE("closure cap raises group-too-large") {
    CHECK_THROWS_AS(build_group(GroupSpec::symmetric(8), 1000), GroupTooLargeError);
}

TEST_CASE("element enumeration is deterministic and sorted") {
    const Group g = build_group(GroupSpec::symmetric(4));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g.element(i - 1) < g.element(i));
}

TEST_CASE("C4 has four singleton classes") {
    const Group g = build_group(GroupSpec::cyclic(4));
    CHECK(g.classes().size() == 4);
    for (const auto& c : g.classes()) CHECK(c.size() == 1);
}

TEST_CASE("S3 irreps: dims (1,2,1) and standard character table") {
    const GroupSpec spec = GroupSpec::symmetric(3);
    const Group g = build_group(spec);
    const auto irreps = builtin_irreps(spec, g);
    REQUIRE(irreps.size() == 3);
    CHECK(irreps[0].dim() == 1);
    CHECK(irreps[1].dim() == 2);
    CHECK(irreps[2].dim() == 1);

    const auto table = character_table(g, irreps);
    // Classes ordered id, transpositions, 3-cycles.
    auto close_to = [](Cplx v, double x) { return std::abs(v - Cplx(x, 0)) < 1e-12; };
    CHECK(close_to(table.values[0][0], 1));
    CHECK(close_to(table.values[0][1], 1));
    CHECK(close_to(table.values[0][2], 1));
    CHECK(close_to(table.values[1][0], 2));
    CHECK(close_to(table.values[1][1], 0));
    CHECK(close_to(table.values[1][2], -1));
    CHECK(close_to(table.values[2][0], 1));
    CHECK(close_to(table.values[2][1], -1));
    CHECK(close_to(table.values[2][2], 1));
}

TEST_CASE("cyclic irreps are roots of unity with complete family") {
    for (int n : {2, 3, 5, 6}) {
        const GroupSpec spec = GroupSpec::cyclic(n);
        const Group g = build_group(spec);
        const auto irreps = builtin_irreps(spec, g);
        REQUIRE(static_cast<int>(irreps.size()) == n);
        const int rot = g.index_of(spec.build_generators()[0]);
        for (int k = 0; k < n; ++k) {
            const Cplx expected = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
            CHECK(std::abs(irreps[k].entry(rot, 0, 0) - expected) < 1e-12);
        }
    }
}

TEST_CASE("trivial group has a single 1-dim irrep") {
    const GroupSpec spec = GroupSpec::trivial(3);
    const Group g = build_group(spec);
    const auto irreps = builtin_irreps(spec, g);
    REQUIRE(irreps.size() == 1);
    CHECK(irreps[0].dim() == 1);
    CHECK(multiplicities(g, irreps, 2)[0] == binom(5, 2));
}

TEST_CASE("built-in families: completeness, multiplicativity, characters") {
    check_family(GroupSpec::trivial(2));
    check_family(GroupSpec::symmetric(3));
    check_family(GroupSpec::symmetric(4));
    check_family(GroupSpec::symmetric(5));
    check_family(GroupSpec::cyclic(6));
    check_family(GroupSpec::cyclic(10));
    check_family(GroupSpec::dihedral(4));
    check_family(GroupSpec::dihedral(6));
    check_family(GroupSpec::dihedral(9));
    check_family(GroupSpec::dihedral(10));
    check_family(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(3)));
    check_family(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2)));
    check_family(GroupSpec::product(GroupSpec::symmetric(2), GroupSpec::symmetric(3),
                                    GroupSpec::ProductAction::blocks));
}

TEST_CASE("seminormal form is multiplicative on all pairs of S4") {
    const GroupSpec spec = GroupSpec::symmetric(4);
    const Group g = build_group(spec);
    const auto irreps = builtin_irreps(spec, g);
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
            const int ab = g.index_of(g.element(a).compose(g.element(b)));
            for (const auto& ir : irreps) {
                if (!irrep_mats_equal(ir, static_cast<int>(a), static_cast<int>(b), ab, 1e-12)) {
                    FAIL("seminormal representation not multiplicative");
                }
            }
        }
    }
}

TEST_CASE("S3 multiplicities at r=2 are (4,3,0)") {
    const GroupSpec spec = GroupSpec::symmetric(3);
    const Group g = build_group(spec);
    const auto irreps = builtin_irreps(spec, g);
    const auto m = multiplicities(g, irreps, 2);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == 4);
    CHECK(m[1] == 3);
    CHECK(m[2] == 0);
    CHECK(m[0] * 1 + m[1] * 2 + m[2] * 1 == 10);
}

TEST_CASE("custom groups have no built-in irreps") {
    const GroupSpec spec = GroupSpec::custom({Perm({1, 0, 2})}, 3);
    const Group g = build_group(spec);
    CHECK(g.size() == 2);
    CHECK_THROWS_AS(builtin_irreps(spec, g), UnsupportedGroupError);
}

TEST_CASE("grid product action shifts rows and columns") {
    const GroupSpec spec = GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(3));
    CHECK(spec.npoints() == 6);
    const Group g = build_group(spec);
    CHECK(g.size() == 6);
    CHECK(g.classes().size() == 6);  // abelian
}
