#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "symsos/tsp.hpp"

using namespace symsos;

namespace {

Polynomial var(int n, int i, int pow = 1) { return Polynomial::variable(n, i, pow); }

BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    BinaryMatrix b(static_cast<int>(rows.size()));
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            if (rows[i][j]) b.set(i, j);
    return b;
}

struct Pipeline {
    std::shared_ptr<const Group> group;
    std::vector<Irrep> irreps;
    std::shared_ptr<const SymmetryAdaptedBasis> basis;
    std::vector<Polynomial> gs;
    std::shared_ptr<const ExpansionTable> table;
};

Pipeline make(const GroupSpec& spec, int r, std::vector<Polynomial> constraints = {}) {
    auto g = std::make_shared<const Group>(build_group(spec));
    auto irreps = builtin_irreps(spec, *g);
    auto basis = std::make_shared<const SymmetryAdaptedBasis>(symmetry_adapted_basis(g, irreps, r));
    std::vector<Polynomial> gs{Polynomial::constant(spec.npoints(), 1)};
    for (auto& c : constraints) gs.push_back(std::move(c));
    auto table = std::make_shared<const ExpansionTable>(basis, gs, r);
    return Pipeline{g, std::move(irreps), std::move(basis), std::move(gs), std::move(table)};
}

Polynomial s3_objective() {
    const int n = 3;
    const Polynomial a1 = var(n, 0) + var(n, 1) + var(n, 2);
    const Polynomial a4 = var(n, 0, 4) + var(n, 1, 4) + var(n, 2, 4);
    return Polynomial::constant(n, 1) + a1 + a1 * a1 + a4;
}

Polynomial robinson() {
    const int n = 2;
    auto x = [&](int i, int p) { return var(n, i, p); };
    return x(0, 6) + x(1, 6) - x(0, 4) * x(1, 2) - x(1, 4) * x(0, 2) - x(0, 4) - x(1, 4) - x(0, 2) -
           x(1, 2) + Rational(3) * x(0, 2) * x(1, 2) + Polynomial::constant(n, 1);
}

std::mt19937 rng(2024);

BinaryMatrix random_symmetric(int n, double p) {
    std::uniform_real_distribution<double> dist(0, 1);
    BinaryMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (dist(rng) < p) b.set(i, j);
    return b;
}

}  // namespace

TEST_CASE("block closure of the four-node example") {
    const BinaryMatrix b = from_rows({{1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 1, 1}, {0, 0, 1, 1}});
    const BinaryMatrix expect = from_rows({{1, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 1}});
    CHECK(block_closure(b) == expect);
}

TEST_CASE("block closure fixes the identity pattern") {
    BinaryMatrix id(5);
    for (int i = 0; i < 5; ++i) id.set(i, i);
    CHECK(block_closure(id) == id);
}

TEST_CASE("block closure is idempotent and monotone on random patterns") {
    for (int t = 0; t < 25; ++t) {
        const BinaryMatrix b = random_symmetric(8, 0.25);
        const BinaryMatrix c = block_closure(b);
        CHECK(block_closure(c) == c);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (b.get(i, j)) CHECK(c.get(i, j));
        // Transitivity of the closed relation.
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                for (int k = 0; k < 8; ++k)
                    if (c.get(i, j) && c.get(j, k)) CHECK(c.get(i, k));
    }
}

TEST_CASE("chordal extension of a 4-cycle adds one chord") {
    BinaryMatrix b(4);
    for (int i = 0; i < 4; ++i) b.set(i, i);
    b.set(0, 1);
    b.set(1, 2);
    b.set(2, 3);
    b.set(3, 0);
    auto [closed, cliques] = chordal_extension_min_degree(b);
    REQUIRE(cliques.size() == 2);
    CHECK(cliques[0].size() == 3);
    CHECK(cliques[1].size() == 3);
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges += closed.get(i, j);
    CHECK(edges == 5);  // 4 cycle edges + 1 chord
}

TEST_CASE("chordal extension leaves chordal graphs unchanged") {
    // A tree plus a triangle: already chordal.
    BinaryMatrix b(6);
    for (int i = 0; i < 6; ++i) b.set(i, i);
    b.set(0, 1);
    b.set(1, 2);
    b.set(0, 2);
    b.set(2, 3);
    b.set(3, 4);
    b.set(3, 5);
    auto [closed, cliques] = chordal_extension_min_degree(b);
    CHECK(closed == b);
    std::vector<std::vector<int>> expect{{0, 1, 2}, {2, 3}, {3, 4}, {3, 5}};
    std::sort(expect.begin(), expect.end());
    CHECK(cliques == expect);
}

TEST_CASE("S3 worked example: B_2, patterns, closure, supports, stabilization") {
    auto pipe = make(GroupSpec::symmetric(3), 2);
    const auto f_coords = express_invariant(s3_objective(), pipe.basis->invariants());

    SUBCASE("with diagonal squares") {
        const auto b0 = initial_support(f_coords, *pipe.table, true);
        // {1, a1, a2, a11, a4} + {1, a2, a11, a4, a22, a211} + {a2, a11, a4, a22, a211}
        CHECK(b0 == std::set<int>{0, 1, 2, 3, 7, 9, 10});

        TspState state(pipe.table, b0, TspOptions{true, ClosureMode::maximal});
        state.iterate(0);
        const auto& it1 = state.at(1);

        // Pre-closure pattern for the invariant component: the products
        // a1*a2 and a1*a11 have supports {a3,a21} and {a21,a111}, both
        // disjoint from B_2.
        CHECK(it1.pre[0][0] == from_rows({{1, 1, 1, 1}, {1, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 1}}));
        BinaryMatrix ones(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) ones.set(i, j);
        CHECK(it1.closed[0][0] == ones);
        CHECK(it1.blocks[0][0] == std::vector<std::vector<int>>{{0, 1, 2, 3}});

        // Reflection component: b1 is disconnected from b2 and b11.
        CHECK(it1.pre[1][0] == from_rows({{1, 0, 0}, {0, 1, 1}, {0, 1, 1}}));
        CHECK(it1.closed[1][0] == it1.pre[1][0]);
        CHECK(it1.blocks[1][0] == std::vector<std::vector<int>>{{0}, {1, 2}});

        // D^{(2)}_{2,1} = {a2, a11, a4, a31, a22, a211}.
        CHECK(it1.supports[1][0] == std::set<int>{2, 3, 7, 8, 9, 10});

        CHECK(state.stabilized_s() == 1);
    }

    SUBCASE("without diagonal squares") {
        const auto b0 = initial_support(f_coords, *pipe.table, false);
        CHECK(b0 == std::set<int>{0, 1, 2, 3, 7});
    }

    SUBCASE("constant objective, no constraints, no diagonal squares") {
        std::vector<Rational> coords(pipe.basis->invariants().size(), Rational(0));
        coords[0] = 1;
        CHECK(initial_support(coords, *pipe.table, false) == std::set<int>{0});
    }
}

TEST_CASE("dense initial support gives all-ones patterns") {
    auto pipe = make(GroupSpec::symmetric(3), 2);
    std::set<int> all;
    for (int j = 0; j < pipe.basis->invariants().size(); ++j) all.insert(j);
    TspState state(pipe.table, all, TspOptions{true, ClosureMode::maximal});
    state.iterate(1);
    const auto& it1 = state.at(1);
    for (int i = 0; i < 2; ++i) {
        const int m = pipe.table->block_size(i, 0);
        for (int j = 0; j < m; ++j)
            for (int jp = 0; jp < m; ++jp) CHECK(it1.pre[i][0].get(j, jp));
    }
}

TEST_CASE("Robinson iterations: s=1 and s=2 block structures") {
    auto pipe = make(GroupSpec::symmetric(2), 3);
    const auto f_coords = express_invariant(robinson(), pipe.basis->invariants());
    const auto b0 = initial_support(f_coords, *pipe.table, false);
    // supp(f) = {1, a2, a4, a22, a6, a42}
    CHECK(b0 == std::set<int>{0, 2, 6, 8, 12, 14});

    TspState state(pipe.table, b0, TspOptions{false, ClosureMode::maximal});
    state.iterate(0);

    // Component order: invariants [1, a1, a2, a11, a3, a21], sign
    // component [x1-x2, x1^2-x2^2, x1^3-x2^3, x1^2 x2 - x1 x2^2].
    const auto& it1 = state.at(1);
    CHECK(it1.blocks[0][0] == std::vector<std::vector<int>>{{0, 2}, {1, 4, 5}, {3}});
    CHECK(it1.blocks[1][0] == std::vector<std::vector<int>>{{0, 2, 3}, {1}});

    const auto& it2 = state.at(2);
    CHECK(it2.blocks[0][0] == std::vector<std::vector<int>>{{0, 2, 3}, {1, 4, 5}});
    CHECK(it2.blocks[1][0] == std::vector<std::vector<int>>{{0, 2, 3}, {1}});

    CHECK(state.stabilized_s() == 2);
}

TEST_CASE("support monotonicity along iterations") {
    auto pipe = make(GroupSpec::symmetric(2), 3);
    const auto f_coords = express_invariant(robinson(), pipe.basis->invariants());
    TspState state(pipe.table, initial_support(f_coords, *pipe.table, false),
                   TspOptions{false, ClosureMode::maximal});
    state.iterate(0);
    for (int s = 2; s <= state.stabilized_s(); ++s) {
        const auto& prev = state.at(s - 1);
        const auto& cur = state.at(s);
        for (std::size_t i = 0; i < cur.pre.size(); ++i) {
            for (std::size_t k = 0; k < cur.pre[i].size(); ++k) {
                const int m = cur.pre[i][k].size();
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b)
                        if (prev.pre[i][k].get(a, b)) CHECK(cur.pre[i][k].get(a, b));
                for (int idx : prev.supports[i][k]) CHECK(cur.supports[i][k].count(idx) == 1);
            }
        }
    }
}

TEST_CASE("localizing patterns appear for constrained problems") {
    // Ring constraint on 3 variables under S3 just to exercise k >= 1.
    const int n = 3;
    Polynomial g = Polynomial::constant(n, Rational(3));
    for (int i = 0; i < n; ++i) g -= var(n, i, 2);
    auto pipe = make(GroupSpec::symmetric(3), 2, {g});
    const auto f_coords = express_invariant(s3_objective(), pipe.basis->invariants());
    TspState state(pipe.table, initial_support(f_coords, *pipe.table, true),
                   TspOptions{true, ClosureMode::maximal});
    state.iterate(0);
    CHECK(state.stabilized_s() >= 1);
    const auto& it = state.at(state.stabilized_s());
    // d_1 = 1, so the localizing block for component 0 has size m^{(1)}_1 = 2.
    CHECK(pipe.table->block_size(0, 1) == 2);
    CHECK(it.pre[0][1].size() == 2);
    CHECK(it.blocks[0][1].size() >= 1);
}
