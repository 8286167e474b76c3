#include <gtest/gtest.h>

#include <map>
#include <random>

#include "kneserlab/coclique.hpp"

using namespace kneserlab;

namespace {

KneserGraph from_graph(Graph g)
{
    KneserGraph k;
    k.graph = std::move(g);
    k.sigma.resize(static_cast<std::size_t>(k.graph.order()));
    std::iota(k.sigma.begin(), k.sigma.end(), 0);
    for (int v = 0; v < k.graph.order(); ++v) k.vertices.push_back(GeometricObject{{Subspace::coordinate({0}, 2, 2)}});
    return k;
}

std::map<std::size_t, int> size_histogram(const std::vector<Coclique>& cs)
{
    std::map<std::size_t, int> h;
    for (const auto& c : cs) ++h[c.members.size()];
    return h;
}

Coclique random_coclique(const Graph& g, std::mt19937_64& rng)
{
    Coclique c;
    const int tries = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < tries; ++t) {
        const int v = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
        if (std::find(c.members.begin(), c.members.end(), v) != c.members.end()) continue;
        if (std::none_of(c.members.begin(), c.members.end(), [&](int u) { return g.adjacent(u, v); })) c.members.push_back(v);
    }
    std::sort(c.members.begin(), c.members.end());
    return c;
}

} // namespace

TEST(MaximalCocliques, MatchingHasTwoToTheN)
{
    const auto g = build_polar_kneser(Family::C, 3, 1, 2);
    const auto cs = maximal_cocliques_sigma(g);
    EXPECT_EQ(cs.size(), 8u);
    for (const auto& c : cs) {
        EXPECT_EQ(c.members.size(), 3u);
        EXPECT_TRUE(is_coclique(g.graph, c.members));
    }
    EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end()));
}

TEST(MaximalCocliques, PetersenHasFiveStarsAndTenTriangles)
{
    const auto cs = maximal_cocliques_sigma(build_projective_kneser(4, 2, 2));
    EXPECT_EQ(cs.size(), 15u);
    EXPECT_EQ(size_histogram(cs), (std::map<std::size_t, int>{{3, 10}, {4, 5}}));
}

TEST(MaximalCocliques, EdgelessSigmaHasOne)
{
    const auto cs = maximal_cocliques_sigma(from_graph(Graph(5)));
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs.front().members, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(MaximalCocliques, MaximalityAgainstSigma)
{
    const auto g = build_flag_kneser_A(3, {1, 3}, 2);
    const auto cs = maximal_cocliques_sigma(g);
    EXPECT_EQ(cs.size(), 64u);
    for (const auto& c : cs) {
        for (int v : g.sigma) {
            if (std::binary_search(c.members.begin(), c.members.end(), v)) continue;
            EXPECT_TRUE(std::any_of(c.members.begin(), c.members.end(), [&](int u) { return g.adjacent(u, v); }));
        }
    }
}

TEST(ExtensionSet, PolarPointsGiveTheMaximalSubspace)
{
    const auto g = build_polar_kneser(Family::C, 3, 1, 2);
    Coclique c;
    for (int coord : {0, 2, 4}) c.members.push_back(g.index_of(GeometricObject{{Subspace::coordinate({coord}, 6, 2)}}));
    std::sort(c.members.begin(), c.members.end());
    const BitRow d = extension_set(g, c);
    EXPECT_EQ(d.count(), 7);
    const Subspace top = Subspace::coordinate({0, 2, 4}, 6, 2);
    for (int x : d.indices()) EXPECT_TRUE(top.contains(g.vertices[static_cast<std::size_t>(x)].top()));
}

TEST(ExtensionSet, EmptyAndInvalid)
{
    const auto g = build_projective_kneser(2, 1, 2);
    EXPECT_EQ(extension_set(g, Coclique{}).count(), 7);
    EXPECT_THROW(extension_set(g, Coclique{{0, 1}}), UsageError);
}

TEST(ExtensionSet, PointLineConstructionHasFiveVertices)
{
    const auto g = build_flag_kneser_A(2, {1, 2}, 2);
    auto flag = [&](int i, int j) {
        std::vector<int> line;
        for (int c = 0; c < 3; ++c) {
            if (c != j) line.push_back(c);
        }
        return g.index_of(GeometricObject{{Subspace::coordinate({i}, 3, 2), Subspace::coordinate(line, 3, 2)}});
    };
    Coclique c{{flag(0, 1), flag(0, 2), flag(1, 2)}};
    std::sort(c.members.begin(), c.members.end());
    EXPECT_EQ(extension_set(g, c).count(), 5);
}

TEST(ExtensionSet, ContainsTheCoclique)
{
    std::mt19937_64 rng(41);
    for (const auto& g : {build_projective_kneser(3, 2, 2), build_polar_kneser(Family::D, 4, 2, 2), build_flag_kneser_A(3, {1, 3}, 2)}) {
        for (int t = 0; t < 1000; ++t) {
            const Coclique c = random_coclique(g.graph, rng);
            const BitRow d = extension_set(g, c);
            for (int v : c.members) ASSERT_TRUE(d.test(v));
        }
    }
}

TEST(CheckUcep, HoldsForD4Lines)
{
    const auto g = build_polar_kneser(Family::D, 4, 2, 2);
    const auto r = check_ucep(g, {.jobs = 4});
    EXPECT_EQ(r.verdict, UcepVerdict::holds);
    EXPECT_EQ(r.cocliques_checked, 4096);
    EXPECT_FALSE(r.witness);
}

TEST(CheckUcep, FailsForB3LinesWithAValidWitness)
{
    const auto g = build(BuildingSpec{Family::B, 3, {2}, 3});
    const auto r = check_ucep(g, {.jobs = 4});
    ASSERT_EQ(r.verdict, UcepVerdict::fails);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(witness_is_valid(g.graph, *r.witness));
    for (int v : r.witness->coclique.members) EXPECT_TRUE(std::binary_search(g.sigma.begin(), g.sigma.end(), v));
    for (int v : {r.witness->x, r.witness->y}) EXPECT_EQ(g.vertices[static_cast<std::size_t>(v)].top().dim(), 2);
}

TEST(CheckUcep, SingleVertexHoldsVacuously)
{
    const auto r = check_ucep(from_graph(Graph(1)));
    EXPECT_EQ(r.verdict, UcepVerdict::holds);
    EXPECT_EQ(r.cocliques_checked, 1);
}

TEST(CheckUcep, DeterministicAcrossJobsAndSeeds)
{
    const auto g = build_flag_kneser_A(4, {2, 3}, 2);
    UcepOptions one{.jobs = 1, .timing = false};
    UcepOptions many{.jobs = 8, .timing = false};
    const auto a = check_ucep(g, one);
    EXPECT_EQ(a.verdict, UcepVerdict::fails);
    EXPECT_EQ(a, check_ucep(g, many));

    UcepOptions sampled{.sample = 50, .seed = 7, .jobs = 3, .timing = false};
    const auto s1 = check_ucep(g, sampled);
    const auto s2 = check_ucep(g, sampled);
    EXPECT_EQ(s1, s2);
    EXPECT_EQ(s1.seed, std::optional<std::uint64_t>{7});
    EXPECT_LE(s1.cocliques_checked, 50);
}

TEST(MaxCoclique, Examples)
{
    EXPECT_EQ(max_coclique(build_projective_kneser(3, 2, 2)).lower, 7);
    const auto flags = max_coclique(build_flag_kneser_A(2, {1, 2}, 2));
    EXPECT_TRUE(flags.exact);
    EXPECT_EQ(flags.lower, 5);
    EXPECT_EQ(max_coclique(build_projective_kneser(2, 1, 2)).lower, 1);
}

TEST(MaxCoclique, ErdosKoRado)
{
    for (auto [n, k, want] : std::vector<std::tuple<int, int, int>>{{5, 2, 4}, {6, 2, 5}, {7, 3, 15}}) {
        const Graph g = set_kneser(n, k);
        const auto r = max_coclique(g);
        EXPECT_TRUE(r.exact);
        EXPECT_EQ(r.lower, want) << n << " " << k;
        EXPECT_TRUE(is_coclique(g, r.witness));
    }
}

TEST(MaxCoclique, BudgetExhaustionReportsBounds)
{
    const auto r = max_coclique(build_projective_kneser(3, 2, 2), {.node_budget = 3});
    EXPECT_FALSE(r.exact);
    EXPECT_LE(r.lower, 7);
    EXPECT_GE(r.upper, 7);
    EXPECT_TRUE(is_coclique(build_projective_kneser(3, 2, 2).graph, r.witness));
}

TEST(MaxCoclique, ForcedVertices)
{
    const auto g = build_projective_kneser(3, 2, 2);
    const auto r = max_coclique(g, {.forced = {0}});
    EXPECT_EQ(r.lower, 7);
    EXPECT_TRUE(std::binary_search(r.witness.begin(), r.witness.end(), 0));
}

TEST(SpanCheck, Examples)
{
    const auto g = build_projective_kneser(3, 2, 2);
    for (const auto& c : maximal_cocliques_sigma(g)) EXPECT_TRUE(span_check(g, c));
    const auto points = build_projective_kneser(2, 1, 2);
    EXPECT_TRUE(span_check(points, Coclique{{3}}));
    EXPECT_THROW(span_check(build_polar_kneser(Family::C, 3, 1, 2), Coclique{}), UsageError);
}

TEST(SpanCheck, ImpliesExtensionSetIsACoclique)
{
    for (const auto& g : {build_projective_kneser(4, 2, 2), build_polar_kneser(Family::D, 4, 2, 2), build_projective_kneser(3, 2, 3)}) {
        for (const auto& c : maximal_cocliques_sigma(g)) {
            const bool span = span_check(g, c);
            EXPECT_TRUE(span) << g.spec.label();
            if (span) EXPECT_FALSE(adjacent_pair_in(g.graph, extension_set(g, c)));
        }
    }
}

TEST(CocliqueExtension, FlagsOverLines)
{
    const auto fine = build_flag_kneser_A(3, {1, 2}, 2, true);
    const auto coarse = build_projective_kneser(3, 2, 2);
    const auto phi = flag_projection(fine, coarse);
    EXPECT_TRUE(certify_coclique_extension(fine.graph, coarse.graph, phi).certified());

    const auto point_plane = build_flag_kneser_A(3, {1, 3}, 2);
    const auto points = build_projective_kneser(3, 1, 2);
    const auto cert = certify_coclique_extension(point_plane.graph, points.graph, flag_projection(point_plane, points));
    EXPECT_FALSE(cert.certified());
}
