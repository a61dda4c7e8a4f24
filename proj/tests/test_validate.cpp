#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <tuple>

using namespace ihg;
using ihg::testing::from_dsl;

namespace {

std::vector<RuleId> rules(const ValidationReport& r) {
    std::vector<RuleId> out;
    for (const auto& f : r.findings) out.push_back(f.rule);
    return out;
}

} // namespace

TEST(Validate, DirectTwoCycleIsStrictnessError) {
    auto report = validate(from_dsl("p1 => p2\np2 => p1\n"));
    ASSERT_EQ(rules(report), std::vector<RuleId>{RuleId::Strictness});
    EXPECT_EQ(report.findings[0].severity, Severity::Error);
    EXPECT_EQ(report.findings[0].edges, (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(report.has_errors());
}

TEST(Validate, SetLevelReversalIsStrictnessError) {
    auto report = validate(from_dsl("a & b => c\nc => b & a\n"));
    EXPECT_EQ(rules(report), std::vector<RuleId>{RuleId::Strictness});
}

TEST(Validate, SupersetTailIsWarning) {
    auto report = validate(from_dsl("p1 => p2\np1 & p3 => p2\n"));
    ASSERT_EQ(rules(report), std::vector<RuleId>{RuleId::MinimalitySupersetTail});
    EXPECT_EQ(report.findings[0].severity, Severity::Warning);
    EXPECT_EQ(report.findings[0].edges, (std::vector<std::size_t>{0, 1}));
    EXPECT_FALSE(report.has_errors());

    // Detected regardless of declaration order.
    auto reversed = validate(from_dsl("p1 & p3 => p2\np1 => p2\n"));
    ASSERT_EQ(rules(reversed), std::vector<RuleId>{RuleId::MinimalitySupersetTail});
    EXPECT_EQ(reversed.findings[0].edges, (std::vector<std::size_t>{1, 0}));
}

TEST(Validate, Fig1HasShortcutOnP2P4) {
    auto h = ihg::testing::load("fig1.ihg");
    auto report = validate(h);
    ASSERT_EQ(rules(report), std::vector<RuleId>{RuleId::MinimalityShortcut});
    const auto& f = report.findings[0];
    EXPECT_EQ(f.severity, Severity::Warning);
    EXPECT_EQ(f.vertices, (std::vector<VertexIndex>{1, 3}));
    EXPECT_EQ(f.edges, std::vector<std::size_t>{2});
}

TEST(Validate, DuplicateEdgeIsError) {
    auto report = validate(from_dsl("a => b\nb => c\na => b\n"));
    ASSERT_EQ(rules(report), std::vector<RuleId>{RuleId::DuplicateEdge});
    EXPECT_EQ(report.findings[0].edges, (std::vector<std::size_t>{0, 2}));
    EXPECT_TRUE(report.has_errors());
}

TEST(Validate, CleanInstancesHaveNoFindings) {
    EXPECT_TRUE(validate(from_dsl("a => b\nb => c\n")).empty());
    EXPECT_TRUE(validate(from_dsl("prop x\n")).empty());
    EXPECT_TRUE(validate(ihg::testing::load("remark2.ihg")).empty());
}

TEST(Validate, RemarkInstancesPassStrictness) {
    // Vertex pairs implied both ways through different edges are allowed.
    auto report = validate(ihg::testing::load("remark1.ihg"));
    EXPECT_FALSE(report.has_errors());
}

TEST(Validate, ShortcutThroughCycleOnlyCountsPathsAvoidingSource) {
    // a -> b is the only route; b -> a -> b is not a longer path from a.
    auto report = validate(from_dsl("a => b\nb & c => a\n"));
    EXPECT_TRUE(rules(report).empty());
}

TEST(Validate, MultiHeadShortcut) {
    auto report = validate(from_dsl("a => b & c\nb => c\n"));
    ASSERT_EQ(rules(report), std::vector<RuleId>{RuleId::MinimalityShortcut});
    EXPECT_EQ(report.findings[0].vertices, (std::vector<VertexIndex>{0, 2}));
}

TEST(Validate, DeterministicAndOrderIndependent) {
    using Key = std::tuple<RuleId, std::vector<std::size_t>, std::vector<std::string>>;
    auto keyed = [](const ImplicationHypergraph& h) {
        std::vector<Key> out;
        for (const auto& f : validate(h).findings) {
            std::vector<std::string> ids;
            for (auto v : f.vertices) ids.push_back(h.id(v));
            out.emplace_back(f.rule, f.edges, ids);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    std::mt19937_64 rng(5);
    std::size_t nonempty = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto h = generate({.nodes = 7, .max_edges = 10, .max_tail = 2, .max_head = 2, .acyclic = seed % 2 == 0, .seed = seed});
        EXPECT_EQ(validate(h).findings, validate(h).findings);

        std::vector<std::size_t> perm(h.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        auto base = keyed(h);
        nonempty += !base.empty();
        EXPECT_EQ(base, keyed(ihg::testing::permute(h, perm))) << "seed " << seed;
    }
    EXPECT_GT(nonempty, 10u);
}
