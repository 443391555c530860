#include "plutus/compliance.hpp"

#include <gtest/gtest.h>

#include "plutus/error.hpp"
#include "test_util.hpp"

namespace plutus::compliance {
namespace {

using testing::TempDir;

const std::filesystem::path kFixtures = std::filesystem::path(PLUTUS_FIXTURE_DIR) / "compliance";

const Finding& finding_for(const ComplianceReport& r, std::string_view name) {
    for (const auto& f : r.findings) {
        if (f.rule.name == name) return f;
    }
    throw std::logic_error("no finding for rule");
}

TEST(NormalizeHeading, Folding) {
    EXPECT_EQ(normalize_heading("Backtesting & Optimization"), "backtesting and optimization");
    EXPECT_EQ(normalize_heading("  4. Implementation (steps 4-6) "), "implementation");
    EXPECT_EQ(normalize_heading("2.1 Data"), "data");
    EXPECT_EQ(normalize_heading("DATA-COLLECTION"), "data collection");
    EXPECT_EQ(normalize_heading("References:"), "references");
    EXPECT_EQ(normalize_heading(""), "");
}

TEST(ExtractSections, OnlyTopTwoLevelsOutsideFences) {
    const auto s = extract_sections(
        "# Title\n"
        "## Data\n"
        "### Sources\n"
        "## Empty\n"
        "\n"
        "```\n"
        "## Not a heading\n"
        "```\n"
        "#NoSpace\n"
        "## Closed ##\n"
        "text\n");
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0].title, "Title");
    EXPECT_FALSE(s[0].has_body);
    EXPECT_EQ(s[1].title, "Data");
    EXPECT_TRUE(s[1].has_body);  // the level-3 heading counts as body
    EXPECT_EQ(s[2].title, "Empty");
    EXPECT_TRUE(s[2].has_body);  // fenced block and the non-heading line
    EXPECT_EQ(s[3].title, "Closed");
    EXPECT_TRUE(s[3].has_body);
}

TEST(CheckMarkdown, HeadingWithoutBodyIsEmpty) {
    const auto r = check_markdown("## Abstract\n\n## Introduction\nSomething.\n", default_ruleset());
    EXPECT_EQ(finding_for(r, "Abstract").status, SectionStatus::Empty);
    EXPECT_EQ(finding_for(r, "Introduction").status, SectionStatus::Present);
    EXPECT_EQ(finding_for(r, "Data").status, SectionStatus::Missing);
    EXPECT_EQ(r.required_total, 7u);
    EXPECT_EQ(r.required_missing, 6u);
    EXPECT_DOUBLE_EQ(r.score, 1.0 / 7.0);
}

TEST(CheckMarkdown, AliasesAndOptionalSections) {
    const auto r = check_markdown(
        "# Summary\nx\n# Overview\nx\n# Hypotheses\nx\n# Dataset\nx\n# Implementation\nx\n"
        "# Backtesting and Optimisation\nx\n# Reference\nx\n",
        default_ruleset());
    EXPECT_DOUBLE_EQ(r.score, 1.0);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(finding_for(r, "Conclusion").status, SectionStatus::Missing);
}

TEST(CheckRepo, FixtureScores) {
    const auto rules = default_ruleset();
    const auto full = check_repo(kFixtures / "full", rules);
    EXPECT_DOUBLE_EQ(full.score, 1.0);
    EXPECT_TRUE(full.passed());

    const auto six = check_repo(kFixtures / "six_of_seven", rules);
    EXPECT_DOUBLE_EQ(six.score, 6.0 / 7.0);
    EXPECT_EQ(finding_for(six, "Backtesting & Optimization").status, SectionStatus::Missing);
    EXPECT_FALSE(six.passed());

    const auto none = check_repo(kFixtures / "no_readme", rules);
    EXPECT_FALSE(none.readme_found);
    EXPECT_EQ(none.score, 0.0);
    EXPECT_NE(to_text(none).find("NoReadme"), std::string::npos);

    EXPECT_THROW(check_repo(kFixtures / "does_not_exist", rules), Error);
}

TEST(CheckRepo, ReadmeNameIsCaseInsensitive) {
    TempDir dir("repo");
    dir.write("readme.MD", "## Abstract\nx\n");
    const auto r = check_repo(dir.path(), default_ruleset());
    EXPECT_TRUE(r.readme_found);
    EXPECT_EQ(finding_for(r, "Abstract").status, SectionStatus::Present);
}

TEST(Ruleset, LoadFromCsv) {
    TempDir dir("rules");
    const auto p = dir.write("rules.csv",
                             "name,required,aliases,step_tag\n"
                             "Abstract,true,Summary|TL;DR,\n"
                             "Appendix,false,,\n");
    const auto rules = load_ruleset(p);
    ASSERT_EQ(rules.size(), 2u);
    EXPECT_EQ(rules[0].aliases, (std::vector<std::string>{"Summary", "TL;DR"}));
    EXPECT_FALSE(rules[1].required);

    const auto r = check_markdown("# TL;DR\nshort\n", rules);
    EXPECT_DOUBLE_EQ(r.score, 1.0);

    EXPECT_THROW(load_ruleset(dir.write("bad.csv", "name,required\n")), Error);
    EXPECT_THROW(load_ruleset(dir.write("bad2.csv", "name,required,aliases,step_tag\nX,maybe,,\n")), Error);
}

TEST(Ruleset, DefaultShape) {
    const auto rules = default_ruleset();
    EXPECT_EQ(rules.size(), 11u);
    EXPECT_EQ(std::count_if(rules.begin(), rules.end(), [](const auto& r) { return r.required; }), 7);
}

TEST(Report, KeyValueLayout) {
    const auto r = check_repo(kFixtures / "six_of_seven", default_ruleset());
    const auto kv = to_key_value(r);
    EXPECT_NE(kv.find("section.backtesting_and_optimization = missing\n"), std::string::npos);
    EXPECT_NE(kv.find("required_missing = 1\n"), std::string::npos);
}

}  // namespace
}  // namespace plutus::compliance
