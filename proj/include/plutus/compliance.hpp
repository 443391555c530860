#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace plutus::compliance {

struct SectionRule {
    std::string name;
    bool required = true;
    std::vector<std::string> aliases;
    std::string step_tag;  // development-process step(s) the section documents, e.g. "1" or "2-3"

    bool operator==(const SectionRule&) const = default;
};

enum class SectionStatus { Present, Missing, Empty };
std::string_view to_string(SectionStatus status) noexcept;

struct Finding {
    SectionRule rule;
    SectionStatus status = SectionStatus::Missing;
};

struct ComplianceReport {
    std::filesystem::path repo_path;
    bool readme_found = false;
    std::filesystem::path readme_path;
    std::vector<Finding> findings;  // one per rule, in ruleset order
    double score = 0.0;             // required present / required total
    std::size_t required_total = 0;
    std::size_t required_missing = 0;

    bool passed() const noexcept { return readme_found && required_missing == 0; }
};

/// The eleven README sections of the reproducibility standard, seven of them required.
std::vector<SectionRule> default_ruleset();

/// CSV `name,required,aliases,step_tag`; aliases are `|`-separated, required is true/false.
std::vector<SectionRule> load_ruleset(const std::filesystem::path& path);

/// Lower-case, `&` read as "and", parenthetical remarks and leading numbering dropped,
/// punctuation folded to single spaces.
std::string normalize_heading(std::string_view heading);

struct Section {
    int level = 0;
    std::string title;
    bool has_body = false;
};

/// Level-1 and level-2 ATX headings outside fenced code. A section's body runs to the next
/// level-1/2 heading; any non-blank line inside it (deeper headings included) counts as body.
std::vector<Section> extract_sections(std::string_view markdown);

ComplianceReport check_markdown(std::string_view markdown, const std::vector<SectionRule>& rules);

/// Finds README.md (case-insensitive) at the top of `repo` and checks it. A missing README yields
/// a report with score 0 and every rule missing. Throws FileNotFound if `repo` is not a directory.
ComplianceReport check_repo(const std::filesystem::path& repo, const std::vector<SectionRule>& rules);

std::string to_text(const ComplianceReport& report);
std::string to_key_value(const ComplianceReport& report);

}  // namespace plutus::compliance
