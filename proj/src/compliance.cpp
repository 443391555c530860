#include "plutus/compliance.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "plutus/error.hpp"
#include "plutus/text.hpp"

namespace plutus::compliance {

std::string_view to_string(SectionStatus status) noexcept {
    switch (status) {
        case SectionStatus::Present: return "present";
        case SectionStatus::Missing: return "missing";
        case SectionStatus::Empty: return "empty";
    }
    return "missing";
}

std::vector<SectionRule> default_ruleset() {
    return {
        {"Abstract", true, {"Summary"}, ""},
        {"Introduction", true, {"Overview"}, ""},
        {"Related Work", false, {"Related Works", "Background"}, ""},
        {"Trading Hypotheses", true, {"Trading Hypothesis", "Hypotheses", "Hypothesis"}, "1"},
        {"Data", true, {"Dataset", "Datasets", "Data Collection"}, "2-3"},
        {"Implementation", true, {}, "4-6"},
        {"Backtesting & Optimization", true, {"Backtesting and Optimisation", "Backtest & Optimization"}, ""},
        {"Paper Trading", false, {}, "7"},
        {"Conclusion", false, {"Conclusions"}, ""},
        {"References", true, {"Reference"}, ""},
        {"Final Report or Paper", false, {"Final Report", "Paper"}, ""},
    };
}

std::vector<SectionRule> load_ruleset(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    if (lines.empty() || normalize_heading(lines.front()) != "name required aliases step tag") {
        throw Error(ErrorKind::SchemaError, path.string() + ": expected header 'name,required,aliases,step_tag'");
    }
    std::vector<SectionRule> rules;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split(lines[i], ',');
        const auto where = path.string() + ":" + std::to_string(i + 1);
        if (fields.size() != 4) throw Error(ErrorKind::SchemaError, where + ": expected 4 fields");
        SectionRule rule;
        rule.name = std::string(trim(fields[0]));
        if (rule.name.empty()) throw Error(ErrorKind::SchemaError, where + ": empty section name");
        const auto req = to_lower(trim(fields[1]));
        if (req == "true" || req == "yes" || req == "1") {
            rule.required = true;
        } else if (req == "false" || req == "no" || req == "0") {
            rule.required = false;
        } else {
            throw Error(ErrorKind::SchemaError, where + ": required must be true or false");
        }
        for (const auto alias : split(fields[2], '|')) {
            if (!trim(alias).empty()) rule.aliases.emplace_back(trim(alias));
        }
        rule.step_tag = std::string(trim(fields[3]));
        rules.push_back(std::move(rule));
    }
    return rules;
}

std::string normalize_heading(std::string_view heading) {
    std::string folded;
    int depth = 0;
    for (const char c : heading) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            depth = std::max(0, depth - 1);
        } else if (depth == 0) {
            if (c == '&') {
                folded += " and ";
            } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
                folded += c;
            } else if (c >= 'A' && c <= 'Z') {
                folded += static_cast<char>(c - 'A' + 'a');
            } else {
                folded += ' ';
            }
        }
    }
    std::istringstream words(folded);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    // Drop leading section numbers ("2", "2 1" from "2.1").
    auto first = tokens.begin();
    while (first != tokens.end() && std::all_of(first->begin(), first->end(), [](char c) { return c >= '0' && c <= '9'; })) {
        ++first;
    }
    std::string out;
    for (auto it = first; it != tokens.end(); ++it) {
        if (!out.empty()) out += ' ';
        out += *it;
    }
    return out;
}

std::vector<Section> extract_sections(std::string_view markdown) {
    std::vector<Section> sections;
    std::optional<std::string> fence;
    for (auto raw : split(markdown, '\n')) {
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        const auto line = trim(raw);
        const bool fence_marker = line.starts_with("```") || line.starts_with("~~~");
        if (fence) {
            if (fence_marker && line.starts_with(*fence)) fence.reset();
            if (!sections.empty()) sections.back().has_body = true;
            continue;
        }
        if (fence_marker) {
            fence = std::string(line.substr(0, 3));
            if (!sections.empty()) sections.back().has_body = true;
            continue;
        }
        const auto indent = raw.find_first_not_of(' ');
        if (indent != std::string_view::npos && indent <= 3 && raw[indent] == '#') {
            const auto hashes = raw.find_first_not_of('#', indent);
            const auto level = static_cast<int>((hashes == std::string_view::npos ? raw.size() : hashes) - indent);
            const bool atx = level <= 6 && (hashes == std::string_view::npos || raw[hashes] == ' ' || raw[hashes] == '\t');
            if (atx && level <= 2) {
                auto title = hashes == std::string_view::npos ? std::string_view{} : trim(raw.substr(hashes));
                while (!title.empty() && title.back() == '#') title.remove_suffix(1);
                sections.push_back({level, std::string(trim(title)), false});
                continue;
            }
        }
        if (!line.empty() && !sections.empty()) sections.back().has_body = true;
    }
    return sections;
}

ComplianceReport check_markdown(std::string_view markdown, const std::vector<SectionRule>& rules) {
    const auto sections = extract_sections(markdown);
    ComplianceReport report;
    report.readme_found = true;
    std::size_t required_present = 0;
    for (const auto& rule : rules) {
        std::vector<std::string> names{normalize_heading(rule.name)};
        for (const auto& alias : rule.aliases) names.push_back(normalize_heading(alias));
        Finding finding{rule, SectionStatus::Missing};
        for (const auto& section : sections) {
            const auto title = normalize_heading(section.title);
            if (std::find(names.begin(), names.end(), title) == names.end()) continue;
            if (section.has_body) {
                finding.status = SectionStatus::Present;
                break;
            }
            finding.status = SectionStatus::Empty;
        }
        if (rule.required) {
            ++report.required_total;
            if (finding.status == SectionStatus::Present) {
                ++required_present;
            } else {
                ++report.required_missing;
            }
        }
        report.findings.push_back(std::move(finding));
    }
    report.score = report.required_total == 0
                       ? 1.0
                       : static_cast<double>(required_present) / static_cast<double>(report.required_total);
    return report;
}

ComplianceReport check_repo(const std::filesystem::path& repo, const std::vector<SectionRule>& rules) {
    std::error_code ec;
    if (!std::filesystem::is_directory(repo, ec)) throw Error(ErrorKind::FileNotFound, repo.string() + " is not a directory");

    std::vector<std::filesystem::path> candidates;
    for (const auto& entry : std::filesystem::directory_iterator(repo)) {
        if (entry.is_regular_file() && to_lower(entry.path().filename().string()) == "readme.md") {
            candidates.push_back(entry.path());
        }
    }
    std::sort(candidates.begin(), candidates.end());
    const auto exact = std::find_if(candidates.begin(), candidates.end(),
                                    [](const auto& p) { return p.filename() == "README.md"; });

    if (candidates.empty()) {
        ComplianceReport report;
        report.repo_path = repo;
        for (const auto& rule : rules) {
            report.findings.push_back({rule, SectionStatus::Missing});
            if (rule.required) ++report.required_total;
        }
        report.required_missing = report.required_total;
        report.score = 0.0;
        return report;
    }

    const auto readme = exact != candidates.end() ? *exact : candidates.front();
    std::ifstream in(readme, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    auto report = check_markdown(text.str(), rules);
    report.repo_path = repo;
    report.readme_path = readme;
    return report;
}

std::string to_text(const ComplianceReport& report) {
    std::string out;
    out += "Reproducibility README check (placeholder score: required sections present / required total)\n";
    out += "repository: " + report.repo_path.string() + "\n";
    if (!report.readme_found) {
        out += "NoReadme: no README.md found\n";
    } else {
        out += "readme: " + report.readme_path.filename().string() + "\n";
    }
    for (const auto& f : report.findings) {
        out += "  [" + std::string(to_string(f.status)) + "] " + f.rule.name + (f.rule.required ? "" : " (optional)");
        if (!f.rule.step_tag.empty()) out += " [step " + f.rule.step_tag + "]";
        out += "\n";
    }
    out += "score: " + format_double(report.score) + " (" +
           std::to_string(report.required_total - report.required_missing) + "/" +
           std::to_string(report.required_total) + " required)\n";
    out += std::string("result: ") + (report.passed() ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string to_key_value(const ComplianceReport& report) {
    std::string out;
    out += "scoring = placeholder_required_ratio\n";
    out += std::string("readme_found = ") + (report.readme_found ? "true" : "false") + "\n";
    out += "score = " + format_double(report.score) + "\n";
    out += "required_total = " + std::to_string(report.required_total) + "\n";
    out += "required_missing = " + std::to_string(report.required_missing) + "\n";
    for (const auto& f : report.findings) {
        auto key = normalize_heading(f.rule.name);
        std::replace(key.begin(), key.end(), ' ', '_');
        out += "section." + key + " = " + std::string(to_string(f.status)) + "\n";
    }
    return out;
}

}  // namespace plutus::compliance
