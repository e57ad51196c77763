#pragma once

#include "chaingroup/census.hpp"
#include "chaingroup/verify.hpp"

#include <string>

namespace chaingroup {

enum class OutputFormat { Text, Json, Tsv };

OutputFormat parse_format(const std::string &name);  // "text" | "json" | "tsv"

/// Header metadata stamped on census and verification reports.
struct ReportMeta {
    std::uint64_t seed = kDefaultSeed;
    int limit = kDefaultCensusLimit;
};

struct GroupSummary {
    int n = 0;
    std::vector<Permutation> generators;  // canonical maximal-path order
    Natural order;
    GroupClass cls;
};

GroupSummary summarize_chain_group(const Forest &f, std::size_t cap = kDefaultEnumerationCap);

std::string render_group_summary(const GroupSummary &summary, OutputFormat format);
std::string render_paths(const std::vector<Path> &paths, OutputFormat format);
std::string render_census(const CensusReport &report, OutputFormat format, const ReportMeta &meta);
std::string render_results(const std::vector<VerificationResult> &results, OutputFormat format,
                           const ReportMeta &meta);

} // namespace chaingroup
