#include "chaingroup/report.hpp"

#include "chaingroup/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace chaingroup {

namespace {

using ordered_json = nlohmann::ordered_json;

const char *tag_name(GroupClass::Tag tag) {
    switch (tag) {
    case GroupClass::Tag::Trivial: return "Trivial";
    case GroupClass::Tag::Cyclic: return "Cyclic";
    case GroupClass::Tag::ProductOfCyclics: return "ProductOfCyclics";
    case GroupClass::Tag::Alternating: return "Alternating";
    case GroupClass::Tag::Symmetric: return "Symmetric";
    case GroupClass::Tag::Dihedral: return "Dihedral";
    case GroupClass::Tag::Other: return "Other";
    }
    return "?";
}

ordered_json class_json(const GroupClass &cls) {
    ordered_json j;
    j["tag"] = tag_name(cls.tag);
    j["params"] = cls.params;
    j["order"] = cls.order.str();
    j["abelian"] = cls.abelian;
    j["transitive"] = cls.transitive;
    return j;
}

std::string edges_string(const std::vector<Edge> &edges) {
    if (edges.empty())
        return "(no edges)";
    std::ostringstream out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << (i ? " " : "") << edges[i].first << '-' << edges[i].second;
    return out.str();
}

const char *status_name(VerifyStatus status) {
    switch (status) {
    case VerifyStatus::Pass: return "PASS";
    case VerifyStatus::Fail: return "FAIL";
    case VerifyStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

std::string header_text(const ReportMeta &meta) {
    std::ostringstream out;
    out << "# chaingroup " << kVersion << "  seed=0x" << std::hex << meta.seed << std::dec
        << "  census-limit=" << meta.limit << '\n';
    return out.str();
}

ordered_json meta_json(const ReportMeta &meta) {
    ordered_json j;
    j["version"] = kVersion;
    j["seed"] = meta.seed;
    j["census_limit"] = meta.limit;
    return j;
}

ordered_json counterexample_json(const Counterexample &ce) {
    ordered_json j;
    j["n"] = ce.forest.vertex_count();
    ordered_json edges = ordered_json::array();
    for (const auto &e : ce.forest.edges())
        edges.push_back({e.first, e.second});
    j["edges"] = edges;
    j["expected"] = ce.expected;
    j["actual"] = ce.actual;
    return j;
}

} // namespace

OutputFormat parse_format(const std::string &name) {
    if (name == "text")
        return OutputFormat::Text;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "tsv")
        return OutputFormat::Tsv;
    throw ParseError("unknown output format '" + name + "' (use text, json or tsv)");
}

GroupSummary summarize_chain_group(const Forest &f, std::size_t cap) {
    GroupSummary summary;
    summary.n = f.vertex_count();
    summary.generators = chain_generators(f);
    const PermGroup g(f.vertex_count(), summary.generators);
    summary.order = g.order();
    summary.cls = identify(g, cap);
    return summary;
}

std::string render_group_summary(const GroupSummary &summary, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: {
        std::ostringstream out;
        out << "n: " << summary.n << '\n';
        out << "generators:";
        if (summary.generators.empty())
            out << " (none)";
        out << '\n';
        for (const auto &gen : summary.generators)
            out << "  " << gen.cycle_string() << '\n';
        out << "order: " << summary.order.str() << '\n';
        out << "class: " << summary.cls.to_string() << '\n';
        return out.str();
    }
    case OutputFormat::Json: {
        ordered_json j;
        j["n"] = summary.n;
        j["order"] = summary.order.str();
        j["tag"] = tag_name(summary.cls.tag);
        j["params"] = summary.cls.params;
        j["abelian"] = summary.cls.abelian;
        j["transitive"] = summary.cls.transitive;
        ordered_json gens = ordered_json::array();
        for (const auto &gen : summary.generators)
            gens.push_back(gen.cycle_string());
        j["generators"] = gens;
        return j.dump() + "\n";
    }
    case OutputFormat::Tsv: {
        std::ostringstream out;
        out << "n\torder\tclass\tgenerators\n";
        out << summary.n << '\t' << summary.order.str() << '\t' << summary.cls.to_string() << '\t';
        for (std::size_t i = 0; i < summary.generators.size(); ++i)
            out << (i ? " " : "") << summary.generators[i].cycle_string();
        out << '\n';
        return out.str();
    }
    }
    return {};
}

std::string render_paths(const std::vector<Path> &paths, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text:
    case OutputFormat::Tsv: {
        const char sep = format == OutputFormat::Tsv ? '\t' : ' ';
        std::ostringstream out;
        for (const auto &path : paths) {
            for (std::size_t i = 0; i < path.vertices.size(); ++i)
                out << (i ? std::string(1, sep) : "") << path.vertices[i];
            out << '\n';
        }
        return out.str();
    }
    case OutputFormat::Json: {
        ordered_json j = ordered_json::array();
        for (const auto &path : paths)
            j.push_back(path.vertices);
        return j.dump() + "\n";
    }
    }
    return {};
}

std::string render_census(const CensusReport &report, OutputFormat format, const ReportMeta &meta) {
    switch (format) {
    case OutputFormat::Text: {
        std::ostringstream out;
        out << header_text(meta);
        out << "census n=" << report.n << "  forests=" << report.total << '\n';
        for (const auto &[cls, entry] : report.tally)
            out << "  " << cls.to_string() << ": " << entry.count
                << "  (example: " << edges_string(entry.example) << ")\n";
        return out.str();
    }
    case OutputFormat::Json: {
        ordered_json j = meta_json(meta);
        j["n"] = report.n;
        j["total"] = report.total;
        ordered_json classes = ordered_json::array();
        for (const auto &[cls, entry] : report.tally) {
            ordered_json row = class_json(cls);
            row["count"] = entry.count;
            ordered_json edges = ordered_json::array();
            for (const auto &e : entry.example)
                edges.push_back({e.first, e.second});
            row["example_edges"] = edges;
            classes.push_back(row);
        }
        j["classes"] = classes;
        return j.dump() + "\n";
    }
    case OutputFormat::Tsv: {
        std::ostringstream out;
        out << header_text(meta);
        out << "# census n=" << report.n << " total=" << report.total << '\n';
        out << "class\tcount\torder\tabelian\ttransitive\texample\n";
        for (const auto &[cls, entry] : report.tally)
            out << cls.to_string() << '\t' << entry.count << '\t' << cls.order.str() << '\t'
                << (cls.abelian ? "yes" : "no") << '\t' << (cls.transitive ? "yes" : "no") << '\t'
                << edges_string(entry.example) << '\n';
        return out.str();
    }
    }
    return {};
}

std::string render_results(const std::vector<VerificationResult> &results, OutputFormat format,
                           const ReportMeta &meta) {
    switch (format) {
    case OutputFormat::Text: {
        std::ostringstream out;
        for (const auto &result : results) {
            out << status_name(result.status) << ' ' << result.theorem << ' ' << result.params;
            if (result.status != VerifyStatus::Skipped)
                out << ": " << result.instances << " instances";
            out << "  (" << result.elapsed_seconds << "s)\n";
            if (result.counterexample) {
                const auto &ce = *result.counterexample;
                out << "  counterexample: n=" << ce.forest.vertex_count() << " edges "
                    << edges_string(ce.forest.edges()) << '\n';
                out << "    expected: " << ce.expected << '\n';
                out << "    actual:   " << ce.actual << '\n';
            }
        }
        return out.str();
    }
    case OutputFormat::Json: {
        ordered_json j = meta_json(meta);
        ordered_json rows = ordered_json::array();
        for (const auto &result : results) {
            ordered_json row;
            row["theorem"] = result.theorem;
            row["params"] = result.params;
            row["status"] = status_name(result.status);
            row["instances"] = result.instances;
            row["elapsed_seconds"] = result.elapsed_seconds;
            row["counterexample"] =
                result.counterexample ? counterexample_json(*result.counterexample) : ordered_json(nullptr);
            rows.push_back(row);
        }
        j["results"] = rows;
        return j.dump() + "\n";
    }
    case OutputFormat::Tsv: {
        std::ostringstream out;
        out << header_text(meta);
        out << "theorem\tparams\tstatus\tinstances\telapsed_seconds\tcounterexample\n";
        for (const auto &result : results) {
            out << result.theorem << '\t' << result.params << '\t' << status_name(result.status) << '\t'
                << result.instances << '\t' << result.elapsed_seconds << '\t';
            if (result.counterexample)
                out << edges_string(result.counterexample->forest.edges())
                    << " | expected: " << result.counterexample->expected
                    << " | actual: " << result.counterexample->actual;
            else
                out << "-";
            out << '\n';
        }
        return out.str();
    }
    }
    return {};
}

} // namespace chaingroup
