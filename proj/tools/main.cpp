// Command-line front end: verify the catalog, run transformation pipelines,
// evaluate residuals of user-supplied solutions, inspect entries, and decide
// Okamoto reachability.
//
// Exit codes: 0 success, 1 mathematical failure, 2 usage/input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>

#include "pvi/branching.hpp"
#include "pvi/cascades.hpp"
#include "pvi/catalog.hpp"
#include "pvi/errors.hpp"
#include "pvi/pipeline.hpp"
#include "pvi/reachability.hpp"
#include "pvi/report.hpp"
#include "pvi/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

unsigned env_default_digits() {
    if (const char* v = std::getenv("PVI_PRECISION")) {
        int d = std::atoi(v);
        if (d >= 10 && d <= 10000) return static_cast<unsigned>(d);
    }
    return pvi::kDefaultDigits;
}

int cmd_verify(const std::string& entry_id, bool all, unsigned digits, unsigned samples,
               const std::string& format, unsigned jobs) {
    using namespace pvi;
    std::vector<const CatalogEntry*> selected;
    if (all) {
        for (const auto& e : load_catalog()) selected.push_back(&e);
    } else {
        if (!catalog_has(entry_id)) {
            std::cerr << "unknown entry id: " << entry_id << "\n";
            return kExitUsage;
        }
        selected.push_back(&catalog_entry(entry_id));
    }
    set_working_digits(digits);
    std::vector<VerifyReport> reports(selected.size());
    if (jobs <= 1 || selected.size() == 1) {
        for (std::size_t i = 0; i < selected.size(); ++i)
            reports[i] = verify_entry(*selected[i], kDefaultTermBudget, samples, digits);
    } else {
        // fan out entries across workers; reports are emitted in id order
        std::vector<std::future<VerifyReport>> futs;
        for (const CatalogEntry* e : selected)
            futs.push_back(std::async(std::launch::async, [=] {
                return verify_entry(*e, kDefaultTermBudget, samples, digits);
            }));
        for (std::size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
    }
    bool ok = true;
    for (const auto& rep : reports) {
        ok = ok && rep.passed;
        std::cout << (format == "json-lines" ? report_json(rep) : report_text(rep)) << "\n";
    }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_transform(const std::string& entry_id, const std::string& pipeline_text,
                  const std::string& out_path, unsigned digits, unsigned samples) {
    using namespace pvi;
    if (!catalog_has(entry_id)) {
        std::cerr << "unknown entry id: " << entry_id << "\n";
        return kExitUsage;
    }
    std::vector<TransformStep> steps;
    try {
        steps = parse_pipeline(pipeline_text);
    } catch (const ParseError& e) {
        std::cerr << "bad pipeline: " << e.what() << "\n";
        return kExitUsage;
    }
    const CatalogEntry& src = catalog_entry(entry_id);
    ParamSolution cur = src.solution;
    RootResolver roots;
    for (const auto& st : steps) {
        try {
            cur = apply_pipeline(cur, {st}, &roots);
        } catch (const Error& e) {
            std::cerr << "step " << st.str() << " failed: " << e.what() << "\n";
            return kExitMathFailure;
        }
    }
    std::cout << "theta = " << cur.theta.str() << "\n";
    std::cout << "tower: " << cur.tower->describe() << "\n";
    VerifyReport rep = verify_solution(cur, kDefaultTermBudget, samples, digits);
    std::cout << report_text(rep) << "\n";
    if (!out_path.empty()) {
        CatalogEntry out_entry;
        out_entry.id = entry_id + "+" + pipeline_text;
        out_entry.source = "pipeline output";
        out_entry.solution = cur;
        std::ofstream out(out_path, std::ios::binary);
        out << entry_to_fixture(out_entry);
        std::cout << "wrote " << out_path << "\n";
    }
    return rep.passed ? kExitOk : kExitMathFailure;
}

int cmd_residual(const std::string& path, unsigned digits, unsigned samples,
                 const std::string& format) {
    using namespace pvi;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitUsage;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CatalogEntry entry;
    try {
        entry = entry_from_fixture(text);
    } catch (const Error& e) {
        std::cerr << "bad fixture: " << e.what() << "\n";
        return kExitUsage;
    }
    set_working_digits(digits);
    VerifyReport rep;
    try {
        rep = verify_entry(entry, kDefaultTermBudget, samples, digits);
    } catch (const Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    std::cout << (format == "json-lines" ? report_json(rep) : report_text(rep)) << "\n";
    return rep.passed ? kExitOk : kExitMathFailure;
}

int cmd_catalog(const std::string& action, const std::string& id, const std::string& dir) {
    using namespace pvi;
    if (action == "list") {
        for (const auto& e : load_catalog())
            std::cout << e.id << "  theta=" << e.theta().str() << "  degree=" << e.claimed_degree
                      << " genus=" << e.claimed_genus << "\n";
        return kExitOk;
    }
    if (action == "show") {
        if (!catalog_has(id)) {
            std::cerr << "unknown entry id: " << id << "\n";
            return kExitUsage;
        }
        std::cout << entry_to_fixture(catalog_entry(id));
        return kExitOk;
    }
    if (action == "export") {
        for (const auto& e : load_catalog()) {
            std::string path = dir + "/" + e.id + ".fix";
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << path << "\n";
                return kExitUsage;
            }
            out << entry_to_fixture(e);
        }
        std::cout << "wrote " << load_catalog().size() << " fixtures to " << dir << "\n";
        return kExitOk;
    }
    if (action == "branching") {
        if (!catalog_has(id)) {
            std::cerr << "unknown entry id: " << id << "\n";
            return kExitUsage;
        }
        try {
            BranchPattern bp = branching(catalog_entry(id));
            auto show = [](const char* name, const std::vector<long>& v) {
                std::cout << name << ": {";
                for (std::size_t i = 0; i < v.size(); ++i)
                    std::cout << (i ? "," : "") << v[i];
                std::cout << "}\n";
            };
            std::cout << "degree " << bp.degree << "\n";
            show("t=0", bp.zeros);
            show("t=1", bp.ones);
            show("t=inf", bp.poles);
        } catch (const Error& e) {
            std::cerr << "branching failed: " << e.what() << "\n";
            return kExitMathFailure;
        }
        return kExitOk;
    }
    std::cerr << "catalog actions: list, show, export, branching\n";
    return kExitUsage;
}

int cmd_reachable(long k0, long k1, long kt, long ki) {
    std::cout << pvi::to_string(pvi::schlesinger_reachable(k0, k1, kt, ki)) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetry engine for the sixth Painleve equation"};
    app.require_subcommand(1);
    unsigned digits = env_default_digits();
    unsigned samples = pvi::kDefaultSamples;

    std::string entry_id, format = "text", pipeline_text, out_path, fixture_path;
    bool all = false;
    unsigned jobs = 1;

    auto* verify = app.add_subcommand("verify", "Verify catalog entries against the equation");
    verify->add_option("--entry", entry_id, "Entry id");
    verify->add_flag("--all", all, "Verify every entry");
    verify->add_option("--precision", digits, "Decimal digits for the numeric path");
    verify->add_option("--samples", samples, "Sample count for the numeric path");
    verify->add_option("--format", format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    verify->add_option("--jobs", jobs, "Parallel workers for --all");

    auto* transform = app.add_subcommand("transform", "Apply a transformation pipeline");
    transform->add_option("--entry", entry_id, "Source entry id")->required();
    transform->add_option("--pipeline", pipeline_text, "Comma-separated steps")->required();
    transform->add_option("--out", out_path, "Write the result as a fixture file");
    transform->add_option("--precision", digits, "Decimal digits for the numeric path");
    transform->add_option("--samples", samples, "Sample count for the numeric path");

    auto* residual = app.add_subcommand("residual", "Check a user-supplied fixture file");
    residual->add_option("file", fixture_path, "Fixture path")->required();
    residual->add_option("--precision", digits, "Decimal digits for the numeric path");
    residual->add_option("--samples", samples, "Sample count for the numeric path");
    residual->add_option("--format", format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));

    std::string cat_action = "list", cat_dir = ".";
    auto* catalog = app.add_subcommand("catalog", "Inspect or export the catalog");
    catalog->add_option("action", cat_action, "list | show | export | branching");
    catalog->add_option("id", entry_id, "Entry id for show/branching");
    catalog->add_option("--dir", cat_dir, "Output directory for export");

    long k0 = 0, k1 = 0, kt = 0, ki = 0;
    auto* reachable = app.add_subcommand("reachable", "Classify an integer theta-shift");
    reachable->add_option("k0", k0)->required();
    reachable->add_option("k1", k1)->required();
    reachable->add_option("kt", kt)->required();
    reachable->add_option("kinf", ki)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (!all && entry_id.empty()) {
                std::cerr << "verify needs --entry <id> or --all\n";
                return kExitUsage;
            }
            return cmd_verify(entry_id, all, digits, samples, format, jobs);
        }
        if (transform->parsed())
            return cmd_transform(entry_id, pipeline_text, out_path, digits, samples);
        if (residual->parsed()) return cmd_residual(fixture_path, digits, samples, format);
        if (catalog->parsed()) return cmd_catalog(cat_action, entry_id, cat_dir);
        if (reachable->parsed()) return cmd_reachable(k0, k1, kt, ki);
    } catch (const pvi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
