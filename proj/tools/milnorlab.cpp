// milnorlab: Newton-boundary invariants, monodromy zeta functions, Puiseux
// branches and critical-curve verdicts for mixed germs f * conj(g).

#include "milnor/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

using namespace milnor;

namespace {

struct JobOptions {
    std::string f, g;
    std::vector<std::string> vars;
    std::int64_t order = 12;
    double tol = 1e-9;
    std::int64_t samples = 4096;
    double radius = 1e-3;
    std::string format = "json";
    std::string out;
};

enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_precondition = 2, exit_inconclusive = 3 };

struct JobResult {
    json doc;
    int code = exit_ok;
};

std::vector<std::string> default_vars(const std::string& command)
{
    if (command == "zeta3h") return {"z1", "z2", "z3"};
    return {"x", "y"};
}

json envelope(const std::string& command, const JobOptions& opt)
{
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["zeta_convention"] = kZetaConvention;
    json job;
    job["command"] = command;
    if (!opt.f.empty()) job["f"] = opt.f;
    if (!opt.g.empty()) job["g"] = opt.g;
    job["variables"] = opt.vars;
    job["options"] = json{{"order", opt.order},
                          {"tol", opt.tol},
                          {"samples", opt.samples},
                          {"radius", opt.radius},
                          {"format", opt.format}};
    j["job"] = std::move(job);
    return j;
}

JobResult run_job(const std::string& command, JobOptions opt)
{
    if (opt.vars.empty()) opt.vars = default_vars(command);
    json doc = envelope(command, opt);
    try {
        const bool needs_g = command == "multcond" || command == "zeta-mixed" ||
                             command == "zeta3h" || command == "jacobian" ||
                             command == "fibration";
        if (opt.f.empty()) throw parse_error("missing -f expression");
        if (needs_g && opt.g.empty())
            throw parse_error("command '" + command + "' requires -g");

        const Polynomial f = parse_polynomial(opt.f, opt.vars);
        Polynomial g;
        if (!opt.g.empty()) g = parse_polynomial(opt.g, opt.vars);

        int code = exit_ok;
        json result;
        if (command == "newton") {
            result = to_json(newton_boundary(f));
        } else if (command == "multcond") {
            result = to_json(multiplicity_condition(f, g));
        } else if (command == "zeta") {
            result = to_json(zeta_plane(f));
        } else if (command == "zeta-mixed") {
            result = to_json(zeta_mixed_plane(f, g));
        } else if (command == "zeta3h") {
            result = to_json(zeta_mixed_homog3(f, g));
        } else if (command == "jacobian") {
            const Polynomial J = jacobian(f, g);
            result["jacobian"] = J.str();
            result["support"] = support_of(J);
        } else if (command == "puiseux") {
            const BranchesResult br = branches(f, opt.order);
            result = to_json(br);
        } else if (command == "fibration") {
            FibrationOptions fo;
            fo.truncation = opt.order;
            fo.tol = opt.tol;
            const FibrationReport rep = fibration_verdict(f, g, fo);
            result = to_json(rep);
            if (rep.verdict == FibrationVerdictKind::inconclusive) code = exit_inconclusive;
        } else {
            throw parse_error("unknown command '" + command + "'");
        }
        doc["result"] = std::move(result);
        return {std::move(doc), code};
    } catch (const parse_error& e) {
        doc["error"] = e.what();
        return {std::move(doc), exit_input};
    } catch (const precondition_error& e) {
        doc["error"] = e.what();
        return {std::move(doc), exit_precondition};
    } catch (const truncation_error& e) {
        doc["error"] = e.what();
        return {std::move(doc), exit_inconclusive};
    } catch (const std::exception& e) {
        doc["error"] = e.what();
        return {std::move(doc), exit_input};
    }
}

int batch_threads()
{
    if (const char* env = std::getenv("MILNORLAB_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

JobResult run_batch(const std::string& path, const JobOptions& defaults)
{
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["zeta_convention"] = kZetaConvention;
    json jobs_in;
    try {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open job file '" + path + "'");
        in >> jobs_in;
        if (!jobs_in.is_array()) throw parse_error("job file must hold a JSON array");
    } catch (const json::exception& e) {
        doc["error"] = std::string("malformed job file: ") + e.what();
        return {std::move(doc), exit_input};
    } catch (const parse_error& e) {
        doc["error"] = e.what();
        return {std::move(doc), exit_input};
    }

    struct Parsed {
        std::string command;
        JobOptions opt;
        std::optional<std::string> error;
    };
    std::vector<Parsed> jobs;
    for (const auto& je : jobs_in) {
        Parsed p;
        p.opt = defaults;
        p.opt.out.clear();
        try {
            if (!je.is_object()) throw parse_error("job entries must be objects");
            p.command = je.at("command").get<std::string>();
            if (je.contains("f")) p.opt.f = je["f"].get<std::string>();
            if (je.contains("g")) p.opt.g = je["g"].get<std::string>();
            if (je.contains("variables")) p.opt.vars = je["variables"].get<std::vector<std::string>>();
            else p.opt.vars.clear();
            if (je.contains("order")) p.opt.order = je["order"].get<std::int64_t>();
            if (je.contains("tol")) p.opt.tol = je["tol"].get<double>();
            if (je.contains("samples")) p.opt.samples = je["samples"].get<std::int64_t>();
            if (je.contains("radius")) p.opt.radius = je["radius"].get<double>();
        } catch (const std::exception& e) {
            p.error = std::string("malformed job: ") + e.what();
        }
        jobs.push_back(std::move(p));
    }

    std::vector<JobResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    const int nthreads = std::min<int>(batch_threads(), std::max<std::size_t>(jobs.size(), 1));
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            if (jobs[i].error) {
                json jd;
                jd["error"] = *jobs[i].error;
                results[i] = {std::move(jd), exit_input};
            } else {
                results[i] = run_job(jobs[i].command, jobs[i].opt);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int overall = exit_ok;
    json out_jobs = json::array();
    for (auto& r : results) {
        r.doc["exit"] = r.code;
        overall = std::max(overall, r.code);
        out_jobs.push_back(std::move(r.doc));
    }
    doc["jobs"] = std::move(out_jobs);
    return {std::move(doc), overall};
}

int emit(const JobResult& r, const JobOptions& opt)
{
    std::string text;
    if (opt.format == "text")
        text = render_text(r.doc);
    else
        text = r.doc.dump(2) + "\n";
    if (!opt.out.empty()) {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write to '" << opt.out << "'\n";
            return exit_input;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return r.code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Newton-boundary invariants, monodromy zeta functions and "
                 "critical-curve verdicts for mixed germs f*conj(g)"};
    app.require_subcommand(1);

    JobOptions opt;
    std::string batch_file;
    std::string vars_csv;

    auto add_common = [&](CLI::App* sub, bool with_f, bool with_g) {
        if (with_f) sub->add_option("-f,--f", opt.f, "polynomial expression for f");
        if (with_g) sub->add_option("-g,--g", opt.g, "polynomial expression for g");
        sub->add_option("--vars", vars_csv, "comma-separated variable names");
        sub->add_option("--order", opt.order, "series truncation order")->capture_default_str();
        sub->add_option("--tol", opt.tol, "unit-modulus tolerance")->capture_default_str();
        sub->add_option("--samples", opt.samples, "circle sample count")->capture_default_str();
        sub->add_option("--radius", opt.radius, "circle radius")->capture_default_str();
        sub->add_option("--format", opt.format, "json|text")->capture_default_str();
        sub->add_option("--out", opt.out, "output path (default stdout)");
    };

    const std::vector<std::pair<std::string, std::string>> cmds = {
        {"newton", "Newton boundary, faces, intercepts"},
        {"multcond", "Newton multiplicity condition with witness"},
        {"zeta", "zeta function of a plane-curve germ"},
        {"zeta-mixed", "zeta function of the mixed germ f*conj(g)"},
        {"zeta3h", "zeta of a homogeneous 3-variable mixed pair"},
        {"jacobian", "Jacobian curve J(f,g)"},
        {"puiseux", "Puiseux branches of f = 0"},
        {"fibration", "fibration-obstruction verdict for f*conj(g)"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, desc] : cmds) {
        CLI::App* sub = app.add_subcommand(name, desc);
        const bool with_g = name == "multcond" || name == "zeta-mixed" || name == "zeta3h" ||
                            name == "jacobian" || name == "fibration";
        add_common(sub, true, with_g);
        subs.push_back(sub);
    }
    CLI::App* batch = app.add_subcommand("batch", "run a JSON job file");
    batch->add_option("jobfile", batch_file, "path to a JSON array of jobs")->required();
    add_common(batch, false, false);

    CLI11_PARSE(app, argc, argv);

    if (!vars_csv.empty()) {
        opt.vars.clear();
        std::string cur;
        for (char c : vars_csv) {
            if (c == ',') {
                if (!cur.empty()) opt.vars.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        if (!cur.empty()) opt.vars.push_back(cur);
    }

    JobResult result;
    if (batch->parsed()) {
        result = run_batch(batch_file, opt);
    } else {
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i]->parsed()) result = run_job(cmds[i].first, opt);
    }
    return emit(result, opt);
}
