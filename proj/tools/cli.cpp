#include "cli.hpp"

#include "suites.hpp"

#include "sodlab/sodlab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace sodlab::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json big_json(const BigInt& v)
{
    static const BigInt limit = (BigInt(1) << 53) - 1;
    if (v > limit || v < -limit)
        return v.str();
    return static_cast<long long>(v);
}

Json component_json(const SodComponent& c)
{
    return Json{{"i", c.i},
                {"lambda", c.lambda.csv()},
                {"aSequence", c.aSequence},
                {"target", c.target},
                {"kernel", c.kernel}};
}

Json table_json(const DecompositionTable& t)
{
    Json rows = Json::array();
    for (const TableRow& r : t.rows) {
        Json row{{"copies", r.copies}, {"target", r.target}, {"indexRange", r.indexRange}};
        row["virtualDim"] = r.virtualDim ? Json(*r.virtualDim) : Json(nullptr);
        rows.push_back(row);
    }
    Json out{{"rows", rows}, {"orderNote", t.orderNote}, {"componentCount", t.component_count()}};
    if (t.sourceVirtualDim)
        out["sourceVirtualDim"] = *t.sourceVirtualDim;
    return out;
}

/* Output sink shared by every command. */
struct Output {
    bool json = false;
    std::string outPath;

    std::ostream* out = nullptr;
    std::ostream* err = nullptr;

    bool wants_json() const { return json || !outPath.empty(); }

    void emit(const std::string& command, const Json& parameters, const Json& results,
              const std::vector<Check>& checks, Clock::time_point start) const
    {
        Json report;
        report["command"] = command;
        report["parameters"] = parameters;
        report["results"] = results;
        Json arr = Json::array();
        for (const Check& c : checks)
            arr.push_back(Json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
        report["checks"] = arr;
        report["elapsedMillis"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        const std::string text = report.dump(2);
        if (outPath.empty()) {
            *out << text << "\n";
            return;
        }
        std::ofstream f(outPath);
        if (!f)
            throw UsageError("cannot write " + outPath);
        f << text << "\n";
    }
};

void add_output_flags(CLI::App* cmd, Output& o)
{
    cmd->add_flag("--json", o.json, "Emit a JSON report");
    cmd->add_option("--out", o.outPath, "Write the JSON report to this path");
}

int jobs_from_env(int flag)
{
    if (flag > 0)
        return flag;
    if (const char* env = std::getenv("SODLAB_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v > 0)
                return v;
        } catch (const std::exception&) {
            throw UsageError(std::string("SODLAB_JOBS is not a positive integer: ") + env);
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int count_status(const std::vector<Check>& checks, const std::string& status)
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [&](const Check& c) { return c.status == status; }));
}

/* ---- commands ---- */

int cmd_straighten(const std::string& weightText, bool oracle, const Output& o, Clock::time_point start)
{
    IntegerWeight w;
    try {
        w = IntegerWeight::parse_csv(weightText);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --weight: ") + e.what());
    }
    if (w.rank() == 0)
        throw UsageError("--weight must have at least one entry");
    BottOutcome b = straighten(w);
    std::vector<Check> checks;
    if (oracle) {
        if (w.rank() > 6)
            throw UsageError("--oracle supports rank <= 6");
        const bool agree = bott_euler_character(b, w.rank()) == alternant_oracle(w);
        checks.push_back(Check{"alternant oracle", agree ? "pass" : "fail",
                               agree ? "characters agree" : "characters differ"});
    }
    if (o.wants_json()) {
        Json res{{"weight", w.csv()}, {"vanishing", b.vanishing}};
        if (!b.vanishing) {
            res["dominant"] = b.dominant.csv();
            res["shift"] = b.shift;
            res["dimension"] = big_json(weyl_dimension(b.dominant));
        }
        res["outcome"] = b.str();
        o.emit("bwb straighten", Json{{"weight", w.csv()}, {"oracle", oracle}}, res, checks, start);
    } else {
        *o.out << b.str() << "\n";
        for (const Check& c : checks)
            *o.out << "oracle: " << c.detail << "\n";
    }
    return exit_status(checks);
}

int cmd_sod_list(int r, int d, const Output& o, Clock::time_point start)
{
    if (r < 0 || d < 1)
        throw UsageError("sod list needs --r >= 0 and --d >= 1");
    if (r > 12 || d > 24)
        throw UsageError("sod list supports r <= 12 and d <= 24");
    std::vector<SodComponent> comps = enumerate_components(r, d);
    if (o.wants_json()) {
        Json arr = Json::array();
        for (const SodComponent& c : comps)
            arr.push_back(component_json(c));
        o.emit("sod list", Json{{"r", r}, {"d", d}}, arr, {}, start);
        return 0;
    }
    for (const SodComponent& c : comps) {
        std::string a = "[";
        for (std::size_t k = 0; k < c.aSequence.size(); ++k)
            a += (k ? "," : "") + std::to_string(c.aSequence[k]);
        a += "]";
        *o.out << c.label() << "  a=" << a << "  " << c.target << "  " << c.kernel << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, int jobsFlag, const Output& o,
               Clock::time_point start)
{
    std::vector<Task> tasks;
    try {
        tasks = build_tasks(suite, opts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const int jobs = jobs_from_env(jobsFlag);
    std::vector<Check> checks = run_tasks(tasks, jobs);
    const int pass = count_status(checks, "pass"), fail = count_status(checks, "fail"),
              inconclusive = count_status(checks, "inconclusive");

    if (o.wants_json()) {
        Json params{{"suite", suite}, {"seed", opts.seed}, {"jobs", jobs}};
        if (opts.n)
            params["n"] = *opts.n;
        if (opts.m)
            params["m"] = *opts.m;
        if (opts.d)
            params["d"] = *opts.d;
        if (opts.cutoff)
            params["cutoff"] = *opts.cutoff;
        if (opts.maxRank)
            params["maxRank"] = *opts.maxRank;
        Json res{{"suite", suite},
                 {"checkCount", checks.size()},
                 {"passed", pass},
                 {"failed", fail},
                 {"inconclusive", inconclusive}};
        o.emit("verify", params, res, checks, start);
    } else {
        for (const Check& c : checks)
            *o.out << "[" << c.status << "] " << c.name << ": " << c.detail << "\n";
        *o.out << suite << ": " << pass << " passed, " << fail << " failed, " << inconclusive
               << " inconclusive\n";
    }
    return exit_status(checks);
}

void print_table(std::ostream& out, const DecompositionTable& t)
{
    out << std::left << std::setw(8) << "copies" << std::setw(20) << "target" << std::setw(8) << "index"
        << "vdim\n";
    for (const TableRow& r : t.rows) {
        std::string idx;
        for (std::size_t k = 0; k < r.indexRange.size(); ++k)
            idx += (k ? "," : "") + std::to_string(r.indexRange[k]);
        out << std::left << std::setw(8) << r.copies << std::setw(20) << r.target << std::setw(8) << idx
            << (r.virtualDim ? std::to_string(*r.virtualDim) : "-") << "\n";
    }
    out << "components: " << t.component_count() << "\n";
    out << "order: " << t.orderNote << "\n";
}

int cmd_table(const std::string& command, const Json& params, const DecompositionTable& t, const std::string& header,
              const Output& o, Clock::time_point start)
{
    if (o.wants_json()) {
        o.emit(command, params, table_json(t), {}, start);
        return 0;
    }
    if (!header.empty())
        *o.out << header << "\n";
    print_table(*o.out, t);
    return 0;
}

template <typename F>
auto library_call(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const auto start = Clock::now();
    CLI::App app{"Decompositions of derived Grassmannians at the level of characters", "sodlab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    Output output;
    output.out = &out;
    output.err = &err;

    // bwb
    CLI::App* bwb = app.add_subcommand("bwb", "Borel-Weil-Bott computations");
    bwb->require_subcommand(1);
    CLI::App* straight = bwb->add_subcommand("straighten", "Straighten a weight by the dot action");
    std::string weightText;
    bool oracle = false;
    straight->add_option("--weight", weightText, "Weight as comma separated integers")->required();
    straight->add_flag("--oracle", oracle, "Compare against the alternant quotient");
    add_output_flags(straight, output);

    // sod
    CLI::App* sod = app.add_subcommand("sod", "Semiorthogonal components");
    sod->require_subcommand(1);
    CLI::App* list = sod->add_subcommand("list", "List components in decomposition order");
    int sodR = 0, sodD = 0;
    list->add_option("--r", sodR, "Rank r = n - m")->required();
    list->add_option("--d", sodD, "Grassmannian rank d")->required();
    add_output_flags(list, output);

    // verify
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    VerifyOptions vopts;
    int jobs = 0;
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--n", vopts.n, "n");
    verify->add_option("--m", vopts.m, "m");
    verify->add_option("--d", vopts.d, "d");
    verify->add_option("--cutoff", vopts.cutoff, "Degree cutoff");
    verify->add_option("--max-rank", vopts.maxRank, "Largest rank");
    verify->add_option("--seed", vopts.seed, "Seed for sampled checks")->capture_default_str();
    verify->add_option("--jobs", jobs, "Worker threads (falls back to SODLAB_JOBS)");
    add_output_flags(verify, output);

    // apps
    CLI::App* apps = app.add_subcommand("apps", "Application tables");
    apps->require_subcommand(1);
    CLI::App* curves = apps->add_subcommand("curves", "Linear series on a curve");
    int cg = 0, cd = 0, cr = 0;
    curves->add_option("--g", cg, "Genus")->required();
    curves->add_option("--d", cd, "Degree")->required();
    curves->add_option("--r", cr, "Rank")->required();
    add_output_flags(curves, output);

    CLI::App* blowup = apps->add_subcommand("blowup", "Blowup along a determinantal subscheme");
    int br = 0;
    blowup->add_option("--r", br, "r")->required();
    add_output_flags(blowup, output);

    CLI::App* reducible = apps->add_subcommand("reducible", "Reducible schemes");
    int rr = 0;
    reducible->add_option("--r", rr, "r")->required();
    add_output_flags(reducible, output);

    CLI::App* vdim = apps->add_subcommand("vdim", "Virtual dimensions");
    long dimX = 0, vr = 0, dPlus = 0, dMinus = 0;
    bool verbose = false;
    vdim->add_option("--dimx", dimX, "dim X")->required();
    vdim->add_option("--r", vr, "r")->required();
    vdim->add_option("--dplus", dPlus, "d+")->required();
    vdim->add_option("--dminus", dMinus, "d-")->required();
    vdim->add_flag("--verbose", verbose, "Also report the incidence value without the factor r");
    add_output_flags(vdim, output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (straight->parsed())
            return cmd_straighten(weightText, oracle, output, start);
        if (list->parsed())
            return cmd_sod_list(sodR, sodD, output, start);
        if (verify->parsed())
            return cmd_verify(suite, vopts, jobs, output, start);
        if (curves->parsed()) {
            DecompositionTable t = library_call([&] { return curves_table(cg, cd, cr); });
            std::string header = "source: G^" + std::to_string(cr) + "_" + std::to_string(cd) + "(C)  vdim " +
                                 std::to_string(*t.sourceVirtualDim);
            return cmd_table("apps curves", Json{{"g", cg}, {"d", cd}, {"r", cr}}, t, header, output, start);
        }
        if (blowup->parsed()) {
            DecompositionTable t = library_call([&] { return blowup_table(br); });
            return cmd_table("apps blowup", Json{{"r", br}}, t, "", output, start);
        }
        if (reducible->parsed()) {
            DecompositionTable t = library_call([&] { return reducible_table(rr); });
            return cmd_table("apps reducible", Json{{"r", rr}}, t, "", output, start);
        }
        if (vdim->parsed()) {
            VirtualDims v = library_call([&] { return virtual_dimensions(dimX, vr, dPlus, dMinus); });
            if (output.wants_json()) {
                Json res{{"grass", v.grass}, {"dualGrass", v.dualGrass}, {"incidence", v.incidence}};
                if (verbose)
                    res["printedIncidence"] = v.printedIncidence;
                output.emit("apps vdim",
                            Json{{"dimx", dimX}, {"r", vr}, {"dplus", dPlus}, {"dminus", dMinus}}, res, {}, start);
            } else {
                out << "(" << v.grass << "," << v.dualGrass << "," << v.incidence << ")\n";
                if (verbose) {
                    out << "Grass(E;d+)        " << v.grass << "\n";
                    out << "Grass(E^∨[1];d-)   " << v.dualGrass << "\n";
                    out << "incidence          " << v.incidence << "\n";
                    out << "incidence (no r)   " << v.printedIncidence << "\n";
                }
            }
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 2;
}

} // namespace sodlab::cli
