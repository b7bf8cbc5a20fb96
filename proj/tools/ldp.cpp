// ldp: enumerate, certify and tabulate log del Pezzo hypersurfaces in P(w0,w1,w2,w3).

#include "ldp/catalog.hpp"
#include "ldp/klt.hpp"
#include "ldp/reproduce.hpp"
#include "ldp/search.hpp"
#include "ldp/serialize.hpp"
#include "ldp/topology.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kInvariant = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ldp::Int parse_int(const std::string& s, const char* what)
{
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
}

// "3" or "1..10"
std::pair<ldp::Int, ldp::Int> parse_index_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const ldp::Int i = parse_int(s, "index");
        return {i, i};
    }
    return {parse_int(s.substr(0, dots), "index"), parse_int(s.substr(dots + 2), "index")};
}

ldp::Int default_max_weight()
{
    if (const char* env = std::getenv("LDP_MAX_WEIGHT"))
        return parse_int(env, "LDP_MAX_WEIGHT");
    return ldp::kDefaultMaxWeight;
}

unsigned resolve_jobs(unsigned jobs) { return jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : jobs; }

struct EnumerateConfig {
    std::string index = "1..10";
    ldp::Int max_weight = ldp::kDefaultMaxWeight;
    std::string method = "both";
    std::string format = "markdown";
    unsigned jobs = 1;
    std::string output;
    std::string pair_rule = "literal";
    std::string fault = "none";
};

ldp::SearchOptions options_from(const EnumerateConfig& cfg)
{
    ldp::SearchOptions o;
    o.threads = resolve_jobs(cfg.jobs);
    o.pair_rule = cfg.pair_rule == "distinct" ? ldp::PairRule::kDistinctExtra : ldp::PairRule::kLiteral;
    o.fault = cfg.fault == "skip-condition-ii" ? ldp::FaultInjection::kSkipConditionII : ldp::FaultInjection::kNone;
    return o;
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

int cmd_enumerate(const EnumerateConfig& cfg)
{
    const auto [lo, hi] = parse_index_range(cfg.index);
    if (lo < 1 || hi < lo)
        throw UsageError("index range must satisfy 1 <= min <= max");
    if (cfg.max_weight < 1 || cfg.max_weight > ldp::kMaxWeight)
        throw UsageError("--max-weight out of range");
    const auto format = ldp::parse_format(cfg.format);
    const auto opts = options_from(cfg);

    std::vector<ldp::Candidate> brute, structured;
    const bool run_brute = cfg.method != "structured";
    const bool run_structured = cfg.method != "brute";
    if (run_brute)
        brute = ldp::brute_force_candidates(lo, hi, cfg.max_weight, opts);
    if (run_structured)
        for (ldp::Int i = lo; i <= hi; ++i) {
            auto part = ldp::structured_candidates(i, cfg.max_weight, opts);
            structured.insert(structured.end(), part.begin(), part.end());
        }

    if (run_brute && run_structured && brute != structured) {
        std::vector<ldp::Candidate> only_b, only_s;
        std::set_difference(brute.begin(), brute.end(), structured.begin(), structured.end(), std::back_inserter(only_b));
        std::set_difference(structured.begin(), structured.end(), brute.begin(), brute.end(), std::back_inserter(only_s));
        std::cerr << "ldp: brute-force and structured search disagree (" << only_b.size() << " only in brute force, "
                  << only_s.size() << " only in structured)\n";
        for (const auto& c : only_b)
            std::cerr << "  brute only:      " << c << '\n';
        for (const auto& c : only_s)
            std::cerr << "  structured only: " << c << '\n';
        return kMismatch;
    }
    const auto records = ldp::make_records(run_brute ? brute : structured, ldp::Catalog::builtin(), opts);
    write_output(ldp::serialize(records, *format), cfg.output);
    return kOk;
}

int cmd_certify(const std::vector<ldp::Int>& w, std::optional<ldp::Int> degree, std::optional<ldp::Int> index)
{
    const auto ws = ldp::WeightSystem::normalize({w[0], w[1], w[2], w[3]});
    const ldp::Candidate c = degree ? ldp::Candidate::make(ws, *degree) : ldp::Candidate::with_index(ws, *index);
    std::cout << ldp::describe(ldp::certify_ke(c)) << '\n';
    return kOk;
}

int cmd_topology(const std::vector<ldp::Int>& w, ldp::Int degree)
{
    const auto ws = ldp::WeightSystem::normalize({w[0], w[1], w[2], w[3]});
    const ldp::Candidate c = ldp::Candidate::make(ws, degree);
    const ldp::LinkReport r = ldp::diffeo_type(c);
    std::cout << "weights=" << ws << " degree=" << degree << " index=" << c.index() << '\n'
              << "mu=" << r.mu << '\n'
              << "divisor=" << r.divisor.to_string() << '\n'
              << "b2=" << r.b2_link << '\n'
              << "orbifold_b2=" << r.b2_link + 1 << '\n'
              << "link=" << ldp::link_type_string(r.l) << '\n';
    return kOk;
}

int cmd_reproduce(const std::string& table, ldp::Int max_weight, unsigned jobs)
{
    const auto& cat = ldp::Catalog::builtin();
    auto enumerate_all = [&] {
        ldp::SearchOptions o;
        o.threads = resolve_jobs(jobs);
        return ldp::brute_force_enumerate(1, 10, max_weight, o);
    };
    ldp::ReproductionResult r;
    if (table == "1")
        r = ldp::reproduce_table1(enumerate_all(), cat);
    else if (table == "3") {
        const auto records = enumerate_all();
        r = ldp::reproduce_table3(cat, &records);
    }
    else if (table == "series")
        r = ldp::reproduce_series(cat);
    else
        r = ldp::reproduce_theorem_a(enumerate_all(), cat);
    std::cout << r.text();
    return r.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quasi-smooth log del Pezzo hypersurfaces in weighted projective 3-space"};
    app.require_subcommand(1);

    EnumerateConfig ecfg;
    auto* en = app.add_subcommand("enumerate", "List every candidate of the given index range");
    en->add_option("--index", ecfg.index, "Index N or range A..B")->capture_default_str();
    en->add_option("--max-weight", ecfg.max_weight, "Largest weight searched (env LDP_MAX_WEIGHT)");
    en->add_option("--method", ecfg.method, "Search method")
        ->check(CLI::IsMember({"brute", "structured", "both"}))
        ->capture_default_str();
    en->add_option("--format", ecfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}))
        ->capture_default_str();
    en->add_option("--jobs,-j", ecfg.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    en->add_option("--output,-o", ecfg.output, "Write to this file instead of standard output");
    en->add_option("--pair-rule", ecfg.pair_rule, "Reading of the two-extra-variable pair condition")
        ->check(CLI::IsMember({"literal", "distinct"}))
        ->capture_default_str();
    en->add_option("--inject-fault", ecfg.fault)->check(CLI::IsMember({"none", "skip-condition-ii"}))->group("");

    std::vector<ldp::Int> cw;
    std::optional<ldp::Int> c_degree, c_index;
    auto* ce = app.add_subcommand("certify", "Run the klt gates and inequality cascade");
    ce->add_option("weights", cw, "w0 w1 w2 w3")->required()->expected(4);
    auto* cdeg = ce->add_option("--degree,-d", c_degree, "Degree d");
    auto* cidx = ce->add_option("--index,-i", c_index, "Index I = |w| - d");
    cdeg->excludes(cidx);

    std::vector<ldp::Int> tw;
    ldp::Int t_degree = 0;
    auto* to = app.add_subcommand("topology", "Milnor number, characteristic divisor and link type");
    to->add_option("weights", tw, "w0 w1 w2 w3")->required()->expected(4);
    to->add_option("--degree,-d", t_degree, "Degree d")->required();

    std::string table;
    ldp::Int r_max_weight = ldp::kDefaultMaxWeight;
    unsigned r_jobs = 1;
    auto* re = app.add_subcommand("reproduce", "Reconcile computed results with the published tables");
    re->add_option("--table", table, "Table to reproduce")
        ->required()
        ->check(CLI::IsMember({"1", "3", "series", "theorem-a"}));
    re->add_option("--max-weight", r_max_weight, "Largest weight searched (env LDP_MAX_WEIGHT)");
    re->add_option("--jobs,-j", r_jobs, "Worker threads (0 = all cores)");

    try {
        const ldp::Int env_w = default_max_weight();
        ecfg.max_weight = env_w;
        r_max_weight = env_w;
        app.parse(argc, argv);
        if (*ce && !c_degree && !c_index)
            throw UsageError("certify needs --degree or --index");
        if (*en)
            return cmd_enumerate(ecfg);
        if (*ce)
            return cmd_certify(cw, c_degree, c_index);
        if (*to)
            return cmd_topology(tw, t_degree);
        return cmd_reproduce(table, r_max_weight, r_jobs);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const UsageError& e) {
        std::cerr << "ldp: " << e.what() << '\n';
        return kUsage;
    } catch (const ldp::InvalidInput& e) {
        std::cerr << "ldp: invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const ldp::PreconditionError& e) {
        std::cerr << "ldp: " << e.what() << '\n';
        return kUsage;
    } catch (const ldp::InvariantViolation& e) {
        std::cerr << "ldp: internal invariant violated: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "ldp: internal error: " << e.what() << '\n';
        return kInvariant;
    }
}
