#include "ldp/serialize.hpp"

#include <sstream>

namespace ldp {

using nlohmann::json;

std::optional<OutputFormat> parse_format(std::string_view id)
{
    if (id == "json")
        return OutputFormat::kJson;
    if (id == "csv")
        return OutputFormat::kCsv;
    if (id == "markdown")
        return OutputFormat::kMarkdown;
    return std::nullopt;
}

namespace {

json divisor_to_json(const VirtualCharacter& v)
{
    json out = json::object();
    for (const auto& [order, coeff] : v.coefficients())
        out[std::to_string(order)] = to_string(coeff);
    return out;
}

Int parse_order(const std::string& s)
{
    try {
        std::size_t pos = 0;
        const Int n = std::stoll(s, &pos);
        if (pos != s.size() || n < 1)
            throw InvalidInput("");
        return n;
    } catch (const std::exception&) {
        throw InvalidInput("bad divisor order '" + s + "'");
    }
}

KltVerdict verdict_from_parts(const std::string& kind_s, const std::string& rule_s, const std::string& gate_s, Int lhs,
                              Int rhs)
{
    const auto kind = parse_kind(kind_s);
    if (!kind)
        throw InvalidInput("unknown klt verdict '" + kind_s + "'");
    switch (*kind) {
    case KltVerdict::Kind::kCertified: {
        const auto rule = parse_rule(rule_s);
        if (!rule)
            throw InvalidInput("certified verdict without a valid rule");
        return KltVerdict::certified(*rule, lhs, rhs);
    }
    case KltVerdict::Kind::kNotKltGate: {
        const auto gate = parse_gate(gate_s);
        if (!gate)
            throw InvalidInput("gated verdict without a valid gate");
        return KltVerdict::not_klt(*gate);
    }
    case KltVerdict::Kind::kUnknown:
        return KltVerdict::unknown();
    }
    return KltVerdict::unknown();
}

KltProvenance provenance_from(const std::string& s)
{
    const auto p = parse_provenance(s);
    if (!p)
        throw InvalidInput("unknown klt provenance '" + s + "'");
    return *p;
}

Candidate candidate_from(Int index, const std::array<Int, 4>& w, Int degree)
{
    const Candidate c = Candidate::make(WeightSystem::normalize(w), degree);
    if (c.weights().values() != w)
        throw InvalidInput("weights must be listed in ascending order");
    if (c.index() != index)
        throw InvalidInput("index does not equal |w| - d");
    return c;
}

}  // namespace

json record_to_json(const CandidateRecord& r)
{
    json klt = {{"verdict", kind_id(r.klt.kind)}};
    if (r.klt.kind == KltVerdict::Kind::kCertified) {
        klt["rule"] = rule_id(r.klt.rule);
        klt["lhs"] = r.klt.lhs;
        klt["rhs"] = r.klt.rhs;
    } else if (r.klt.kind == KltVerdict::Kind::kNotKltGate) {
        klt["gate"] = gate_id(r.klt.gate);
    }
    klt["provenance"] = provenance_id(r.provenance);

    const auto& c = r.candidate;
    json j = {
        {"index", c.index()},
        {"weights", c.weights().values()},
        {"degree", c.degree()},
        {"b2_orbifold", r.orbifold_b2},
        {"b2_link", r.b2_link},
        {"l", r.l},
        {"mu", r.mu},
        {"klt", klt},
        {"moduli", {{"m", r.moduli.m}, {"dimG", r.moduli.dim_g}, {"n", r.moduli.n}}},
    };
    if (r.series)
        j["series"] = {{"id", r.series->id}, {"k", r.series->k}};
    j["divisor"] = divisor_to_json(r.divisor);
    return j;
}

CandidateRecord record_from_json(const json& j)
{
    try {
        const auto& klt = j.at("klt");
        const auto& mod = j.at("moduli");
        CandidateRecord r{
            .candidate = candidate_from(j.at("index").get<Int>(), j.at("weights").get<std::array<Int, 4>>(),
                                        j.at("degree").get<Int>()),
            .orbifold_b2 = j.at("b2_orbifold").get<Int>(),
            .b2_link = j.at("b2_link").get<Int>(),
            .l = j.at("l").get<Int>(),
            .mu = j.at("mu").get<Int>(),
            .divisor = {},
            .klt = verdict_from_parts(klt.at("verdict").get<std::string>(), klt.value("rule", ""),
                                      klt.value("gate", ""), klt.value("lhs", Int{0}), klt.value("rhs", Int{0})),
            .provenance = provenance_from(klt.at("provenance").get<std::string>()),
            .moduli = {mod.at("m").get<Int>(), mod.at("dimG").get<Int>(), mod.at("n").get<Int>()},
            .series = std::nullopt,
        };
        if (j.contains("series"))
            r.series = SeriesTag{j["series"].at("id").get<std::string>(), j["series"].at("k").get<Int>()};
        for (const auto& [order, coeff] : j.at("divisor").items())
            r.divisor += VirtualCharacter::lambda(parse_order(order), parse_rational(coeff.get<std::string>()));
        return r;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed record: ") + e.what());
    }
}

std::string to_json(const std::vector<CandidateRecord>& records)
{
    json arr = json::array();
    for (const auto& r : records)
        arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

std::vector<CandidateRecord> parse_json(std::string_view text)
{
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    if (!arr.is_array())
        throw InvalidInput("expected a JSON array of records");
    std::vector<CandidateRecord> out;
    for (const auto& j : arr)
        out.push_back(record_from_json(j));
    return out;
}

namespace {

constexpr std::string_view kCsvHeader =
    "index,w0,w1,w2,w3,degree,b2_orbifold,b2_link,l,mu,klt_verdict,klt_rule,klt_gate,klt_lhs,klt_rhs,klt_provenance,"
    "m,dimG,n,series_id,series_k,divisor";
constexpr std::size_t kCsvFields = 22;

Int csv_int(const std::string& s)
{
    try {
        std::size_t pos = 0;
        const Int v = std::stoll(s, &pos);
        if (pos == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput("expected an integer CSV field, got '" + s + "'");
}

}  // namespace

std::string to_csv(const std::vector<CandidateRecord>& records)
{
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
        const auto& c = r.candidate;
        const bool cert = r.klt.kind == KltVerdict::Kind::kCertified;
        const bool gated = r.klt.kind == KltVerdict::Kind::kNotKltGate;
        os << c.index();
        for (Int w : c.weights().values())
            os << ',' << w;
        os << ',' << c.degree() << ',' << r.orbifold_b2 << ',' << r.b2_link << ',' << r.l << ',' << r.mu << ','
           << kind_id(r.klt.kind) << ',' << (cert ? rule_id(r.klt.rule) : "") << ','
           << (gated ? gate_id(r.klt.gate) : "") << ',';
        if (cert)
            os << r.klt.lhs << ',' << r.klt.rhs;
        else
            os << ',';
        os << ',' << provenance_id(r.provenance) << ',' << r.moduli.m << ',' << r.moduli.dim_g << ',' << r.moduli.n
           << ',';
        if (r.series)
            os << r.series->id << ',' << r.series->k;
        else
            os << ',';
        os << ',';
        bool first = true;
        for (const auto& [order, coeff] : r.divisor.coefficients()) {
            os << (first ? "" : ";") << order << ':' << to_string(coeff);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

std::vector<CandidateRecord> parse_csv(std::string_view text)
{
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader)
        throw InvalidInput("missing or unexpected CSV header");
    std::vector<CandidateRecord> out;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            f.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (f.size() != kCsvFields)
            throw InvalidInput("CSV record has " + std::to_string(f.size()) + " fields");
        const bool cert = f[10] == kind_id(KltVerdict::Kind::kCertified);
        CandidateRecord r{
            .candidate = candidate_from(csv_int(f[0]), {csv_int(f[1]), csv_int(f[2]), csv_int(f[3]), csv_int(f[4])},
                                        csv_int(f[5])),
            .orbifold_b2 = csv_int(f[6]),
            .b2_link = csv_int(f[7]),
            .l = csv_int(f[8]),
            .mu = csv_int(f[9]),
            .divisor = {},
            .klt = verdict_from_parts(f[10], f[11], f[12], cert ? csv_int(f[13]) : 0, cert ? csv_int(f[14]) : 0),
            .provenance = provenance_from(f[15]),
            .moduli = {csv_int(f[16]), csv_int(f[17]), csv_int(f[18])},
            .series = std::nullopt,
        };
        if (!f[19].empty())
            r.series = SeriesTag{f[19], csv_int(f[20])};
        std::istringstream terms(f[21]);
        std::string term;
        while (std::getline(terms, term, ';')) {
            const auto colon = term.find(':');
            if (colon == std::string::npos)
                throw InvalidInput("bad divisor term '" + term + "'");
            r.divisor += VirtualCharacter::lambda(parse_order(term.substr(0, colon)), parse_rational(term.substr(colon + 1)));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_markdown(const std::vector<CandidateRecord>& records)
{
    std::ostringstream os;
    os << "| I | weights | d | b2 | link | K-E | klt | m | n | series |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : records) {
        const auto& c = r.candidate;
        os << "| " << c.index() << " | " << c.weights() << " | " << c.degree() << " | " << r.orbifold_b2 << " | "
           << link_type_string(r.l) << " | " << (r.ke_yes() ? "Y" : "?") << " | " << describe(r.klt);
        if (r.provenance != KltProvenance::kCascade && r.provenance != KltProvenance::kUnknown)
            os << " [" << provenance_id(r.provenance) << ']';
        os << " | " << r.moduli.m << " | " << r.moduli.n << " | ";
        if (r.series)
            os << r.series->id << " k=" << r.series->k;
        os << " |\n";
    }
    os << '\n' << records.size() << " rows\n";
    return os.str();
}

std::string serialize(const std::vector<CandidateRecord>& records, OutputFormat f)
{
    switch (f) {
    case OutputFormat::kJson: return to_json(records);
    case OutputFormat::kCsv: return to_csv(records);
    case OutputFormat::kMarkdown: return to_markdown(records);
    }
    return {};
}

}  // namespace ldp
