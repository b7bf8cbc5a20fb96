#include "ldp/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ldp {

namespace detail {
extern const std::string_view kBuiltinCatalog;
}

std::string_view provenance_id(KltProvenance p)
{
    switch (p) {
    case KltProvenance::kCascade: return "cascade";
    case KltProvenance::kProved: return "proved";
    case KltProvenance::kCited: return "cited";
    case KltProvenance::kUnknown: return "unknown";
    }
    return "unknown";
}

std::optional<KltProvenance> parse_provenance(std::string_view id)
{
    for (KltProvenance p : {KltProvenance::kCascade, KltProvenance::kProved, KltProvenance::kCited, KltProvenance::kUnknown})
        if (provenance_id(p) == id)
            return p;
    return std::nullopt;
}

std::array<Int, 4> ReferenceSeries::weights_at(Int k) const
{
    return {weights[0].at(k), weights[1].at(k), weights[2].at(k), weights[3].at(k)};
}

std::string ReferenceSeries::label() const
{
    return "(" + weights[0].to_string() + "," + weights[1].to_string() + "," + weights[2].to_string() + "," +
           weights[3].to_string() + ")";
}

bool ReferenceSeries::ke_yes_at(Int k) const
{
    switch (provenance) {
    case KltProvenance::kCascade:
    case KltProvenance::kCited:
        return k >= k_min;
    case KltProvenance::kProved:
        return k >= std::max(k_min, proved_from_k);
    case KltProvenance::kUnknown:
        return false;
    }
    return false;
}

namespace {

// Column order of data/reference.csv; see docs/catalog_format.md.
enum Column {
    kSource, kIndex, kW0, kW1, kW2, kW3, kDegree, kB2, kKe, kSeriesId, kK, kProvenance,
    kM, kDimG, kN, kL, kCount, kNote, kColumnCount
};

// Comma-separated; a field may be wrapped in double quotes ("" escapes a quote).
std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch != '"')
                field += ch;
            else if (i + 1 < line.size() && line[i + 1] == '"')
                field += line[++i];
            else
                quoted = false;
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else {
            field += ch;
        }
    }
    if (quoted)
        throw InvalidInput("unterminated quoted field");
    out.push_back(std::move(field));
    return out;
}

class RowReader {
public:
    RowReader(std::vector<std::string> fields, std::size_t line_no) : f_(std::move(fields)), line_(line_no) {}

    const std::string& text(Column c) const { return f_[c]; }
    bool has(Column c) const { return !f_[c].empty(); }

    Int integer(Column c) const
    {
        auto form = AffineForm::parse(f_[c]);
        if (!form || form->slope != 0)
            fail("expected an integer in column " + std::to_string(c + 1) + ", got '" + f_[c] + "'");
        return form->offset;
    }
    std::optional<Int> opt_integer(Column c) const
    {
        if (!has(c))
            return std::nullopt;
        return integer(c);
    }
    AffineForm form(Column c) const
    {
        auto form = AffineForm::parse(f_[c]);
        if (!form)
            fail("expected an affine form in column " + std::to_string(c + 1) + ", got '" + f_[c] + "'");
        return *form;
    }
    bool ke_flag() const
    {
        if (f_[kKe] == "Y")
            return true;
        if (f_[kKe] == "?")
            return false;
        fail("K-E flag must be 'Y' or '?', got '" + f_[kKe] + "'");
    }
    std::array<Int, 4> weights() const { return {integer(kW0), integer(kW1), integer(kW2), integer(kW3)}; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InvalidInput("catalog line " + std::to_string(line_) + ": " + what);
    }

private:
    std::vector<std::string> f_;
    std::size_t line_;
};

}  // namespace

Catalog Catalog::parse(std::string_view text)
{
    Catalog cat;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("source_table,", 0) != 0)
                throw InvalidInput("catalog line " + std::to_string(line_no) + ": missing header");
            continue;
        }
        std::vector<std::string> fields;
        try {
            fields = split_fields(line);
        } catch (const InvalidInput& e) {
            throw InvalidInput("catalog line " + std::to_string(line_no) + ": " + e.what());
        }
        if (fields.size() != kColumnCount)
            throw InvalidInput("catalog line " + std::to_string(line_no) + ": expected " + std::to_string(kColumnCount) +
                               " fields, got " + std::to_string(fields.size()));
        RowReader r(std::move(fields), line_no);
        const std::string& source = r.text(kSource);

        if (source == "table1" || source == "table2") {
            ReferenceRow row;
            row.source_table = source;
            row.index = r.integer(kIndex);
            row.weights = r.weights();
            row.degree = r.integer(kDegree);
            row.b2_printed = r.opt_integer(kB2);
            if (r.has(kKe))
                row.ke_yes = r.ke_flag();
            row.m_printed = r.opt_integer(kM);
            row.dimg_printed = r.opt_integer(kDimG);
            row.n_printed = r.opt_integer(kN);
            row.note = r.text(kNote);
            const Int sum = row.weights[0] + row.weights[1] + row.weights[2] + row.weights[3];
            if (sum - row.degree != row.index)
                r.fail("index does not equal |w| - d");
            (source == "table1" ? cat.table1 : cat.table2).push_back(std::move(row));
        } else if (source == "series" || source == "unlisted") {
            ReferenceSeries s;
            s.id = r.text(kSeriesId);
            s.index = r.integer(kIndex);
            s.weights = {r.form(kW0), r.form(kW1), r.form(kW2), r.form(kW3)};
            s.degree = r.form(kDegree);
            s.b2_printed = r.opt_integer(kB2).value_or(0);
            if (source == "series" && !r.has(kB2))
                r.fail("series row without printed b2");
            s.ke_yes = r.ke_flag();
            s.k_min = r.integer(kK);
            const std::string& prov = r.text(kProvenance);
            if (prov == "cascade") {
                s.provenance = KltProvenance::kCascade;
            } else if (prov == "cited") {
                s.provenance = KltProvenance::kCited;
            } else if (prov == "open") {
                s.provenance = KltProvenance::kUnknown;
            } else if (prov.rfind("proved:", 0) == 0) {
                s.provenance = KltProvenance::kProved;
                auto k = AffineForm::parse(std::string_view(prov).substr(7));
                if (!k || k->slope != 0)
                    r.fail("malformed proved:<k> provenance");
                s.proved_from_k = k->offset;
            } else {
                r.fail("unknown provenance '" + prov + "'");
            }
            if (s.ke_yes == (s.provenance == KltProvenance::kUnknown))
                r.fail("K-E flag disagrees with provenance");
            Int slope_sum = 0, offset_sum = 0;
            for (const auto& f : s.weights) {
                slope_sum += f.slope;
                offset_sum += f.offset;
            }
            if (slope_sum != s.degree.slope || offset_sum - s.degree.offset != s.index)
                r.fail("series index does not equal |w(k)| - d(k)");
            (source == "series" ? cat.series : cat.unlisted).push_back(std::move(s));
        } else if (source == "table3") {
            ModuliRow m;
            m.index = r.integer(kIndex);
            if (r.has(kSeriesId)) {
                m.series_id = r.text(kSeriesId);
            } else {
                m.weights = r.weights();
                m.degree = r.integer(kDegree);
            }
            m.m_printed = r.integer(kM);
            m.n_printed = r.integer(kN);
            m.l_printed = r.integer(kL);
            cat.table3.push_back(std::move(m));
        } else if (source == "theorem_a") {
            cat.theorem_a.push_back({r.integer(kL), r.opt_integer(kN), r.integer(kCount)});
        } else if (source == "known") {
            cat.known.push_back({r.text(kSeriesId), r.text(kNote)});
        } else {
            r.fail("unknown source_table '" + source + "'");
        }
    }
    if (!header_seen)
        throw InvalidInput("catalog is empty");
    for (const auto& m : cat.table3)
        if (m.series_id && !cat.find_series(*m.series_id))
            throw InvalidInput("moduli row references unknown series '" + *m.series_id + "'");
    return cat;
}

Catalog Catalog::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open catalog file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const Catalog& Catalog::builtin()
{
    static const Catalog cat = parse(detail::kBuiltinCatalog);
    return cat;
}

const ReferenceSeries* Catalog::find_series(std::string_view id) const
{
    for (const auto* list : {&series, &unlisted})
        for (const auto& s : *list)
            if (s.id == id)
                return &s;
    return nullptr;
}

std::optional<SeriesTag> match_family(const Candidate& c, const std::vector<ReferenceSeries>& families)
{
    std::optional<SeriesTag> found;
    const auto& w = c.weights().values();
    for (const auto& fam : families) {
        if (fam.index != c.index())
            continue;
        const AffineForm& pivot = fam.weights[3];
        if (pivot.slope == 0 || (w[3] - pivot.offset) % pivot.slope != 0)
            continue;
        const Int k = (w[3] - pivot.offset) / pivot.slope;
        if (k < fam.k_min || fam.weights_at(k) != w || fam.degree_at(k) != c.degree())
            continue;
        if (found)
            throw InvariantViolation("candidate " + c.weights().to_string() + " matches series " + found->id + " and " +
                                     fam.id);
        found = SeriesTag{fam.id, k};
    }
    return found;
}

const KnownDiscrepancy* Catalog::find_known(std::string_view key) const
{
    for (const auto& k : known)
        if (k.key == key)
            return &k;
    return nullptr;
}

const ReferenceRow* Catalog::find_table1(const Candidate& c) const
{
    for (const auto& row : table1)
        if (row.weights == c.weights().values() && row.degree == c.degree())
            return &row;
    return nullptr;
}

const std::vector<ReferenceRow>& reference_table1() { return Catalog::builtin().table1; }
const std::vector<ReferenceSeries>& reference_series() { return Catalog::builtin().series; }

namespace {

std::string row_label(const std::array<Int, 4>& w, Int d)
{
    std::ostringstream os;
    os << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ") d=" << d;
    return os.str();
}

std::string ke_text(bool yes) { return yes ? "Y" : "?"; }

}  // namespace

ReconciliationReport diff_against_reference(const std::vector<CandidateRecord>& computed, const Catalog& catalog)
{
    ReconciliationReport rep;
    rep.expected = static_cast<Int>(catalog.table1.size());
    std::set<const ReferenceRow*> seen;

    for (const auto& rec : computed) {
        const auto& c = rec.candidate;
        const std::string label = row_label(c.weights().values(), c.degree());
        if (rec.series) {
            const ReferenceSeries* fam = catalog.find_series(rec.series->id);
            if (!fam)
                throw InvariantViolation("record tagged with unknown series " + rec.series->id);
            const std::string key = "series:" + fam->id + ":k=" + std::to_string(rec.series->k);
            if (rec.orbifold_b2 != fam->b2_printed)
                rep.mismatches.push_back({label, "b2", std::to_string(fam->b2_printed), std::to_string(rec.orbifold_b2),
                                          key + ":b2"});
            if (rec.ke_yes() != fam->ke_yes_at(rec.series->k))
                rep.mismatches.push_back(
                    {label, "ke", ke_text(fam->ke_yes_at(rec.series->k)), ke_text(rec.ke_yes()), key + ":ke"});
            continue;
        }
        const ReferenceRow* row = catalog.find_table1(c);
        if (!row || row->index != c.index()) {
            rep.extra.push_back({rec, match_family(c, catalog.unlisted)});
            continue;
        }
        seen.insert(row);
        ++rep.matched;
        const std::string key = "table1:" + label;
        bool exact = true;
        if (row->b2_printed && *row->b2_printed != rec.orbifold_b2) {
            rep.mismatches.push_back({label, "b2", std::to_string(*row->b2_printed), std::to_string(rec.orbifold_b2),
                                      key + ":b2"});
            exact = false;
        }
        const bool certified = rec.klt.is_certified();
        if (row->ke_yes && *row->ke_yes != certified) {
            rep.mismatches.push_back({label, "ke", ke_text(*row->ke_yes), ke_text(certified), key + ":ke"});
            exact = false;
        }
        if (exact)
            ++rep.exact;
    }
    for (const auto& row : catalog.table1)
        if (!seen.count(&row))
            rep.missing.push_back(row);
    return rep;
}

std::map<Int, std::vector<TallyEntry>> theorem_a_tally(const std::vector<CandidateRecord>& computed)
{
    std::map<Int, std::vector<TallyEntry>> out;
    // smallest-k Y instance per series family
    std::map<std::string, const CandidateRecord*> family_rep;
    for (const auto& rec : computed) {
        if (!rec.ke_yes())
            continue;
        if (rec.series) {
            auto& slot = family_rep[rec.series->id];
            if (!slot || rec.series->k < slot->series->k)
                slot = &rec;
            continue;
        }
        std::ostringstream label;
        label << rec.candidate.weights() << " d=" << rec.candidate.degree();
        out[rec.l].push_back({std::nullopt, rec.moduli.n, label.str()});
    }
    for (const auto& [id, rec] : family_rep)
        out[rec->l].push_back({id, rec->moduli.n, "series " + id});
    for (auto& [l, entries] : out)
        std::stable_sort(entries.begin(), entries.end(), [](const TallyEntry& a, const TallyEntry& b) {
            if (a.series_id.has_value() != b.series_id.has_value())
                return !a.series_id.has_value();
            return a.n > b.n;
        });
    return out;
}

}  // namespace ldp
