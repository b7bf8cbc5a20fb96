#include "ldp/reproduce.hpp"

#include "ldp/moduli.hpp"
#include "ldp/search.hpp"
#include "ldp/topology.hpp"

#include <map>
#include <sstream>

namespace ldp {

bool ReproductionResult::ok() const
{
    for (const auto& d : deviations)
        if (!d.documented)
            return false;
    return true;
}

std::string ReproductionResult::text() const
{
    std::ostringstream os;
    for (const auto& l : lines)
        os << l << '\n';
    for (const auto& d : deviations)
        os << (d.documented ? "  known:  " : "  NEW:    ") << d.what << "  [" << d.key << "]\n";
    os << summary << '\n';
    return os.str();
}

namespace {

std::string label(const std::array<Int, 4>& w, Int d)
{
    std::ostringstream os;
    os << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ") d=" << d;
    return os.str();
}

Deviation deviation(const Catalog& cat, std::string key, std::string what)
{
    const bool documented = cat.find_known(key) != nullptr;
    return {std::move(key), std::move(what), documented};
}

std::string plural(Int n, const char* one, const char* many) { return std::to_string(n) + " " + (n == 1 ? one : many); }

}  // namespace

ReproductionResult reproduce_table1(const std::vector<CandidateRecord>& records, const Catalog& catalog)
{
    const ReconciliationReport rep = diff_against_reference(records, catalog);
    ReproductionResult out;
    Int series_rows = 0;
    for (const auto& r : records)
        if (r.series)
            ++series_rows;
    out.lines.push_back("records: " + std::to_string(records.size()) + " (" + std::to_string(series_rows) +
                        " tagged as published series instances)");

    for (const auto& row : rep.missing) {
        const std::string l = label(row.weights, row.degree);
        out.deviations.push_back(deviation(catalog, "table1:missing:" + l, "missing I=" + std::to_string(row.index) + " " + l));
    }
    for (const auto& m : rep.mismatches)
        out.deviations.push_back(
            deviation(catalog, m.key, m.row + " " + m.field + ": printed " + m.printed + ", computed " + m.computed));

    std::map<std::string, std::vector<Int>> by_family;
    Int undocumented_extra = 0;
    for (const auto& e : rep.extra) {
        const auto& c = e.record.candidate;
        if (e.unlisted) {
            by_family[e.unlisted->id].push_back(e.unlisted->k);
            continue;
        }
        ++undocumented_extra;
        const std::string l = label(c.weights().values(), c.degree());
        out.deviations.push_back(deviation(catalog, "table1:extra:" + l, "extra I=" + std::to_string(c.index()) + " " + l));
    }
    Int family_extra = 0;
    for (const auto& [id, ks] : by_family) {
        const ReferenceSeries* fam = catalog.find_series(id);
        std::ostringstream what;
        what << ks.size() << " extra rows in unlisted family " << id << " I=" << fam->index << ' ' << fam->label()
             << " d=" << fam->degree.to_string() << " at k =";
        for (Int k : ks)
            what << ' ' << k;
        family_extra += static_cast<Int>(ks.size());
        out.deviations.push_back(deviation(catalog, "extra:" + id, what.str()));
    }
    out.summary = std::to_string(rep.matched) + "/" + std::to_string(rep.expected) + " rows matched; " +
                  std::to_string(rep.missing.size()) + " missing; " +
                  std::to_string(rep.extra.size()) + " extra (" + std::to_string(family_extra) +
                  " in unlisted families, " + std::to_string(undocumented_extra) + " unexplained); " +
                  std::to_string(rep.exact) + "/" + std::to_string(rep.matched) + " agree in b2 and K-E";
    return out;
}

ReproductionResult reproduce_table3(const Catalog& catalog, const std::vector<CandidateRecord>* records)
{
    ReproductionResult out;
    Int exact = 0;
    std::vector<std::string> known;
    for (const auto& row : catalog.table3) {
        std::array<Int, 4> w = row.weights;
        Int d = row.degree;
        std::string name;
        if (row.series_id) {
            const ReferenceSeries* fam = catalog.find_series(*row.series_id);
            w = fam->weights_at(fam->k_min);
            d = fam->degree_at(fam->k_min);
            name = *row.series_id;
        } else {
            std::ostringstream os;
            os << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ')';
            name = os.str();
        }
        const Candidate c = Candidate::make(WeightSystem::normalize(w), d);
        const ModuliReport mod = moduli_report(c);
        const Int l = second_betti_link(c);
        std::ostringstream line;
        line << (row.series_id ? "series " + name + " at " + label(w, d) : label(w, d)) << ": m=" << mod.m
             << " dimG=" << mod.dim_g << " n=" << mod.n << " " << link_type_string(l);
        out.lines.push_back(line.str());

        bool row_exact = true;
        auto check = [&](const char* field, Int computed, Int printed) {
            if (computed == printed)
                return;
            row_exact = false;
            const std::string what = std::string(row.series_id ? "series" : name) + " " + field + ": computed " +
                                     std::to_string(computed) + ", printed " + std::to_string(printed);
            Deviation dev = deviation(catalog, "table3:" + name + ":" + field, what);
            if (dev.documented)
                known.push_back(what);
            out.deviations.push_back(std::move(dev));
        };
        check("m", mod.m, row.m_printed);
        check("n", mod.n, row.n_printed);
        check("l", l, row.l_printed);
        if (row_exact)
            ++exact;
    }
    Int omitted = 0;
    if (records)
        for (const auto& rec : *records) {
            if (rec.series || !rec.ke_yes() || rec.moduli.n < 1)
                continue;
            const auto& c = rec.candidate;
            bool listed = false;
            for (const auto& row : catalog.table3)
                listed = listed || (!row.series_id && row.weights == c.weights().values() && row.degree == c.degree());
            if (listed)
                continue;
            ++omitted;
            const std::string l = label(c.weights().values(), c.degree());
            Deviation dev = deviation(catalog, "table3:omitted:" + l,
                                      "omitted " + l + ": K-E Y with m=" + std::to_string(rec.moduli.m) +
                                          " n=" + std::to_string(rec.moduli.n) + " " + link_type_string(rec.l));
            out.deviations.push_back(std::move(dev));
        }
    const std::size_t known_fields = known.size();
    std::ostringstream s;
    s << exact << '/' << catalog.table3.size() << " exact; "
      << plural(static_cast<Int>(known_fields), "known discrepancy", "known discrepancies");
    if (known_fields > 0 && known_fields <= 2) {
        s << " (";
        for (std::size_t i = 0; i < known_fields; ++i)
            s << (i ? "; " : "") << known[i];
        s << ')';
    }
    if (records)
        s << "; " << omitted << " omitted";
    Int undocumented = 0;
    for (const auto& d : out.deviations)
        undocumented += d.documented ? 0 : 1;
    if (undocumented)
        s << "; " << undocumented << " undocumented";
    out.summary = s.str();
    return out;
}

ReproductionResult reproduce_series(const Catalog& catalog, Int count)
{
    ReproductionResult out;
    Int good = 0, total = 0;
    for (const auto& fam : catalog.series) {
        bool fam_ok = true;
        for (Int k = fam.k_min; k < fam.k_min + count; ++k) {
            ++total;
            const auto w = fam.weights_at(k);
            const Int d = fam.degree_at(k);
            const std::string key = "series:" + fam.id + ":k=" + std::to_string(k);
            const std::string l = fam.id + " k=" + std::to_string(k) + " " + label(w, d);
            auto fail = [&](const std::string& field, const std::string& what) {
                fam_ok = false;
                out.deviations.push_back(deviation(catalog, key + ":" + field, l + ": " + what));
            };
            const WeightSystem ws = WeightSystem::normalize(w);
            if (ws.values() != w) {
                fail("order", "written form not ascending");
                continue;
            }
            const Candidate c = Candidate::make(ws, d);
            if (!passes_filters(c)) {
                fail("filters", "fails quasi-smoothness, well-formedness or a gate");
                continue;
            }
            const CandidateRecord rec = make_record(c, catalog);
            bool inst_ok = true;
            if (!rec.series || rec.series->id != fam.id || rec.series->k != k) {
                fail("tag", "not tagged as this family");
                inst_ok = false;
            }
            if (rec.orbifold_b2 != fam.b2_printed) {
                fail("b2", "b2 computed " + std::to_string(rec.orbifold_b2) + ", printed " + std::to_string(fam.b2_printed));
                inst_ok = false;
            }
            if (rec.ke_yes() != fam.ke_yes_at(k)) {
                fail("ke", std::string("K-E computed ") + (rec.ke_yes() ? "Y" : "?"));
                inst_ok = false;
            }
            if (fam.provenance == KltProvenance::kCascade && !rec.klt.is_certified()) {
                fail("cascade", "cascade does not certify");
                inst_ok = false;
            }
            if (inst_ok)
                ++good;
        }
        std::ostringstream line;
        line << fam.id << " I=" << fam.index << ' ' << fam.label() << " d=" << fam.degree.to_string() << ": k=" << fam.k_min
             << ".." << fam.k_min + count - 1 << (fam_ok ? " ok" : " MISMATCH") << " (b2=" << fam.b2_printed
             << ", K-E " << (fam.ke_yes ? "Y" : "?") << " [" << provenance_id(fam.provenance);
        if (fam.provenance == KltProvenance::kProved)
            line << " from k=" << fam.proved_from_k;
        line << "])";
        out.lines.push_back(line.str());
    }
    out.summary = std::to_string(good) + "/" + std::to_string(total) + " series instances match";
    return out;
}

ReproductionResult reproduce_theorem_a(const std::vector<CandidateRecord>& records, const Catalog& catalog)
{
    ReproductionResult out;
    const auto tally = theorem_a_tally(records);
    // (l, n) -> count; n = -1 stands for series families
    constexpr Int kSeries = -1;
    std::map<Int, std::map<Int, Int>> computed, printed;
    for (const auto& [l, entries] : tally)
        for (const auto& e : entries)
            ++computed[l][e.series_id ? kSeries : e.n];
    for (const auto& claim : catalog.theorem_a)
        printed[claim.l][claim.n.value_or(kSeries)] += claim.count;

    std::map<Int, bool> ls;
    for (const auto& [l, _] : computed)
        ls[l] = true;
    for (const auto& [l, _] : printed)
        ls[l] = true;

    auto bucket = [](Int n) { return n == kSeries ? std::string("series") : "n=" + std::to_string(n); };
    auto breakdown = [&](const std::map<Int, Int>& m) {
        std::string s;
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            s += (s.empty() ? "" : ", ") + bucket(it->first) + " x" + std::to_string(it->second);
        return s;
    };
    Int matched_l = 0;
    for (const auto& [l, _] : ls) {
        const auto& c = computed[l];
        const auto& p = printed[l];
        Int ctotal = 0, ptotal = 0;
        for (const auto& [n, k] : c)
            ctotal += k;
        for (const auto& [n, k] : p)
            ptotal += k;
        std::map<Int, bool> ns;
        for (const auto& [n, _] : c)
            ns[n] = true;
        for (const auto& [n, _] : p)
            ns[n] = true;
        bool all = true;
        for (const auto& [n, _] : ns) {
            const Int cv = c.count(n) ? c.at(n) : 0;
            const Int pv = p.count(n) ? p.at(n) : 0;
            if (cv == pv)
                continue;
            all = false;
            const std::string key = "theorem_a:l=" + std::to_string(l) + ":" + (n == kSeries ? "series" : "n=" + std::to_string(n));
            out.deviations.push_back(deviation(catalog, key,
                                               "l=" + std::to_string(l) + " " + bucket(n) + ": computed " +
                                                   std::to_string(cv) + ", printed " + std::to_string(pv)));
        }
        std::ostringstream line;
        line << "l=" << l << " (" << link_type_string(l) << "): ";
        if (all) {
            ++matched_l;
            line << ctotal << " matched (" << breakdown(c) << ")";
        } else {
            line << "computed " << ctotal << " (" << breakdown(c) << "), printed " << ptotal << " (" << breakdown(p) << ")";
        }
        out.lines.push_back(line.str());
    }
    out.summary = std::to_string(matched_l) + "/" + std::to_string(ls.size()) + " link types match the published tally";
    return out;
}

}  // namespace ldp
