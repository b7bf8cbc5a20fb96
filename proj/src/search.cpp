#include "ldp/search.hpp"

#include "ldp/klt.hpp"
#include "ldp/moduli.hpp"
#include "ldp/topology.hpp"

#include <boost/integer/mod_inverse.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <limits>
#include <set>
#include <thread>

namespace ldp {

namespace {

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Runs work(slot) for slot = 0..count-1 spread over up to `threads` workers;
// each worker appends to its own vector, merged afterwards.
template <typename Work>
std::vector<Candidate> run_sliced(std::size_t count, unsigned threads, Work work)
{
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::vector<Candidate>> parts(threads);
    auto worker = [&](unsigned t) {
        for (std::size_t s = t; s < count; s += threads)
            work(s, parts[t]);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    worker(t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool)
            th.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    std::vector<Candidate> out;
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Some z_i^m z_j has degree d, for every i.
bool condition_I_fast(const std::array<Int, 4>& w, Int d)
{
    for (int i = 3; i >= 0; --i) {
        bool ok = false;
        for (int j = 0; j < 4 && !ok; ++j) {
            const Int rest = d - w[j];
            ok = rest >= w[i] && rest % w[i] == 0;
        }
        if (!ok)
            return false;
    }
    return true;
}

}  // namespace

bool passes_filters(const Candidate& c, const SearchOptions& opts)
{
    if (gate_check(c))
        return false;
    const auto& w = c.weights();
    const Int d = c.degree();
    if (!is_well_formed(w) || !condition_I(w, d))
        return false;
    if (opts.fault != FaultInjection::kSkipConditionII && !condition_II(w, d))
        return false;
    return condition_III(w, d, opts.pair_rule);
}

std::vector<Candidate> brute_force_candidates(Int i_min, Int i_max, Int w_max, const SearchOptions& opts)
{
    if (i_min < 1 || i_max < i_min)
        throw InvalidInput("index range must satisfy 1 <= min <= max");
    if (w_max < 1 || w_max > kMaxWeight)
        throw InvalidInput("weight bound out of range");

    auto slice = [&](std::size_t s, std::vector<Candidate>& out) {
        const Int w0 = static_cast<Int>(s) + 1;
        // 2I < 3 w0
        const Int top = std::min(i_max, (3 * w0 - 1) / 2);
        if (top < i_min)
            return;
        for (Int w1 = w0; w1 <= w_max; ++w1)
            for (Int w2 = w1; w2 <= w_max; ++w2) {
                const Int g012 = gcd(gcd(w0, w1), w2);
                for (Int w3 = w2; w3 <= w_max; ++w3) {
                    const std::array<Int, 4> w{w0, w1, w2, w3};
                    const Int sum = w0 + w1 + w2 + w3;
                    for (Int index = i_min; index <= top; ++index) {
                        const Int d = sum - index;
                        if (d <= w3)
                            break;
                        if (2 * index == w0 + w1 || !condition_I_fast(w, d))
                            continue;
                        if (gcd(g012, w3) != 1)
                            continue;
                        const Candidate c = Candidate::make(WeightSystem::normalize(w), d);
                        if (passes_filters(c, {1, opts.pair_rule, FaultInjection::kNone}))
                            out.push_back(c);
                    }
                }
            }
    };
    return run_sliced(static_cast<std::size_t>(w_max), opts.threads, slice);
}

std::vector<BranchAssignment> lemma42_branches(Int index)
{
    if (index < 1)
        throw InvalidInput("index must be positive");
    std::vector<BranchAssignment> out;
    out.reserve(kMaxM1 * kMaxM2 * kMaxM3 * 64);
    for (Int m3 = 1; m3 <= kMaxM3; ++m3)
        for (Int m2 = 1; m2 <= kMaxM2; ++m2)
            for (Int m1 = 1; m1 <= kMaxM1; ++m1)
                for (int j3 = 0; j3 < 4; ++j3)
                    for (int j2 = 0; j2 < 4; ++j2)
                        for (int j1 = 0; j1 < 4; ++j1)
                            out.push_back({index, {m1, m2, m3}, {j1, j2, j3}});
    return out;
}

std::array<Int, 4> AffineFamily::weights_at(Int k) const
{
    return {w[0].at(k), w[1].at(k), w[2].at(k), w[3].at(k)};
}

namespace {

using Q = boost::rational<Int>;
using QVec = std::array<Q, 4>;
using Forms = std::array<AffineForm, 4>;

struct Interval {
    Int lo = std::numeric_limits<Int>::min();
    Int hi = std::numeric_limits<Int>::max();
    bool feasible() const { return lo <= hi; }
    // f(k) >= 0
    void require(const AffineForm& f)
    {
        if (f.slope > 0)
            lo = std::max(lo, ceil_div(-f.offset, f.slope));
        else if (f.slope < 0)
            hi = std::min(hi, floor_div(f.offset, -f.slope));
        else if (f.offset < 0) {
            lo = 1;
            hi = 0;
        }
    }
};

AffineForm operator-(const AffineForm& a, const AffineForm& b) { return {a.slope - b.slope, a.offset - b.offset}; }
AffineForm minus_const(const AffineForm& a, Int c) { return {a.slope, a.offset - c}; }

AffineForm degree_form(const Forms& w, Int index)
{
    return {w[0].slope + w[1].slope + w[2].slope + w[3].slope, w[0].offset + w[1].offset + w[2].offset + w[3].offset - index};
}

// Positivity, ascending order, d > w3 and m_0 >= 1.
Interval structural_range(const Forms& w, const AffineForm& d, int j0)
{
    Interval r;
    for (const auto& f : w)
        r.require(minus_const(f, 1));
    for (int i = 0; i < 3; ++i)
        r.require(w[i + 1] - w[i]);
    r.require(minus_const(d - w[3], 1));
    r.require((d - w[j0]) - w[0]);
    return r;
}

void cap_range(Interval& r, const Forms& w, Int w_max)
{
    for (const auto& f : w)
        r.require({-f.slope, w_max - f.offset});
}

Forms reparametrize(const Forms& w, Int period, Int shift)
{
    Forms out;
    for (int i = 0; i < 4; ++i)
        out[i] = {w[i].slope * period, w[i].slope * shift + w[i].offset};
    return out;
}

class Solver {
public:
    Solver(const BranchAssignment& b, Int w_max) : b_(b), w_max_(w_max) {}

    SolutionSpace run()
    {
        // Rows: m_i w_i + w_{j(i)} - sum(w) = -I.
        std::array<std::array<Q, 5>, 3> a{};
        for (int r = 0; r < 3; ++r) {
            const int i = r + 1;
            for (int c = 0; c < 4; ++c)
                a[r][c] = -1;
            a[r][i] += b_.m[r];
            a[r][b_.j[r]] += 1;
            a[r][4] = -b_.index;
        }
        std::array<int, 3> pivot_col{-1, -1, -1};
        int rank = 0;
        for (int c = 0; c < 4 && rank < 3; ++c) {
            int p = -1;
            for (int r = rank; r < 3; ++r)
                if (a[r][c].numerator() != 0) {
                    p = r;
                    break;
                }
            if (p < 0)
                continue;
            std::swap(a[p], a[rank]);
            const Q inv = Q(1) / a[rank][c];
            for (auto& x : a[rank])
                x *= inv;
            for (int r = 0; r < 3; ++r)
                if (r != rank && a[r][c].numerator() != 0) {
                    const Q f = a[r][c];
                    for (int cc = 0; cc < 5; ++cc)
                        a[r][cc] -= f * a[rank][cc];
                }
            pivot_col[rank++] = c;
        }
        for (int r = rank; r < 3; ++r)
            if (a[r][4].numerator() != 0)
                return {};
        // w = base + sum over free columns f of w_f * dir_f
        QVec base{};
        std::vector<std::pair<int, QVec>> dirs;
        for (int c = 0; c < 4; ++c) {
            if (std::find(pivot_col.begin(), pivot_col.begin() + rank, c) != pivot_col.begin() + rank)
                continue;
            QVec v{};
            v[c] = 1;
            for (int r = 0; r < rank; ++r)
                v[pivot_col[r]] = -a[r][c];
            dirs.emplace_back(c, v);
        }
        for (int r = 0; r < rank; ++r)
            base[pivot_col[r]] = a[r][4];
        slice(base, dirs);
        return std::move(out_);
    }

private:
    void slice(const QVec& base, std::vector<std::pair<int, QVec>> dirs)
    {
        if (dirs.size() == 1) {
            line(base, dirs.front().second);
            return;
        }
        const auto [col, dir] = dirs.back();
        dirs.pop_back();
        for (Int s = 1; s <= w_max_; ++s) {
            QVec b = base;
            for (int i = 0; i < 4; ++i)
                b[i] += dir[i] * s;
            slice(b, dirs);
        }
    }

    // w = p + t v with t the free weight; split into integral progressions.
    void line(const QVec& p, const QVec& v)
    {
        Int period = 1;
        for (int i = 0; i < 4; ++i)
            period = lcm(period, lcm(p[i].denominator(), v[i].denominator()));
        for (Int r = 0; r < period && r <= w_max_; ++r) {
            Forms w;
            bool integral = true;
            for (int i = 0; i < 4 && integral; ++i) {
                const Q off = p[i] + v[i] * r;
                const Q slope = v[i] * period;
                integral = off.denominator() == 1 && slope.denominator() == 1;
                w[i] = {slope.numerator(), off.numerator()};
            }
            if (integral)
                for (int j0 = 0; j0 < 4; ++j0)
                    close_i0(w, j0);
        }
    }

    // m_0 w_0 + w_{j0} = d for some m_0 >= 1.
    void close_i0(const Forms& w, int j0)
    {
        const AffineForm d = degree_form(w, b_.index);
        const AffineForm e = d - w[j0];
        const Int a0 = w[0].slope, b0 = w[0].offset;
        if (a0 == 0) {
            if (b0 < 1)
                return;
            // e(k) = 0 mod b0
            const Int g = gcd(std::abs(e.slope), b0);
            if (e.offset % g != 0)
                return;
            const Int mod = b0 / g;
            Int shift = 0;
            if (mod > 1) {
                const Int a = ((e.slope / g) % mod + mod) % mod;
                const Int rhs = ((-e.offset / g) % mod + mod) % mod;
                const Int inv = boost::integer::mod_inverse(a, mod);
                shift = (rhs * inv) % mod;
            }
            add_family(reparametrize(w, mod, shift), j0);
            return;
        }
        // e = m_0 w_0 identically in k
        if (e.slope * b0 == e.offset * a0) {
            if (e.slope % a0 == 0 && e.slope / a0 >= 1)
                add_family(w, j0);
            return;
        }
        Interval r = structural_range(w, d, j0);
        cap_range(r, w, w_max_);
        for (Int k = r.lo; r.feasible() && k <= r.hi; ++k) {
            const Int w0 = w[0].at(k), ek = e.at(k);
            if (ek % w0 == 0)
                out_.points.push_back({w[0].at(k), w[1].at(k), w[2].at(k), w[3].at(k)});
        }
    }

    void add_family(const Forms& w, int j0)
    {
        AffineFamily f;
        f.w = w;
        f.d = degree_form(w, b_.index);
        f.j0 = j0;
        const Interval r = structural_range(w, f.d, j0);
        if (!r.feasible() || r.lo == std::numeric_limits<Int>::min())
            return;
        f.k_min = r.lo;
        if (r.hi != std::numeric_limits<Int>::max())
            f.k_max = r.hi;
        out_.families.push_back(f);
    }

    BranchAssignment b_;
    Int w_max_;
    SolutionSpace out_;
};

}  // namespace

std::vector<std::array<Int, 4>> SolutionSpace::instantiate(Int w_max) const
{
    std::vector<std::array<Int, 4>> out;
    for (const auto& p : points)
        if (p[3] <= w_max)
            out.push_back(p);
    for (const auto& f : families) {
        Interval r;
        r.lo = f.k_min;
        if (f.k_max)
            r.hi = *f.k_max;
        cap_range(r, f.w, w_max);
        for (Int k = r.lo; r.feasible() && k <= r.hi; ++k)
            out.push_back(f.weights_at(k));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SolutionSpace solve_condition_system(const BranchAssignment& b, Int w_max)
{
    if (b.index < 1 || b.m[2] < 1 || b.m[2] > kMaxM3 || b.m[1] < 1 || b.m[1] > kMaxM2 || b.m[0] < 1 || b.m[0] > kMaxM1)
        throw InvalidInput("branch outside the admissible ranges");
    for (int j : b.j)
        if (j < 0 || j > 3)
            throw InvalidInput("branch variable index out of range");
    return Solver(b, w_max).run();
}

std::vector<Candidate> structured_candidates(Int index, Int w_max, const SearchOptions& opts)
{
    if (index < 1)
        throw InvalidInput("index must be positive");
    if (w_max < 1 || w_max > kMaxWeight)
        throw InvalidInput("weight bound out of range");
    const auto branches = lemma42_branches(index);
    auto work = [&](std::size_t s, std::vector<Candidate>& out) {
        const auto& b = branches[s];
        for (const auto& w : solve_condition_system(b, w_max).instantiate(w_max)) {
            const Int sum = w[0] + w[1] + w[2] + w[3];
            const Int d = sum - index;
            for (int r = 0; r < 3; ++r)
                if (b.m[r] * w[r + 1] + w[b.j[r]] != d)
                    throw InvariantViolation("branch solution does not satisfy its equations");
            if (gcd(gcd(w[0], w[1]), gcd(w[2], w[3])) != 1)
                continue;
            const Candidate c = Candidate::make(WeightSystem::normalize(w), d);
            if (passes_filters(c, opts))
                out.push_back(c);
        }
    };
    return run_sliced(branches.size(), opts.threads, work);
}

std::optional<SeriesTag> match_series(const Candidate& c, const Catalog& catalog)
{
    return match_family(c, catalog.series);
}

CandidateRecord make_record(const Candidate& c, const Catalog& catalog, PairRule rule)
{
    if (!is_quasismooth(c.weights(), c.degree(), rule))
        throw PreconditionError("general member is not quasi-smooth: " + c.weights().to_string());
    const LinkReport link = diffeo_type(c);
    CandidateRecord rec{.candidate = c,
                        .orbifold_b2 = link.b2_link + 1,
                        .b2_link = link.b2_link,
                        .l = link.l,
                        .mu = link.mu,
                        .divisor = link.divisor,
                        .klt = certify_ke(c),
                        .provenance = KltProvenance::kUnknown,
                        .moduli = moduli_report(c),
                        .series = match_series(c, catalog)};
    if (rec.klt.is_certified()) {
        rec.provenance = KltProvenance::kCascade;
    } else if (rec.series) {
        const ReferenceSeries* fam = catalog.find_series(rec.series->id);
        if (fam->provenance != KltProvenance::kCascade && fam->ke_yes_at(rec.series->k))
            rec.provenance = fam->provenance;
    }
    return rec;
}

std::vector<CandidateRecord> make_records(const std::vector<Candidate>& cs, const Catalog& catalog,
                                          const SearchOptions& opts)
{
    std::vector<CandidateRecord> out;
    out.reserve(cs.size());
    for (const auto& c : cs)
        out.push_back(make_record(c, catalog, opts.pair_rule));
    return out;
}

std::vector<CandidateRecord> brute_force_enumerate(Int i_min, Int i_max, Int w_max, const SearchOptions& opts)
{
    return make_records(brute_force_candidates(i_min, i_max, w_max, opts), Catalog::builtin(), opts);
}

std::vector<CandidateRecord> structured_enumerate(Int index, Int w_max, const SearchOptions& opts)
{
    return make_records(structured_candidates(index, w_max, opts), Catalog::builtin(), opts);
}

}  // namespace ldp
