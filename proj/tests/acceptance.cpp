/* Acceptance suite: one line per criterion, nonzero exit on any failure.
 * Heavier searches run threaded; every check is exact, no tolerances except
 * the stated oracle comparison. */

#include "esch/classify.hpp"
#include "esch/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace esch;

namespace {

int g_threads = 1;

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    std::atomic<std::int64_t> next{0};
    auto work = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < g_threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

SearchConfig config(EnumerationRequest::Family family, std::int64_t r_min, std::int64_t r_max,
                    SearchThreshold threshold) {
    SearchConfig cfg;
    cfg.request = {family, r_min, r_max};
    cfg.threshold = threshold;
    cfg.threads = g_threads;
    cfg.block_size = 250;
    return cfg;
}

using General = std::integral_constant<EnumerationRequest::Family,
                                       EnumerationRequest::Family::General>;

struct Outcome {
    bool pass;
    std::string detail;
};

// ---- criterion 1: (r, s, p1) across every row of tables 4.1-4.6 ----
Outcome basic_exactness() {
    std::int64_t rows = 0, bad = 0;
    std::string first;
    for (const auto& id : table_ids()) {
        for (const auto& row : reference_rows(id)) {
            BasicInvariants b = basic_invariants(row.params);
            ++rows;
            bool ok = b.r_abs == row.r && b.p1 == row.p1 &&
                      (b.s.value == row.s || b.s.value == -row.s);
            if (!ok) {
                ++bad;
                if (first.empty())
                    first = "table " + id + " row with r=" + std::to_string(row.r);
            }
        }
    }
    std::ostringstream os;
    os << rows << " rows checked";
    if (bad) os << ", " << bad << " mismatched (first: " << first << ")";
    return {bad == 0, os.str()};
}

// ---- criterion 2: s1, s2 exact (up to simultaneous sign flip) ----
Outcome ks_exactness() {
    std::vector<ReferenceRow> targets;
    for (const auto& row : reference_rows("4.2")) targets.push_back(row);
    auto t45 = reference_rows("4.5");
    targets.push_back(t45[0]);
    targets.push_back(t45[1]);
    for (const auto& row : reference_rows("4.6")) targets.push_back(row);

    std::atomic<std::int64_t> bad{0};
    std::mutex m;
    std::string first;
    parallel_for(static_cast<std::int64_t>(targets.size()), [&](std::int64_t i) {
        const auto& row = targets[i];
        InvariantRecord rec = full_record(row.params);
        Rat s2 = parse_rat(row.s2), s1 = parse_rat(row.s1);
        bool ok = rec.ks.has_value() && rec.basic.p1 == row.p1;
        if (ok) {
            bool exact = rec.basic.s.value == row.s && rec.ks->s2 == qmodz(s2) &&
                         rec.ks->s1 == qmodz(s1);
            bool flip = rec.basic.s.value == -row.s && rec.ks->s2 == qmodz(-s2) &&
                        rec.ks->s1 == qmodz(-s1);
            ok = exact || flip;
        }
        if (!ok) {
            ++bad;
            std::lock_guard<std::mutex> lk(m);
            if (first.empty()) first = "r=" + std::to_string(row.r);
        }
    });
    std::ostringstream os;
    os << targets.size() << " spaces checked";
    if (bad) os << ", " << bad << " mismatched (first: " << first << ")";
    return {bad == 0, os.str()};
}

// ---- criterion 3: tables 4.1 and 4.4 in full ----
Outcome table_reproduction() {
    TableCheck a = reproduce_table("4.1");
    TableCheck b = reproduce_table("4.4");
    std::string detail = "tables 4.1, 4.4";
    if (!a.pass) detail += "; 4.1: " + a.diff;
    if (!b.pass) detail += "; 4.4: " + b.diff;
    return {a.pass && b.pass, detail};
}

// ---- criterion 4: 192 homotopy pairs below r = 1000 ----
Outcome homotopy_count(std::vector<PairReport>& homotopy_reports) {
    auto cfg = config(EnumerationRequest::Family::General, 3, 999,
                      SearchThreshold::Homotopy);
    homotopy_reports = search_pairs(cfg);
    std::int64_t n = static_cast<std::int64_t>(homotopy_reports.size());
    return {n == 192, "found " + std::to_string(n) + ", expected 192"};
}

// ---- criterion 5: 54 condition-(C) failures below r = 5000 ----
Outcome condc_count() {
    auto cfg = config(EnumerationRequest::Family::General, 3, 4999,
                      SearchThreshold::Basic);
    std::int64_t n = count_condition_c_failures(cfg);
    return {n == 54, "found " + std::to_string(n) + ", expected 54"};
}

// ---- criterion 6: the unique homeo/non-diffeo pair up to r = 4001 ----
Outcome theorem_b_desk() {
    auto bucket = search_pairs(config(EnumerationRequest::Family::General, 4001, 4001,
                                      SearchThreshold::Basic));
    if (bucket.size() != 1)
        return {false, "r=4001 bucket has " + std::to_string(bucket.size()) +
                           " candidate pairs, expected 1"};
    const PairReport& rep = bucket[0];
    ParamPair a = make_param_pair({75, 54, -51}, {46, 32, 0});
    ParamPair b = make_param_pair({79, 49, -50}, {46, 32, 0});
    if (!(rep.a.params == a && rep.b.params == b))
        return {false, "r=4001 candidate pair differs from the published one"};
    if (rep.verdict.relation != Relation::Homeomorphic)
        return {false, std::string("verdict is ") + to_string(rep.verdict.relation) +
                           ", expected homeo (and not diffeo)"};
    if (rep.verdict.orientation != PairOrientation::Reversing)
        return {false, "expected an orientation-reversing homeomorphism"};

    auto all = search_pairs(config(EnumerationRequest::Family::General, 3, 4001,
                                   SearchThreshold::Homeomorphic));
    if (all.size() != 1)
        return {false, std::to_string(all.size()) +
                           " pairs at least homeomorphic for r <= 4001, expected 1"};
    if (all[0].verdict.relation == Relation::Diffeomorphic)
        return {false, "the unique pair must not be diffeomorphic"};
    return {true, "unique homeomorphic pair at r = 4001, orientation reversing"};
}

// ---- criterion 7: the diffeomorphic 3-Sasakian pair at r = 5143925 ----
Outcome theorem_a_desk() {
    auto reps = search_pairs(config(EnumerationRequest::Family::Sasakian, 5143925,
                                    5143925, SearchThreshold::Diffeomorphic));
    if (reps.size() != 1)
        return {false, std::to_string(reps.size()) + " diffeomorphic pairs, expected 1"};
    const PairReport& rep = reps[0];
    ParamPair a = sasakian_to_params({2279, 1603, 384});
    ParamPair b = sasakian_to_params({2528, 939, 799});
    if (!(rep.a.params == a && rep.b.params == b))
        return {false, "pair differs from the published one"};
    if (rep.verdict.relation != Relation::Diffeomorphic)
        return {false, "expected a diffeomorphic verdict"};
    TableCheck table = reproduce_table("4.6");
    if (!table.pass) return {false, "invariant values: " + table.diff};
    return {true, "pair (2279,1603,384) / (2528,939,799) diffeomorphic, values as printed"};
}

// ---- criterion 9a: 45-integrality over random lens inputs ----
Outcome prop_integrality() {
    const std::int64_t trials = 10000;
    std::atomic<std::int64_t> bad{0};
    parallel_for(trials, [&](std::int64_t i) {
        std::mt19937_64 rng(0xE5C4A001ULL + static_cast<uint64_t>(i));
        std::uniform_int_distribution<std::int64_t> pd(2, 2000), qd(1, 20000), sgn(0, 1);
        LensSpace L;
        do {
            L.p = pd(rng) * (sgn(rng) ? 1 : -1);
            for (auto& prm : L.params) prm = qd(rng) * (sgn(rng) ? 1 : -1);
        } while ([&] {
            for (std::int64_t prm : L.params)
                if (prm == 0 || std::gcd(std::llabs(L.p), std::llabs(prm)) != 1)
                    return true;
            return false;
        }());
        std::int64_t pa = std::llabs(L.p);
        std::int64_t cap = (pa % 3 == 0 && pa % 5 == 0)  ? 45
                        : (pa % 3 == 0)               ? 9
                        : (pa % 5 == 0)               ? 5
                                                      : 1;
        try {
            CertifiedSums cs = trig_sums(L);
            for (const Rat* v : {&cs.T, &cs.S, &cs.R, &cs.U}) {
                if (Int(45) % v->get_den() != 0) ++bad;
                if (Int(cap) % v->get_den() != 0) ++bad;
            }
        } catch (const std::exception&) {
            ++bad;
        }
    });
    return {bad == 0, std::to_string(trials) + " random lens spaces, |p| <= 2000" +
                          (bad ? ", " + std::to_string(bad.load()) + " violations" : "")};
}

// ---- criterion 9b: certified sums vs the double oracle ----
Outcome prop_oracle() {
    const std::int64_t trials = 400;
    std::atomic<std::int64_t> bad{0};
    parallel_for(trials, [&](std::int64_t i) {
        std::mt19937_64 rng(0x0AC1E000ULL + static_cast<uint64_t>(i));
        std::uniform_int_distribution<std::int64_t> pd(2, 500), qd(1, 5000), sgn(0, 1);
        LensSpace L;
        do {
            L.p = pd(rng) * (sgn(rng) ? 1 : -1);
            for (auto& prm : L.params) prm = qd(rng) * (sgn(rng) ? 1 : -1);
        } while ([&] {
            for (std::int64_t prm : L.params)
                if (prm == 0 || std::gcd(std::llabs(L.p), std::llabs(prm)) != 1)
                    return true;
            return false;
        }());
        CertifiedSums cs = trig_sums(L);
        ApproxSums ap = oracle_trig_sums(L);
        auto close = [](const Rat& exact, double approx) {
            double e = exact.get_d();
            return std::abs(e - approx) <= 1e-6 * (1.0 + std::abs(e));
        };
        if (!close(cs.T, ap.T) || !close(cs.S, ap.S) || !close(cs.R, ap.R) ||
            !close(cs.U, ap.U))
            ++bad;
    });
    return {bad == 0, std::to_string(trials) + " random lens spaces, |p| <= 500" +
                          (bad ? ", " + std::to_string(bad.load()) + " out of tolerance" : "")};
}

// ---- criterion 9c: row/column agreement for every multi-line space, r < 2000 ----
Outcome prop_row_column() {
    std::atomic<std::int64_t> spaces{0}, disagreements{0};
    parallel_for(999, [&](std::int64_t i) {
        std::int64_t r = 3 + 2 * i;  // 3, 5, ..., 1999
        for (const auto& ns : enum_positively_curved(r)) {
            CondC cc = condition_c(ns.pp);
            size_t nlines = cc.columns.size() + cc.rows.size();
            if (nlines < 2) continue;
            ++spaces;
            std::vector<KSInvariants> results;
            for (int j : cc.columns) results.push_back(ks_invariants_column(ns.pp, j));
            for (int j : cc.rows) results.push_back(ks_invariants_row(ns.pp, j));
            for (size_t x = 1; x < results.size(); ++x)
                if (!(results[x].s1 == results[0].s1 && results[x].s2 == results[0].s2 &&
                      results[x].s3 == results[0].s3))
                    ++disagreements;
        }
    });
    std::ostringstream os;
    os << spaces.load() << " multi-line spaces";
    if (disagreements) os << ", " << disagreements.load() << " disagreements";
    return {disagreements == 0 && spaces > 1000, os.str()};
}

// ---- criterion 9d: normalization idempotence and move invariance ----
Outcome prop_normalize() {
    std::mt19937_64 rng(0xF00DF00DULL);
    std::uniform_int_distribution<int> mv(0, 4), idx(0, 2);
    std::uniform_int_distribution<std::int64_t> sh(-60, 60);
    std::int64_t checked = 0, bad = 0;
    for (std::int64_t r = 3; r <= 499; r += 2) {
        for (const auto& ns : enum_positively_curved(r)) {
            if (normalize(ns.pp) != ns) ++bad;  // idempotence
            ParamPair pp = ns.pp;
            for (int hop = 0; hop < 10; ++hop) {
                switch (mv(rng)) {
                    case 0: std::swap(pp.k[idx(rng)], pp.k[idx(rng)]); break;
                    case 1: std::swap(pp.l[idx(rng)], pp.l[idx(rng)]); break;
                    case 2: std::swap(pp.k, pp.l); break;
                    case 3:
                        for (auto& v : pp.k) v = -v;
                        for (auto& v : pp.l) v = -v;
                        break;
                    case 4: {
                        std::int64_t n = sh(rng);
                        for (auto& v : pp.k) v += n;
                        for (auto& v : pp.l) v += n;
                        break;
                    }
                }
            }
            ++checked;
            if (!(normalize(pp) == ns)) ++bad;
        }
    }
    return {bad == 0, std::to_string(checked) + " spaces scrambled and renormalized" +
                          (bad ? ", " + std::to_string(bad) + " failures" : "")};
}

// ---- criterion 9e: diffeo => homeo => homotopy on a search run ----
Outcome prop_monotone(const std::vector<PairReport>& homotopy_reports) {
    auto key = [](const PairReport& rep) {
        return std::tuple(rep.r, rep.a.params.k, rep.a.params.l, rep.b.params.k,
                          rep.b.params.l);
    };
    auto homeo = search_pairs(config(EnumerationRequest::Family::General, 3, 999,
                                     SearchThreshold::Homeomorphic));
    auto diffeo = search_pairs(config(EnumerationRequest::Family::General, 3, 999,
                                      SearchThreshold::Diffeomorphic));
    std::set<decltype(key(homeo[0]))> homotopy_keys, homeo_keys;
    for (const auto& rep : homotopy_reports) homotopy_keys.insert(key(rep));
    for (const auto& rep : homeo) homeo_keys.insert(key(rep));
    std::int64_t bad = 0;
    for (const auto& rep : homeo)
        if (!homotopy_keys.count(key(rep))) ++bad;
    for (const auto& rep : diffeo)
        if (!homeo_keys.count(key(rep))) ++bad;
    std::ostringstream os;
    os << homotopy_reports.size() << " homotopy / " << homeo.size() << " homeo / "
       << diffeo.size() << " diffeo pairs below r = 1000";
    if (bad) os << ", " << bad << " inclusion violations";
    return {bad == 0, os.str()};
}

// ---- criterion 9f: one cohomogeneity-one space per odd order ----
Outcome prop_cohom_one() {
    std::atomic<std::int64_t> bad{0};
    parallel_for(499, [&](std::int64_t i) {
        std::int64_t r = 3 + 2 * i;  // 3, 5, ..., 999
        int ones = 0;
        for (const auto& ns : enum_positively_curved(r))
            if (cohomogeneity(ns) == Cohomogeneity::One) ++ones;
        if (ones != 1) ++bad;
    });
    return {bad == 0, "odd orders 3..999" +
                          (bad ? ", " + std::to_string(bad.load()) + " violations" : "")};
}

bool report(int number, const char* label, const Outcome& o, double seconds) {
    std::cout << "criterion " << number << " [" << label << "]: "
              << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << " ("
              << std::fixed << std::setprecision(1) << seconds << "s)\n";
    std::cout.unsetf(std::ios::fixed);
    return o.pass;
}

template <class Fn>
bool timed(int number, const char* label, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return report(number, label, o, dt.count());
}

}  // namespace

int main() {
    if (const char* env = std::getenv("ESCH_THREADS"))
        g_threads = std::max(1, atoi(env));
    else
        g_threads = std::max(1u, std::thread::hardware_concurrency());
    std::cout << "acceptance suite, " << g_threads << " threads\n";

    bool all = true;
    std::vector<PairReport> homotopy_reports;

    all &= timed(1, "basic invariants vs published rows", basic_exactness);
    all &= timed(2, "Kreck-Stolz values vs published rows", ks_exactness);
    all &= timed(3, "tables 4.1 and 4.4 reproduce in full", table_reproduction);
    all &= timed(4, "192 homotopy pairs for r < 1000",
                 [&] { return homotopy_count(homotopy_reports); });
    all &= timed(5, "54 condition-(C) failures for r < 5000", condc_count);
    all &= timed(6, "unique homeo pair up to r = 4001", theorem_b_desk);
    all &= timed(7, "diffeomorphic 3-Sasakian pair at r = 5143925", theorem_a_desk);
    std::cout << "criterion 8 [extended searches]: DOCUMENTED - run via the CLI as "
                 "described in README.md (hours-long, not part of CI)\n";
    all &= timed(9, "property: 45-integrality + refinement", prop_integrality);
    all &= timed(9, "property: certified vs double oracle", prop_oracle);
    all &= timed(9, "property: row/column agreement r < 2000", prop_row_column);
    all &= timed(9, "property: normalization fuzz", prop_normalize);
    all &= timed(9, "property: relation monotonicity",
                 [&] { return prop_monotone(homotopy_reports); });
    all &= timed(9, "property: one cohomogeneity-one space per order", prop_cohom_one);

    std::cout << (all ? "ACCEPTANCE: all criteria pass\n"
                      : "ACCEPTANCE: FAILURES PRESENT\n");
    return all ? 0 : 1;
}
