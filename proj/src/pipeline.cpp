#include "esch/pipeline.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace esch {

const char* to_string(SearchThreshold t) {
    switch (t) {
        case SearchThreshold::Basic: return "basic";
        case SearchThreshold::Homotopy: return "homotopy";
        case SearchThreshold::Homeomorphic: return "homeo";
        case SearchThreshold::Diffeomorphic: return "diffeo";
    }
    return "?";
}

namespace {

namespace fs = std::filesystem;

struct Block {
    std::int64_t lo, hi;  // inclusive odd bounds
};

std::vector<Block> partition(std::int64_t r_min, std::int64_t r_max, std::int64_t block_size) {
    std::vector<Block> out;
    std::int64_t span = 2 * block_size;  // block_size odd values
    for (std::int64_t lo = r_min; lo <= r_max; lo += span)
        out.push_back({lo, std::min(lo + span - 2, r_max)});
    return out;
}

/* Overflow-safe polynomial invariants for stage-1 bucketing: entries stay
 * far below 2^42 at every supported scale, so __int128 covers the cubes. */
struct Light {
    std::int64_t s_bal = 0;
    std::int64_t p1 = 0;
};

Light light_basic(const Triple& k, const Triple& l, std::int64_t r_abs) {
    using I = __int128;
    I s3 = I(k[0]) * k[1] * k[2] - I(l[0]) * l[1] * l[2];
    I s1 = I(k[0]) + k[1] + k[2];
    I s2k = I(k[0]) * k[1] + I(k[0]) * k[2] + I(k[1]) * k[2];

    Light out;
    I s = s3 % r_abs;
    if (s < 0) s += r_abs;
    if (2 * s > r_abs) s -= r_abs;
    out.s_bal = static_cast<std::int64_t>(s);
    I p1 = (2 * s1 * s1 - 6 * s2k) % r_abs;
    if (p1 < 0) p1 += r_abs;
    out.p1 = static_cast<std::int64_t>(p1);
    return out;
}

Relation min_relation(SearchThreshold t) {
    switch (t) {
        case SearchThreshold::Homotopy: return Relation::HomotopyEquivalent;
        case SearchThreshold::Homeomorphic: return Relation::Homeomorphic;
        case SearchThreshold::Diffeomorphic: return Relation::Diffeomorphic;
        case SearchThreshold::Basic: break;
    }
    return Relation::None;
}

bool params_less(const ParamPair& a, const ParamPair& b) {
    return std::tie(a.k, a.l) < std::tie(b.k, b.l);
}

/* Stage 1 + stage 2 for all spaces sharing one order r.  `params` holds the
 * representation each space's invariants are evaluated in, already sorted. */
void pairs_for_order(std::int64_t r, const std::vector<ParamPair>& params,
                     SearchThreshold threshold, std::vector<PairReport>& out) {
    bool use_p1 = threshold != SearchThreshold::Homotopy;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<size_t>> buckets;
    for (size_t i = 0; i < params.size(); ++i) {
        Light li = light_basic(params[i].k, params[i].l, r);
        buckets[{use_p1 ? li.p1 : 0, std::llabs(li.s_bal)}].push_back(i);
    }

    std::map<size_t, InvariantRecord> cache;
    auto record_at = [&](size_t i) -> const InvariantRecord& {
        auto it = cache.find(i);
        if (it == cache.end()) {
            InvariantRecord rec = full_record(params[i]);
            Light li = light_basic(params[i].k, params[i].l, r);
            if (rec.basic.r_abs != r || rec.basic.s.value != li.s_bal ||
                rec.basic.p1 != li.p1)
                throw std::logic_error("search: stage-1 invariants disagree with records");
            it = cache.emplace(i, std::move(rec)).first;
        }
        return it->second;
    };

    Relation need = min_relation(threshold);
    for (const auto& [key, members] : buckets) {
        if (members.size() < 2) continue;
        for (size_t i : members) {
            const InvariantRecord& rec = record_at(i);
            if (!rec.ks) {
                // never dropped silently: kept in basic reports, flagged here
                std::ostringstream warn;
                warn << "[esch] warning: condition (C) fails inside candidate bucket: r="
                     << r << " k=" << rec.params.k[0] << "," << rec.params.k[1] << ","
                     << rec.params.k[2] << " l=" << rec.params.l[0] << ","
                     << rec.params.l[1] << "," << rec.params.l[2] << "\n";
                std::cerr << warn.str();
            }
        }
        for (size_t x = 0; x < members.size(); ++x)
            for (size_t y = x + 1; y < members.size(); ++y) {
                const InvariantRecord& ra = record_at(members[x]);
                const InvariantRecord& rb = record_at(members[y]);
                PairVerdict v = compare_records(ra, rb);
                bool keep = threshold == SearchThreshold::Basic
                                ? true
                                : (v.classifiable && v.relation >= need);
                if (keep) out.push_back(PairReport{r, ra, rb, v});
            }
    }
}

// All parameter representations at each odd order in [lo, hi], ordered.
// General spaces use the normal form, Sasakian ones (a,b,c | a+b+c,0,0).
std::map<std::int64_t, std::vector<ParamPair>> params_by_order(
    const EnumerationRequest& req, std::int64_t lo, std::int64_t hi) {
    std::map<std::int64_t, std::vector<ParamPair>> grouped;
    if (req.family == EnumerationRequest::Family::General) {
        for (std::int64_t r = lo; r <= hi; r += 2) {
            auto spaces = enum_positively_curved(r);
            if (spaces.empty()) continue;
            auto& dst = grouped[r];
            dst.reserve(spaces.size());
            for (const auto& ns : spaces) dst.push_back(ns.pp);
        }
    } else {
        for (const auto& t : enum_range_sasakian(lo, hi))
            grouped[sasakian_order(t)].push_back(sasakian_to_params(t));
    }
    return grouped;
}

std::vector<PairReport> block_pairs(const SearchConfig& cfg, std::int64_t lo, std::int64_t hi) {
    std::vector<PairReport> out;
    for (auto& [r, params] : params_by_order(cfg.request, lo, hi))
        pairs_for_order(r, params, cfg.threshold, out);
    std::sort(out.begin(), out.end(), [](const PairReport& a, const PairReport& b) {
        if (a.r != b.r) return a.r < b.r;
        if (a.a.params != b.a.params) return params_less(a.a.params, b.a.params);
        return params_less(a.b.params, b.b.params);
    });
    return out;
}

std::vector<InvariantRecord> block_records(const SearchConfig& cfg, std::int64_t lo,
                                           std::int64_t hi) {
    std::vector<InvariantRecord> out;
    for (auto& [r, params] : params_by_order(cfg.request, lo, hi))
        for (const auto& pp : params) out.push_back(full_record(pp));
    return out;
}

std::int64_t block_condc_failures(const SearchConfig& cfg, std::int64_t lo, std::int64_t hi) {
    std::int64_t count = 0;
    for (auto& [r, params] : params_by_order(cfg.request, lo, hi))
        for (const auto& pp : params)
            if (!condition_c(pp).holds()) ++count;
    return count;
}

std::optional<std::vector<std::string>> read_lines(const fs::path& p) {
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

void write_atomically(const fs::path& p, const std::string& content) {
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write checkpoint shard " + tmp.string());
        out << content;
    }
    fs::rename(tmp, p);
}

std::string shard_name(const SearchConfig& cfg, const std::string& kind, const Block& b) {
    std::ostringstream os;
    os << kind << "-"
       << (cfg.request.family == EnumerationRequest::Family::General ? "eschenburg"
                                                                     : "sasakian");
    if (kind == "pairs") os << "-" << to_string(cfg.threshold);
    os << "-" << std::setw(12) << std::setfill('0') << b.lo << "-" << std::setw(12)
       << std::setfill('0') << b.hi << ".csv";
    return os.str();
}

/* Block engine: fixed partition into r-blocks, worker pool per wave, results
 * consumed strictly in block order.  With a checkpoint directory, finished
 * blocks are stored as CSV shards and picked up again on resume, so output
 * is identical whether or not a run was interrupted, and for any thread
 * count. */
template <class Result>
void run_blocks(const SearchConfig& cfg, const std::string& kind,
                const std::function<Result(std::int64_t, std::int64_t)>& compute,
                const std::function<std::string(const Result&)>& serialize,
                const std::function<Result(const std::vector<std::string>&)>& deserialize,
                const std::function<void(Result&&)>& sink) {
    validate(cfg.request);
    if (cfg.threads < 1)
        throw std::invalid_argument("search: thread count must be >= 1");
    if (cfg.block_size < 1)
        throw std::invalid_argument("search: block size must be >= 1");

    const bool ckpt = !cfg.checkpoint_dir.empty();
    if (ckpt) fs::create_directories(cfg.checkpoint_dir);

    auto blocks = partition(cfg.request.r_min, cfg.request.r_max, cfg.block_size);
    std::mutex log_mutex;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

    const size_t wave = static_cast<size_t>(cfg.threads) * 4;
    for (size_t base = 0; base < blocks.size(); base += wave) {
        const size_t n = std::min(wave, blocks.size() - base);
        std::vector<std::optional<Result>> results(n);
        std::atomic<size_t> next{0};

        auto work_one = [&](size_t i) {
            const Block& b = blocks[base + i];
            auto t0 = std::chrono::steady_clock::now();
            bool resumed = false;
            if (ckpt) {
                if (auto lines = read_lines(fs::path(cfg.checkpoint_dir) /
                                            shard_name(cfg, kind, b))) {
                    results[i] = deserialize(*lines);
                    resumed = true;
                }
            }
            if (!resumed) {
                results[i] = compute(b.lo, b.hi);
                if (ckpt)
                    write_atomically(fs::path(cfg.checkpoint_dir) / shard_name(cfg, kind, b),
                                     serialize(*results[i]));
            }
            if (cfg.progress) {
                std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
                std::lock_guard<std::mutex> lk(log_mutex);
                std::cerr << "[esch] " << kind << " block " << b.lo << ".." << b.hi
                          << (resumed ? " resumed" : " done") << " (" << dt.count()
                          << "s)\n";
            }
        };

        auto work = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    work_one(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(log_mutex);
                    if (!failed.exchange(true)) failure = std::current_exception();
                    return;
                }
            }
        };

        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (failed.load()) std::rethrow_exception(failure);

        for (size_t i = 0; i < n; ++i) sink(std::move(*results[i]));
    }
}

std::string serialize_pairs(const std::vector<PairReport>& reps) {
    std::string out;
    for (const auto& rep : reps) {
        out += pair_to_csv(rep);
        out += '\n';
    }
    return out;
}

std::vector<PairReport> deserialize_pairs(const std::vector<std::string>& lines) {
    std::vector<PairReport> out;
    out.reserve(lines.size());
    for (const auto& line : lines) out.push_back(pair_from_csv(line));
    return out;
}

std::string serialize_records(const std::vector<InvariantRecord>& recs) {
    std::string out;
    for (const auto& rec : recs) {
        out += record_to_csv(rec);
        out += '\n';
    }
    return out;
}

std::vector<InvariantRecord> deserialize_records(const std::vector<std::string>& lines) {
    std::vector<InvariantRecord> out;
    out.reserve(lines.size());
    for (const auto& line : lines) out.push_back(record_from_csv(line));
    return out;
}

}  // namespace

std::vector<PairReport> search_pairs(const SearchConfig& cfg) {
    std::vector<PairReport> all;
    run_blocks<std::vector<PairReport>>(
        cfg, "pairs", [&](std::int64_t lo, std::int64_t hi) { return block_pairs(cfg, lo, hi); },
        serialize_pairs, deserialize_pairs, [&](std::vector<PairReport>&& reps) {
            all.insert(all.end(), std::make_move_iterator(reps.begin()),
                       std::make_move_iterator(reps.end()));
        });
    return all;
}

void enumerate_stream(const SearchConfig& cfg,
                      const std::function<void(std::vector<InvariantRecord>&&)>& sink) {
    run_blocks<std::vector<InvariantRecord>>(
        cfg, "spaces",
        [&](std::int64_t lo, std::int64_t hi) { return block_records(cfg, lo, hi); },
        serialize_records, deserialize_records, sink);
}

std::vector<InvariantRecord> enumerate_records(const SearchConfig& cfg) {
    std::vector<InvariantRecord> all;
    enumerate_stream(cfg, [&](std::vector<InvariantRecord>&& recs) {
        all.insert(all.end(), std::make_move_iterator(recs.begin()),
                   std::make_move_iterator(recs.end()));
    });
    return all;
}

std::int64_t count_condition_c_failures(const SearchConfig& cfg) {
    SearchConfig local = cfg;
    local.checkpoint_dir.clear();
    std::int64_t total = 0;
    run_blocks<std::int64_t>(
        local, "condc",
        [&](std::int64_t lo, std::int64_t hi) { return block_condc_failures(local, lo, hi); },
        [](const std::int64_t& v) { return std::to_string(v); },
        [](const std::vector<std::string>& lines) {
            return lines.empty() ? 0LL : std::stoll(lines[0]);
        },
        [&](std::int64_t&& v) { total += v; });
    return total;
}

// ---------- serialization ----------

namespace {

CondLine cond_line_from_string(const std::string& s) {
    for (CondLine c : {CondLine::Col1, CondLine::Col2, CondLine::Col3, CondLine::Row1,
                       CondLine::Row2, CondLine::Row3, CondLine::Fail})
        if (s == to_string(c)) return c;
    throw std::invalid_argument("unknown condition-(C) line '" + s + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// the 14 per-space fields after the shared r column
void append_record_fields(std::vector<std::string>& f, const InvariantRecord& rec) {
    for (std::int64_t v : rec.params.k) f.push_back(std::to_string(v));
    for (std::int64_t v : rec.params.l) f.push_back(std::to_string(v));
    f.push_back(std::to_string(rec.basic.s.value));
    f.push_back(std::to_string(rec.basic.p1));
    f.push_back(to_string(rec.cohom));
    f.push_back(to_string(rec.cond_line()));
    if (rec.ks) {
        f.push_back(to_string(rec.ks->s1));
        f.push_back(to_string(rec.ks->s2));
        f.push_back(to_string(rec.ks->s3));
        f.push_back(to_string(rec.ks->s22));
    } else {
        f.insert(f.end(), 4, "");
    }
}

InvariantRecord record_from_fields(const std::vector<std::string>& f, size_t at,
                                   std::int64_t r) {
    Triple k{std::stoll(f[at]), std::stoll(f[at + 1]), std::stoll(f[at + 2])};
    Triple l{std::stoll(f[at + 3]), std::stoll(f[at + 4]), std::stoll(f[at + 5])};
    InvariantRecord rec = basic_record(make_param_pair(k, l));
    if (rec.basic.r_abs != r || rec.basic.s.value != std::stoll(f[at + 6]) ||
        rec.basic.p1 != std::stoll(f[at + 7]) ||
        std::string(to_string(rec.cohom)) != f[at + 8])
        throw std::runtime_error("record row: stored invariants disagree with parameters");
    CondLine line = cond_line_from_string(f[at + 9]);
    if (line != CondLine::Fail) {
        KSInvariants ks;
        ks.s1 = qmodz(parse_rat(f[at + 10]));
        ks.s2 = qmodz(parse_rat(f[at + 11]));
        ks.s3 = qmodz(parse_rat(f[at + 12]));
        ks.s22 = qmodz(parse_rat(f[at + 13]));
        ks.source = line;
        rec.ks = ks;
    }
    return rec;
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    return out;
}

}  // namespace

std::string record_csv_header() {
    return "r,k1,k2,k3,l1,l2,l3,s,p1,cohom,condC,s1,s2,s3,s22";
}

std::string record_to_csv(const InvariantRecord& rec) {
    std::vector<std::string> f{std::to_string(rec.basic.r_abs)};
    append_record_fields(f, rec);
    return join_csv(f);
}

InvariantRecord record_from_csv(const std::string& line) {
    auto f = split_csv(line);
    if (f.size() != 15)
        throw std::invalid_argument("record row: expected 15 fields");
    return record_from_fields(f, 1, std::stoll(f[0]));
}

std::string pair_csv_header() {
    return "r,"
           "k1A,k2A,k3A,l1A,l2A,l3A,sA,p1A,cohomA,condCA,s1A,s2A,s3A,s22A,"
           "k1B,k2B,k3B,l1B,l2B,l3B,sB,p1B,cohomB,condCB,s1B,s2B,s3B,s22B,"
           "relation,orientation";
}

std::string pair_to_csv(const PairReport& rep) {
    std::vector<std::string> f{std::to_string(rep.r)};
    append_record_fields(f, rep.a);
    append_record_fields(f, rep.b);
    if (!rep.verdict.classifiable) {
        f.push_back("unclassifiable");
        f.push_back("-");
    } else {
        f.push_back(to_string(rep.verdict.relation));
        f.push_back(to_string(rep.verdict.orientation));
    }
    return join_csv(f);
}

PairReport pair_from_csv(const std::string& line) {
    auto f = split_csv(line);
    if (f.size() != 31)
        throw std::invalid_argument("pair row: expected 31 fields");
    PairReport rep;
    rep.r = std::stoll(f[0]);
    rep.a = record_from_fields(f, 1, rep.r);
    rep.b = record_from_fields(f, 15, rep.r);
    rep.verdict = compare_records(rep.a, rep.b);
    // stored verdict must agree with the recomputed one
    std::string rel = rep.verdict.classifiable ? to_string(rep.verdict.relation)
                                               : "unclassifiable";
    std::string ori = rep.verdict.classifiable ? to_string(rep.verdict.orientation) : "-";
    if (rel != f[29] || ori != f[30])
        throw std::runtime_error("pair row: stored verdict disagrees with invariants");
    return rep;
}

namespace {

nlohmann::json space_json(const InvariantRecord& rec) {
    return nlohmann::json{{"k", rec.params.k}, {"l", rec.params.l}};
}

nlohmann::json invariants_json(const InvariantRecord& rec) {
    nlohmann::json j{
        {"r", rec.basic.r_abs},
        {"s", rec.basic.s.value},
        {"p1", rec.basic.p1},
        {"linking", to_string(rec.basic.linking)},
        {"cohom", to_string(rec.cohom)},
        {"condC", to_string(rec.cond_line())},
    };
    if (rec.ks) {
        j["s1"] = to_string(rec.ks->s1);
        j["s2"] = to_string(rec.ks->s2);
        j["s3"] = to_string(rec.ks->s3);
        j["s22"] = to_string(rec.ks->s22);
    }
    return j;
}

}  // namespace

std::string records_to_json(const std::vector<InvariantRecord>& recs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : recs) {
        nlohmann::json j = space_json(rec);
        j["invariants"] = invariants_json(rec);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string pairs_to_json(const std::vector<PairReport>& reps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : reps) {
        nlohmann::json j{
            {"r", rep.r},
            {"spaceA", space_json(rep.a)},
            {"spaceB", space_json(rep.b)},
            {"relation", rep.verdict.classifiable ? to_string(rep.verdict.relation)
                                                  : "unclassifiable"},
            {"orientation",
             rep.verdict.classifiable ? to_string(rep.verdict.orientation) : "-"},
            {"invariantsA", invariants_json(rep.a)},
            {"invariantsB", invariants_json(rep.b)},
        };
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace esch
