#include "esch/cli.hpp"

#include "CLI11.hpp"
#include "esch/pipeline.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace esch {

namespace {

std::string pretty(const QModZ& q) {
    if (q.v.get_den() == 1) return q.v.get_num().get_str();
    return to_string(q.v);
}

std::int64_t parse_int(const std::string& s) {
    size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
    return v;
}

std::vector<std::int64_t> parse_ints(const std::string& csv, size_t n, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(csv);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + " '" + csv + "'");
    }
    if (out.size() != n)
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(n) +
                                    " comma-separated integers, got '" + csv + "'");
    return out;
}

int default_threads() {
    if (const char* env = std::getenv("ESCH_THREADS")) {
        try {
            int n = static_cast<int>(parse_int(env));
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid ESCH_THREADS='" << env << "'\n";
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

struct SearchFlags {
    std::string family = "eschenburg";
    std::string relation = "basic";
    std::int64_t r_min = 3, r_max = 999;
    std::string out_path, format;
    std::string checkpoint_dir;
    std::int64_t block_size = 1000;
    int threads = default_threads();
    bool progress = false;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f, bool with_relation) {
    cmd->add_option("--family", f.family, "eschenburg|sasakian")
        ->check(CLI::IsMember({"eschenburg", "sasakian"}));
    if (with_relation)
        cmd->add_option("--relation", f.relation, "basic|homotopy|homeo|diffeo")
            ->check(CLI::IsMember({"basic", "homotopy", "homeo", "diffeo"}));
    cmd->add_option("--r-min", f.r_min, "smallest order (odd)");
    cmd->add_option("--r-max", f.r_max, "largest order (odd)");
    cmd->add_option("--out", f.out_path, "output path (default: stdout)");
    cmd->add_option("--format", f.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", f.threads, "worker threads (default: ESCH_THREADS or cores)");
    cmd->add_option("--checkpoint-dir", f.checkpoint_dir, "shard directory for resumable runs");
    cmd->add_option("--block-size", f.block_size, "odd r-values per block (default 1000)");
    cmd->add_flag("--progress", f.progress, "per-block progress on stderr");
}

SearchConfig to_config(const SearchFlags& f) {
    SearchConfig cfg;
    cfg.request.family = f.family == "sasakian" ? EnumerationRequest::Family::Sasakian
                                                : EnumerationRequest::Family::General;
    cfg.request.r_min = f.r_min;
    cfg.request.r_max = f.r_max;
    if (f.relation == "homotopy")
        cfg.threshold = SearchThreshold::Homotopy;
    else if (f.relation == "homeo")
        cfg.threshold = SearchThreshold::Homeomorphic;
    else if (f.relation == "diffeo")
        cfg.threshold = SearchThreshold::Diffeomorphic;
    else
        cfg.threshold = SearchThreshold::Basic;
    cfg.threads = f.threads;
    cfg.block_size = f.block_size;
    cfg.checkpoint_dir = f.checkpoint_dir;
    cfg.progress = f.progress;
    return cfg;
}

int run_enumerate(const SearchFlags& f) {
    SearchConfig cfg = to_config(f);
    bool csv = f.format.empty() || f.format == "csv";
    if (csv) {
        std::ostringstream os;
        os << record_csv_header() << "\n";
        enumerate_stream(cfg, [&](std::vector<InvariantRecord>&& recs) {
            for (const auto& rec : recs) os << record_to_csv(rec) << "\n";
        });
        write_output(f.out_path, os.str());
    } else {
        write_output(f.out_path, records_to_json(enumerate_records(cfg)));
    }
    return 0;
}

int run_pairs(const SearchFlags& f) {
    SearchConfig cfg = to_config(f);
    auto reports = search_pairs(cfg);
    bool json = f.format.empty() || f.format == "json";
    if (json) {
        write_output(f.out_path, pairs_to_json(reports));
    } else {
        std::ostringstream os;
        os << pair_csv_header() << "\n";
        for (const auto& rep : reports) os << pair_to_csv(rep) << "\n";
        write_output(f.out_path, os.str());
    }
    return 0;
}

int run_invariants(const std::string& k_csv, const std::string& l_csv) {
    auto kv = parse_ints(k_csv, 3, "--k triple");
    auto lv = parse_ints(l_csv, 3, "--l triple");
    ParamPair pp = make_param_pair({kv[0], kv[1], kv[2]}, {lv[0], lv[1], lv[2]});
    if (!is_free(pp)) throw std::invalid_argument("pair is not free");
    if (!is_positively_curved(pp))
        throw std::invalid_argument("pair is not positively curved");

    InvariantRecord rec = full_record(pp);
    std::cout << "r=" << rec.basic.r_abs << " s=" << rec.basic.s.value
              << " p1=" << rec.basic.p1;
    if (rec.ks)
        std::cout << " s1=" << pretty(rec.ks->s1) << " s2=" << pretty(rec.ks->s2)
                  << " s3=" << pretty(rec.ks->s3) << " s22=" << pretty(rec.ks->s22);
    std::cout << " linking=" << pretty(rec.basic.linking)
              << " cohom=" << to_string(rec.cohom)
              << " condC=" << to_string(rec.cond_line()) << "\n";
    if (!rec.ks) {
        std::cerr << "condition (C) fails: no coprime row or column\n";
        return 3;
    }
    return 0;
}

int run_verify_lens(std::int64_t p, const std::string& params_csv) {
    auto pv = parse_ints(params_csv, 4, "--params");
    LensSpace L{p, {pv[0], pv[1], pv[2], pv[3]}};
    CertifiedSums cs = trig_sums(L);
    auto show = [](const Rat& q) {
        return q.get_den() == 1 ? q.get_num().get_str() : to_string(q);
    };
    std::cout << "T=" << show(cs.T) << " S=" << show(cs.S) << " R=" << show(cs.R)
              << " U=" << show(cs.U) << "\n";
    std::cout << "s1=" << pretty(lens_s1(L));
    std::int64_t sum = pv[0] + pv[1] + pv[2] + pv[3];
    if (sum % 2 == 0)
        std::cout << " s2=" << pretty(lens_s2(L)) << " s3=" << pretty(lens_s3(L));
    std::cout << "\n";
    return 0;
}

int run_table(const std::string& id) {
    TableCheck check = reproduce_table(id);
    std::cout << check.rendered;
    if (!check.pass) {
        std::cerr << "table " << id << " FAILED: " << check.diff << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact topological classification of positively curved Eschenburg spaces"};
    app.require_subcommand(1);

    SearchFlags enum_flags, pair_flags;
    auto* cmd_enum = app.add_subcommand(
        "enumerate", "list spaces with their invariants over a range of orders");
    add_search_flags(cmd_enum, enum_flags, false);

    auto* cmd_pairs = app.add_subcommand(
        "pairs", "find pairs related up to the requested equivalence");
    add_search_flags(cmd_pairs, pair_flags, true);

    std::string k_csv, l_csv;
    auto* cmd_inv = app.add_subcommand("invariants", "invariants of one space");
    cmd_inv->add_option("--k", k_csv, "k1,k2,k3")->required();
    cmd_inv->add_option("--l", l_csv, "l1,l2,l3")->required();

    std::int64_t lens_p = 1;
    std::string lens_params;
    auto* cmd_lens = app.add_subcommand("verify-lens", "certified lens-space sums");
    cmd_lens->add_option("--p", lens_p, "order of the cyclic group")->required();
    cmd_lens->add_option("--params", lens_params, "p1,p2,p3,p4")->required();

    std::string table_id;
    auto* cmd_table = app.add_subcommand("table", "recompute a bundled reference table");
    cmd_table->add_option("id", table_id, "one of 4.1 .. 4.6")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_enum->parsed()) return run_enumerate(enum_flags);
        if (cmd_pairs->parsed()) return run_pairs(pair_flags);
        if (cmd_inv->parsed()) return run_invariants(k_csv, l_csv);
        if (cmd_lens->parsed()) return run_verify_lens(lens_p, lens_params);
        if (cmd_table->parsed()) return run_table(table_id);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace esch
