#include "cli.hpp"

#include <sptforge/combinatorics.hpp>
#include <sptforge/registry.hpp>
#include <sptforge/sptcrank.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>

namespace sptforge::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct RunConfig {
    Format format = Format::text;
    std::string output;
    int parallelism = 1;
    bool timing = true;

    std::string id = "*";
    std::optional<int> order;
    bool reference_bounds = false;

    std::string family;
    int t = 5;
    int p = 5;
    int b = 4;
    int n_max = 0;
    bool all_congruences = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void csv_row(std::ostream &out, const std::vector<std::string> &fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) {
            out << ',';
        }
        out << csv_field(fields[i]);
    }
    out << '\n';
}

Family family_arg(const RunConfig &cfg)
{
    if (cfg.family.empty()) {
        throw UsageError("--family is required");
    }
    try {
        return parse_family(cfg.family);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

int table_size(const RunConfig &cfg)
{
    if (cfg.n_max < 1 || cfg.n_max > kMaxTableSize) {
        throw UsageError("--max must be in [1, " + std::to_string(kMaxTableSize) + "]");
    }
    if (cfg.n_max + 1 > max_order()) {
        throw UsageError("--max exceeds the order cap " + std::to_string(max_order()));
    }
    return cfg.n_max;
}

Json report_json(const VerificationReport &r, bool timing)
{
    Json j;
    j["id"] = r.id;
    j["order"] = r.order;
    j["status"] = status_name(r.status);
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"power", r.first_mismatch->power},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["millis"] = timing ? Json(r.millis) : Json(nullptr);
    if (!r.notes.empty()) {
        j["notes"] = r.notes;
    }
    return j;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out)
{
    VerifyOptions opts;
    opts.reference_bounds = cfg.reference_bounds;
    if (cfg.order) {
        if (*cfg.order < 1 || *cfg.order > max_order()) {
            throw UsageError("--order must be in [1, " + std::to_string(max_order()) + "]");
        }
        opts.order = cfg.order;
    }
    const auto reports = verify_all(cfg.id, cfg.parallelism, opts);
    const bool ok = all_verified(reports);
    switch (cfg.format) {
    case Format::json: {
        Json j;
        j["status"] = ok ? "verified" : "mismatch";
        j["count"] = reports.size();
        j["reports"] = Json::array();
        for (const auto &r : reports) {
            j["reports"].push_back(report_json(r, cfg.timing));
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        csv_row(out, {"id", "order", "status", "mismatch_power", "lhs", "rhs", "millis"});
        for (const auto &r : reports) {
            const auto &m = r.first_mismatch;
            csv_row(out, {r.id, std::to_string(r.order), status_name(r.status), m ? std::to_string(m->power) : "",
                          m ? m->lhs : "", m ? m->rhs : "", cfg.timing ? std::to_string(r.millis) : ""});
        }
        break;
    case Format::text:
        for (const auto &r : reports) {
            out << r.id << "  order " << r.order << "  " << status_name(r.status);
            if (cfg.timing) {
                out << "  " << r.millis << " ms";
            }
            out << '\n';
            if (r.first_mismatch) {
                out << "  first mismatch at q^" << r.first_mismatch->power << ": lhs " << r.first_mismatch->lhs
                    << ", rhs " << r.first_mismatch->rhs << '\n';
            }
            for (const auto &n : r.notes) {
                out << "  " << n << '\n';
            }
        }
        out << reports.size() << " case(s), " << (ok ? "all verified" : "MISMATCH") << '\n';
        break;
    }
    return ok ? kExitOk : kExitMismatch;
}

// Writes rows as they are produced; json rows are elements of "rows".
class TableWriter {
public:
    TableWriter(std::ostream &out, Format f, Json header, std::vector<std::string> columns)
        : out_(out), format_(f), header_(std::move(header)), columns_(std::move(columns))
    {
        if (format_ == Format::csv) {
            csv_row(out_, columns_);
        } else if (format_ == Format::text) {
            for (std::size_t i = 0; i < columns_.size(); ++i) {
                out_ << (i ? "\t" : "") << columns_[i];
            }
            out_ << '\n';
        } else {
            std::string head = header_.dump();
            head.pop_back();
            out_ << head << (header_.empty() ? "" : ",") << "\"rows\":[";
        }
    }

    void row(const std::vector<std::string> &values)
    {
        if (format_ == Format::csv) {
            csv_row(out_, values);
        } else if (format_ == Format::text) {
            for (std::size_t i = 0; i < values.size(); ++i) {
                out_ << (i ? "\t" : "") << values[i];
            }
            out_ << '\n';
        } else {
            // counts and indices are numbers; coefficients stay strings since they outgrow int64
            static const std::set<std::string> small{"n", "p", "b", "max", "checked", "failure_n", "default_order"};
            Json j;
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (small.count(columns_[i])) {
                    j[columns_[i]] = values[i].empty() ? Json(nullptr) : Json(std::stol(values[i]));
                } else {
                    j[columns_[i]] = values[i];
                }
            }
            out_ << (rows_ ? "," : "") << j.dump();
        }
        ++rows_;
    }

    void finish(const std::string &status)
    {
        if (format_ == Format::json) {
            out_ << "],\"status\":" << Json(status).dump() << "}\n";
        } else if (format_ == Format::text && !status.empty()) {
            out_ << status << '\n';
        }
    }

private:
    std::ostream &out_;
    Format format_;
    Json header_;
    std::vector<std::string> columns_;
    long rows_ = 0;
};

int cmd_spt(const RunConfig &cfg, std::ostream &out)
{
    const Family f = family_arg(cfg);
    const int n_max = table_size(cfg);
    const auto table = spt_table(f, n_max);
    TableWriter w(out, cfg.format, Json{{"family", family_name(f)}}, {"n", "spt"});
    for (int n = 1; n <= n_max; ++n) {
        w.row({std::to_string(n), table[n].to_string()});
    }
    w.finish(cfg.format == Format::json ? "ok" : "");
    return kExitOk;
}

int cmd_crank(const RunConfig &cfg, std::ostream &out)
{
    const Family f = family_arg(cfg);
    const int n_max = table_size(cfg);
    if (cfg.t < 2) {
        throw UsageError("--t must be at least 2");
    }
    std::vector<std::string> cols{"n"};
    for (int k = 0; k < cfg.t; ++k) {
        cols.push_back("M" + std::to_string(k));
    }
    cols.push_back("spt");
    const auto rows = crank_table(f, cfg.t, n_max);
    TableWriter w(out, cfg.format, Json{{"family", family_name(f)}, {"t", cfg.t}}, cols);
    for (const auto &r : rows) {
        if (r.n < 1) {
            continue;
        }
        std::vector<std::string> v{std::to_string(r.n)};
        for (const auto &c : r.classes) {
            v.push_back(c.to_string());
        }
        v.push_back(r.spt.to_string());
        w.row(v);
    }
    w.finish(cfg.format == Format::json ? "ok" : "");
    return kExitOk;
}

int cmd_congruence(const RunConfig &cfg, std::ostream &out)
{
    const int n_max = table_size(cfg);
    std::vector<CongruenceSpec> specs;
    if (cfg.all_congruences) {
        specs = known_congruences();
    } else {
        if (cfg.p < 2 || cfg.b < 0 || cfg.b >= cfg.p) {
            throw UsageError("need --p >= 2 and 0 <= --b < --p");
        }
        specs.push_back({family_arg(cfg), cfg.p, cfg.b});
    }
    bool ok = true;
    TableWriter w(out, cfg.format, Json::object(),
                  {"family", "p", "b", "max", "checked", "status", "failure_n", "reason"});
    for (const auto &s : specs) {
        const auto r = check_congruence(s.family, s.p, s.b, n_max);
        ok = ok && r.holds();
        w.row({family_name(s.family), std::to_string(s.p), std::to_string(s.b), std::to_string(r.n_max),
               std::to_string(r.checked), r.holds() ? "holds" : "fails", r.failure ? std::to_string(r.failure->n) : "",
               r.failure ? r.failure->reason + (r.failure->detail.empty() ? "" : ": " + r.failure->detail) : ""});
    }
    w.finish(ok ? "holds" : "fails");
    return ok ? kExitOk : kExitMismatch;
}

int cmd_oracle(const RunConfig &cfg, std::ostream &out)
{
    const Family f = family_arg(cfg);
    const int n_max = table_size(cfg);
    const auto table = spt_table(f, n_max);
    bool ok = true;
    TableWriter w(out, cfg.format, Json{{"family", family_name(f)}}, {"n", "series", "oracle", "match"});
    for (int n = 1; n <= n_max; ++n) {
        const BigInt o = spt_oracle(f, n);
        const bool m = o == table[n];
        ok = ok && m;
        w.row({std::to_string(n), table[n].to_string(), o.to_string(), m ? "yes" : "no"});
    }
    w.finish(ok ? "agree" : "disagree");
    return ok ? kExitOk : kExitMismatch;
}

int cmd_list(const RunConfig &cfg, std::ostream &out)
{
    TableWriter w(out, cfg.format, Json::object(), {"id", "ring", "default_order", "citation"});
    for (const auto &c : catalog()) {
        w.row({c.id, c.ring_name(), std::to_string(c.default_order), c.citation});
    }
    w.finish(cfg.format == Format::json ? "ok" : "");
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Exact q-series verification of spt-crank-type identities", "sptforge"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
    };

    auto *verify = app.add_subcommand("verify", "Verify catalog identities");
    verify->add_option("--id", cfg.id, "Glob over catalog ids")->capture_default_str();
    verify->add_option("--order", cfg.order, "Raise the truncation order");
    verify->add_flag("--paper-bounds", cfg.reference_bounds, "Use the orders from the original verification");
    verify->add_option("--parallelism,-j", cfg.parallelism, "Worker threads")->check(CLI::Range(1, 256));
    verify->add_flag("!--no-timing", cfg.timing, "Omit wall times so output is reproducible");
    common(verify);

    auto *spt = app.add_subcommand("spt", "Table of spt_X(n)");
    spt->add_option("--family", cfg.family)->required();
    spt->add_option("--max", cfg.n_max)->required();
    common(spt);

    auto *crank = app.add_subcommand("crank", "Crank classes M_X(k, t, n)");
    crank->add_option("--family", cfg.family)->required();
    crank->add_option("--t", cfg.t)->required();
    crank->add_option("--max", cfg.n_max)->required();
    common(crank);

    auto *cong = app.add_subcommand("congruence", "Check spt_X(pn+b) = 0 (mod p)");
    cong->add_option("--family", cfg.family);
    cong->add_option("--p", cfg.p);
    cong->add_option("--b", cfg.b);
    cong->add_option("--max", cfg.n_max)->required();
    cong->add_flag("--all", cfg.all_congruences, "Every known congruence");
    common(cong);

    auto *oracle = app.add_subcommand("oracle-compare", "Compare the series with partition enumeration");
    oracle->add_option("--family", cfg.family)->required();
    oracle->add_option("--max", cfg.n_max)->required();
    common(oracle);

    auto *list = app.add_subcommand("list", "List catalog ids");
    common(list);

    std::vector<std::string> argv_store{"sptforge"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream *sink = &out;
    if (!cfg.output.empty()) {
        file = std::make_unique<std::ofstream>(cfg.output, std::ios::binary);
        if (!*file) {
            err << "cannot open " << cfg.output << '\n';
            return kExitUsage;
        }
        sink = file.get();
    }
    try {
        if (verify->parsed()) {
            return cmd_verify(cfg, *sink);
        }
        if (spt->parsed()) {
            return cmd_spt(cfg, *sink);
        }
        if (crank->parsed()) {
            return cmd_crank(cfg, *sink);
        }
        if (cong->parsed()) {
            return cmd_congruence(cfg, *sink);
        }
        if (oracle->parsed()) {
            return cmd_oracle(cfg, *sink);
        }
        return cmd_list(cfg, *sink);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
}

} // namespace sptforge::cli
