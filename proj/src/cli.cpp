#include "cf/cli.hpp"

#include "cf/bijections.hpp"
#include "cf/closed_forms.hpp"
#include "cf/enumeration.hpp"
#include "cf/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace cf::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, csv, json };

Format parse_format(const std::string& f) {
    if (f == "text") return Format::text;
    if (f == "csv") return Format::csv;
    if (f == "json") return Format::json;
    throw CLI::ValidationError("--format", "must be text, csv or json");
}

std::string rat_str(const series::Rat& q) { return q.str(); }

json series_to_json(const series::NamedSeries& ns) {
    json coeffs;
    if (auto* u = std::get_if<series::USeries>(&ns.value)) {
        coeffs = json::array();
        for (int i = 0; i <= u->order(); ++i) coeffs.push_back(rat_str((*u)[i]));
    } else if (auto* b = std::get_if<series::BSeries>(&ns.value)) {
        coeffs = json::array();
        for (int i = 0; i <= b->nx(); ++i) {
            json row = json::array();
            for (int j = 0; j <= b->ny(); ++j) row.push_back(rat_str(b->at(i, j)));
            coeffs.push_back(std::move(row));
        }
    } else {
        auto& t = std::get<series::TSeries>(ns.value);
        coeffs = json::array();
        for (int i = 0; i <= t.order(0); ++i) {
            json plane = json::array();
            for (int j = 0; j <= t.order(1); ++j) {
                json row = json::array();
                for (int k = 0; k <= t.order(2); ++k) row.push_back(rat_str(t.at(i, j, k)));
                plane.push_back(std::move(row));
            }
            coeffs.push_back(std::move(plane));
        }
    }
    json out;
    out["series"] = ns.name;
    out["vars"] = ns.vars;
    out["coeffs"] = std::move(coeffs);
    return out;
}

void print_series_text(const series::NamedSeries& ns, std::ostream& out) {
    if (auto* u = std::get_if<series::USeries>(&ns.value)) {
        for (int i = 0; i <= u->order(); ++i)
            out << ns.vars[0] << "^" << i << ": " << rat_str((*u)[i]) << "\n";
    } else if (auto* b = std::get_if<series::BSeries>(&ns.value)) {
        for (int i = 0; i <= b->nx(); ++i) {
            out << ns.vars[0] << "^" << i << ":";
            for (int j = 0; j <= b->ny(); ++j) out << " " << rat_str(b->at(i, j));
            out << "\n";
        }
    } else {
        auto& t = std::get<series::TSeries>(ns.value);
        for (int i = 0; i <= t.order(0); ++i) {
            out << ns.vars[0] << "^" << i << ":\n";
            for (int j = 0; j <= t.order(1); ++j) {
                out << "  ";
                for (int k = 0; k <= t.order(2); ++k) out << " " << rat_str(t.at(i, j, k));
                out << "\n";
            }
        }
    }
}

struct TableRange {
    long long row_lo, row_hi, col_lo, col_hi;
};

Int table_value(const std::string& name, long long k, long long l) {
    return name == "tkl" ? forms::t_number(k, l) : forms::z_number(k, l);
}

int cmd_table(const std::string& name, long long kmax, long long lmax, Format fmt,
              std::ostream& out) {
    if (name != "tkl" && name != "zkl")
        throw CLI::ValidationError("--name", "must be tkl or zkl");
    TableRange tr{name == "tkl" ? 0LL : 1LL, kmax, 0, lmax};
    if (fmt == Format::csv) {
        out << "k,l,value\n";
        for (long long k = tr.row_lo; k <= tr.row_hi; ++k)
            for (long long l = tr.col_lo; l <= tr.col_hi; ++l)
                out << k << "," << l << "," << table_value(name, k, l).str() << "\n";
    } else if (fmt == Format::json) {
        json rows = json::array();
        for (long long k = tr.row_lo; k <= tr.row_hi; ++k) {
            json row = json::array();
            for (long long l = tr.col_lo; l <= tr.col_hi; ++l)
                row.push_back(table_value(name, k, l).str());
            rows.push_back(std::move(row));
        }
        json j;
        j["table"] = name;
        j["kmax"] = std::to_string(kmax);
        j["lmax"] = std::to_string(lmax);
        j["rows"] = std::move(rows);
        out << j.dump(2) << "\n";
    } else {
        out << "k\\l";
        for (long long l = tr.col_lo; l <= tr.col_hi; ++l) out << "\t" << l;
        out << "\n";
        for (long long k = tr.row_lo; k <= tr.row_hi; ++k) {
            out << k;
            for (long long l = tr.col_lo; l <= tr.col_hi; ++l)
                out << "\t" << table_value(name, k, l).str();
            out << "\n";
        }
    }
    return 0;
}

int cmd_seq(const std::string& name, int count, long long r, Format fmt, std::ostream& out) {
    auto values = forms::sequence(name, count, r);
    if (fmt == Format::csv) {
        out << "i,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            out << i << "," << values[i].str() << "\n";
    } else if (fmt == Format::json) {
        json vals = json::array();
        for (auto& v : values) vals.push_back(v.str());
        json j;
        j["sequence"] = name;
        j["count"] = std::to_string(count);
        j["values"] = std::move(vals);
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            out << (i ? "," : "") << values[i].str();
        out << "\n";
    }
    return 0;
}

int cmd_dist(const std::string& family, const std::string& selector, const std::string& ck,
             const std::string& stat_name, Format fmt, std::ostream& out) {
    FamilySpec spec = FamilySpec::parse(family);
    Statistic stat = !stat_name.empty()
                         ? Statistic::named(stat_name)
                         : Statistic::selector(Selector::parse(selector), count_kind_from_name(ck));
    Verdict v = verify_equidistribution(spec, stat);
    if (fmt == Format::csv) {
        out << "value,count\n";
        for (auto& [value, count] : v.table.counts)
            out << value << "," << count.str() << "\n";
    } else if (fmt == Format::json) {
        json counts;
        for (auto& [value, count] : v.table.counts)
            counts[std::to_string(value)] = count.str();
        json j;
        j["family"] = v.table.family;
        j["selector"] = v.table.statistic;
        j["counts"] = std::move(counts);
        j["uniform"] = v.uniform;
        j["common_count"] = v.uniform ? v.common.str() : "";
        out << j.dump(2) << "\n";
    } else {
        out << "family: " << v.table.family << "\nstatistic: " << v.table.statistic << "\n";
        for (auto& [value, count] : v.table.counts)
            out << value << "\t" << count.str() << "\n";
        out << "total: " << v.table.total.str() << "\n";
        out << "uniform: " << (v.uniform ? "yes" : "no");
        if (v.uniform) out << " (common count " << v.common.str() << ")";
        out << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& theorem, const TheoremBounds& bounds, Format fmt,
               std::ostream& out) {
    std::vector<std::string> ids =
        theorem == "all" ? theorem_ids() : std::vector<std::string>{theorem};
    bool all_pass = true;
    json jreports = json::array();
    for (const std::string& id : ids) {
        TheoremReport rep = verify_theorem(id, bounds);
        all_pass = all_pass && rep.pass;
        if (fmt == Format::json) {
            json tuples = json::array();
            for (auto& t : rep.tuples) {
                json jt;
                jt["params"] = t.params;
                jt["uniform"] = t.uniform;
                jt["common"] = t.uniform ? t.common.str() : "";
                jt["expected"] = t.expected.str();
                jt["ok"] = t.uniform && t.count_matches;
                tuples.push_back(std::move(jt));
            }
            json j;
            j["theorem"] = rep.id;
            j["pass"] = rep.pass;
            j["tuples"] = std::move(tuples);
            jreports.push_back(std::move(j));
        } else if (fmt == Format::csv) {
            if (&id == &ids.front()) out << "theorem,params,uniform,common,expected,ok\n";
            for (auto& t : rep.tuples)
                out << rep.id << "," << t.params << "," << (t.uniform ? "yes" : "no") << ","
                    << (t.uniform ? t.common.str() : "") << "," << t.expected.str() << ","
                    << (t.uniform && t.count_matches ? "yes" : "no") << "\n";
        } else {
            for (auto& t : rep.tuples)
                out << rep.id << " [" << t.params << "] uniform=" << (t.uniform ? "yes" : "no")
                    << " common=" << (t.uniform ? t.common.str() : "-")
                    << " expected=" << t.expected.str() << " "
                    << (t.uniform && t.count_matches ? "ok" : "FAIL") << "\n";
            out << rep.id << ": " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.tuples.size()
                << " tuples)\n";
        }
    }
    if (fmt == Format::json) out << jreports.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_series(const std::string& name, int order, long long r, Format fmt, std::ostream& out) {
    series::NamedSeries ns = series::named_series(name, order, r);
    if (fmt == Format::json) {
        out << series_to_json(ns).dump(2) << "\n";
    } else if (fmt == Format::csv) {
        if (auto* u = std::get_if<series::USeries>(&ns.value)) {
            out << "n,coeff\n";
            for (int i = 0; i <= u->order(); ++i) out << i << "," << rat_str((*u)[i]) << "\n";
        } else if (auto* b = std::get_if<series::BSeries>(&ns.value)) {
            out << "i,j,coeff\n";
            for (int i = 0; i <= b->nx(); ++i)
                for (int j = 0; j <= b->ny(); ++j)
                    out << i << "," << j << "," << rat_str(b->at(i, j)) << "\n";
        } else {
            auto& t = std::get<series::TSeries>(ns.value);
            out << "i,j,k,coeff\n";
            for (int i = 0; i <= t.order(0); ++i)
                for (int j = 0; j <= t.order(1); ++j)
                    for (int k = 0; k <= t.order(2); ++k)
                        out << i << "," << j << "," << k << "," << rat_str(t.at(i, j, k)) << "\n";
        }
    } else {
        print_series_text(ns, out);
    }
    return 0;
}

int cmd_identity(const std::string& name, int order, std::ostream& out) {
    std::vector<std::string> ids =
        name == "all" ? series::identity_ids() : std::vector<std::string>{name};
    bool ok = true;
    for (const std::string& id : ids) {
        series::IdentityReport rep = series::identity_check(id, order);
        out << id << ": " << (rep.pass ? "PASS" : "FAIL") << " — " << rep.detail << "\n";
        ok = ok && rep.pass;
    }
    return ok ? 0 : 1;
}

int cmd_bijection(const std::string& name, long long n, std::ostream& out) {
    auto print_pair = [&](const std::string& a, const std::string& b) {
        out << std::left << std::setw(2 * n + 4) << a << " -> " << b << "\n";
    };
    if (name == "schroder-flatten" || name == "schroder-elevate") {
        bool flatten = name == "schroder-flatten";
        for (long long k = 0; k <= n; ++k) {
            FamilySpec spec;
            spec.kind = FamilySpec::Kind::Q;
            spec.k = k;
            spec.l = n - k;
            spec.r = 1;
            spec.s = 2;
            spec.h = 0;
            spec.cons.nonnegative = true;
            if (flatten) spec.cons.no_flat_on_axis = true;
            enumerate_family(spec, [&](const Path& p) {
                if (p.step_count() == 0) return;
                if (flatten) {
                    print_pair(p.word(), bijections::schroder_flatten(p).word());
                } else {
                    bool axis_flat = false;
                    for (int i = 0; i < p.step_count(); ++i)
                        if (p.step(i).dy == 0 && p.height(i) == 0) axis_flat = true;
                    if (axis_flat) print_pair(p.word(), bijections::schroder_elevate(p).word());
                }
            });
        }
        return 0;
    }
    if (name == "pair2motzkin") {
        FamilySpec spec;
        spec.kind = FamilySpec::Kind::P;
        spec.n = n - 1;
        spec.r = 1;
        spec.h = 2;
        enumerate_family(spec, [&](const Path& p) {
            print_pair(p.word(), bijections::colored_word(bijections::pair_to_two_colored(p)));
        });
        return 0;
    }
    if (name == "motzkin-class") {
        // paths of n+1 unit steps ending at height 1 with exactly one
        // down-or-flat step starting on or below the axis
        Selector df{Selector::Kind::down_or_flat_start};
        for (long long k = 0; 2 * k + 1 <= n + 1; ++k) {
            FamilySpec spec;
            spec.kind = FamilySpec::Kind::Q;
            spec.k = k;
            spec.l = n - 2 * k;
            spec.r = 1;
            spec.s = 1;
            spec.h = 1;
            if (spec.l < 0) continue;
            enumerate_family(spec, [&](const Path& p) {
                if (count_on_or_below(p, df) != 1) return;
                if (p.step_count() >= 1 && p.step(0).dy == 0)
                    print_pair(p.word(),
                               bijections::motzkin_class_map(p, bijections::MotzkinCase::leading_flat)
                                   .word());
                else if (p.step_count() >= 2 && p.step(0).dy < 0 && p.step(1).dy > 0)
                    print_pair(p.word(),
                               bijections::motzkin_class_map(p, bijections::MotzkinCase::leading_du)
                                   .word());
            });
        }
        return 0;
    }
    throw CLI::ValidationError(
        "--name", "must be schroder-flatten, schroder-elevate, pair2motzkin or motzkin-class");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lattice-path statistics: tables, equidistribution checks, "
                 "generating series and bijections"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format: text, csv or json")
        ->capture_default_str();

    auto* table = app.add_subcommand("table", "Emit a T(k,l) or Z(k,l) table");
    std::string table_name = "tkl";
    long long kmax = 6, lmax = 6;
    table->add_option("--name", table_name, "tkl or zkl")->required();
    table->add_option("--kmax", kmax, "largest k")->capture_default_str();
    table->add_option("--lmax", lmax, "largest l")->capture_default_str();

    auto* seq = app.add_subcommand("seq", "Emit a number sequence");
    std::string seq_name;
    int seq_count = 10;
    long long seq_r = 1;
    seq->add_option("--name", seq_name,
                    "catalan, motzkin, riordan, schroder, small-schroder or fuss-catalan")
        ->required();
    seq->add_option("--count", seq_count, "number of terms")->capture_default_str();
    seq->add_option("--r", seq_r, "order parameter for fuss-catalan")->capture_default_str();

    auto* dist = app.add_subcommand("dist", "Exact statistic distribution over a path family");
    std::string dist_family, dist_selector, dist_ck = "on-or-below", dist_stat;
    dist->add_option("--family", dist_family, "family spec, e.g. P:n=2,r=1,h=1+first=U")
        ->required();
    dist->add_option("--selector", dist_selector, "vertex selector, e.g. up-start");
    dist->add_option("--count-kind", dist_ck, "on-or-below, on-or-above, below or above")
        ->capture_default_str();
    dist->add_option("--stat", dist_stat,
                     "named statistic instead of a selector: descending-runs, "
                     "leftmost-highest or positive-vertices");

    auto* verify = app.add_subcommand("verify", "Verify an equidistribution theorem exhaustively");
    std::string verify_id;
    TheoremBounds bounds;
    verify->add_option("--theorem", verify_id, "theorem id or 'all'")->required();
    verify->add_option("--max-n", bounds.max_n, "size bound override");
    verify->add_option("--max-r", bounds.max_r, "r bound override");
    verify->add_option("--max-kl", bounds.max_kl, "k+l bound override");

    auto* ser = app.add_subcommand("series", "Print coefficients of a named series");
    std::string series_name;
    int series_order = 8;
    long long series_r = 1;
    ser->add_option("--name", series_name, "series name, e.g. c, E, f_upper, G1U")->required();
    ser->add_option("--order", series_order, "truncation order")->capture_default_str();
    ser->add_option("--r", series_r, "order parameter for the generalized-path series")
        ->capture_default_str();

    auto* ident = app.add_subcommand("identity", "Check a generating-function identity");
    std::string ident_name;
    int ident_order = 10;
    ident->add_option("--name", ident_name, "identity id or 'all'")->required();
    ident->add_option("--order", ident_order, "comparison order")->capture_default_str();

    auto* bij = app.add_subcommand("bijection", "Print input -> output pairs of a bijection");
    std::string bij_name;
    long long bij_n = 3;
    bij->add_option("--name", bij_name,
                    "schroder-flatten, schroder-elevate, pair2motzkin or motzkin-class")
        ->required();
    bij->add_option("--n", bij_n, "size parameter")->capture_default_str();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        Format fmt = parse_format(format);
        if (table->parsed()) return cmd_table(table_name, kmax, lmax, fmt, out);
        if (seq->parsed()) return cmd_seq(seq_name, seq_count, seq_r, fmt, out);
        if (dist->parsed()) {
            if (dist_stat.empty() == dist_selector.empty())
                throw CLI::ValidationError("--selector",
                                           "give exactly one of --selector and --stat");
            return cmd_dist(dist_family, dist_selector, dist_ck, dist_stat, fmt, out);
        }
        if (verify->parsed()) return cmd_verify(verify_id, bounds, fmt, out);
        if (ser->parsed()) return cmd_series(series_name, series_order, series_r, fmt, out);
        if (ident->parsed()) return cmd_identity(ident_name, ident_order, out);
        if (bij->parsed()) return cmd_bijection(bij_name, bij_n, out);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cf::cli
