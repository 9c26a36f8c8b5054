#include "cf/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cf {

namespace {

long long parse_ll(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + s + "' in " + ctx);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    FamilySpec spec;
    auto plus_parts = split(text, '+');
    const std::string head = plus_parts[0];
    auto colon = head.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family '" + text + "': expected P:..., Q:... or Pstar:...");
    const std::string kind = head.substr(0, colon);
    if (kind == "P") spec.kind = Kind::P;
    else if (kind == "Q") spec.kind = Kind::Q;
    else if (kind == "Pstar") spec.kind = Kind::Pstar;
    else throw std::invalid_argument("family kind '" + kind + "' is not P, Q or Pstar");

    for (const std::string& item : split(head.substr(colon + 1), ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("family parameter '" + item + "' needs name=value");
        std::string name = item.substr(0, eq);
        long long value = parse_ll(item.substr(eq + 1), "family parameter " + name);
        if (name == "n") spec.n = value;
        else if (name == "r") spec.r = value;
        else if (name == "h") spec.h = value;
        else if (name == "k") spec.k = value;
        else if (name == "l") spec.l = value;
        else if (name == "s") spec.s = value;
        else throw std::invalid_argument("unknown family parameter '" + name + "'");
    }

    for (std::size_t i = 1; i < plus_parts.size(); ++i) {
        const std::string& c = plus_parts[i];
        auto eq = c.find('=');
        std::string name = eq == std::string::npos ? c : c.substr(0, eq);
        std::string val = eq == std::string::npos ? "" : c.substr(eq + 1);
        auto need_val = [&]() {
            if (val.empty())
                throw std::invalid_argument("constraint '" + name + "' needs a value");
        };
        if (name == "nonneg" || name == "nonnegative") spec.cons.nonnegative = true;
        else if (name == "strictly-positive-interior") spec.cons.strictly_positive_interior = true;
        else if (name == "no-flat-on-axis") spec.cons.no_flat_on_axis = true;
        else if (name == "first" || name == "first-step") {
            need_val();
            spec.cons.first_step = val;  // any of the given labels
        } else if (name == "last" || name == "last-step") {
            need_val();
            spec.cons.last_step = val[0];
        } else if (name == "peak-count") {
            need_val();
            spec.cons.peak_count = parse_ll(val, name);
        } else if (name == "valley-count") {
            need_val();
            spec.cons.valley_count = parse_ll(val, name);
        } else if (name == "circular-peak-count") {
            need_val();
            spec.cons.circular_peak_count = parse_ll(val, name);
        } else if (name == "desc-run-count") {
            need_val();
            spec.cons.desc_run_count = parse_ll(val, name);
        } else if (name == "even-up-count") {
            need_val();
            spec.cons.even_up_count = parse_ll(val, name);
        } else if (name == "mod-up-counts") {
            need_val();
            std::vector<long long> counts;
            for (const std::string& part : split(val, '/')) counts.push_back(parse_ll(part, name));
            spec.cons.mod_up_counts = std::move(counts);
        } else {
            throw std::invalid_argument("unknown constraint '" + name + "'");
        }
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::P: os << "P:n=" << n << ",r=" << r << ",h=" << h; break;
        case Kind::Pstar: os << "Pstar:n=" << n << ",r=" << r << ",h=" << h; break;
        case Kind::Q:
            os << "Q:k=" << k << ",l=" << l << ",r=" << r << ",s=" << s << ",h=" << h;
            break;
    }
    if (cons.nonnegative) os << "+nonneg";
    if (cons.strictly_positive_interior) os << "+strictly-positive-interior";
    if (cons.no_flat_on_axis) os << "+no-flat-on-axis";
    if (cons.first_step) os << "+first=" << *cons.first_step;
    if (cons.last_step) os << "+last=" << *cons.last_step;
    if (cons.peak_count) os << "+peak-count=" << *cons.peak_count;
    if (cons.valley_count) os << "+valley-count=" << *cons.valley_count;
    if (cons.circular_peak_count) os << "+circular-peak-count=" << *cons.circular_peak_count;
    if (cons.desc_run_count) os << "+desc-run-count=" << *cons.desc_run_count;
    if (cons.even_up_count) os << "+even-up-count=" << *cons.even_up_count;
    if (cons.mod_up_counts) {
        os << "+mod-up-counts=";
        for (std::size_t i = 0; i < cons.mod_up_counts->size(); ++i)
            os << (i ? "/" : "") << (*cons.mod_up_counts)[i];
    }
    return os.str();
}

StepSetPtr FamilySpec::step_set() const {
    switch (kind) {
        case Kind::P: return std::make_shared<const StepSet>(StepSet::up_down(r));
        case Kind::Pstar: return std::make_shared<const StepSet>(StepSet::star(r));
        case Kind::Q: return std::make_shared<const StepSet>(StepSet::up_down_flat(r, s));
    }
    throw std::logic_error("unreachable");
}

std::map<char, long long> FamilySpec::step_budget() const {
    std::map<char, long long> b;
    switch (kind) {
        case Kind::P:
            b['U'] = r * n + h;
            b['D'] = n;
            break;
        case Kind::Pstar:
            b['U'] = n;
            b['D'] = r * n - h;
            break;
        case Kind::Q:
            b['U'] = r * k + h;
            b['D'] = k;
            b['F'] = l;
            break;
    }
    for (auto& [label, count] : b)
        if (count < 0)
            throw std::invalid_argument("family " + to_string() + ": negative " +
                                        std::string(1, label) + "-step count " +
                                        std::to_string(count));
    if (kind == Kind::Q && s < 1)
        throw std::invalid_argument("family " + to_string() + ": flat advance s must be >= 1");
    if (r < 1) throw std::invalid_argument("family " + to_string() + ": r must be >= 1");
    return b;
}

long long FamilySpec::total_steps() const {
    long long t = 0;
    for (auto& [label, count] : step_budget()) t += count;
    return t;
}

long long default_path_budget() {
    if (const char* env = std::getenv("CF_MAX_PATHS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("CF_MAX_PATHS must be a positive integer");
    }
    return 10'000'000;
}

namespace {

struct Generator {
    const FamilySpec& spec;
    const std::function<void(const Path&)>& fn;
    long long budget;
    long long delivered = 0;

    StepSetPtr set;
    std::vector<int> order;            // step indices in ascending label order
    std::vector<long long> remaining;  // per step index
    std::vector<int> seq;
    std::vector<char> kinds;           // per step index: U/D/F by dy sign

    long long height = 0;
    int total = 0;

    explicit Generator(const FamilySpec& s, const std::function<void(const Path&)>& f,
                       long long b)
        : spec(s), fn(f), budget(b), set(s.step_set()) {
        auto need = spec.step_budget();
        remaining.assign(set->size(), 0);
        for (std::size_t i = 0; i < set->size(); ++i) {
            char lbl = set->label(static_cast<int>(i));
            auto it = need.find(lbl);
            remaining[i] = it == need.end() ? 0 : it->second;
            total += static_cast<int>(remaining[i]);
            const Step& st = set->step(static_cast<int>(i));
            kinds.push_back(st.dy > 0 ? 'U' : (st.dy < 0 ? 'D' : 'F'));
        }
        for (std::size_t i = 0; i < set->size(); ++i) order.push_back(static_cast<int>(i));
        std::sort(order.begin(), order.end(),
                  [&](int a, int b2) { return set->label(a) < set->label(b2); });
    }

    bool step_allowed(int idx, int pos) const {
        const Step& st = set->step(idx);
        long long ny = height + st.dy;
        const auto& c = spec.cons;
        if (c.nonnegative && ny < 0) return false;
        if (c.strictly_positive_interior && pos + 1 < total && ny <= 0) return false;
        if (c.no_flat_on_axis && st.dy == 0 && height == 0) return false;
        if (c.first_step && pos == 0 && c.first_step->find(set->label(idx)) == std::string::npos)
            return false;
        if (c.last_step && pos + 1 == total && set->label(idx) != *c.last_step) return false;
        return true;
    }

    bool leaf_accept(const Path& p) const {
        const auto& c = spec.cons;
        if (c.peak_count && peak_count(p) != *c.peak_count) return false;
        if (c.valley_count && valley_count(p) != *c.valley_count) return false;
        if (c.circular_peak_count && circular_peak_count(p) != *c.circular_peak_count) return false;
        if (c.desc_run_count && descending_runs(p) != *c.desc_run_count) return false;
        if (c.even_up_count) {
            long long cnt = 0;
            for (int i = 0; i < p.step_count(); ++i)
                if (p.step(i).dy > 0 && p.vertices()[static_cast<std::size_t>(i)].x % 2 == 0) ++cnt;
            if (cnt != *c.even_up_count) return false;
        }
        if (c.mod_up_counts) {
            long long m = static_cast<long long>(c.mod_up_counts->size());
            std::vector<long long> cnt(static_cast<std::size_t>(m), 0);
            for (int i = 0; i < p.step_count(); ++i)
                if (p.step(i).dy > 0)
                    ++cnt[static_cast<std::size_t>(p.vertices()[static_cast<std::size_t>(i)].x % m)];
            if (cnt != *c.mod_up_counts) return false;
        }
        return true;
    }

    void run() { recurse(0); }

    void recurse(int pos) {
        if (pos == total) {
            Path p(set, seq);
            if (!leaf_accept(p)) return;
            if (++delivered > budget)
                throw std::runtime_error("enumeration budget of " + std::to_string(budget) +
                                         " paths exceeded for family " + spec.to_string() +
                                         " (raise CF_MAX_PATHS to override)");
            fn(p);
            return;
        }
        for (int idx : order) {
            if (remaining[static_cast<std::size_t>(idx)] == 0) continue;
            if (!step_allowed(idx, pos)) continue;
            const Step& st = set->step(idx);
            remaining[static_cast<std::size_t>(idx)]--;
            seq.push_back(idx);
            height += st.dy;
            recurse(pos + 1);
            height -= st.dy;
            seq.pop_back();
            remaining[static_cast<std::size_t>(idx)]++;
        }
    }
};

}  // namespace

void enumerate_family(const FamilySpec& spec, const std::function<void(const Path&)>& fn,
                      long long budget) {
    if (budget <= 0) budget = default_path_budget();
    Generator g(spec, fn, budget);
    g.run();
}

Int count_family(const FamilySpec& spec, long long budget) {
    Int n = 0;
    enumerate_family(spec, [&](const Path&) { ++n; }, budget);
    return n;
}

Statistic Statistic::selector(const Selector& s, CountKind ck) {
    Statistic st;
    st.kind = Kind::selector_count;
    st.sel = s;
    st.count_kind = ck;
    return st;
}

Statistic Statistic::named(const std::string& name) {
    Statistic st;
    if (name == "descending-runs") st.kind = Kind::descending_runs;
    else if (name == "leftmost-highest") st.kind = Kind::leftmost_highest;
    else if (name == "positive-vertices") st.kind = Kind::positive_vertices;
    else throw std::invalid_argument("unknown statistic '" + name + "'");
    return st;
}

std::string Statistic::name() const {
    switch (kind) {
        case Kind::selector_count: return sel.name() + ":" + count_kind_name(count_kind);
        case Kind::descending_runs: return "descending-runs";
        case Kind::leftmost_highest: return "leftmost-highest";
        case Kind::positive_vertices: return "positive-vertices";
    }
    return "?";
}

long long Statistic::eval(const Path& p) const {
    switch (kind) {
        case Kind::selector_count:
            switch (count_kind) {
                case CountKind::on_or_below: return count_on_or_below(p, sel);
                case CountKind::on_or_above: return count_on_or_above(p, sel);
                case CountKind::below: return count_below(p, sel);
                case CountKind::above: return count_above(p, sel);
            }
            break;
        case Kind::descending_runs: return descending_runs(p);
        case Kind::leftmost_highest: return leftmost_highest_index(p);
        case Kind::positive_vertices: return positive_vertex_count(p);
    }
    throw std::logic_error("unreachable");
}

Statistic::CountKind count_kind_from_name(const std::string& name) {
    if (name == "on-or-below") return Statistic::CountKind::on_or_below;
    if (name == "on-or-above") return Statistic::CountKind::on_or_above;
    if (name == "below") return Statistic::CountKind::below;
    if (name == "above") return Statistic::CountKind::above;
    throw std::invalid_argument("unknown count kind '" + name + "'");
}

std::string count_kind_name(Statistic::CountKind ck) {
    switch (ck) {
        case Statistic::CountKind::on_or_below: return "on-or-below";
        case Statistic::CountKind::on_or_above: return "on-or-above";
        case Statistic::CountKind::below: return "below";
        case Statistic::CountKind::above: return "above";
    }
    return "?";
}

DistributionTable distribution_table(const FamilySpec& spec, const Statistic& stat,
                                     long long budget) {
    DistributionTable table;
    table.family = spec.to_string();
    table.statistic = stat.name();
    enumerate_family(
        spec,
        [&](const Path& p) {
            table.counts[stat.eval(p)] += 1;
            table.total += 1;
        },
        budget);
    return table;
}

Verdict verify_equidistribution(const FamilySpec& spec, const Statistic& stat,
                                std::optional<std::pair<long long, long long>> domain,
                                long long budget) {
    Verdict v;
    v.table = distribution_table(spec, stat, budget);
    if (domain && domain->first > domain->second)
        throw std::invalid_argument("verify_equidistribution: empty statistic domain");

    if (!domain) {
        if (v.table.counts.empty()) {
            v.uniform = true;
            v.common = 0;
            return v;
        }
        domain = {v.table.counts.begin()->first, v.table.counts.rbegin()->first};
    }
    // Any value outside the declared domain is a failure.
    for (auto& [value, count] : v.table.counts)
        if (value < domain->first || value > domain->second) {
            v.uniform = false;
            return v;
        }
    Int common = -1;
    v.uniform = true;
    for (long long j = domain->first; j <= domain->second; ++j) {
        auto it = v.table.counts.find(j);
        Int c = it == v.table.counts.end() ? Int(0) : it->second;
        if (common < 0) common = c;
        else if (c != common) v.uniform = false;
    }
    if (v.uniform) v.common = common;
    return v;
}

}  // namespace cf
