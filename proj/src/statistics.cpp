#include "cf/statistics.hpp"

#include <algorithm>
#include <stdexcept>

namespace cf {

namespace {

char step_kind(const Step& s) { return s.dy > 0 ? 'U' : (s.dy < 0 ? 'D' : 'F'); }

bool kind_in(char k, const char* set) {
    for (const char* c = set; *c; ++c)
        if (*c == k) return true;
    return false;
}

long long parse_ll(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + s + "' in selector " + ctx);
    }
}

}  // namespace

Selector Selector::parse(const std::string& name) {
    static const std::pair<const char*, Kind> plain[] = {
        {"up-start", Kind::up_start},
        {"down-start", Kind::down_start},
        {"flat-start", Kind::flat_start},
        {"all-starts", Kind::all_starts},
        {"peak", Kind::peak},
        {"valley", Kind::valley},
        {"double-rise", Kind::double_rise},
        {"double-fall", Kind::double_fall},
        {"circular-peak", Kind::circular_peak},
        {"up-or-flat-start", Kind::up_or_flat_start},
        {"down-or-flat-start", Kind::down_or_flat_start},
        {"up-or-down-start", Kind::up_or_down_start},
    };
    for (auto& [n, k] : plain)
        if (name == n) return Selector{k};

    for (auto prefix : {std::pair{"up-start-mod:", Kind::up_start_mod},
                        std::pair{"down-start-mod:", Kind::down_start_mod}}) {
        const std::string pre = prefix.first;
        if (name.rfind(pre, 0) == 0) {
            auto rest = name.substr(pre.size());
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("selector '" + name + "' needs the form " + pre + "m:res");
            Selector s{prefix.second};
            s.modulus = parse_ll(rest.substr(0, colon), name);
            s.residue = parse_ll(rest.substr(colon + 1), name);
            if (s.modulus < 1 || s.residue < 0 || s.residue >= s.modulus)
                throw std::invalid_argument("selector '" + name + "': need 0 <= res < m");
            return s;
        }
    }
    throw std::invalid_argument("unknown selector '" + name + "'");
}

std::string Selector::name() const {
    switch (kind) {
        case Kind::up_start: return "up-start";
        case Kind::down_start: return "down-start";
        case Kind::flat_start: return "flat-start";
        case Kind::all_starts: return "all-starts";
        case Kind::peak: return "peak";
        case Kind::valley: return "valley";
        case Kind::double_rise: return "double-rise";
        case Kind::double_fall: return "double-fall";
        case Kind::circular_peak: return "circular-peak";
        case Kind::up_start_mod:
            return "up-start-mod:" + std::to_string(modulus) + ":" + std::to_string(residue);
        case Kind::down_start_mod:
            return "down-start-mod:" + std::to_string(modulus) + ":" + std::to_string(residue);
        case Kind::up_or_flat_start: return "up-or-flat-start";
        case Kind::down_or_flat_start: return "down-or-flat-start";
        case Kind::up_or_down_start: return "up-or-down-start";
    }
    return "?";
}

bool Selector::is_pair_kind() const {
    return kind == Kind::peak || kind == Kind::valley || kind == Kind::double_rise ||
           kind == Kind::double_fall;
}

namespace {

std::vector<int> select_impl(const Path& p, const Selector& sel, bool cyclic_pairs) {
    const int m = p.step_count();
    std::vector<int> out;

    auto check_kind_present = [&](char k, const char* what) {
        if (!p.step_set().has_kind(k))
            throw std::invalid_argument(std::string("selector ") + sel.name() + " needs a " + what +
                                        " step in the step set");
    };

    auto start_select = [&](const char* kinds) {
        for (int i = 0; i < m; ++i)
            if (kind_in(step_kind(p.step(i)), kinds)) out.push_back(i);
    };

    auto pair_select = [&](char a, char b) {
        for (int i = 0; i + 1 < m; ++i)
            if (step_kind(p.step(i)) == a && step_kind(p.step(i + 1)) == b) out.push_back(i + 1);
        if (cyclic_pairs && m >= 1 && step_kind(p.step(m - 1)) == a && step_kind(p.step(0)) == b)
            out.push_back(0);
        std::sort(out.begin(), out.end());
    };

    switch (sel.kind) {
        case Selector::Kind::up_start:
            check_kind_present('U', "rising");
            start_select("U");
            break;
        case Selector::Kind::down_start:
            check_kind_present('D', "falling");
            start_select("D");
            break;
        case Selector::Kind::flat_start:
            check_kind_present('F', "flat");
            start_select("F");
            break;
        case Selector::Kind::all_starts:
            start_select("UDF");
            break;
        case Selector::Kind::up_or_flat_start:
            check_kind_present('F', "flat");
            start_select("UF");
            break;
        case Selector::Kind::down_or_flat_start:
            check_kind_present('F', "flat");
            start_select("DF");
            break;
        case Selector::Kind::up_or_down_start:
            start_select("UD");
            break;
        case Selector::Kind::peak: pair_select('U', 'D'); break;
        case Selector::Kind::valley: pair_select('D', 'U'); break;
        case Selector::Kind::double_rise: pair_select('U', 'U'); break;
        case Selector::Kind::double_fall: pair_select('D', 'D'); break;
        case Selector::Kind::circular_peak: {
            for (int i = 0; i + 1 < m; ++i)
                if (step_kind(p.step(i)) == 'U' && step_kind(p.step(i + 1)) == 'D')
                    out.push_back(i + 1);
            if (m >= 1 && step_kind(p.step(m - 1)) == 'U' && step_kind(p.step(0)) == 'D')
                out.push_back(0);
            std::sort(out.begin(), out.end());
            break;
        }
        case Selector::Kind::up_start_mod:
        case Selector::Kind::down_start_mod: {
            char want = sel.kind == Selector::Kind::up_start_mod ? 'U' : 'D';
            check_kind_present(want, want == 'U' ? "rising" : "falling");
            for (int i = 0; i < m; ++i) {
                if (step_kind(p.step(i)) != want) continue;
                long long pos = p.vertices()[static_cast<std::size_t>(i)].x;
                if (((pos % sel.modulus) + sel.modulus) % sel.modulus == sel.residue)
                    out.push_back(i);
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<int> select_vertices(const Path& p, const Selector& sel) {
    return select_impl(p, sel, /*cyclic_pairs=*/false);
}

std::vector<int> select_vertices_cyclic(const Path& p, const Selector& sel) {
    return select_impl(p, sel, /*cyclic_pairs=*/true);
}

namespace {
template <typename Pred>
long long count_selected(const Path& p, const Selector& sel, Pred pred) {
    long long n = 0;
    for (int i : select_vertices(p, sel))
        if (pred(p.height(i))) ++n;
    return n;
}
}  // namespace

long long count_on_or_below(const Path& p, const Selector& sel) {
    return count_selected(p, sel, [](long long y) { return y <= 0; });
}

long long count_on_or_above(const Path& p, const Selector& sel) {
    return count_selected(p, sel, [](long long y) { return y >= 0; });
}

long long count_below(const Path& p, const Selector& sel) {
    return count_selected(p, sel, [](long long y) { return y < 0; });
}

long long count_above(const Path& p, const Selector& sel) {
    return count_selected(p, sel, [](long long y) { return y > 0; });
}

long long descending_runs(const Path& p) {
    long long runs = 0;
    char prev = 0;
    for (int i = 0; i < p.step_count(); ++i) {
        char k = step_kind(p.step(i));
        if (k == 'D' && prev != 'D') ++runs;
        prev = k;
    }
    return runs;
}

int leftmost_highest_index(const Path& p) {
    long long best = p.height(0);
    int at = 0;
    for (int i = 1; i <= p.step_count(); ++i) {
        if (p.height(i) > best) {
            best = p.height(i);
            at = i;
        }
    }
    return at;
}

long long positive_vertex_count(const Path& p) {
    long long n = 0;
    for (const Vertex& v : p.vertices())
        if (v.y > 0) ++n;
    return n;
}

long long peak_count(const Path& p) {
    return static_cast<long long>(select_vertices(p, Selector{Selector::Kind::peak}).size());
}
long long valley_count(const Path& p) {
    return static_cast<long long>(select_vertices(p, Selector{Selector::Kind::valley}).size());
}
long long double_rise_count(const Path& p) {
    return static_cast<long long>(select_vertices(p, Selector{Selector::Kind::double_rise}).size());
}
long long double_fall_count(const Path& p) {
    return static_cast<long long>(select_vertices(p, Selector{Selector::Kind::double_fall}).size());
}
long long circular_peak_count(const Path& p) {
    return static_cast<long long>(select_vertices(p, Selector{Selector::Kind::circular_peak}).size());
}

}  // namespace cf
