#include "cf/enumeration.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace cf {

namespace {

using forms::catalan;
using forms::fuss_catalan;
using forms::fuss_catalan_2nd;
using forms::gen_narayana;
using forms::multi_narayana;
using forms::narayana;
using forms::narayana_circular;
using forms::t_number;

struct Check {
    std::string params;
    FamilySpec fam;
    Statistic stat;
    long long lo = 0, hi = 0;  // stated value range of the statistic
    Int expected = 0;
};

Selector sel(Selector::Kind k, long long m = 0, long long res = 0) {
    Selector s;
    s.kind = k;
    s.modulus = m;
    s.residue = res;
    return s;
}

FamilySpec famP(long long n, long long r, long long h) {
    FamilySpec f;
    f.kind = FamilySpec::Kind::P;
    f.n = n;
    f.r = r;
    f.h = h;
    return f;
}

FamilySpec famQ(long long k, long long l, long long r, long long s, long long h) {
    FamilySpec f;
    f.kind = FamilySpec::Kind::Q;
    f.k = k;
    f.l = l;
    f.r = r;
    f.s = s;
    f.h = h;
    return f;
}

std::string par(std::initializer_list<std::pair<const char*, long long>> ps) {
    std::ostringstream os;
    bool first = true;
    for (auto& [name, v] : ps) {
        os << (first ? "" : ",") << name << "=" << v;
        first = false;
    }
    return os.str();
}

using Maker = std::function<std::vector<Check>(const TheoremBounds&)>;

long long nn(const TheoremBounds& b, long long dflt) { return b.max_n > 0 ? b.max_n : dflt; }
long long rr(const TheoremBounds& b, long long dflt) { return b.max_r > 0 ? b.max_r : dflt; }
long long kl(const TheoremBounds& b, long long dflt) { return b.max_kl > 0 ? b.max_kl : dflt; }

// ---- t5: the three Catalan forms on P(n,1,1) -------------------------------

std::vector<Check> make_t5(int part, const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long n = 1; n <= nn(b, 6); ++n) {
        Check c;
        c.params = par({{"n", n}});
        c.fam = famP(n, 1, 1);
        switch (part) {
            case 1:
                c.fam.cons.first_step = "U";
                c.stat = Statistic::selector(sel(Selector::Kind::up_start));
                c.lo = 1, c.hi = n + 1;
                c.expected = catalan(n, 0);
                break;
            case 2:
                c.fam.cons.first_step = "D";
                c.stat = Statistic::selector(sel(Selector::Kind::down_start));
                c.lo = 1, c.hi = n;
                c.expected = catalan(n, 2);
                break;
            case 3:
                c.stat = Statistic::selector(sel(Selector::Kind::all_starts));
                c.lo = 1, c.hi = 2 * n + 1;
                c.expected = catalan(n, 1);
                break;
        }
        out.push_back(std::move(c));
    }
    return out;
}

// ---- t6 (r=1) and the six-part N_r theorem (r>1) ---------------------------

std::vector<Check> make_six_forms(int part, long long r, const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long n = 1; n <= nn(b, r == 1 ? 6 : 4); ++n) {
        for (long long k = 1; k <= n; ++k) {
            Check c;
            c.params = r == 1 ? par({{"n", n}, {"k", k}}) : par({{"r", r}, {"n", n}, {"k", k}});
            c.fam = famP(n, r, 1);
            switch (part) {
                case 1:
                    c.fam.cons.first_step = "D";
                    c.fam.cons.last_step = 'U';
                    c.fam.cons.peak_count = k - 1;
                    c.stat = Statistic::selector(sel(Selector::Kind::peak));
                    c.lo = 0, c.hi = k - 1;
                    c.expected = r == 1 ? narayana(n, k, 1) : gen_narayana(n, k, r, 2);
                    break;
                case 2:
                    c.fam.cons.first_step = "U";
                    c.fam.cons.last_step = 'D';
                    c.fam.cons.valley_count = k - 1;
                    c.stat = Statistic::selector(sel(Selector::Kind::valley));
                    c.lo = 0, c.hi = k - 1;
                    c.expected = r == 1 ? narayana(n, k, 1) : gen_narayana(n, k, r, 2);
                    break;
                case 3:
                    c.fam.cons.first_step = "U";
                    c.fam.cons.last_step = 'U';
                    c.fam.cons.peak_count = k;  // start/end U: #double rises = rn-k
                    c.stat = Statistic::selector(sel(Selector::Kind::double_rise));
                    c.lo = 0, c.hi = r * n - k;
                    c.expected = r == 1 ? narayana(n, k, 2) : gen_narayana(n, k, r, 1);
                    break;
                case 4:
                    if (k > n - 1) continue;
                    c.fam.cons.first_step = "D";
                    c.fam.cons.last_step = 'D';
                    c.fam.cons.valley_count = k;  // start/end D: #double falls = n-1-k
                    c.stat = Statistic::selector(sel(Selector::Kind::double_fall));
                    c.lo = 0, c.hi = n - k - 1;
                    c.expected = r == 1 ? narayana(n, k, 5) : gen_narayana(n, k, r, 4);
                    break;
                case 5:
                    c.fam.cons.first_step = "U";
                    c.fam.cons.peak_count = k;
                    c.stat = Statistic::selector(sel(Selector::Kind::up_start));
                    c.lo = 1, c.hi = r * n + 1;
                    c.expected = r == 1 ? narayana(n, k, 3) : gen_narayana(n, k, r, 3);
                    break;
                case 6:
                    c.fam.cons.first_step = "D";
                    c.fam.cons.valley_count = k;
                    c.stat = Statistic::selector(sel(Selector::Kind::down_start));
                    c.lo = 1, c.hi = n;
                    c.expected = r == 1 ? narayana(n, k, 0) : gen_narayana(n, k, r, 0);
                    break;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

// ---- the rest --------------------------------------------------------------

std::vector<Check> make_narayana_cf(const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long n = 1; n <= nn(b, 6); ++n)
        for (long long k = 1; k <= n; ++k) {
            Check c;
            c.params = par({{"n", n}, {"k", k}});
            c.fam = famP(n, 1, 0);
            c.fam.cons.desc_run_count = k;
            c.stat = Statistic::selector(sel(Selector::Kind::up_start), Statistic::CountKind::below);
            c.lo = 0, c.hi = n;
            c.expected = narayana(n, k, 3);
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<Check> make_circular(const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long n = 1; n <= nn(b, 5); ++n)
        for (long long k = 1; k <= n; ++k) {
            Check c;
            c.params = par({{"n", n}, {"k", k}});
            c.fam = famP(n, 1, 1);
            c.fam.cons.circular_peak_count = k;
            c.stat = Statistic::selector(sel(Selector::Kind::all_starts));
            c.lo = 1, c.hi = 2 * n + 1;
            c.expected = narayana_circular(n, k);
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<Check> make_t8(int part, const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long s = 1; s <= 2; ++s)
        for (long long k = 0; k <= kl(b, 6); ++k)
            for (long long l = 0; k + l <= kl(b, 6); ++l) {
                Check c;
                c.params = par({{"k", k}, {"l", l}, {"s", s}});
                c.fam = famQ(k, l, 1, s, 1);
                switch (part) {
                    case 1:
                        c.fam.cons.first_step = "U";
                        c.stat = Statistic::selector(sel(Selector::Kind::up_start));
                        c.lo = 1, c.hi = k + 1;
                        c.expected = t_number(k, l, 0);
                        break;
                    case 2:
                        if (k < 1) continue;
                        c.fam.cons.first_step = "D";
                        c.stat = Statistic::selector(sel(Selector::Kind::down_start));
                        c.lo = 1, c.hi = k;
                        c.expected = t_number(k, l, 1);
                        break;
                    case 3:
                        if (l < 1) continue;
                        c.fam.cons.first_step = "F";
                        c.stat = Statistic::selector(sel(Selector::Kind::flat_start));
                        c.lo = 1, c.hi = l;
                        c.expected = t_number(k, l, 5);
                        break;
                    case 4:
                        c.fam.cons.first_step = "UF";
                        c.stat = Statistic::selector(sel(Selector::Kind::up_or_flat_start));
                        c.lo = 1, c.hi = k + l + 1;
                        c.expected = t_number(k, l, 2);
                        break;
                    case 5:
                        if (k + l < 1) continue;
                        c.fam.cons.first_step = "DF";
                        c.stat = Statistic::selector(sel(Selector::Kind::down_or_flat_start));
                        c.lo = 1, c.hi = k + l;
                        c.expected = t_number(k, l, 3);
                        break;
                    case 6:
                        c.fam.cons.first_step = "UD";
                        c.stat = Statistic::selector(sel(Selector::Kind::up_or_down_start));
                        c.lo = 1, c.hi = 2 * k + 1;
                        c.expected = t_number(k, l, 4);
                        break;
                    case 7:
                        c.stat = Statistic::selector(sel(Selector::Kind::all_starts));
                        c.lo = 1, c.hi = 2 * k + l + 1;
                        c.expected = t_number(k, l, 6);
                        break;
                }
                out.push_back(std::move(c));
            }
    return out;
}

std::vector<Check> make_th91(int part, const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long n = part == 1 ? 2 : 1; n <= nn(b, 6); ++n)
        for (long long k = part == 1 ? 2 : 1; k <= n; ++k) {
            Check c;
            c.params = par({{"n", n}, {"k", k}});
            c.fam = famP(n - 1, 1, 2);
            if (part == 1) {
                // k-1 even down steps <=> n-k+1 even up steps (n even positions).
                c.fam.cons.first_step = "D";
                c.fam.cons.even_up_count = n - (k - 1);
                c.stat = Statistic::selector(sel(Selector::Kind::down_start_mod, 2, 0));
                c.lo = 1, c.hi = k - 1;
                c.expected = narayana(n, k, 4);
            } else {
                c.fam.cons.first_step = "U";
                c.fam.cons.even_up_count = k;
                c.stat = Statistic::selector(sel(Selector::Kind::up_start_mod, 2, 0));
                c.lo = 1, c.hi = k;
                c.expected = narayana(n, k, 1);
            }
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<Check> make_th11(int part, const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long r = 1; r <= rr(b, 3); ++r)
        for (long long n = 1; n <= nn(b, 3); ++n) {
            Check c;
            c.params = par({{"r", r}, {"n", n}});
            c.fam = famP(n, r, 1);
            switch (part) {
                case 1:
                    c.fam.cons.first_step = "U";
                    c.stat = Statistic::selector(sel(Selector::Kind::up_start));
                    c.lo = 1, c.hi = r * n + 1;
                    c.expected = fuss_catalan(n, r, 2);
                    break;
                case 2:
                    c.fam.cons.first_step = "D";
                    c.stat = Statistic::selector(sel(Selector::Kind::down_start));
                    c.lo = 1, c.hi = n;
                    c.expected = fuss_catalan(n, r, 1);
                    break;
                case 3:
                    c.stat = Statistic::selector(sel(Selector::Kind::all_starts));
                    c.lo = 1, c.hi = (r + 1) * n + 1;
                    c.expected = fuss_catalan(n, r, 0);
                    break;
            }
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<Check> make_cf_corollary_r(const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long r = 1; r <= rr(b, 3); ++r)
        for (long long n = 1; n <= nn(b, 3); ++n) {
            Check c;
            c.params = par({{"r", r}, {"n", n}});
            c.fam = famP(n, r, 0);
            c.stat = Statistic::selector(sel(Selector::Kind::up_start), Statistic::CountKind::below);
            c.lo = 0, c.hi = r * n;
            c.expected = fuss_catalan(n, r, 2);
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<Check> make_th12(int part, const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long r = 1; r <= rr(b, 3); ++r)
        for (long long n = 1; n <= nn(b, 3); ++n) {
            if (part == 1 && r * n - 1 < 1) continue;
            Check c;
            c.params = par({{"r", r}, {"n", n}});
            c.fam = famP(n, r, -1);
            switch (part) {
                case 1:
                    c.fam.cons.first_step = "U";
                    c.stat = Statistic::selector(sel(Selector::Kind::up_start),
                                                 Statistic::CountKind::on_or_above);
                    c.lo = 1, c.hi = r * n - 1;
                    c.expected = fuss_catalan_2nd(n, r, 2);
                    break;
                case 2:
                    c.fam.cons.first_step = "D";
                    c.stat = Statistic::selector(sel(Selector::Kind::down_start),
                                                 Statistic::CountKind::on_or_above);
                    c.lo = 1, c.hi = n;
                    c.expected = fuss_catalan_2nd(n, r, 1);
                    break;
                case 3:
                    c.stat = Statistic::selector(sel(Selector::Kind::all_starts),
                                                 Statistic::CountKind::on_or_above);
                    c.lo = 1, c.hi = (r + 1) * n - 1;
                    c.expected = fuss_catalan_2nd(n, r, 0);
                    break;
            }
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<Check> make_nrnara(int part, const TheoremBounds& b) {
    std::vector<Check> out;
    const long long r = 2;
    for (long long n = 2; n <= nn(b, 4); ++n) {
        // up steps: rn+1 split over residue classes 0..r, each class has n slots
        std::vector<long long> counts(static_cast<std::size_t>(r + 1), 0);
        std::function<void(long long, long long)> rec = [&](long long i, long long left) {
            if (i == r) {
                if (left > n) return;
                counts[static_cast<std::size_t>(r)] = left;
                if (part == 2) {
                    long long n0 = counts[0];
                    if (n0 < 1) return;
                    Check c;
                    std::ostringstream os;
                    os << "r=" << r << ",n=" << n << ",parts=";
                    for (std::size_t j = 0; j < counts.size(); ++j)
                        os << (j ? "/" : "") << counts[j];
                    c.params = os.str();
                    c.fam = famP(n - 1, r, r + 1);
                    c.fam.cons.first_step = "U";
                    c.fam.cons.mod_up_counts = counts;
                    c.stat = Statistic::selector(sel(Selector::Kind::up_start_mod, r + 1, 0));
                    c.lo = 1, c.hi = n0;
                    c.expected = multi_narayana(n, counts);
                    out.push_back(std::move(c));
                } else {
                    // counts here are the up classes; downs per class are n - ups
                    long long c0 = n - counts[0];  // = n_0 - 1 downs in class 0
                    if (c0 < 1) return;
                    std::vector<long long> parts(counts.size());
                    bool ok = true;
                    for (std::size_t j = 0; j < counts.size(); ++j) {
                        parts[j] = counts[j];  // n - downs_j = ups_j = n - n_j + 1
                        if (n - counts[j] < 0) ok = false;
                    }
                    if (!ok) return;
                    Check c;
                    std::ostringstream os;
                    os << "r=" << r << ",n=" << n << ",down-parts=";
                    for (std::size_t j = 0; j < counts.size(); ++j)
                        os << (j ? "/" : "") << (n - counts[j]);
                    c.params = os.str();
                    c.fam = famP(n - 1, r, r + 1);
                    c.fam.cons.first_step = "D";
                    c.fam.cons.mod_up_counts = counts;
                    c.stat = Statistic::selector(sel(Selector::Kind::down_start_mod, r + 1, 0));
                    c.lo = 1, c.hi = c0;
                    c.expected = multi_narayana(n, parts);
                    out.push_back(std::move(c));
                }
                return;
            }
            for (long long v = 0; v <= std::min(n, left); ++v) {
                counts[static_cast<std::size_t>(i)] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, r * n + 1);
    }
    return out;
}

std::vector<Check> make_simple_dist(const std::string& which, const TheoremBounds& b) {
    std::vector<Check> out;
    for (long long n = 1; n <= nn(b, 6); ++n) {
        Check c;
        c.params = par({{"n", n}});
        c.fam = famP(n, 1, 1);
        c.stat = Statistic::named(which == "sparre-andersen" ? "positive-vertices"
                                                             : "leftmost-highest");
        c.lo = 1, c.hi = 2 * n + 1;
        c.expected = catalan(n, 1);
        out.push_back(std::move(c));
    }
    return out;
}

const std::map<std::string, Maker>& registry() {
    static const std::map<std::string, Maker> reg = [] {
        std::map<std::string, Maker> m;
        for (int i = 1; i <= 3; ++i)
            m["t5." + std::to_string(i)] = [i](const TheoremBounds& b) { return make_t5(i, b); };
        for (int i = 1; i <= 6; ++i)
            m["t6." + std::to_string(i)] = [i](const TheoremBounds& b) {
                return make_six_forms(i, 1, b);
            };
        m["narayana-cf"] = make_narayana_cf;
        m["circular"] = make_circular;
        for (int i = 1; i <= 7; ++i)
            m["t8." + std::to_string(i)] = [i](const TheoremBounds& b) { return make_t8(i, b); };
        for (int i = 1; i <= 2; ++i)
            m["th91." + std::to_string(i)] = [i](const TheoremBounds& b) {
                return make_th91(i, b);
            };
        for (int i = 1; i <= 3; ++i)
            m["th11." + std::to_string(i)] = [i](const TheoremBounds& b) {
                return make_th11(i, b);
            };
        m["cf-corollary-r"] = make_cf_corollary_r;
        for (int i = 1; i <= 3; ++i)
            m["th12." + std::to_string(i)] = [i](const TheoremBounds& b) {
                return make_th12(i, b);
            };
        for (int i = 1; i <= 6; ++i)
            m["nr-nara-forms." + std::to_string(i)] = [i](const TheoremBounds& b) {
                return make_six_forms(i, 2, b);
            };
        for (int i = 1; i <= 2; ++i)
            m["nrnara." + std::to_string(i)] = [i](const TheoremBounds& b) {
                return make_nrnara(i, b);
            };
        m["sparre-andersen"] = [](const TheoremBounds& b) {
            return make_simple_dist("sparre-andersen", b);
        };
        m["leftmost-highest"] = [](const TheoremBounds& b) {
            return make_simple_dist("leftmost-highest", b);
        };
        return m;
    }();
    return reg;
}

}  // namespace

std::vector<std::string> theorem_ids() {
    std::vector<std::string> ids;
    for (auto& [id, maker] : registry()) ids.push_back(id);
    return ids;
}

TheoremReport verify_theorem(const std::string& id, const TheoremBounds& bounds) {
    auto it = registry().find(id);
    if (it == registry().end()) throw std::invalid_argument("unknown theorem id '" + id + "'");
    TheoremReport rep;
    rep.id = id;
    rep.pass = true;
    for (const Check& c : it->second(bounds)) {
        Verdict v = verify_equidistribution(c.fam, c.stat, std::pair{c.lo, c.hi});
        TheoremTuple t;
        t.params = c.params;
        t.uniform = v.uniform;
        t.common = v.uniform ? v.common : Int(-1);
        t.expected = c.expected;
        t.count_matches = v.uniform && v.common == c.expected;
        if (!t.uniform || !t.count_matches) rep.pass = false;
        rep.tuples.push_back(std::move(t));
    }
    return rep;
}

}  // namespace cf
