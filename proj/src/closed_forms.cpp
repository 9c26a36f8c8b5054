#include "cf/closed_forms.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace cf::forms {

namespace {

[[noreturn]] void domain_fail(const std::string& fam, int variant, const std::string& den) {
    throw std::domain_error(fam + " variant " + std::to_string(variant) +
                            ": denominator " + den + " is not positive");
}

Int frac(const Int& product, long long den, const std::string& fam, int variant,
         const std::string& den_name) {
    if (den <= 0) domain_fail(fam, variant, den_name + " = " + std::to_string(den));
    return exact_div(product, den, fam.c_str());
}

}  // namespace

int variant_count(Family f) {
    switch (f) {
        case Family::catalan: return 3;
        case Family::narayana: return 6;
        case Family::t: return 7;
        case Family::z: return 5;
        case Family::fuss_catalan: return 3;
        case Family::fuss_catalan_2nd: return 3;
        case Family::gen_narayana_r: return 5;
        default: return 1;
    }
}

Family family_from_name(const std::string& name) {
    static const std::map<std::string, Family> m = {
        {"catalan", Family::catalan},
        {"narayana", Family::narayana},
        {"narayana-circular", Family::narayana_circular},
        {"t", Family::t},
        {"z", Family::z},
        {"motzkin", Family::motzkin},
        {"motzkin-nk", Family::motzkin_nk},
        {"riordan", Family::riordan},
        {"riordan-nk", Family::riordan_nk},
        {"schroder", Family::schroder},
        {"schroder-nk", Family::schroder_nk},
        {"small-schroder", Family::small_schroder},
        {"small-schroder-nk", Family::small_schroder_nk},
        {"ballot", Family::ballot},
        {"fuss-catalan", Family::fuss_catalan},
        {"fuss-catalan-2nd", Family::fuss_catalan_2nd},
        {"gen-narayana-r", Family::gen_narayana_r},
        {"multi-narayana", Family::multi_narayana},
    };
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown number family '" + name + "'");
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::catalan: return "catalan";
        case Family::narayana: return "narayana";
        case Family::narayana_circular: return "narayana-circular";
        case Family::t: return "t";
        case Family::z: return "z";
        case Family::motzkin: return "motzkin";
        case Family::motzkin_nk: return "motzkin-nk";
        case Family::riordan: return "riordan";
        case Family::riordan_nk: return "riordan-nk";
        case Family::schroder: return "schroder";
        case Family::schroder_nk: return "schroder-nk";
        case Family::small_schroder: return "small-schroder";
        case Family::small_schroder_nk: return "small-schroder-nk";
        case Family::ballot: return "ballot";
        case Family::fuss_catalan: return "fuss-catalan";
        case Family::fuss_catalan_2nd: return "fuss-catalan-2nd";
        case Family::gen_narayana_r: return "gen-narayana-r";
        case Family::multi_narayana: return "multi-narayana";
    }
    return "?";
}

Int catalan(long long n, int variant) {
    if (n < 0) throw std::domain_error("catalan: n must be >= 0");
    if (n == 0) return 1;  // the empty path, shared by all three forms
    switch (variant) {
        case 0: return frac(binomial(2 * n, n), n + 1, "catalan", 0, "n+1");
        case 1: return frac(binomial(2 * n + 1, n), 2 * n + 1, "catalan", 1, "2n+1");
        case 2: return frac(binomial(2 * n, n - 1), n, "catalan", 2, "n");
    }
    throw std::invalid_argument("catalan: variant out of range");
}

Int narayana(long long n, long long k, int variant) {
    if (n < 1) throw std::domain_error("narayana: n must be >= 1");
    switch (variant) {
        case 0: return frac(binomial(n, k) * binomial(n, k - 1), n, "narayana", 0, "n");
        case 1: return frac(binomial(n, k - 1) * binomial(n - 1, k - 1), k, "narayana", 1, "k");
        case 2:
            return frac(binomial(n, k) * binomial(n - 1, k - 1), n - k + 1, "narayana", 2, "n-k+1");
        case 3:
            return frac(binomial(n + 1, k) * binomial(n - 1, k - 1), n + 1, "narayana", 3, "n+1");
        case 4: return frac(binomial(n, k) * binomial(n - 1, k - 2), k - 1, "narayana", 4, "k-1");
        case 5: return frac(binomial(n, k - 1) * binomial(n - 1, k), n - k, "narayana", 5, "n-k");
    }
    throw std::invalid_argument("narayana: variant out of range");
}

Int narayana_circular(long long n, long long k) {
    if (n < 1) throw std::domain_error("narayana-circular: n must be >= 1");
    Int sum = binomial(n, k - 1) * binomial(n, k) + binomial(n + 1, k) * binomial(n - 1, k - 1);
    return frac(sum, 2 * n + 1, "narayana-circular", 0, "2n+1");
}

Int t_number(long long k, long long l, int variant) {
    if (k < 0 || l < 0) throw std::domain_error("t: k and l must be >= 0");
    switch (variant) {
        case 0: return frac(binomial(2 * k + l, 2 * k) * binomial(2 * k, k), k + 1, "t", 0, "k+1");
        case 1: return frac(binomial(2 * k + l, 2 * k) * binomial(2 * k, k - 1), k, "t", 1, "k");
        case 2:
            return frac(binomial(2 * k + l, k) * binomial(k + l + 1, k + 1), k + l + 1, "t", 2,
                        "k+l+1");
        case 3:
            return frac(binomial(2 * k + l, k + 1) * binomial(k + l, k), k + l, "t", 3, "k+l");
        case 4:
            return frac(binomial(2 * k + l, 2 * k) * binomial(2 * k + 1, k), 2 * k + 1, "t", 4,
                        "2k+1");
        case 5: return frac(binomial(2 * k + l, k) * binomial(k + l, k + 1), l, "t", 5, "l");
        case 6:
            return frac(binomial(2 * k + l + 1, 2 * k + 1) * binomial(2 * k + 1, k), 2 * k + l + 1,
                        "t", 6, "2k+l+1");
    }
    throw std::invalid_argument("t: variant out of range");
}

Int z_number(long long k, long long l, int variant) {
    if (k < 1 || l < 0) throw std::domain_error("z: needs k >= 1 and l >= 0");
    switch (variant) {
        case 0:
            return frac(binomial(k + l, k) * binomial(2 * k + l, k - 1), k + l, "z", 0, "k+l");
        case 1:
            return frac(binomial(k + l - 1, k - 1) * binomial(2 * k + l, k - 1), k, "z", 1, "k");
        case 2:
            return frac(binomial(2 * k + l, k) * binomial(k + l - 1, k - 1), k + l + 1, "z", 2,
                        "k+l+1");
        case 3:
            return frac(binomial(2 * k + l, k - 1) * binomial(k + l - 1, k), l, "z", 3, "l");
        case 4:
            return frac(binomial(2 * k + l + 1, k) * binomial(k + l - 1, k - 1), 2 * k + l + 1, "z",
                        4, "2k+l+1");
    }
    throw std::invalid_argument("z: variant out of range");
}

Int motzkin_nk(long long n, long long k) {
    return frac(binomial(n, 2 * k) * binomial(2 * k, k), k + 1, "motzkin-nk", 0, "k+1");
}

Int riordan_nk(long long n, long long k) {
    return frac(binomial(n - k - 1, k - 1) * binomial(n, k - 1), k, "riordan-nk", 0, "k");
}

Int schroder_nk(long long n, long long k) {
    return frac(binomial(n + k, 2 * k) * binomial(2 * k, k), k + 1, "schroder-nk", 0, "k+1");
}

Int small_schroder_nk(long long n, long long k) {
    return frac(binomial(n - 1, k - 1) * binomial(n + k, k - 1), k, "small-schroder-nk", 0, "k");
}

Int motzkin_number(long long n) {
    Int sum = 0;
    for (long long k = 0; 2 * k <= n; ++k) sum += motzkin_nk(n, k);
    return sum;
}

Int riordan_aggregate(long long n) {
    Int sum = 0;
    for (long long k = 1; 2 * k <= n; ++k) sum += riordan_nk(n, k);
    return sum;
}

Int schroder_number(long long n) {
    Int sum = 0;
    for (long long k = 0; k <= n; ++k) sum += schroder_nk(n, k);
    return sum;
}

Int small_schroder_number(long long n) {
    if (n == 0) return 1;  // the empty path
    Int sum = 0;
    for (long long k = 1; k <= n; ++k) sum += small_schroder_nk(n, k);
    return sum;
}

Int ballot(long long n, long long r, long long h) {
    if (n < 0 || r < 1 || h < 1) throw std::domain_error("ballot: needs n >= 0, r >= 1, h >= 1");
    Int num = h * binomial((r + 1) * n + h, n);
    return frac(num, (r + 1) * n + h, "ballot", 0, "(r+1)n+h");
}

Int fuss_catalan(long long n, long long r, int variant) {
    if (n < 0 || r < 1) throw std::domain_error("fuss-catalan: needs n >= 0, r >= 1");
    switch (variant) {
        case 0:
            return frac(binomial((r + 1) * n + 1, n), (r + 1) * n + 1, "fuss-catalan", 0,
                        "(r+1)n+1");
        case 1: return frac(binomial((r + 1) * n, n - 1), n, "fuss-catalan", 1, "n");
        case 2: return frac(binomial((r + 1) * n, n), r * n + 1, "fuss-catalan", 2, "rn+1");
    }
    throw std::invalid_argument("fuss-catalan: variant out of range");
}

Int fuss_catalan_2nd(long long n, long long r, int variant) {
    if (n < 1 || r < 1) throw std::domain_error("fuss-catalan-2nd: needs n >= 1, r >= 1");
    switch (variant) {
        case 0:
            return frac(binomial((r + 1) * n - 1, n), (r + 1) * n - 1, "fuss-catalan-2nd", 0,
                        "(r+1)n-1");
        case 1: return frac(binomial((r + 1) * n - 2, n - 1), n, "fuss-catalan-2nd", 1, "n");
        case 2: return frac(binomial((r + 1) * n - 2, n), r * n - 1, "fuss-catalan-2nd", 2, "rn-1");
    }
    throw std::invalid_argument("fuss-catalan-2nd: variant out of range");
}

Int gen_narayana(long long n, long long k, long long r, int variant) {
    if (n < 1 || r < 1) throw std::domain_error("gen-narayana-r: needs n >= 1, r >= 1");
    switch (variant) {
        case 0:
            return frac(binomial(r * n, k - 1) * binomial(n, k), n, "gen-narayana-r", 0, "n");
        case 1:
            return frac(binomial(r * n, k) * binomial(n - 1, k - 1), r * n - k + 1,
                        "gen-narayana-r", 1, "rn-k+1");
        case 2:
            return frac(binomial(r * n, k - 1) * binomial(n - 1, k - 1), k, "gen-narayana-r", 2,
                        "k");
        case 3:
            return frac(binomial(r * n + 1, k) * binomial(n - 1, k - 1), r * n + 1,
                        "gen-narayana-r", 3, "rn+1");
        case 4:
            return frac(binomial(r * n, k - 1) * binomial(n - 1, k), n - k, "gen-narayana-r", 4,
                        "n-k");
    }
    throw std::invalid_argument("gen-narayana-r: variant out of range");
}

Int multi_narayana(long long n, const std::vector<long long>& parts) {
    if (n < 1) throw std::domain_error("multi-narayana: n must be >= 1");
    if (parts.empty()) throw std::domain_error("multi-narayana: needs parts n_0..n_r");
    long long r = static_cast<long long>(parts.size()) - 1;
    long long sum = 0;
    for (long long p : parts) sum += p;
    if (sum != n * r + 1)
        throw std::domain_error("multi-narayana: parts must sum to nr+1 = " +
                                std::to_string(n * r + 1) + ", got " + std::to_string(sum));
    Int prod = 1;
    for (long long p : parts) prod *= binomial(n, p);
    return frac(prod, n, "multi-narayana", 0, "n");
}

Int eval(Family f, int variant, const Args& a) {
    if (variant < 0 || variant >= variant_count(f))
        throw std::invalid_argument(family_name(f) + ": variant must be in 0.." +
                                    std::to_string(variant_count(f) - 1));
    switch (f) {
        case Family::catalan: return catalan(a.n, variant);
        case Family::narayana: return narayana(a.n, a.k, variant);
        case Family::narayana_circular: return narayana_circular(a.n, a.k);
        case Family::t: return t_number(a.k, a.l, variant);
        case Family::z: return z_number(a.k, a.l, variant);
        case Family::motzkin: return motzkin_number(a.n);
        case Family::motzkin_nk: return motzkin_nk(a.n, a.k);
        case Family::riordan: return riordan_aggregate(a.n);
        case Family::riordan_nk: return riordan_nk(a.n, a.k);
        case Family::schroder: return schroder_number(a.n);
        case Family::schroder_nk: return schroder_nk(a.n, a.k);
        case Family::small_schroder: return small_schroder_number(a.n);
        case Family::small_schroder_nk: return small_schroder_nk(a.n, a.k);
        case Family::ballot: return ballot(a.n, a.r, a.h);
        case Family::fuss_catalan: return fuss_catalan(a.n, a.r, variant);
        case Family::fuss_catalan_2nd: return fuss_catalan_2nd(a.n, a.r, variant);
        case Family::gen_narayana_r: return gen_narayana(a.n, a.k, a.r, variant);
        case Family::multi_narayana: return multi_narayana(a.n, a.parts);
    }
    throw std::invalid_argument("eval: unknown family");
}

std::vector<Int> sequence(const std::string& family, int count, long long r) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count));
    if (family == "catalan") {
        for (int n = 0; n < count; ++n) out.push_back(catalan(n));
    } else if (family == "motzkin") {
        for (int n = 0; n < count; ++n) out.push_back(motzkin_number(n));
    } else if (family == "riordan") {
        // The paper's printed list starts at length 1: 0, 1, 1, 3, ...
        for (int n = 1; n <= count; ++n) out.push_back(riordan_aggregate(n));
    } else if (family == "schroder") {
        for (int n = 0; n < count; ++n) out.push_back(schroder_number(n));
    } else if (family == "small-schroder") {
        for (int n = 0; n < count; ++n) out.push_back(small_schroder_number(n));
    } else if (family == "fuss-catalan") {
        for (int n = 0; n < count; ++n) out.push_back(fuss_catalan(n, r));
    } else {
        throw std::invalid_argument("unknown sequence family '" + family + "'");
    }
    return out;
}

std::vector<std::string> relation_ids() {
    return {"M-R", "J-S", "R-2S", "M-JJ", "T-Z", "nara-sum", "Nr-sum", "circ-sum"};
}

RelationReport relation_check(const std::string& id, long long bound) {
    RelationReport rep;
    auto expect = [&](bool ok, const std::string& what) {
        rep.checked.push_back(what + (ok ? ": ok" : ": FAIL"));
        if (!ok && rep.pass) {
            rep.pass = false;
            rep.failure = what;
        }
    };
    std::ostringstream tag;
    if (id == "M-R") {
        for (long long n = 0; n <= bound; ++n)
            for (long long k = 0; k <= n; ++k)
                expect(motzkin_nk(n + k, k) == schroder_nk(n, k),
                       "M(" + std::to_string(n + k) + "," + std::to_string(k) + ") = R(" +
                           std::to_string(n) + "," + std::to_string(k) + ")");
    } else if (id == "J-S") {
        for (long long n = 1; n <= bound; ++n)
            for (long long k = 1; k <= n; ++k)
                expect(riordan_nk(n + k, k) == small_schroder_nk(n, k),
                       "J(" + std::to_string(n + k) + "," + std::to_string(k) + ") = S(" +
                           std::to_string(n) + "," + std::to_string(k) + ")");
    } else if (id == "R-2S") {
        for (long long n = 1; n <= bound; ++n)
            expect(schroder_number(n) == 2 * small_schroder_number(n),
                   "R_" + std::to_string(n) + " = 2 S_" + std::to_string(n));
    } else if (id == "M-JJ") {
        for (long long n = 1; n <= bound; ++n)
            expect(motzkin_number(n) == riordan_aggregate(n) + riordan_aggregate(n + 1),
                   "M_" + std::to_string(n) + " = J_" + std::to_string(n) + " + J_" +
                       std::to_string(n + 1));
    } else if (id == "T-Z") {
        // In the formulas' own coordinates the split of nonnegative paths by
        // "has a flat on the axis" reads T(k,l) = Z(k,l) + Z(k+1,l-1).
        for (long long k = 1; k <= bound; ++k)
            for (long long l = 0; l <= bound; ++l) {
                Int rhs = z_number(k, l) + (l >= 1 ? z_number(k + 1, l - 1) : Int(0));
                expect(t_number(k, l) == rhs, "T(" + std::to_string(k) + "," + std::to_string(l) +
                                                  ") = Z(k,l) + Z(k+1,l-1)");
            }
    } else if (id == "nara-sum") {
        for (long long n = 1; n <= bound; ++n) {
            Int sum = 0;
            for (long long k = 1; k <= n; ++k) sum += narayana(n, k);
            expect(sum == catalan(n), "sum_k N(" + std::to_string(n) + ",k) = C_n");
        }
    } else if (id == "Nr-sum") {
        for (long long r = 1; r <= 3; ++r)
            for (long long n = 1; n <= bound; ++n) {
                Int sum = 0;
                for (long long k = 1; k <= n; ++k) sum += gen_narayana(n, k, r);
                expect(sum == fuss_catalan(n, r, 2),
                       "sum_k N_" + std::to_string(r) + "(" + std::to_string(n) + ",k) = C^r_n");
            }
    } else if (id == "circ-sum") {
        for (long long n = 1; n <= bound; ++n)
            for (long long k = 1; k <= n; ++k) {
                Int lhs = binomial(n, k - 1) * binomial(n, k) +
                          binomial(n + 1, k) * binomial(n - 1, k - 1);
                expect(lhs == (2 * n + 1) * narayana(n, k),
                       "(2n+1) N(n,k) split at n=" + std::to_string(n) +
                           ",k=" + std::to_string(k));
            }
    } else {
        throw std::invalid_argument("unknown relation id '" + id + "'");
    }
    return rep;
}

}  // namespace cf::forms
