#pragma once

#include "cf/exact.hpp"

#include <string>
#include <vector>

namespace cf::forms {

// Number families, each with its list of equivalent algebraic forms.
// `variant` indexes the family's published list; variant 0 is the canonical
// form that covers the family's whole range and serves as the reference.
enum class Family {
    catalan,            // 3 variants
    narayana,           // 6 variants
    narayana_circular,  // 1
    t,                  // 7
    z,                  // 5
    motzkin,            // aggregate M_n
    motzkin_nk,         // M(n,k)
    riordan,            // aggregate (paper's list: n = 1, 2, ...)
    riordan_nk,         // J(n,k)
    schroder,           // aggregate R_n
    schroder_nk,        // R(n,k)
    small_schroder,     // aggregate S_n
    small_schroder_nk,  // S(n,k)
    ballot,             // r-ballot numbers
    fuss_catalan,       // 3 variants
    fuss_catalan_2nd,   // 3 variants
    gen_narayana_r,     // 5 variants
    multi_narayana,     // 1
};

int variant_count(Family f);
Family family_from_name(const std::string& name);
std::string family_name(Family f);

// Named arguments for eval; unused fields are ignored by each family.
struct Args {
    long long n = 0;
    long long k = 0;
    long long l = 0;
    long long r = 1;
    long long h = 1;
    std::vector<long long> parts;  // n_0..n_r for multi_narayana
};

// Exact evaluation. Out-of-domain arguments (a variant's leading fraction
// undefined) raise std::domain_error naming the offending denominator; any
// division with a remainder is a hard failure.
Int eval(Family f, int variant, const Args& a);

// Convenience accessors (variant 0 unless stated).
Int catalan(long long n, int variant = 0);
Int narayana(long long n, long long k, int variant = 0);
Int narayana_circular(long long n, long long k);
Int t_number(long long k, long long l, int variant = 0);
Int z_number(long long k, long long l, int variant = 0);
Int motzkin_nk(long long n, long long k);
Int riordan_nk(long long n, long long k);
Int schroder_nk(long long n, long long k);
Int small_schroder_nk(long long n, long long k);
Int motzkin_number(long long n);
Int riordan_aggregate(long long n);  // sum over k >= 1 of J(n,k), n >= 1
Int schroder_number(long long n);
Int small_schroder_number(long long n);
Int ballot(long long n, long long r, long long h);
Int fuss_catalan(long long n, long long r, int variant = 0);
Int fuss_catalan_2nd(long long n, long long r, int variant = 0);
Int gen_narayana(long long n, long long k, long long r, int variant = 0);
Int multi_narayana(long long n, const std::vector<long long>& parts);

// First `count` terms of a listed sequence. Families: catalan, motzkin,
// riordan, schroder, small-schroder, fuss-catalan (uses r). The riordan
// list starts at the paper's first printed term (0 = empty sum at n=1).
std::vector<Int> sequence(const std::string& family, int count, long long r = 1);

struct RelationReport {
    bool pass = true;
    std::vector<std::string> checked;  // one line per parameter tuple
    std::string failure;
};

// Inter-family identities: M-R, J-S, R-2S, M-JJ, T-Z, nara-sum, Nr-sum,
// circ-sum. Bound caps the parameter ranges.
RelationReport relation_check(const std::string& id, long long bound);

std::vector<std::string> relation_ids();

}  // namespace cf::forms
