#pragma once

#include "cf/exact.hpp"

#include <string>
#include <variant>
#include <vector>

namespace cf::series {

using cf::Rat;

// Truncated formal power series with exact rational coefficients c_0..c_N.
// Arithmetic truncates to the smaller operand order; the truncation is the
// quotient by (x^{N+1}), so results are coefficient-exact.
class USeries {
public:
    explicit USeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    static USeries constant(Rat c, int order);
    static USeries variable(int order);  // x

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Rat& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    USeries truncated(int order) const;

    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    friend USeries operator*(const USeries& a, const USeries& b);
    friend USeries operator/(const USeries& a, const USeries& b);
    friend USeries operator*(const Rat& c, const USeries& a);
    friend bool operator==(const USeries& a, const USeries& b);

    USeries inverse() const;     // needs an invertible constant term
    USeries sqrt() const;        // needs constant term 1
    USeries derivative() const;
    USeries compose(const USeries& inner) const;  // inner constant term must be 0
    USeries pow(long long e) const;
    // x -> x^k substitution, re-truncated to this order (e.g. c(x^2))
    USeries substitute_x_pow(int k) const;
    USeries shift_mul_x(int k) const;  // multiply by x^k

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rat> coeffs_;
};

// Dense bivariate series on [0..nx] x [0..ny]: quotient by (x^{nx+1}, y^{ny+1}).
class BSeries {
public:
    BSeries(int nx, int ny);
    static BSeries constant(Rat c, int nx, int ny);
    static BSeries from_first(const USeries& u, int ny);   // series in x
    static BSeries from_second(const USeries& u, int nx);  // series in y

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    const Rat& at(int i, int j) const { return c_[idx(i, j)]; }
    Rat& at(int i, int j) { return c_[idx(i, j)]; }

    friend BSeries operator+(const BSeries& a, const BSeries& b);
    friend BSeries operator-(const BSeries& a, const BSeries& b);
    friend BSeries operator*(const BSeries& a, const BSeries& b);
    friend bool operator==(const BSeries& a, const BSeries& b);

    BSeries inverse() const;  // invertible constant term
    BSeries truncated(int nx, int ny) const;
    BSeries swap_vars() const;
    BSeries shift_first(int k) const;   // * x^k
    BSeries shift_second(int k) const;  // * y^k
    // Exact "set second variable to 1" (valid when the grid holds every
    // y-degree that occurs for the retained x-degrees).
    USeries collapse_second_at_one() const;
    // Drop one power of the second variable; every retained coefficient with
    // second degree 0 (other than the constant) must be 0.
    BSeries divide_second() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(ny_ + 1) +
               static_cast<std::size_t>(j);
    }
    int nx_, ny_;
    std::vector<Rat> c_;
};

// (a(x) - a(y)) / (x - y) as an exact bivariate series: dd[i][j] = a_{i+j+1}.
BSeries divided_difference(const USeries& a, int nx, int ny);

// Dense trivariate series, used for the three-variable identity checks.
class TSeries {
public:
    TSeries(int n0, int n1, int n2);
    static TSeries constant(Rat c, int n0, int n1, int n2);
    // embed a bivariate series whose variables sit at positions p, q (0..2)
    static TSeries embed(const BSeries& b, int p, int q, int n0, int n1, int n2);

    int order(int axis) const { return n_[static_cast<std::size_t>(axis)]; }
    const Rat& at(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    Rat& at(int i, int j, int k) { return c_[idx(i, j, k)]; }

    friend TSeries operator+(const TSeries& a, const TSeries& b);
    friend TSeries operator-(const TSeries& a, const TSeries& b);
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    friend bool operator==(const TSeries& a, const TSeries& b);

    TSeries inverse() const;
    TSeries shift(int axis, int k) const;  // multiply by var_axis^k

private:
    std::size_t idx(int i, int j, int k) const;
    int n_[3];
    std::vector<Rat> c_;
};

// ---- fixed points -----------------------------------------------------------

// Iterates map from `seed` until one extra application changes no retained
// coefficient; throws if no stabilization (non-contractive map).
USeries solve_fixed_point(const std::function<USeries(const USeries&)>& map, USeries seed);
BSeries solve_fixed_point(const std::function<BSeries(const BSeries&)>& map, BSeries seed);
TSeries solve_fixed_point(const std::function<TSeries(const TSeries&)>& map, TSeries seed);

USeries catalan_series(int order);                 // c = 1/(1 - x c)
USeries fuss_series(long long r, int order);       // f = 1 + x f^{r+1}
BSeries narayana_E(int nx, int ny);                // E(x,s), peaks-weighted Dyck GF
BSeries motzkin_M(int nx, int ny);                 // M(x,s,1) via the coupled equations

// ---- Lagrange inversion ------------------------------------------------------

// For f = x g(f): coefficient of x^n in f^k, i.e. (k/n) [u^{n-k}] g(u)^n.
Rat lagrange_coeff(const USeries& g, long long k, long long n);

struct Laurent {
    int min_deg = 0;  // coeffs[i] multiplies u^{min_deg + i}
    std::vector<Rat> coeffs;
};

// [x^n] phi(f) = [u^n] (1 - u g'(u)/g(u)) phi(u) g(u)^n, computed without
// dividing by g (as [u^n] of phi g^n - u phi g' g^{n-1}).
Rat lagrange_phi_coeff(const USeries& g, const Laurent& phi, long long n);

// Same with coefficients that are polynomials in a second variable t
// (e.g. g = (1+u)^r (t+u)); returns the t-coefficients of [u^n].
std::vector<Rat> lagrange_phi_coeff_poly(const BSeries& g_ut, const BSeries& phi_ut, long long n);

// ---- registry ---------------------------------------------------------------

struct NamedSeries {
    std::string name;
    std::vector<std::string> vars;  // one name per variable
    std::variant<USeries, BSeries, TSeries> value;
};

// Series built from functional equations or prime decompositions (never from
// the closed forms they are tested against). Names: c, f, Cg, E, M, f_upper,
// g_lower, h_all, P_lh, G_even, L_pk, L_v, L_dr, L_df, F_p, F_n, F_m, G_0,
// G_1, G1U, G1D. r parameterizes the generalized-path series.
NamedSeries named_series(const std::string& name, int order, long long r = 1);
std::vector<std::string> named_series_names();

struct IdentityReport {
    bool pass = false;
    std::string detail;
};

// Coefficient-exact identity checks to the given order: e13a, id-chain, id2,
// id3, sqrt-1, sqrt-2, E-c, E-M, G1U-closed, G1D-closed.
IdentityReport identity_check(const std::string& id, int order);
std::vector<std::string> identity_ids();

}  // namespace cf::series
