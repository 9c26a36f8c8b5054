#include "cf/series.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cf::series {

namespace {
int min_order(int a, int b) { return std::min(a, b); }
}

// ---- USeries ----------------------------------------------------------------

USeries USeries::constant(Rat c, int order) {
    USeries s(order);
    s[0] = std::move(c);
    return s;
}

USeries USeries::variable(int order) {
    USeries s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

USeries USeries::truncated(int order) const {
    USeries s(order);
    for (int i = 0; i <= std::min(order, this->order()); ++i) s[i] = (*this)[i];
    return s;
}

USeries operator+(const USeries& a, const USeries& b) {
    USeries s(min_order(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s[i] = a[i] + b[i];
    return s;
}

USeries operator-(const USeries& a, const USeries& b) {
    USeries s(min_order(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s[i] = a[i] - b[i];
    return s;
}

USeries operator*(const USeries& a, const USeries& b) {
    USeries s(min_order(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= s.order(); ++j) {
            if (b[j] == 0) continue;
            s[i + j] += a[i] * b[j];
        }
    }
    return s;
}

USeries operator*(const Rat& c, const USeries& a) {
    USeries s(a.order());
    for (int i = 0; i <= s.order(); ++i) s[i] = c * a[i];
    return s;
}

bool operator==(const USeries& a, const USeries& b) {
    if (a.order() != b.order()) return false;
    for (int i = 0; i <= a.order(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

USeries USeries::inverse() const {
    if ((*this)[0] == 0)
        throw std::domain_error("series inverse needs a nonzero constant term");
    USeries b(order());
    b[0] = Rat(1) / (*this)[0];
    for (int n = 1; n <= order(); ++n) {
        Rat acc = 0;
        for (int j = 1; j <= n; ++j) acc += (*this)[j] * b[n - j];
        b[n] = -acc / (*this)[0];
    }
    return b;
}

USeries operator/(const USeries& a, const USeries& b) { return a * b.inverse(); }

USeries USeries::sqrt() const {
    if ((*this)[0] != 1)
        throw std::domain_error("series sqrt needs constant term 1");
    USeries b(order());
    b[0] = 1;
    for (int n = 1; n <= order(); ++n) {
        Rat acc = 0;
        for (int j = 1; j < n; ++j) acc += b[j] * b[n - j];
        b[n] = ((*this)[n] - acc) / 2;
    }
    return b;
}

USeries USeries::derivative() const {
    USeries b(order());
    for (int n = 1; n <= order(); ++n) b[n - 1] = Rat(n) * (*this)[n];
    return b;
}

USeries USeries::compose(const USeries& inner) const {
    if (inner[0] != 0)
        throw std::domain_error("series composition needs inner constant term 0");
    int N = min_order(order(), inner.order());
    USeries acc = USeries::constant((*this)[order()], N);
    for (int i = order() - 1; i >= 0; --i) {
        acc = acc * inner.truncated(N);
        acc[0] += (*this)[i];
    }
    return acc;
}

USeries USeries::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    USeries acc = USeries::constant(1, order());
    USeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

USeries USeries::substitute_x_pow(int k) const {
    if (k < 1) throw std::invalid_argument("substitute_x_pow needs k >= 1");
    USeries b(order());
    for (int i = 0; i <= order() / k; ++i) b[i * k] = (*this)[i];
    return b;
}

USeries USeries::shift_mul_x(int k) const {
    USeries b(order());
    for (int i = 0; i + k <= order(); ++i) b[i + k] = (*this)[i];
    return b;
}

std::string USeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
        if ((*this)[i] == 0) continue;
        os << (first ? "" : " + ") << (*this)[i].str();
        if (i > 0) os << "*" << var << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---- BSeries ----------------------------------------------------------------

BSeries::BSeries(int nx, int ny)
    : nx_(nx), ny_(ny),
      c_(static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1)) {}

BSeries BSeries::constant(Rat c, int nx, int ny) {
    BSeries b(nx, ny);
    b.at(0, 0) = std::move(c);
    return b;
}

BSeries BSeries::from_first(const USeries& u, int ny) {
    BSeries b(u.order(), ny);
    for (int i = 0; i <= u.order(); ++i) b.at(i, 0) = u[i];
    return b;
}

BSeries BSeries::from_second(const USeries& u, int nx) {
    BSeries b(nx, u.order());
    for (int j = 0; j <= u.order(); ++j) b.at(0, j) = u[j];
    return b;
}

BSeries operator+(const BSeries& a, const BSeries& b) {
    BSeries s(min_order(a.nx(), b.nx()), min_order(a.ny(), b.ny()));
    for (int i = 0; i <= s.nx(); ++i)
        for (int j = 0; j <= s.ny(); ++j) s.at(i, j) = a.at(i, j) + b.at(i, j);
    return s;
}

BSeries operator-(const BSeries& a, const BSeries& b) {
    BSeries s(min_order(a.nx(), b.nx()), min_order(a.ny(), b.ny()));
    for (int i = 0; i <= s.nx(); ++i)
        for (int j = 0; j <= s.ny(); ++j) s.at(i, j) = a.at(i, j) - b.at(i, j);
    return s;
}

BSeries operator*(const BSeries& a, const BSeries& b) {
    BSeries s(min_order(a.nx(), b.nx()), min_order(a.ny(), b.ny()));
    for (int i = 0; i <= s.nx(); ++i)
        for (int j = 0; j <= s.ny(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int p = 0; i + p <= s.nx(); ++p)
                for (int q = 0; j + q <= s.ny(); ++q) {
                    if (b.at(p, q) == 0) continue;
                    s.at(i + p, j + q) += a.at(i, j) * b.at(p, q);
                }
        }
    return s;
}

bool operator==(const BSeries& a, const BSeries& b) {
    if (a.nx() != b.nx() || a.ny() != b.ny()) return false;
    for (int i = 0; i <= a.nx(); ++i)
        for (int j = 0; j <= a.ny(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

BSeries BSeries::inverse() const {
    if (at(0, 0) == 0)
        throw std::domain_error("bivariate inverse needs a nonzero constant term");
    BSeries b(nx_, ny_);
    for (int p = 0; p <= nx_; ++p)
        for (int q = 0; q <= ny_; ++q) {
            if (p == 0 && q == 0) {
                b.at(0, 0) = Rat(1) / at(0, 0);
                continue;
            }
            Rat acc = 0;
            for (int i = 0; i <= p; ++i)
                for (int j = 0; j <= q; ++j) {
                    if (i == 0 && j == 0) continue;
                    if (at(i, j) == 0) continue;
                    acc += at(i, j) * b.at(p - i, q - j);
                }
            b.at(p, q) = -acc / at(0, 0);
        }
    return b;
}

BSeries BSeries::truncated(int nx, int ny) const {
    BSeries b(nx, ny);
    for (int i = 0; i <= std::min(nx, nx_); ++i)
        for (int j = 0; j <= std::min(ny, ny_); ++j) b.at(i, j) = at(i, j);
    return b;
}

BSeries BSeries::swap_vars() const {
    BSeries b(ny_, nx_);
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j) b.at(j, i) = at(i, j);
    return b;
}

BSeries BSeries::shift_first(int k) const {
    BSeries b(nx_, ny_);
    for (int i = 0; i + k <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j) b.at(i + k, j) = at(i, j);
    return b;
}

BSeries BSeries::shift_second(int k) const {
    BSeries b(nx_, ny_);
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j + k <= ny_; ++j) b.at(i, j + k) = at(i, j);
    return b;
}

USeries BSeries::collapse_second_at_one() const {
    USeries u(nx_);
    for (int i = 0; i <= nx_; ++i) {
        Rat acc = 0;
        for (int j = 0; j <= ny_; ++j) acc += at(i, j);
        u[i] = acc;
    }
    return u;
}

BSeries BSeries::divide_second() const {
    for (int i = 1; i <= nx_; ++i)
        if (at(i, 0) != 0)
            throw std::domain_error("divide_second: series is not divisible by the second variable");
    BSeries b(nx_, ny_);
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j + 1 <= ny_; ++j) b.at(i, j) = at(i, j + 1);
    return b;
}

BSeries divided_difference(const USeries& a, int nx, int ny) {
    if (a.order() < nx + ny + 1)
        throw std::invalid_argument("divided_difference needs the series to order nx+ny+1");
    BSeries b(nx, ny);
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j) b.at(i, j) = a[i + j + 1];
    return b;
}

// ---- TSeries ----------------------------------------------------------------

std::size_t TSeries::idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n_[1] + 1) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(n_[2] + 1) +
           static_cast<std::size_t>(k);
}

TSeries::TSeries(int n0, int n1, int n2)
    : n_{n0, n1, n2},
      c_(static_cast<std::size_t>(n0 + 1) * static_cast<std::size_t>(n1 + 1) *
         static_cast<std::size_t>(n2 + 1)) {}

TSeries TSeries::constant(Rat c, int n0, int n1, int n2) {
    TSeries t(n0, n1, n2);
    t.at(0, 0, 0) = std::move(c);
    return t;
}

TSeries TSeries::embed(const BSeries& b, int p, int q, int n0, int n1, int n2) {
    if (p == q || p < 0 || q < 0 || p > 2 || q > 2)
        throw std::invalid_argument("TSeries::embed needs two distinct axes 0..2");
    TSeries t(n0, n1, n2);
    int pos[3];
    for (int i = 0; i <= std::min(b.nx(), t.order(p)); ++i)
        for (int j = 0; j <= std::min(b.ny(), t.order(q)); ++j) {
            if (b.at(i, j) == 0) continue;
            pos[0] = pos[1] = pos[2] = 0;
            pos[p] = i;
            pos[q] = j;
            t.at(pos[0], pos[1], pos[2]) = b.at(i, j);
        }
    return t;
}

TSeries operator+(const TSeries& a, const TSeries& b) {
    TSeries s(min_order(a.order(0), b.order(0)), min_order(a.order(1), b.order(1)),
              min_order(a.order(2), b.order(2)));
    for (int i = 0; i <= s.order(0); ++i)
        for (int j = 0; j <= s.order(1); ++j)
            for (int k = 0; k <= s.order(2); ++k) s.at(i, j, k) = a.at(i, j, k) + b.at(i, j, k);
    return s;
}

TSeries operator-(const TSeries& a, const TSeries& b) {
    TSeries s(min_order(a.order(0), b.order(0)), min_order(a.order(1), b.order(1)),
              min_order(a.order(2), b.order(2)));
    for (int i = 0; i <= s.order(0); ++i)
        for (int j = 0; j <= s.order(1); ++j)
            for (int k = 0; k <= s.order(2); ++k) s.at(i, j, k) = a.at(i, j, k) - b.at(i, j, k);
    return s;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    TSeries s(min_order(a.order(0), b.order(0)), min_order(a.order(1), b.order(1)),
              min_order(a.order(2), b.order(2)));
    for (int i = 0; i <= s.order(0); ++i)
        for (int j = 0; j <= s.order(1); ++j)
            for (int k = 0; k <= s.order(2); ++k) {
                const Rat& av = a.at(i, j, k);
                if (av == 0) continue;
                for (int p = 0; i + p <= s.order(0); ++p)
                    for (int q = 0; j + q <= s.order(1); ++q)
                        for (int w = 0; k + w <= s.order(2); ++w) {
                            const Rat& bv = b.at(p, q, w);
                            if (bv == 0) continue;
                            s.at(i + p, j + q, k + w) += av * bv;
                        }
            }
    return s;
}

bool operator==(const TSeries& a, const TSeries& b) {
    if (a.order(0) != b.order(0) || a.order(1) != b.order(1) || a.order(2) != b.order(2))
        return false;
    for (int i = 0; i <= a.order(0); ++i)
        for (int j = 0; j <= a.order(1); ++j)
            for (int k = 0; k <= a.order(2); ++k)
                if (a.at(i, j, k) != b.at(i, j, k)) return false;
    return true;
}

TSeries TSeries::inverse() const {
    if (at(0, 0, 0) == 0)
        throw std::domain_error("trivariate inverse needs a nonzero constant term");
    TSeries b(n_[0], n_[1], n_[2]);
    for (int p = 0; p <= n_[0]; ++p)
        for (int q = 0; q <= n_[1]; ++q)
            for (int w = 0; w <= n_[2]; ++w) {
                if (p == 0 && q == 0 && w == 0) {
                    b.at(0, 0, 0) = Rat(1) / at(0, 0, 0);
                    continue;
                }
                Rat acc = 0;
                for (int i = 0; i <= p; ++i)
                    for (int j = 0; j <= q; ++j)
                        for (int k = 0; k <= w; ++k) {
                            if (i == 0 && j == 0 && k == 0) continue;
                            const Rat& av = at(i, j, k);
                            if (av == 0) continue;
                            acc += av * b.at(p - i, q - j, w - k);
                        }
                b.at(p, q, w) = -acc / at(0, 0, 0);
            }
    return b;
}

TSeries TSeries::shift(int axis, int k) const {
    TSeries b(n_[0], n_[1], n_[2]);
    for (int i = 0; i <= n_[0]; ++i)
        for (int j = 0; j <= n_[1]; ++j)
            for (int w = 0; w <= n_[2]; ++w) {
                if (at(i, j, w) == 0) continue;
                int pos[3] = {i, j, w};
                pos[axis] += k;
                if (pos[0] > n_[0] || pos[1] > n_[1] || pos[2] > n_[2]) continue;
                b.at(pos[0], pos[1], pos[2]) = at(i, j, w);
            }
    return b;
}

// ---- fixed points -------------------------------------------------------------

namespace {
template <typename S>
S solve_fp(const std::function<S(const S&)>& map, S cur, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
        S next = map(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw std::runtime_error(
        "fixed-point iteration did not stabilize (non-contractive map?)");
}
}  // namespace

USeries solve_fixed_point(const std::function<USeries(const USeries&)>& map, USeries seed) {
    int iters = seed.order() + 3;
    return solve_fp(map, std::move(seed), iters);
}

BSeries solve_fixed_point(const std::function<BSeries(const BSeries&)>& map, BSeries seed) {
    int iters = seed.nx() + seed.ny() + 4;
    return solve_fp(map, std::move(seed), iters);
}

TSeries solve_fixed_point(const std::function<TSeries(const TSeries&)>& map, TSeries seed) {
    int iters = seed.order(0) + seed.order(1) + seed.order(2) + 5;
    return solve_fp(map, std::move(seed), iters);
}

USeries catalan_series(int order) {
    USeries x = USeries::variable(order);
    return solve_fixed_point(
        [&x, order](const USeries& c) {
            return (USeries::constant(1, order) - x * c).inverse();
        },
        USeries::constant(1, order));
}

USeries fuss_series(long long r, int order) {
    USeries x = USeries::variable(order);
    USeries one = USeries::constant(1, order);
    return solve_fixed_point(
        [&](const USeries& f) { return one + x * f.pow(r + 1); },
        one);
}

BSeries narayana_E(int nx, int ny) {
    // F(x,t) = 1 + x F (F - 1 + t) is the peak-weighted Dyck equation
    // (t marks peaks); E = (F - 1)/t.
    BSeries one = BSeries::constant(1, nx, ny);
    BSeries x = BSeries::from_first(USeries::variable(nx), ny);
    BSeries t = BSeries::from_second(USeries::variable(ny), nx);
    BSeries F = solve_fixed_point(
        [&](const BSeries& f) { return one + x * f * (f - one + t); }, one);
    return (F - one).divide_second();
}

BSeries motzkin_M(int nx, int ny) {
    // Coupled equations for A = M(x,s,1), B = M(x,1,s):
    //   A = 1/(1 - x B),  B = 1/(1 - x s A).
    BSeries one = BSeries::constant(1, nx, ny);
    BSeries x = BSeries::from_first(USeries::variable(nx), ny);
    BSeries xs = x.shift_second(1);
    BSeries A = one, B = one;
    for (int it = 0; it < nx + ny + 6; ++it) {
        BSeries A2 = (one - x * B).inverse();
        BSeries B2 = (one - xs * A).inverse();
        if (A2 == A && B2 == B) return A;
        A = std::move(A2);
        B = std::move(B2);
    }
    throw std::runtime_error("motzkin_M: coupled iteration did not stabilize");
}

namespace {

// second half of the coupled pair above: M(x,1,s) = 1 + s E(x,s)
BSeries motzkin_M_second(int nx, int ny) {
    BSeries one = BSeries::constant(1, nx, ny);
    BSeries x = BSeries::from_first(USeries::variable(nx), ny);
    BSeries xs = x.shift_second(1);
    BSeries A = one, B = one;
    for (int it = 0; it < nx + ny + 6; ++it) {
        BSeries A2 = (one - x * B).inverse();
        BSeries B2 = (one - xs * A).inverse();
        if (A2 == A && B2 == B) return B;
        A = std::move(A2);
        B = std::move(B2);
    }
    throw std::runtime_error("motzkin_M: coupled iteration did not stabilize");
}

BSeries bpow(const BSeries& b, long long e) {
    BSeries acc = BSeries::constant(1, b.nx(), b.ny());
    BSeries base = b;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// C_g(y,t) = f(y t^r): grid [n][rn] = C^r_n
BSeries cg_series(long long r, int ny, int nt) {
    USeries f = fuss_series(r, ny);
    BSeries b(ny, nt);
    for (int n = 0; n <= ny; ++n)
        if (r * n <= nt) b.at(n, static_cast<int>(r) * n) = f[n];
    return b;
}

}  // namespace

// ---- Lagrange inversion --------------------------------------------------------

Rat lagrange_coeff(const USeries& g, long long k, long long n) {
    if (k < 1 || n < k) throw std::invalid_argument("lagrange_coeff needs 1 <= k <= n");
    if (g.order() < n - k)
        throw std::invalid_argument("lagrange_coeff: g needs order >= n-k");
    USeries gn = g.truncated(static_cast<int>(n - k)).pow(n);
    return Rat(k, n) * gn[static_cast<int>(n - k)];
}

Rat lagrange_phi_coeff(const USeries& g, const Laurent& phi, long long n) {
    if (n < 1) throw std::invalid_argument("lagrange_phi_coeff needs n >= 1");
    const int need = static_cast<int>(n) - phi.min_deg;
    if (need < 0) return 0;
    if (g.order() < need)
        throw std::invalid_argument("lagrange_phi_coeff: insufficient series order for phi");
    USeries gt = g.truncated(need);
    USeries gn = gt.pow(n);                       // g^n
    USeries gprime_gnm1 = gt.derivative() * gt.pow(n - 1);  // g' g^{n-1}
    Rat acc = 0;
    for (std::size_t i = 0; i < phi.coeffs.size(); ++i) {
        if (phi.coeffs[i] == 0) continue;
        long long d = phi.min_deg + static_cast<long long>(i);
        long long e1 = n - d;       // [u^{n-d}] g^n
        long long e2 = n - 1 - d;   // [u^{n-1-d}] g' g^{n-1}
        if (e1 >= 0 && e1 <= gn.order()) acc += phi.coeffs[i] * gn[static_cast<int>(e1)];
        if (e2 >= 0 && e2 <= gprime_gnm1.order())
            acc -= phi.coeffs[i] * gprime_gnm1[static_cast<int>(e2)];
    }
    return acc;
}

std::vector<Rat> lagrange_phi_coeff_poly(const BSeries& g_ut, const BSeries& phi_ut, long long n) {
    if (n < 1) throw std::invalid_argument("lagrange_phi_coeff_poly needs n >= 1");
    // derivative in u
    BSeries gprime(g_ut.nx(), g_ut.ny());
    for (int i = 1; i <= g_ut.nx(); ++i)
        for (int j = 0; j <= g_ut.ny(); ++j) gprime.at(i - 1, j) = Rat(i) * g_ut.at(i, j);
    BSeries gn = bpow(g_ut, n);
    BSeries term1 = phi_ut * gn;
    BSeries term2 = (phi_ut * gprime * bpow(g_ut, n - 1)).shift_first(1);
    BSeries total = term1 - term2;
    std::vector<Rat> out;
    for (int j = 0; j <= total.ny(); ++j) out.push_back(total.at(static_cast<int>(n), j));
    return out;
}

// ---- registry -------------------------------------------------------------------

std::vector<std::string> named_series_names() {
    return {"c",   "f",    "Cg",   "E",   "M",   "f_upper", "g_lower", "h_all", "P_lh", "G_even",
            "L_pk", "L_v", "L_dr", "L_df", "F_p", "F_n",     "F_m",     "G_0",   "G_1",  "G1U",
            "G1D"};
}

namespace {

// s^{i+1} f(s^r)^i summed shapes used by the prime decomposition of P(n,r,*)
USeries sfsr(long long r, int order) {  // s f(s^r)
    return fuss_series(r, order).substitute_x_pow(static_cast<int>(r)).shift_mul_x(1);
}

BSeries fpm_series(long long r, int ns, int nt, bool include_positive) {
    // sum over i of  s f(t^r) (t f(t^r))^{r-1-i} * (s f(s^r))^i   at x = y = 1;
    // i = 0 is the pure positive prime, i >= 1 the mixed primes.
    USeries ftr = fuss_series(r, nt).substitute_x_pow(static_cast<int>(r));  // f(t^r)
    USeries tftr = ftr.shift_mul_x(1);                                       // t f(t^r)
    USeries s_only = sfsr(r, ns);                                            // s f(s^r)
    BSeries acc(ns, nt);
    for (long long i = include_positive ? 0 : 1; i <= r - 1; ++i) {
        USeries spart = s_only.pow(i).shift_mul_x(1);       // s * (s f(s^r))^i
        USeries tpart = ftr * tftr.pow(r - 1 - i);          // f(t^r) (t f(t^r))^{r-1-i}
        acc = acc + BSeries::from_first(spart, nt) * BSeries::from_second(tpart, ns);
    }
    return acc;
}

BSeries g0_series(long long r, int ns, int nt) {
    BSeries one = BSeries::constant(1, ns, nt);
    BSeries fn = BSeries::from_first(sfsr(r, ns).pow(r), nt);  // F_n at x=1
    return (one - fn - fpm_series(r, ns, nt, true)).inverse();
}

BSeries g1_series(long long r, int ns, int nt) {
    USeries ftr = fuss_series(r, nt).substitute_x_pow(static_cast<int>(r));
    BSeries scg = BSeries::from_second(ftr, ns).shift_first(1);  // s C_g(1,t)
    return scg * g0_series(r, ns, nt);
}

BSeries g1u_series(long long r, int ns, int nt) {
    BSeries one = BSeries::constant(1, ns, nt);
    BSeries fn = BSeries::from_first(sfsr(r, ns).pow(r), nt);
    return (one - fn) * g1_series(r, ns, nt);
}

BSeries g1d_series(long long r, int nx, int ny) {
    // s = t = 1: F_n(x) = x f(x)^r, F_{p+m}(x,y) = sum_i y f(y)^{r-i} f(x)^i
    USeries fx = fuss_series(r, nx);
    USeries fy = fuss_series(r, ny);
    BSeries one = BSeries::constant(1, nx, ny);
    BSeries fn = BSeries::from_first((fx.pow(r)).shift_mul_x(1), ny);
    BSeries fpm(nx, ny);
    for (long long i = 0; i <= r - 1; ++i)
        fpm = fpm + BSeries::from_first(fx.pow(i), ny) *
                        BSeries::from_second(fy.pow(r - i).shift_mul_x(1), nx);
    BSeries g1 = BSeries::from_second(fy, nx) * (one - fn - fpm).inverse();
    return fn * g1;
}

TSeries g_even_series(int nx, int na, int nb) {
    // G(x,a,b) = b x^2 M(x,b,1) M(x,a,1) M(x,1,a) / (1 - x M(x,1,a) - b x M(x,b,1))
    BSeries Ma1 = motzkin_M(nx, na);         // M(x,a,1)
    BSeries M1a = motzkin_M_second(nx, na);  // M(x,1,a)
    BSeries Mb1 = motzkin_M(nx, nb);         // M(x,b,1)
    TSeries tMa1 = TSeries::embed(Ma1, 0, 1, nx, na, nb);
    TSeries tM1a = TSeries::embed(M1a, 0, 1, nx, na, nb);
    TSeries tMb1 = TSeries::embed(Mb1, 0, 2, nx, na, nb);
    TSeries one = TSeries::constant(1, nx, na, nb);
    TSeries num = (tMb1 * tMa1 * tM1a).shift(0, 2).shift(2, 1);  // b x^2 * ...
    TSeries den = one - tM1a.shift(0, 1) - tMb1.shift(0, 1).shift(2, 1);
    return num * den.inverse();
}

TSeries l_series(char which, int nx, int ns, int nt) {
    BSeries E = narayana_E(nx, std::max(ns, nt));
    TSeries Es = TSeries::embed(E.truncated(nx, ns), 0, 1, nx, ns, nt);
    TSeries Et = TSeries::embed(E.truncated(nx, nt), 0, 2, nx, ns, nt);
    TSeries one = TSeries::constant(1, nx, ns, nt);
    TSeries EsEt = Es * Et;
    switch (which) {
        case 'p':  // peaks: start D end U
            return (one + Et) * (one - EsEt.shift(1, 1)).inverse();
        case 'v':  // valleys: start U end D
            return (one + Es) * (one - EsEt.shift(2, 1)).inverse();
        case 'r':  // double rises: start U end U
            return Es * (one + Et.shift(2, 1)) * (one - EsEt.shift(2, 1)).inverse();
        case 'f':  // double falls: start D end D
            return Et * (one + Es) * Es * (one - EsEt.shift(2, 1)).inverse();
    }
    throw std::logic_error("unreachable");
}

}  // namespace

NamedSeries named_series(const std::string& name, int order, long long r) {
    if (order < 0) throw std::invalid_argument("named_series needs order >= 0");
    if (r < 1) throw std::invalid_argument("named_series needs r >= 1");
    const int N = order;
    if (name == "c") return {name, {"x"}, catalan_series(N)};
    if (name == "f") return {name, {"x"}, fuss_series(r, N)};
    if (name == "Cg") return {name, {"y", "t"}, cg_series(r, N, static_cast<int>(r) * N)};
    if (name == "E") return {name, {"x", "s"}, narayana_E(N, N)};
    if (name == "M") return {name, {"x", "s"}, motzkin_M(N, N)};
    if (name == "f_upper" || name == "g_lower") {
        USeries c = catalan_series(N);
        BSeries xc = BSeries::from_first(c.shift_mul_x(1), N);
        BSeries yc = BSeries::from_second(c.shift_mul_x(1), N);
        BSeries f = (BSeries::constant(1, N, N) - xc - yc).inverse();
        if (name == "f_upper") return {name, {"x", "y"}, f};
        return {name, {"x", "y"},
                BSeries::from_first(c, N) * BSeries::from_second(c, N) * f};
    }
    if (name == "h_all" || name == "P_lh") {
        USeries c2 = catalan_series(N).substitute_x_pow(2);  // c(x^2)
        BSeries cx = BSeries::from_first(c2, N);
        BSeries cy = BSeries::from_second(c2, N);
        BSeries xy = BSeries::from_first(USeries::variable(N), N).shift_second(1);
        BSeries h = cx * cy * (BSeries::constant(1, N, N) - xy * cx * cy).inverse();
        if (name == "h_all") return {name, {"x", "y"}, h};
        return {name, {"x", "y"}, h.shift_first(1)};
    }
    if (name == "G_even") return {name, {"x", "a", "b"}, g_even_series(N, N, N)};
    if (name == "L_pk") return {name, {"x", "s", "t"}, l_series('p', N, N, N)};
    if (name == "L_v") return {name, {"x", "s", "t"}, l_series('v', N, N, N)};
    if (name == "L_dr") return {name, {"x", "s", "t"}, l_series('r', N, N, N)};
    if (name == "L_df") return {name, {"x", "s", "t"}, l_series('f', N, N, N)};
    if (name == "F_n") {
        // x (s C_g(x,s))^r, genuinely bivariate in (x,s)
        BSeries scg = cg_series(r, N, static_cast<int>(r) * N + 1).shift_second(1);
        return {name, {"x", "s"}, bpow(scg, r).shift_first(1)};
    }
    if (name == "F_p") {
        // y s C_g(y,t) (t C_g(y,t))^{r-1} at s = 1
        int nt = static_cast<int>(r) * N + 1;
        BSeries cg = cg_series(r, N, nt);
        return {name, {"y", "t"}, (cg * bpow(cg.shift_second(1), r - 1)).shift_first(1)};
    }
    if (name == "F_m") return {name, {"s", "t"}, fpm_series(r, N, N, false)};
    if (name == "G_0") return {name, {"s", "t"}, g0_series(r, N, N)};
    if (name == "G_1") return {name, {"s", "t"}, g1_series(r, N, N)};
    if (name == "G1U") return {name, {"s", "t"}, g1u_series(r, N, N)};
    if (name == "G1D") return {name, {"x", "y"}, g1d_series(r, N, N)};
    throw std::invalid_argument("unknown series name '" + name + "'");
}

// ---- identity checks --------------------------------------------------------------

std::vector<std::string> identity_ids() {
    return {"e13a", "id-chain", "id2", "id3", "sqrt-1", "sqrt-2", "E-c", "E-M",
            "G1U-closed", "G1D-closed"};
}

namespace {

// trivariate divided difference over the 2nd/3rd axes of a bivariate (x, s)
// series: (A(x,s) - A(x,t))/(s - t), exact via the monomial rule.
TSeries divided_difference_23(const BSeries& a, int nx, int ns, int nt) {
    TSeries out(nx, ns, nt);
    for (int i = 0; i <= std::min(nx, a.nx()); ++i)
        for (int p = 0; p <= ns; ++p)
            for (int q = 0; q <= nt; ++q)
                if (p + q + 1 <= a.ny()) out.at(i, p, q) = a.at(i, p + q + 1);
    return out;
}

IdentityReport check_eq(bool ok, const std::string& what) {
    IdentityReport rep;
    rep.pass = ok;
    rep.detail = what + (ok ? ": coefficients agree" : ": coefficient mismatch");
    return rep;
}

}  // namespace

IdentityReport identity_check(const std::string& id, int order) {
    const int N = order;
    if (id == "e13a") {
        USeries c = catalan_series(N);
        BSeries lhs = divided_difference(catalan_series(2 * N + 1).shift_mul_x(1), N, N);
        BSeries xc = BSeries::from_first(c.shift_mul_x(1), N);
        BSeries yc = BSeries::from_second(c.shift_mul_x(1), N);
        BSeries rhs = (BSeries::constant(1, N, N) - xc - yc).inverse();
        return check_eq(lhs == rhs, "(xc(x)-yc(y))/(x-y) = 1/(1-xc(x)-yc(y))");
    }
    if (id == "id-chain") {
        int M = std::min(N, 10), K = std::min(N, 9);
        BSeries E = narayana_E(M, M);
        TSeries Es = TSeries::embed(E.truncated(M, K), 0, 1, M, K, K);
        TSeries Et = TSeries::embed(E.truncated(M, K), 0, 2, M, K, K);
        TSeries one = TSeries::constant(1, M, K, K);
        TSeries A = one + divided_difference_23(E.shift_second(1), M, K, K);
        TSeries EsEt = Es * Et;
        TSeries B = one + Es * (one + Et.shift(2, 1)) * (one - EsEt.shift(2, 1)).inverse();
        TSeries C = (one + Et) * (one - EsEt.shift(1, 1)).inverse();
        TSeries D = (one + Es) * (one - EsEt.shift(2, 1)).inverse();
        return check_eq(A == B && A == C && A == D,
                        "1 + (sE(x,s)-tE(x,t))/(s-t) = all three closed forms");
    }
    if (id == "id2") {
        int M = std::min(N, 10), K = std::min(N, 9);
        BSeries E = narayana_E(M, M);
        TSeries Es = TSeries::embed(E.truncated(M, K), 0, 1, M, K, K);
        TSeries Et = TSeries::embed(E.truncated(M, K), 0, 2, M, K, K);
        TSeries one = TSeries::constant(1, M, K, K);
        TSeries L = divided_difference_23(E, M, K, K);
        TSeries EsEt = Es * Et;
        TSeries R1 = (one + Es) * EsEt * (one - EsEt.shift(2, 1)).inverse();
        // x(1+E(x,t))E(x,s) / (1 - x(1+sE(x,s)) - xt(1+E(x,t)))
        TSeries den = one - (one + Es.shift(1, 1)).shift(0, 1) -
                      (one + Et).shift(0, 1).shift(2, 1);
        TSeries R2 = (one + Et) * Es.shift(0, 1) * den.inverse();
        return check_eq(L == R1 && L == R2, "(E(x,s)-E(x,t))/(s-t) = both closed forms");
    }
    if (id == "id3") {
        USeries c2 = catalan_series(N).substitute_x_pow(2);
        BSeries cx = BSeries::from_first(c2, N);
        BSeries cy = BSeries::from_second(c2, N);
        BSeries xy = BSeries::from_first(USeries::variable(N), N).shift_second(1);
        BSeries h = cx * cy * (BSeries::constant(1, N, N) - xy * cx * cy).inverse();
        BSeries x = BSeries::from_first(USeries::variable(N), N);
        BSeries y = BSeries::from_second(USeries::variable(N), N);
        BSeries lhs = h * (x - y);
        BSeries rhs = BSeries::from_first(c2.shift_mul_x(1), N) -
                      BSeries::from_second(c2.shift_mul_x(1), N);
        return check_eq(lhs == rhs, "h(x,y)(x-y) = xc(x^2)-yc(y^2)");
    }
    if (id == "sqrt-1" || id == "sqrt-2") {
        USeries c = catalan_series(N);
        USeries one = USeries::constant(1, N);
        USeries rhs = (one - Rat(4) * USeries::variable(N)).sqrt().inverse();
        USeries lhs = id == "sqrt-1"
                          ? (one - Rat(2) * c.shift_mul_x(1)).inverse()
                          : c * (one - (c * c).shift_mul_x(1)).inverse();
        return check_eq(lhs == rhs, id == "sqrt-1" ? "1/(1-2xc(x)) = (1-4x)^{-1/2}"
                                                   : "c(x)/(1-xc(x)^2) = (1-4x)^{-1/2}");
    }
    if (id == "E-c") {
        BSeries E = narayana_E(N, N);
        USeries c = catalan_series(N);
        return check_eq(E.collapse_second_at_one() == c - USeries::constant(1, N),
                        "E(x,1) = c(x)-1");
    }
    if (id == "E-M") {
        BSeries E = narayana_E(N, N);
        BSeries one = BSeries::constant(1, N, N);
        bool ok1 = motzkin_M(N, N) == one + E;                      // M(x,s,1) = 1+E(x,s)
        bool ok2 = motzkin_M_second(N, N) == one + E.shift_second(1);  // M(x,1,s) = 1+sE(x,s)
        return check_eq(ok1 && ok2, "M(x,s,1) = 1+E(x,s) and M(x,1,s) = 1+sE(x,s)");
    }
    if (id == "G1U-closed") {
        for (long long r = 1; r <= 3; ++r) {
            // s (s f(s^r) - t f(t^r)) / (s - t)
            USeries a =
                fuss_series(r, 2 * N + 1).substitute_x_pow(static_cast<int>(r)).shift_mul_x(1);
            BSeries rhs = divided_difference(a, N, N).shift_first(1);
            if (!(g1u_series(r, N, N) == rhs))
                return check_eq(false, "G1U(1,s,1,t) = s(s f(s^r)-t f(t^r))/(s-t), r=" +
                                           std::to_string(r));
        }
        return check_eq(true, "G1U(1,s,1,t) = s(s f(s^r)-t f(t^r))/(s-t), r=1..3");
    }
    if (id == "G1D-closed") {
        for (long long r = 1; r <= 3; ++r) {
            USeries f = fuss_series(r, 2 * N + 1);
            BSeries rhs = divided_difference(f, N, N).shift_first(1);
            if (!(g1d_series(r, N, N) == rhs))
                return check_eq(false,
                                "G1D(x,1,y,1) = x(f(x)-f(y))/(x-y), r=" + std::to_string(r));
        }
        return check_eq(true, "G1D(x,1,y,1) = x(f(x)-f(y))/(x-y), r=1..3");
    }
    throw std::invalid_argument("unknown identity id '" + id + "'");
}

}  // namespace cf::series
