#include "crpc/topview.hpp"

#include <cmath>
#include <numeric>

#include <fmt/core.h>

namespace crpc {

namespace {

const MultiPoly& poly_D() {
    // t^2 + 1 (slot 0 is t during elimination, x after substitution)
    static const MultiPoly d = MultiPoly::term(1, 2, 0, 0) + MultiPoly(Rational(1));
    return d;
}

// Rational function with denominator (t^2 + 1)^dp.
struct RF {
    MultiPoly num;
    int dp = 0;
};

RF align(const RF& a, int dp) {
    if (a.dp == dp) return a;
    return {a.num * poly_D().pow(unsigned(dp - a.dp)), dp};
}

RF add(const RF& a, const RF& b) {
    int dp = std::max(a.dp, b.dp);
    return {align(a, dp).num + align(b, dp).num, dp};
}

RF sub(const RF& a, const RF& b) {
    int dp = std::max(a.dp, b.dp);
    return {align(a, dp).num - align(b, dp).num, dp};
}

RF mul(const RF& a, const RF& b) { return {a.num * b.num, a.dp + b.dp}; }

RF mul(const RF& a, const MultiPoly& p) { return {a.num * p, a.dp}; }

Rational binomial(int n, int j) {
    Rational r = 1;
    for (int i = 0; i < j; ++i) r = r * (n - i) / (i + 1);
    return r;
}

void check_nm(int n, int m) {
    if (n <= 0 || m <= 0)
        throw Error(errc::invalid_k, "k = n/m needs positive n, m");
    if (std::gcd(n, m) != 1)
        throw Error(errc::invalid_k, "n and m must be coprime");
    if (n == m) throw Error(errc::invalid_k, "k = 1 excluded (developable)");
}

struct Pipeline {
    RF A, B2;
    int M;    // power of (t^2+1) used for F
    int half; // exponent of s^2 in F's numerator
};

Pipeline setup(int n, int m) {
    check_nm(n, m);
    Rational k(n, m);
    Rational km1 = k - 1, kp1 = k + 1;

    Pipeline p;
    // quadratic in S = s^2: (k-1)^2 S^2 - (2(k^2-1) + 16 k^2 g^2/(t^2+1)) S + (k+1)^2 = 0
    // S = A + B, B^2 = A^2 - (k+1)^2/(k-1)^2
    Rational inv = 1 / (km1 * km1);
    MultiPoly g2 = MultiPoly::term(1, 0, 2, 0);
    p.A = {(poly_D() * (k * k - 1) + g2 * (8 * k * k)) * inv, 1};
    p.B2 = sub(mul(p.A, p.A), RF{MultiPoly(kp1 * kp1 * inv), 0});

    bool same_parity = (n % 2) == (m % 2);
    p.M = same_parity ? m : 2 * m;
    p.half = same_parity ? (n + m) / 2 : (n + m);
    return p;
}

} // namespace

std::pair<RationalFunction, RationalFunction> s_squared_branches(int n, int m) {
    Pipeline p = setup(n, m);
    RationalFunction A{p.A.num, poly_D().pow(unsigned(p.A.dp))};
    RationalFunction B2{p.B2.num, poly_D().pow(unsigned(p.B2.dp))};
    return {A, B2};
}

MultiPoly build_implicit_polynomial(int n, int m, const std::optional<Rational>& C_value) {
    Pipeline p = setup(n, m);

    // (A + B)^j split into even/odd parts of B: S^j = E_j + O_j B
    int top = std::max(p.half, p.M);
    std::vector<std::pair<RF, RF>> pows;
    pows.reserve(top + 1);
    pows.push_back({RF{MultiPoly(Rational(1)), 0}, RF{MultiPoly(), 0}});
    for (int j = 1; j <= top; ++j) {
        const auto& [E, O] = pows.back();
        pows.push_back({add(mul(E, p.A), mul(O, p.B2)), add(E, mul(O, p.A))});
    }

    // F = (t^2+1)^M = (2C)^M S^half / (S+1)^M = (P1 + Q1 B)/(P2 + Q2 B)
    MultiPoly twoC_M = C_value
        ? MultiPoly(Rational(2) * *C_value).pow(unsigned(p.M))
        : MultiPoly::term(boost::multiprecision::pow(BigInt(2), p.M), 0, 0, unsigned(p.M));
    RF P1 = mul(pows[p.half].first, twoC_M);
    RF Q1 = mul(pows[p.half].second, twoC_M);
    RF P2{MultiPoly(), 0}, Q2{MultiPoly(), 0};
    for (int j = 0; j <= p.M; ++j) {
        Rational b = binomial(p.M, j);
        P2 = add(P2, RF{pows[j].first.num * b, pows[j].first.dp});
        Q2 = add(Q2, RF{pows[j].second.num * b, pows[j].second.dp});
    }

    MultiPoly F = poly_D().pow(unsigned(p.M));
    RF G1 = sub(Q1, mul(Q2, F));
    RF G2 = sub(P1, mul(P2, F));
    RF R = sub(mul(p.B2, mul(G1, G1)), mul(G2, G2));

    // numerator; (t^2+1) never vanishes, so stray powers of it are stripped
    MultiPoly result = R.num;
    if (result.is_zero())
        throw Error(errc::degree_blowup, "elimination collapsed to the zero polynomial");
    while (true) {
        auto q = result.try_divide(poly_D());
        if (!q) break;
        result = *q;
    }

    // top view coordinates: t = 2x, g = y
    result = result.scale_variable(0, 2).normalized();

    int bound = 4 * (3 * m + n);
    if (result.degree_xy() > bound)
        throw Error(errc::degree_blowup,
                    fmt::format("degree {} exceeds the bound {}", result.degree_xy(), bound));
    return result;
}

std::vector<std::pair<double, double>> topview_samples(const GluedProfile& profile,
                                                       int count) {
    const ShapeParams& sp = profile.params();
    const DomainInfo& dom = profile.domain();
    double lo = profile.anchor();
    double hi;
    switch (profile.tag()) {
        case BranchTag::Full: hi = 4.0 * dom.s0 + 10.0; break;
        default: hi = *dom.s_k; break;
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(2 * size_t(count));
    for (int i = 0; i < count; ++i) {
        double u = count == 1 ? 0.0 : double(i) / (count - 1);
        double s = lo + (hi - lo) * u * u;
        double t = t_of_s(s, sp.k, sp.C, profile.tolerances());
        double g = g_of_s(s, sp.k, sp.C);
        out.emplace_back(t / 2.0, g);
        out.emplace_back(-t / 2.0, g);
    }
    return out;
}

double topview_residual(const MultiPoly& poly,
                        const std::vector<std::pair<double, double>>& samples,
                        double C_value) {
    double worst = 0;
    for (const auto& [x, y] : samples) {
        double val = 0, scale = 0;
        for (const auto& [mono, coef] : poly.terms()) {
            double term = double(coef) * std::pow(x, mono[0]) * std::pow(y, mono[1])
                          * std::pow(C_value, mono[2]);
            val += term;
            scale = std::max(scale, std::abs(term));
        }
        if (scale > 0) worst = std::max(worst, std::abs(val) / scale);
    }
    return worst;
}

} // namespace crpc
