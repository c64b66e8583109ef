#include "crpc/multipoly.hpp"

#include <cmath>

#include <fmt/core.h>

namespace crpc {

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Monomial& m = terms_.rbegin()->first; // graded order: last is max degree
    return int(m[0] + m[1] + m[2]);
}

int MultiPoly::degree_xy() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, int(m[0] + m[1]));
    return d;
}

int MultiPoly::degree_in(int slot) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, int(m[slot]));
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::scale_variable(int slot, const Rational& c) const {
    MultiPoly r;
    for (const auto& [m, cc] : terms_) {
        Rational factor = 1;
        for (unsigned i = 0; i < m[slot]; ++i) factor *= c;
        r.add_term(m, cc * factor);
    }
    return r;
}

MultiPoly MultiPoly::substitute(int slot, const Rational& value) const {
    MultiPoly r;
    for (const auto& [m, cc] : terms_) {
        Rational factor = 1;
        for (unsigned i = 0; i < m[slot]; ++i) factor *= value;
        Monomial mm = m;
        mm[slot] = 0;
        r.add_term(mm, cc * factor);
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    MultiPoly rem = *this;
    MultiPoly quot;
    const auto& lead = *divisor.terms_.rbegin(); // graded-lex leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        const Monomial &rm = rlead.first, &dm = lead.first;
        if (rm[0] < dm[0] || rm[1] < dm[1] || rm[2] < dm[2]) return std::nullopt;
        Monomial qm{rm[0] - dm[0], rm[1] - dm[1], rm[2] - dm[2]};
        Rational qc = rlead.second / lead.second;
        MultiPoly t = MultiPoly::term(qc, qm[0], qm[1], qm[2]);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot;
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    }
    Rational content(num_gcd, den_lcm);
    if (terms_.rbegin()->second < 0) content = -content;
    return *this * (Rational(1) / content);
}

double MultiPoly::eval(double x, double y, double c_value) const {
    double acc = 0;
    for (const auto& [m, c] : terms_)
        acc += double(c) * std::pow(x, m[0]) * std::pow(y, m[1]) * std::pow(c_value, m[2]);
    return acc;
}

std::string MultiPoly::to_text(const std::array<std::string, 3>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str();
        for (int v = 0; v < 3; ++v)
            if (it->first[v] > 0) out += fmt::format(" * {}^{}", names[v], it->first[v]);
    }
    return out;
}

} // namespace crpc
