#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace nuinv {

// Exponent triple of a monomial t^t * chi^chi * d^d. Powers of t (the formal
// stand-in for e^r) and of d range over all integers; chi powers stay
// non-negative.
struct Exponents {
    int t = 0;
    int chi = 0;
    int d = 0;

    friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

// Finitely supported Laurent polynomial in t, chi, d with exact rational
// coefficients. Canonical form: no zero coefficients stored, so equality is
// plain coefficient-wise map equality. Immutable value type.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(const Rational& constant) { add(Exponents{}, constant); }

    static LaurentSeries term(const Rational& coeff, int t_pow, int chi_pow, int d_pow) {
        if (chi_pow < 0)
            throw std::invalid_argument("LaurentSeries: chi powers must be non-negative");
        LaurentSeries s;
        s.add(Exponents{t_pow, chi_pow, d_pow}, coeff);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational coefficient(int t_pow, int chi_pow, int d_pow) const {
        auto it = terms_.find(Exponents{t_pow, chi_pow, d_pow});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r = a;
        for (const auto& [e, c] : b.terms_)
            r.add(e, c);
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r = a;
        for (const auto& [e, c] : b.terms_)
            r.add(e, -c);
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a) {
        LaurentSeries r;
        for (const auto& [e, c] : a.terms_)
            r.terms_.emplace(e, -c);
        return r;
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add(Exponents{ea.t + eb.t, ea.chi + eb.chi, ea.d + eb.d}, ca * cb);
        return r;
    }
    friend LaurentSeries operator*(const Rational& c, const LaurentSeries& s) {
        LaurentSeries r;
        if (c.is_zero())
            return r;
        for (const auto& [e, coeff] : s.terms_)
            r.terms_.emplace(e, c * coeff);
        return r;
    }
    friend LaurentSeries operator*(const LaurentSeries& s, const Rational& c) { return c * s; }

    LaurentSeries pow(unsigned n) const {
        LaurentSeries result{Rational(1)};
        LaurentSeries base = *this;
        while (n != 0) {
            if (n & 1)
                result = result * base;
            n >>= 1;
            if (n != 0)
                base = base * base;
        }
        return result;
    }

    // Terms whose t exponent equals t_pow (kept verbatim, not shifted).
    LaurentSeries slice_t(int t_pow) const {
        LaurentSeries r;
        for (const auto& [e, c] : terms_)
            if (e.t == t_pow)
                r.terms_.emplace(e, c);
        return r;
    }

    // Truncation dropping decaying tails in t.
    LaurentSeries drop_negative_t() const {
        LaurentSeries r;
        for (const auto& [e, c] : terms_)
            if (e.t >= 0)
                r.terms_.emplace(e, c);
        return r;
    }

    LaurentSeries positive_t_part() const {
        LaurentSeries r;
        for (const auto& [e, c] : terms_)
            if (e.t > 0)
                r.terms_.emplace(e, c);
        return r;
    }

    // Substitute exact values for chi and d; t stays formal. Negative powers
    // of d need a nonzero value.
    std::map<int, Rational> evaluate_chi_d(const Rational& chi, const Rational& d) const {
        std::map<int, Rational> out;
        for (const auto& [e, c] : terms_) {
            Rational v = c * pow_checked(chi, e.chi, "chi") * pow_checked(d, e.d, "d");
            auto [it, inserted] = out.emplace(e.t, v);
            if (!inserted)
                it->second += v;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    bool operator==(const LaurentSeries&) const = default;

    // Human form, descending powers of t: "-1/8*t^2*d - 1/4*t*chi + ..."
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::vector<std::pair<Exponents, Rational>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            if (a.first.t != b.first.t)
                return a.first.t > b.first.t;
            if (a.first.chi != b.first.chi)
                return a.first.chi > b.first.chi;
            return a.first.d > b.first.d;
        });
        std::string out;
        bool first = true;
        for (const auto& [e, c] : ts) {
            const bool neg = c.is_negative();
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            const Rational mag = neg ? -c : c;
            std::string vars;
            auto append_var = [&vars](const char* v, int p) {
                if (p == 0)
                    return;
                if (!vars.empty())
                    vars += "*";
                vars += v;
                if (p != 1)
                    vars += "^" + std::to_string(p);
            };
            append_var("t", e.t);
            append_var("chi", e.chi);
            append_var("d", e.d);
            if (vars.empty())
                out += mag.str();
            else if (mag == Rational(1))
                out += vars;
            else
                out += mag.str() + "*" + vars;
        }
        return out;
    }

private:
    static Rational pow_checked(const Rational& base, int e, const char* name) {
        if (e < 0 && base.is_zero())
            throw std::domain_error(std::string("LaurentSeries: negative power of zero ") + name);
        return base.pow(e);
    }

    void add(const Exponents& e, const Rational& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    std::map<Exponents, Rational> terms_;
};

} // namespace nuinv
