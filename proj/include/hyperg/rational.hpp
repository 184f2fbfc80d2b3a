#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "hyperg/errors.hpp"

namespace hyperg {

// Exact rational arithmetic for the closed-form oracles. Backed by
// boost::multiprecision::cpp_rational (arbitrary-precision integers, always
// kept in lowest terms with positive denominator), with parsing and the few
// series-specific helpers layered on top.
class Rational {
  public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    // Accepts "7", "-3/4", "2.5" (decimal expansions are exact: 2.5 -> 5/2).
    static Rational parse(const std::string& text);

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && numerator() <= 0; }

    double to_double() const { return v_.convert_to<double>(); }

    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw ZeroDenominatorError("division by zero rational");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(const std::string& text) {
    const auto bad = [&] { return DomainError("cannot parse rational from \"" + text + "\""); };
    std::string s = text;
    // Trim surrounding whitespace.
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw bad();
    s = s.substr(first, last - first + 1);

    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    if (pos >= s.size()) throw bad();

    const auto digits_only = [](const std::string& d) {
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };

    std::string body = s.substr(pos);
    try {
        if (const auto slash = body.find('/'); slash != std::string::npos) {
            const std::string num = body.substr(0, slash);
            const std::string den = body.substr(slash + 1);
            if (!digits_only(num) || !digits_only(den)) throw bad();
            Rational r{Int(num), Int(den)};
            return negative ? -r : r;
        }
        if (const auto dot = body.find('.'); dot != std::string::npos) {
            const std::string ip = body.substr(0, dot);
            const std::string fp = body.substr(dot + 1);
            if (!digits_only(ip) && !(ip.empty() && digits_only(fp))) throw bad();
            if (!fp.empty() && !digits_only(fp)) throw bad();
            Int scale = 1;
            for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
            const Int whole = ip.empty() ? Int(0) : Int(ip);
            const Int frac = fp.empty() ? Int(0) : Int(fp);
            Rational r{whole * scale + frac, scale};
            return negative ? -r : r;
        }
        if (!digits_only(body)) throw bad();
        Rational r{Int(body), Int(1)};
        return negative ? -r : r;
    } catch (const ZeroDenominatorError&) {
        throw;
    } catch (const DomainError&) {
        throw;
    } catch (...) {
        throw bad();
    }
}

// Rising factorial over exact rationals, (x)_0 = 1.
inline Rational pochhammer_rational(const Rational& x, std::int64_t n) {
    Rational p{1};
    for (std::int64_t k = 0; k < n; ++k) p *= x + Rational{k};
    return p;
}

}  // namespace hyperg
