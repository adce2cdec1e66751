#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace topomeasure {

using Rational = boost::rational<std::int64_t>;

// Nonnegative exact rational or +inf.
class Value {
public:
    Value() = default;
    Value(std::int64_t n) : q_(n) {}
    Value(Rational q) : q_(q) {}

    static Value inf() {
        Value v;
        v.inf_ = true;
        return v;
    }

    bool is_inf() const { return inf_; }
    bool is_zero() const { return !inf_ && q_.numerator() == 0; }
    const Rational& rational() const {
        if (inf_) throw std::domain_error("value is infinite");
        return q_;
    }

    friend Value operator+(const Value& a, const Value& b) {
        if (a.inf_ || b.inf_) return inf();
        return Value(a.q_ + b.q_);
    }
    Value& operator+=(const Value& o) { return *this = *this + o; }

    friend Value operator-(const Value& a, const Value& b) {
        if (b.inf_) throw std::domain_error("subtraction of an infinite value");
        if (a.inf_) return inf();
        return Value(a.q_ - b.q_);
    }
    Value& operator-=(const Value& o) { return *this = *this - o; }

    friend Value operator*(std::int64_t k, const Value& a) {
        if (a.inf_) return k == 0 ? Value(0) : inf();
        return Value(a.q_ * k);
    }

    friend bool operator==(const Value& a, const Value& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.q_ == b.q_;
    }
    friend bool operator<(const Value& a, const Value& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator>(const Value& a, const Value& b) { return b < a; }
    friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
    friend bool operator>=(const Value& a, const Value& b) { return !(a < b); }

    // "n", "p/q" in lowest terms, or "inf".
    std::string str() const {
        if (inf_) return "inf";
        if (q_.denominator() == 1) return std::to_string(q_.numerator());
        return std::to_string(q_.numerator()) + "/" + std::to_string(q_.denominator());
    }

    static Value parse(std::string_view text);

private:
    Rational q_{0};
    bool inf_ = false;
};

inline Value Value::parse(std::string_view text) {
    if (text == "inf") return inf();
    auto slash = text.find('/');
    auto to_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(std::string(s), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        return v;
    };
    if (slash == std::string_view::npos) return Value(to_int(text));
    std::int64_t num = to_int(text.substr(0, slash));
    std::int64_t den = to_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Value(Rational(num, den));
}

}  // namespace topomeasure
