#ifndef CASIMIR_LOGVALUE_HPP
#define CASIMIR_LOGVALUE_HPP

#include <cmath>
#include <limits>

namespace casimir {

// Sign + log-magnitude representation for factorial-scale quantities.
// Multiplication composes signs and adds log-magnitudes; zero absorbs.
struct LogValue {
    int sign = 0;  // -1, 0, +1
    double log_magnitude = -std::numeric_limits<double>::infinity();

    static LogValue zero() { return {}; }

    static LogValue from_value(double v) {
        if (v == 0.0) return {};
        return {v > 0 ? 1 : -1, std::log(std::abs(v))};
    }

    static LogValue from_log(int sign, double log_mag) {
        if (sign == 0) return {};
        return {sign, log_mag};
    }

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_magnitude); }

    bool is_zero() const { return sign == 0; }

    friend LogValue operator*(const LogValue& a, const LogValue& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
    }

    LogValue& operator*=(const LogValue& o) { return *this = *this * o; }
};

}  // namespace casimir

#endif
