#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace hamcount {

// Exact nonnegative integer count. Backed by GMP; the only external
// representation is a plain decimal string (no exponent, no separators).
class Count {
public:
    Count() : value_(0) {}
    Count(unsigned long v) : value_(v) {}
    explicit Count(mpz_class v) : value_(std::move(v)) {
        if (value_ < 0) throw std::domain_error("Count cannot be negative");
    }

    const mpz_class& value() const { return value_; }

    std::string str() const { return value_.get_str(10); }

    static Count from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty count string");
        for (char c : s)
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad count string: " + s);
        return Count(mpz_class(s, 10));
    }

    // Natural log without going through a decimal string; exact mantissa/
    // exponent split so arbitrarily large values stay finite.
    double log_natural() const {
        if (value_ == 0) throw std::domain_error("log of zero count");
        signed long exp = 0;
        double d = mpz_get_d_2exp(&exp, value_.get_mpz_t());
        return std::log(d) + static_cast<double>(exp) * std::log(2.0);
    }

    bool is_zero() const { return value_ == 0; }

    friend Count operator+(const Count& a, const Count& b) { return Count(mpz_class(a.value_ + b.value_)); }
    friend Count operator*(const Count& a, const Count& b) { return Count(mpz_class(a.value_ * b.value_)); }
    Count& operator+=(const Count& o) { value_ += o.value_; return *this; }
    Count& operator*=(const Count& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Count& a, const Count& b) { return a.value_ != b.value_; }
    friend bool operator<(const Count& a, const Count& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Count& a, const Count& b) { return a.value_ <= b.value_; }

    // Quotient when divisibility is guaranteed by the caller's argument.
    // A remainder means the argument was wrong, not the input.
    Count divide_exact(unsigned long divisor) const {
        if (divisor == 0) throw std::domain_error("division by zero");
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), value_.get_mpz_t(), divisor);
        if (r != 0)
            throw std::logic_error("exact division failed: " + str() + " / " + std::to_string(divisor));
        return Count(q);
    }

private:
    mpz_class value_;
};

inline Count factorial(unsigned long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return Count(r);
}

inline Count binomial(unsigned long n, unsigned long k) {
    if (k > n) return Count(0ul);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Count(r);
}

}  // namespace hamcount
