#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spincode {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact value of the form sign * sqrt(radicand), radicand a non-negative
/// rational. Clebsch-Gordan coefficients and spherical tensor entries live
/// here so nothing is rounded until a float is requested.
class SignedSqrtRational {
  public:
    SignedSqrtRational() : sign_(0), radicand_(0) {}

    SignedSqrtRational(int sign, BigRational radicand) : sign_(sign), radicand_(std::move(radicand)) {
        if (radicand_ < 0)
            throw std::invalid_argument("SignedSqrtRational: negative radicand");
        if (radicand_ == 0)
            sign_ = 0;
        if (sign_ == 0)
            radicand_ = 0;
    }

    /// Exact embedding of a rational r as sign(r) * sqrt(r^2).
    static SignedSqrtRational from_rational(const BigRational& r) {
        int s = r > 0 ? 1 : (r < 0 ? -1 : 0);
        return {s, r * r};
    }

    static SignedSqrtRational zero() { return {}; }
    static SignedSqrtRational one() { return {1, 1}; }

    int sign() const { return sign_; }
    const BigRational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    /// The exact square, always a plain rational.
    BigRational squared() const { return radicand_; }

    friend SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b) {
        return {a.sign_ * b.sign_, a.radicand_ * b.radicand_};
    }

    friend SignedSqrtRational operator-(const SignedSqrtRational& a) { return {-a.sign_, a.radicand_}; }

    friend bool operator==(const SignedSqrtRational& a, const SignedSqrtRational& b) {
        return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
    }

    double to_double() const {
        if (sign_ == 0)
            return 0.0;
        return sign_ * sqrt_to_double(radicand_);
    }

    /// sqrt of a non-negative rational as a double, scaled so that values
    /// whose numerator or denominator is far outside double range (factorials
    /// near 300!) still land on the right magnitude.
    static double sqrt_to_double(const BigRational& r) {
        if (r == 0)
            return 0.0;
        const BigInt num = boost::multiprecision::numerator(r);
        const BigInt den = boost::multiprecision::denominator(r);
        auto bits = [](const BigInt& v) { return static_cast<std::int64_t>(boost::multiprecision::msb(v)); };
        std::int64_t e = bits(num) - bits(den);
        std::int64_t shift = 2 * (e / 2); // even, keeps sqrt exact in the exponent
        BigRational scaled = shift >= 0 ? BigRational(num, den << shift) : BigRational(num << (-shift), den);
        double base = std::sqrt(scaled.convert_to<double>());
        return std::ldexp(base, static_cast<int>(shift / 2));
    }

    /// Renders as "c*sqrt(r)/d" with square factors pulled out, e.g.
    /// radicand 5/16 -> "sqrt(5)/4". Intended for small closed-form values.
    std::string exact_str() const {
        if (sign_ == 0)
            return "0";
        BigInt num = boost::multiprecision::numerator(radicand_);
        BigInt den = boost::multiprecision::denominator(radicand_);
        // sqrt(num/den) = sqrt(num*den)/den
        BigInt rad = num * den;
        BigInt sq = 1, rest = 1;
        factor_square_part(rad, sq, rest);
        const BigInt g = boost::multiprecision::gcd(sq, den);
        sq /= g;
        den /= g;
        std::string out = sign_ < 0 ? "-" : "";
        bool have_coeff = (sq != 1);
        if (rest == 1) {
            out += sq.convert_to<std::string>();
        } else {
            if (have_coeff)
                out += sq.convert_to<std::string>() + "*";
            out += "sqrt(" + rest.convert_to<std::string>() + ")";
        }
        if (den != 1)
            out += "/" + den.convert_to<std::string>();
        return out;
    }

  private:
    // rad = sq^2 * rest with rest square-free (trial division; closed-form
    // family radicands are small).
    static void factor_square_part(BigInt rad, BigInt& sq, BigInt& rest) {
        sq = 1;
        rest = 1;
        for (BigInt p = 2; p * p <= rad; ++p) {
            int e = 0;
            while (rad % p == 0) {
                rad /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i)
                sq *= p;
            if (e % 2)
                rest *= p;
        }
        rest *= rad;
    }

    int sign_;
    BigRational radicand_;
};

} // namespace spincode
