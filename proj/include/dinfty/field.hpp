#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

/// Exact scalars for the linear-algebra oracle: a prime field with runtime
/// modulus and an overflow-checked rational type.  Both plug into Eigen
/// dense matrices; all elimination code avoids abs()/norms so that finite
/// fields work unchanged.
namespace dinfty {

// ---------------------------------------------------------------------------
// Prime field element
// ---------------------------------------------------------------------------

/// Element of GF(p) with the modulus carried per element.  A default or
/// int-constructed element has modulus 0 ("not yet attached to a field");
/// arithmetic propagates the nonzero modulus of either operand, so values
/// seeded by make_gfp(v, p) infect every derived quantity.
class Gfp {
  public:
    Gfp() : v_(0), p_(0) {}
    Gfp(long long v) : v_(v), p_(0) {}  // NOLINT: Eigen needs implicit Scalar(int)
    Gfp(long long v, long long p) : v_(v), p_(p) { reduce(); }

    long long value() const { return v_; }
    long long modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    friend Gfp operator+(const Gfp& a, const Gfp& b) {
        Gfp r(a.v_ + b.v_, joint(a, b));
        return r;
    }
    friend Gfp operator-(const Gfp& a, const Gfp& b) {
        Gfp r(a.v_ - b.v_, joint(a, b));
        return r;
    }
    friend Gfp operator*(const Gfp& a, const Gfp& b) {
        Gfp r(a.v_ * b.v_, joint(a, b));
        return r;
    }
    friend Gfp operator/(const Gfp& a, const Gfp& b) {
        const long long p = joint(a, b);
        if (p == 0) throw std::domain_error("Gfp division without a modulus");
        if (b.v_ % p == 0) throw std::domain_error("Gfp division by zero");
        Gfp inv(mod_inverse(((b.v_ % p) + p) % p, p), p);
        return a * inv;
    }
    Gfp operator-() const { return Gfp(-v_, p_); }
    Gfp& operator+=(const Gfp& o) { return *this = *this + o; }
    Gfp& operator-=(const Gfp& o) { return *this = *this - o; }
    Gfp& operator*=(const Gfp& o) { return *this = *this * o; }
    Gfp& operator/=(const Gfp& o) { return *this = *this / o; }

    friend bool operator==(const Gfp& a, const Gfp& b) {
        const long long p = joint(a, b);
        if (p == 0) return a.v_ == b.v_;
        return ((a.v_ - b.v_) % p + p) % p == 0;
    }
    friend bool operator!=(const Gfp& a, const Gfp& b) { return !(a == b); }

  private:
    static long long joint(const Gfp& a, const Gfp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw std::domain_error("Gfp moduli mismatch");
        return a.p_ != 0 ? a.p_ : b.p_;
    }
    static long long mod_inverse(long long a, long long p) {
        // extended Euclid; p prime, 0 < a < p
        long long t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            const long long q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (r != 1) throw std::domain_error("Gfp modulus not prime");
        return ((t % p) + p) % p;
    }
    void reduce() {
        if (p_ != 0) v_ = ((v_ % p_) + p_) % p_;
    }

    long long v_;
    long long p_;
};

inline std::string to_string(const Gfp& x) { return std::to_string(x.value()); }

// ---------------------------------------------------------------------------
// Checked rational
// ---------------------------------------------------------------------------

/// Rational with 64-bit numerator/denominator, normalized (den > 0, gcd 1).
/// Intermediate products run through 128-bit and throw on overflow rather
/// than wrap.
class Rat64 {
  public:
    Rat64() : num_(0), den_(1) {}
    Rat64(long long n) : num_(n), den_(1) {}  // NOLINT: implicit for Scalar(int)
    Rat64(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend Rat64 operator+(const Rat64& a, const Rat64& b) {
        return Rat64::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                              i128(a.den_) * b.den_);
    }
    friend Rat64 operator-(const Rat64& a, const Rat64& b) { return a + (-b); }
    friend Rat64 operator*(const Rat64& a, const Rat64& b) {
        return Rat64::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat64 operator/(const Rat64& a, const Rat64& b) {
        if (b.num_ == 0) throw std::domain_error("Rat64 division by zero");
        return Rat64::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat64 operator-() const {
        Rat64 r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
    Rat64& operator-=(const Rat64& o) { return *this = *this - o; }
    Rat64& operator*=(const Rat64& o) { return *this = *this * o; }
    Rat64& operator/=(const Rat64& o) { return *this = *this / o; }

    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }

  private:
    using i128 = __int128;

    static Rat64 from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat64 zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rat64 r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    static long long narrow(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat64 overflow");
        return static_cast<long long>(v);
    }
    void normalize() { *this = from128(num_, den_); }

    long long num_;
    long long den_;
};

inline std::string to_string(const Rat64& x) {
    return x.den() == 1 ? std::to_string(x.num())
                        : std::to_string(x.num()) + "/" + std::to_string(x.den());
}

// ---------------------------------------------------------------------------
// Field descriptors
// ---------------------------------------------------------------------------

/// GF(p) with a fixed prime; make() stamps the modulus on every element.
struct GfpField {
    using Scalar = Gfp;
    long long p;
    Scalar make(long long v) const { return Gfp(v, p); }
    std::string name() const { return "gfp(" + std::to_string(p) + ")"; }
};

struct RationalField {
    using Scalar = Rat64;
    Scalar make(long long v) const { return Rat64(v); }
    std::string name() const { return "rational"; }
};

inline bool is_zero(const Gfp& x) {
    return x == Gfp(0);
}
inline bool is_zero(const Rat64& x) { return x.is_zero(); }

}  // namespace dinfty

namespace Eigen {

template <>
struct NumTraits<dinfty::Gfp> : GenericNumTraits<dinfty::Gfp> {
    using Real = dinfty::Gfp;
    using NonInteger = dinfty::Gfp;
    using Literal = dinfty::Gfp;
    using Nested = dinfty::Gfp;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 2,
    };
    static inline dinfty::Gfp epsilon() { return dinfty::Gfp(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<dinfty::Rat64> : GenericNumTraits<dinfty::Rat64> {
    using Real = dinfty::Rat64;
    using NonInteger = dinfty::Rat64;
    using Literal = dinfty::Rat64;
    using Nested = dinfty::Rat64;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 4,
    };
    static inline dinfty::Rat64 epsilon() { return dinfty::Rat64(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
