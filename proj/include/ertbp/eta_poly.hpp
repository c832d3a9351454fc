#pragma once

#include <complex>
#include <vector>

namespace ertbp {

using Complex = std::complex<double>;

/// Modulus below which a stored coefficient counts as zero. Denormal hygiene
/// only; physically small coefficients are kept.
inline constexpr double kZeroPurge = 1e-300;

/// Truncated polynomial in the coupling coefficient eta, complex coefficients.
///
/// The zero polynomial is the empty coefficient vector. Trailing (near-)zero
/// coefficients are trimmed so equal polynomials compare equal.
class EtaPoly {
public:
    EtaPoly() = default;
    explicit EtaPoly(Complex c);
    EtaPoly(Complex c, int degree);  // c * eta^degree

    static EtaPoly eta() { return EtaPoly(Complex(1.0, 0.0), 1); }

    /// Degree of the highest stored coefficient, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Complex coeff(int d) const;
    void set_coeff(int d, Complex v);

    EtaPoly& operator+=(const EtaPoly& o);
    EtaPoly& operator-=(const EtaPoly& o);
    friend EtaPoly operator+(EtaPoly a, const EtaPoly& b) { a += b; return a; }
    friend EtaPoly operator-(EtaPoly a, const EtaPoly& b) { a -= b; return a; }
    EtaPoly operator-() const;

    EtaPoly& operator*=(Complex s);
    friend EtaPoly operator*(EtaPoly a, Complex s) { a *= s; return a; }
    friend EtaPoly operator*(Complex s, EtaPoly a) { a *= s; return a; }

    /// Product truncated at max_degree.
    static EtaPoly mul(const EtaPoly& a, const EtaPoly& b, int max_degree);

    /// Multiplication by eta, truncated at max_degree.
    EtaPoly shifted_up(int max_degree) const;

    /// Exact division by eta. Throws RingError if the constant term is not
    /// negligible relative to the largest coefficient.
    EtaPoly divided_by_eta() const;

    Complex eval(double eta) const;

    double max_abs() const;
    void trim();

    const std::vector<Complex>& coeffs() const { return c_; }

private:
    std::vector<Complex> c_;
};

}  // namespace ertbp
