#include "ertbp/eta_poly.hpp"

#include <algorithm>
#include <cmath>

#include "ertbp/errors.hpp"

namespace ertbp {

EtaPoly::EtaPoly(Complex c) {
    if (std::abs(c) > kZeroPurge) c_.push_back(c);
}

EtaPoly::EtaPoly(Complex c, int degree) {
    if (std::abs(c) > kZeroPurge) {
        c_.assign(degree + 1, Complex(0.0));
        c_[degree] = c;
    }
}

Complex EtaPoly::coeff(int d) const {
    if (d < 0 || d > degree()) return Complex(0.0);
    return c_[d];
}

void EtaPoly::set_coeff(int d, Complex v) {
    if (d > degree()) c_.resize(d + 1, Complex(0.0));
    c_[d] = v;
    trim();
}

EtaPoly& EtaPoly::operator+=(const EtaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Complex(0.0));
    for (size_t d = 0; d < o.c_.size(); ++d) c_[d] += o.c_[d];
    trim();
    return *this;
}

EtaPoly& EtaPoly::operator-=(const EtaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Complex(0.0));
    for (size_t d = 0; d < o.c_.size(); ++d) c_[d] -= o.c_[d];
    trim();
    return *this;
}

EtaPoly EtaPoly::operator-() const {
    EtaPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

EtaPoly& EtaPoly::operator*=(Complex s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
}

EtaPoly EtaPoly::mul(const EtaPoly& a, const EtaPoly& b, int max_degree) {
    EtaPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    int deg = std::min(a.degree() + b.degree(), max_degree);
    if (deg < 0) return r;
    r.c_.assign(deg + 1, Complex(0.0));
    for (int da = 0; da <= a.degree(); ++da) {
        if (std::abs(a.c_[da]) <= kZeroPurge) continue;
        int db_max = std::min(b.degree(), deg - da);
        for (int db = 0; db <= db_max; ++db)
            r.c_[da + db] += a.c_[da] * b.c_[db];
    }
    r.trim();
    return r;
}

EtaPoly EtaPoly::shifted_up(int max_degree) const {
    EtaPoly r;
    if (is_zero()) return r;
    int deg = std::min(degree() + 1, max_degree);
    if (deg < 1) return r;
    r.c_.assign(deg + 1, Complex(0.0));
    for (int d = 0; d + 1 <= deg; ++d) r.c_[d + 1] = c_[d];
    r.trim();
    return r;
}

EtaPoly EtaPoly::divided_by_eta() const {
    EtaPoly r;
    if (is_zero()) return r;
    if (std::abs(c_[0]) > 1e-10 * std::max(1.0, max_abs()))
        throw RingError("eta-division of polynomial with nonzero constant term");
    r.c_.assign(c_.begin() + 1, c_.end());
    r.trim();
    return r;
}

Complex EtaPoly::eval(double eta) const {
    Complex acc(0.0);
    for (int d = degree(); d >= 0; --d) acc = acc * eta + c_[d];
    return acc;
}

double EtaPoly::max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

void EtaPoly::trim() {
    while (!c_.empty() && std::abs(c_.back()) <= kZeroPurge) c_.pop_back();
}

}  // namespace ertbp
