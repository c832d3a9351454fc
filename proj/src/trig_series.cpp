#include "ertbp/trig_series.hpp"

#include <cmath>
#include <vector>

namespace ertbp {

std::pair<AngleKey, EtaPoly> canonicalize(Parity parity, AngleKey ang, EtaPoly coeff) {
    if (ang.is_zero()) {
        if (parity == Parity::Sin) return {ang, EtaPoly()};  // sin 0 = 0
        return {ang, std::move(coeff)};
    }
    if (!ang.is_canonical()) {
        ang = ang.negated();
        if (parity == Parity::Sin) coeff = -coeff;
    }
    return {ang, std::move(coeff)};
}

void TrigSeries::add_term(AmpKey amp, AngleKey ang, const EtaPoly& coeff) {
    if (amp.order() > trunc_.order || coeff.is_zero()) return;
    auto [cang, ccoeff] = canonicalize(parity_, ang, coeff);
    if (ccoeff.is_zero()) return;
    auto it = terms_.find(TermKey{amp, cang});
    if (it == terms_.end()) {
        terms_.emplace(TermKey{amp, cang}, std::move(ccoeff));
    } else {
        it->second += ccoeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TrigSeries::set_term(AmpKey amp, AngleKey ang, const EtaPoly& coeff) {
    auto [cang, ccoeff] = canonicalize(parity_, ang, coeff);
    TermKey key{amp, cang};
    if (ccoeff.is_zero()) {
        terms_.erase(key);
    } else {
        terms_[key] = std::move(ccoeff);
    }
}

EtaPoly TrigSeries::coeff(AmpKey amp, AngleKey ang) const {
    auto [cang, sign] = canonicalize(parity_, ang, EtaPoly(Complex(1.0)));
    if (sign.is_zero()) return EtaPoly();
    auto it = terms_.find(TermKey{amp, cang});
    if (it == terms_.end()) return EtaPoly();
    return it->second * sign.coeff(0);
}

void TrigSeries::add_scaled(const TrigSeries& o, Complex factor) {
    if (!(o.trunc_ == trunc_)) throw ConfigError("mixed truncation configs in add_scaled");
    if (o.parity_ != parity_) throw ContractError("parity mismatch in add_scaled");
    for (const auto& [key, c] : o.terms_) add_term(key.amp, key.ang, c * factor);
}

TrigSeries TrigSeries::truncated_to_order(int n) const {
    TrigSeries r(parity_, trunc_);
    for (const auto& [key, c] : terms_)
        if (key.amp.order() <= n) r.terms_.emplace(key, c);
    return r;
}

TrigSeries TrigSeries::restricted_to_order(int n) const {
    TrigSeries r(parity_, trunc_);
    for (const auto& [key, c] : terms_)
        if (key.amp.order() == n) r.terms_.emplace(key, c);
    return r;
}

double TrigSeries::max_abs() const {
    double m = 0.0;
    for (const auto& [key, c] : terms_) m = std::max(m, c.max_abs());
    return m;
}

TrigSeries ts_add(const TrigSeries& a, const TrigSeries& b) {
    if (!(a.trunc() == b.trunc())) throw ConfigError("mixed truncation configs in ts_add");
    if (a.parity() != b.parity()) throw ContractError("parity mismatch in ts_add");
    TrigSeries r = a;
    r.add_scaled(b, Complex(1.0));
    return r;
}

TrigSeries ts_sub(const TrigSeries& a, const TrigSeries& b) {
    if (!(a.trunc() == b.trunc())) throw ConfigError("mixed truncation configs in ts_sub");
    if (a.parity() != b.parity()) throw ContractError("parity mismatch in ts_sub");
    TrigSeries r = a;
    r.add_scaled(b, Complex(-1.0));
    return r;
}

TrigSeries ts_mul(const TrigSeries& a, const TrigSeries& b) {
    if (!(a.trunc() == b.trunc())) throw ConfigError("mixed truncation configs in ts_mul");
    const SeriesTrunc& tr = a.trunc();
    const bool a_cos = a.parity() == Parity::Cos;
    const bool b_cos = b.parity() == Parity::Cos;
    Parity out = (a_cos == b_cos) ? Parity::Cos : Parity::Sin;
    TrigSeries r(out, tr);

    // Product-to-sum: each term pair emits the sum and difference angles with
    // weight 1/2; signs depend on the parity combination.
    //   cos*cos: +1/2 cos(A+B) +1/2 cos(A-B)
    //   sin*sin: -1/2 cos(A+B) +1/2 cos(A-B)
    //   sin*cos: +1/2 sin(A+B) +1/2 sin(A-B)
    //   cos*sin: +1/2 sin(A+B) -1/2 sin(A-B)
    double w_sum, w_diff;
    if (a_cos && b_cos) { w_sum = 0.5; w_diff = 0.5; }
    else if (!a_cos && !b_cos) { w_sum = -0.5; w_diff = 0.5; }
    else if (!a_cos && b_cos) { w_sum = 0.5; w_diff = 0.5; }
    else { w_sum = 0.5; w_diff = -0.5; }

    for (const auto& [ka, ca] : a.terms()) {
        const int oa = ka.amp.order();
        for (const auto& [kb, cb] : b.terms()) {
            if (oa + kb.amp.order() > tr.order) continue;
            EtaPoly prod = EtaPoly::mul(ca, cb, tr.eta_degree);
            if (prod.is_zero()) continue;
            AmpKey amp = ka.amp + kb.amp;
            r.add_term(amp, ka.ang + kb.ang, prod * Complex(w_sum));
            r.add_term(amp, ka.ang - kb.ang, prod * Complex(w_diff));
        }
    }
    return r;
}

TrigSeries ts_scale(const TrigSeries& a, const EtaPoly& c) {
    TrigSeries r(a.parity(), a.trunc());
    for (const auto& [key, v] : a.terms())
        r.add_term(key.amp, key.ang, EtaPoly::mul(v, c, a.trunc().eta_degree));
    return r;
}

TrigSeries ts_scale(const TrigSeries& a, Complex c) {
    TrigSeries r(a.parity(), a.trunc());
    for (const auto& [key, v] : a.terms()) r.add_term(key.amp, key.ang, v * c);
    return r;
}

TrigSeries reduce_cos_power(int i, SeriesTrunc trunc) {
    TrigSeries r(Parity::Cos, trunc);
    if (i < 1) throw DomainError("reduce_cos_power requires i >= 1");
    // cos^i f = 2^(1-i) * sum_l C(i,l) cos((i-2l) f), the middle term halved.
    double scale = std::ldexp(1.0, 1 - i);
    double binom = 1.0;
    for (int l = 0; 2 * l <= i; ++l) {
        int freq = i - 2 * l;
        double w = binom * scale;
        if (freq == 0) w *= 0.5;
        r.add_term(AmpKey{}, AngleKey{0, 0, 0, std::int8_t(freq)}, EtaPoly(Complex(w)));
        binom *= double(i - l) / double(l + 1);
    }
    return r;
}

TrigSeries partial_angle(const TrigSeries& a, int axis) {
    Parity out = (a.parity() == Parity::Cos) ? Parity::Sin : Parity::Cos;
    TrigSeries r(out, a.trunc());
    // d/dtheta cos(A) = -mult sin(A); d/dtheta sin(A) = +mult cos(A)
    double sign = (a.parity() == Parity::Cos) ? -1.0 : 1.0;
    for (const auto& [key, c] : a.terms()) {
        int mult;
        switch (axis) {
            case 0: mult = key.ang.s; break;
            case 1: mult = key.ang.t; break;
            case 2: mult = key.ang.u; break;
            default: mult = key.ang.r; break;
        }
        if (mult == 0) continue;
        r.add_term(key.amp, key.ang, c * Complex(sign * mult));
    }
    return r;
}

namespace {

// pows[n] = base^n for n = 0..max_order
std::vector<Complex> power_table(Complex base, int max_order) {
    std::vector<Complex> p(max_order + 1);
    p[0] = Complex(1.0);
    for (int n = 1; n <= max_order; ++n) p[n] = p[n - 1] * base;
    return p;
}

}  // namespace

Complex ts_eval(const TrigSeries& a, const EvalParams& p, double f) {
    const int N = a.trunc().order;
    auto p1 = power_table(p.alpha1, N);
    auto p2 = power_table(p.alpha2, N);
    auto p3 = power_table(p.alpha3, N);
    auto pe = power_table(Complex(p.e), N);
    const Complex I(0.0, 1.0);
    Complex th1(p.omega * f + p.phi1);
    Complex th2(p.nu * f + p.phi2);
    Complex th3 = I * (p.lambda * f) + p.phi3;
    Complex acc(0.0);
    for (const auto& [key, c] : a.terms()) {
        Complex arg = double(key.ang.s) * th1 + double(key.ang.t) * th2 +
                      double(key.ang.u) * th3 + Complex(double(key.ang.r) * f);
        Complex trig = (a.parity() == Parity::Cos) ? std::cos(arg) : std::sin(arg);
        acc += c.eval(p.eta) * p1[key.amp.i] * p2[key.amp.j] * p3[key.amp.k] * pe[key.amp.m] * trig;
    }
    return acc;
}

Complex ts_eval_df(const TrigSeries& a, const EvalParams& p, double f) {
    const int N = a.trunc().order;
    auto p1 = power_table(p.alpha1, N);
    auto p2 = power_table(p.alpha2, N);
    auto p3 = power_table(p.alpha3, N);
    auto pe = power_table(Complex(p.e), N);
    const Complex I(0.0, 1.0);
    Complex th1(p.omega * f + p.phi1);
    Complex th2(p.nu * f + p.phi2);
    Complex th3 = I * (p.lambda * f) + p.phi3;
    Complex acc(0.0);
    for (const auto& [key, c] : a.terms()) {
        Complex arg = double(key.ang.s) * th1 + double(key.ang.t) * th2 +
                      double(key.ang.u) * th3 + Complex(double(key.ang.r) * f);
        Complex rate = Complex(double(key.ang.s) * p.omega + double(key.ang.t) * p.nu +
                               double(key.ang.r)) +
                       I * (double(key.ang.u) * p.lambda);
        Complex trig = (a.parity() == Parity::Cos) ? -std::sin(arg) : std::cos(arg);
        acc += c.eval(p.eta) * p1[key.amp.i] * p2[key.amp.j] * p3[key.amp.k] * pe[key.amp.m] *
               rate * trig;
    }
    return acc;
}

Complex ts_eval_df2(const TrigSeries& a, const EvalParams& p, double f) {
    const int N = a.trunc().order;
    auto p1 = power_table(p.alpha1, N);
    auto p2 = power_table(p.alpha2, N);
    auto p3 = power_table(p.alpha3, N);
    auto pe = power_table(Complex(p.e), N);
    const Complex I(0.0, 1.0);
    Complex th1(p.omega * f + p.phi1);
    Complex th2(p.nu * f + p.phi2);
    Complex th3 = I * (p.lambda * f) + p.phi3;
    Complex acc(0.0);
    for (const auto& [key, c] : a.terms()) {
        Complex arg = double(key.ang.s) * th1 + double(key.ang.t) * th2 +
                      double(key.ang.u) * th3 + Complex(double(key.ang.r) * f);
        Complex rate = Complex(double(key.ang.s) * p.omega + double(key.ang.t) * p.nu +
                               double(key.ang.r)) +
                       I * (double(key.ang.u) * p.lambda);
        Complex trig = (a.parity() == Parity::Cos) ? std::cos(arg) : std::sin(arg);
        acc += c.eval(p.eta) * p1[key.amp.i] * p2[key.amp.j] * p3[key.amp.k] * pe[key.amp.m] *
               (-rate * rate) * trig;
    }
    return acc;
}

void FreqSeries::add_term(AmpKey amp, const EtaPoly& coeff) {
    if (amp.order() > trunc_.order || coeff.is_zero()) return;
    auto it = terms_.find(amp);
    if (it == terms_.end()) {
        terms_.emplace(amp, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FreqSeries::set_term(AmpKey amp, const EtaPoly& coeff) {
    if (coeff.is_zero()) {
        terms_.erase(amp);
    } else {
        terms_[amp] = coeff;
    }
}

EtaPoly FreqSeries::coeff(AmpKey amp) const {
    auto it = terms_.find(amp);
    return it == terms_.end() ? EtaPoly() : it->second;
}

FreqSeries FreqSeries::truncated_to_order(int n) const {
    FreqSeries r(trunc_);
    for (const auto& [key, c] : terms_)
        if (key.order() <= n) r.terms_.emplace(key, c);
    return r;
}

Complex FreqSeries::eval(const EvalParams& p) const {
    const int N = trunc_.order;
    auto p1 = power_table(p.alpha1, N);
    auto p2 = power_table(p.alpha2, N);
    auto p3 = power_table(p.alpha3, N);
    auto pe = power_table(Complex(p.e), N);
    Complex acc(0.0);
    for (const auto& [key, c] : terms_)
        acc += c.eval(p.eta) * p1[key.i] * p2[key.j] * p3[key.k] * pe[key.m];
    return acc;
}

TrigSeries freq_mul(const FreqSeries& w, const TrigSeries& a) {
    if (!(w.trunc() == a.trunc())) throw ConfigError("mixed truncation configs in freq_mul");
    TrigSeries r(a.parity(), a.trunc());
    for (const auto& [kw, cw] : w.terms()) {
        const int ow = kw.order();
        for (const auto& [ka, ca] : a.terms()) {
            if (ow + ka.amp.order() > a.trunc().order) continue;
            EtaPoly prod = EtaPoly::mul(cw, ca, a.trunc().eta_degree);
            if (!prod.is_zero()) r.add_term(kw + ka.amp, ka.ang, prod);
        }
    }
    return r;
}

}  // namespace ertbp
