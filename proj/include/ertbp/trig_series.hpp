#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "ertbp/errors.hpp"
#include "ertbp/eta_poly.hpp"

namespace ertbp {

/// Powers of the amplitude parameters (alpha1, alpha2, alpha3, e).
struct AmpKey {
    std::uint8_t i = 0, j = 0, k = 0, m = 0;

    int order() const { return int(i) + int(j) + int(k) + int(m); }
    std::uint32_t packed() const {
        return (std::uint32_t(i) << 24) | (std::uint32_t(j) << 16) |
               (std::uint32_t(k) << 8) | std::uint32_t(m);
    }
    friend bool operator==(const AmpKey& a, const AmpKey& b) { return a.packed() == b.packed(); }
    friend bool operator<(const AmpKey& a, const AmpKey& b) { return a.packed() < b.packed(); }
    friend AmpKey operator+(const AmpKey& a, const AmpKey& b) {
        return AmpKey{std::uint8_t(a.i + b.i), std::uint8_t(a.j + b.j),
                      std::uint8_t(a.k + b.k), std::uint8_t(a.m + b.m)};
    }
};

/// Integer multipliers of the angles (theta1, theta2, theta3, f).
struct AngleKey {
    std::int8_t s = 0, t = 0, u = 0, r = 0;

    bool is_zero() const { return s == 0 && t == 0 && u == 0 && r == 0; }
    AngleKey negated() const {
        return AngleKey{std::int8_t(-s), std::int8_t(-t), std::int8_t(-u), std::int8_t(-r)};
    }
    /// Canonical form: the first nonzero of (s, t, u, r) is positive.
    bool is_canonical() const {
        if (s != 0) return s > 0;
        if (t != 0) return t > 0;
        if (u != 0) return u > 0;
        return r >= 0;
    }
    std::uint32_t packed() const {
        auto b = [](std::int8_t v) { return std::uint32_t(std::uint8_t(v + 128)); };
        return (b(s) << 24) | (b(t) << 16) | (b(u) << 8) | b(r);
    }
    friend bool operator==(const AngleKey& a, const AngleKey& b) { return a.packed() == b.packed(); }
    friend bool operator<(const AngleKey& a, const AngleKey& b) { return a.packed() < b.packed(); }
    friend AngleKey operator+(const AngleKey& a, const AngleKey& b) {
        return AngleKey{std::int8_t(a.s + b.s), std::int8_t(a.t + b.t),
                        std::int8_t(a.u + b.u), std::int8_t(a.r + b.r)};
    }
    friend AngleKey operator-(const AngleKey& a, const AngleKey& b) {
        return AngleKey{std::int8_t(a.s - b.s), std::int8_t(a.t - b.t),
                        std::int8_t(a.u - b.u), std::int8_t(a.r - b.r)};
    }
};

struct TermKey {
    AmpKey amp;
    AngleKey ang;
    friend bool operator<(const TermKey& a, const TermKey& b) {
        if (!(a.amp == b.amp)) return a.amp < b.amp;
        return a.ang < b.ang;
    }
    friend bool operator==(const TermKey& a, const TermKey& b) {
        return a.amp == b.amp && a.ang == b.ang;
    }
};

enum class Parity { Cos, Sin };

/// Shared truncation settings; series with different settings never mix.
struct SeriesTrunc {
    int order = 0;       // max total amplitude order i+j+k+m
    int eta_degree = 0;  // max eta power kept in coefficients
    friend bool operator==(const SeriesTrunc& a, const SeriesTrunc& b) {
        return a.order == b.order && a.eta_degree == b.eta_degree;
    }
};

/// Numeric evaluation point for series and frequency tables.
struct EvalParams {
    Complex alpha1{0.0}, alpha2{0.0}, alpha3{0.0};
    double e = 0.0;
    double eta = 0.0;
    double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0;
    double omega = 0.0, nu = 0.0, lambda = 0.0;
};

/// Canonicalize an angle key for the given parity. Returns the key/coefficient
/// actually stored; the coefficient comes back zero when the term vanishes
/// (sin of the all-zero angle).
std::pair<AngleKey, EtaPoly> canonicalize(Parity parity, AngleKey ang, EtaPoly coeff);

/// Sparse truncated trigonometric series: sum over terms of
///   coeff(eta) * alpha1^i alpha2^j alpha3^k e^m * cos/sin(s t1 + t t2 + u t3 + r f).
class TrigSeries {
public:
    TrigSeries() = default;
    TrigSeries(Parity parity, SeriesTrunc trunc) : parity_(parity), trunc_(trunc) {}

    Parity parity() const { return parity_; }
    const SeriesTrunc& trunc() const { return trunc_; }
    const std::map<TermKey, EtaPoly>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Canonicalizes, accumulates, purges zeros, drops beyond-truncation keys.
    void add_term(AmpKey amp, AngleKey ang, const EtaPoly& coeff);
    void set_term(AmpKey amp, AngleKey ang, const EtaPoly& coeff);  // overwrite
    EtaPoly coeff(AmpKey amp, AngleKey ang) const;

    void add_scaled(const TrigSeries& o, Complex factor);

    TrigSeries truncated_to_order(int n) const;   // keep orders <= n
    TrigSeries restricted_to_order(int n) const;  // keep orders == n

    double max_abs() const;

private:
    Parity parity_ = Parity::Cos;
    SeriesTrunc trunc_{};
    std::map<TermKey, EtaPoly> terms_;
};

TrigSeries ts_add(const TrigSeries& a, const TrigSeries& b);
TrigSeries ts_sub(const TrigSeries& a, const TrigSeries& b);
TrigSeries ts_mul(const TrigSeries& a, const TrigSeries& b);
TrigSeries ts_scale(const TrigSeries& a, const EtaPoly& c);
TrigSeries ts_scale(const TrigSeries& a, Complex c);

/// cos^i f as a finite cosine sum over angle keys (0,0,0,r), r in {i, i-2, ...}.
TrigSeries reduce_cos_power(int i, SeriesTrunc trunc);

/// Derivative with respect to one angle variable (0:theta1, 1:theta2,
/// 2:theta3, 3:f). Flips parity.
TrigSeries partial_angle(const TrigSeries& a, int axis);

Complex ts_eval(const TrigSeries& a, const EvalParams& p, double f);

/// d/df of the evaluated series at fixed numeric frequencies.
Complex ts_eval_df(const TrigSeries& a, const EvalParams& p, double f);

/// d^2/df^2 of the evaluated series at fixed numeric frequencies.
Complex ts_eval_df2(const TrigSeries& a, const EvalParams& p, double f);

/// Power series over amplitude keys only: frequency expansions and Delta.
class FreqSeries {
public:
    FreqSeries() = default;
    explicit FreqSeries(SeriesTrunc trunc) : trunc_(trunc) {}

    const SeriesTrunc& trunc() const { return trunc_; }
    const std::map<AmpKey, EtaPoly>& terms() const { return terms_; }

    void add_term(AmpKey amp, const EtaPoly& coeff);
    void set_term(AmpKey amp, const EtaPoly& coeff);
    EtaPoly coeff(AmpKey amp) const;

    FreqSeries truncated_to_order(int n) const;

    Complex eval(const EvalParams& p) const;

private:
    SeriesTrunc trunc_{};
    std::map<AmpKey, EtaPoly> terms_;
};

/// Product of a frequency-type series with a trigonometric series; amplitude
/// keys add, angle keys pass through.
TrigSeries freq_mul(const FreqSeries& w, const TrigSeries& a);

}  // namespace ertbp
