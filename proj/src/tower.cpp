#include "skinning/tower.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <system_error>

#include "skinning/errors.hpp"

namespace skinning {

double TowerReal::mag_cap() {
    static const double cap = std::exp(kThreshold);
    return cap;
}

void TowerReal::normalize() {
    if (!std::isfinite(mag_) || mag_ < 0.0) {
        throw DomainError("TowerReal: mag must be finite and non-negative");
    }
    if (sign_ == 0 || (level_ == 0 && mag_ == 0.0 && !recip_)) {
        sign_ = 0;
        recip_ = false;
        level_ = 0;
        mag_ = 0.0;
        return;
    }
    const double cap = mag_cap();
    while (level_ >= 1 && mag_ < kThreshold) {
        mag_ = std::exp(mag_);
        --level_;
    }
    while (mag_ >= cap) {
        mag_ = std::log(mag_);
        ++level_;
    }
    if (level_ == 0) {
        if (mag_ == 0.0) throw DomainError("TowerReal: reciprocal of zero");
        if (mag_ < 1.0) {
            const double inv = 1.0 / mag_;
            if (std::isinf(inv)) {
                // 1/mag overflows a double; store the reciprocal at level 1.
                mag_ = -std::log(mag_);
                level_ = 1;
                recip_ = !recip_;
            } else {
                mag_ = inv;
                recip_ = !recip_;
                if (mag_ >= cap) {
                    mag_ = std::log(mag_);
                    level_ = 1;
                }
            }
        }
        if (level_ == 0 && recip_ && mag_ == 1.0) recip_ = false;
    }
}

TowerReal TowerReal::from_parts(int sign, bool recip, int level, double mag) {
    if (sign < -1 || sign > 1) throw DomainError("TowerReal: sign must be -1, 0 or +1");
    if (level < 0) throw DomainError("TowerReal: level must be non-negative");
    TowerReal t(sign, recip, level, mag);
    t.normalize();
    return t;
}

TowerReal TowerReal::from_real(double x) {
    if (!std::isfinite(x)) throw DomainError("TowerReal: from_real requires a finite value");
    if (x == 0.0) return TowerReal();
    const int sign = x > 0.0 ? 1 : -1;
    const double a = std::fabs(x);
    if (a >= 1.0) return from_parts(sign, false, 0, a);
    const double inv = 1.0 / a;
    if (std::isinf(inv)) return from_parts(sign, true, 1, -std::log(a));
    return from_parts(sign, true, 0, inv);
}

TowerReal TowerReal::negated() const {
    if (sign_ == 0) return *this;
    return TowerReal(-sign_, recip_, level_, mag_);
}

double TowerReal::to_double() const {
    if (sign_ == 0) return 0.0;
    double v;
    if (level_ == 0) {
        v = mag_;
    } else if (level_ == 1) {
        v = std::exp(mag_);  // +inf past ~709.78
    } else {
        v = std::numeric_limits<double>::infinity();
    }
    if (recip_) v = 1.0 / v;
    return sign_ > 0 ? v : -v;
}

namespace {

TowerReal abs_of(const TowerReal& x) { return x.sign() < 0 ? x.negated() : x; }

// 1/x for x >= 1 (canonical non-recip positive).
TowerReal invert_geq_one(const TowerReal& x) {
    return TowerReal::from_parts(1, true, x.level(), x.mag());
}

int cmp_positive(const TowerReal& a, const TowerReal& b) {
    if (a.recip() != b.recip()) return a.recip() ? -1 : 1;
    int m;
    if (a.level() != b.level()) {
        m = a.level() < b.level() ? -1 : 1;
    } else if (a.mag() != b.mag()) {
        m = a.mag() < b.mag() ? -1 : 1;
    } else {
        m = 0;
    }
    return a.recip() ? -m : m;
}

// Sum of two tower values arising as logarithms inside mul(). Dominance-aware:
// when the operands' levels differ (beyond the level-1 vs level-0 seam, where
// the ratio is still resolvable), the smaller term lies below the resolution
// of the larger one's mag and is absorbed.
TowerReal log_add(const TowerReal& a, const TowerReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.level() == 0 && b.level() == 0) {
        return TowerReal::from_real(a.to_double() + b.to_double());
    }
    const TowerReal& big = cmp_positive(abs_of(a), abs_of(b)) >= 0 ? a : b;
    const TowerReal& small = (&big == &a) ? b : a;
    const bool same_sign = big.sign() == small.sign();

    if (big.level() >= 2) {
        if (!same_sign && big.level() == small.level() && big.mag() == small.mag()) {
            return TowerReal();
        }
        return big;
    }
    // big at level 1; small at level 0 or 1. q = ln(|small|/|big|) <= ~0.
    double ln_small;
    if (small.level() == 1) {
        ln_small = small.mag();
    } else {
        ln_small = small.recip() ? -std::log(small.mag()) : std::log(small.mag());
    }
    const double q = ln_small - big.mag();
    const double ratio = std::exp(std::min(q, 0.0));
    if (!same_sign && ratio == 1.0) return TowerReal();
    const double corr = same_sign ? std::log1p(ratio) : std::log1p(-ratio);
    return TowerReal::from_parts(big.sign(), false, 1, big.mag() + corr);
}

}  // namespace

TowerReal ln_of(const TowerReal& x) {
    if (x.sign() <= 0) throw DomainError("ln_of requires a positive value");
    if (x.recip()) {
        return ln_of(TowerReal::from_parts(1, false, x.level(), x.mag())).negated();
    }
    if (x.level() >= 1) return TowerReal::from_parts(1, false, x.level() - 1, x.mag());
    return TowerReal::from_real(std::log(x.mag()));
}

TowerReal exp_of(const TowerReal& x) {
    if (x.is_zero()) return TowerReal::from_real(1.0);
    if (x.sign() < 0) return invert_geq_one(exp_of(x.negated()));
    if (x.level() >= 1) return TowerReal::from_parts(1, false, x.level() + 1, x.mag());
    const double v = x.recip() ? 1.0 / x.mag() : x.mag();
    if (v < TowerReal::kThreshold) return TowerReal::from_real(std::exp(v));
    return TowerReal::from_parts(1, false, 1, v);
}

TowerReal mul(const TowerReal& x, const TowerReal& y) {
    if (x.is_zero() || y.is_zero()) return TowerReal();
    const int sign = x.sign() * y.sign();
    if (x.level() == 0 && y.level() == 0) {
        if (x.recip() == y.recip()) {
            const double p = x.mag() * y.mag();
            if (p < TowerReal::mag_cap()) return TowerReal::from_parts(sign, x.recip(), 0, p);
            // overflow of the stored magnitude: fall through to the log path
        } else {
            const double plain = x.recip() ? y.mag() : x.mag();
            const double recip = x.recip() ? x.mag() : y.mag();
            if (plain >= recip) return TowerReal::from_parts(sign, false, 0, plain / recip);
            return TowerReal::from_parts(sign, true, 0, recip / plain);
        }
    }
    const TowerReal s = log_add(ln_of(abs_of(x)), ln_of(abs_of(y)));
    TowerReal r = exp_of(s);
    return sign < 0 ? r.negated() : r;
}

Ordering cmp(const TowerReal& x, const TowerReal& y) {
    if (x.sign() != y.sign()) return x.sign() < y.sign() ? Ordering::Less : Ordering::Greater;
    if (x.sign() == 0) return Ordering::Equal;
    int m = cmp_positive(abs_of(x), abs_of(y));
    if (x.sign() < 0) m = -m;
    return m < 0 ? Ordering::Less : m > 0 ? Ordering::Greater : Ordering::Equal;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_fixed1(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return std::string(buf);
}

}  // namespace

std::string render_machine(const TowerReal& x) {
    if (x.is_zero()) return "0";
    std::string core;
    if (x.level() == 0) {
        core = x.recip() ? "1/" + format_double(x.mag()) : format_double(x.mag());
    } else if (x.level() == 1) {
        core = x.recip() ? "exp(-" + format_double(x.mag()) + ")"
                         : "exp(" + format_double(x.mag()) + ")";
    } else {
        core = (x.recip() ? "1/exp^" : "exp^") + std::to_string(x.level()) + "(" +
               format_double(x.mag()) + ")";
    }
    if (x.sign() < 0) core.insert(core.begin(), '-');
    return core;
}

std::string render(const TowerReal& x) {
    if (x.is_zero()) return "0";
    std::string core = render_machine(x);
    const char* neg = x.sign() < 0 ? "-" : "";
    if (x.level() == 0 && x.recip()) {
        core += std::string(" ≈ ") + neg + format_double(1.0 / x.mag());
    } else if (x.level() == 1) {
        const double v = x.to_double();
        if (std::isfinite(v) && v != 0.0) core += std::string(" ≈ ") + format_double(v);
        const double p = x.mag() / std::numbers::ln10;
        core += std::string(" ≈ ") + neg + "10^(" + format_fixed1(x.recip() ? -p : p) + ")";
    }
    return core;
}

TowerReal parse_tower(std::string_view text) {
    // Display suffixes (everything from the first " ≈") are ignored.
    if (auto pos = text.find(" ≈"); pos != std::string_view::npos) {
        text = text.substr(0, pos);
    }
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty tower literal");
    if (text == "0") return TowerReal();

    int sign = 1;
    if (text.front() == '-') {
        sign = -1;
        text.remove_prefix(1);
    }
    bool recip = false;
    if (text.starts_with("1/")) {
        recip = true;
        text.remove_prefix(2);
    }
    int level = 0;
    if (text.starts_with("exp^")) {
        text.remove_prefix(4);
        auto open = text.find('(');
        if (open == std::string_view::npos) throw ParseError("missing '(' in tower literal");
        auto lr = std::from_chars(text.data(), text.data() + open, level);
        if (lr.ec != std::errc() || lr.ptr != text.data() + open || level < 2) {
            throw ParseError("bad tower level");
        }
        text.remove_prefix(open);
    } else if (text.starts_with("exp")) {
        text.remove_prefix(3);
        level = 1;
    }
    double mag = 0.0;
    if (level > 0) {
        if (text.empty() || text.front() != '(' || text.back() != ')') {
            throw ParseError("malformed exp(...) tower literal");
        }
        text.remove_prefix(1);
        text.remove_suffix(1);
        if (level == 1 && !text.empty() && text.front() == '-') {
            recip = !recip;
            text.remove_prefix(1);
        }
    }
    auto mr = std::from_chars(text.data(), text.data() + text.size(), mag);
    if (mr.ec != std::errc() || mr.ptr != text.data() + text.size()) {
        throw ParseError("bad tower magnitude");
    }
    return TowerReal::from_parts(sign, recip, level, mag);
}

}  // namespace skinning
