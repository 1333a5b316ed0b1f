#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace skinning {

// Extended-magnitude real number, stored as sign * exp^level(mag) with an
// optional reciprocal flag for magnitudes below one. Handles quantities such
// as exp(-exp(44000)) that no floating-point format can represent, while
// supporting exact comparison, multiplication, ln and exp.
//
// Canonical form (enforced by every constructor):
//   * sign in {-1, 0, +1}; sign 0 forces recip=false, level=0, mag=0;
//   * mag >= 0 always; recip=true means the value is 1/exp^level(mag);
//   * level >= 1 implies mag in [kThreshold, exp(kThreshold));
//   * level == 0 implies mag == 0 or mag in [1, exp(kThreshold));
//     magnitudes in (0,1) are stored as the reciprocal.
// Canonical forms are unique, so bitwise equality is value equality.
class TowerReal {
public:
    // Levels are raised exactly when mag >= exp(kThreshold) would leave the
    // range where a double still has absolute resolution in log space.
    static constexpr double kThreshold = 700.0;

    // exp(kThreshold), the exclusive upper bound for canonical mags.
    static double mag_cap();

    TowerReal() : sign_(0), recip_(false), level_(0), mag_(0.0) {}

    // Exact for |x| < mag_cap() and |x| >= 1 or |x| a power-of-two reciprocal;
    // otherwise within one rounding of the stored reciprocal magnitude.
    // Rejects non-finite input.
    static TowerReal from_real(double x);

    // Builds sign * exp^level(mag) (reciprocal if recip) and canonicalizes.
    // Requires mag >= 0 and finite; negative exponents are expressed via recip.
    static TowerReal from_parts(int sign, bool recip, int level, double mag);

    int sign() const { return sign_; }
    bool recip() const { return recip_; }
    int level() const { return level_; }
    double mag() const { return mag_; }
    bool is_zero() const { return sign_ == 0; }

    TowerReal negated() const;

    // Best-effort conversion; overflows to +-inf and underflows to 0.
    double to_double() const;

    friend bool operator==(const TowerReal& a, const TowerReal& b) {
        return a.sign_ == b.sign_ && a.recip_ == b.recip_ &&
               a.level_ == b.level_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const TowerReal& a, const TowerReal& b) { return !(a == b); }

private:
    TowerReal(int sign, bool recip, int level, double mag)
        : sign_(static_cast<std::int8_t>(sign)), recip_(recip), level_(level), mag_(mag) {}
    void normalize();

    std::int8_t sign_;
    bool recip_;
    std::int32_t level_;
    double mag_;
};

enum class Ordering : int { Less = -1, Equal = 0, Greater = 1 };

// Natural logarithm; rejects x <= 0. Exact level shift for level >= 1.
TowerReal ln_of(const TowerReal& x);

// Inverse of ln_of up to canonicalization; defined for every finite tower.
TowerReal exp_of(const TowerReal& x);

// Product. Exact double multiply when both operands live at level 0 and the
// result stays below mag_cap(); otherwise computed in log space, where terms
// whose ratio is beyond the representable range are absorbed by the dominant
// one. Top-level mag is accurate to a few ulp; bit-for-bit commutative.
TowerReal mul(const TowerReal& x, const TowerReal& y);

// Total order consistent with the real values (canonical forms are unique).
Ordering cmp(const TowerReal& x, const TowerReal& y);

// Machine-readable rendering, round-trippable through parse_tower():
//   "0", "42", "1/3", "exp(1000)", "exp(-283937.2)", "exp^2(4300)", "1/exp^2(4300)"
// with a leading "-" for negative values. For level <= 1 a display suffix is
// appended: the decimal value when it fits in a double, and for level 1 a
// base-10 magnitude "10^(p)" with p = mag/ln(10).
std::string render(const TowerReal& x);

// The parseable core alone, without the display suffix.
std::string render_machine(const TowerReal& x);

// Parses the grammar above (display suffix ignored). Throws ParseError.
TowerReal parse_tower(std::string_view text);

inline TowerReal operator*(const TowerReal& a, const TowerReal& b) { return mul(a, b); }
inline bool operator<(const TowerReal& a, const TowerReal& b) { return cmp(a, b) == Ordering::Less; }
inline bool operator>(const TowerReal& a, const TowerReal& b) { return cmp(a, b) == Ordering::Greater; }
inline bool operator<=(const TowerReal& a, const TowerReal& b) { return cmp(a, b) != Ordering::Greater; }
inline bool operator>=(const TowerReal& a, const TowerReal& b) { return cmp(a, b) != Ordering::Less; }

}  // namespace skinning
