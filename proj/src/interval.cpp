#include "trigcert/interval.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace trigcert {

namespace {

mpfr_prec_t max_prec(const Interval& a, const Interval& b) {
    return std::max(a.precision(), b.precision());
}

Rational to_rational(mpfr_srcptr x) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

}  // namespace

void Interval::init(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

Interval::Interval(mpfr_prec_t prec) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_si(lo_, value, MPFR_RNDD);
    mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Rational& value, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    init(prec);
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
    init(other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
    init(other.precision());
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Rational Interval::lower_rational() const { return to_rational(lo_); }
Rational Interval::upper_rational() const { return to_rational(hi_); }

Rational Interval::midpoint() const {
    Rational m = (lower_rational() + upper_rational()) / 2;
    return m;
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

Interval Interval::with_precision(mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

bool Interval::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& other) const {
    return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_); }

int Interval::certain_sign() const {
    if (certainly_positive()) return 1;
    if (certainly_negative()) return -1;
    return 0;
}

Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    const bool a_pos = mpfr_sgn(a.lo_) >= 0;
    const bool a_neg = mpfr_sgn(a.hi_) <= 0;
    const bool b_pos = mpfr_sgn(b.lo_) >= 0;
    const bool b_neg = mpfr_sgn(b.hi_) <= 0;
    auto set = [&](mpfr_srcptr l1, mpfr_srcptr l2, mpfr_srcptr h1, mpfr_srcptr h2) {
        mpfr_mul(r.lo_, l1, l2, MPFR_RNDD);
        mpfr_mul(r.hi_, h1, h2, MPFR_RNDU);
    };
    if (a_pos) {
        if (b_pos) set(a.lo_, b.lo_, a.hi_, b.hi_);
        else if (b_neg) set(a.hi_, b.lo_, a.lo_, b.hi_);
        else set(a.hi_, b.lo_, a.hi_, b.hi_);
    } else if (a_neg) {
        if (b_pos) set(a.lo_, b.hi_, a.hi_, b.lo_);
        else if (b_neg) set(a.hi_, b.hi_, a.lo_, b.lo_);
        else set(a.lo_, b.hi_, a.lo_, b.lo_);
    } else {
        if (b_pos) set(a.lo_, b.hi_, a.hi_, b.hi_);
        else if (b_neg) set(a.hi_, b.lo_, a.lo_, b.lo_);
        else {
            mpfr_t t;
            mpfr_init2(t, r.precision());
            mpfr_mul(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
            mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
            mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
            mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
            mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
            mpfr_clear(t);
        }
    }
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
    Interval r(max_prec(a, b));
    auto set = [&](mpfr_srcptr l1, mpfr_srcptr l2, mpfr_srcptr h1, mpfr_srcptr h2) {
        mpfr_div(r.lo_, l1, l2, MPFR_RNDD);
        mpfr_div(r.hi_, h1, h2, MPFR_RNDU);
    };
    const bool a_pos = mpfr_sgn(a.lo_) >= 0;
    const bool a_neg = mpfr_sgn(a.hi_) <= 0;
    if (mpfr_sgn(b.lo_) > 0) {
        if (a_pos) set(a.lo_, b.hi_, a.hi_, b.lo_);
        else if (a_neg) set(a.lo_, b.lo_, a.hi_, b.hi_);
        else set(a.lo_, b.lo_, a.hi_, b.lo_);
    } else {
        if (a_pos) set(a.hi_, b.hi_, a.lo_, b.lo_);
        else if (a_neg) set(a.hi_, b.lo_, a.lo_, b.hi_);
        else set(a.hi_, b.hi_, a.lo_, b.hi_);
    }
    return r;
}

Interval operator*(const Interval& a, long k) {
    Interval r(a.precision());
    if (k >= 0) {
        mpfr_mul_si(r.lo_, a.lo_, k, MPFR_RNDD);
        mpfr_mul_si(r.hi_, a.hi_, k, MPFR_RNDU);
    } else {
        mpfr_mul_si(r.lo_, a.hi_, k, MPFR_RNDD);
        mpfr_mul_si(r.hi_, a.lo_, k, MPFR_RNDU);
    }
    return r;
}

Interval operator/(const Interval& a, unsigned long k) {
    if (k == 0) throw DomainError("interval division by zero");
    Interval r(a.precision());
    mpfr_div_ui(r.lo_, a.lo_, k, MPFR_RNDD);
    mpfr_div_ui(r.hi_, a.hi_, k, MPFR_RNDU);
    return r;
}

Interval mul_2si(const Interval& a, long e) {
    Interval r(a.precision());
    mpfr_mul_2si(r.lo_, a.lo_, e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_, a.hi_, e, MPFR_RNDU);
    return r;
}

Interval& Interval::operator+=(const Interval& b) { return *this = *this + b; }
Interval& Interval::operator-=(const Interval& b) { return *this = *this - b; }
Interval& Interval::operator*=(const Interval& b) { return *this = *this * b; }
Interval& Interval::operator/=(const Interval& b) { return *this = *this / b; }

Interval int_pow(const Interval& a, unsigned n) {
    if (n == 0) return Interval(1L, a.precision());
    if (n == 1) return a;
    Interval r(a.precision());
    if (mpfr_sgn(a.lo_) >= 0) {
        mpfr_pow_ui(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, a.hi_, n, MPFR_RNDU);
    } else if (n % 2 == 1) {
        mpfr_pow_ui(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, a.hi_, n, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        mpfr_pow_ui(r.lo_, a.hi_, n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, a.lo_, n, MPFR_RNDU);
    } else {
        Interval m = magnitude(a);
        mpfr_set_zero(r.lo_, 1);
        mpfr_pow_ui(r.hi_, m.hi_, n, MPFR_RNDU);
    }
    return r;
}

Interval sqr(const Interval& a) { return int_pow(a, 2); }

Interval abs(const Interval& a) {
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return -a;
    return magnitude(a);
}

Interval magnitude(const Interval& a) {
    mpfr_t t;
    mpfr_init2(t, a.precision());
    mpfr_abs(t, a.lo(), MPFR_RNDU);
    Interval b(a.precision());
    mpfr_set_zero(b.lo_, 1);
    mpfr_abs(b.hi_, a.hi(), MPFR_RNDU);
    mpfr_max(b.hi_, b.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return b;
}

Interval hull(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) return std::nullopt;
    return r;
}

Ordering compare(const Interval& a, const Interval& b) {
    if (mpfr_less_p(a.hi(), b.lo())) return Ordering::less;
    if (mpfr_greater_p(a.lo(), b.hi())) return Ordering::greater;
    return Ordering::undecided;
}

std::string certified_decimal(const Interval& a, int max_fraction_digits) {
    if (a.contains_zero() && !a.is_point()) return "?";
    Rational lo = a.lower_rational();
    Rational hi = a.upper_rational();
    const bool negative = sgn(hi) < 0;
    if (negative) {
        Rational t = -lo;
        lo = -hi;
        hi = t;
    }
    Integer scale = 1;
    Integer kept;
    int kept_digits = -1;
    for (int d = 0; d <= max_fraction_digits; ++d) {
        Integer fl, fh;
        Rational sl = lo * scale, sh = hi * scale;
        mpz_fdiv_q(fl.get_mpz_t(), sl.get_num_mpz_t(), sl.get_den_mpz_t());
        mpz_fdiv_q(fh.get_mpz_t(), sh.get_num_mpz_t(), sh.get_den_mpz_t());
        if (fl != fh) break;
        kept = fl;
        kept_digits = d;
        scale *= 10;
    }
    if (kept_digits < 0) return "?";
    std::string digits = kept.get_str();
    if (kept_digits > 0) {
        if (static_cast<int>(digits.size()) <= kept_digits)
            digits.insert(0, static_cast<std::size_t>(kept_digits + 1 - digits.size()), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(kept_digits), ".");
    }
    return negative ? "-" + digits : digits;
}

std::string to_string(const Interval& a, int digits) {
    char* lo = nullptr;
    char* hi = nullptr;
    mpfr_asprintf(&lo, "%.*RDe", digits, a.lo());
    mpfr_asprintf(&hi, "%.*RUe", digits, a.hi());
    std::string s = std::string("[") + lo + ", " + hi + "]";
    mpfr_free_str(lo);
    mpfr_free_str(hi);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a, 17); }

}  // namespace trigcert
