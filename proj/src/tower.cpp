#include "cremona/tower.hpp"

#include "cremona/errors.hpp"

namespace cremona {

namespace {

// exp(x) stays representable (and cheap) below this; above it we raise the
// tower level instead
const double kDirectExp = 1e15;

Real neg_inf() {
    Real r;
    mpfr_set_inf(r.get(), -1);
    return r;
}

} // namespace

Tower Tower::exp_tower(int level, Real x) {
    Tower t;
    t.level_ = level;
    t.x_ = std::move(x);
    t.normalize();
    return t;
}

void Tower::normalize() {
    while (level_ >= 1) {
        // the inner value exp^{level-1}(x) is a plain real only when level==1
        if (level_ == 1 && x_ < Real(kDirectExp)) {
            x_ = exp(x_);
            level_ = 0;
        } else if (level_ >= 2 && x_ < Real(50.0)) {
            x_ = exp(x_);
            --level_;
        } else {
            break;
        }
    }
}

Tower Tower::log_() const {
    if (level_ >= 1) return exp_tower(level_ - 1, x_);
    if (!(x_ > Real(0L))) throw DomainError("log of non-positive tower value");
    return Tower(log(x_));
}

Tower Tower::exp_() const {
    if (level_ == 0 && x_ < Real(kDirectExp)) {
        Real e = exp(x_);
        if (!mpfr_inf_p(e.get())) return Tower(std::move(e));
    }
    return exp_tower(level_ + 1, x_);
}

Tower operator*(const Tower& a, const Tower& b) {
    if (a.level_ == 0 && b.level_ == 0) {
        Real p = a.x_ * b.x_;
        if (!mpfr_inf_p(p.get())) return Tower(std::move(p));
    }
    return (a.log_() + b.log_()).exp_();
}

Tower operator+(const Tower& a, const Tower& b) {
    if (a.level_ == 0 && b.level_ == 0) {
        Real s = a.x_ + b.x_;
        if (!mpfr_inf_p(s.get())) return Tower(std::move(s));
    }
    const Tower& big = (a < b) ? b : a;
    const Tower& small = (a < b) ? a : b;
    if (big.level_ <= 1 && small.level_ <= 1) {
        // log(big + small) = log big + log1p(exp(log small - log big))
        Real lb = big.level_ ? big.x_ : log(big.x_);
        Real ls = small.level_ ? small.x_ : log(small.x_);
        Real corr = log1p(exp(ls - lb));
        Tower r = Tower::exp_tower(1, lb + corr);
        if (corr.is_zero() && !small.x_.is_zero()) {
            r.discarded_ = (ls - lb) / log(Real(10.0));
        }
        return r;
    }
    Tower r = big;
    r.discarded_ = neg_inf();
    return r;
}

bool operator<(const Tower& a, const Tower& b) {
    Tower x = a, y = b;
    // peel logs until both are plain reals
    while (x.level_ > 0 || y.level_ > 0) {
        if (x.level_ == 0 && !(x.x_ > Real(0L))) return true;  // log would diverge; y towers above
        if (y.level_ == 0 && !(y.x_ > Real(0L))) return false;
        x = x.log_();
        y = y.log_();
    }
    return x.x_ < y.x_;
}

Real Tower::log10_() const {
    static const Real ln10 = log(Real(10.0));
    if (level_ == 0) return log10(x_);
    if (level_ == 1) return x_ / ln10;
    throw DomainError("log10 exceeds real range at tower level >= 2");
}

std::string Tower::notation() const {
    if (level_ == 0) return x_.str(12);
    return "E" + std::to_string(level_) + "(" + x_.str(12) + ")";
}

Tower Tower::sinh_() const {
    if (level_ == 0 && x_ < Real(kDirectExp)) {
        Real s = sinh(x_);
        if (!mpfr_inf_p(s.get())) return Tower(std::move(s));
    }
    // sinh(v) = exp(v - ln 2) up to a relative error exp(-2v)
    if (level_ == 0) return Tower::exp_tower(1, x_ - ln2());
    Tower shifted = *this; // v - ln2 is v to working precision at level >= 1
    return shifted.exp_();
}

Tower Tower::ceil_() const {
    if (level_ == 0) return Tower(ceil(x_));
    return *this; // integrality is below resolution at this magnitude
}

} // namespace cremona
