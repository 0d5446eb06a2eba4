#pragma once

// Magnitudes beyond fixed-precision range: a Tower stores exp^k(x) for a
// high-precision real x, normalizing k down whenever exp(x) is still
// representable. Addition keeps the dominant term and records the relative
// size of what was discarded.

#include <optional>
#include <string>

#include "cremona/real.hpp"

namespace cremona {

class Tower {
  public:
    Tower() : level_(0), x_(0L) {}
    explicit Tower(Real value) : level_(0), x_(std::move(value)) {}
    static Tower exp_tower(int level, Real x); // exp applied `level` times to x

    int level() const { return level_; }
    const Real& top() const { return x_; }
    bool exact_level0() const { return level_ == 0; }

    // natural log: level k -> level k-1
    Tower log_() const;
    Tower exp_() const;

    friend Tower operator*(const Tower& a, const Tower& b);
    friend Tower operator+(const Tower& a, const Tower& b);
    friend bool operator<(const Tower& a, const Tower& b);

    // relative magnitude of the term discarded by the most recent addition
    // (log10 of the ratio, when one operand dominated); empty if none
    const std::optional<Real>& discarded_log10() const { return discarded_; }

    Real log10_() const;            // log10 of the value, as a Tower-free Real when level <= 1
    std::string notation() const;   // "1.23e45" or "E2(1.23e4)" style

    Tower sinh_() const;
    Tower ceil_() const; // exact at level 0 when integral, identity otherwise

  private:
    int level_;       // number of exp applications
    Real x_;
    std::optional<Real> discarded_;

    void normalize();
};

} // namespace cremona
