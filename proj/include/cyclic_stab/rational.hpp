#pragma once
#include <gmpxx.h>

#include <string>

namespace cstab {

using Rat = mpq_class;

// Canonical p/q (mpq_class(p, q) alone does not reduce).
Rat ratio(long p, long q);
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

// Representative of r mod m in (0, m].
Rat mod_half_open(const Rat& r, const Rat& m);
// Representative of r mod 1 in [0, 1).
Rat frac(const Rat& r);
Rat floor_rat(const Rat& r);
bool is_integer(const Rat& r);
bool is_even_integer(const Rat& r);

// Exact complex number with rational parts.
struct Complex {
    Rat re, im;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool operator==(const Complex& o) const { return re == o.re && im == o.im; }
};
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Rat& k, const Complex& a);

}  // namespace cstab
