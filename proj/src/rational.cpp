#include "cyclic_stab/rational.hpp"

#include "cyclic_stab/error.hpp"

namespace cstab {

Rat ratio(long p, long q) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '+') t += c;
    if (t.empty()) throw Error(Errc::DocumentError, "empty rational");
    Rat r;
    if (r.set_str(t, 10) != 0) throw Error(Errc::DocumentError, "bad rational '" + s + "'");
    if (r.get_den() == 0) throw Error(Errc::DocumentError, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat floor_rat(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rat(q);
}

Rat mod_half_open(const Rat& r, const Rat& m) {
    // r - m*ceil(r/m) + m
    Rat t = r / m;
    Rat c = -floor_rat(Rat(-t));
    Rat out = r - m * c + m;
    return out;
}

Rat frac(const Rat& r) { return r - floor_rat(r); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool is_even_integer(const Rat& r) {
    return is_integer(r) && mpz_even_p(r.get_num_mpz_t());
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Rat& k, const Complex& a) { return {k * a.re, k * a.im}; }

}  // namespace cstab
