#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace liouville {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error raised when a precondition of a public operation is violated.
/// The message always names the module and the offending parameters.
class Error : public std::invalid_argument {
public:
    Error(const std::string& module, const std::string& what)
        : std::invalid_argument(module + ": " + what), module_(module) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

/// Raised when two independent routes to the same number disagree.
class IntegrityError : public std::runtime_error {
public:
    IntegrityError(const std::string& module, const std::string& what)
        : std::runtime_error(module + ": integrity check failed: " + what), module_(module) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw Error("rational", "cannot parse '" + s + "'");
    if (r.get_den() == 0)
        throw Error("rational", "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

/// p/q reduced. Rational(p, q) alone keeps the fraction unreduced, which GMP
/// arithmetic does not accept.
inline Rational ratio(long p, long q) {
    if (q == 0) throw Error("rational", "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p())
        throw Error("rational", "integer " + z.get_str() + " does not fit in a machine word");
    return z.get_si();
}

} // namespace liouville
