#include "monospec/bigreal.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace monospec {

namespace {

std::string format_mpfr(mpfr_srcptr v, size_t digits) {
    if (mpfr_nan_p(v)) return "nan";
    if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    // strip trailing zeros but keep at least one digit
    size_t last = d.find_last_not_of('0');
    d = d.substr(0, last == std::string::npos ? 1 : last + 1);
    std::ostringstream out;
    if (neg) out << '-';
    out << d.substr(0, 1);
    if (d.size() > 1) out << '.' << d.substr(1);
    long ee = static_cast<long>(e) - 1;   // mpfr exponent is for 0.ddd form
    if (ee != 0) out << 'e' << ee;
    return out.str();
}

} // namespace

std::string BigReal::to_string() const {
    // digits10 + 2 guarantees exact decimal round-trip at this precision
    size_t d = static_cast<size_t>(std::ceil(prec() * 0.30102999566398119522)) + 2;
    return format_mpfr(v_, d);
}

std::string BigReal::to_string(size_t digits) const {
    return format_mpfr(v_, digits);
}

} // namespace monospec
