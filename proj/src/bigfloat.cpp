#include "ei/bigfloat.hpp"

#include <cmath>

namespace ei {

std::string BigFloat::to_string(size_t digits) const {
    if (digits == 0)
        digits = static_cast<size_t>(std::floor(static_cast<double>(precision()) * 0.30103)) + 1;
    if (digits < 2) digits = 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace ei
