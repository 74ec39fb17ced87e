#include "p3/rational.hpp"

#include "p3/errors.hpp"

namespace p3 {

std::int64_t to_int64(const Rational& r)
{
    if (!is_integer(r))
        throw DomainError("value " + to_string(r) + " is not an integer");
    if (!r.get_num().fits_slong_p())
        throw DomainError("value " + to_string(r) + " does not fit in 64 bits");
    return r.get_num().get_si();
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

} // namespace p3
