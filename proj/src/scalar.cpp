#include "mirrorcheck/scalar.hpp"

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

scalar make_scalar(long num, long den)
{
    if (den == 0) {
        throw precondition_error("zero denominator");
    }
    scalar r(num, den);
    r.canonicalize();
    return r;
}

scalar make_scalar(const integer &num, const integer &den)
{
    if (den == 0) {
        throw precondition_error("zero denominator");
    }
    scalar r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const scalar &x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_pretty(const scalar &x)
{
    return x.get_str();
}

scalar parse_scalar(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string num_text(text.substr(0, slash));
    const std::string den_text = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    integer num, den;
    if (num_text.empty() || den_text.empty() || num.set_str(num_text, 10) != 0 || den.set_str(den_text, 10) != 0) {
        throw precondition_error("malformed rational: '" + std::string(text) + "'");
    }
    return make_scalar(num, den);
}

} // namespace mirrorcheck
