#include "bouss/params.hpp"

#include <cmath>
#include <stdexcept>

namespace bouss {

std::string to_string(ParamClass c)
{
    switch (c) {
    case ParamClass::LongTimeAdmissible: return "LongTimeAdmissible";
    case ParamClass::GenericCase2222: return "GenericCase2222";
    case ParamClass::ExcludedCase: return "ExcludedCase";
    case ParamClass::Inadmissible: return "Inadmissible";
    }
    return "?";
}

ParamClass classify(Real a, Real b, Real c, Real d)
{
    const bool generic_1111 = a <= 0 && c <= 0 && b >= 0 && d >= 0;
    const bool excluded = (a == 0 && d == 0 && c < 0 && b > 0) ||
                          (a == 0 && b == 0 && c < 0 && d > 0);
    if (generic_1111) {
        if (excluded) return ParamClass::ExcludedCase;
        if (b + d > 0) return ParamClass::LongTimeAdmissible;
        return ParamClass::Inadmissible; // b=d=0 with a,c<=0 contradicts the sum rule
    }
    if (a == c && a >= 0 && b >= 0 && d >= 0) return ParamClass::GenericCase2222;
    return ParamClass::Inadmissible;
}

AbcdParams validate_params(Real a, Real b, Real c, Real d, Real epsilon)
{
    for (Real x : {a, b, c, d, epsilon})
        if (!std::isfinite(x))
            throw std::invalid_argument("abcd parameters must be finite");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1]");

    AbcdParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    p.epsilon = epsilon;

    const Real sum = a + b + c + d;
    if (std::abs(sum - 1.0 / 3.0) > 1e-12) {
        p.classification = ParamClass::Inadmissible;
        p.diagnostic = "a+b+c+d = " + std::to_string(sum) + ", expected 1/3";
        return p;
    }
    p.classification = classify(a, b, c, d);
    switch (p.classification) {
    case ParamClass::ExcludedCase:
        p.diagnostic = (a == 0 && d == 0) ? "excluded pattern a=d=0, c<0, b>0"
                                          : "excluded pattern a=b=0, c<0, d>0";
        break;
    case ParamClass::Inadmissible:
        p.diagnostic = "neither a<=0,c<=0,b>=0,d>=0 with b+d>0 nor a=c>=0,b>=0,d>=0";
        break;
    default: break;
    }
    return p;
}

std::array<Real, 3> regularity_indices(const AbcdParams& p, Real s)
{
    if (p.classification == ParamClass::Inadmissible)
        throw std::invalid_argument("regularity indices are undefined for inadmissible parameters");
    return {s + sgn(p.b) - sgn(p.c), s + sgn(p.d) - sgn(p.a), s + 1 - sgn(p.a)};
}

std::optional<std::array<Real, 4>> preset_quadruple(const std::string& name)
{
    const Real th = 1.0 / 3.0;
    if (name == "bbm-bbm") return std::array<Real, 4>{0.0, 1.0 / 6.0, 0.0, 1.0 / 6.0};
    if (name == "kdv-kdv") return std::array<Real, 4>{1.0 / 6.0, 0.0, 1.0 / 6.0, 0.0};
    if (name == "bona-smith") return std::array<Real, 4>{0.0, th, -th, th};
    if (name == "excluded-1") return std::array<Real, 4>{0.0, 0.5, -1.0 / 6.0, 0.0};
    if (name == "excluded-2") return std::array<Real, 4>{0.0, 0.0, -1.0 / 6.0, 0.5};
    return std::nullopt;
}

} // namespace bouss
