#ifndef BOUSS_PARAMS_HPP
#define BOUSS_PARAMS_HPP

#include <array>
#include <optional>
#include <string>

namespace bouss {

using Real = double;

enum class ParamClass {
    LongTimeAdmissible, // a<=0, c<=0, b>=0, d>=0, b+d>0, neither excluded pattern
    GenericCase2222,    // a = c >= 0, b >= 0, d >= 0, and not the above
    ExcludedCase,       // a=d=0, c<0, b>0  or  a=b=0, c<0, d>0
    Inadmissible,
};

std::string to_string(ParamClass c);

/// The (a,b,c,d) quadruple with its small parameter and classification.
struct AbcdParams {
    Real a = 0, b = 0, c = 0, d = 0;
    Real epsilon = 0.1;
    ParamClass classification = ParamClass::Inadmissible;
    std::string diagnostic; // why a quadruple was rejected or flagged

    bool admissible() const
    {
        return classification == ParamClass::LongTimeAdmissible ||
               classification == ParamClass::GenericCase2222;
    }
};

/// sgn as used by the regularity index map: 1, 0 or -1.
inline int sgn(Real x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Classify a quadruple; enforces a+b+c+d = 1/3 to 1e-12 and eps in (0,1].
AbcdParams validate_params(Real a, Real b, Real c, Real d, Real epsilon);

/// Classification only, no epsilon check (used by the parameter gate).
ParamClass classify(Real a, Real b, Real c, Real d);

/// Regularity indices (s1, s2, s3) from the index map:
/// s1 = s + sgn(b) - sgn(c), s2 = s + sgn(d) - sgn(a), s3 = s + 1 - sgn(a).
std::array<Real, 3> regularity_indices(const AbcdParams& p, Real s);

/// Named quadruples: "bbm-bbm", "kdv-kdv", "bona-smith", "excluded-1",
/// "excluded-2". Returns nothing for unknown names.
std::optional<std::array<Real, 4>> preset_quadruple(const std::string& name);

} // namespace bouss

#endif
