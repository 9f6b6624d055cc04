#pragma once

#include <string>

#include "rpade/real.hpp"

namespace rpade::test {

inline Real N(const char* text) { return Real(std::string_view(text)); }
inline Rational Q(const char* text) { return parse_rational(text); }

/// |a - b| <= tol * max(1, |b|)
inline bool close(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol * max(Real(1), abs(b)); }

}  // namespace rpade::test
