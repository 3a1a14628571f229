#pragma once

// JSON documents for certificates and elements. Scalars are strings in the
// rational-function text grammar; pairs and triples are integer arrays.
//
//   abelianization certificate:
//     {"input":[p,q], "canonical":[x,y],
//      "steps":[{"from":[..], "to":[..], "conjugator":[..], "scale":"..."}]}
//
//   curve-reduction certificate (matrices row-major, indices 0-based):
//     {"input":[p,q,r], "canonical":[x,y,z],
//      "steps":[{"matrix":[[..],[..],[..]], "columns":[i,j],
//                "from_pair":[a,b], "to_pair":[a',b'], "permutation":[s0,s1,s2]}]}

#include <string>
#include <string_view>

#include "skein/abelianization.hpp"
#include "skein/torus3.hpp"

namespace skein {

std::string to_json(const AbCertificate& cert, int indent = 2);
std::string to_json(const Reduction3Certificate& cert, int indent = 2);
/// {"terms":[{"label":"empty"|[p,q], "coeff":"..."}]}
std::string to_json(const SkeinT2Element& x, int indent = 2);
/// {"terms":[{"class":"(1,0)", "coeff":"..."}]}
std::string to_json(const AbElement& x, int indent = 2);

/// Inverse of to_json; throws std::invalid_argument on schema violations.
AbCertificate ab_certificate_from_json(std::string_view text);
Reduction3Certificate reduction_certificate_from_json(std::string_view text);

}  // namespace skein
