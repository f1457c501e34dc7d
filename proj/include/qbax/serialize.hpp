#pragma once
// Text format for polynomials, presentations and maps.
//
//   presentation Aq
//   generators e k kinv f
//   rule k e = [q^-1] e k
//   rule f e = e f + [-q + q^-1] k k
//   unit k kinv
//   star e e
//   end
//
//   map deltaA Aq -> Aq arity 2
//   image e = e@0 kinv@1 + k@0 e@1
//   end
//
// A polynomial is a '+'-separated list of terms "[coef] letters"; a letter is a
// generator name with an optional "@site" (default 0). "[coef]" alone is a scalar,
// a leading '-' negates a term and "0" is the zero polynomial. Lines starting
// with '#' are comments.
#include <functional>
#include <string>
#include <string_view>

#include "qbax/genmap.hpp"

namespace qbax {

NCPoly parse_ncpoly(std::string_view text, const Presentation& pres);

std::string write_presentation(const Presentation& pres);
PresentationPtr parse_presentation(std::string_view text);

using PresentationLookup = std::function<PresentationPtr(std::string_view name)>;
std::string write_map(const GenMap& m);
GenMap parse_map(std::string_view text, const PresentationLookup& lookup);

}  // namespace qbax
