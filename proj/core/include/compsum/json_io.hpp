#ifndef COMPSUM_JSON_IO_HPP
#define COMPSUM_JSON_IO_HPP

#include <string>
#include <string_view>

#include "compsum/bipoly.hpp"
#include "compsum/composition.hpp"
#include "compsum/composition_sums.hpp"
#include "compsum/identities.hpp"
#include "compsum/series.hpp"

namespace compsum {

// Compact single-line JSON. All numeric payloads are exact "p/q" strings.
// The from_json functions throw std::invalid_argument on malformed input.

// {"terms":[{"u":i,"v":j,"c":"p/q"},...]} in canonical term order.
std::string bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(std::string_view text);

// {"order":N,"coeffs":["c0","c1",...]}
std::string series_to_json(const Series& s);
Series series_from_json(std::string_view text);

// Plain array of parts, e.g. [1,2,1].
std::string composition_to_json(const Composition& c);
Composition composition_from_json(std::string_view text);

// {"n":n,"poly":{...}}
std::string generating_poly_to_json(const GeneratingPolynomial& g);
GeneratingPolynomial generating_poly_from_json(std::string_view text);

// {"identity":"eq1","n":3,"l":2,"lhs":"2/9","rhs":"2/9","pass":true}
std::string identity_report_to_json(const IdentityReport& r);

}  // namespace compsum

#endif
