#pragma once

#include "elliptic_tilt/lattice.hpp"
#include "elliptic_tilt/laurent.hpp"
#include "elliptic_tilt/phases.hpp"
#include "elliptic_tilt/stability.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace elliptic_tilt::io {

using nlohmann::json;

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument
{
public:
   using std::invalid_argument::invalid_argument;
};

/// "a00,a01,a02;a10,a11,a12"; whitespace around entries is ignored.
ChernMatrix parse_matrix(std::string_view text);
std::string format_matrix(const ChernMatrix& m);

/// {"m": [[a00,a01,a02],[a10,a11,a12]]}
json matrix_to_json(const ChernMatrix& m);
ChernMatrix matrix_from_json(const json& j);

/// Sum of "c*s^e" terms in descending exponent, e.g. "2*s^3 - 2*s^-1";
/// the zero polynomial is "0".  The parser also accepts "s", "3", "s^2",
/// "-1/2*s" and similar shorthands.
std::string format_laurent(const LaurentPoly& p);
LaurentPoly parse_laurent(std::string_view text);

/// {"terms": [[e, "p/q"], ...]} sorted by descending e.
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json root_to_json(const RootCertificate& root);
std::string format_root(const RootCertificate& root);

json charge_to_json(const ReducedCharge& z);
json phase_limit_to_json(const PhaseLimit& limit);
json wall_report_to_json(const WallReport& report);
json destabilizers_to_json(const ChernMatrix& e, const std::vector<Destabilizer>& found);
json tilt_report_to_json(const TiltLimitReport& report);

}  // namespace elliptic_tilt::io
