#pragma once

#include "elliptic_tilt/charges.hpp"

#include <stdexcept>
#include <string>

namespace elliptic_tilt {

/// Thrown when a charge is not asymptotically in the admissible region
/// {Re > 0} u {Re = 0, Im >= 0}.
class InadmissibleCharge : public std::domain_error
{
public:
   using std::domain_error::domain_error;
};

/// Empty string when admissible, otherwise a diagnostic naming the violated sign.
std::string admissibility_violation(const ReducedCharge& z);
bool is_admissible(const ReducedCharge& z);
void require_admissible(const ReducedCharge& z);

enum class PhaseKind { zero_charge, half, minus_half, interior };
enum class Approach { from_above, exact, from_below, not_applicable };

/// lim_{s -> inf} of the phase in (-1/2, 1/2].  For interior limits the
/// value is atan(tangent)/pi; `approach` says on which side the phase
/// function settles (sign of phase(s) - limit for large s).
struct PhaseLimit
{
   PhaseKind kind = PhaseKind::zero_charge;
   Rational tangent;
   Approach approach = Approach::not_applicable;

   bool operator==(const PhaseLimit&) const = default;
};

PhaseLimit phase_limit(const ReducedCharge& z);

/// "1/2", "-1/2", "0+", "0", "0-", "atan2(p, q)/π" or "1/2 (zero charge)".
std::string format_phase_limit(const PhaseLimit& limit);

/// Eventual (s >> 0) order of the phase of A against the phase of B.
enum class PhaseOrder { precedes, equal_as_functions, succeeds };

PhaseOrder phase_compare(const ReducedCharge& a, const ReducedCharge& b);
std::string to_string(PhaseOrder order);

enum class HnBucket { bullet, half, zero, minus_half, other };

struct HnBucketResult
{
   HnBucket bucket = HnBucket::bullet;
   Rational tangent;  // only meaningful for `other`
};

HnBucketResult hn_bucket(const ReducedCharge& z);
std::string to_string(HnBucket bucket);

}  // namespace elliptic_tilt
