#include "elliptic_tilt/phases.hpp"

namespace elliptic_tilt {

std::string admissibility_violation(const ReducedCharge& z)
{
   const int re_sign = asymptotic_sign(z.re);
   if (re_sign < 0) return "inadmissible charge: Re is asymptotically negative";
   if (re_sign == 0 && asymptotic_sign(z.im) < 0)
      return "inadmissible charge: Re vanishes identically and Im is asymptotically negative";
   return {};
}

bool is_admissible(const ReducedCharge& z) { return admissibility_violation(z).empty(); }

void require_admissible(const ReducedCharge& z)
{
   if (auto why = admissibility_violation(z); !why.empty()) throw InadmissibleCharge(why);
}

PhaseLimit phase_limit(const ReducedCharge& z)
{
   require_admissible(z);
   PhaseLimit out;
   if (z.is_zero())
   {
      out.kind = PhaseKind::zero_charge;
      return out;
   }
   if (z.re.is_zero())
   {
      out.kind = PhaseKind::half;
      return out;
   }
   out.kind = PhaseKind::interior;
   out.tangent = 0;
   if (!z.im.is_zero())
   {
      const int re_deg = z.re.max_exponent();
      const int im_deg = z.im.max_exponent();
      if (im_deg > re_deg)
      {
         out.kind = sgn(z.im.leading_coefficient()) > 0 ? PhaseKind::half : PhaseKind::minus_half;
         return out;
      }
      if (im_deg == re_deg) out.tangent = z.im.leading_coefficient() / z.re.leading_coefficient();
   }
   // Re > 0 eventually, so phase - limit has the sign of Im - tangent * Re.
   const int side = asymptotic_sign(z.im - z.re * out.tangent);
   out.approach = side > 0 ? Approach::from_above : side < 0 ? Approach::from_below : Approach::exact;
   return out;
}

std::string format_phase_limit(const PhaseLimit& limit)
{
   switch (limit.kind)
   {
   case PhaseKind::zero_charge: return "1/2 (zero charge)";
   case PhaseKind::half: return "1/2";
   case PhaseKind::minus_half: return "-1/2";
   case PhaseKind::interior: break;
   }
   if (sgn(limit.tangent) == 0)
   {
      switch (limit.approach)
      {
      case Approach::from_above: return "0+";
      case Approach::from_below: return "0-";
      default: return "0";
      }
   }
   return "atan2(" + limit.tangent.get_num().get_str() + ", " + limit.tangent.get_den().get_str() + ")/π";
}

PhaseOrder phase_compare(const ReducedCharge& a, const ReducedCharge& b)
{
   require_admissible(a);
   require_admissible(b);
   // Re = 0 (zero charge included) pins the phase at 1/2, the maximum.
   const bool a_top = a.re.is_zero();
   const bool b_top = b.re.is_zero();
   if (a_top && b_top) return PhaseOrder::equal_as_functions;
   if (a_top) return PhaseOrder::succeeds;
   if (b_top) return PhaseOrder::precedes;
   const int cross = asymptotic_sign(a.im * b.re - b.im * a.re);
   return cross > 0 ? PhaseOrder::succeeds : cross < 0 ? PhaseOrder::precedes : PhaseOrder::equal_as_functions;
}

std::string to_string(PhaseOrder order)
{
   switch (order)
   {
   case PhaseOrder::precedes: return "precedes";
   case PhaseOrder::equal_as_functions: return "equal_as_functions";
   case PhaseOrder::succeeds: return "succeeds";
   }
   return "?";
}

HnBucketResult hn_bucket(const ReducedCharge& z)
{
   const PhaseLimit limit = phase_limit(z);
   HnBucketResult out;
   switch (limit.kind)
   {
   case PhaseKind::zero_charge: out.bucket = HnBucket::bullet; break;
   case PhaseKind::half: out.bucket = HnBucket::half; break;
   case PhaseKind::minus_half: out.bucket = HnBucket::minus_half; break;
   case PhaseKind::interior:
      out.tangent = limit.tangent;
      out.bucket = sgn(limit.tangent) == 0 ? HnBucket::zero : HnBucket::other;
      break;
   }
   return out;
}

std::string to_string(HnBucket bucket)
{
   switch (bucket)
   {
   case HnBucket::bullet: return "bullet";
   case HnBucket::half: return "half";
   case HnBucket::zero: return "zero";
   case HnBucket::minus_half: return "minus_half";
   case HnBucket::other: return "other";
   }
   return "?";
}

}  // namespace elliptic_tilt
