#include "elliptic_tilt/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace elliptic_tilt {

namespace {

// Keeps E - A and the charge coefficients far from int64 overflow.
constexpr std::int64_t kMaxBoxEntry = std::int64_t{1} << 31;

void consider_bound(Rational& worst, const LaurentPoly& p)
{
   if (p.is_zero()) return;
   Rational b = cauchy_bound(p);
   if (b > worst) worst = b;
}

void require_small(const ChernMatrix& m, const char* what)
{
   for (auto v : m.flat())
      if (v > kMaxBoxEntry || v < -kMaxBoxEntry)
         throw std::invalid_argument(std::string(what) + " entries must lie within +-2^31 for a box search");
}

bool passes_heart_filter(const ChernMatrix& m, const ReducedCharge& z)
{
   return m.a10() >= 0 && is_admissible(z);
}

/// Shared per-candidate kernel of the serial and parallel searches.
std::optional<Verdict> judge(const ChernMatrix& a, const ChernMatrix& e, const ReducedCharge& ze,
                             const Rational& alpha, const GeometryParams& geo, bool heart_filter)
{
   if (a.is_zero() || a == e) return std::nullopt;
   const ReducedCharge za = reduced_charge(a, alpha, geo);
   if (heart_filter)
   {
      if (!passes_heart_filter(a, za)) return std::nullopt;
      if (!passes_heart_filter(e - a, ze - za)) return std::nullopt;
   }
   else if (!is_admissible(za))
   {
      return std::nullopt;
   }
   switch (phase_compare(za, ze))
   {
   case PhaseOrder::succeeds: return Verdict::strict;
   case PhaseOrder::equal_as_functions: return Verdict::boundary;
   case PhaseOrder::precedes: return std::nullopt;
   }
   return std::nullopt;
}

ReducedCharge prepare(const ChernMatrix& e, const SearchBox& box, const Rational& alpha, const GeometryParams& geo)
{
   box.validate();
   require_small(e, "E");
   ReducedCharge ze = reduced_charge(e, alpha, geo);
   require_admissible(ze);
   return ze;
}

void canonicalize(std::vector<Destabilizer>& found)
{
   std::sort(found.begin(), found.end(),
             [](const Destabilizer& x, const Destabilizer& y) { return x.a < y.a; });
}

}  // namespace

WallReport wall_locus(const ChernMatrix& a, const ChernMatrix& e, const Rational& alpha,
                      const GeometryParams& geo, const Rational& width)
{
   const ReducedCharge za = reduced_charge(a, alpha, geo);
   const ReducedCharge ze = reduced_charge(e, alpha, geo);
   if (za.is_zero() && ze.is_zero())
      throw std::invalid_argument("wall_locus: both reduced charges vanish identically");

   WallReport report;
   report.a = a;
   report.e = e;
   report.cross = za.im * ze.re - ze.im * za.re;
   report.proportional = report.cross.is_zero();
   if (!report.proportional) report.roots = positive_roots(report.cross, width);

   Rational worst = 0;
   consider_bound(worst, report.cross);
   consider_bound(worst, za.re);
   consider_bound(worst, ze.re);
   if (za.re.is_zero()) consider_bound(worst, za.im);
   if (ze.re.is_zero()) consider_bound(worst, ze.im);
   report.safe_s = 1 + worst;
   return report;
}

SearchBox SearchBox::uniform(std::int64_t lo, std::int64_t hi, bool heart_filter)
{
   SearchBox box;
   box.lo.fill(lo);
   box.hi.fill(hi);
   box.heart_filter = heart_filter;
   return box;
}

void SearchBox::validate() const
{
   for (std::size_t k = 0; k < 6; ++k)
   {
      if (lo[k] > hi[k]) throw std::invalid_argument("empty search box: lower bound exceeds upper bound");
      if (lo[k] < -kMaxBoxEntry || hi[k] > kMaxBoxEntry)
         throw std::invalid_argument("search box bounds must lie within +-2^31");
   }
   // Guard the uint64 volume.
   long double v = 1;
   for (std::size_t k = 0; k < 6; ++k) v *= static_cast<long double>(hi[k] - lo[k] + 1);
   if (v > 1e18L) throw std::invalid_argument("search box volume too large");
}

std::uint64_t SearchBox::volume() const
{
   std::uint64_t v = 1;
   for (std::size_t k = 0; k < 6; ++k) v *= static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
   return v;
}

ChernMatrix SearchBox::at(std::uint64_t index) const
{
   std::array<std::int64_t, 6> entries{};
   for (std::size_t k = 6; k-- > 0;)
   {
      const auto extent = static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
      entries[k] = lo[k] + static_cast<std::int64_t>(index % extent);
      index /= extent;
   }
   return ChernMatrix(entries);
}

std::string to_string(Verdict verdict) { return verdict == Verdict::strict ? "strict" : "boundary"; }

std::vector<Destabilizer> destabilizer_search_serial(const ChernMatrix& e, const SearchBox& box,
                                                     const Rational& alpha, const GeometryParams& geo)
{
   const ReducedCharge ze = prepare(e, box, alpha, geo);
   std::vector<Destabilizer> found;
   const std::uint64_t n = box.volume();
   for (std::uint64_t i = 0; i < n; ++i)
   {
      const ChernMatrix a = box.at(i);
      if (auto v = judge(a, e, ze, alpha, geo, box.heart_filter)) found.push_back({a, *v});
   }
   canonicalize(found);
   return found;
}

std::vector<Destabilizer> destabilizer_search(const ChernMatrix& e, const SearchBox& box, const Rational& alpha,
                                              const GeometryParams& geo)
{
   const ReducedCharge ze = prepare(e, box, alpha, geo);
   const auto n = static_cast<std::int64_t>(box.volume());
   std::vector<Destabilizer> found;

#pragma omp parallel
   {
      std::vector<Destabilizer> local;
#pragma omp for schedule(dynamic, 256) nowait
      for (std::int64_t i = 0; i < n; ++i)
      {
         const ChernMatrix a = box.at(static_cast<std::uint64_t>(i));
         if (auto v = judge(a, e, ze, alpha, geo, box.heart_filter)) local.push_back({a, *v});
      }
#pragma omp critical(elliptic_tilt_destab_merge)
      found.insert(found.end(), local.begin(), local.end());
   }

   canonicalize(found);
   return found;
}

bool TiltLimitReport::all_agree() const
{
   return std::all_of(checks.begin(), checks.end(), [](const CandidateCheck& c) { return c.agrees; });
}

TiltLimitReport tilt_vs_limit_check(const ChernMatrix& e, const std::vector<ChernMatrix>& candidates,
                                    const Rational& alpha, const GeometryParams& geo, int samples)
{
   if (samples < 1) throw std::invalid_argument("samples must be positive");
   const ReducedCharge ze = reduced_charge(e, alpha, geo);
   require_admissible(ze);

   TiltLimitReport report;
   for (const ChernMatrix& a : candidates)
   {
      CandidateCheck check;
      check.a = a;
      const ReducedCharge za = reduced_charge(a, alpha, geo);
      if (auto why = admissibility_violation(za); !why.empty())
      {
         check.note = "skipped: " + why;
         report.checks.push_back(std::move(check));
         continue;
      }
      const PhaseOrder order = phase_compare(za, ze);
      check.asymptotic = order;
      check.safe_s = (za.is_zero() && ze.is_zero()) ? Rational(1) : wall_locus(a, e, alpha, geo).safe_s;

      Rational s = check.safe_s;
      for (int k = 0; k < samples; ++k)
      {
         s *= 2;
         const Polarization pol = Polarization::on_hyperbola(alpha, s);
         SampleCheck sample{s, tilt_slope(a, pol, geo), tilt_slope(e, pol, geo)};
         const auto pointwise = sample.nu_a <=> sample.nu_e;
         switch (order)
         {
         case PhaseOrder::succeeds: sample.agrees = pointwise > 0; break;
         case PhaseOrder::equal_as_functions: sample.agrees = pointwise == 0; break;
         case PhaseOrder::precedes: sample.agrees = pointwise < 0; break;
         }
         check.agrees = check.agrees && sample.agrees;
         check.samples.push_back(std::move(sample));
      }
      if (!check.agrees) check.note = "pointwise tilt slopes disagree with the asymptotic order";
      report.checks.push_back(std::move(check));
   }
   return report;
}

}  // namespace elliptic_tilt
