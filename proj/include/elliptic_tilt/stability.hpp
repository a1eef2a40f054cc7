#pragma once

#include "elliptic_tilt/charges.hpp"
#include "elliptic_tilt/phases.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace elliptic_tilt {

/// Crossings of the phase functions of A and E along t s = alpha.
struct WallReport
{
   ChernMatrix a;
   ChernMatrix e;
   LaurentPoly cross;  // Im(A) Re(E) - Im(E) Re(A)
   bool proportional = false;  // cross vanishes identically: no wall
   std::vector<RootCertificate> roots;
   /// Strictly beyond every root of the cross polynomial, of both Re
   /// components, and of Im wherever the matching Re vanishes identically.
   Rational safe_s;
};

/// Throws std::invalid_argument when both charges vanish identically.
WallReport wall_locus(const ChernMatrix& a, const ChernMatrix& e, const Rational& alpha,
                      const GeometryParams& geo, const Rational& width = default_root_width());

/// Inclusive per-entry bounds for candidate sub-characters.
struct SearchBox
{
   std::array<std::int64_t, 6> lo{};
   std::array<std::int64_t, 6> hi{};
   /// Require a10 >= 0 and an admissible charge on the candidate and on the
   /// complement E - A.
   bool heart_filter = true;

   static SearchBox uniform(std::int64_t lo, std::int64_t hi, bool heart_filter = true);

   /// Throws std::invalid_argument on an empty box or out-of-range bounds.
   void validate() const;
   std::uint64_t volume() const;
   /// The index-th matrix in row-major mixed-radix order.
   ChernMatrix at(std::uint64_t index) const;
};

enum class Verdict { strict, boundary };
std::string to_string(Verdict verdict);

/// A Chern-level destabilising candidate: no claim that a subobject with
/// this character exists.
struct Destabilizer
{
   ChernMatrix a;
   Verdict verdict = Verdict::strict;

   bool operator==(const Destabilizer&) const = default;
};

/// Every proper nonzero A in the box passing the heart filters whose phase
/// eventually reaches or exceeds that of E; sorted lexicographically.  Runs
/// the box enumeration across OpenMP threads.
std::vector<Destabilizer> destabilizer_search(const ChernMatrix& e, const SearchBox& box, const Rational& alpha,
                                              const GeometryParams& geo);

/// Single-threaded reference for destabilizer_search.
std::vector<Destabilizer> destabilizer_search_serial(const ChernMatrix& e, const SearchBox& box,
                                                     const Rational& alpha, const GeometryParams& geo);

struct SampleCheck
{
   Rational s;
   ExtendedRational nu_a;
   ExtendedRational nu_e;
   bool agrees = true;
};

struct CandidateCheck
{
   ChernMatrix a;
   std::optional<PhaseOrder> asymptotic;  // empty when the candidate was skipped
   Rational safe_s;
   std::vector<SampleCheck> samples;
   bool agrees = true;
   std::string note;
};

struct TiltLimitReport
{
   std::vector<CandidateCheck> checks;
   bool all_agree() const;
};

/// Compares pointwise tilt-slope verdicts at safe_s * 2^k (k = 1..samples)
/// with the asymptotic phase order.  A disagreement is an implementation bug.
TiltLimitReport tilt_vs_limit_check(const ChernMatrix& e, const std::vector<ChernMatrix>& candidates,
                                    const Rational& alpha, const GeometryParams& geo, int samples);

}  // namespace elliptic_tilt
