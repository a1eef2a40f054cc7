#include "cli.hpp"

#include "elliptic_tilt/charges.hpp"
#include "elliptic_tilt/io.hpp"
#include "elliptic_tilt/lattice.hpp"
#include "elliptic_tilt/patterns.hpp"
#include "elliptic_tilt/phases.hpp"
#include "elliptic_tilt/stability.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace elliptic_tilt::cli {

namespace {

using io::json;

constexpr std::int64_t kDefaultBoxRadius = 2;

struct Session
{
   std::int64_t h = 1;
   std::int64_t c = 1;
   std::string alpha;
   std::string lambda;
   std::string format = "text";
   bool json_flag = false;

   bool json_output() const { return json_flag || format == "json"; }

   GeometryParams geo() const
   {
      GeometryParams g{h, c};
      g.validate();
      return g;
   }

   Rational alpha_value(const std::string& command) const
   {
      if (alpha.empty()) throw io::ParseError(command + ": --alpha is required");
      Rational a = parse_rational(alpha);
      require_positive(a, "alpha");
      return a;
   }

   Rational lambda_value(const std::string& command) const
   {
      if (lambda.empty()) throw io::ParseError(command + ": --lambda is required");
      Rational l = parse_rational(lambda);
      require_positive(l, "lambda");
      return l;
   }
};

Rational required_rational(const std::string& text, const std::string& flag, const std::string& command)
{
   if (text.empty()) throw io::ParseError(command + ": " + flag + " is required");
   return parse_rational(text);
}

/// The explicit matrix, or every non-blank, non-comment line of `in`.
std::vector<ChernMatrix> gather(const std::string& arg, std::istream& in)
{
   std::vector<ChernMatrix> out;
   if (!arg.empty() && arg != "-")
   {
      out.push_back(io::parse_matrix(arg));
      return out;
   }
   std::string line;
   while (std::getline(in, line))
   {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out.push_back(io::parse_matrix(line));
   }
   return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
   std::string out;
   for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
   return out;
}

std::string decimal(const ExtendedRational& v)
{
   if (v.is_infinite()) return "inf";
   std::ostringstream os;
   os << std::setprecision(17) << v.value().get_d();
   return os.str();
}

std::int64_t parse_int(std::string_view text, std::string_view what)
{
   std::size_t used = 0;
   std::int64_t v = 0;
   try { v = std::stoll(std::string(text), &used); }
   catch (const std::exception&) { used = 0; }
   if (used == 0 || used != text.size())
      throw io::ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
   return v;
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text)
{
   auto colon = text.find(':');
   if (colon == std::string_view::npos)
   {
      const std::int64_t r = parse_int(text, "box radius");
      if (r < 0) throw io::ParseError("box radius must be non-negative");
      return {-r, r};
   }
   return {parse_int(text.substr(0, colon), "box bound"), parse_int(text.substr(colon + 1), "box bound")};
}

/// "R", "lo:hi", or six comma-separated "lo:hi" ranges (row-major).
SearchBox parse_box(const std::string& spec, bool heart_filter)
{
   SearchBox box;
   box.heart_filter = heart_filter;
   std::vector<std::string_view> parts;
   std::string_view rest = spec;
   while (true)
   {
      auto comma = rest.find(',');
      parts.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
   }
   if (parts.size() == 1)
   {
      auto [lo, hi] = parse_range(parts[0]);
      box.lo.fill(lo);
      box.hi.fill(hi);
   }
   else if (parts.size() == 6)
   {
      for (std::size_t k = 0; k < 6; ++k) std::tie(box.lo[k], box.hi[k]) = parse_range(parts[k]);
   }
   else
   {
      throw io::ParseError("--box expects R, lo:hi, or six comma-separated lo:hi ranges");
   }
   return box;
}

std::string default_box()
{
   if (const char* env = std::getenv("ELLIPTIC_TILT_BOX_BUDGET"); env && *env)
   {
      const std::int64_t r = parse_int(env, "ELLIPTIC_TILT_BOX_BUDGET");
      if (r < 0) throw io::ParseError("ELLIPTIC_TILT_BOX_BUDGET must be non-negative");
      return std::to_string(r);
   }
   return std::to_string(kDefaultBoxRadius);
}

class Emitter
{
public:
   Emitter(const Session& session, std::ostream& out) : session_(session), out_(out) {}

   void operator()(const std::string& text, const json& j) const
   {
      if (session_.json_output()) out_ << j.dump() << '\n';
      else out_ << text << '\n';
   }

private:
   const Session& session_;
   std::ostream& out_;
};

std::string charge_text(const ReducedCharge& z)
{
   return "re = " + io::format_laurent(z.re) + "; im = " + io::format_laurent(z.im);
}

std::string wall_text(const WallReport& report)
{
   std::string out = "cross = " + io::format_laurent(report.cross) + "\n";
   if (report.proportional) out += "no wall: proportional phases\n";
   else if (report.roots.empty()) out += "no wall: no positive roots\n";
   for (const auto& r : report.roots) out += "root: " + io::format_root(r) + "\n";
   out += "safe_s = " + to_string(report.safe_s);
   return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
   Session session;
   CLI::App app{"Exact stability data for Chern characters on an elliptic threefold C x S", "elliptic_tilt"};
   app.set_help_flag("--help", "print this help and exit");
   app.require_subcommand(1);
   app.fallthrough();
   app.add_option("--h", session.h, "H_S^2 = 2h on the surface factor")->capture_default_str();
   app.add_option("--c", session.c, "least positive fiber degree")->capture_default_str();
   app.add_option("--alpha", session.alpha, "hyperbola t s = alpha (rational)");
   app.add_option("--lambda", session.lambda, "reference class parameter (rational)");
   app.add_option("--format", session.format, "output format")->check(CLI::IsMember({"text", "json"}));
   app.add_flag("--json", session.json_flag, "shorthand for --format json");

   std::function<void()> action;
   const Emitter emit(session, out);

   std::string m1, m2;
   auto add_matrix = [](CLI::App* sub, std::string& target, const char* name, bool required) {
      auto* opt = sub->add_option(name, target, "Chern matrix \"a00,a01,a02;a10,a11,a12\"");
      if (required) opt->required();
   };

   // transform
   std::int64_t shift_by = 0;
   auto* transform = app.add_subcommand("transform", "Fourier-Mukai action on ch, optionally shifted");
   add_matrix(transform, m1, "matrix", false);
   transform->add_option("--shift", shift_by, "apply [n] after the transform");
   transform->callback([&] {
      action = [&] {
         for (const auto& m : gather(m1, in))
         {
            const ChernMatrix r = shift(fm_transform(m), shift_by);
            emit(io::format_matrix(r), io::matrix_to_json(r));
         }
      };
   });

   // charge
   auto* charge = app.add_subcommand("charge", "reduced central charge along t s = alpha");
   add_matrix(charge, m1, "matrix", false);
   charge->callback([&] {
      action = [&] {
         const Rational alpha = session.alpha_value("charge");
         for (const auto& m : gather(m1, in))
         {
            const ReducedCharge z = reduced_charge(m, alpha, session.geo());
            json j = io::charge_to_json(z);
            j["matrix"] = io::matrix_to_json(m);
            emit(charge_text(z), j);
         }
      };
   });

   // phase
   auto* phase = app.add_subcommand("phase", "limit of the phase as s -> infinity");
   add_matrix(phase, m1, "matrix", false);
   phase->callback([&] {
      action = [&] {
         const Rational alpha = session.alpha_value("phase");
         for (const auto& m : gather(m1, in))
         {
            const PhaseLimit limit = phase_limit(reduced_charge(m, alpha, session.geo()));
            json j = io::phase_limit_to_json(limit);
            j["matrix"] = io::matrix_to_json(m);
            emit(format_phase_limit(limit), j);
         }
      };
   });

   // compare
   auto* compare = app.add_subcommand("compare", "eventual order of the phases of A and B");
   add_matrix(compare, m1, "a", true);
   add_matrix(compare, m2, "b", true);
   compare->callback([&] {
      action = [&] {
         const Rational alpha = session.alpha_value("compare");
         const ChernMatrix a = io::parse_matrix(m1);
         const ChernMatrix b = io::parse_matrix(m2);
         const PhaseOrder order =
            phase_compare(reduced_charge(a, alpha, session.geo()), reduced_charge(b, alpha, session.geo()));
         emit(to_string(order),
              json{{"a", io::matrix_to_json(a)}, {"b", io::matrix_to_json(b)}, {"order", to_string(order)}});
      };
   });

   // classify
   auto* classify_cmd = app.add_subcommand("classify", "sign-pattern cells and torsion-class ladder level");
   add_matrix(classify_cmd, m1, "matrix", false);
   classify_cmd->callback([&] {
      action = [&] {
         for (const auto& m : gather(m1, in))
         {
            std::vector<std::string> names;
            for (PatternCell cell : classify(m)) names.push_back(cell_name(cell));
            const auto level = ladder_level(m);
            json j{{"matrix", io::matrix_to_json(m)}, {"cells", names}};
            j["ladder_level"] = level ? json(*level) : json(nullptr);
            emit("cells: " + (names.empty() ? std::string("none") : join(names, ", ")) +
                    "; ladder level: " + (level ? std::to_string(*level) : std::string("none")),
                 j);
         }
      };
   });

   // wall
   bool plot_csv = false;
   int plot_points = 64;
   std::string plot_max;
   auto* wall = app.add_subcommand("wall", "certified crossings of the phase functions of A and E");
   add_matrix(wall, m1, "a", true);
   add_matrix(wall, m2, "e", true);
   wall->add_flag("--plot-csv", plot_csv, "emit s,nu_A,nu_E rows instead of the report");
   wall->add_option("--plot-points", plot_points, "number of CSV rows")->check(CLI::PositiveNumber)->capture_default_str();
   wall->add_option("--plot-max", plot_max, "largest sampled s (default 2 safe_s)");
   wall->callback([&] {
      action = [&] {
         const Rational alpha = session.alpha_value("wall");
         const ChernMatrix a = io::parse_matrix(m1);
         const ChernMatrix e = io::parse_matrix(m2);
         const WallReport report = wall_locus(a, e, alpha, session.geo());
         if (!plot_csv)
         {
            emit(wall_text(report), io::wall_report_to_json(report));
            return;
         }
         const Rational top = plot_max.empty() ? Rational(2 * report.safe_s) : parse_rational(plot_max);
         require_positive(top, "--plot-max");
         out << "s,nu_A,nu_E\n";
         for (int k = 1; k <= plot_points; ++k)
         {
            const Rational s = top * k / plot_points;
            const Polarization pol = Polarization::on_hyperbola(alpha, s);
            out << std::setprecision(17) << s.get_d() << ',' << decimal(tilt_slope(a, pol, session.geo())) << ','
                << decimal(tilt_slope(e, pol, session.geo())) << '\n';
         }
      };
   });

   // destab
   std::string box_spec;
   bool no_heart = false;
   bool serial = false;
   int verify = 0;
   auto* destab = app.add_subcommand("destab", "Chern-level destabilising candidates inside a box");
   add_matrix(destab, m1, "matrix", false);
   destab->add_option("--box", box_spec, "R, lo:hi, or six lo:hi ranges (default radius ELLIPTIC_TILT_BOX_BUDGET or 2)");
   destab->add_flag("--no-heart-filter", no_heart, "only require an admissible candidate charge");
   destab->add_flag("--serial", serial, "use the single-threaded reference search");
   destab->add_option("--verify", verify, "compare with pointwise tilt slopes at this many samples")
      ->check(CLI::NonNegativeNumber);
   destab->callback([&] {
      action = [&] {
         const Rational alpha = session.alpha_value("destab");
         const SearchBox box = parse_box(box_spec.empty() ? default_box() : box_spec, !no_heart);
         for (const auto& e : gather(m1, in))
         {
            const auto found = serial ? destabilizer_search_serial(e, box, alpha, session.geo())
                                      : destabilizer_search(e, box, alpha, session.geo());
            json j = io::destabilizers_to_json(e, found);
            std::string text;
            for (const auto& d : found) text += io::format_matrix(d.a) + " " + to_string(d.verdict) + "\n";
            text += std::to_string(found.size()) + " candidate(s) for " + io::format_matrix(e);
            if (verify > 0)
            {
               std::vector<ChernMatrix> candidates;
               for (const auto& d : found) candidates.push_back(d.a);
               const TiltLimitReport report = tilt_vs_limit_check(e, candidates, alpha, session.geo(), verify);
               j["verification"] = io::tilt_report_to_json(report);
               text += report.all_agree() ? "\npointwise check: agrees" : "\npointwise check: DISAGREES";
            }
            emit(text, j);
         }
      };
   });

   // bound
   std::int64_t rank = 0;
   std::string mustar, t0, variant = "torsion";
   auto* bound = app.add_subcommand("bound", "entry bound s0 (with --t0) or limit heart bound (with --alpha)");
   bound->add_option("--rank", rank, "rank of the sheaf")->required();
   bound->add_option("--mustar", mustar, "mu* extreme (rational)")->required();
   bound->add_option("--t0", t0, "t0 (rational); selects the entry bound");
   bound->add_option("--variant", variant, "limit heart bound variant")
      ->check(CLI::IsMember({"torsion", "torsion-free"}))
      ->capture_default_str();
   bound->callback([&] {
      action = [&] {
         const Rational mu = parse_rational(mustar);
         if (!t0.empty())
         {
            const Rational s0 = entry_bound_s0(rank, mu, parse_rational(t0), session.c);
            emit("s0 = " + to_string(s0), json{{"s0", io::rational_to_json(s0)}});
            return;
         }
         if (session.alpha.empty()) throw io::ParseError("bound: either --t0 or --alpha is required");
         const HeartBound hb =
            limit_heart_bound(rank, mu, session.alpha_value("bound"), session.c,
                              variant == "torsion" ? BoundVariant::torsion_class : BoundVariant::torsion_free_class);
         emit(std::string("s^2 ") + (hb.strict ? "> " : ">= ") + to_string(hb.s_squared),
              json{{"s_squared", io::rational_to_json(hb.s_squared)}, {"strict", hb.strict}});
      };
   });

   // disc
   std::string t_text, s_text;
   auto* disc = app.add_subcommand("disc", "discriminant at the polarisation (t, s)");
   add_matrix(disc, m1, "matrix", false);
   disc->add_option("--t", t_text, "t (rational)");
   disc->add_option("--s", s_text, "s (rational)");
   disc->callback([&] {
      action = [&] {
         const Polarization pol{required_rational(t_text, "--t", "disc"), required_rational(s_text, "--s", "disc")};
         for (const auto& m : gather(m1, in))
         {
            const Rational d = discriminant(m, pol, session.geo());
            emit(to_string(d), json{{"matrix", io::matrix_to_json(m)}, {"discriminant", io::rational_to_json(d)}});
         }
      };
   });

   // slopes
   auto* slopes = app.add_subcommand("slopes", "mu_f, mu*, and with --t --s also mu_omega and nu_omega");
   add_matrix(slopes, m1, "matrix", false);
   slopes->add_option("--t", t_text, "t (rational)");
   slopes->add_option("--s", s_text, "s (rational)");
   slopes->callback([&] {
      action = [&] {
         if (t_text.empty() != s_text.empty()) throw io::ParseError("slopes: --t and --s must be given together");
         std::optional<Polarization> pol;
         if (!t_text.empty()) pol = Polarization{parse_rational(t_text), parse_rational(s_text)};
         for (const auto& m : gather(m1, in))
         {
            std::vector<std::pair<std::string, ExtendedRational>> values{{"mu_f", slope_mu_f(m)},
                                                                        {"mu_star", slope_mu_star(m)}};
            if (pol)
            {
               values.emplace_back("mu_omega", slope_mu_omega(m, *pol, session.geo()));
               values.emplace_back("nu_omega", tilt_slope(m, *pol, session.geo()));
            }
            json j{{"matrix", io::matrix_to_json(m)}};
            std::vector<std::string> parts;
            for (const auto& [name, v] : values)
            {
               j[name] = to_string(v);
               parts.push_back(name + " = " + to_string(v));
            }
            emit(join(parts, "; "), j);
         }
      };
   });

   // eq12
   auto* eq12 = app.add_subcommand("eq12", "reference-class degree identity for ch(Phi(E)[1])");
   add_matrix(eq12, m1, "matrix", false);
   eq12->callback([&] {
      action = [&] {
         const Rational alpha = session.alpha_value("eq12");
         const Rational lambda = session.lambda_value("eq12");
         for (const auto& m : gather(m1, in))
         {
            const Eq12Sides sides = eq12_sides(m, alpha, lambda, session.geo());
            emit("lhs = " + to_string(sides.lhs) + "; rhs = " + to_string(sides.rhs) +
                    (sides.holds() ? "; holds" : "; FAILS"),
                 json{{"matrix", io::matrix_to_json(m)},
                      {"lhs", io::rational_to_json(sides.lhs)},
                      {"rhs", io::rational_to_json(sides.rhs)},
                      {"holds", sides.holds()}});
         }
      };
   });

   try
   {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
   }
   catch (const CLI::ParseError& e)
   {
      const int code = app.exit(e, out, err);
      return code == 0 ? kOk : kParseError;
   }

   try
   {
      if (action) action();
      return kOk;
   }
   catch (const InadmissibleCharge& e)
   {
      err << "error: " << e.what() << '\n';
      return kInadmissible;
   }
   catch (const std::invalid_argument& e)
   {
      err << "error: " << e.what() << '\n';
      return kParseError;
   }
   catch (const std::exception& e)
   {
      err << "error: " << e.what() << '\n';
      return kFailure;
   }
}

}  // namespace elliptic_tilt::cli
