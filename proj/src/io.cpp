#include "elliptic_tilt/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace elliptic_tilt::io {

namespace {

std::string_view trim(std::string_view s)
{
   while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
   while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
   return s;
}

std::int64_t parse_entry(std::string_view token, std::string_view whole)
{
   token = trim(token);
   if (!token.empty() && token.front() == '+') token.remove_prefix(1);
   std::int64_t value = 0;
   auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
   if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("malformed Chern matrix entry '" + std::string(token) + "' in '" + std::string(whole) +
                       "' (expected \"a00,a01,a02;a10,a11,a12\")");
   return value;
}

int parse_exponent(std::string_view token, std::string_view whole)
{
   int value = 0;
   auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
   if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("malformed exponent in Laurent polynomial '" + std::string(whole) + "'");
   return value;
}

}  // namespace

ChernMatrix parse_matrix(std::string_view text)
{
   const std::string_view whole = text;
   text = trim(text);
   auto semi = text.find(';');
   if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
      throw ParseError("Chern matrix '" + std::string(whole) + "' must have exactly two rows separated by ';'");
   std::array<std::int64_t, 6> entries{};
   std::size_t k = 0;
   for (std::string_view row : {text.substr(0, semi), text.substr(semi + 1)})
   {
      std::size_t count = 0;
      while (true)
      {
         auto comma = row.find(',');
         std::string_view token = row.substr(0, comma);
         if (count == 3) throw ParseError("Chern matrix row with more than three entries in '" + std::string(whole) + "'");
         entries[k++] = parse_entry(token, whole);
         ++count;
         if (comma == std::string_view::npos) break;
         row.remove_prefix(comma + 1);
      }
      if (count != 3) throw ParseError("Chern matrix row with fewer than three entries in '" + std::string(whole) + "'");
   }
   return ChernMatrix(entries);
}

std::string format_matrix(const ChernMatrix& m)
{
   std::string out;
   for (std::size_t k = 0; k < 6; ++k)
   {
      if (k == 3) out += ';';
      else if (k > 0) out += ',';
      out += std::to_string(m.flat()[k]);
   }
   return out;
}

json matrix_to_json(const ChernMatrix& m)
{
   return json{{"m", {{m.a00(), m.a01(), m.a02()}, {m.a10(), m.a11(), m.a12()}}}};
}

ChernMatrix matrix_from_json(const json& j)
{
   if (!j.is_object() || !j.contains("m")) throw ParseError("Chern matrix JSON must be an object with key \"m\"");
   const json& rows = j.at("m");
   if (!rows.is_array() || rows.size() != 2) throw ParseError("Chern matrix JSON \"m\" must hold two rows");
   std::array<std::int64_t, 6> entries{};
   for (std::size_t i = 0; i < 2; ++i)
   {
      if (!rows[i].is_array() || rows[i].size() != 3) throw ParseError("Chern matrix JSON rows must hold three entries");
      for (std::size_t jj = 0; jj < 3; ++jj)
      {
         const json& v = rows[i][jj];
         if (!v.is_number_integer()) throw ParseError("Chern matrix JSON entries must be integers");
         if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ParseError("Chern matrix JSON entry out of range");
         entries[i * 3 + jj] = v.get<std::int64_t>();
      }
   }
   return ChernMatrix(entries);
}

std::string format_laurent(const LaurentPoly& p)
{
   if (p.is_zero()) return "0";
   std::string out;
   bool first = true;
   for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
   {
      const auto& [e, c] = *it;
      const bool negative = sgn(c) < 0;
      if (first) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      out += to_string(abs_value(c)) + "*s^" + std::to_string(e);
      first = false;
   }
   return out;
}

LaurentPoly parse_laurent(std::string_view text)
{
   std::string compact;
   for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
   if (compact.empty()) throw ParseError("empty Laurent polynomial");

   LaurentPoly p;
   std::size_t pos = 0;
   const std::size_t n = compact.size();
   while (pos < n)
   {
      int sign = 1;
      bool saw_sign = false;
      while (pos < n && (compact[pos] == '+' || compact[pos] == '-'))
      {
         if (compact[pos] == '-') sign = -sign;
         saw_sign = true;
         ++pos;
      }
      if (pos == n) throw ParseError("dangling sign in Laurent polynomial '" + std::string(text) + "'");
      if (!saw_sign && pos != 0) throw ParseError("missing operator in Laurent polynomial '" + std::string(text) + "'");
      std::size_t end = pos;
      while (end < n && !((compact[end] == '+' || compact[end] == '-') && compact[end - 1] != '^')) ++end;
      std::string_view term(compact.data() + pos, end - pos);
      pos = end;

      Rational coefficient = 1;
      int exponent = 0;
      if (auto spos = term.find('s'); spos != std::string_view::npos)
      {
         std::string_view left = term.substr(0, spos);
         std::string_view right = term.substr(spos + 1);
         if (!left.empty())
         {
            if (left.back() != '*') throw ParseError("expected '*' before 's' in '" + std::string(text) + "'");
            left.remove_suffix(1);
            try { coefficient = parse_rational(left); }
            catch (const std::invalid_argument& ex) { throw ParseError(ex.what()); }
         }
         if (right.empty()) exponent = 1;
         else if (right.front() == '^') exponent = parse_exponent(right.substr(1), text);
         else throw ParseError("expected '^' after 's' in '" + std::string(text) + "'");
      }
      else
      {
         try { coefficient = parse_rational(term); }
         catch (const std::invalid_argument& ex) { throw ParseError(ex.what()); }
      }
      p.add_term(sign < 0 ? Rational(-coefficient) : coefficient, exponent);
   }
   return p;
}

json laurent_to_json(const LaurentPoly& p)
{
   json terms = json::array();
   for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
      terms.push_back(json::array({it->first, to_string(it->second)}));
   return json{{"terms", terms}};
}

LaurentPoly laurent_from_json(const json& j)
{
   if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
      throw ParseError("Laurent JSON must be an object with array \"terms\"");
   LaurentPoly p;
   for (const json& term : j.at("terms"))
   {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
         throw ParseError("Laurent JSON terms must be [exponent, \"p/q\"] pairs");
      p.add_term(rational_from_json(term[1]), term[0].get<int>());
   }
   return p;
}

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j)
{
   if (!j.is_string()) throw ParseError("rationals are serialized as \"p/q\" strings");
   try { return parse_rational(j.get<std::string>()); }
   catch (const std::invalid_argument& ex) { throw ParseError(ex.what()); }
}

json root_to_json(const RootCertificate& root)
{
   json out{{"multiplicity", root.multiplicity}};
   if (root.exact)
   {
      out["exact"] = rational_to_json(root.lo);
   }
   else
   {
      out["interval"] = json::array({rational_to_json(root.lo), rational_to_json(root.hi)});
      out["signs"] = json::array({root.sign_lo, root.sign_hi});
   }
   return out;
}

std::string format_root(const RootCertificate& root)
{
   std::string out = root.exact ? "s = " + to_string(root.lo)
                                : "s in (" + to_string(root.lo) + ", " + to_string(root.hi) + ")";
   if (root.multiplicity != 1) out += " [multiplicity " + std::to_string(root.multiplicity) + "]";
   return out;
}

json charge_to_json(const ReducedCharge& z)
{
   return json{{"re", laurent_to_json(z.re)}, {"im", laurent_to_json(z.im)}};
}

json phase_limit_to_json(const PhaseLimit& limit)
{
   static const char* kinds[] = {"zero_charge", "half", "minus_half", "interior"};
   static const char* approaches[] = {"from_above", "exact", "from_below", "not_applicable"};
   json out{{"kind", kinds[static_cast<int>(limit.kind)]},
            {"approach", approaches[static_cast<int>(limit.approach)]},
            {"display", format_phase_limit(limit)}};
   if (limit.kind == PhaseKind::interior) out["tangent"] = rational_to_json(limit.tangent);
   return out;
}

json wall_report_to_json(const WallReport& report)
{
   json roots = json::array();
   for (const auto& r : report.roots) roots.push_back(root_to_json(r));
   json out{{"a", matrix_to_json(report.a)},
            {"e", matrix_to_json(report.e)},
            {"cross", laurent_to_json(report.cross)},
            {"roots", roots},
            {"safe_s", rational_to_json(report.safe_s)}};
   if (report.proportional) out["no_wall"] = "proportional phases";
   return out;
}

json destabilizers_to_json(const ChernMatrix& e, const std::vector<Destabilizer>& found)
{
   json candidates = json::array();
   for (const auto& d : found)
      candidates.push_back(json{{"candidate", matrix_to_json(d.a)}, {"verdict", to_string(d.verdict)}});
   return json{{"e", matrix_to_json(e)}, {"candidates", candidates}};
}

json tilt_report_to_json(const TiltLimitReport& report)
{
   json checks = json::array();
   for (const auto& c : report.checks)
   {
      json samples = json::array();
      for (const auto& s : c.samples)
         samples.push_back(json{{"s", rational_to_json(s.s)},
                                {"nu_a", to_string(s.nu_a)},
                                {"nu_e", to_string(s.nu_e)},
                                {"agrees", s.agrees}});
      json entry{{"candidate", matrix_to_json(c.a)}, {"agrees", c.agrees}, {"samples", samples}};
      if (c.asymptotic) entry["asymptotic"] = to_string(*c.asymptotic);
      if (c.asymptotic) entry["safe_s"] = rational_to_json(c.safe_s);
      if (!c.note.empty()) entry["note"] = c.note;
      checks.push_back(std::move(entry));
   }
   return json{{"checks", checks}, {"all_agree", report.all_agree()}};
}

}  // namespace elliptic_tilt::io
