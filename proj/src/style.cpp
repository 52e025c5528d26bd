#include <algorithm>
#include <cstdint>
#include <map>

#include "diagc/render.hpp"

namespace diagc {

ArrowStyle decode_style(std::string_view token) {
  std::string t;
  for (char c : token)
    if (c != ' ' && c != '\t') t += c;

  if (!t.empty() && t[0] == '@') {
    ArrowStyle s;
    s.raw = std::string(token);
    return s;
  }

  static const std::map<std::string, ArrowStyle, std::less<>> table = {
      {">", {Tail::None, Body::Solid, Head::Normal, {}, true}},
      {"->", {Tail::None, Body::Solid, Head::Normal, {}, true}},
      {">->", {Tail::Hook, Body::Solid, Head::Normal, {}, true}},
      {"->>", {Tail::None, Body::Solid, Head::Double, {}, true}},
      {"<-", {Tail::HeadAtTail, Body::Solid, Head::None, {}, true}},
      {"<-<", {Tail::HeadAtTail, Body::Solid, Head::Hook, {}, true}},
      {"<<-", {Tail::DoubleHeadAtTail, Body::Solid, Head::None, {}, true}},
      {"=", {Tail::None, Body::Equals, Head::None, {}, true}},
      {"=>", {Tail::None, Body::Double, Head::Normal, {}, true}},
      {"-->", {Tail::None, Body::Dashed, Head::Normal, {}, true}},
      {".>", {Tail::None, Body::Dotted, Head::Normal, {}, true}},
  };
  if (auto it = table.find(t); it != table.end()) return it->second;
  ArrowStyle s;
  s.known = false;
  return s;
}

ArrowStyle decode_style_for(const std::string& token, std::string_view backend, std::vector<Diagnostic>* warnings) {
  ArrowStyle s = decode_style(token);
  if (warnings && s.raw)
    warnings->push_back({Severity::Warning, {},
                         "raw style '" + token + "' is not supported by the " + std::string(backend) +
                             " backend; drawn solid"});
  if (warnings && !s.known)
    warnings->push_back({Severity::Warning, {}, "unknown arrow style '" + token + "'; drawn solid"});
  return s;
}

std::string format_decimal(Ratio r) {
  std::int64_t num = r.num(), den = r.den();
  std::int64_t d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  int places = std::max(twos, fives);
  if (d != 1 || places > 6) {
    places = 6;
    num = round_half_away(num * 1000000, den);
    den = 1000000;
  } else {
    std::int64_t p10 = 1;
    for (int i = 0; i < places; ++i) p10 *= 10;
    num *= p10 / den;
    den = p10;
  }
  bool neg = num < 0;
  std::uint64_t mag = neg ? static_cast<std::uint64_t>(-num) : static_cast<std::uint64_t>(num);
  std::string whole = std::to_string(mag / static_cast<std::uint64_t>(den));
  std::string frac = std::to_string(mag % static_cast<std::uint64_t>(den));
  if (places > 0) frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (neg && (mag != 0)) ? "-" : "";
  out += whole;
  if (places > 0 && !frac.empty()) out += "." + frac;
  return out;
}

}  // namespace diagc
