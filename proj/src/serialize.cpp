#include "kleinvcy/serialize.hpp"

#include <sstream>

namespace kleinvcy {

Json encode(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return to_string(x);
}

Json encode(const Rational& q) { return to_string(q); }

Json encode(const GroupElement& g) { return Json::array({encode(g.n), encode(g.m)}); }

Json encode(const PlanePoint& p) { return Json::array({encode(p.t), encode(p.r)}); }

Json encode(const CyclicSubgroup& s) { return Json{{"generator", encode(s.generator())}}; }

Json encode(const Line& l) {
  return Json{{"slope", l.is_vertical() ? Json("inf") : encode(l.slope())}, {"intercept", encode(l.intercept())}};
}

Json encode(const CommClass& c) {
  Json j{{"tag", to_string(c.tag)}};
  if (c.rep) j["rep"] = encode(*c.rep);
  return j;
}

Json encode(const SubgroupFamily& f) {
  Json j{{"kind", to_string(f.kind())}};
  if (f.ambient()) j["subgroup"] = encode(*f.ambient());
  return j;
}

Json encode(const FixedSet& f) {
  Json j{{"kind", to_string(f.kind())}};
  if (f.kind() == FixedSet::Kind::SlopeFamily) j["slope"] = encode(f.slope());
  if (f.kind() == FixedSet::Kind::SinglePoint) j["line"] = encode(*f.line());
  j["contractible"] = f.contractible();
  return j;
}

Json encode(const AbelianGroup& a) {
  Json j = Json::object();
  if (a.rank() != 0) j["rank"] = a.rank();
  if (!a.torsion().empty()) {
    Json t = Json::array();
    for (const auto& d : a.torsion()) t.push_back(encode(d));
    j["torsion"] = std::move(t);
  }
  return j;
}

Json encode(const GradedGroups& h) {
  Json j = Json::object();
  const std::size_t n = std::max<std::size_t>(h.length(), 1);
  for (std::size_t d = 0; d < n; ++d) j[std::to_string(d)] = encode(h.at(d));
  return j;
}

Json encode(const ModelDescriptor& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces) {
    Json j{{"label", p.label}, {"kind", to_string(p.kind)}, {"space", p.space}, {"action", p.action},
           {"attaching_map", p.attaching_map}};
    if (p.cls) j["class"] = encode(*p.cls);
    if (p.commensurator) j["commensurator"] = to_string(*p.commensurator);
    if (p.family) j["family"] = encode(*p.family);
    pieces.push_back(std::move(j));
  }
  return Json{{"kind", to_string(d.kind)},
              {"counts",
               {{"H", d.count(PieceKind::HLine)}, {"K", d.count(PieceKind::KJoin)}, {"R", d.count(PieceKind::RLine)},
                {"slope_families", d.count(PieceKind::SlopeFamily)}}},
              {"pieces", std::move(pieces)},
              {"identification", d.identification}};
}

namespace {

template <typename T>
std::string streamed(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::string text(const GroupElement& g) { return streamed(g); }
std::string text(const PlanePoint& p) { return streamed(p); }
std::string text(const CyclicSubgroup& s) { return streamed(s); }
std::string text(const Line& l) { return streamed(l); }
std::string text(const CommClass& c) { return streamed(c); }
std::string text(const FixedSet& f) { return streamed(f); }

std::string text(const SubgroupFamily& f) {
  std::string out = to_string(f.kind());
  if (f.ambient()) out += "(" + text(*f.ambient()) + ")";
  return out;
}

Line parse_line(std::string_view slope, std::string_view intercept) {
  Rational b = parse_rational(intercept);
  if (slope == "inf") return Line::vertical(std::move(b));
  return Line::finite(parse_rational(slope), std::move(b));
}

}  // namespace kleinvcy
