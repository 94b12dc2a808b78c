#include "ample/io.hpp"

#include "ample/error.hpp"

#include <limits>

namespace ample {

namespace {

template <class F>
auto parsing(const char* what, F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid ") + what + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

// nlohmann converts floats to integers silently; reject them instead.
Integer integer(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<Integer>();
}

int small_integer(const Json& j) {
  const Integer v = integer(j);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError("integer out of range: " + j.dump());
  return static_cast<int>(v);
}

std::vector<Integer> integers(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(integer(v));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

BaseSequence base_or(const Json& j, const BaseSequence& fallback) {
  if (j.is_object() && j.contains("base")) return base_from_json(j.at("base")).with_depth_limit(fallback.depth_limit());
  return fallback;
}

}  // namespace

Json to_json(const BaseSequence& base) {
  return Json{{"pre", base.pre_period()}, {"period", base.period()}};
}

BaseSequence base_from_json(const Json& j) {
  return parsing("base", [&] {
    if (j.is_number_integer()) return BaseSequence(integer(j));
    return BaseSequence(integers(field(j, "pre")), integers(field(j, "period")));
  });
}

Json to_json(const ClopenSet& u) { return Json{{"depth", u.depth()}, {"residues", u.residues()}}; }

ClopenSet clopen_from_json(const Json& j, const BaseSequence& base) {
  return parsing("clopen set", [&] {
    return ClopenSet(base, small_integer(field(j, "depth")), integers(field(j, "residues")));
  });
}

Json to_json(const Point& x) { return Json{{"pre", x.pre_digits()}, {"period", x.period_digits()}}; }

Point point_from_json(const Json& j, const BaseSequence& base) {
  return parsing("point", [&] {
    if (j.is_number_integer()) return Point::from_integer(base, integer(j));
    return Point(base, integers(field(j, "pre")), integers(field(j, "period")));
  });
}

Json to_json(const Permutation& p) { return Json(p.images()); }

Permutation permutation_from_json(const Json& j) {
  return parsing("permutation", [&] { return Permutation(integers(j)); });
}

Json to_json(const TfgElement& g) {
  return Json{{"base", to_json(g.base())}, {"depth", g.depth()}, {"cocycle", g.cocycle()}};
}

TfgElement element_from_json(const Json& j, const BaseSequence& base) {
  return parsing("element", [&] {
    return TfgElement(base_or(j, base), small_integer(field(j, "depth")), integers(field(j, "cocycle")));
  });
}

Json to_json(const WreathForm& w) {
  return Json{{"depth", w.depth}, {"sigma", to_json(w.sigma)}, {"carry", w.carry}};
}

Json to_json(const GenPermSpec& spec) {
  Json maps = Json::array();
  for (const auto& f : spec.maps()) maps.push_back(to_json(f));
  return Json{{"u", to_json(spec.u())}, {"maps", maps}, {"pi", to_json(spec.pi())}};
}

GenPermSpec genperm_from_json(const Json& j, const BaseSequence& base) {
  return parsing("generalized permutation", [&] {
    const BaseSequence b = base_or(j, base);
    std::vector<TfgElement> maps;
    for (const auto& m : field(j, "maps")) maps.push_back(element_from_json(m, b));
    return GenPermSpec(clopen_from_json(field(j, "u"), b), std::move(maps),
                       permutation_from_json(field(j, "pi")));
  });
}

Json to_json(const TwoCycleSpec& spec) { return Json{{"u", to_json(spec.u())}, {"g", to_json(spec.g())}}; }

TwoCycleSpec two_cycle_from_json(const Json& j, const BaseSequence& base) {
  return parsing("2-cycle", [&] {
    const BaseSequence b = base_or(j, base);
    return TwoCycleSpec(clopen_from_json(field(j, "u"), b), element_from_json(field(j, "g"), b));
  });
}

Json to_json(const KRPartition& kr) {
  Json towers = Json::array();
  for (const auto& [height, levels] : kr.towers) {
    Json ls = Json::array();
    for (const auto& level : levels) ls.push_back(to_json(level));
    towers.push_back(Json{{"height", height}, {"levels", ls}});
  }
  return Json{{"u", to_json(kr.u)}, {"g", to_json(kr.g)}, {"towers", towers}};
}

Json to_json(const Certificate& c) {
  Json factors = Json::array();
  for (const auto& f : c.factors) factors.push_back(Json{{"tag", to_string(f.tag)}, {"element", to_json(f.element)}});
  return Json{{"target", to_json(c.target)}, {"u1", to_json(c.u1)}, {"u2", to_json(c.u2)}, {"factors", factors}};
}

Certificate certificate_from_json(const Json& j, const BaseSequence& base) {
  return parsing("certificate", [&] {
    const TfgElement target = element_from_json(field(j, "target"), base);
    const BaseSequence& b = target.base();
    Certificate c{target, clopen_from_json(field(j, "u1"), b), clopen_from_json(field(j, "u2"), b), {}};
    for (const auto& f : field(j, "factors")) {
      const auto tag = field(f, "tag").get<std::string>();
      if (tag != "U1" && tag != "U2") throw ParseError("factor tag must be U1 or U2");
      c.factors.push_back({tag == "U1" ? Tag::U1 : Tag::U2, element_from_json(field(f, "element"), b)});
    }
    return c;
  });
}

Json to_json(const TorsionFactorization& t) {
  return Json{{"input", to_json(t.input)}, {"t1", to_json(t.t1)}, {"t2", to_json(t.t2)},
              {"order1", t.order1}, {"order2", t.order2}};
}

Json to_json(const StabilizerClass& c) {
  Json j{{"class", to_string(c.kind)}, {"orbits", c.orbits}};
  if (c.kind == StabilizerKind::ReducesTo) j["reduced"] = c.reduced;
  return j;
}

Json to_json(const NDConstruction& c) {
  Json stages = Json::array();
  for (const auto& s : c.stages)
    stages.push_back(Json{{"u", to_json(s.u)}, {"g", to_json(s.g)}, {"h", to_json(s.h)},
                          {"f1", to_json(s.f1)}, {"f2", to_json(s.f2)}});
  return Json{{"base", to_json(c.base)}, {"stages", stages}};
}

NDConstruction construction_from_json(const Json& j, const BaseSequence& base) {
  return parsing("construction", [&] {
    NDConstruction c{base_or(j, base), {}};
    for (const auto& s : field(j, "stages")) {
      NDStage stage = make_stage(clopen_from_json(field(s, "u"), c.base), element_from_json(field(s, "g"), c.base),
                                 element_from_json(field(s, "h"), c.base));
      if (s.contains("f1")) stage.f1 = element_from_json(s.at("f1"), c.base);
      if (s.contains("f2")) stage.f2 = element_from_json(s.at("f2"), c.base);
      c.stages.push_back(std::move(stage));
    }
    return c;
  });
}

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace ample
