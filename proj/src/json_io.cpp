#include "affw/json_io.hpp"

#include <string>

namespace affw {

namespace {

[[noreturn]] void fail(const std::string& what, const Json& j) {
  throw JsonInputError(what + ", got " + j.dump());
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer", j);
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"", j);
  return j.at(key);
}

std::string dir_key(FiniteRoot r) { return std::to_string(r.a) + "," + std::to_string(r.b); }

}  // namespace

Json encode(FiniteRoot r) { return Json::array({r.a, r.b}); }

Json encode(AffineRoot r) {
  Json j;
  j["dir"] = encode(r.dir);
  j["level"] = r.level;
  return j;
}

Json encode(const EPSet& s) {
  Json j = Json::object();
  const RootSystem& rs = s.system();
  for (int i = 0; i < s.ndirs(); ++i) {
    const LevelSet& l = s.at(i);
    if (l.empty()) continue;
    if (!l.is_interval()) throw std::logic_error("EPSet direction is not an interval");
    Json d;
    d["kind"] = l.infinite() ? "ray" : "finite";
    d["lo"] = l.min();
    if (!l.infinite()) d["hi"] = l.max();
    j[dir_key(rs.roots()[i])] = d;
  }
  return j;
}

Json encode_simple(SimpleSet s) {
  Json j = Json::array();
  for (int i = 0; i < 2; ++i)
    if (s >> i & 1) j.push_back(i);
  return j;
}

Json encode(const BiclosedCanonical& c) {
  Json j;
  j["w"] = c.w;
  j["L"] = encode_simple(c.L);
  j["K"] = encode_simple(c.K);
  return j;
}

Json encode(const WBar& x) {
  if (x.finite()) return Json(x.w);
  Json j;
  j["w"] = x.w;
  j["L"] = encode_simple(x.L);
  return j;
}

Json encode(const BElement& b) {
  Json j;
  j["kind"] = b.coinv ? "coinv" : "inv";
  j["word"] = encode(b.x);
  return j;
}

Json encode_roots(const std::vector<AffineRoot>& roots) {
  Json j = Json::array();
  for (AffineRoot r : roots) j.push_back(encode(r));
  return j;
}

Json encode(const Plane& p) { return Json(p.normal); }

Json encode(const Move& m) {
  Json j;
  j["plane"] = encode(m.block.plane);
  j["range"] = Json::array({m.block.begin, m.block.end});
  j["infinite"] = m.block.plane.infinite();
  j["result"] = encode_roots(m.result);
  return j;
}

FiniteRoot decode_finite(RootType t, const Json& j) {
  if (!j.is_array() || j.size() != 2) fail("a root is a pair [a,b]", j);
  FiniteRoot r{as_int(j[0], "root coefficient"), as_int(j[1], "root coefficient")};
  if (!RootSystem::get(t).is_root(r)) fail("not a root of " + std::string(type_name(t)), j);
  return r;
}

AffineRoot decode_affine(RootType t, const Json& j) {
  AffineRoot r{decode_finite(t, field(j, "dir")), as_int(field(j, "level"), "level")};
  if (!is_positive(r)) fail("affine root must be positive", j);
  return r;
}

std::vector<AffineRoot> decode_roots(RootType t, const Json& j) {
  if (!j.is_array()) fail("expected an array of affine roots", j);
  std::vector<AffineRoot> out;
  for (const Json& e : j) out.push_back(decode_affine(t, e));
  return out;
}

EPSet decode_epset(RootType t, const Json& j) {
  if (!j.is_object()) fail("an EPSet is an object keyed by \"a,b\"", j);
  const RootSystem& rs = RootSystem::get(t);
  EPSet s(t);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    auto comma = key.find(',');
    FiniteRoot dir{};
    try {
      if (comma == std::string::npos) throw std::invalid_argument(key);
      dir = {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    } catch (const std::exception&) {
      fail("bad direction key \"" + key + "\"", j);
    }
    if (!rs.is_root(dir)) fail("direction \"" + key + "\" is not a root", j);
    const Json& d = it.value();
    const Json& kind = field(d, "kind");
    int lo = as_int(field(d, "lo"), "lo");
    if (lo < min_level(dir)) fail("level below the positive range in \"" + key + "\"", d);
    if (kind == "ray") {
      s.set(rs.index(dir), LevelSet::ray(lo));
    } else if (kind == "finite") {
      int hi = as_int(field(d, "hi"), "hi");
      if (hi < lo) fail("hi below lo in \"" + key + "\"", d);
      s.set(rs.index(dir), LevelSet::interval(lo, hi));
    } else {
      fail("kind must be \"finite\" or \"ray\"", d);
    }
  }
  return s;
}

SimpleSet decode_simple(const Json& j) {
  if (!j.is_array()) fail("a simple subset is an array of indices 0 (alpha) and 1 (beta)", j);
  SimpleSet s = 0;
  for (const Json& e : j) {
    int i = as_int(e, "simple index");
    if (i < 0 || i > 1) fail("simple index out of range", e);
    s |= static_cast<SimpleSet>(1 << i);
  }
  return s;
}

Word decode_word(const Json& j) {
  if (!j.is_array()) fail("a word is an array of generator indices", j);
  Word w;
  for (const Json& e : j) {
    int g = as_int(e, "generator");
    if (g < 0 || g >= kRank) fail("generator index out of range", e);
    w.push_back(g);
  }
  return w;
}

BiclosedCanonical decode_canonical(RootType t, const Json& j) {
  BiclosedCanonical c{t, decode_word(field(j, "w")), decode_simple(field(j, "L")), decode_simple(field(j, "K"))};
  const RootSystem& rs = RootSystem::get(t);
  if (!orthogonal(rs, rs.positive_systems()[0], c.L, c.K)) fail("L and K are not orthogonal", j);
  if (!is_reduced(t, c.w)) fail("word is not reduced", j);
  return c;
}

WBar decode_wbar(RootType t, const Json& j) {
  if (j.is_array()) {
    Word w = decode_word(j);
    if (!is_reduced(t, w)) fail("word is not reduced", j);
    return WBar::from_word(t, w);
  }
  if (j.is_object() && j.contains("period")) {
    Word p = j.contains("prefix") ? decode_word(j.at("prefix")) : Word{};
    Word q = decode_word(j.at("period"));
    try {
      return WBar::periodic(t, p, q);
    } catch (const std::exception& e) {
      fail(std::string("bad periodic word: ") + e.what(), j);
    }
  }
  Word w = decode_word(field(j, "w"));
  if (!is_reduced(t, w)) fail("word is not reduced", j);
  SimpleSet L = decode_simple(field(j, "L"));
  if (L == kAllSimple) return WBar::from_word(t, w);
  return WBar::infinite(t, w, L);
}

BElement decode_belement(RootType t, const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind != "inv" && kind != "coinv") fail("kind must be \"inv\" or \"coinv\"", j);
  return normalize(BElement{kind == "coinv", decode_wbar(t, field(j, "word"))});
}

}  // namespace affw
