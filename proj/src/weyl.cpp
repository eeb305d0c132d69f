#include "affw/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace affw {

AffineRoot simple_affine_root(RootType t, int s) {
  switch (s) {
    case 0: return {{1, 0}, 0};
    case 1: return {{0, 1}, 0};
    case 2: return {-RootSystem::get(t).highest(), 1};
  }
  throw std::invalid_argument("generator index must be 0, 1 or 2");
}

AffineElement AffineElement::generator(RootType t, int s) {
  const RootSystem& rs = RootSystem::get(t);
  AffineRoot r = simple_affine_root(t, s);
  int ca = rs.pairing({1, 0}, r.dir);
  int cb = rs.pairing({0, 1}, r.dir);
  AffineElement g;
  int col[3] = {r.dir.a, r.dir.b, r.level};
  for (int row = 0; row < 3; ++row) {
    g.m_[row * 3 + 0] -= col[row] * ca;
    g.m_[row * 3 + 1] -= col[row] * cb;
  }
  return g;
}

AffineElement AffineElement::from_word(RootType t, const Word& w) {
  AffineElement x;
  for (int s : w) x = x * generator(t, s);
  return x;
}

AffineRoot AffineElement::apply(AffineRoot r) const {
  int v[3] = {r.dir.a, r.dir.b, r.level};
  int o[3];
  for (int row = 0; row < 3; ++row) o[row] = m_[row * 3] * v[0] + m_[row * 3 + 1] * v[1] + m_[row * 3 + 2] * v[2];
  return {{o[0], o[1]}, o[2]};
}

AffineElement AffineElement::operator*(const AffineElement& o) const {
  AffineElement r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int acc = 0;
      for (int k = 0; k < 3; ++k) acc += m_[i * 3 + k] * o.m_[k * 3 + j];
      r.m_[i * 3 + j] = acc;
    }
  return r;
}

AffineElement AffineElement::inverse() const {
  // The finite block has determinant +-1 and the last row is (0, 0, 1) after the
  // level coordinate; invert by cofactors.
  const auto& m = m_;
  int det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
            m[2] * (m[3] * m[7] - m[4] * m[6]);
  AffineElement r;
  r.m_ = {(m[4] * m[8] - m[5] * m[7]) * det, (m[2] * m[7] - m[1] * m[8]) * det, (m[1] * m[5] - m[2] * m[4]) * det,
          (m[5] * m[6] - m[3] * m[8]) * det, (m[0] * m[8] - m[2] * m[6]) * det, (m[2] * m[3] - m[0] * m[5]) * det,
          (m[3] * m[7] - m[4] * m[6]) * det, (m[1] * m[6] - m[0] * m[7]) * det, (m[0] * m[4] - m[1] * m[3]) * det};
  return r;
}

std::vector<AffineRoot> inversion_roots(RootType t, const Word& w) {
  std::vector<AffineRoot> out;
  AffineElement prefix;
  for (int s : w) {
    out.push_back(prefix.apply(simple_affine_root(t, s)));
    prefix = prefix * AffineElement::generator(t, s);
  }
  return out;
}

bool is_reduced(RootType t, const Word& w) {
  for (int s : w)
    if (s < 0 || s >= kRank) return false;
  auto roots = inversion_roots(t, w);
  return std::all_of(roots.begin(), roots.end(), [](AffineRoot r) { return is_positive(r); });
}

Word lexmin_word(RootType t, const AffineElement& x) {
  Word out;
  AffineElement cur = x;
  const AffineElement id;
  while (!(cur == id)) {
    AffineElement inv = cur.inverse();
    int s = 0;
    for (; s < kRank; ++s)
      if (!is_positive(inv.apply(simple_affine_root(t, s)))) break;
    if (s == kRank) throw std::logic_error("element without left descent");
    out.push_back(s);
    cur = AffineElement::generator(t, s) * cur;
  }
  return out;
}

int length(RootType t, const AffineElement& x) { return static_cast<int>(lexmin_word(t, x).size()); }

Word reduce(RootType t, const Word& w) { return lexmin_word(t, AffineElement::from_word(t, w)); }

std::vector<ElementEntry> elements_up_to(RootType t, int max_len) {
  std::vector<ElementEntry> out{{AffineElement{}, {}}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::map<AffineElement, Word> next;
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      AffineElement inv = out[i].element.inverse();
      for (int s = 0; s < kRank; ++s) {
        if (!is_positive(inv.apply(simple_affine_root(t, s)))) continue;  // s is a left descent
        AffineElement y = AffineElement::generator(t, s) * out[i].element;
        Word wy{s};
        wy.insert(wy.end(), out[i].word.begin(), out[i].word.end());
        auto [it, fresh] = next.emplace(y, wy);
        if (!fresh && wy < it->second) it->second = wy;
      }
    }
    std::vector<ElementEntry> layer;
    for (auto& [e, w] : next) layer.push_back({e, w});
    std::sort(layer.begin(), layer.end(), [](const ElementEntry& a, const ElementEntry& b) { return a.word < b.word; });
    layer_begin = out.size();
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace affw
