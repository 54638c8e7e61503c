#include "inru/quasigroup.hpp"

#include <numeric>

namespace inru::qg {

bool has_proper_subquasigroup(const Quasigroup& q)
{
  const std::size_t n = q.order();
  for (std::size_t a = 0; a < n; a++) {
    std::vector<bool> in(n, false);
    std::vector<Element> members{static_cast<Element>(a)};
    in[a] = true;
    // grow until closed; each new element is multiplied against all members
    for (std::size_t done = 0; done < members.size(); done++) {
      const Element x = members[done];
      for (std::size_t k = 0; k <= done; k++) {
        const Element y = members[k];
        for (Element p : {q.mul(x, y), q.mul(y, x)}) {
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
          }
        }
      }
    }
    if (members.size() < n) {
      return true;
    }
  }
  return false;
}

MedialityResult is_medial(const Quasigroup& q)
{
  const std::size_t n = q.order();
  for (std::size_t x = 0; x < n; x++) {
    for (std::size_t y = 0; y < n; y++) {
      const Element xy = q.mul(static_cast<Element>(x), static_cast<Element>(y));
      for (std::size_t u = 0; u < n; u++) {
        const Element xu = q.mul(static_cast<Element>(x), static_cast<Element>(u));
        for (std::size_t v = 0; v < n; v++) {
          const Element uv = q.mul(static_cast<Element>(u), static_cast<Element>(v));
          const Element yv = q.mul(static_cast<Element>(y), static_cast<Element>(v));
          if (q.mul(xy, uv) != q.mul(xu, yv)) {
            return {false,
                    std::array<Element, 4>{static_cast<Element>(x), static_cast<Element>(y),
                                           static_cast<Element>(u), static_cast<Element>(v)}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

class DisjointSets
{
public:
  explicit DisjointSets(std::size_t n)
    : parent_(n)
    , classes_(n)
  {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }

  Element find(Element x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Element a, Element b)
  {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    parent_[b] = a;
    classes_--;
    return true;
  }

  std::size_t classes() const { return classes_; }

private:
  std::vector<Element> parent_;
  std::size_t classes_;
};

// Smallest congruence containing (a, b). Every merge records its generating
// pair; translating the generating pairs by every element under all three
// operations is enough, since equivalence classes are spanned by those pairs.
bool principal_congruence_is_full(const Quasigroup& q, Element a, Element b)
{
  const std::size_t n = q.order();
  DisjointSets sets(n);
  std::vector<std::pair<Element, Element>> pending{{a, b}};
  sets.unite(a, b);

  auto relate = [&](Element x, Element y) {
    if (sets.unite(x, y)) {
      pending.emplace_back(x, y);
    }
  };

  while (!pending.empty() && sets.classes() > 1) {
    const auto [x, y] = pending.back();
    pending.pop_back();
    for (std::size_t t = 0; t < n; t++) {
      const auto z = static_cast<Element>(t);
      relate(q.mul(x, z), q.mul(y, z));
      relate(q.mul(z, x), q.mul(z, y));
      relate(q.ldiv(x, z), q.ldiv(y, z));
      relate(q.ldiv(z, x), q.ldiv(z, y));
      relate(q.rdiv(x, z), q.rdiv(y, z));
      relate(q.rdiv(z, x), q.rdiv(z, y));
    }
  }
  return sets.classes() == 1;
}

} // namespace

bool is_simple(const Quasigroup& q)
{
  const std::size_t n = q.order();
  for (std::size_t a = 0; a < n; a++) {
    for (std::size_t b = a + 1; b < n; b++) {
      if (!principal_congruence_is_full(q, static_cast<Element>(a), static_cast<Element>(b))) {
        return false;
      }
    }
  }
  return true;
}

} // namespace inru::qg
