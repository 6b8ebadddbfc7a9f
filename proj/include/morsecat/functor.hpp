#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "morsecat/category.hpp"

namespace morsecat {

// An arrow of a category, or an implicit identity at an object.  Needed
// wherever hom-sets are quantified over actual arrows (functor images,
// comparison arrows of fiber objects).
struct ArrowRef {
  bool identity = false;
  std::string value;  // arrow id, or the object carrying the identity

  static ArrowRef id_at(ObjectId object) { return {true, std::move(object)}; }
  static ArrowRef of(std::string arrow_id) {
    return {false, std::move(arrow_id)};
  }

  std::string display() const { return identity ? "id:" + value : value; }

  friend bool operator==(const ArrowRef&, const ArrowRef&) = default;
  friend auto operator<=>(const ArrowRef&, const ArrowRef&) = default;
};

namespace detail {

inline ObjectId ref_src(const LoopFreeCategory& cat, const ArrowRef& r) {
  return r.identity ? r.value : cat.arrow(r.value).src;
}
inline ObjectId ref_tgt(const LoopFreeCategory& cat, const ArrowRef& r) {
  return r.identity ? r.value : cat.arrow(r.value).tgt;
}

// later o earlier, with implicit identities absorbed.
inline ArrowRef compose_refs(const LoopFreeCategory& cat,
                             const ArrowRef& later, const ArrowRef& earlier) {
  if (ref_tgt(cat, earlier) != ref_src(cat, later))
    throw InternalError("compose_refs endpoint mismatch");
  if (earlier.identity) return later;
  if (later.identity) return earlier;
  return ArrowRef::of(cat.compose(later.value, earlier.value));
}

}  // namespace detail

// A functor between loop-free categories, stored as total object and arrow
// maps.  Arrows may land on implicit identities when the functor collapses
// endpoints.
struct FunctorMap {
  LoopFreeCategory domain;
  LoopFreeCategory codomain;
  std::map<ObjectId, ObjectId> object_map;
  std::map<std::string, ArrowRef> arrow_map;

  const ObjectId& object_image(const ObjectId& o) const {
    auto it = object_map.find(o);
    if (it == object_map.end()) throw UnknownObject(o);
    return it->second;
  }
  const ArrowRef& arrow_image(const std::string& arrow_id) const {
    auto it = arrow_map.find(arrow_id);
    if (it == arrow_map.end())
      throw DanglingReference(arrow_id, "functor arrow map");
    return it->second;
  }
};

// Checks functoriality: sources, targets, and all binary compositions are
// preserved (identities are implicit on both sides).
inline FunctorMap validate_functor(LoopFreeCategory domain,
                                   LoopFreeCategory codomain,
                                   std::map<ObjectId, ObjectId> object_map,
                                   std::map<std::string, ArrowRef> arrow_map) {
  FunctorMap f{std::move(domain), std::move(codomain), std::move(object_map),
               std::move(arrow_map)};

  for (const auto& o : f.domain.objects()) {
    auto it = f.object_map.find(o);
    if (it == f.object_map.end())
      throw InvalidFunctor("object '" + o + "' has no image");
    if (!f.codomain.has_object(it->second))
      throw InvalidFunctor("object image '" + it->second +
                           "' is not in the codomain");
  }

  for (const auto& a : f.domain.arrows()) {
    auto it = f.arrow_map.find(a.id);
    if (it == f.arrow_map.end())
      throw InvalidFunctor("arrow '" + a.id + "' has no image");
    const ArrowRef& image = it->second;
    const ObjectId& fs = f.object_image(a.src);
    const ObjectId& ft = f.object_image(a.tgt);
    if (image.identity) {
      if (fs != ft || image.value != fs)
        throw InvalidFunctor("arrow '" + a.id +
                             "' maps to an identity off its image endpoints");
    } else {
      if (!f.codomain.has_arrow(image.value))
        throw InvalidFunctor("arrow image '" + image.value +
                             "' is not in the codomain");
      const Arrow& im = f.codomain.arrow(image.value);
      if (im.src != fs || im.tgt != ft)
        throw InvalidFunctor("arrow '" + a.id + "' image endpoints disagree");
    }
  }

  for (const auto& [pair, h] : f.domain.compositions()) {
    ArrowRef expected = detail::compose_refs(
        f.codomain, f.arrow_image(pair.first), f.arrow_image(pair.second));
    if (!(f.arrow_image(h) == expected))
      throw InvalidFunctor("composition (" + pair.first + ", " + pair.second +
                           ") is not preserved");
  }
  return f;
}

inline FunctorMap identity_functor(const LoopFreeCategory& cat) {
  std::map<ObjectId, ObjectId> object_map;
  std::map<std::string, ArrowRef> arrow_map;
  for (const auto& o : cat.objects()) object_map[o] = o;
  for (const auto& a : cat.arrows()) arrow_map[a.id] = ArrowRef::of(a.id);
  return validate_functor(cat, cat, std::move(object_map),
                          std::move(arrow_map));
}

// Inclusion of a full subcategory, matching objects and arrows by id.
inline FunctorMap inclusion_functor(const LoopFreeCategory& sub,
                                    const LoopFreeCategory& cat) {
  std::map<ObjectId, ObjectId> object_map;
  std::map<std::string, ArrowRef> arrow_map;
  for (const auto& o : sub.objects()) object_map[o] = o;
  for (const auto& a : sub.arrows()) arrow_map[a.id] = ArrowRef::of(a.id);
  return validate_functor(sub, cat, std::move(object_map),
                          std::move(arrow_map));
}

enum class FiberSide { left, right };

// Homotopy fiber of a functor at a codomain object.  Objects are pairs
// (c, g) with g a comparison arrow (possibly an identity); arrows are the
// domain arrows compatible with the comparisons.
struct FiberCategory {
  FiberSide side = FiberSide::left;
  LoopFreeCategory category;
  // fiber object id -> (domain object, comparison arrow)
  std::map<std::string, std::pair<ObjectId, ArrowRef>> pairs;
};

inline FiberCategory homotopy_fiber(const FunctorMap& f, const ObjectId& d,
                                    FiberSide side) {
  if (!f.codomain.has_object(d)) throw UnknownObject(d);

  auto pair_id = [](const ObjectId& c, const ArrowRef& g) {
    return "(" + c + "," + (g.identity ? "id" : g.value) + ")";
  };

  FiberCategory fiber;
  fiber.side = side;

  CategoryData raw;
  for (const auto& c : f.domain.objects()) {
    const ObjectId& fc = f.object_image(c);
    std::vector<ArrowRef> comparisons;
    if (fc == d) comparisons.push_back(ArrowRef::id_at(d));
    const auto hom = side == FiberSide::left ? f.codomain.hom(fc, d)
                                             : f.codomain.hom(d, fc);
    for (const auto& g : hom) comparisons.push_back(ArrowRef::of(g));
    for (const auto& g : comparisons) {
      std::string id = pair_id(c, g);
      raw.objects.push_back(id);
      fiber.pairs[id] = {c, g};
    }
  }

  // An arrow (c,g) -> (c',g') for each domain arrow u: c -> c' whose image
  // pastes the two comparisons together.
  auto compatible = [&](const ArrowRef& image, const ArrowRef& g,
                        const ArrowRef& g_prime) {
    if (side == FiberSide::left)  // g' o F(u) = g
      return detail::compose_refs(f.codomain, g_prime, image) == g;
    // right: F(u) o g = g'
    return detail::compose_refs(f.codomain, image, g) == g_prime;
  };

  // The same domain arrow can connect one fiber object to several targets,
  // so both endpoints take part in the key and in the generated id.
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      fiber_arrow;
  std::map<std::string, std::string> underlying;
  for (const auto& [src_id, src_pair] : fiber.pairs) {
    for (const auto& [tgt_id, tgt_pair] : fiber.pairs) {
      if (src_id == tgt_id) continue;
      for (const auto& u : f.domain.hom(src_pair.first, tgt_pair.first)) {
        if (!compatible(f.arrow_image(u), src_pair.second, tgt_pair.second))
          continue;
        std::string id = u + "@" + src_id + ">" + tgt_id;
        raw.arrows.push_back({id, src_id, tgt_id});
        fiber_arrow[{src_id, tgt_id, u}] = id;
        underlying[id] = u;
      }
    }
  }

  // Compositions are inherited from the domain; functoriality guarantees
  // the composite satisfies the comparison condition.
  for (const auto& a1 : raw.arrows) {
    for (const auto& a2 : raw.arrows) {
      if (a2.src != a1.tgt) continue;
      const std::string& u21 =
          f.domain.compose(underlying.at(a2.id), underlying.at(a1.id));
      auto it = fiber_arrow.find({a1.src, a2.tgt, u21});
      if (it == fiber_arrow.end())
        throw InternalError("fiber composite is missing for (" + a2.id + ", " +
                            a1.id + ")");
      raw.compositions.push_back({a2.id, a1.id, it->second});
    }
  }

  fiber.category = validate_category(raw);
  return fiber;
}

}  // namespace morsecat
