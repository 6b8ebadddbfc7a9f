#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace morsecat {

// Failure classes, aligned with the CLI exit codes: input errors (bad
// documents, axiom violations, rejected vector fields) map to 1, filtration
// dead-ends and broken internal invariants map to 3.  Hypothesis violations
// (exit 2) are reported through verdict structs, never thrown.
enum class ErrorClass { input = 1, internal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& message)
      : std::runtime_error(message), class_(cls) {}

  ErrorClass error_class() const noexcept { return class_; }

 private:
  ErrorClass class_;
};

namespace detail {

inline std::string join_ids(const std::vector<std::string>& ids,
                            const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += separator;
    out += ids[i];
  }
  return out;
}

}  // namespace detail

struct ParseError : Error {
  ParseError(std::size_t byte, const std::string& message)
      : Error(ErrorClass::input,
              "parse error at byte " + std::to_string(byte) + ": " + message),
        byte(byte) {}
  std::size_t byte;
};

struct DuplicateId : Error {
  explicit DuplicateId(const std::string& id)
      : Error(ErrorClass::input, "duplicate id: " + id), id(id) {}
  std::string id;
};

struct DanglingReference : Error {
  DanglingReference(const std::string& id, const std::string& context)
      : Error(ErrorClass::input,
              "dangling reference to '" + id + "' in " + context),
        id(id) {}
  std::string id;
};

struct InvalidCategory : Error {
  explicit InvalidCategory(const std::string& message)
      : Error(ErrorClass::input, message) {}
};

struct BadEndpoints : Error {
  explicit BadEndpoints(const std::string& message)
      : Error(ErrorClass::input, "bad endpoints: " + message) {}
};

struct MissingComposition : Error {
  MissingComposition(const std::string& g, const std::string& f)
      : Error(ErrorClass::input,
              "missing composition entry for (" + g + ") o (" + f + ")"),
        g(g),
        f(f) {}
  std::string g, f;
};

struct NonAssociative : Error {
  NonAssociative(const std::string& h, const std::string& g,
                 const std::string& f)
      : Error(ErrorClass::input, "non-associative composition witnessed by (" +
                                     h + ", " + g + ", " + f + ")"),
        h(h),
        g(g),
        f(f) {}
  std::string h, g, f;
};

struct CyclicCategory : Error {
  explicit CyclicCategory(std::vector<std::string> cycle_objects)
      : Error(ErrorClass::input,
              "directed cycle through objects: " +
                  detail::join_ids(cycle_objects, " -> ")),
        cycle(std::move(cycle_objects)) {}
  std::vector<std::string> cycle;
};

struct UnknownObject : Error {
  explicit UnknownObject(const std::string& id)
      : Error(ErrorClass::input, "unknown object: " + id), id(id) {}
  std::string id;
};

struct NotGraded : Error {
  NotGraded(const std::string& arrow_id, int jump)
      : Error(ErrorClass::input, "not graded: indecomposable arrow '" +
                                     arrow_id + "' raises degree by " +
                                     std::to_string(jump) + ", expected 1"),
        arrow(arrow_id),
        jump(jump) {}
  std::string arrow;
  int jump;
};

struct InvalidFunctor : Error {
  explicit InvalidFunctor(const std::string& message)
      : Error(ErrorClass::input, "invalid functor: " + message) {}
};

// Vector field rejections, one per condition of the definition.
struct NotIndecomposable : Error {
  explicit NotIndecomposable(const std::string& arrow_id)
      : Error(ErrorClass::input,
              "vector '" + arrow_id + "' is not an indecomposable arrow"),
        arrow(arrow_id) {}
  std::string arrow;
};

struct SourceTargetClash : Error {
  SourceTargetClash(const std::string& f, const std::string& g)
      : Error(ErrorClass::input, "vector field condition 1 violated: source of '" +
                                     f + "' equals target of '" + g + "'"),
        f(f),
        g(g) {}
  std::string f, g;
};

struct UniquenessViolation : Error {
  UniquenessViolation(const std::string& f, const std::string& other)
      : Error(ErrorClass::input,
              "vector field condition 2 violated: '" + f +
                  "' has a unique arrow type but shares an endpoint with "
                  "vector '" +
                  other + "'"),
        f(f),
        other(other) {}
  std::string f, other;
};

struct FullParallelClass : Error {
  FullParallelClass(const std::string& src, const std::string& tgt)
      : Error(ErrorClass::input,
              "vector field condition 3 violated: every arrow of type " + src +
                  " -> " + tgt + " is in the field"),
        src(src),
        tgt(tgt) {}
  std::string src, tgt;
};

struct DegreeMismatch : Error {
  DegreeMismatch(const std::string& object, int declared, int computed)
      : Error(ErrorClass::input,
              "declared degree " + std::to_string(declared) + " for object '" +
                  object + "' does not match computed degree " +
                  std::to_string(computed)),
        object(object),
        declared(declared),
        computed(computed) {}
  std::string object;
  int declared, computed;
};

struct CyclicRelation : Error {
  explicit CyclicRelation(std::vector<std::string> cycle_objects)
      : Error(ErrorClass::input,
              "poset relations contain a cycle: " +
                  detail::join_ids(cycle_objects, " < ")),
        cycle(std::move(cycle_objects)) {}
  std::vector<std::string> cycle;
};

struct FiltrationStuck : Error {
  explicit FiltrationStuck(std::vector<std::string> frontier_objects)
      : Error(ErrorClass::internal,
              "filtration stuck: no step applies at frontier {" +
                  detail::join_ids(frontier_objects, ", ") + "}"),
        frontier(std::move(frontier_objects)) {}
  std::vector<std::string> frontier;
};

struct InternalError : Error {
  explicit InternalError(const std::string& message)
      : Error(ErrorClass::internal, "internal invariant breach: " + message) {}
};

}  // namespace morsecat
