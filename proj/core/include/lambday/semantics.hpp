#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lambday/term.hpp"
#include "lambday/type.hpp"

namespace lambday {

inline constexpr std::size_t kDefaultSizeLimit = 5000000;

class Model;

/// A point of the finite monotone-function hierarchy over Sierpinski
/// space {bot < top}.
///
/// Ground elements are a flag. Arrow elements carry a closure, a table, or
/// both. The table of an element of type s1 -> ... -> sn -> o lists its
/// ground results ('0' or '1') over all argument tuples, in the canonical
/// order of each argument domain, so two elements are equal exactly when
/// their tables are. Tables are filled on demand by the owning Model.
class Element {
 public:
  Element() = default;

  bool valid() const { return rep_ != nullptr; }
  const Type& type() const;
  bool is_ground() const { return type().is_ground(); }
  /// Ground value. Precondition: is_ground().
  bool is_top() const;
  bool has_table() const;

 private:
  friend class Model;
  struct Rep;
  explicit Element(std::shared_ptr<Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<Rep> rep_;
};

/// The fully enumerated poset O_s, in canonical (lexicographic table)
/// order, which is a linear extension of the pointwise order. Index 0 is
/// bottom and the last index is top.
class Domain {
 public:
  const Type& type() const { return type_; }
  std::size_t size() const { return tables_.size(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return tables_.size() - 1; }

  const std::string& table(std::size_t i) const { return tables_[i]; }
  std::optional<std::size_t> index_of(const std::string& table) const;
  /// Pointwise order.
  bool leq(std::size_t i, std::size_t j) const;

  /// Strict steps in a longest ascending chain, by longest path over the
  /// covering relation.
  std::size_t longest_chain() const;
  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Line-oriented dump: header, one `element` line per point and one
  /// `cover` line per Hasse edge.
  std::string dump() const;

 private:
  friend class Model;
  Domain(Type type, std::vector<std::string> tables);

  Type type_;
  std::vector<std::string> tables_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<bool> leq_matrix_;  // filled for small domains only
  mutable std::vector<Element> elements_;
};

/// Values of free variables, keyed by name and type.
using Environment = std::map<std::pair<std::string, Type>, Element>;

/// An evaluation session: owns the per-type domain cache and builds,
/// applies and compares elements.
///
/// Elements hold closures that refer back to the Model, so the Model must
/// outlive them. A Model and its elements belong to one thread at a time.
class Model {
 public:
  explicit Model(std::size_t size_limit = kDefaultSizeLimit);
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  std::size_t size_limit() const { return size_limit_; }

  /// Enumerates O_s. Throws DomainTooLarge beyond the size limit.
  const Domain& domain(const Type& type);
  std::size_t cardinality(const Type& type);
  /// Strict steps in the longest ascending chain of O_s, from
  /// h(o) = 1 and h(s -> t) = |O_s| * h(t). Needs only the argument domains.
  std::size_t height(const Type& type);
  /// Length of an element's table: the product of the argument domain sizes.
  std::size_t table_length(const Type& type);

  Element ground(bool top) const;
  Element bottom(const Type& type);
  Element top(const Type& type);
  Element function(const Type& type, std::function<Element(const Element&)> fn);
  Element from_table(const Type& type, std::string table);
  /// The i-th point of O_s.
  Element element(const Type& type, std::size_t index);

  Element apply(const Element& f, const Element& x);
  Element apply(const Element& f, const std::vector<Element>& args);

  /// Forces tabulation.
  const std::string& table(const Element& e);
  std::size_t index_of(const Element& e);
  bool equal(const Element& a, const Element& b);
  bool leq(const Element& a, const Element& b);
  /// Checks monotonicity of the table directly against the argument order.
  bool is_monotone(const Element& e);

  /// Kleene iteration from bottom until two iterates coincide.
  Element lfp(const Element& f);

  /// The denotation of `term`; Omega{s} is bottom and Y{s} is lfp.
  Element eval(const Term& term, const Environment& env = {});

  /// Test and probe elements of the normal-form analysis:
  /// t_s(f) = f p_s1 .. p_sn and p_s f1 .. fn = t_s1(f1) and ... and t_sn(fn).
  Element test(const Type& type);
  Element probe(const Type& type);
  /// The head-normal-form variant, whose probes are constantly top.
  Element head_test(const Type& type);
  Element head_probe(const Type& type);

  /// "bot", "top", or "<index>:<table>" for arrow elements.
  std::string describe(const Element& e);

 private:
  struct Frame;
  using Frames = std::shared_ptr<const Frame>;

  Element eval_in(const Term& term, const Frames& frames,
                  const std::shared_ptr<const Environment>& env);
  Element curry(const Type& remaining, std::vector<Element> collected,
                std::shared_ptr<const std::function<Element(
                    const std::vector<Element>&)>> finish);
  std::unique_ptr<Domain> enumerate(const Type& type);

  std::size_t size_limit_;
  std::map<Type, std::unique_ptr<Domain>> domains_;
  std::map<Type, std::size_t> heights_;
  std::map<Type, Element> tests_;
  std::map<Type, Element> probes_;
  std::map<Type, Element> head_tests_;
};

}  // namespace lambday
