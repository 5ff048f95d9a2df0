#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lambday {

/// A simple type over the single ground type `o`.
///
/// Every type decomposes uniquely as s1 -> ... -> sn -> o; the list
/// (s1, ..., sn) is available through `arguments()` and n is `arity()`.
/// Values are immutable and cheap to copy.
class Type {
 public:
  /// The ground type `o`.
  Type();

  static Type ground() { return Type(); }
  static Type arrow(Type domain, Type codomain);
  /// s1 -> ... -> sn -> result
  static Type curried(const std::vector<Type>& arguments, Type result);
  /// (a -> a) -> (a -> a), the type of numerals at a.
  static Type numeral(const Type& alpha);

  bool is_ground() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }

  /// Precondition: is_arrow().
  const Type& domain() const;
  const Type& codomain() const;

  std::size_t arity() const;
  std::vector<Type> arguments() const;
  /// Number of `o` leaves.
  std::size_t size() const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Type domain;
  Type codomain;
  std::size_t size;
  std::size_t hash;
};

/// If `t` is a numeral type (a -> a) -> (a -> a), stores a in `alpha`.
bool is_numeral_type(const Type& t, Type* alpha = nullptr);

/// All types of size at most `max_size`, smallest first.
std::vector<Type> types_up_to_size(std::size_t max_size);

}  // namespace lambday

template <>
struct std::hash<lambday::Type> {
  std::size_t operator()(const lambday::Type& t) const noexcept {
    return t.hash();
  }
};
