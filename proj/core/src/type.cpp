#include "lambday/type.hpp"

#include <cassert>

namespace lambday {

namespace {
constexpr std::size_t kGroundHash = 0x9e3779b97f4a7c15ULL;

std::size_t mix(std::size_t a, std::size_t b) {
  return a * 0x100000001b3ULL ^ (b + 0x9e3779b9 + (a << 6) + (a >> 2));
}
}  // namespace

Type::Type() = default;

Type Type::arrow(Type domain, Type codomain) {
  std::size_t size = domain.size() + codomain.size();
  std::size_t hash = mix(domain.hash(), mix(codomain.hash(), 0xa5));
  return Type(std::make_shared<const Node>(
      Node{std::move(domain), std::move(codomain), size, hash}));
}

Type Type::curried(const std::vector<Type>& arguments, Type result) {
  for (auto it = arguments.rbegin(); it != arguments.rend(); ++it) {
    result = arrow(*it, std::move(result));
  }
  return result;
}

Type Type::numeral(const Type& alpha) {
  Type endo = arrow(alpha, alpha);
  return arrow(endo, endo);
}

const Type& Type::domain() const {
  assert(is_arrow());
  return node_->domain;
}

const Type& Type::codomain() const {
  assert(is_arrow());
  return node_->codomain;
}

std::size_t Type::arity() const {
  std::size_t n = 0;
  for (const Type* t = this; t->is_arrow(); t = &t->codomain()) ++n;
  return n;
}

std::vector<Type> Type::arguments() const {
  std::vector<Type> out;
  for (const Type* t = this; t->is_arrow(); t = &t->codomain()) {
    out.push_back(t->domain());
  }
  return out;
}

std::size_t Type::size() const { return node_ ? node_->size : 1; }

std::size_t Type::hash() const { return node_ ? node_->hash : kGroundHash; }

std::string Type::to_string() const {
  if (is_ground()) return "o";
  std::string lhs = domain().to_string();
  if (domain().is_arrow()) lhs = "(" + lhs + ")";
  return lhs + " -> " + codomain().to_string();
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) {
    return false;
  }
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Equal sizes > 1 imply both are arrows.
  if (auto c = a.domain() <=> b.domain(); c != 0) return c;
  return a.codomain() <=> b.codomain();
}

bool is_numeral_type(const Type& t, Type* alpha) {
  if (!t.is_arrow() || !t.domain().is_arrow() || !t.codomain().is_arrow()) {
    return false;
  }
  const Type& endo = t.domain();
  if (!(endo.domain() == endo.codomain()) || !(endo == t.codomain())) {
    return false;
  }
  if (alpha) *alpha = endo.domain();
  return true;
}

std::vector<Type> types_up_to_size(std::size_t max_size) {
  // by_size[k] holds all types with k leaves.
  std::vector<std::vector<Type>> by_size(max_size + 1);
  std::vector<Type> out;
  if (max_size == 0) return out;
  by_size[1].push_back(Type::ground());
  for (std::size_t k = 2; k <= max_size; ++k) {
    for (std::size_t left = 1; left < k; ++left) {
      std::size_t right = k - left;
      for (const Type& d : by_size[left]) {
        for (const Type& c : by_size[right]) {
          by_size[k].push_back(Type::arrow(d, c));
        }
      }
    }
  }
  for (auto& bucket : by_size) {
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

}  // namespace lambday
