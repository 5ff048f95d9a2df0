#include <nlohmann/json.hpp>

#include "lambday/syntax.hpp"

namespace lambday {

namespace {

using nlohmann::json;

json encode(const Term& t) {
  json node;
  node["type"] = t.type().to_string();
  json children = json::array();
  switch (t.kind()) {
    case TermKind::kVar:
      node["kind"] = "var";
      node["name"] = t.name();
      break;
    case TermKind::kBound:
      node["kind"] = "bound";
      node["index"] = t.index();
      break;
    case TermKind::kLam:
      node["kind"] = "lam";
      node["name"] = t.name();
      node["binder"] = t.binder_type().to_string();
      children.push_back(encode(t.body()));
      break;
    case TermKind::kApp:
      node["kind"] = "app";
      children.push_back(encode(t.fun()));
      children.push_back(encode(t.arg()));
      break;
    case TermKind::kOmega:
      node["kind"] = "omega";
      node["subscript"] = t.constant_type().to_string();
      break;
    case TermKind::kY:
      node["kind"] = "y";
      node["subscript"] = t.constant_type().to_string();
      break;
  }
  node["children"] = std::move(children);
  return node;
}

const json& field(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) {
    throw ParseError(std::string("tree node lacks field '") + key + "'", {});
  }
  return node.at(key);
}

Term decode(const json& node, std::vector<Type>& scope) {
  const std::string kind = field(node, "kind").get<std::string>();
  const Type type = parse_type(field(node, "type").get<std::string>());
  const json& children = field(node, "children");
  auto expect_children = [&](std::size_t n) {
    if (!children.is_array() || children.size() != n) {
      throw ParseError("tree node '" + kind + "' needs " + std::to_string(n) +
                           " children",
                       {});
    }
  };
  Term out;
  if (kind == "var") {
    expect_children(0);
    out = Term::var(field(node, "name").get<std::string>(), type);
  } else if (kind == "bound") {
    expect_children(0);
    auto index = field(node, "index").get<std::uint32_t>();
    if (index >= scope.size() || !(scope[scope.size() - 1 - index] == type)) {
      throw TypeError("tree bound index " + std::to_string(index) +
                      " does not match an enclosing binder");
    }
    out = Term::bound(index, type);
  } else if (kind == "lam") {
    expect_children(1);
    Type binder = parse_type(field(node, "binder").get<std::string>());
    scope.push_back(binder);
    Term body = decode(children[0], scope);
    scope.pop_back();
    out = Term::lam_raw(field(node, "name").get<std::string>(), binder, body);
  } else if (kind == "app") {
    expect_children(2);
    out = Term::app(decode(children[0], scope), decode(children[1], scope));
  } else if (kind == "omega" || kind == "y") {
    expect_children(0);
    Type sub = parse_type(field(node, "subscript").get<std::string>());
    out = kind == "y" ? Term::fix(sub) : Term::omega(sub);
  } else {
    throw ParseError("unknown tree node kind '" + kind + "'", {});
  }
  if (!(out.type() == type)) {
    throw TypeError("tree node declares type " + type.to_string() +
                        " but has type " + out.type().to_string(),
                    out);
  }
  return out;
}

}  // namespace

std::string to_tree(const Term& term) { return encode(term).dump(); }

Term from_tree(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed tree: ") + e.what(), {});
  }
  std::vector<Type> scope;
  try {
    return decode(doc, scope);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed tree: ") + e.what(), {});
  }
}

}  // namespace lambday
