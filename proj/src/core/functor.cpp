#include "barrlab/core/functor.hpp"

#include "barrlab/error.hpp"

namespace barrlab {

struct FunctorExpr::Node {
  Kind kind;
  FinSet set;
  std::vector<FunctorExpr> children;
};

FunctorExpr::FunctorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

FunctorExpr FunctorExpr::constant(FinSet value) {
  return FunctorExpr(std::make_shared<const Node>(Node{Kind::Const, std::move(value), {}}));
}

FunctorExpr FunctorExpr::id() {
  return FunctorExpr(std::make_shared<const Node>(Node{Kind::Id, {}, {}}));
}

FunctorExpr FunctorExpr::prod(std::vector<FunctorExpr> factors) {
  return FunctorExpr(std::make_shared<const Node>(Node{Kind::Prod, {}, std::move(factors)}));
}

FunctorExpr FunctorExpr::coprod(std::vector<FunctorExpr> summands) {
  return FunctorExpr(
      std::make_shared<const Node>(Node{Kind::Coprod, {}, std::move(summands)}));
}

FunctorExpr FunctorExpr::pow(FinSet exponent, FunctorExpr body) {
  return FunctorExpr(std::make_shared<const Node>(
      Node{Kind::Pow, std::move(exponent), {std::move(body)}}));
}

FunctorExpr FunctorExpr::compose(FunctorExpr outer, FunctorExpr inner) {
  return FunctorExpr(std::make_shared<const Node>(
      Node{Kind::Compose, {}, {std::move(outer), std::move(inner)}}));
}

FunctorExpr::Kind FunctorExpr::kind() const { return node_->kind; }
const FinSet& FunctorExpr::set() const { return node_->set; }
const std::vector<FunctorExpr>& FunctorExpr::children() const { return node_->children; }

std::string FunctorExpr::to_string() const {
  auto join = [this](const char* sep) {
    std::string s = "(";
    for (std::size_t i = 0; i < children().size(); ++i) {
      if (i) s += sep;
      s += children()[i].to_string();
    }
    return s + ")";
  };
  switch (kind()) {
    case Kind::Const: return set().name();
    case Kind::Id: return "X";
    case Kind::Prod: return children().empty() ? "1" : join(" x ");
    case Kind::Coprod: return children().empty() ? "0" : join(" + ");
    case Kind::Pow: return children()[0].to_string() + "^" + set().name();
    case Kind::Compose:
      return children()[0].to_string() + " o " + children()[1].to_string();
  }
  return "?";
}

std::optional<Card> functor_size(const FunctorExpr& expr, Card n) {
  using Kind = FunctorExpr::Kind;
  switch (expr.kind()) {
    case Kind::Const: return expr.set().size();
    case Kind::Id: return n;
    case Kind::Prod: {
      Card total = 1;
      for (const auto& c : expr.children()) {
        auto s = functor_size(c, n);
        if (!s) return std::nullopt;
        auto next = checked_mul(total, *s);
        if (!next) return std::nullopt;
        total = *next;
      }
      return total;
    }
    case Kind::Coprod: {
      Card total = 0;
      for (const auto& c : expr.children()) {
        auto s = functor_size(c, n);
        if (!s) return std::nullopt;
        auto next = checked_add(total, *s);
        if (!next) return std::nullopt;
        total = *next;
      }
      return total;
    }
    case Kind::Pow: {
      auto body = functor_size(expr.children()[0], n);
      if (!body) return std::nullopt;
      return checked_pow(*body, expr.set().size());
    }
    case Kind::Compose: {
      auto inner = functor_size(expr.children()[1], n);
      if (!inner) return std::nullopt;
      return functor_size(expr.children()[0], *inner);
    }
  }
  return std::nullopt;
}

namespace {

Card require_size(const FunctorExpr& expr, Card n) {
  auto s = functor_size(expr, n);
  if (!s) {
    throw Error(ErrorKind::BlowUpGuard, "|" + expr.to_string() + "| on a set of size " +
                                            std::to_string(n) + " is not representable");
  }
  return *s;
}

std::string element_label(const FunctorExpr& expr, const FinSet& x, Element e);

std::string tuple_label(const std::vector<FunctorExpr>& parts, const FinSet& x, Element e,
                        const char* open, const char* close) {
  std::vector<Card> sizes;
  for (const auto& p : parts) sizes.push_back(require_size(p, x.size()));
  auto digits = split_tuple(sizes, e);
  std::string s = open;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += element_label(parts[i], x, digits[i]);
  }
  return s + close;
}

std::string element_label(const FunctorExpr& expr, const FinSet& x, Element e) {
  using Kind = FunctorExpr::Kind;
  switch (expr.kind()) {
    case Kind::Const: return expr.set().label(e);
    case Kind::Id: return x.label(e);
    case Kind::Prod: return tuple_label(expr.children(), x, e, "(", ")");
    case Kind::Pow: {
      std::vector<FunctorExpr> parts(expr.set().size(), expr.children()[0]);
      return tuple_label(parts, x, e, "[", "]");
    }
    case Kind::Coprod: {
      auto [i, inner] = split_coproduct(expr, x.size(), e);
      return "in" + std::to_string(i) + "(" + element_label(expr.children()[i], x, inner) +
             ")";
    }
    case Kind::Compose: {
      const FinSet inner = eval_functor(expr.children()[1], x);
      return element_label(expr.children()[0], inner, e);
    }
  }
  return "?";
}

}  // namespace

std::vector<Card> factor_sizes(const FunctorExpr& expr, Card n) {
  if (expr.kind() == FunctorExpr::Kind::Prod) {
    std::vector<Card> sizes;
    for (const auto& c : expr.children()) sizes.push_back(require_size(c, n));
    return sizes;
  }
  if (expr.kind() == FunctorExpr::Kind::Pow) {
    return std::vector<Card>(expr.set().size(), require_size(expr.children()[0], n));
  }
  throw Error(ErrorKind::InvalidInput, "factor_sizes needs a product or power node");
}

std::vector<Element> split_tuple(const std::vector<Card>& sizes, Element e) {
  std::vector<Element> parts(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    if (sizes[i] == 0) return parts;  // empty product has no elements
    parts[i] = e % sizes[i];
    e /= sizes[i];
  }
  return parts;
}

Element join_tuple(const std::vector<Card>& sizes, const std::vector<Element>& parts) {
  Element e = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) e = e * sizes[i] + parts[i];
  return e;
}

std::pair<std::size_t, Element> split_coproduct(const FunctorExpr& expr, Card n, Element e) {
  for (std::size_t i = 0; i < expr.children().size(); ++i) {
    const Card s = require_size(expr.children()[i], n);
    if (e < s) return {i, e};
    e -= s;
  }
  throw Error(ErrorKind::DomainMismatch, "element outside coproduct " + expr.to_string());
}

Element inject_coproduct(const FunctorExpr& expr, Card n, std::size_t summand, Element inner) {
  Element offset = 0;
  for (std::size_t i = 0; i < summand; ++i) offset += require_size(expr.children()[i], n);
  return offset + inner;
}

FinSet eval_functor(const FunctorExpr& expr, const FinSet& x) {
  const Card size = require_size(expr, x.size());
  std::string name = expr.to_string();
  // substitute the argument name for X in the display name
  for (std::size_t pos = name.find('X'); pos != std::string::npos; pos = name.find('X', pos)) {
    name.replace(pos, 1, x.name());
    pos += x.name().size();
  }
  return FinSet(std::move(name), size,
                [expr, x](Element e) { return element_label(expr, x, e); });
}

Element functor_map_element(const FunctorExpr& expr, const Arrow& f, Element e) {
  using Kind = FunctorExpr::Kind;
  switch (expr.kind()) {
    case Kind::Const: return e;
    case Kind::Id: return f.apply(e);
    case Kind::Prod:
    case Kind::Pow: {
      const auto dom_sizes = factor_sizes(expr, f.dom);
      const auto cod_sizes = factor_sizes(expr, f.cod);
      auto parts = split_tuple(dom_sizes, e);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& child =
            expr.kind() == Kind::Prod ? expr.children()[i] : expr.children()[0];
        parts[i] = functor_map_element(child, f, parts[i]);
      }
      return join_tuple(cod_sizes, parts);
    }
    case Kind::Coprod: {
      auto [i, inner] = split_coproduct(expr, f.dom, e);
      return inject_coproduct(expr, f.cod, i,
                              functor_map_element(expr.children()[i], f, inner));
    }
    case Kind::Compose: {
      return functor_map_element(expr.children()[0],
                                 eval_functor_arrow(expr.children()[1], f), e);
    }
  }
  return e;
}

Arrow eval_functor_arrow(const FunctorExpr& expr, const Arrow& f) {
  return Arrow{require_size(expr, f.dom), require_size(expr, f.cod),
               [expr, f](Element e) { return functor_map_element(expr, f, e); }};
}

FinFn eval_functor_map(const FunctorExpr& expr, const FinFn& f) {
  const FinSet dom = eval_functor(expr, f.dom());
  const FinSet cod = eval_functor(expr, f.cod());
  const Arrow a = f.arrow();
  return FinFn::tabulate(dom, cod, [&](Element e) { return functor_map_element(expr, a, e); });
}

}  // namespace barrlab
