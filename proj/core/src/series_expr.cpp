#include <algorithm>

#include "qseries/congruence.hpp"

namespace qseries {

struct SeriesExpr::Node {
  enum class Kind {
    Eta,
    Sequence,
    Phi,
    ThetaSum,
    ThetaProduct,
    PlusProduct,
    Residual,
    Oracle,
    Zero,
    Mul,
    Div,
    Add,
    Sub,
    Pow,
    Substitute,
    Extract,
  };

  Kind kind = Kind::Zero;
  EtaQuotientSpec eta;
  std::optional<SequenceRef> seq;
  ThetaSpec theta;
  int sign = 1;
  std::uint64_t scale = 1;
  std::optional<std::uint64_t> ell;
  std::int64_t exponent = 1;
  std::size_t k = 1;
  std::size_t r = 0;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

using Node = SeriesExpr::Node;
using Kind = Node::Kind;

Series evaluate_node(const Node& node, CoefficientRing ring, std::size_t order) {
  switch (node.kind) {
    case Kind::Eta:
      return eta_quotient(node.eta, ring, order);
    case Kind::Sequence:
      return sequence_series(*node.seq, ring, order);
    case Kind::Phi:
      return phi(node.sign, ring, order);
    case Kind::ThetaSum:
      return theta_f_series(node.theta, ring, order);
    case Kind::ThetaProduct:
      return theta_f_product(node.theta, ring, order);
    case Kind::PlusProduct:
      return plus_product(node.scale, ring, order);
    case Kind::Residual:
      return phi_five_dissection_residual(ring, order);
    case Kind::Oracle: {
      std::vector<BigInt> coeffs;
      for (std::size_t n = 0; n <= order; ++n) {
        coeffs.push_back(oracle_regular_overpartition(node.ell, n));
      }
      return series_from_coeffs(ring, coeffs, order);
    }
    case Kind::Zero:
      return Series(ring, order);
    case Kind::Mul:
      return mul(evaluate_node(*node.left, ring, order), evaluate_node(*node.right, ring, order));
    case Kind::Div:
      return divide(evaluate_node(*node.left, ring, order),
                    evaluate_node(*node.right, ring, order));
    case Kind::Add:
      return add(evaluate_node(*node.left, ring, order), evaluate_node(*node.right, ring, order));
    case Kind::Sub:
      return sub(evaluate_node(*node.left, ring, order), evaluate_node(*node.right, ring, order));
    case Kind::Pow:
      return pow(evaluate_node(*node.left, ring, order), node.exponent);
    case Kind::Substitute: {
      // Only the first order / k source coefficients survive the substitution.
      const Series inner = evaluate_node(*node.left, ring, order / node.k);
      return substitute_power(truncate(inner, order), node.k);
    }
    case Kind::Extract:
      return extract_progression(evaluate_node(*node.left, ring, node.k * order + node.r),
                                 node.k, node.r);
  }
  throw std::logic_error("unknown expression node");
}

std::optional<std::size_t> cap_of(const Node& node) {
  auto min_cap = [](std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::optional<std::size_t>(std::min(*a, *b));
  };
  switch (node.kind) {
    case Kind::Oracle:
      return kDefaultEnumerationCap;
    case Kind::Mul:
    case Kind::Div:
    case Kind::Add:
    case Kind::Sub:
      return min_cap(cap_of(*node.left), cap_of(*node.right));
    case Kind::Pow:
      return cap_of(*node.left);
    case Kind::Substitute: {
      auto c = cap_of(*node.left);
      if (!c) return c;
      return *c * node.k + (node.k - 1);
    }
    case Kind::Extract: {
      auto c = cap_of(*node.left);
      if (!c) return c;
      return *c < node.r ? 0 : (*c - node.r) / node.k;
    }
    default:
      return std::nullopt;
  }
}

std::string describe(const Node& node) {
  auto theta_text = [](const ThetaSpec& t) {
    auto arg = [](int sign, std::uint64_t power) {
      return std::string(sign < 0 ? "-" : "") + "q^" + std::to_string(power);
    };
    return "f(" + arg(t.a_sign, t.a_power) + ", " + arg(t.b_sign, t.b_power) + ")";
  };
  switch (node.kind) {
    case Kind::Eta: return "eta[" + node.eta.to_string() + "]";
    case Kind::Sequence: return "gf(" + node.seq->to_string() + ")";
    case Kind::Phi: return node.sign < 0 ? "phi(-q)" : "phi(q)";
    case Kind::ThetaSum: return theta_text(node.theta) + "[sum]";
    case Kind::ThetaProduct: return theta_text(node.theta) + "[product]";
    case Kind::PlusProduct: return "(-q^" + std::to_string(node.scale) + ";q^" +
                                   std::to_string(node.scale) + ")_inf";
    case Kind::Residual: return "phi5-residual";
    case Kind::Oracle:
      return "enum(" + (node.ell ? "A[" + std::to_string(*node.ell) + "]" : "pbar") + ")";
    case Kind::Zero: return "0";
    case Kind::Mul: return "(" + describe(*node.left) + " * " + describe(*node.right) + ")";
    case Kind::Div: return "(" + describe(*node.left) + " / " + describe(*node.right) + ")";
    case Kind::Add: return "(" + describe(*node.left) + " + " + describe(*node.right) + ")";
    case Kind::Sub: return "(" + describe(*node.left) + " - " + describe(*node.right) + ")";
    case Kind::Pow: return describe(*node.left) + "^" + std::to_string(node.exponent);
    case Kind::Substitute:
      return describe(*node.left) + "|q->q^" + std::to_string(node.k);
    case Kind::Extract:
      return describe(*node.left) + "|[" + std::to_string(node.k) + "n+" +
             std::to_string(node.r) + "]";
  }
  return "?";
}

SeriesExpr::Node leaf(Kind kind) {
  Node n;
  n.kind = kind;
  return n;
}

}  // namespace

SeriesExpr SeriesExpr::eta(EtaQuotientSpec spec) {
  Node n = leaf(Kind::Eta);
  n.eta = std::move(spec);
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::sequence(SequenceRef ref) {
  if (!ref.series_backed()) throw std::invalid_argument(ref.to_string() + " has no series");
  Node n = leaf(Kind::Sequence);
  n.seq = ref;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::phi(int sign) {
  Node n = leaf(Kind::Phi);
  n.sign = sign;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::theta_sum(ThetaSpec spec) {
  spec.validate();
  Node n = leaf(Kind::ThetaSum);
  n.theta = spec;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::theta_product(ThetaSpec spec) {
  spec.validate();
  Node n = leaf(Kind::ThetaProduct);
  n.theta = spec;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::plus_product(std::uint64_t scale) {
  Node n = leaf(Kind::PlusProduct);
  n.scale = scale;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::dissection_residual() {
  return SeriesExpr(std::make_shared<const Node>(leaf(Kind::Residual)));
}

SeriesExpr SeriesExpr::overpartition_oracle(std::optional<std::uint64_t> ell) {
  Node n = leaf(Kind::Oracle);
  n.ell = ell;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::zero() { return SeriesExpr(std::make_shared<const Node>(leaf(Kind::Zero))); }

SeriesExpr SeriesExpr::pow(std::int64_t e) const {
  Node n = leaf(Kind::Pow);
  n.left = node_;
  n.exponent = e;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::substitute(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("substitute: k must be at least 1");
  Node n = leaf(Kind::Substitute);
  n.left = node_;
  n.k = k;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

SeriesExpr SeriesExpr::extract(std::size_t k, std::size_t r) const {
  if (k == 0 || r >= k) throw std::invalid_argument("extract: need 0 <= r < k");
  Node n = leaf(Kind::Extract);
  n.left = node_;
  n.k = k;
  n.r = r;
  return SeriesExpr(std::make_shared<const Node>(std::move(n)));
}

namespace {
SeriesExpr::Node binary(Kind kind, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b) {
  Node n = leaf(kind);
  n.left = std::move(a);
  n.right = std::move(b);
  return n;
}
}  // namespace

SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b) {
  return SeriesExpr(std::make_shared<const Node>(binary(Kind::Mul, a.node_, b.node_)));
}
SeriesExpr operator/(const SeriesExpr& a, const SeriesExpr& b) {
  return SeriesExpr(std::make_shared<const Node>(binary(Kind::Div, a.node_, b.node_)));
}
SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b) {
  return SeriesExpr(std::make_shared<const Node>(binary(Kind::Add, a.node_, b.node_)));
}
SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b) {
  return SeriesExpr(std::make_shared<const Node>(binary(Kind::Sub, a.node_, b.node_)));
}

Series SeriesExpr::evaluate(CoefficientRing ring, std::size_t order) const {
  if (auto cap = order_cap(); cap && order > *cap) {
    throw std::out_of_range(to_string() + ": order " + std::to_string(order) +
                            " exceeds enumeration cap " + std::to_string(*cap));
  }
  return evaluate_node(*node_, ring, order);
}

std::optional<std::size_t> SeriesExpr::order_cap() const { return cap_of(*node_); }

std::string SeriesExpr::to_string() const { return describe(*node_); }

}  // namespace qseries
