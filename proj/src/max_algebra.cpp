#include "gmid/max_algebra.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "gmid/errors.hpp"

namespace gmid {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

struct LawNode {
  MaxLaw law;
};
struct OneNode {};
struct GeoMaxNode {
  CdfExpr child;
  double p;
};
struct ScaledGmidNode {
  Exponent exponent;
  double scale;
};
struct PowerNode {
  CdfExpr child;
  double n;
};
struct IterateNode {
  CdfExpr child;
};
struct LimitGeoGammaNode {
  Exponent exponent;
  double beta;
  double n;
};
}  // namespace

struct CdfExpr::Node {
  std::variant<LawNode, OneNode, GeoMaxNode, ScaledGmidNode, PowerNode, IterateNode,
               LimitGeoGammaNode>
      op;
};

namespace {
template <class T>
std::shared_ptr<const CdfExpr::Node> make_node(T op) {
  return std::make_shared<const CdfExpr::Node>(CdfExpr::Node{std::move(op)});
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

CdfExpr CdfExpr::of(const MaxLaw& law) { return CdfExpr(make_node(LawNode{law})); }
CdfExpr CdfExpr::one() { return CdfExpr(make_node(OneNode{})); }

double CdfExpr::log_neg_log_cdf(double x) const {
  return std::visit(
      Overloaded{
          [&](const LawNode& n) { return gmid::log_neg_log_cdf(n.law, x); },
          [](const OneNode&) { return -kInf; },
          [&](const GeoMaxNode& n) {
            // p e^-h / (1 - (1-p) e^-h) = 1 / (1 + expm1(h) / p)
            const double log_h = n.child.log_neg_log_cdf(x);
            if (log_h == kInf || log_h == -kInf) return log_h;
            const double h = std::exp(log_h);
            if (h > 700.0) return std::log(h - std::log(n.p) + std::log1p(-std::exp(-h)));
            return std::log(std::log1p(std::expm1(h) / n.p));
          },
          [&](const ScaledGmidNode& n) {
            return log_log1p_exp(std::log(n.scale) + n.exponent.log_eval(x));
          },
          [&](const PowerNode& n) { return std::log(n.n) + n.child.log_neg_log_cdf(x); },
          [&](const IterateNode& n) { return log_log1p_exp(n.child.log_neg_log_cdf(x)); },
          [&](const LimitGeoGammaNode& n) {
            const double log_s = n.exponent.log_eval(x);
            if (log_s == kInf || log_s == -kInf) return log_s;
            return std::log(std::log1p(n.n * std::expm1(n.beta / n.n * log1p_exp(log_s))));
          },
      },
      node_->op);
}

std::optional<CdfExpr::GmidForm> CdfExpr::gmid_form() const {
  if (const auto* law = std::get_if<LawNode>(&node_->op);
      law != nullptr && law->law.kind() == LawKind::GMID) {
    return GmidForm{law->law.exponent(), 1.0};
  }
  if (const auto* scaled = std::get_if<ScaledGmidNode>(&node_->op)) {
    return GmidForm{scaled->exponent, scaled->scale};
  }
  return std::nullopt;
}

std::string CdfExpr::describe() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const LawNode& n) {
                   os << to_string(n.law.kind()) << "(" << to_string(n.law.exponent().family())
                      << ", alpha=" << n.law.exponent().alpha() << ", beta=" << n.law.beta()
                      << ")";
                 },
                 [&](const OneNode&) { os << "one"; },
                 [&](const GeoMaxNode& n) {
                   os << "geo_max(" << n.child.describe() << ", p=" << n.p << ")";
                 },
                 [&](const ScaledGmidNode& n) {
                   os << "gmid(" << to_string(n.exponent.family()) << ", scale=" << n.scale
                      << ")";
                 },
                 [&](const PowerNode& n) { os << "(" << n.child.describe() << ")^" << n.n; },
                 [&](const IterateNode& n) { os << "iterate(" << n.child.describe() << ")"; },
                 [&](const LimitGeoGammaNode& n) {
                   os << "limit_geo_gamma(beta=" << n.beta << ", n=" << n.n << ")";
                 },
             },
             node_->op);
  return os.str();
}

GeoP::GeoP(double p) : p_(p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("geometric p must lie in (0,1], got " + std::to_string(p));
  }
}

CdfExpr geo_max(const CdfExpr& h, GeoP p) {
  if (p.value() == 1.0) return h;
  return CdfExpr(make_node(GeoMaxNode{h, p.value()}));
}

double geo_max_cdf(const CdfExpr& h, GeoP p, double x) { return geo_max(h, p).cdf(x); }

std::uint64_t sample_geometric(GeoP p, RandomSource& rng) {
  if (p.value() == 1.0) return 1;
  // inversion: N = 1 + floor(log U / log(1-p))
  const double k = std::floor(std::log(rng.uniform()) / std::log1p(-p.value()));
  return 1 + static_cast<std::uint64_t>(k);
}

double geo_max_sample(const MaxLaw& law, GeoP p, RandomSource& rng) {
  const std::uint64_t count = sample_geometric(p, rng);
  double best = -kInf;
  for (std::uint64_t i = 0; i < count; ++i) best = std::max(best, quantile(law, rng.uniform()));
  return best;
}

CdfExpr scale_exponent(const CdfExpr& h, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("scale_exponent: a must be positive and finite");
  }
  const auto form = h.gmid_form();
  if (!form) throw std::invalid_argument("scale_exponent: h is not of the form 1/(1+psi)");
  return CdfExpr(make_node(ScaledGmidNode{form->exponent, form->scale * a}));
}

double semi_stable_scale(GeoP p, const Exponent& e) {
  switch (e.family()) {
    case ExponentFamily::FrechetType: return std::pow(p.value(), 1.0 / e.alpha());
    case ExponentFamily::WeibullType: return std::pow(p.value(), -1.0 / e.alpha());
    case ExponentFamily::GumbelType: break;
  }
  throw UnsupportedError("semi_stable_scale: the Gumbel exponent has no pure power scaling");
}

CdfExpr n_max(const CdfExpr& h, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n_max: n must be at least 1");
  if (n == 1) return h;
  return CdfExpr(make_node(PowerNode{h, static_cast<double>(n)}));
}

double n_max_cdf(const MaxLaw& law, std::uint64_t n, double x) {
  return n_max(CdfExpr::of(law), n).cdf(x);
}

CdfExpr limit_geo_gamma(double beta, std::uint64_t n, const Exponent& e) {
  if (n == 0) throw std::invalid_argument("limit_geo_gamma: n must be at least 1");
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("limit_geo_gamma: beta must be positive and finite");
  }
  return CdfExpr(make_node(LimitGeoGammaNode{e, beta, static_cast<double>(n)}));
}

double limit_geo_gamma_cdf(double beta, std::uint64_t n, const Exponent& e, double x) {
  return limit_geo_gamma(beta, n, e).cdf(x);
}

CdfExpr iterate_transform(const CdfExpr& f) { return CdfExpr(make_node(IterateNode{f})); }

}  // namespace gmid
