#include "qgalois/tools/render.hpp"

namespace qgalois::tools {

namespace {

std::string power(const std::string& name, long m) {
  if (m == 1) return name;
  return name + "^" + std::to_string(m);
}

// c*op with op already rendered; first term carries its own sign.
void append_term(std::string& out, const KConst& c, const std::string& op) {
  std::string cs = c.to_string();
  const bool neg = cs[0] == '-';
  if (neg) cs.erase(0, 1);
  const bool bare = cs.find_first_of(" +-") == std::string::npos;
  if (!bare) cs = "(" + cs + ")";
  if (out.empty()) out = neg ? "-" : "";
  else out += neg ? " - " : " + ";
  out += cs == "1" ? op : cs + "*" + op;
}

std::string delta_power(int k, const std::string& arg) {
  if (k == 0) return arg;
  return (k == 1 ? std::string("delta") : "delta^" + std::to_string(k)) + "(" + arg + ")";
}

}  // namespace

std::string render_character(long m1, long m2, const CharacterNames& names) {
  if (m1 != 0 && m2 != 0) return power(names.first, m1) + "*" + power(names.second, m2);
  if (m1 != 0) return power(names.first, m1);
  if (m2 != 0) return power(names.second, m2);
  return "1";
}

std::string render_relation(const Relation& r, const CharacterNames& names) {
  const std::string chi = render_character(r.m1, r.m2, names);
  const bool compound = r.m1 != 0 && r.m2 != 0;
  switch (r.kind) {
    case Relation::Kind::Torsion:
      if (r.order == 1) return chi + " = 1";
      return (compound || chi.find('^') != std::string::npos ? "(" + chi + ")" : chi) + "^" +
             std::to_string(r.order) + " = 1";
    case Relation::Kind::DeltaConstantProduct: return "delta(" + chi + ") = 0";
    case Relation::Kind::DeltaLogConstantProduct:
      return "delta(dlog " + (compound ? "(" + chi + ")" : chi) + ") = 0";
  }
  return "";
}

std::string render_gm(const GmSubgroup& g, const std::string& name) {
  switch (g.kind) {
    case GmSubgroup::Kind::Torsion: return g.order == 1 ? name + " = 1" : name + "^" + std::to_string(g.order) + " = 1";
    case GmSubgroup::Kind::DeltaConstant: return "delta(" + name + ") = 0";
    case GmSubgroup::Kind::DeltaLogConstant: return "delta(dlog " + name + ") = 0";
    case GmSubgroup::Kind::Full: return name + " in Gm";
  }
  return "";
}

std::string render_link(const ReducibleLink& link) {
  // c_zero: xi/alpha = sum c_i delta^i(dlog alpha); else its delta.
  const int shift = link.c_zero ? 0 : 1;
  std::string rhs;
  for (int i = link.L.order(); i >= 0; --i) {
    const KConst& c = link.L.coeffs[static_cast<std::size_t>(i)];
    if (!c.is_zero()) append_term(rhs, c, delta_power(i + shift, "dlog alpha"));
  }
  if (rhs.empty()) rhs = "0";
  return (link.c_zero ? std::string("xi/alpha") : "delta(xi/alpha)") + " = " + rhs;
}

std::vector<std::string> render_group(const GroupDesc& g) {
  std::vector<std::string> out;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ScalarGroup>) {
          out.push_back("scalar alpha*I");
          out.push_back(render_gm(d.sub, "alpha"));
        } else if constexpr (std::is_same_v<T, DiagonalTorus>) {
          out.push_back("diagonal diag(alpha1, alpha2)");
          CharacterNames names;
          for (const auto& r : d.relations) out.push_back(render_relation(r, names));
        } else if constexpr (std::is_same_v<T, ReducibleTriangular>) {
          out.push_back("triangular ((alpha, xi), (0, lambda))");
          CharacterNames names{"alpha", "lambda"};
          for (const auto& r : d.alpha_part) out.push_back(render_relation(r, names));
          switch (d.unipotent) {
            case Unipotent::FullGa: out.push_back("unipotent radical Ga"); break;
            case Unipotent::GaDeltaConstant: out.push_back("unipotent radical Ga(delta-constants)"); break;
            case Unipotent::Trivial: out.push_back("unipotent radical trivial"); break;
          }
          if (d.link) out.push_back(render_link(*d.link));
        } else if constexpr (std::is_same_v<T, Imprimitive>) {
          switch (d.family) {
            case ImprimitiveFamily::DmMinus: out.push_back("imprimitive D_" + std::to_string(d.m) + "^-"); break;
            case ImprimitiveFamily::DmPlus: out.push_back("imprimitive D_" + std::to_string(d.m) + "^+"); break;
            case ImprimitiveFamily::Klein:
              out.push_back("imprimitive {+-1}^2 x| Gm, diag(alpha, lambda) with alpha^2 = lambda^2");
              break;
            case ImprimitiveFamily::FullPair: out.push_back("imprimitive {+-1} x| Gm^2"); break;
          }
          switch (d.extra) {
            case ImprimitiveExtra::None: break;
            case ImprimitiveExtra::LogDerivDeltaConstant:
              out.push_back("delta(dlog alpha) = 0 = delta(dlog lambda)");
              break;
            case ImprimitiveExtra::DeltaConstantDet: out.push_back("delta(alpha*lambda) = 0"); break;
          }
        } else {
          out.push_back("large SL2 <= G");
          out.push_back(d.det.kind == GmSubgroup::Kind::Torsion && d.det.order == 1 ? "G = SL2"
                                                                                   : render_gm(d.det, "det"));
        }
      },
      g);
  return out;
}

}  // namespace qgalois::tools
