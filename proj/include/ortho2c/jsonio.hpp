#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ortho2c/basis.hpp"
#include "ortho2c/bridge.hpp"
#include "ortho2c/recurrence.hpp"
#include "ortho2c/zeros.hpp"

namespace ortho2c {

using Json = nlohmann::json;

// ---- polynomials: {"kind":"cpoly"|"rpoly","degree":n,"terms":[[a,b,re,im],...]},
// terms sorted by (a+b, b) ascending (the map order of Poly).

inline Json poly_to_json(const CPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.a, e.b, c.real(), c.imag()});
  return Json{{"kind", "cpoly"}, {"degree", p.degree()}, {"terms", terms}};
}

inline Json poly_to_json(const RPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.a, e.b, c, 0.0});
  return Json{{"kind", "rpoly"}, {"degree", p.degree()}, {"terms", terms}};
}

inline CPoly cpoly_from_json(const Json& j) {
  if (j.at("kind").get<std::string>() != "cpoly")
    throw Error("cpoly_from_json: kind mismatch");
  CPoly p;
  for (const auto& t : j.at("terms"))
    p += CPoly::monomial(t.at(0).get<int>(), t.at(1).get<int>(),
                         Complex(t.at(2).get<double>(), t.at(3).get<double>()));
  return p;
}

inline RPoly rpoly_from_json(const Json& j) {
  if (j.at("kind").get<std::string>() != "rpoly")
    throw Error("rpoly_from_json: kind mismatch");
  RPoly p;
  for (const auto& t : j.at("terms")) {
    if (t.at(3).get<double>() != 0.0) throw Error("rpoly_from_json: nonzero imaginary part");
    p += RPoly::monomial(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<double>());
  }
  return p;
}

// ---- weights and custom moment tables

inline Json moment_table_to_json(const WeightSpec& w, int max_degree) {
  Json moments = Json::array();
  for (int d = 0; d <= max_degree; ++d)
    for (int k = d; 2 * k >= d; --k) {
      const int j = d - k;  // k >= j only; the rest follows by conjugation
      const Complex m = moment(w, k, j);
      moments.push_back({k, j, m.real(), m.imag()});
    }
  return Json{{"max_degree", max_degree}, {"moments", moments}};
}

inline WeightSpec moment_table_from_json(const Json& j) {
  MomentTable t;
  t.max_degree = j.at("max_degree").get<int>();
  for (const auto& e : j.at("moments")) {
    const int k = e.at(0).get<int>(), jj = e.at(1).get<int>();
    t.entries[{k, jj}] = Complex(e.at(2).get<double>(), e.at(3).get<double>());
  }
  return WeightSpec::custom(std::move(t));
}

inline Json weight_to_json(const WeightSpec& w) {
  Json j{{"kind", w.name()}};
  if (w.kind() == WeightKind::disk) j["lambda"] = w.lambda();
  if (w.kind() == WeightKind::custom) {
    const MomentTable& t = w.table();
    Json moments = Json::array();
    for (const auto& [kj, m] : t.entries)
      moments.push_back({kj.first, kj.second, m.real(), m.imag()});
    j["max_degree"] = t.max_degree;
    j["moments"] = moments;
  }
  return j;
}

inline WeightSpec weight_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "hermite") return WeightSpec::hermite();
  if (kind == "disk") return WeightSpec::disk(j.at("lambda").get<double>());
  if (kind == "deltoid-t") return WeightSpec::deltoid_t();
  if (kind == "deltoid-u") return WeightSpec::deltoid_u();
  if (kind == "custom") return moment_table_from_json(j);
  throw Error("weight_from_json: unknown kind '" + kind + "'");
}

// ---- basis sets; gram matrices are stored as row-major [re,im] pairs.

inline Json gram_to_json(const Eigen::MatrixXcd& g) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index k = 0; k < g.cols(); ++k)
      rows.push_back({g(i, k).real(), g(i, k).imag()});
  return rows;
}

inline Eigen::MatrixXcd gram_from_json(const Json& j, int dim) {
  if (int(j.size()) != dim * dim) throw Error("gram_from_json: size mismatch");
  Eigen::MatrixXcd g(dim, dim);
  int idx = 0;
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k, ++idx)
      g(i, k) = Complex(j[idx].at(0).get<double>(), j[idx].at(1).get<double>());
  return g;
}

inline Json basis_to_json(const BasisSet& bs) {
  Json levels = Json::array();
  for (const auto& lv : bs.levels) {
    Json polys = Json::array();
    for (const auto& p : lv.polys) polys.push_back(poly_to_json(p));
    levels.push_back(Json{{"n", lv.n}, {"polys", polys}, {"gram", gram_to_json(lv.gram)}});
  }
  return Json{{"weight", weight_to_json(bs.weight)},
              {"normalization", bs.norm == Normalization::monic ? "monic" : "orthonormal"},
              {"levels", levels}};
}

inline BasisSet basis_from_json(const Json& j) {
  BasisSet bs{weight_from_json(j.at("weight")),
              j.at("normalization").get<std::string>() == "monic" ? Normalization::monic
                                                                  : Normalization::orthonormal,
              {}};
  for (const auto& jl : j.at("levels")) {
    BasisLevel lv;
    lv.n = jl.at("n").get<int>();
    lv.norm = bs.norm;
    for (const auto& jp : jl.at("polys")) lv.polys.push_back(cpoly_from_json(jp));
    lv.gram = gram_from_json(jl.at("gram"), lv.n + 1);
    bs.levels.push_back(std::move(lv));
  }
  return bs;
}

inline Json real_basis_to_json(const RealBasisSet& rbs) {
  Json levels = Json::array();
  for (std::size_t m = 0; m < rbs.levels.size(); ++m) {
    Json polys = Json::array();
    for (const auto& p : rbs.levels[m]) polys.push_back(poly_to_json(p));
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m + 1, m + 1);
    levels.push_back(Json{{"n", int(m)}, {"polys", polys}, {"gram", gram_to_json(id)}});
  }
  return Json{{"weight", weight_to_json(rbs.weight)},
              {"normalization", rbs.norm == Normalization::monic ? "monic" : "orthonormal"},
              {"levels", levels}};
}

inline RealBasisSet real_basis_from_json(const Json& j) {
  RealBasisSet rbs{weight_from_json(j.at("weight")),
                   j.at("normalization").get<std::string>() == "monic"
                       ? Normalization::monic
                       : Normalization::orthonormal,
                   {}};
  for (const auto& jl : j.at("levels")) {
    std::vector<RPoly> lv;
    for (const auto& jp : jl.at("polys")) lv.push_back(rpoly_from_json(jp));
    rbs.levels.push_back(std::move(lv));
  }
  return rbs;
}

// ---- cubature rules and zero lists

inline Json rule_to_json(const CubatureRule& rule) {
  Json nodes = Json::array();
  for (const Complex& z : rule.nodes) nodes.push_back({z.real(), z.imag()});
  return Json{{"degree", rule.exact_degree},
              {"nodes", nodes},
              {"weights", rule.weights},
              {"mass", rule.total_mass}};
}

inline CubatureRule rule_from_json(const Json& j) {
  CubatureRule rule;
  rule.exact_degree = j.at("degree").get<int>();
  for (const auto& nd : j.at("nodes"))
    rule.nodes.emplace_back(nd.at(0).get<double>(), nd.at(1).get<double>());
  rule.weights = j.at("weights").get<std::vector<double>>();
  rule.total_mass = j.at("mass").get<double>();
  return rule;
}

inline Json zeros_to_json(int degree, const std::vector<Complex>& zs) {
  Json nodes = Json::array();
  for (const Complex& z : zs) nodes.push_back({z.real(), z.imag()});
  return Json{{"degree", degree}, {"count", int(zs.size())}, {"zeros", nodes}};
}

/// One JSON line per kernel evaluation.
inline std::string kernel_line(int n, Complex z, Complex zeta, Complex value,
                               const std::string& method) {
  Json j{{"n", n},
         {"z", {z.real(), z.imag()}},
         {"zeta", {zeta.real(), zeta.imag()}},
         {"value", {value.real(), value.imag()}},
         {"method", method}};
  return j.dump();
}

// ---- recurrence coefficient CSV: one row per (n, matrix-name, row, col, re, im)

namespace detail {

inline void csv_matrix(std::ostringstream& out, int n, const char* name,
                       const Eigen::MatrixXcd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << n << ',' << name << ',' << r << ',' << c << ','
          << Json(m(r, c).real()).dump() << ',' << Json(m(r, c).imag()).dump() << '\n';
    }
}

}  // namespace detail

inline std::string recurrence_csv(const RecurrenceData& rd) {
  std::ostringstream out;
  out << "n,matrix,row,col,re,im\n";
  for (int n = 0; n <= rd.degree(); ++n) {
    detail::csv_matrix(out, n, "alpha", rd.levels[n].alpha);
    detail::csv_matrix(out, n, "beta", rd.levels[n].beta);
    if (n >= 1) detail::csv_matrix(out, n, "gamma", rd.levels[n].gamma);
  }
  return out.str();
}

inline std::string real_recurrence_csv(const RealRecurrenceData& rd) {
  std::ostringstream out;
  out << "n,matrix,row,col,re,im\n";
  for (int n = 0; n <= rd.degree(); ++n) {
    detail::csv_matrix(out, n, "A1", rd.levels[n].A1.cast<Complex>());
    detail::csv_matrix(out, n, "A2", rd.levels[n].A2.cast<Complex>());
    detail::csv_matrix(out, n, "B1", rd.levels[n].B1.cast<Complex>());
    detail::csv_matrix(out, n, "B2", rd.levels[n].B2.cast<Complex>());
  }
  return out.str();
}

}  // namespace ortho2c
