#include "ko/io.hpp"

#include <sstream>

namespace ko {

Json export_lsa(const LSA& g) {
  Json doc;
  doc["p"] = g.p();
  doc["labels"] = g.labels;
  Json basis = Json::array();
  for (std::size_t i = 0; i < g.dim; ++i) {
    Json terms = Json::array();
    if (i < g.basis_terms.size())
      for (const auto& [r, c] : g.basis_terms[i]) terms.push_back(Json::array({r, c}));
    basis.push_back(std::move(terms));
  }
  doc["basis"] = std::move(basis);
  doc["parity"] = g.parity;
  doc["degree"] = g.degree;
  Json sc = Json::array();
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j)
      for (const auto& [k, v] : g.bracket_basis(i, j)) sc.push_back(Json::array({i, j, k, v}));
  doc["sc"] = std::move(sc);
  Json pmap = Json::array();
  for (const auto& [i, v] : g.pmap) {
    Json img = Json::array();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k]) img.push_back(Json::array({k, v[k]}));
    pmap.push_back(Json::array({i, std::move(img)}));
  }
  doc["pmap"] = std::move(pmap);
  return doc;
}

LSA import_lsa(const Json& doc) {
  try {
    LSA g;
    g.field = PrimeField(doc.at("p").get<std::uint32_t>());
    g.labels = doc.at("labels").get<std::vector<std::string>>();
    g.dim = g.labels.size();
    g.parity = doc.at("parity").get<std::vector<std::uint8_t>>();
    g.degree = doc.at("degree").get<std::vector<int>>();
    const auto& basis = doc.at("basis");
    if (g.parity.size() != g.dim || g.degree.size() != g.dim || basis.size() != g.dim)
      throw Error("import_lsa: field lengths disagree");
    bool any_terms = false;
    for (const auto& terms : basis) {
      std::vector<std::pair<std::vector<int>, Scalar>> t;
      for (const auto& term : terms) t.emplace_back(term.at(0).get<std::vector<int>>(), term.at(1).get<Scalar>());
      any_terms = any_terms || !t.empty();
      g.basis_terms.push_back(std::move(t));
    }
    if (!any_terms) g.basis_terms.clear();
    g.sc.assign(g.dim * g.dim, {});
    for (const auto& e : doc.at("sc")) {
      const auto i = e.at(0).get<std::size_t>(), j = e.at(1).get<std::size_t>();
      const auto k = e.at(2).get<std::uint32_t>();
      const auto v = e.at(3).get<Scalar>();
      if (i >= g.dim || j >= g.dim || k >= g.dim || v == 0 || v >= g.p()) throw Error("import_lsa: bad sc entry");
      auto& slot = g.sc[i * g.dim + j];
      if (!slot.empty() && slot.back().first >= k) throw Error("import_lsa: sc entries out of order");
      slot.emplace_back(k, v);
    }
    for (const auto& e : doc.at("pmap")) {
      const auto i = e.at(0).get<std::size_t>();
      if (i >= g.dim) throw Error("import_lsa: bad pmap index");
      Vec v(g.dim, 0);
      for (const auto& kv : e.at(1)) {
        const auto k = kv.at(0).get<std::size_t>();
        if (k >= g.dim) throw Error("import_lsa: bad pmap entry");
        v[k] = kv.at(1).get<Scalar>() % g.p();
      }
      g.pmap[i] = std::move(v);
    }
    // Every bracket must respect degree and parity.
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t j = 0; j < g.dim; ++j)
        for (const auto& [k, v] : g.bracket_basis(i, j))
          if (g.degree[k] != g.degree[i] + g.degree[j] || g.parity[k] != ((g.parity[i] + g.parity[j]) & 1u))
            throw Error("import_lsa: bracket [" + g.labels[i] + ", " + g.labels[j] + "] breaks the grading");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("import_lsa: ") + e.what());
  }
}

PChar pchar_from_json(const LSA& g, const Json& doc) {
  PChar chi = zero_pchar(g);
  try {
    if (doc.is_array()) {
      if (doc.size() != g.dim) throw Error("p-character: expected " + std::to_string(g.dim) + " values");
      for (std::size_t i = 0; i < g.dim; ++i) chi.values[i] = g.F().reduce(doc[i].get<std::int64_t>());
    } else if (doc.is_object()) {
      for (const auto& [key, val] : doc.items()) {
        std::size_t idx = g.dim;
        for (std::size_t i = 0; i < g.dim && idx == g.dim; ++i) {
          if (g.labels[i] == key) idx = i;
          if (i < g.basis_terms.size() && g.basis_terms[i].size() == 1) {
            std::ostringstream s;
            const auto& r = g.basis_terms[i][0].first;
            for (std::size_t t = 0; t < r.size(); ++t) s << (t ? "," : "") << r[t];
            if (s.str() == key) idx = i;
          }
        }
        if (idx == g.dim) throw Error("p-character: unknown basis element '" + key + "'");
        chi.values[idx] = g.F().reduce(val.get<std::int64_t>());
      }
    } else {
      throw Error("p-character: expected an array or an object");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("p-character: ") + e.what());
  }
  validate_pchar(g, chi);
  return chi;
}

Json pchar_to_json(const LSA& g, const PChar& chi) {
  Json out = Json::object();
  for (std::size_t i = 0; i < g.dim; ++i)
    if (chi.values[i]) out[g.labels[i]] = chi.values[i];
  return out;
}

}  // namespace ko
