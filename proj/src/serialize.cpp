#include "gqs/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gqs/errors.hpp"

namespace gqs {

namespace {

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Keys of an element map in display order.
std::vector<CanonGraph> display_keys(const HopfElement& x) {
  std::vector<CanonGraph> keys;
  keys.reserve(x.term_count());
  for (const auto& [g, c] : x.terms()) keys.push_back(g);
  std::sort(keys.begin(), keys.end(), term_order_less);
  return keys;
}

}  // namespace

std::string edge_text(const EdgeList& edges) {
  std::ostringstream out;
  for (const auto& [a, b] : edges) out << a << ' ' << b << '\n';
  return out.str();
}

EdgeList parse_edge_text(const std::string& text) {
  EdgeList edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::size_t line_start = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t here = line_start;
    line_start += line.size() + 1;
    if (is_blank(line)) continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("expected \"i j\" on line " + std::to_string(lineno),
                       here);
    }
    if (a < 1 || b < 1 || a > 1000000 || b > 1000000) {
      throw ParseError(
          "vertex label out of range on line " + std::to_string(lineno), here);
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return edges;
}

std::string edge_label(const EdgeList& edges) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, b] : edges) {
    if (!first) out << ';';
    out << a << ' ' << b;
    first = false;
  }
  return out.str();
}

std::string coeff_string(const Rational& c) {
  return c.get_str();
}

Rational parse_coeff(const std::string& s) {
  if (s.empty()) throw ParseError("empty coefficient", 0);
  const auto digits_only = [](const std::string& part) {
    if (part.empty()) return false;
    return std::all_of(part.begin(), part.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  std::string body = s;
  bool negative = false;
  if (body[0] == '-') {
    negative = true;
    body.erase(0, 1);
  }
  const auto slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den) || den == "0") {
    throw ParseError("bad coefficient \"" + s + "\"", 0);
  }
  Rational c{mpz_class(num), mpz_class(den)};
  c.canonicalize();
  return negative ? Rational(-c) : c;
}

nlohmann::ordered_json graph_json(const CanonGraph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return edges;
}

nlohmann::ordered_json element_json(const HopfElement& x) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const CanonGraph& g : display_keys(x)) {
    nlohmann::ordered_json term;
    term["graph"] = graph_json(g);
    term["coeff"] = coeff_string(x.coefficient(g));
    out.push_back(std::move(term));
  }
  return out;
}

nlohmann::ordered_json tensor_json(const TensorElement& x) {
  std::vector<TensorElement::Key> keys;
  keys.reserve(x.term_count());
  for (const auto& [k, c] : x.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end(),
            [](const TensorElement::Key& a, const TensorElement::Key& b) {
              if (a.first != b.first)
                return term_order_less(a.first, b.first);
              return term_order_less(a.second, b.second);
            });
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& key : keys) {
    nlohmann::ordered_json term;
    term["left"] = graph_json(key.first);
    term["right"] = graph_json(key.second);
    term["coeff"] = coeff_string(x.coefficient(key.first, key.second));
    out.push_back(std::move(term));
  }
  return out;
}

nlohmann::ordered_json series_json(const TruncatedSeries& s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const EdgeList& monomial : s.monomials()) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : monomial) edges.push_back({a, b});
    out.push_back(std::move(edges));
  }
  return out;
}

HopfElement element_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("element JSON must be an array", 0);
  HopfElement x;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("graph") ||
        !term.contains("coeff")) {
      throw ParseError("element term needs \"graph\" and \"coeff\"", 0);
    }
    EdgeList edges;
    for (const auto& pair : term["graph"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("graph edges must be [i, j] pairs", 0);
      }
      edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    x.add_term(canonical(edges), parse_coeff(term["coeff"].get<std::string>()));
  }
  return x;
}

std::string invariant_csv(const std::vector<std::string>& host_names,
                          const std::vector<InvariantVector>& rows) {
  if (host_names.size() != rows.size()) {
    throw DomainError("one host name per invariant row required");
  }
  std::ostringstream out;
  out << "host";
  if (!rows.empty()) {
    for (const auto& [pattern, value] : rows.front().entries) {
      out << ',' << edge_label(pattern.edges());
    }
  }
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].n != rows.front().n) {
      throw DomainError("invariant rows must share the same n");
    }
    out << host_names[i];
    for (const auto& [pattern, value] : rows[i].entries) {
      out << ',' << value;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gqs
