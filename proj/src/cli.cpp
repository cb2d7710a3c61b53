#include "gqs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqs/config.hpp"
#include "gqs/enumerate.hpp"
#include "gqs/errors.hpp"
#include "gqs/graph.hpp"
#include "gqs/graph6.hpp"
#include "gqs/hopf.hpp"
#include "gqs/invariants.hpp"
#include "gqs/serialize.hpp"
#include "gqs/series.hpp"

namespace gqs {

namespace {

using nlohmann::ordered_json;

CanonGraph graph_arg(const std::string& g6) { return decode_graph6(g6).graph; }

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open \"" + path + "\"", 0);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Non-blank lines of a multi-graph input, trimmed.
std::vector<std::string> graph_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trimmed(line);
    if (!t.empty()) lines.push_back(std::move(t));
  }
  return lines;
}

std::vector<CanonGraph> element_display_keys(const HopfElement& x) {
  std::vector<CanonGraph> keys;
  keys.reserve(x.term_count());
  for (const auto& [g, c] : x.terms()) keys.push_back(g);
  std::sort(keys.begin(), keys.end(), term_order_less);
  return keys;
}

void print_element(const HopfElement& x, bool json, std::ostream& out) {
  if (json) {
    out << element_json(x).dump(2) << '\n';
    return;
  }
  for (const CanonGraph& g : element_display_keys(x)) {
    out << coeff_string(x.coefficient(g)) << ' ' << encode_graph6(g) << '\n';
  }
}

void print_tensor(const TensorElement& x, bool json, std::ostream& out) {
  if (json) {
    out << tensor_json(x).dump(2) << '\n';
    return;
  }
  std::vector<TensorElement::Key> keys;
  keys.reserve(x.term_count());
  for (const auto& [k, c] : x.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end(),
            [](const TensorElement::Key& a, const TensorElement::Key& b) {
              if (a.first != b.first)
                return term_order_less(a.first, b.first);
              return term_order_less(a.second, b.second);
            });
  for (const auto& [l, r] : keys) {
    out << coeff_string(x.coefficient(l, r)) << ' ' << encode_graph6(l) << ' '
        << encode_graph6(r) << '\n';
  }
}

// Hosts with at most five nodes in table order: by node count, then edge
// count, then colexicographic edge sequence.
std::vector<CanonGraph> table_pool() {
  std::vector<CanonGraph> pool = generate_by_nodes(5);
  pool.erase(std::remove_if(pool.begin(), pool.end(),
                            [](const CanonGraph& g) { return g.is_empty(); }),
             pool.end());
  std::sort(pool.begin(), pool.end(), matrix_order_less);
  return pool;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err) {
  reset_limits();
  struct LimitGuard {
    ~LimitGuard() { reset_limits(); }
  } limit_guard;

  CLI::App app{"exact subgraph-counting algebra on unlabeled graphs"};
  app.name("gqs");

  int max_nodes = limits().max_nodes;
  int max_edges = limits().max_edges;
  bool json = false;
  app.add_option("--max-nodes", max_nodes,
                 "largest allowed connected component / label window")
      ->envname("GQS_MAX_NODES")
      ->check(CLI::Range(1, 20));
  app.add_option("--max-edges", max_edges,
                 "largest allowed edge count for edge-indexed operations")
      ->envname("GQS_MAX_EDGES")
      ->check(CLI::Range(0, 12));
  app.add_flag("--json", json, "emit JSON instead of plain text");
  app.require_subcommand(1);

  // canon
  std::string canon_input = "-";
  std::string canon_g6;
  auto* canon_cmd =
      app.add_subcommand("canon", "canonical form of an edge-list graph");
  canon_cmd->fallthrough();
  canon_cmd->add_option("input", canon_input,
                        "edge-list file, or - for standard input");
  canon_cmd->add_option("--g6", canon_g6, "graph given as graph6 instead");

  // eval
  std::string eval_pattern;
  std::string eval_host;
  bool eval_oracle = false;
  auto* eval_cmd =
      app.add_subcommand("eval", "count copies of a pattern inside a host");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--pattern", eval_pattern, "pattern graph6")
      ->required();
  eval_cmd->add_option("--host", eval_host, "host graph6")->required();
  eval_cmd->add_flag("--oracle", eval_oracle,
                     "use the independent subset-enumeration route");

  // product
  std::vector<std::string> product_args;
  auto* product_cmd =
      app.add_subcommand("product", "product of two basis elements");
  product_cmd->fallthrough();
  product_cmd->add_option("graphs", product_args, "two graph6 operands")
      ->expected(2);

  // coproduct
  std::string coproduct_arg;
  auto* coproduct_cmd =
      app.add_subcommand("coproduct", "coproduct of a basis element");
  coproduct_cmd->fallthrough();
  coproduct_cmd->add_option("graph", coproduct_arg, "graph6 operand")
      ->required();

  // antipode
  std::string antipode_arg;
  auto* antipode_cmd =
      app.add_subcommand("antipode", "antipode of a basis element");
  antipode_cmd->fallthrough();
  antipode_cmd->add_option("graph", antipode_arg, "graph6 operand")
      ->required();

  // binom
  int binom_n = 0;
  auto* binom_cmd = app.add_subcommand(
      "binom", "binomial of the one-edge element: sum of all n-edge graphs");
  binom_cmd->fallthrough();
  binom_cmd->add_option("n", binom_n, "order")->required();

  // iso
  std::vector<std::string> iso_args;
  auto* iso_cmd = app.add_subcommand(
      "iso", "test two graphs for isomorphism via count vectors");
  iso_cmd->fallthrough();
  iso_cmd->add_option("graphs", iso_args, "two graph6 operands")->expected(2);

  // vector
  std::string vector_input = "-";
  int vector_n = 0;
  auto* vector_cmd = app.add_subcommand(
      "vector", "connected-pattern count vectors of graph6 hosts, as CSV");
  vector_cmd->fallthrough();
  vector_cmd->add_option("input", vector_input,
                         "file of graph6 lines, or - for standard input");
  vector_cmd->add_option("--n", vector_n, "node bound of the pattern family")
      ->required();

  // deck
  std::string deck_arg;
  auto* deck_cmd =
      app.add_subcommand("deck", "one-vertex-deleted cards of a host");
  deck_cmd->fallthrough();
  deck_cmd->add_option("graph", deck_arg, "host graph6")->required();

  // kelly
  std::string kelly_pattern;
  std::string kelly_host;
  auto* kelly_cmd = app.add_subcommand(
      "kelly", "deck-sum identity: both sides and whether they match");
  kelly_cmd->fallthrough();
  kelly_cmd->add_option("--pattern", kelly_pattern, "pattern graph6")
      ->required();
  kelly_cmd->add_option("--host", kelly_host, "host graph6")->required();

  // matrix
  int matrix_max = 23;
  auto* matrix_cmd = app.add_subcommand(
      "matrix", "lower-triangular table of pattern counts between the "
                "smallest graphs");
  matrix_cmd->fallthrough();
  matrix_cmd->add_option("--max", matrix_max, "number of rows")
      ->check(CLI::Range(1, 33));

  // series
  std::string series_arg;
  int series_labels = 0;
  auto* series_cmd = app.add_subcommand(
      "series", "labeled monomial expansion truncated to a label window");
  series_cmd->fallthrough();
  series_cmd->add_option("graph", series_arg, "graph6 operand")->required();
  series_cmd->add_option("--labels", series_labels, "label window size")
      ->required();

  // generate
  int generate_edges = 0;
  int generate_nodes = 0;
  bool generate_connected = false;
  bool generate_count = false;
  auto* generate_cmd = app.add_subcommand(
      "generate", "distinct graphs listed as graph6, or their counts");
  generate_cmd->fallthrough();
  auto* generate_mode = generate_cmd->add_option_group("mode");
  auto* generate_edges_opt = generate_mode->add_option(
      "--edges", generate_edges, "graphs with exactly this many edges");
  auto* generate_nodes_opt = generate_mode->add_option(
      "--nodes", generate_nodes, "graphs with at most this many nodes");
  generate_mode->require_option(1);
  generate_cmd->add_flag("--connected", generate_connected,
                         "keep connected graphs only");
  generate_cmd->add_flag("--count", generate_count,
                         "print the count sequence 0..bound instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    set_limits({max_nodes, max_edges});

    if (canon_cmd->parsed()) {
      EdgeList edges;
      if (!canon_g6.empty()) {
        edges = graph_arg(canon_g6).edges();
      } else {
        edges = parse_edge_text(read_all(canon_input, in));
      }
      const CanonGraph g = canonical(edges);
      if (json) {
        out << graph_json(g).dump(2) << '\n';
      } else {
        out << edge_text(g.edges());
      }
    } else if (eval_cmd->parsed()) {
      const CanonGraph pattern = graph_arg(eval_pattern);
      const CanonGraph host = graph_arg(eval_host);
      const long long value = eval_oracle ? evaluate_oracle(pattern, host)
                                          : evaluate(pattern, host);
      if (json) {
        out << ordered_json(value).dump() << '\n';
      } else {
        out << value << '\n';
      }
    } else if (product_cmd->parsed()) {
      const HopfElement x =
          multiply(HopfElement::basis(graph_arg(product_args[0])),
                   HopfElement::basis(graph_arg(product_args[1])));
      print_element(x, json, out);
    } else if (coproduct_cmd->parsed()) {
      print_tensor(coproduct(HopfElement::basis(graph_arg(coproduct_arg))),
                   json, out);
    } else if (antipode_cmd->parsed()) {
      print_element(antipode(HopfElement::basis(graph_arg(antipode_arg))),
                    json, out);
    } else if (binom_cmd->parsed()) {
      print_element(binomial_of_edge(binom_n), json, out);
    } else if (iso_cmd->parsed()) {
      const bool same = iso_test(graph_arg(iso_args[0]), graph_arg(iso_args[1]));
      if (json) {
        out << ordered_json(same).dump() << '\n';
      } else {
        out << (same ? "true" : "false") << '\n';
      }
    } else if (vector_cmd->parsed()) {
      const std::vector<std::string> names =
          graph_lines(read_all(vector_input, in));
      std::vector<InvariantVector> rows;
      rows.reserve(names.size());
      for (const std::string& name : names) {
        rows.push_back(invariant_vector(graph_arg(name), vector_n));
      }
      if (json) {
        ordered_json patterns = ordered_json::array();
        for (const CanonGraph& p : separating_family(vector_n)) {
          patterns.push_back(graph_json(p));
        }
        ordered_json host_rows = ordered_json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          ordered_json row;
          row["host"] = names[i];
          ordered_json values = ordered_json::array();
          for (const auto& [pattern, value] : rows[i].entries) {
            values.push_back(value);
          }
          row["values"] = std::move(values);
          host_rows.push_back(std::move(row));
        }
        ordered_json doc;
        doc["n"] = vector_n;
        doc["patterns"] = std::move(patterns);
        doc["hosts"] = std::move(host_rows);
        out << doc.dump(2) << '\n';
      } else {
        out << invariant_csv(names, rows);
      }
    } else if (deck_cmd->parsed()) {
      const Deck d = deck(graph_arg(deck_arg));
      if (json) {
        ordered_json doc;
        doc["card_nodes"] = d.card_nodes;
        ordered_json cards = ordered_json::array();
        for (const CanonGraph& card : d.cards) {
          cards.push_back(encode_graph6(card, d.card_nodes));
        }
        doc["cards"] = std::move(cards);
        out << doc.dump(2) << '\n';
      } else {
        for (const CanonGraph& card : d.cards) {
          out << encode_graph6(card, d.card_nodes) << '\n';
        }
      }
    } else if (kelly_cmd->parsed()) {
      const KellyReport report =
          kelly_check(graph_arg(kelly_pattern), graph_arg(kelly_host));
      if (json) {
        ordered_json doc;
        doc["lhs"] = report.lhs;
        doc["rhs"] = report.rhs;
        doc["holds"] = report.holds;
        out << doc.dump(2) << '\n';
      } else {
        out << report.lhs << ' ' << report.rhs << ' '
            << (report.holds ? "true" : "false") << '\n';
      }
    } else if (matrix_cmd->parsed()) {
      const std::vector<CanonGraph> pool = table_pool();
      if (static_cast<std::size_t>(matrix_max) > pool.size()) {
        throw DomainError("table has only " + std::to_string(pool.size()) +
                          " rows");
      }
      if (json) {
        ordered_json graphs = ordered_json::array();
        ordered_json table = ordered_json::array();
        for (int i = 0; i < matrix_max; ++i) {
          graphs.push_back(graph_json(pool[static_cast<std::size_t>(i)]));
          ordered_json row = ordered_json::array();
          for (int j = 0; j <= i; ++j) {
            row.push_back(evaluate(pool[static_cast<std::size_t>(j)],
                                   pool[static_cast<std::size_t>(i)]));
          }
          table.push_back(std::move(row));
        }
        ordered_json doc;
        doc["graphs"] = std::move(graphs);
        doc["rows"] = std::move(table);
        out << doc.dump(2) << '\n';
      } else {
        for (int i = 0; i < matrix_max; ++i) {
          for (int j = 0; j <= i; ++j) {
            const long long value =
                evaluate(pool[static_cast<std::size_t>(j)],
                         pool[static_cast<std::size_t>(i)]);
            if (j > 0) out << ' ';
            if (value == 0) {
              out << '.';
            } else {
              out << value;
            }
          }
          out << '\n';
        }
      }
    } else if (series_cmd->parsed()) {
      const TruncatedSeries s = expand(graph_arg(series_arg), series_labels);
      if (json) {
        out << series_json(s).dump(2) << '\n';
      } else {
        for (const EdgeList& monomial : s.monomials()) {
          out << edge_label(monomial) << '\n';
        }
      }
    } else if (generate_cmd->parsed()) {
      const bool by_edges = generate_edges_opt->count() > 0;
      const int bound = by_edges ? generate_edges : generate_nodes;
      (void)generate_nodes_opt;
      if (generate_count) {
        std::vector<long long> counts;
        for (int k = 0; k <= bound; ++k) {
          std::vector<CanonGraph> level =
              by_edges ? generate_by_edges(k) : generate_by_nodes(k);
          if (generate_connected) level = filter_connected(level);
          counts.push_back(static_cast<long long>(level.size()));
        }
        if (json) {
          out << ordered_json(counts).dump() << '\n';
        } else {
          for (const long long c : counts) out << c << '\n';
        }
      } else {
        std::vector<CanonGraph> level =
            by_edges ? generate_by_edges(bound) : generate_by_nodes(bound);
        if (generate_connected) level = filter_connected(level);
        if (json) {
          ordered_json names = ordered_json::array();
          for (const CanonGraph& g : level) names.push_back(encode_graph6(g));
          out << names.dump(2) << '\n';
        } else {
          for (const CanonGraph& g : level) out << encode_graph6(g) << '\n';
        }
      }
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gqs
