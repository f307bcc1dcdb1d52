#include "sumgraph/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumgraph/coloring.hpp"
#include "sumgraph/core.hpp"
#include "sumgraph/decomposition.hpp"
#include "sumgraph/formulas.hpp"
#include "sumgraph/labelings.hpp"
#include "sumgraph/oracle.hpp"
#include "sumgraph/report.hpp"
#include "sumgraph/structure.hpp"

namespace sumgraph::cli {
namespace {

using nlohmann::ordered_json;

family_spec make_family(const std::string& name, long long n, long long m,
                        bool m_given) {
  static const std::map<std::string, family_kind> kinds = {
      {"gn", family_kind::gn},
      {"g0n", family_kind::g0n},
      {"gmn", family_kind::gmn},
      {"gnc", family_kind::gn_complement},
      {"g0nc", family_kind::g0n_complement},
      {"gmnc", family_kind::gmn_complement},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw validation_error("unknown family: " + name);
  const bool wants_m = it->second == family_kind::gmn ||
                       it->second == family_kind::gmn_complement;
  if (wants_m && !m_given)
    throw validation_error("--m is required for the gmn families");
  if (!wants_m && m_given)
    throw validation_error("--m applies to the gmn families only");
  return family_spec{it->second, n, wants_m ? m : 0};
}

quantity_kind parse_quantity(const std::string& name) {
  static const std::map<std::string, quantity_kind> kinds = {
      {"degree", quantity_kind::degree},
      {"edges", quantity_kind::edge_count},
      {"c3", quantity_kind::c3},
      {"c4", quantity_kind::c4},
      {"openp3", quantity_kind::open_p3},
      {"maxsize", quantity_kind::max_size},
      {"omega", quantity_kind::omega},
      {"chi", quantity_kind::chi},
      {"chiprime", quantity_kind::chi_prime},
      {"alpha0", quantity_kind::alpha0},
      {"beta0", quantity_kind::beta0},
      {"alpha1", quantity_kind::alpha1},
      {"beta1", quantity_kind::beta1},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw validation_error("unknown quantity: " + name);
  return it->second;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json edges_json(const labeled_graph& g) {
  ordered_json edges = ordered_json::array();
  for (const edge_t& e : g.edges) edges.push_back({e.first, e.second});
  return edges;
}

// One line per entry, then a summary line; exit 1 unless everything passed.
int emit_report(const verification_report& rep, std::ostream& out) {
  for (const report_entry& e : rep.entries) {
    ordered_json j;
    j["claim"] = e.claim_id;
    j["expected"] = e.expected;
    j["actual"] = e.actual;
    j["pass"] = e.pass;
    out << j.dump() << "\n";
  }
  ordered_json summary;
  summary["passed"] = rep.passed();
  summary["failed"] = rep.failed();
  out << summary.dump() << "\n";
  return rep.all_pass() ? 0 : 1;
}

bool cycle_in_graph(const labeled_graph& g, const std::vector<label_t>& cyc) {
  if (cyc.size() != g.order() || cyc.size() < 3) return false;
  const std::set<label_t> seen(cyc.begin(), cyc.end());
  if (seen.size() != cyc.size()) return false;
  for (label_t v : cyc)
    if (!g.has_label(v)) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

int cmd_generate(const family_spec& fam, const std::string& format,
                 std::ostream& out) {
  const labeled_graph g = generate(fam);
  if (format == "dot")
    out << to_dot(g);
  else
    out << to_json(g) << "\n";
  return 0;
}

int cmd_label(const std::string& shape, long long n, bool n_given, long long m,
              bool m_given, const std::vector<long long>& sizes, label_t x,
              label_t y, std::ostream& out) {
  const auto need_n = [&] {
    if (!n_given) throw validation_error("--n is required for shape " + shape);
  };
  labeled_graph g;
  if (shape == "fan") {
    need_n();
    g = label_fan(n);
  } else if (shape == "windmill") {
    if (!m_given) throw validation_error("--m (blade count) is required for windmill");
    g = label_windmill(m);
  } else if (shape == "stars") {
    if (sizes.empty()) throw validation_error("--sizes is required for stars");
    tree_shape t;
    t.star_sizes = sizes;
    t.variant = tree_shape::kind::union_stars_apex;
    g = label_union_stars_apex(t);
  } else if (shape == "banana") {
    if (sizes.empty()) throw validation_error("--sizes is required for banana");
    tree_shape t;
    t.star_sizes = sizes;
    t.variant = tree_shape::kind::banana;
    g = label_banana_tree(t, x, y);
  } else if (shape == "tbbm") {
    need_n();
    g = label_triangular_book_bookmark(n, m_given ? m : 1);
  } else if (shape == "fanhandle") {
    need_n();
    g = label_fan_handle(n, m_given ? m : 2);
  } else {
    throw validation_error("unknown shape: " + shape);
  }
  const bool ok = verify_sum_labeling(g);
  ordered_json j;
  j["shape"] = shape;
  j["labels"] = g.labels;
  j["edges"] = edges_json(g);
  j["sum_labeling"] = ok;
  out << j.dump() << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const std::optional<family_spec>& fam,
               const std::string& fixture, bool positive_only, bool anti,
               std::ostream& out) {
  if (fam.has_value() == !fixture.empty())
    throw validation_error("give exactly one of --family and --fixture");
  const labeled_graph g = fam ? generate(*fam) : from_json(slurp(fixture));
  const bool ok =
      anti ? verify_anti_sum_labeling(g) : verify_sum_labeling(g, positive_only);
  ordered_json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j[anti ? "anti_sum_labeling" : "sum_labeling"] = ok;
  out << j.dump() << "\n";
  return ok ? 0 : 1;
}

std::optional<long long> oracle_count(const count_query& q) {
  const labeled_graph g = generate(q.family);
  switch (q.quantity) {
    case quantity_kind::degree: {
      g.index_of(q.degree_label);
      long long deg = 0;
      for (const edge_t& e : g.edges)
        if (e.first == q.degree_label || e.second == q.degree_label) ++deg;
      return deg;
    }
    case quantity_kind::edge_count:
      return static_cast<long long>(g.size());
    case quantity_kind::c3:
      return count_triangles_bf(g);
    case quantity_kind::c4:
      return count_c4_bf(g);
    case quantity_kind::open_p3:
      return count_open_p3_bf(g);
    case quantity_kind::max_size: {
      // The balanced interval attains the maximum at odd orders only; there
      // is no desk-scale search over all integral sum graphs.
      const long long order = static_cast<long long>(g.order());
      if (order % 2 == 0)
        throw validation_error(
            "maxsize has a constructive oracle at odd orders only");
      const long long m = (order - 1) / 2;
      return static_cast<long long>(interval_sum_graph(-m, m).size());
    }
    case quantity_kind::omega:
      return exact_invariants_bf(g).omega;
    case quantity_kind::chi:
      return exact_invariants_bf(g).chi;
    case quantity_kind::chi_prime:
      return exact_invariants_bf(g).chi_prime;
    case quantity_kind::alpha0:
      return exact_invariants_bf(g).alpha0;
    case quantity_kind::beta0:
      return exact_invariants_bf(g).beta0;
    case quantity_kind::alpha1: {
      const std::optional<int> a1 = exact_invariants_bf(g).alpha1;
      if (!a1) return std::nullopt;
      return static_cast<long long>(*a1);
    }
    case quantity_kind::beta1:
      return exact_invariants_bf(g).beta1;
  }
  throw validation_error("unknown quantity");
}

int cmd_count(const count_query& q, bool with_oracle, std::ostream& out) {
  const std::optional<long long> formula = count_value(q);
  ordered_json j;
  j["formula"] = formula ? ordered_json(*formula) : ordered_json(nullptr);
  int rc = 0;
  if (with_oracle) {
    const std::optional<long long> brute = oracle_count(q);
    j["oracle"] = brute ? ordered_json(*brute) : ordered_json(nullptr);
    const bool pass = formula == brute;
    j["pass"] = pass;
    rc = pass ? 0 : 1;
  }
  out << j.dump() << "\n";
  return rc;
}

int cmd_color(const family_spec& fam, const std::string& target,
              const std::string& fixture, std::ostream& out) {
  const labeled_graph g = generate(fam);
  if (target == "sumclass") {
    if (!fixture.empty())
      throw validation_error("fixture comparison supports vertex and edge targets");
    const edge_sum_partition_result part = edge_sum_partition(g);
    ordered_json classes = ordered_json::array();
    for (const auto& [sum, class_edges] : part.classes) {
      ordered_json c;
      c["sum"] = sum;
      ordered_json es = ordered_json::array();
      for (const edge_t& e : class_edges) es.push_back({e.first, e.second});
      c["edges"] = es;
      classes.push_back(c);
    }
    ordered_json j;
    j["target"] = "sumclass";
    j["classes"] = classes;
    j["chi_double_prime"] = part.chi_double_prime;
    out << j.dump() << "\n";
    return 0;
  }

  const coloring_assignment asg =
      target == "vertex" ? vertex_color(fam) : edge_color(fam);
  ordered_json arr = ordered_json::array();
  coloring_check check;
  if (target == "vertex") {
    for (const auto& [v, c] : asg.vertex_colors) arr.push_back({v, c});
    check = is_proper_vertex_coloring(g, asg.vertex_colors);
  } else {
    for (const auto& [e, c] : asg.edge_colors)
      arr.push_back({e.first, e.second, c});
    check = is_proper_edge_coloring(g, asg.edge_colors);
  }
  ordered_json j;
  j["target"] = target;
  j["scheme"] = asg.scheme;
  j["assignment"] = arr;
  j["colors_used"] = check.colors_used;
  j["proper"] = check.proper;
  int rc = check.proper ? 0 : 1;
  if (!fixture.empty()) {
    ordered_json want;
    try {
      want = ordered_json::parse(slurp(fixture));
    } catch (const nlohmann::json::parse_error& e) {
      throw parse_error(e.what(), e.byte);
    }
    if (!want.is_object() || !want.contains("assignment") ||
        !want["assignment"].is_array())
      throw parse_error("fixture must be an object with an \"assignment\" array", 0);
    const bool match = want["assignment"] == arr;
    j["fixture_match"] = match;
    if (!match) rc = 1;
  }
  out << j.dump() << "\n";
  return rc;
}

int cmd_structure(const std::string& check, long long n, long long m,
                  bool m_given, long long j_flag, bool j_given,
                  std::ostream& out) {
  verification_report rep;
  const auto ll_str = [](long long v) { return std::to_string(v); };
  if (check == "removal") {
    const long long j = j_given ? j_flag : n / 2;
    const labeled_graph reduced = remove_supplementary(n, j);
    rep.add_equal("removal-order", n - 2,
                  static_cast<long long>(reduced.order()));
    if (n - 2 <= static_cast<long long>(effective_order_cap(12))) {
      const labeled_graph target = generate({family_kind::gn, n - 2, 0});
      rep.add_true("removal-iso-gn-" + ll_str(n - 2),
                   is_isomorphic(reduced, target).valid);
    }
  } else if (check == "growth") {
    if (n < 1) throw validation_error("--n must be at least 1");
    long long k = n % 2 == 0 ? 2 : 1;
    labeled_graph g = generate({family_kind::gn, k, 0});
    while (k < n) {
      g = grow_gn(g);
      k += 2;
      const labeled_graph want = generate({family_kind::gn, k, 0});
      rep.add_true("growth-step-" + ll_str(k),
                   g.labels == want.labels && g.edges == want.edges);
    }
  } else if (check == "hamiltonian") {
    std::vector<label_t> cyc;
    labeled_graph g;
    if (m_given) {
      cyc = hamiltonian_gmn(m, n);
      g = generate({family_kind::gmn, n, m});
    } else {
      cyc = hamiltonian_gdelta(n);
      g = generate({family_kind::gmn, n - 2, 1});
    }
    ordered_json j;
    j["cycle"] = cyc;
    out << j.dump() << "\n";
    rep.add_equal("hamiltonian-cycle-length",
                  static_cast<long long>(g.order()),
                  static_cast<long long>(cyc.size()));
    rep.add_true("hamiltonian-cycle-valid", cycle_in_graph(g, cyc));
  } else if (check == "maximal") {
    const std::vector<family_spec> families = maximal_isg(n);
    ordered_json names = ordered_json::array();
    for (const family_spec& fam : families) names.push_back(family_name(fam));
    ordered_json j;
    j["families"] = names;
    out << j.dump() << "\n";
    rep.add_true("maximal-family-found", !families.empty());
    if (n % 2 == 1) {
      for (const family_spec& fam : families)
        rep.add_equal("maximal-size-" + family_name(fam), max_isg_size(n),
                      edge_count(fam));
    }
  } else if (check == "complement") {
    rep = check_complement_identities(n);
  } else {
    throw validation_error("unknown check: " + check);
  }
  return emit_report(rep, out);
}

ordered_json decomposition_json(const decomposition& dec) {
  ordered_json scheme;
  scheme["first"] = dec.scheme.a;
  scheme["difference"] = dec.scheme.d;
  scheme["shape"] = dec.scheme.shape;
  scheme["arithmetic"] = dec.scheme.arithmetic;
  ordered_json sizes = ordered_json::array();
  ordered_json parts = ordered_json::array();
  for (const labeled_graph& part : dec.parts) {
    sizes.push_back(part.size());
    parts.push_back(edges_json(part));
  }
  ordered_json j;
  j["host_order"] = dec.host.order();
  j["host_size"] = dec.host.size();
  j["scheme"] = scheme;
  j["sizes"] = sizes;
  j["parts"] = parts;
  return j;
}

int cmd_decompose(const std::string& target, const std::string& scheme,
                  long long n, const std::vector<long long>& search,
                  std::ostream& out) {
  std::vector<decomposition> found;
  if (target == "kn" && scheme == "books") {
    found.push_back(cmsd_kn_books(n));
  } else if (target == "kn" && scheme == "stars") {
    found.push_back(cmsd_kn_stars(n));
  } else if (target == "kn" && scheme == "fans") {
    if (search.size() != 2)
      throw validation_error("--search FIRST DIFF is required for kn fans");
    const std::optional<decomposition> dec =
        search_fan_cmsd(n, search[0], search[1]);
    if (!dec) {
      const feasibility_result feas =
          feasibility(decomposition_target::complete, part_shape::fans, n);
      ordered_json j;
      j["result"] = "none";
      j["reason"] = feas.feasible ? "search exhausted" : feas.reason;
      out << j.dump() << "\n";
      return 0;
    }
    found.push_back(*dec);
  } else if (target == "g0n" && scheme == "books") {
    found = cmsd_g0n_books(n);
  } else if (target == "g0n" && scheme == "fans") {
    found.push_back(cmsd_g0n_fans(n));
  } else if (target == "g0n" && scheme == "stars") {
    throw validation_error("no star decomposition scheme for the [0,n] family");
  } else {
    throw validation_error("unknown target/scheme: " + target + "/" + scheme);
  }
  verification_report all;
  for (const decomposition& dec : found) {
    out << decomposition_json(dec).dump() << "\n";
    const verification_report rep = validate(dec);
    all.entries.insert(all.entries.end(), rep.entries.begin(),
                       rep.entries.end());
  }
  return emit_report(all, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"sum and integral sum graph toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> family_names = {"gn",  "g0n",  "gmn",
                                                 "gnc", "g0nc", "gmnc"};
  long long n = 0;
  long long m = 0;
  long long vertex_label = 0;
  long long j_flag = 0;
  long long max_n = 10;
  label_t x = 1;
  label_t y = 2;
  std::string family;
  std::string format = "json";
  std::string shape;
  std::string quantity;
  std::string target;
  std::string scheme;
  std::string check;
  std::string fixture;
  std::vector<long long> sizes;
  std::vector<long long> search;
  bool with_oracle = false;
  bool positive_only = false;
  bool anti = false;

  CLI::App* sub_generate = app.add_subcommand("generate", "build a family member");
  sub_generate->add_option("--family", family, "family kind")
      ->required()
      ->check(CLI::IsMember(family_names));
  sub_generate->add_option("--n", n, "positive bound")->required();
  sub_generate->add_option("--m", m, "negative bound magnitude");
  sub_generate->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* sub_label = app.add_subcommand("label", "run a labeling recipe");
  sub_label->add_option("--shape", shape, "target shape")
      ->required()
      ->check(CLI::IsMember(
          {"fan", "windmill", "stars", "banana", "tbbm", "fanhandle"}));
  sub_label->add_option("--n", n, "size parameter");
  sub_label->add_option("--m", m, "secondary parameter");
  sub_label->add_option("--sizes", sizes, "star sizes, comma separated")
      ->delimiter(',');
  sub_label->add_option("--x", x, "first seed label");
  sub_label->add_option("--y", y, "second seed label");

  CLI::App* sub_verify = app.add_subcommand("verify", "check the sum labeling");
  sub_verify->add_option("--family", family, "family kind")
      ->check(CLI::IsMember(family_names));
  sub_verify->add_option("--n", n, "positive bound");
  sub_verify->add_option("--m", m, "negative bound magnitude");
  sub_verify->add_option("--fixture", fixture, "graph JSON file");
  sub_verify->add_flag("--positive-only", positive_only,
                       "require every label positive");
  sub_verify->add_flag("--anti", anti, "check the anti sum property instead");

  CLI::App* sub_count = app.add_subcommand("count", "evaluate a closed form");
  sub_count->add_option("--family", family, "family kind")
      ->required()
      ->check(CLI::IsMember(family_names));
  sub_count->add_option("--n", n, "positive bound")->required();
  sub_count->add_option("--m", m, "negative bound magnitude");
  sub_count->add_option("--quantity", quantity, "what to count")
      ->required()
      ->check(CLI::IsMember({"degree", "edges", "c3", "c4", "openp3", "maxsize",
                             "omega", "chi", "chiprime", "alpha0", "beta0",
                             "alpha1", "beta1"}));
  sub_count->add_option("--label", vertex_label,
                        "vertex for degree; write --label=-3 for negatives");
  sub_count->add_flag("--oracle", with_oracle, "cross check by brute force");

  CLI::App* sub_color = app.add_subcommand("color", "emit a coloring");
  sub_color->add_option("--family", family, "family kind")
      ->required()
      ->check(CLI::IsMember(family_names));
  sub_color->add_option("--n", n, "positive bound")->required();
  sub_color->add_option("--m", m, "negative bound magnitude");
  sub_color->add_option("--target", target, "vertex, edge, or sumclass")
      ->required()
      ->check(CLI::IsMember({"vertex", "edge", "sumclass"}));
  sub_color->add_option("--fixture", fixture,
                        "JSON file with the expected assignment");

  CLI::App* sub_structure =
      app.add_subcommand("structure", "run a structural check");
  sub_structure->add_option("--check", check, "which family property")
      ->required()
      ->check(CLI::IsMember(
          {"removal", "growth", "hamiltonian", "maximal", "complement"}));
  sub_structure->add_option("--n", n, "size parameter")->required();
  sub_structure->add_option("--m", m, "negative bound magnitude");
  sub_structure->add_option("--j", j_flag, "supplementary index to remove");

  CLI::App* sub_decompose =
      app.add_subcommand("decompose", "decompose a host graph");
  sub_decompose->add_option("--target", target, "host graph family")
      ->required()
      ->check(CLI::IsMember({"kn", "g0n"}));
  sub_decompose->add_option("--scheme", scheme, "part shape")
      ->required()
      ->check(CLI::IsMember({"books", "stars", "fans"}));
  sub_decompose->add_option("--n", n, "host size parameter")->required();
  sub_decompose
      ->add_option("--search", search, "first size and common difference")
      ->expected(2);

  CLI::App* sub_report =
      app.add_subcommand("report", "run the verification matrix");
  sub_report->add_option("--max-n", max_n, "largest family size");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sumgraph");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (sub_generate->parsed()) {
      return cmd_generate(
          make_family(family, n, m, sub_generate->count("--m") > 0), format,
          out);
    }
    if (sub_label->parsed()) {
      return cmd_label(shape, n, sub_label->count("--n") > 0, m,
                       sub_label->count("--m") > 0, sizes, x, y, out);
    }
    if (sub_verify->parsed()) {
      std::optional<family_spec> fam;
      if (sub_verify->count("--family") > 0) {
        if (sub_verify->count("--n") == 0)
          throw validation_error("--n is required with --family");
        fam = make_family(family, n, m, sub_verify->count("--m") > 0);
      }
      return cmd_verify(fam, fixture, positive_only, anti, out);
    }
    if (sub_count->parsed()) {
      count_query q;
      q.family = make_family(family, n, m, sub_count->count("--m") > 0);
      q.quantity = parse_quantity(quantity);
      q.degree_label = vertex_label;
      if (q.quantity == quantity_kind::degree &&
          sub_count->count("--label") == 0)
        throw validation_error("--label is required for the degree quantity");
      return cmd_count(q, with_oracle, out);
    }
    if (sub_color->parsed()) {
      return cmd_color(make_family(family, n, m, sub_color->count("--m") > 0),
                       target, fixture, out);
    }
    if (sub_structure->parsed()) {
      return cmd_structure(check, n, m, sub_structure->count("--m") > 0,
                           j_flag, sub_structure->count("--j") > 0, out);
    }
    if (sub_decompose->parsed()) {
      return cmd_decompose(target, scheme, n, search, out);
    }
    if (sub_report->parsed()) {
      return emit_report(sumgraph::report(max_n), out);
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const construction_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sumgraph::cli
