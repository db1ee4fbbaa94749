#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetdim/posetdim.hpp"

namespace pd = posetdim;
using nlohmann::json;

namespace {

struct Report {
  bool as_json = false;
  json rec;
  std::string human;

  void line(const std::string& s) { human += s + '\n'; }
  // Raw text block, already newline terminated (certificate dumps).
  void text(const std::string& s) { human += s; }

  int finish(int rc) const {
    if (as_json)
      std::cout << rec.dump(2) << '\n';
    else
      std::cout << human;
    return rc;
  }
};

pd::Poset load_poset(const std::string& path) {
  return pd::parse_poset(pd::read_text_file(path));
}

// Write `text` to `path` when given, otherwise deliver it inline.
void deliver(Report& rep, const char* key, const std::string& text,
             const std::string& path) {
  if (!path.empty()) {
    pd::write_text_file(path, text);
    rep.rec[key] = path;
    rep.line(std::string("wrote ") + key + " to " + path);
  } else {
    rep.rec[std::string(key) + "_text"] = text;
    rep.text(text);
  }
}

int cmd_generate_standard(int k, const std::string& out, const std::string& realizer_out,
                          const std::string& local_out, const std::string& boolean_out,
                          bool as_json) {
  auto se = pd::standard_example(k);
  Report rep{as_json, {{"command", "generate"}, {"family", "standard"}, {"k", k}}, ""};
  deliver(rep, "poset", pd::serialize_poset(se.poset), out);
  if (!realizer_out.empty())
    deliver(rep, "realizer", pd::serialize_realizer(se.realizer), realizer_out);
  if (!local_out.empty()) {
    if (!se.local_cert)
      throw pd::BadParameter("the width-3 certificate of S_k needs k >= 3");
    deliver(rep, "local", pd::serialize_local_realizer(*se.local_cert), local_out);
  }
  if (!boolean_out.empty()) {
    if (!se.boolean_cert)
      throw pd::BadParameter("the 4-order boolean certificate of S_k needs k >= 4");
    deliver(rep, "boolean", pd::serialize_boolean_realizer(*se.boolean_cert), boolean_out);
  }
  return rep.finish(0);
}

int cmd_generate_incidence(int n, const std::string& out, const std::string& boolean_out,
                           bool as_json) {
  auto ip = pd::incidence_poset(n);
  Report rep{as_json, {{"command", "generate"}, {"family", "incidence"}, {"n", n}}, ""};
  deliver(rep, "poset", pd::serialize_poset(ip.poset), out);
  if (!boolean_out.empty())
    deliver(rep, "boolean", pd::serialize_boolean_realizer(ip.cert), boolean_out);
  return rep.finish(0);
}

int cmd_generate_simple(const std::string& family, int n, const std::string& out,
                        bool as_json) {
  pd::Poset p = family == "chain" ? pd::chain(n) : pd::antichain(n);
  Report rep{as_json, {{"command", "generate"}, {"family", family}, {"n", n}}, ""};
  deliver(rep, "poset", pd::serialize_poset(p), out);
  return rep.finish(0);
}

int cmd_generate_random(int n, std::optional<int> tries, unsigned seed,
                        const std::string& out, bool as_json) {
  int t = tries.value_or(2 * n);
  pd::Poset p = pd::random_poset(n, t, seed);
  Report rep{as_json,
             {{"command", "generate"}, {"family", "random"}, {"n", n},
              {"tries", t}, {"seed", seed}},
             ""};
  deliver(rep, "poset", pd::serialize_poset(p), out);
  return rep.finish(0);
}

int cmd_generate_thm6(int k, const std::string& out, const std::string& graph_out,
                      const std::string& local_out, std::uint64_t edge_cap, bool dry,
                      bool as_json) {
  Report rep{as_json, {{"command", "generate"}, {"family", "thm6"}, {"k", k}}, ""};
  auto sizes = pd::theorem6_sizes(k);
  rep.rec["sizes"] = {{"exact", sizes.exact},
                      {"log2_n", sizes.log2_n},
                      {"log2_vertices", sizes.log2_vertices},
                      {"log2_edges", sizes.log2_edges}};
  if (sizes.exact) {
    rep.rec["sizes"]["r"] = sizes.r;
    rep.rec["sizes"]["s"] = sizes.s;
    rep.rec["sizes"]["subsets"] = sizes.n;
    rep.rec["sizes"]["vertices"] = sizes.vertices;
    rep.rec["sizes"]["edges"] = sizes.edges;
    rep.rec["sizes"]["poset_elements"] = sizes.edges;
    rep.line("sizes (exact): r=" + std::to_string(sizes.r) + " s=" + std::to_string(sizes.s) +
             " subsets=" + std::to_string(sizes.n) +
             " graph vertices=" + std::to_string(sizes.vertices) +
             " edges=" + std::to_string(sizes.edges) + " (poset elements = edges)");
  } else {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "sizes (log2 estimates): n=2^%.2f vertices=2^%.2f edges=2^%.2f",
                  sizes.log2_n, sizes.log2_vertices, sizes.log2_edges);
    rep.line(buf);
  }
  if (dry) {
    rep.rec["dry_run"] = true;
    return rep.finish(0);
  }
  auto inst = pd::theorem6_construct(k, edge_cap);
  deliver(rep, "poset", pd::serialize_poset(inst.p), out);
  if (!graph_out.empty()) deliver(rep, "graph", pd::serialize_digraph(inst.g), graph_out);
  if (!local_out.empty())
    deliver(rep, "local", pd::serialize_local_realizer(inst.local_realizer()), local_out);
  return rep.finish(0);
}

int cmd_verify(const std::string& kind, const std::string& poset_path,
               const std::string& cert_path, bool as_json) {
  pd::Poset p = load_poset(poset_path);
  Report rep{as_json,
             {{"command", "verify"}, {"kind", kind}, {"poset", poset_path},
              {"certificate", cert_path}},
             ""};
  std::string why;
  bool ok = false;
  try {
    if (kind == "realizer") {
      auto r = pd::parse_realizer(pd::read_text_file(cert_path));
      rep.rec["size"] = r.orders.size();
      ok = pd::verify_realizer(p, r, &why);
    } else if (kind == "boolean") {
      auto br = pd::parse_boolean_realizer(pd::read_text_file(cert_path));
      rep.rec["size"] = br.arity();
      ok = pd::verify_boolean_realizer(p, br, &why);
    } else {
      auto lr = pd::parse_local_realizer(pd::read_text_file(cert_path));
      int w = pd::local_width(lr);
      rep.rec["width"] = w;
      rep.line("width: " + std::to_string(w));
      ok = pd::verify_local_realizer(p, lr, &why);
    }
  } catch (const pd::MalformedOrder& e) {
    why = e.what();
  } catch (const pd::NotAnExtension& e) {
    why = e.what();
  } catch (const pd::ArityMismatch& e) {
    why = e.what();
  }
  rep.rec["valid"] = ok;
  if (ok) {
    rep.line("valid");
  } else {
    rep.rec["reason"] = why;
    rep.line("invalid: " + why);
  }
  return rep.finish(ok ? 0 : 1);
}

int cmd_solve_dimension(const std::string& poset_path, std::optional<int> max_d,
                        double timeout_s, const std::string& out, bool as_json) {
  pd::Poset p = load_poset(poset_path);
  pd::Budget budget(timeout_s);
  int upper = max_d.value_or(std::max(1, p.size()));
  Report rep{as_json,
             {{"command", "solve"}, {"parameter", "dimension"}, {"poset", poset_path},
              {"max_d", upper}},
             ""};
  for (int d = 0; d <= upper; ++d) {
    auto dec = pd::decide_dimension(p, d, budget);
    if (!dec.value) continue;
    rep.rec["value"] = d;
    rep.rec["within_max"] = true;
    rep.line("dimension: " + std::to_string(d));
    if (!out.empty()) deliver(rep, "witness", pd::serialize_realizer(*dec.witness), out);
    return rep.finish(0);
  }
  rep.rec["within_max"] = false;
  rep.line("dimension exceeds " + std::to_string(upper));
  return rep.finish(1);
}

int cmd_solve_boolean_dimension(const std::string& poset_path, std::optional<int> max_d,
                                const std::string& out, bool as_json) {
  pd::Poset p = load_poset(poset_path);
  int upper = max_d.value_or(2);
  if (upper > 2)
    throw pd::ScaleExceeded("solve boolean-dimension: decidable only up to --max-d 2");
  Report rep{as_json,
             {{"command", "solve"}, {"parameter", "boolean-dimension"},
              {"poset", poset_path}, {"max_d", upper}},
             ""};
  for (int d = 0; d <= upper; ++d) {
    auto dec = pd::decide_boolean_dimension_small(p, d);
    if (!dec.value) continue;
    rep.rec["value"] = d;
    rep.rec["within_max"] = true;
    rep.line("boolean dimension: " + std::to_string(d));
    if (!out.empty())
      deliver(rep, "witness", pd::serialize_boolean_realizer(*dec.witness), out);
    return rep.finish(0);
  }
  rep.rec["within_max"] = false;
  rep.line("boolean dimension exceeds " + std::to_string(upper));
  return rep.finish(1);
}

int cmd_solve_local_dimension(const std::string& poset_path, std::optional<int> max_d,
                              double timeout_s, const std::string& out, bool as_json) {
  pd::Poset p = load_poset(poset_path);
  pd::Budget budget(timeout_s);
  int upper = max_d.value_or(2);
  if (upper > 2)
    throw pd::BadParameter("solve local-dimension: decidable only up to --max-d 2");
  Report rep{as_json,
             {{"command", "solve"}, {"parameter", "local-dimension"},
              {"poset", poset_path}, {"max_d", upper}},
             ""};
  for (int d = 0; d <= upper; ++d) {
    bool value = d == 0 ? p.size() <= 1 : pd::decide_local_dimension_low(p, d, budget);
    if (!value) continue;
    rep.rec["value"] = d;
    rep.rec["within_max"] = true;
    rep.line("local dimension: " + std::to_string(d));
    if (!out.empty()) {
      // Local dimension at most 2 coincides with dimension, so a witness is
      // the dimension witness read as full extensions.
      auto dec = pd::decide_dimension(p, d, budget);
      deliver(rep, "witness",
              pd::serialize_local_realizer(pd::local_from_realizer(*dec.witness)), out);
    }
    return rep.finish(0);
  }
  rep.rec["within_max"] = false;
  rep.line("local dimension exceeds " + std::to_string(upper));
  return rep.finish(1);
}

int cmd_solve_chromatic(const std::string& graph_path, double timeout_s, bool as_json) {
  auto g = pd::parse_digraph(pd::read_text_file(graph_path));
  int chi = pd::exact_chromatic_number(g, pd::Budget(timeout_s));
  Report rep{as_json,
             {{"command", "solve"}, {"parameter", "chromatic"}, {"graph", graph_path},
              {"value", chi}},
             ""};
  rep.line("chromatic number: " + std::to_string(chi));
  return rep.finish(0);
}

int cmd_convert(const std::string& which, const std::string& poset_path,
                const std::string& cert_path, const std::string& out, bool dry,
                bool as_json) {
  pd::Poset p = load_poset(poset_path);
  Report rep{as_json,
             {{"command", "convert"}, {"rule", which}, {"poset", poset_path},
              {"certificate", cert_path}},
             ""};
  if (which == "thm1") {
    auto br = pd::parse_boolean_realizer(pd::read_text_file(cert_path));
    pd::Realizer r = pd::boolean_to_realizer(p, br);
    rep.rec["size"] = r.orders.size();
    rep.line("realizer size: " + std::to_string(r.orders.size()));
    deliver(rep, "realizer", pd::serialize_realizer(r), out);
    return rep.finish(0);
  }
  if (which == "thm2") {
    auto lr = pd::parse_local_realizer(pd::read_text_file(cert_path));
    pd::Realizer r = pd::local2_to_realizer(p, lr);
    rep.rec["size"] = r.orders.size();
    rep.line("realizer size: " + std::to_string(r.orders.size()));
    deliver(rep, "realizer", pd::serialize_realizer(r), out);
    return rep.finish(0);
  }
  auto lr = pd::parse_local_realizer(pd::read_text_file(cert_path));
  pd::Local3Conversion conv = pd::local3_to_boolean(p, lr);
  int c = conv.colors_used;
  int t = 3 + 3 * c * (c - 1);
  rep.rec["colors"] = c;
  rep.rec["guard_pairs"] = t;
  rep.rec["size"] = conv.certificate.arity();
  rep.line("colors: " + std::to_string(c) + ", guard pairs: " + std::to_string(t) +
           ", boolean size: " + std::to_string(conv.certificate.arity()));
  if (dry) {
    rep.rec["dry_run"] = true;
    return rep.finish(0);
  }
  deliver(rep, "boolean", pd::serialize_boolean_realizer(conv.certificate), out);
  return rep.finish(0);
}

int cmd_refute_thm6(int k, const std::string& cand_path, double timeout_s,
                    std::uint64_t edge_cap, bool as_json) {
  auto inst = pd::theorem6_construct(k, edge_cap);
  auto br = pd::parse_boolean_realizer(pd::read_text_file(cand_path));
  auto out = pd::thm6_refute_boolean(inst, br, pd::Budget(timeout_s));
  Report rep{as_json,
             {{"command", "refute"}, {"kind", "thm6"}, {"k", k},
              {"candidate", cand_path}, {"chi", out.chi},
              {"alpha_proper", out.alpha_proper}},
             ""};
  using Kind = pd::Thm6Refutation::Kind;
  switch (out.kind) {
    case Kind::Consistent:
      rep.rec["outcome"] = "consistent";
      rep.line("consistent: no violation found (chi of the second arc digraph: " +
               std::to_string(out.chi) + ")");
      return rep.finish(0);
    case Kind::PairViolation:
      rep.rec["outcome"] = "pair_violation";
      rep.rec["triple"] = out.triple;
      rep.rec["arcs"] = {out.elements[0], out.elements[1]};
      rep.rec["alpha"] = out.alpha;
      rep.line("refuted: candidate claims arc " + std::to_string(out.elements[0]) +
               " <= arc " + std::to_string(out.elements[1]) + " on the path " +
               std::to_string(out.triple[0]) + "->" + std::to_string(out.triple[1]) +
               "->" + std::to_string(out.triple[2]) + ", which the gadget forbids");
      return rep.finish(1);
    case Kind::QuadrupleViolation:
      rep.rec["outcome"] = "quadruple_violation";
      rep.rec["quadruple"] = out.quadruple;
      rep.rec["arcs"] = out.elements;
      rep.rec["alpha"] = out.alpha;
      rep.line("refuted: arcs " + std::to_string(out.elements[0]) + " and " +
               std::to_string(out.elements[2]) +
               " share the comparison pattern yet are strictly ordered");
      return rep.finish(1);
    default:
      rep.rec["outcome"] = "coloring_count";
      rep.line("refuted: the patterns properly color the second arc digraph with too "
               "few colors");
      return rep.finish(1);
  }
}

int cmd_refute_ramsey(int n, const std::string& family_path, bool as_json) {
  auto fam = pd::parse_local_realizer(pd::read_text_file(family_path));
  auto w = pd::ramsey_cycle_witness(n, fam);
  Report rep{as_json,
             {{"command", "refute"}, {"kind", "ramsey"}, {"n", n},
              {"family", family_path}},
             ""};
  if (!w) {
    rep.rec["outcome"] = "none";
    rep.line("no monochromatic quadruple yields an alternating cycle");
    return rep.finish(0);
  }
  rep.rec["outcome"] = "cycle_found";
  rep.rec["vertices"] = w->vertices;
  rep.rec["color"] = {w->color.first, w->color.second};
  rep.rec["ple"] = w->ple;
  rep.rec["cycle"] = w->cycle;
  rep.line("refuted: vertices " + std::to_string(w->vertices[0]) + "," +
           std::to_string(w->vertices[1]) + "," + std::to_string(w->vertices[2]) + "," +
           std::to_string(w->vertices[3]) + " are colored (" +
           std::to_string(w->color.first) + "," + std::to_string(w->color.second) +
           ") and force a poset/ple alternating 4-cycle inside ple " +
           std::to_string(w->ple));
  return rep.finish(1);
}

int cmd_stats(const std::string& poset_path, bool as_json) {
  pd::Poset p = load_poset(poset_path);
  int n = p.size();
  int strict = p.strict_pair_count();
  int width = pd::poset_width(p);
  int height = pd::poset_height(p);
  int crit = static_cast<int>(pd::critical_pairs(p).size());
  int comps = pd::incomparability_component_count(p);
  Report rep{as_json,
             {{"command", "stats"}, {"poset", poset_path}, {"n", n},
              {"strict_pairs", strict}, {"width", width}, {"height", height},
              {"critical_pairs", crit}, {"incomparability_components", comps}},
             ""};
  rep.line("n: " + std::to_string(n));
  rep.line("strict pairs: " + std::to_string(strict));
  rep.line("width: " + std::to_string(width));
  rep.line("height: " + std::to_string(height));
  rep.line("critical pairs: " + std::to_string(crit));
  rep.line("incomparability components: " + std::to_string(comps));
  return rep.finish(0);
}

int run(int argc, char** argv) {
  CLI::App app{"poset dimension certificates: generate, verify, solve, convert, refute"};
  app.require_subcommand(1);
  bool as_json = false;
  double timeout_s = 60.0;
  unsigned seed = 0;
  app.add_flag("--json", as_json, "machine readable stdout");
  app.add_option("--timeout-s", timeout_s, "wall clock budget in seconds (default 60)");
  app.add_option("--seed", seed, "seed for randomized fixtures (default 0)");

  int rc = 0;

  auto* gen = app.add_subcommand("generate", "emit fixture posets and certificates");
  gen->require_subcommand(1);
  gen->fallthrough();
  {
    auto* c = gen->add_subcommand("standard", "standard example S_k");
    c->fallthrough();
    static int k;
    static std::string out, r_out, l_out, b_out;
    c->add_option("k", k, "parameter k >= 2")->required();
    c->add_option("-o,--output", out, "poset file (stdout if omitted)");
    c->add_option("--realizer", r_out, "also write the k-order realizer");
    c->add_option("--local", l_out, "also write the width-3 local certificate (k >= 3)");
    c->add_option("--boolean", b_out, "also write the 4-order boolean certificate (k >= 4)");
    c->callback([&]() { rc = cmd_generate_standard(k, out, r_out, l_out, b_out, as_json); });
  }
  {
    auto* c = gen->add_subcommand("incidence", "incidence poset of the complete graph");
    c->fallthrough();
    static int n;
    static std::string out, b_out;
    c->add_option("n", n, "vertex count n >= 2")->required();
    c->add_option("-o,--output", out, "poset file (stdout if omitted)");
    c->add_option("--boolean", b_out, "also write the 4-order boolean certificate");
    c->callback([&]() { rc = cmd_generate_incidence(n, out, b_out, as_json); });
  }
  for (const char* family : {"chain", "antichain"}) {
    auto* c = gen->add_subcommand(family, std::string(family) + " on n elements");
    c->fallthrough();
    static int n;
    static std::string out;
    c->add_option("n", n, "element count")->required();
    c->add_option("-o,--output", out, "poset file (stdout if omitted)");
    std::string fam = family;
    c->callback([&, fam]() { rc = cmd_generate_simple(fam, n, out, as_json); });
  }
  {
    auto* c = gen->add_subcommand("random", "seeded uniform-cover fixture poset");
    c->fallthrough();
    static int n;
    static std::optional<int> tries;
    static std::string out;
    c->add_option("n", n, "element count")->required();
    c->add_option("--tries", tries, "cover insertion attempts (default 2n)");
    c->add_option("-o,--output", out, "poset file (stdout if omitted)");
    c->callback([&]() { rc = cmd_generate_random(n, tries, seed, out, as_json); });
  }
  {
    auto* c = gen->add_subcommand("thm6", "recursive digraph/poset construction");
    c->fallthrough();
    static int k;
    static std::string out, g_out, l_out;
    static std::uint64_t cap = pd::kTheorem6DefaultEdgeCap;
    static bool dry = false;
    c->add_option("k", k, "recursion depth k >= 1")->required();
    c->add_option("-o,--output", out, "poset file (stdout if omitted)");
    c->add_option("--graph", g_out, "also write the digraph");
    c->add_option("--local", l_out, "also write the width-4 local realizer");
    c->add_option("--edge-cap", cap, "materialization cap on predicted edges");
    c->add_flag("--dry-run-sizes", dry, "print predicted sizes and stop");
    c->callback([&]() { rc = cmd_generate_thm6(k, out, g_out, l_out, cap, dry, as_json); });
  }

  auto* ver = app.add_subcommand("verify", "verify a certificate against a poset");
  ver->require_subcommand(1);
  ver->fallthrough();
  for (const char* kind : {"realizer", "boolean", "local"}) {
    auto* c = ver->add_subcommand(kind, std::string("verify a ") + kind + " certificate");
    c->fallthrough();
    static std::string poset_path, cert_path;
    c->add_option("poset", poset_path, "poset file")->required();
    c->add_option("certificate", cert_path, "certificate file")->required();
    std::string kd = kind;
    c->callback([&, kd]() { rc = cmd_verify(kd, poset_path, cert_path, as_json); });
  }

  auto* sol = app.add_subcommand("solve", "exact desk-scale decision procedures");
  sol->require_subcommand(1);
  sol->fallthrough();
  {
    auto* c = sol->add_subcommand("dimension", "exact dimension");
    c->fallthrough();
    static std::string poset_path, out;
    static std::optional<int> max_d;
    c->add_option("poset", poset_path, "poset file")->required();
    c->add_option("--max-d", max_d, "answer whether dimension <= this bound");
    c->add_option("-o,--output", out, "write the witness realizer here");
    c->callback([&]() {
      rc = cmd_solve_dimension(poset_path, max_d, timeout_s, out, as_json);
    });
  }
  {
    auto* c = sol->add_subcommand("boolean-dimension", "exact boolean dimension (n <= 6, d <= 2)");
    c->fallthrough();
    static std::string poset_path, out;
    static std::optional<int> max_d;
    c->add_option("poset", poset_path, "poset file")->required();
    c->add_option("--max-d", max_d, "bound, at most 2");
    c->add_option("-o,--output", out, "write the witness certificate here");
    c->callback([&]() { rc = cmd_solve_boolean_dimension(poset_path, max_d, out, as_json); });
  }
  {
    auto* c = sol->add_subcommand("local-dimension", "exact local dimension (d <= 2)");
    c->fallthrough();
    static std::string poset_path, out;
    static std::optional<int> max_d;
    c->add_option("poset", poset_path, "poset file")->required();
    c->add_option("--max-d", max_d, "bound, at most 2");
    c->add_option("-o,--output", out, "write a witness local realizer here");
    c->callback([&]() {
      rc = cmd_solve_local_dimension(poset_path, max_d, timeout_s, out, as_json);
    });
  }
  {
    auto* c = sol->add_subcommand("chromatic", "exact chromatic number of a graph file");
    c->fallthrough();
    static std::string graph_path;
    c->add_option("graph", graph_path, "graph file")->required();
    c->callback([&]() { rc = cmd_solve_chromatic(graph_path, timeout_s, as_json); });
  }

  auto* con = app.add_subcommand("convert", "convert between certificate kinds");
  con->require_subcommand(1);
  con->fallthrough();
  {
    auto* c = con->add_subcommand("thm1", "boolean certificate of size <= 3 to a realizer");
    c->fallthrough();
    static std::string poset_path, cert_path, out;
    c->add_option("poset", poset_path, "poset file")->required();
    c->add_option("certificate", cert_path, "boolean certificate file")->required();
    c->add_option("-o,--output", out, "realizer file (stdout if omitted)");
    c->callback([&]() { rc = cmd_convert("thm1", poset_path, cert_path, out, false, as_json); });
  }
  {
    auto* c = con->add_subcommand("thm2", "width-2 local realizer to a 2-realizer");
    c->fallthrough();
    static std::string poset_path, cert_path, out;
    c->add_option("poset", poset_path, "poset file")->required();
    c->add_option("certificate", cert_path, "local realizer file")->required();
    c->add_option("-o,--output", out, "realizer file (stdout if omitted)");
    c->callback([&]() { rc = cmd_convert("thm2", poset_path, cert_path, out, false, as_json); });
  }
  {
    auto* c = con->add_subcommand("thm5", "width-3 local realizer to a boolean certificate");
    c->fallthrough();
    static std::string poset_path, cert_path, out;
    static bool dry = false;
    c->add_option("poset", poset_path, "poset file")->required();
    c->add_option("certificate", cert_path, "local realizer file")->required();
    c->add_option("-o,--output", out, "boolean certificate file (stdout if omitted)");
    c->add_flag("--dry-run-sizes", dry, "print colors and output size, write nothing");
    c->callback([&]() { rc = cmd_convert("thm5", poset_path, cert_path, out, dry, as_json); });
  }

  auto* ref = app.add_subcommand("refute", "search candidate certificates for violations");
  ref->require_subcommand(1);
  ref->fallthrough();
  {
    auto* c = ref->add_subcommand("thm6", "check a boolean candidate on the constructed instance");
    c->fallthrough();
    static int k;
    static std::string cand_path;
    static std::uint64_t cap = pd::kTheorem6DefaultEdgeCap;
    c->add_option("k", k, "recursion depth k >= 1")->required();
    c->add_option("candidate", cand_path, "boolean certificate file")->required();
    c->add_option("--edge-cap", cap, "materialization cap on predicted edges");
    c->callback([&]() { rc = cmd_refute_thm6(k, cand_path, timeout_s, cap, as_json); });
  }
  {
    auto* c = ref->add_subcommand("ramsey", "search a local family over the incidence poset for the alternating cycle");
    c->fallthrough();
    static int n;
    static std::string family_path;
    c->add_option("n", n, "vertex count of the complete graph")->required();
    c->add_option("family", family_path, "local realizer file")->required();
    c->callback([&]() { rc = cmd_refute_ramsey(n, family_path, as_json); });
  }

  auto* st = app.add_subcommand("stats", "print structural statistics of a poset");
  st->fallthrough();
  {
    static std::string poset_path;
    st->add_option("poset", poset_path, "poset file")->required();
    st->callback([&]() { rc = cmd_stats(poset_path, as_json); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  bool as_json = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--json") as_json = true;
  try {
    return run(argc, argv);
  } catch (const pd::Timeout& e) {
    if (as_json)
      std::cout << json{{"error", e.what()}, {"timeout", true}}.dump(2) << '\n';
    else
      std::cerr << "timeout: " << e.what() << " (no complete answer; partial work discarded)\n";
    return 3;
  } catch (const pd::Error& e) {
    if (as_json)
      std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    else
      std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    if (as_json)
      std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    else
      std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
