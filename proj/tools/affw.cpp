// affw: command-line front end. Reads JSON from --in (or stdin), writes JSON or DOT.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "affw/closure.hpp"
#include "affw/oracle.hpp"

using namespace affw;

namespace {

struct Options {
  std::string type = "A2";
  int window = 0;
  int budget = kDefaultBudget;
  std::string format = "json";
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  std::string suite = "all";
};

// A violated precondition, reported with exit status 1.
struct DomainFailure {
  std::string kind;
  std::string message;
  long long position = -1;
};

// A failed cross-check, reported with exit status 2.
struct VerifyFailure {
  Json payload;
};

Json read_input(const Options& o) {
  std::string text;
  if (o.in.empty() || o.in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(o.in);
    if (!f) throw DomainFailure{"io", "cannot open input file " + o.in};
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainFailure{"parse_error", e.what(), static_cast<long long>(e.byte)};
  }
}

Json envelope(const Options& o) {
  Json j;
  j["schema"] = 1;
  j["type"] = o.type;
  return j;
}

std::string order_label(const Order& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_roots(const Options& o, RootType t) {
  const RootSystem& rs = RootSystem::get(t);
  Json j = envelope(o);
  Json pos = Json::array();
  for (FiniteRoot r : rs.positive()) pos.push_back(encode(r));
  j["simple"] = Json::array({encode(rs.simple()[0]), encode(rs.simple()[1])});
  j["highest"] = encode(rs.highest());
  j["positive"] = pos;
  if (o.window > 0) {
    std::vector<AffineRoot> aff;
    for (FiniteRoot d : rs.roots())
      for (int l = min_level(d); l <= o.window; ++l) aff.push_back({d, l});
    std::sort(aff.begin(), aff.end());
    j["window"] = o.window;
    j["affine"] = encode_roots(aff);
  }
  return render(j);
}

std::string cmd_closure(const Options& o, RootType t) {
  Json in = read_input(o);
  std::vector<AffineRoot> gens = decode_roots(t, in.is_object() ? in.value("gens", Json::array()) : in);
  EPSet c = closure(t, gens);
  Json j = envelope(o);
  j["closure"] = encode(c);
  if (o.window > 0) {
    auto naive = closure_window(t, gens, o.window);
    bool margin = o.window >= safe_window(c);
    bool agrees = c.truncate(o.window) == naive;
    j["window"] = o.window;
    j["window_agrees"] = agrees;
    if (margin && !agrees) throw VerifyFailure{j};
  }
  return render(j);
}

std::string cmd_biclosed(const Options& o, RootType t, const std::string& verb) {
  Json in = read_input(o);
  Json j = envelope(o);
  if (verb == "membership") {
    BiclosedCanonical c = decode_canonical(t, in.at("set"));
    AffineRoot r = decode_affine(t, in.at("root"));
    j["member"] = member(c, r);
  } else if (verb == "canonicalize") {
    EPSet s = in.is_array() ? EPSet::from_roots(t, decode_roots(t, in)) : decode_epset(t, in);
    BiclosedCanonical c = canonicalize(s, o.budget);
    j["canonical"] = encode(c);
    j["epset"] = encode(to_epset(c));
  } else {
    BiclosedCanonical c = decode_canonical(t, in);
    j["finitely_generated"] = is_finitely_generated(c);
    if (!is_finitely_generated(c)) throw NotFinitelyGenerated("set is not finitely generated");
    std::vector<AffineRoot> g = generators(c);
    j["generators"] = encode_roots(g);
    EPSet target = to_epset(c);
    bool ok = closure(t, g) == target;
    j["closure_matches"] = ok;
    if (!ok) throw VerifyFailure{j};
  }
  return render(j);
}

std::vector<WBar> wbar_list(RootType t, const Json& in) {
  if (!in.is_array()) throw JsonInputError("expected an array of words, got " + in.dump());
  std::vector<WBar> out;
  for (const Json& e : in) out.push_back(decode_wbar(t, e));
  return out;
}

std::string cmd_word(const Options& o, RootType t, const std::string& verb) {
  Json j = envelope(o);
  if (verb == "maximal") {
    Json list = Json::array();
    for (const WBar& x : maximal_elements(t)) list.push_back(encode(x));
    j["maximal"] = list;
    return render(j);
  }
  Json in = read_input(o);
  if (verb == "inversions") {
    WBar x = decode_wbar(t, in);
    EPSet s = inversion_set(x);
    j["word"] = encode(x);
    j["inversions"] = encode(s);
    if (x.finite()) j["roots"] = encode_roots(s.truncate(s.extent()));
  } else if (verb == "meet") {
    std::vector<WBar> xs = wbar_list(t, in);
    if (xs.empty()) throw JsonInputError("meet needs at least one word");
    WBar m = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) m = meet(m, xs[i]);
    j["meet"] = encode(m);
  } else {
    auto w = join_bounded(wbar_list(t, in), o.budget);
    j["bounded"] = w.has_value();
    j["join"] = w ? encode(*w) : Json(nullptr);
  }
  return render(j);
}

std::string cmd_lattice(const Options& o, RootType t, const std::string& verb) {
  Json in = read_input(o);
  Json j = envelope(o);
  if (verb == "complement") {
    j["complement"] = encode(complement(decode_belement(t, in)));
    return render(j);
  }
  if (!in.is_array() || in.size() != 2) throw JsonInputError("expected a pair of elements, got " + in.dump());
  BElement a = decode_belement(t, in[0]), b = decode_belement(t, in[1]);
  BElement r = verb == "join" ? join(a, b) : meet(a, b);
  bool ok = verb == "join" ? leq(a, r) && leq(b, r) : leq(r, a) && leq(r, b);
  j[verb] = encode(r);
  if (!ok) throw VerifyFailure{j};
  return render(j);
}

std::string cmd_braid(const Options& o, RootType t, const std::string& verb) {
  Json in = read_input(o);
  int budget = std::max(o.budget, kBraidBudget);
  Json j = envelope(o);
  if (verb == "realize") {
    int pivot = in.is_object() ? in.value("pivot", -1) : -1;
    Order v = decode_roots(t, in.is_object() ? in.at("order") : in);
    Realization r = realize(t, v, budget, pivot);
    const char* names[] = {"realized", "not_realizable", "unknown"};
    j["status"] = names[static_cast<int>(r.status)];
    j["local_test"] = local_test(v);
    if (r.status == Realizability::Realized) {
      Json chain = Json::array();
      for (const BiclosedCanonical& c : r.chain) chain.push_back(encode(c));
      j["chain"] = chain;
      bool ok = verify_chain(t, v, r.chain);
      j["verified"] = ok;
      if (!ok) throw VerifyFailure{j};
    }
    return render(j);
  }
  if (verb == "connect") {
    Order from = decode_roots(t, in.at("from")), to = decode_roots(t, in.at("to"));
    BraidPath p = connect(t, from, to, budget);
    Json moves = Json::array();
    for (const Move& m : p.moves) moves.push_back(encode(m));
    j["method"] = p.method;
    j["moves"] = moves;
    bool ok = check_path(t, from, to, p, budget);
    j["verified"] = ok;
    if (!ok) throw VerifyFailure{j};
    return render(j);
  }
  BraidGraph g = build_braid_graph(t, decode_roots(t, in.is_object() ? in.at("R") : in), budget);
  if (o.format == "dot") {
    std::ostringstream dot;
    dot << "graph braid {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      dot << "  v" << i << " [label=\"" << order_label(g.vertices[i]) << "\"];\n";
    for (auto [a, b] : g.edges) dot << "  v" << a << " -- v" << b << ";\n";
    dot << "}\n";
    return dot.str();
  }
  Json verts = Json::array();
  for (const Order& v : g.vertices) verts.push_back(encode_roots(v));
  j["vertices"] = verts;
  j["edges"] = g.edges;
  j["component"] = g.component;
  j["components"] = g.components;
  j["unknown"] = g.unknown;
  j["local_violations"] = g.local_violations;
  if (g.local_violations > 0) throw VerifyFailure{j};
  return render(j);
}

std::string cmd_verify(const Options& o, RootType t, bool& failed) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    for (const std::string& s : suite_names())
      if (s != "quasi_positive" || t == RootType::A2) suites.push_back(s);
  } else {
    suites.push_back(o.suite);
  }
  Json j = envelope(o);
  Json reports = Json::array();
  for (const std::string& s : suites) {
    OracleParams p;
    p.type = t;
    p.window = o.window;
    p.seed = o.seed;
    p.budget = o.budget;
    OracleReport r = run_suite(s, p);
    failed = failed || !r.passed();
    reports.push_back(r.to_json());
  }
  j["reports"] = reports;
  return render(j);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw DomainFailure{"io", "cannot open output file " + o.out};
  f << text;
}

Json error_json(const std::string& kind, const std::string& message, long long position = -1) {
  Json j;
  j["schema"] = 1;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  if (position >= 0) j["error"]["position"] = position;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact biclosed-set engine for affine Weyl groups of types A2, B2, G2"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--type", o.type, "Root system")->check(CLI::IsMember({"A2", "B2", "G2"}));
  app.add_option("--window", o.window, "Level window for brute-force cross-checks")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", o.budget, "Word-length budget for searches")->check(CLI::Range(1, 26));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--in", o.in, "Input JSON file (default stdin)");
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_option("--seed", o.seed, "Sampling seed");

  std::string verb;
  auto with_verbs = [&](const char* name, const char* help, std::vector<std::string> verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (!verbs.empty()) sub->add_option("verb", verb, "Operation")->required()->check(CLI::IsMember(verbs));
    return sub;
  };
  CLI::App* roots = with_verbs("roots", "Finite and affine roots", {});
  CLI::App* clos = with_verbs("closure", "Closure of a finite set of positive affine roots", {});
  CLI::App* bic = with_verbs("biclosed", "Canonical biclosed forms", {"membership", "canonicalize", "generators"});
  CLI::App* word = with_verbs("word", "Finite and infinite reduced words", {"inversions", "meet", "join", "maximal"});
  CLI::App* lat = with_verbs("lattice", "Lattice of biclosed sets", {"join", "meet", "complement"});
  CLI::App* braid = with_verbs("braid", "Braid graph on restricted reflection orders", {"graph", "connect", "realize"});
  CLI::App* ver = with_verbs("verify", "Run brute-force oracle suites", {});
  ver->add_option("--suite", o.suite, "Suite name or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    RootType t = parse_type(o.type);
    bool failed = false;
    std::string text;
    if (*roots) text = cmd_roots(o, t);
    else if (*clos) text = cmd_closure(o, t);
    else if (*bic) text = cmd_biclosed(o, t, verb);
    else if (*word) text = cmd_word(o, t, verb);
    else if (*lat) text = cmd_lattice(o, t, verb);
    else if (*braid) text = cmd_braid(o, t, verb);
    else text = cmd_verify(o, t, failed);
    emit(o, text);
    return failed ? 2 : 0;
  } catch (const DomainFailure& e) {
    std::cout << render(error_json(e.kind, e.message, e.position));
    return 1;
  } catch (const VerifyFailure& e) {
    Json j = error_json("verification_failed", "a cross-check disagreed");
    j["detail"] = e.payload;
    std::cout << render(j);
    return 2;
  } catch (const JsonInputError& e) {
    std::cout << render(error_json("invalid_input", e.what()));
    return 1;
  } catch (const NotBiclosed& e) {
    std::cout << render(error_json("not_biclosed", e.what()));
    return 1;
  } catch (const NotFinitelyGenerated& e) {
    std::cout << render(error_json("not_finitely_generated", e.what()));
    return 1;
  } catch (const NotInversionSet& e) {
    std::cout << render(error_json("not_inversion_set", e.what()));
    return 1;
  } catch (const BraidError& e) {
    std::cout << render(error_json("braid", e.what()));
    return 1;
  } catch (const Json::exception& e) {
    std::cout << render(error_json("invalid_input", e.what()));
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cout << render(error_json("precondition", e.what()));
    return 1;
  } catch (const std::domain_error& e) {
    std::cout << render(error_json("domain", e.what()));
    return 1;
  }
}
