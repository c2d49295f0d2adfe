#include "refl/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "refl/chars/characters.hpp"
#include "refl/cli/table.hpp"
#include "refl/coxeter/coxeter_system.hpp"
#include "refl/errors.hpp"
#include "refl/group/classes.hpp"
#include "refl/group/reflections.hpp"
#include "refl/hecke/hecke.hpp"
#include "refl/imprim/imprim.hpp"
#include "refl/invariants/invariants.hpp"

namespace refl::cli {

using nlohmann::json;

json CommandResult::envelope() const { return {{"command", command}, {"version", kVersion}, {"result", payload}}; }

std::string CommandResult::output() const {
  if (exit_status != kExitOk) return {};
  return json ? envelope().dump(2) + "\n" : text;
}

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

json integer_json(const Integer& z) {
  if (z.fits_long()) return z.to_long();
  return z.to_string();
}

/// Generator indices written 1-based, separated by blanks or commas.
Word parse_word(const std::string& text, int rank) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  Word w;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw std::invalid_argument("bad generator '" + tok + "'");
    if (g < 1 || g > rank) throw std::invalid_argument("generator " + tok + " out of range 1.." + std::to_string(rank));
    w.push_back(g - 1);
  }
  return w;
}

std::vector<int> one_based(const Word& w) {
  std::vector<int> out;
  for (int s : w) out.push_back(s + 1);
  return out;
}

struct GroupSpec {
  std::string spec;
  std::string matrix_file;
  std::vector<int> imprim;
};

struct Built {
  std::string name;
  std::unique_ptr<CoxeterSystem> sys;
  std::optional<ImprimParams> imprim;
  std::unique_ptr<EnumeratedGroup> group;
};

std::optional<ImprimParams> parse_imprim_label(const std::string& s) {
  static const std::regex re(R"(G\((\d+),(\d+),(\d+)\))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  const int de = std::stoi(m[1]);
  const int e = std::stoi(m[2]);
  const int n = std::stoi(m[3]);
  if (e < 1 || de % e != 0) throw std::invalid_argument("G(m,e,n) needs e dividing m");
  return ImprimParams(de / e, e, n);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Resolves the group named by the options without enumerating it. Exactly
/// one of the returned matrix or parameters is set.
std::pair<std::optional<CoxeterMatrix>, std::optional<ImprimParams>> resolve(const GroupSpec& g) {
  if (g.imprim.size() == 3) return {std::nullopt, ImprimParams(g.imprim[0], g.imprim[1], g.imprim[2])};
  if (!g.matrix_file.empty()) return {CoxeterMatrix::parse(read_file(g.matrix_file)), std::nullopt};
  if (g.spec.empty()) throw std::invalid_argument("no group given: use a type name, --matrix FILE or --imprim d e n");
  if (auto p = parse_imprim_label(g.spec)) return {std::nullopt, *p};
  if (auto t = coxeter_type_of(g.spec)) return {CoxeterMatrix::of_type(*t), std::nullopt};
  return {CoxeterMatrix::of_type(g.spec), std::nullopt};
}

CoxeterMatrix coxeter_only(const GroupSpec& g) {
  auto [m, p] = resolve(g);
  if (!m) throw std::invalid_argument("this command needs a Coxeter group");
  return *m;
}

Built build(const GroupSpec& g, std::size_t budget) {
  auto [m, p] = resolve(g);
  Built b;
  if (p) {
    b.imprim = *p;
    b.name = p->name();
    b.group = std::make_unique<ImprimGroup>(*p, budget);
  } else {
    if (!is_finite(*m)) throw std::invalid_argument("Coxeter matrix does not define a finite group");
    b.sys = std::make_unique<CoxeterSystem>(*m);
    b.name = g.spec.empty() ? "W" : g.spec;
    b.group = b.sys->enumerate(budget);
  }
  return b;
}

std::string element_text(const Built& b, std::size_t i) {
  if (b.imprim) return b.group->label(i);
  const Word w = b.group->word(i);
  return w.empty() ? "e" : join(one_based(w));
}

std::size_t parse_element(const Built& b, const std::string& text) {
  if (b.imprim && text.find(';') != std::string::npos) {
    const auto& g = static_cast<const ImprimGroup&>(*b.group);
    auto idx = g.index_of(parse_monomial(text, b.imprim->n, b.imprim->de()));
    if (!idx) throw std::invalid_argument("element does not lie in " + b.name);
    return *idx;
  }
  return b.group->from_word(parse_word(text, b.group->num_generators()));
}

DegreeData computed_degrees(const EnumeratedGroup& g) {
  const ClassPartition cp = conjugacy_classes(g);
  const GroupSpectra s = group_spectra(g, cp);
  DegreeData dd;
  dd.degrees = degrees_from_molien(molien_series(s), g.dimension());
  const SolomonReport rep = solomon_identities(s, dd);
  for (int m : rep.coexponents) dd.codegrees.push_back(m - 1);
  std::sort(dd.codegrees.begin(), dd.codegrees.end());
  return dd;
}

json matrix_json(const CoxeterMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.rows()) {
    json row = json::array();
    for (int x : r) row.push_back(x == CoxeterMatrix::kInfinity ? json("inf") : json(x));
    rows.push_back(row);
  }
  return rows;
}

std::string vector_text(const CVector& v) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < v.size(); ++i) parts.push_back(v(i).to_string());
  return "(" + join(parts, ", ") + ")";
}

// Subcommand bodies. Each fills payload and text.

void cmd_coxeter(const GroupSpec& gs, CommandResult& r) {
  const CoxeterMatrix m = coxeter_only(gs);
  const bool finite = is_finite(m);
  r.payload = {{"matrix", matrix_json(m)}, {"rank", m.rank()}, {"finite", finite}};
  std::ostringstream os;
  os << m.to_string();
  if (os.str().empty() || os.str().back() != '\n') os << '\n';
  os << "finite: " << (finite ? "yes" : "no") << '\n';
  if (finite) {
    std::vector<std::string> names;
    for (const auto& c : classify_finite_type(m)) names.push_back(c.name());
    const CoxeterSystem sys(m);
    r.payload["type"] = names;
    r.payload["reflections"] = sys.num_reflections();
    os << "type: " << join(names, " x ") << '\n' << "reflections: " << sys.num_reflections() << '\n';
  }
  r.text = os.str();
}

void cmd_roots(const GroupSpec& gs, bool count_only, CommandResult& r) {
  const CoxeterMatrix m = coxeter_only(gs);
  if (!is_finite(m)) throw std::invalid_argument("Coxeter matrix does not define a finite group");
  const CoxeterSystem sys(m);
  const RootSystem& rs = sys.roots();
  std::ostringstream os;
  os << "roots: " << rs.size() << '\n' << "positive roots: " << rs.num_positive << '\n';
  r.payload = {{"roots", rs.size()}, {"positive", rs.num_positive}};
  if (!count_only) {
    json list = json::array();
    for (std::size_t i = 0; i < rs.num_positive; ++i) {
      std::vector<std::string> coords;
      for (Eigen::Index k = 0; k < rs.roots[i].size(); ++k) coords.push_back(rs.roots[i](k).to_string());
      list.push_back(coords);
      os << vector_text(rs.roots[i]) << '\n';
    }
    r.payload["positive_roots"] = list;
  }
  r.text = os.str();
}

void cmd_length(const GroupSpec& gs, const std::string& word, CommandResult& r) {
  const CoxeterSystem sys(coxeter_only(gs));
  const Word w = parse_word(word, sys.rank());
  const RootPerm x = sys.from_word(w);
  const int len = sys.length(x);
  const Word red = sys.reduced_word(x);
  r.payload = {{"word", one_based(w)},
               {"length", len},
               {"reduced", len == static_cast<int>(w.size())},
               {"reduced_word", one_based(red)}};
  r.text = "length: " + std::to_string(len) + "\nreduced word: " + join(one_based(red)) + "\n";
}

void cmd_bruhat(const GroupSpec& gs, const std::string& y, const std::string& w, CommandResult& r) {
  const CoxeterSystem sys(coxeter_only(gs));
  const RootPerm a = sys.from_word(parse_word(y, sys.rank()));
  const RootPerm b = sys.from_word(parse_word(w, sys.rank()));
  const bool leq = sys.bruhat_leq(a, b);
  r.payload = {{"leq", leq}, {"y_length", sys.length(a)}, {"w_length", sys.length(b)}};
  r.text = std::string("y <= w: ") + (leq ? "yes" : "no") + "\n";
}

void cmd_classes(const GroupSpec& gs, std::size_t budget, CommandResult& r) {
  const Built b = build(gs, budget);
  const ClassPartition cp = conjugacy_classes(*b.group);
  json list = json::array();
  std::ostringstream os;
  os << "# size l_min order representative\n";
  for (const auto& c : cp.classes) {
    const std::string rep = element_text(b, c.representative);
    const int ord = b.group->element_order(c.representative);
    list.push_back({{"representative", rep}, {"size", c.size()}, {"l_min", c.l_min}, {"order", ord}});
    os << c.size() << ' ' << c.l_min << ' ' << ord << ' ' << rep << '\n';
  }
  r.payload = {{"group", b.name}, {"order", b.group->order()}, {"classes", list}};
  r.text = os.str();
}

void cmd_descent(const GroupSpec& gs, const std::string& element, std::size_t budget, CommandResult& r) {
  const Built b = build(gs, budget);
  const ClassPartition cp = conjugacy_classes(*b.group);
  const std::size_t x = parse_element(b, element);
  const DescentPath path = gp_descent(*b.group, cp, x);
  json steps = json::array();
  std::ostringstream os;
  for (const auto& st : path.steps) {
    steps.push_back({{"element", element_text(b, st.element)}, {"generator", st.generator + 1}});
    os << element_text(b, st.element) << "  -- s" << st.generator + 1 << " -->\n";
  }
  const int l_min = cp.classes[cp.class_of[x]].l_min;
  os << element_text(b, path.endpoint) << "\nlength " << b.group->word_length(path.endpoint) << ", class minimum "
     << l_min << '\n';
  r.payload = {{"start", element_text(b, x)},
               {"steps", steps},
               {"endpoint", element_text(b, path.endpoint)},
               {"endpoint_length", b.group->word_length(path.endpoint)},
               {"l_min", l_min}};
  r.text = os.str();
}

void cmd_group(const GroupSpec& gs, std::size_t budget, CommandResult& r) {
  const Built b = build(gs, budget);
  const ClassPartition cp = conjugacy_classes(*b.group);
  const ReflectionData rd = reflections_and_hyperplanes(*b.group, cp);
  std::vector<std::string> gens;
  for (int s = 0; s < b.group->num_generators(); ++s) gens.push_back(element_text(b, b.group->generator_index(s)));
  r.payload = {{"group", b.name},
               {"order", b.group->order()},
               {"dimension", b.group->dimension()},
               {"classes", cp.size()},
               {"reflections", rd.num_reflections()},
               {"hyperplanes", rd.num_hyperplanes()},
               {"generators", gens}};
  std::ostringstream os;
  os << "group: " << b.name << "\norder: " << b.group->order() << "\ndimension: " << b.group->dimension()
     << "\nclasses: " << cp.size() << "\nreflections: " << rd.num_reflections()
     << "\nhyperplanes: " << rd.num_hyperplanes() << "\ngenerators: " << join(gens, ", ") << '\n';
  r.text = os.str();
}

DegreeData degree_data(const GroupSpec& gs, bool closed, std::size_t budget, std::string& method) {
  if (closed) {
    auto [m, p] = resolve(gs);
    if (!p) throw std::invalid_argument("--closed needs an imprimitive group");
    method = "closed";
    return degrees_closed_form(*p);
  }
  method = "molien";
  return computed_degrees(*build(gs, budget).group);
}

void cmd_degrees(const GroupSpec& gs, bool closed, bool show_codegrees, std::size_t budget, CommandResult& r) {
  std::string method;
  const DegreeData dd = degree_data(gs, closed, budget, method);
  r.payload = {{"degrees", dd.degrees}, {"codegrees", dd.codegrees}, {"method", method}};
  r.text = join(dd.degrees) + "\n";
  if (show_codegrees) r.text += join(dd.codegrees) + "\n";
}

void cmd_molien(const GroupSpec& gs, int terms, std::size_t budget, CommandResult& r) {
  const Built b = build(gs, budget);
  const ClassPartition cp = conjugacy_classes(*b.group);
  const auto p = molien_series(group_spectra(*b.group, cp));
  const auto ser = p.series(terms);
  std::vector<std::string> coeffs;
  for (int k = 0; k < terms; ++k) coeffs.push_back(ser.coeff(k).to_string());
  r.payload = {{"molien", p.to_string()}, {"coefficients", coeffs}};
  r.text = p.to_string() + "\n" + join(coeffs) + "\n";
}

void cmd_poincare(const GroupSpec& gs, bool closed, std::size_t budget, CommandResult& r) {
  std::string method;
  const DegreeData dd = degree_data(gs, closed, budget, method);
  const Poly<Integer> p = poincare_polynomial(dd.degrees);
  r.payload = {{"poincare", p.to_string()}, {"degrees", dd.degrees}};
  r.text = p.to_string() + "\n";
  auto [m, prm] = resolve(gs);
  if (m) {
    // Coxeter groups: also the length generating function
    const Built b = build(gs, budget);
    std::vector<Integer> c;
    for (std::size_t i = 0; i < b.group->order(); ++i) {
      const auto l = static_cast<std::size_t>(b.group->word_length(i));
      if (c.size() <= l) c.resize(l + 1, Integer(0));
      c[l] += Integer(1);
    }
    const bool match = Poly<Integer>(c) == p;
    r.payload["length_series_matches"] = match;
    r.text += std::string("length generating function matches: ") + (match ? "yes" : "no") + "\n";
  }
}

ImprimParams imprim_only(const GroupSpec& gs) {
  auto [m, p] = resolve(gs);
  if (!p) throw std::invalid_argument("this command needs --imprim d e n or G(m,e,n)");
  return *p;
}

void cmd_fakedeg(const GroupSpec& gs, CommandResult& r) {
  const ImprimParams p = imprim_only(gs);
  json list = json::array();
  std::ostringstream os;
  if (p.e == 1) {
    for (const auto& alpha : d_partitions(p.d, p.n)) {
      const Poly<Integer> f = fake_degree_closed(alpha, p.d);
      const int b = b_invariant_and_gamma(f).first;
      list.push_back({{"label", to_string(alpha)}, {"fake_degree", f.to_string()}, {"b", b}, {"constituents", 1}});
      os << to_string(alpha) << ": " << f.to_string() << '\n';
    }
  } else {
    for (const auto& orb : irr_count_Gdeen(p.d, p.e, p.n).orbits) {
      const Poly<Integer> f = fake_degree_imprim(orb.representative, p.d, p.e);
      const int b = b_invariant_and_gamma(f).first;
      list.push_back({{"label", to_string(orb.representative)},
                      {"fake_degree", f.to_string()},
                      {"b", b},
                      {"constituents", orb.stabilizer}});
      os << to_string(orb.representative);
      if (orb.stabilizer > 1) os << " (" << orb.stabilizer << " constituents)";
      os << ": " << f.to_string() << '\n';
    }
  }
  r.payload = {{"group", p.name()}, {"characters", list}};
  r.text = os.str();
}

void cmd_chartable(const GroupSpec& gs, int max_dn, CommandResult& r) {
  const ImprimParams p = imprim_only(gs);
  if (p.e != 1) throw std::invalid_argument("character tables are available for G(d,1,n)");
  if (p.d * p.n > max_dn)
    throw BudgetExceeded("d n = " + std::to_string(p.d * p.n) + " exceeds the table budget " + std::to_string(max_dn));
  const CharTable t = char_table(p.d, p.n);
  std::vector<std::string> labels;
  std::vector<json> sizes;
  for (std::size_t k = 0; k < t.size(); ++k) {
    labels.push_back(to_string(t.labels[k]));
    sizes.push_back(integer_json(t.class_sizes[k]));
  }
  json rows = json::array();
  std::ostringstream os;
  os << "classes: " << join(labels, "  ") << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> vals;
    for (const auto& c : t.values[i]) vals.push_back(c.to_string());
    rows.push_back({{"label", labels[i]}, {"values", vals}});
    os << labels[i] << ": " << join(vals, "  ") << '\n';
  }
  r.payload = {{"group", p.name()}, {"columns", labels}, {"class_sizes", sizes}, {"rows", rows}};
  r.text = os.str();
}

void cmd_regular(const GroupSpec& gs, bool closed, std::size_t budget, CommandResult& r) {
  DegreeData dd;
  std::string source;
  const auto rec = gs.spec.empty() ? std::nullopt : find_record(gs.spec);
  if (rec && !rec->series) {
    dd.degrees = rec->degrees;
    dd.codegrees = rec->all_codegrees();
    std::sort(dd.codegrees.begin(), dd.codegrees.end());
    source = "table";
  } else {
    dd = degree_data(gs, closed, budget, source);
  }
  const auto numbers = regular_numbers(dd);
  const auto bold = maximal_regular_degrees(dd);
  r.payload = {{"degrees", dd.degrees},
               {"codegrees", dd.codegrees},
               {"regular_numbers", numbers},
               {"regular_degrees", bold},
               {"source", source}};
  r.text = "regular numbers: " + join(numbers) + "\nregular degrees: " + join(bold) + "\n";
}

void cmd_homfly(const std::string& braid, const std::vector<SpecTarget>& targets, CommandResult& r) {
  const BraidWord b = parse_braid(braid);
  const LinkInvariant inv = homfly(b);
  json specs = json::object();
  std::ostringstream os;
  for (SpecTarget t : targets) {
    const Specialization s = specialize(inv, t);
    specs[spec_target_name(t)] = {{"value", s.to_string()}, {"variable", s.vars.front()}};
    if (targets.size() > 1) os << spec_target_name(t) << ": ";
    os << s.to_string() << '\n';
  }
  if (targets.empty()) os << inv.to_string() << '\n';
  r.payload = {{"braid", b.to_string()},
               {"strands", inv.strands},
               {"components", inv.components},
               {"homfly", inv.to_string()},
               {"specializations", specs}};
  r.text = os.str();
}

json record_json(const ShephardToddRecord& rec) {
  json j = {{"label", rec.label},
            {"series", rec.series},
            {"degrees", rec.degrees_text},
            {"codegrees", rec.codegrees_text},
            {"well_generated", rec.well_generated()},
            {"regular_degrees", rec.regular_text},
            {"field", rec.field}};
  if (rec.series) {
    j["conditions"] = rec.conditions;
  } else {
    j["rank"] = rec.rank;
    j["quotient"] = rec.quotient;
    j["degree_list"] = rec.degrees;
    j["codegree_list"] = rec.all_codegrees();
  }
  return j;
}

void cmd_table(const std::string& label, const std::string& file, CommandResult& r) {
  std::vector<ShephardToddRecord> owned;
  const std::vector<ShephardToddRecord>* table = &load_table();
  if (!file.empty()) {
    owned = parse_table(read_file(file));
    table = &owned;
  }
  std::ostringstream os;
  if (label.empty()) {
    json list = json::array();
    for (const auto& rec : *table) {
      list.push_back(record_json(rec));
      os << rec.label << ": " << rec.degrees_text << '\n';
    }
    r.payload = {{"records", list}};
    r.text = os.str();
    return;
  }
  auto it = std::find_if(table->begin(), table->end(), [&](const auto& rec) { return rec.label == label; });
  if (it == table->end()) throw std::invalid_argument("no table entry " + label);
  const auto& rec = *it;
  r.payload = record_json(rec);
  os << "label: " << rec.label << '\n';
  if (rec.series) os << "conditions: " << rec.conditions << '\n';
  else os << "rank: " << rec.rank << '\n';
  os << "degrees: " << rec.degrees_text << '\n';
  if (rec.series) os << "codegrees: " << rec.codegrees_text << '\n';
  else os << "codegrees: " << join(rec.all_codegrees(), ",") << (rec.well_generated() ? " (well-generated)" : "") << '\n';
  os << "regular degrees: " << rec.regular_text << '\n' << "field: " << rec.field << '\n';
  if (!rec.series) os << "W/Z(W): " << rec.quotient << '\n';
  r.text = os.str();
}

std::size_t default_budget() {
  const char* env = std::getenv("REFL_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultOrderBudget;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || v == 0) throw std::invalid_argument("REFL_BUDGET must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult r;
  CLI::App app{"Finite reflection groups: Coxeter systems, invariants, characters and link invariants", "refl"};
  app.require_subcommand(1);

  bool json_out = false;
  std::size_t budget = 0;
  app.add_flag("--json", json_out, "JSON output");
  app.add_option("--budget", budget, "element budget for enumerations (default 1000000 or REFL_BUDGET)");

  GroupSpec gs;
  std::string word, y, w, element, braid, label, file;
  bool count_only = false, closed = false, show_codegrees = false;
  bool jones = false, alexander = false, tx = false;
  int terms = 12;
  int max_dn = 24;

  auto group_opts = [&](CLI::App* sub, bool imprim_ok, bool matrix_ok) {
    sub->fallthrough();
    sub->add_option("group", gs.spec, "type name such as H3 or A1xA1, a table label, or G(m,e,n)");
    if (matrix_ok) sub->add_option("--matrix", gs.matrix_file, "Coxeter matrix file");
    if (imprim_ok) sub->add_option("--imprim", gs.imprim, "G(de,e,n) as d e n")->expected(3);
  };

  std::map<std::string, std::function<void()>> actions;
  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    return sub;
  };

  auto* c_cox = add("coxeter", "Coxeter matrix: finiteness and type");
  group_opts(c_cox, false, true);
  actions["coxeter"] = [&] { cmd_coxeter(gs, r); };

  auto* c_roots = add("roots", "root system of a finite Coxeter group");
  group_opts(c_roots, false, true);
  c_roots->add_flag("--count", count_only, "counts only");
  actions["roots"] = [&] { cmd_roots(gs, count_only, r); };

  auto* c_len = add("length", "length and reduced word of a Coxeter group element");
  group_opts(c_len, false, true);
  c_len->add_option("--word", word, "generators, 1-based")->required();
  actions["length"] = [&] { cmd_length(gs, word, r); };

  auto* c_bru = add("bruhat", "Bruhat comparison y <= w");
  group_opts(c_bru, false, true);
  c_bru->add_option("--y", y, "word of y")->required();
  c_bru->add_option("--w", w, "word of w")->required();
  actions["bruhat"] = [&] { cmd_bruhat(gs, y, w, r); };

  auto* c_cls = add("classes", "conjugacy classes");
  group_opts(c_cls, true, true);
  actions["classes"] = [&] { cmd_classes(gs, budget, r); };

  auto* c_des = add("descent", "cyclic-shift descent to minimal length in the class");
  group_opts(c_des, true, true);
  c_des->add_option("--element", element, "word (1-based) or monomial such as \"(1 2);[1,0]\"")->required();
  actions["descent"] = [&] { cmd_descent(gs, element, budget, r); };

  auto* c_grp = add("group", "order, classes, reflections and hyperplanes");
  group_opts(c_grp, true, true);
  actions["group"] = [&] { cmd_group(gs, budget, r); };

  auto* c_deg = add("degrees", "degrees of basic invariants");
  group_opts(c_deg, true, true);
  c_deg->add_flag("--closed", closed, "closed form for G(de,e,n) instead of the Molien series");
  c_deg->add_flag("--codegrees", show_codegrees, "print codegrees on a second line");
  actions["degrees"] = [&] { cmd_degrees(gs, closed, show_codegrees, budget, r); };

  auto* c_mol = add("molien", "Molien series");
  group_opts(c_mol, true, true);
  c_mol->add_option("--terms", terms, "number of series coefficients")->check(CLI::Range(1, 1000));
  actions["molien"] = [&] { cmd_molien(gs, terms, budget, r); };

  auto* c_poi = add("poincare", "Poincare polynomial");
  group_opts(c_poi, true, true);
  c_poi->add_flag("--closed", closed, "closed-form degrees for G(de,e,n)");
  actions["poincare"] = [&] { cmd_poincare(gs, closed, budget, r); };

  auto* c_fake = add("fakedeg", "fake degrees of G(de,e,n)");
  group_opts(c_fake, true, false);
  actions["fakedeg"] = [&] { cmd_fakedeg(gs, r); };

  auto* c_ct = add("chartable", "character table of G(d,1,n)");
  group_opts(c_ct, true, false);
  c_ct->add_option("--max-dn", max_dn, "largest allowed d n")->check(CLI::PositiveNumber);
  actions["chartable"] = [&] { cmd_chartable(gs, max_dn, r); };

  auto* c_reg = add("regular", "regular numbers and regular degrees");
  group_opts(c_reg, true, true);
  c_reg->add_flag("--closed", closed, "closed-form degrees for G(de,e,n)");
  actions["regular"] = [&] { cmd_regular(gs, closed, budget, r); };

  auto* c_hom = add("homfly", "HOMFLY-PT polynomial of a braid closure");
  c_hom->fallthrough();
  c_hom->add_option("braid", braid, "braid word \"n: i j -k\"")->required();
  c_hom->add_flag("--jones", jones, "Jones polynomial");
  c_hom->add_flag("--alexander", alexander, "Alexander polynomial");
  c_hom->add_flag("--tx", tx, "HOMFLY-PT in t and x");
  actions["homfly"] = [&] {
    std::vector<SpecTarget> targets;
    if (jones) targets.push_back(SpecTarget::jones);
    if (alexander) targets.push_back(SpecTarget::alexander);
    if (tx) targets.push_back(SpecTarget::homfly_tx);
    cmd_homfly(braid, targets, r);
  };

  auto* c_tab = add("table", "bundled table of irreducible reflection groups");
  c_tab->fallthrough();
  c_tab->add_option("label", label, "row label such as G23");
  c_tab->add_option("--file", file, "read the table from a file instead");
  actions["table"] = [&] { cmd_table(label, file, r); };

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    r.command = args.empty() ? "" : args.front();
    r.exit_status = code == 0 ? kExitOk : kExitUsage;
    r.text = out.str();
    r.error = err.str();
    if (r.exit_status == kExitOk) r.command = "help";
    return r;
  }

  r.json = json_out;
  r.command = app.get_subcommands().front()->get_name();
  try {
    if (budget == 0) budget = default_budget();
    actions.at(r.command)();
  } catch (const BudgetExceeded& e) {
    r.exit_status = kExitBudget;
    r.error = e.what();
  } catch (const InvariantViolation& e) {
    r.exit_status = kExitInvariant;
    r.error = std::string("invariant violation: ") + e.what();
  } catch (const std::invalid_argument& e) {
    r.exit_status = kExitUsage;
    r.error = e.what();
  } catch (const std::domain_error& e) {
    r.exit_status = kExitUsage;
    r.error = e.what();
  } catch (const std::out_of_range& e) {
    r.exit_status = kExitUsage;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.exit_status = kExitInvariant;
    r.error = e.what();
  }
  if (r.exit_status != kExitOk) r.payload = json::object();
  return r;
}

}  // namespace refl::cli
