#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "whlab/asphericity/probe.hpp"
#include "whlab/cohomology/hochschild.hpp"
#include "whlab/hopf/tensor_hopf.hpp"
#include "whlab/spectral/double_complex.hpp"

namespace whlab::cli {

namespace {

std::string join(std::vector<std::size_t> const& v, std::string const& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string join(std::vector<std::string> const& v, std::string const& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string file_stem(std::string const& path) { return std::filesystem::path(path).filename().string(); }

FiniteGroupTable load_group(GroupOptions const& o) {
  if (!o.group_file.empty()) return FiniteGroupTable::load(o.group_file);
  if (o.group.empty()) throw DomainError("a group is required (--group NAME or --group-file PATH)");
  return FiniteGroupTable::named(o.group);
}

Field group_field(GroupOptions const& o, FiniteGroupTable const& g) {
  if (o.field) return Field::parse(*o.field);
  auto p = g.p_group_prime();
  if (!p) throw DomainError("group " + g.name() + " is not a p-group; pass --field");
  return Field::prime(*p);
}

GModule coefficients(GroupOptions const& o, FiniteGroupTable const& g, Field f, std::uint64_t seed) {
  if (f.is_rational()) throw DomainError("group cohomology runs over F_p only");
  if (o.coefficients == "trivial") return GModule::trivial(g, f);
  if (o.coefficients == "regular") return GModule::regular(g, f);
  if (o.coefficients == "functions") return GModule::functions(g, f);
  if (o.coefficients == "random") {
    std::mt19937_64 rng(seed);
    return GModule::random(g, f, 4, rng);
  }
  throw DomainError("unknown coefficients '" + o.coefficients + "' (trivial, regular, functions or random)");
}

Json group_json(FiniteGroupTable const& g) { return Json{{"name", g.name()}, {"order", g.order()}}; }

Json module_json(GModule const& m, GroupOptions const& o) {
  return Json{{"kind", o.coefficients}, {"dimension", m.dimension()}};
}

}  // namespace

Report shuffle_command(ShuffleOptions const& o, Common const&) {
  Field f = Field::parse(o.field);
  std::set<char> chars(o.left.begin(), o.left.end());
  chars.insert(o.right.begin(), o.right.end());
  std::string letters(chars.begin(), chars.end());
  auto a = TensorHopfElement::from_letters(f, letters, o.left);
  auto b = TensorHopfElement::from_letters(f, letters, o.right);
  auto product = o.infiltration ? infiltration(a, b) : shuffle(a, b);

  Report r;
  Json terms = Json::array();
  for (auto const& [w, c] : product.terms()) {
    std::string word;
    for (auto l : w) word += letters[l];
    terms.push_back(Json{{"word", word.empty() ? "1" : word}, {"coefficient", c.str()}});
  }
  std::string left = o.left.empty() ? "1" : o.left, right = o.right.empty() ? "1" : o.right;
  r.json = Json{{"command", "shuffle"},
                {"product", o.infiltration ? "infiltration" : "shuffle"},
                {"field", f.name()},
                {"left", left},
                {"right", right},
                {"result", product.str(letters)},
                {"terms", terms}};
  r.text = left + (o.infiltration ? " ^ " : " o ") + right + " = " + product.str(letters) + "\n";
  return r;
}

Report fox_command(FoxOptions const& o, Common const& c) {
  Presentation p = load_presentation(o.path);
  Field f = o.field ? Field::parse(*o.field) : p.field;
  std::size_t cap = o.cap.value_or(p.truncation);
  QuotientAlgebra a(p, f, cap, c.budget);
  auto jac = fox_jacobian(p, a);
  auto one = GroupRingElement::of(GroupWord());

  Report r;
  std::ostringstream text;
  text << "presentation " << file_stem(o.path) << ": " << p.generators.size() << " generators, "
       << p.relators.size() << " relators\n";
  Json rels = Json::array();
  bool all_ok = true;
  for (std::size_t y = 0; y < p.relators.size(); ++y) {
    auto const& rel = p.relators[y];
    text << "relator " << rel.label << " = " << rel.word.str(p.generators) << "\n";
    Json derivs = Json::object();
    GroupRingElement sum;
    for (std::size_t x = 0; x < p.generators.size(); ++x) {
      auto d = fox_derivative(rel.word, x);
      sum = sum + d * (GroupRingElement::of(GroupWord::generator(x)) - one);
      derivs[p.generators[x]] = d.str(p.generators);
      text << "  d/d" << p.generators[x] << ": " << d.str(p.generators) << "\n";
    }
    bool ok = sum == GroupRingElement::of(rel.word) - one;
    all_ok = all_ok && ok;
    text << "  sum_x (d/dx)(x - 1) = r - 1: " << (ok ? "holds" : "FAILS") << "\n";
    Json row = Json::array();
    for (auto const& e : jac[y]) row.push_back(e.str());
    rels.push_back(Json{{"label", rel.label},
                        {"word", rel.word.str(p.generators)},
                        {"derivatives", derivs},
                        {"fundamentalIdentity", ok},
                        {"jacobian", row}});
  }
  text << "Jacobian in the completed group algebra (" << f.name() << ", N = " << cap
       << ", dim A = " << a.dimension() << ", X<i> = generator i):\n";
  for (std::size_t y = 0; y < p.relators.size(); ++y) {
    text << "  " << p.relators[y].label << ":";
    for (std::size_t x = 0; x < p.generators.size(); ++x) text << (x ? " | " : " ") << jac[y][x].str();
    text << "\n";
  }
  r.json = Json{{"command", "fox"},
                {"presentation", file_stem(o.path)},
                {"field", f.name()},
                {"N", cap},
                {"generators", p.generators},
                {"algebraDimension", a.dimension()},
                {"relators", rels},
                {"fundamentalIdentity", all_ok}};
  r.text = text.str();
  return r;
}

Report cohomology_command(CohomologyOptions const& o, Common const& c) {
  auto g = load_group(o.group);
  Field f = group_field(o.group, g);
  GModule m = coefficients(o.group, g, f, c.seed);
  std::vector<std::size_t> hoch;
  for (auto const& h : hochschild_cohomology(m, o.n_max, false, c.budget)) hoch.push_back(h.dimension);

  std::optional<std::vector<std::size_t>> betti;
  std::string note;
  if (o.group.coefficients != "trivial")
    note = "minimal resolution counts trivial coefficients only";
  else if (g.p_group_prime() != f.characteristic())
    note = "minimal resolution needs a p-group in characteristic p";
  else
    betti = minimal_resolution(g, f, o.n_max, c.budget);

  Report r;
  auto method_json = [](char const* method, std::vector<std::size_t> const& dims) {
    Json rows = Json::array();
    for (std::size_t n = 0; n < dims.size(); ++n) rows.push_back(Json{{"n", n}, {"dim", dims[n]}});
    return Json{{"method", method}, {"dims", rows}};
  };
  Json reports = Json::array({method_json("hochschild", hoch)});
  if (betti) reports.push_back(method_json("minimal-resolution", *betti));
  r.json = Json{{"command", "cohomology"},
                {"group", group_json(g)},
                {"module", module_json(m, o.group)},
                {"field", f.name()},
                {"nmax", o.n_max},
                {"reports", reports}};
  r.json["methodsAgree"] = betti ? Json(*betti == hoch) : Json(nullptr);
  if (!note.empty()) r.json["note"] = note;

  std::ostringstream text;
  text << "H^n(" << g.name() << ", " << o.group.coefficients << " of dim " << m.dimension() << ") over " << f.name()
       << ", n = 0.." << o.n_max << "\n";
  text << "  hochschild: " << join(hoch) << "\n";
  if (betti) {
    text << "  resolution: " << join(*betti) << "\n";
    text << "  methods-agree=" << (*betti == hoch ? "true" : "false") << "\n";
  } else {
    text << "  resolution: n/a (" << note << ")\n";
  }
  r.text = text.str();
  return r;
}

namespace {

std::pair<std::size_t, std::size_t> parse_window(std::string const& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t pos1 = 0, pos2 = 0;
    std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    long p = std::stol(a, &pos1), q = std::stol(b, &pos2);
    if (pos1 != a.size() || pos2 != b.size() || p < 0 || q < 0) throw std::invalid_argument("bad");
    return {static_cast<std::size_t>(p), static_cast<std::size_t>(q)};
  } catch (std::exception const&) {
    throw DomainError("window must look like P,Q with nonnegative integers, got '" + s + "'");
  }
}

std::vector<std::size_t> parse_subgroup(FiniteGroupTable const& g, std::string const& spec) {
  std::vector<std::size_t> gens;
  std::stringstream ss(spec);
  std::string label;
  while (std::getline(ss, label, ',')) {
    if (label.empty()) continue;
    auto i = g.index_of(label);
    if (!i) throw DomainError("no element '" + label + "' in " + g.name());
    gens.push_back(*i);
  }
  return g.subgroup_generated(gens);
}

Json cell_json(PageCell const& c) {
  return Json{{"p", c.p},           {"q", c.q},
              {"dim", c.dimension}, {"rankOut", c.rank_out},
              {"stable", c.stable}, {"reliable", c.reliable}};
}

std::string grid(std::vector<PageCell> const& cells, DoubleComplex const& dc) {
  std::ostringstream os;
  for (std::size_t q = dc.q_max() + 1; q-- > 0;) {
    os << "  q=" << std::left << std::setw(2) << q << std::right << "|";
    for (std::size_t p = 0; p <= dc.p_max(); ++p) {
      std::string s = ".";
      for (auto const& c : cells)
        if (c.p == p && c.q == q) s = std::to_string(c.dimension) + (c.reliable ? "" : "?");
      os << std::setw(5) << s;
    }
    os << "\n";
  }
  os << "       ";
  for (std::size_t p = 0; p <= dc.p_max(); ++p) os << std::setw(5) << ("p=" + std::to_string(p));
  os << "\n";
  return os.str();
}

}  // namespace

Report lhs_command(LhsOptions const& o, Common const& c) {
  auto g = load_group(o.group);
  Field f = group_field(o.group, g);
  GModule m = coefficients(o.group, g, f, c.seed);
  auto h = parse_subgroup(g, o.subgroup);
  auto [p_max, q_max] = parse_window(o.window);
  std::size_t n_max = o.n_max.value_or(std::max(p_max, q_max) + 1);
  if (o.r_max < 2) throw DomainError("--pages must be at least 2");

  auto dc = lhs_double_complex(m, h, p_max, q_max, n_max, c.budget);
  auto bad = validate_double_complex(dc);
  if (!bad.empty()) throw DomainError("LHS complex is not a double complex: " + bad.front());
  auto s = spectral_pages(dc, o.r_max, c.budget);

  std::size_t reliable_n = 0;
  bool any_reliable = false;
  for (auto const& t : s.totals)
    if (t.reliable) reliable_n = t.n, any_reliable = true;
  std::vector<std::size_t> hoch;
  if (any_reliable)
    for (auto const& x : hochschild_cohomology(m, reliable_n, false, c.budget)) hoch.push_back(x.dimension);

  bool converges = true;
  Json totals = Json::array();
  for (auto const& t : s.totals) {
    Json tj{{"n", t.n}, {"dim", t.dimension}, {"reliable", t.reliable}};
    if (t.reliable) {
      std::size_t sum = 0;
      for (auto const& cell : s.infinity)
        if (cell.p + cell.q == t.n) sum += cell.dimension;
      tj["einfSum"] = sum;
      tj["hochschild"] = hoch[t.n];
      converges = converges && sum == t.dimension && t.dimension == hoch[t.n];
    }
    totals.push_back(tj);
  }

  Json pages = Json::array();
  Json higher = Json::array();
  for (auto const& page : s.pages) {
    Json cells = Json::array();
    for (auto const& cell : page.cells) {
      cells.push_back(cell_json(cell));
      if (page.r >= 2 && cell.reliable && cell.rank_out > 0)
        higher.push_back(Json{{"r", page.r}, {"p", cell.p}, {"q", cell.q}, {"rank", cell.rank_out}});
    }
    pages.push_back(Json{{"r", page.r}, {"cells", cells}});
  }
  Json inf = Json::array();
  for (auto const& cell : s.infinity) inf.push_back(cell_json(cell));
  bool d2_agree = true, e2_agree = true;
  for (std::size_t i = 0; i < s.pages[2].cells.size(); ++i) {
    d2_agree = d2_agree && s.zigzag_d2[i] == s.pages[2].cells[i].rank_out;
    e2_agree = e2_agree && s.direct_e2[i] == s.pages[2].cells[i].dimension;
  }

  std::vector<std::string> labels;
  for (auto e : h) labels.push_back(g.label(e));
  Report r;
  r.json = Json{{"command", "lhs"},
                {"group", group_json(g)},
                {"subgroup", labels},
                {"quotientOrder", g.order() / h.size()},
                {"field", f.name()},
                {"module", module_json(m, o.group)},
                {"window", Json{{"p", p_max}, {"q", q_max}, {"n", n_max}}},
                {"pages", pages},
                {"infinity", inf},
                {"totals", totals},
                {"higherDifferentials", higher},
                {"zigzagAgrees", d2_agree},
                {"directE2Agrees", e2_agree},
                {"converges", converges}};

  std::ostringstream text;
  text << "LHS spectral sequence for " << g.name() << " over {" << join(labels, ",") << "} (quotient of order "
       << g.order() / h.size() << "), " << f.name() << " coefficients " << o.group.coefficients << "\n";
  text << "window p <= " << p_max << ", q <= " << q_max << ", p+q <= " << n_max << "; '?' marks cells the window may distort\n";
  for (auto const& page : s.pages)
    if (page.r >= 2) text << "E" << page.r << ":\n" << grid(page.cells, dc);
  text << "Einf:\n" << grid(s.infinity, dc);
  text << "H^n(Tot):";
  for (auto const& t : s.totals) text << " " << t.dimension << (t.reliable ? "" : "?");
  text << "\n";
  if (higher.empty()) {
    text << "higher differentials: none in the reliable window\n";
  } else {
    text << "higher differentials:";
    for (auto const& d : higher)
      text << " d" << d["r"].get<std::size_t>() << "(" << d["p"].get<std::size_t>() << ","
           << d["q"].get<std::size_t>() << ") rank " << d["rank"].get<std::size_t>() << ";";
    text << "\n";
  }
  text << "zig-zag d2 agrees: " << (d2_agree ? "true" : "false") << ", direct E2 agrees: " << (e2_agree ? "true" : "false")
       << "\n";
  text << "converges to H^n(" << g.name() << ") for n <= " << reliable_n << ": " << (converges ? "true" : "false") << "\n";
  r.text = text.str();
  return r;
}

namespace {

Json report_json(AsphericityReport const& rep) {
  Json j{{"dims",
          Json{{"algebra", rep.algebra_dimension},
               {"perDegreeKernel", rep.per_degree_kernel},
               {"coinvariants", rep.coinvariants}}},
         {"relators", rep.relators},
         {"rowValuations", rep.row_valuations},
         {"kernelGenerators", rep.kernel_generators},
         {"relatorsIndependent", rep.relators_independent},
         {"verdict", verdict_name(rep.verdict)}};
  if (rep.witness) {
    Json w = Json::array();
    for (auto const& s : *rep.witness) w.push_back(s.str());
    j["witness"] = w;
  }
  return j;
}

std::string verdict_text(Verdict v, std::size_t cap) {
  return v == Verdict::no_obstruction ? "no-obstruction-to-degree-" + std::to_string(cap) : verdict_name(v);
}

}  // namespace

Report asphericity_command(AsphericityOptions const& o, Common const& c) {
  Presentation p = load_presentation(o.path);
  Field f = o.field ? Field::parse(*o.field) : p.field;
  std::size_t cap = o.cap.value_or(p.truncation);
  auto inst = theorem_instances(p, f, cap, c.budget);
  auto const& top = inst.rows.back().report;

  Report r;
  r.json = Json{{"command", "asphericity"}, {"presentation", file_stem(o.path)}, {"field", f.name()}, {"N", cap}};
  r.json.update(report_json(top));
  Json rows = Json::array();
  for (auto const& row : inst.rows) {
    Json j{{"labels", row.labels}};
    j.update(report_json(row.report));
    j.erase("witness");
    rows.push_back(j);
  }
  r.json["instances"] = rows;
  r.json["contradictions"] = inst.contradictions;

  std::ostringstream text;
  text << "presentation " << file_stem(o.path) << ": " << p.generators.size() << " generators, " << p.relators.size()
       << " relators; field " << f.name() << ", N = " << cap << "\n";
  text << std::left << std::setw(20) << "relators" << std::setw(7) << "dim A" << std::setw(24) << "kernel by degree"
       << std::setw(7) << "coinv" << "verdict\n";
  for (auto const& row : inst.rows) {
    text << std::setw(20) << ("{" + join(row.labels, ",") + "}") << std::setw(7) << row.report.algebra_dimension
         << std::setw(24) << join(row.report.per_degree_kernel) << std::setw(7) << row.report.coinvariants
         << verdict_text(row.report.verdict, cap) << "\n";
  }
  text << "verdict: " << verdict_text(top.verdict, cap) << "\n";
  if (top.witness) {
    std::vector<std::string> w;
    for (auto const& s : *top.witness) w.push_back(s.str());
    text << "kernel witness: (" << join(w, ", ") << ")\n";
  }
  text << "contradictions: " << (inst.contradictions.empty() ? "none" : join(inst.contradictions, "; ")) << "\n";
  r.text = text.str();
  return r;
}

}  // namespace whlab::cli
