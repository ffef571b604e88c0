#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rootfp/compression.hpp"
#include "rootfp/e6.hpp"
#include "rootfp/e7.hpp"
#include "rootfp/fp.hpp"
#include "rootfp/ideals.hpp"
#include "rootfp/render.hpp"
#include "rootfp/root_system.hpp"
#include "rootfp/verify.hpp"

namespace {

using nlohmann::json;
using namespace rootfp;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

bool parse_system(const std::string& s, Family& fam, int& rank) {
  if (s.size() != 2) return false;
  char c = static_cast<char>(std::tolower(s[0]));
  if (c != 'a' && c != 'd' && c != 'e') return false;
  if (s[1] < '1' || s[1] > '9') return false;
  fam = family_from_char(c);
  rank = s[1] - '0';
  if (fam == Family::E && (rank < 3 || rank > 8)) return false;
  if (fam == Family::D && rank < 2) return false;
  return true;
}

int emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) return usage_error("cannot open output file " + out_path);
  f << content;
  return 0;
}

json root_json(const Root& b) { return json(b); }

std::optional<F3Code> parse_code(const std::string& s) {
  if (s.size() != 3) return std::nullopt;
  F3Code c;
  int* slots[3] = {&c.a, &c.b, &c.c};
  for (int i = 0; i < 3; ++i) {
    if (s[i] < '0' || s[i] > '3') return std::nullopt;
    *slots[i] = s[i] - '0';
  }
  return c;
}

std::optional<FpVec> parse_vec3(const std::string& s) {
  FpVec v;
  for (char ch : s) {
    if (ch < '0' || ch > '2') return std::nullopt;
    v.push_back(ch - '0');
  }
  if (v.size() != 5) return std::nullopt;
  return v;
}

std::string digits(const FpVec& v) {
  std::string s;
  for (int d : v) s += static_cast<char>('0' + d);
  return s;
}

// ------------------------------------------------------------------- export

json export_roots(Family fam, int rank) {
  auto rs = RootSystem::build(fam, rank);
  json j;
  j["system"] = std::string(1, family_to_char(fam)) + std::to_string(rank);
  j["rank"] = rank;
  j["cartan"] = rs.cartan();
  json pos = json::array();
  for (const auto& b : rs.positive_roots()) pos.push_back(root_json(b));
  j["positive_roots"] = pos;
  j["root_count"] = rs.positive_roots().size() * 2;
  return j;
}

json export_map(const std::string& system) {
  json j;
  j["system"] = system;
  json rows = json::array();
  if (system == "e7") {
    const auto& m = E7Model::instance();
    for (int i = 0; i < 64; ++i) {
      F3Code c = f3_unpack(i);
      json row;
      row["code"] = f3_string(c);
      const Root* b = m.root_of(c);
      row["root"] = b ? json(*b) : json(nullptr);
      rows.push_back(row);
    }
  } else {
    const auto& m = E6Model::instance();
    for (const auto& x : m.gamma()) {
      json row;
      row["vector"] = digits(x);
      row["root"] = json(*m.root_of(x));
      rows.push_back(row);
    }
  }
  j["rows"] = rows;
  return j;
}

json export_strata(const std::string& system) {
  json j;
  j["system"] = system;
  json strata = json::array();
  if (system == "e7") {
    const auto& m = E7Model::instance();
    for (int s : m.stratum_labels()) {
      json row;
      row["s"] = s;
      row["z"] = f3_string(m.z(s));
      json members = json::array();
      for (const auto& b : m.e7().stratum_positive(s)) {
        json mem;
        mem["root"] = root_json(b);
        mem["code"] = f3_string(m.f(b));
        members.push_back(mem);
      }
      row["members"] = members;
      strata.push_back(row);
    }
    json sixes = json::array();
    for (const auto& ds : m.double_sixes()) {
      json row;
      row["alpha"] = root_json(ds.alpha);
      json a = json::array(), b = json::array();
      for (const auto& x : ds.first) a.push_back(f3_string(x));
      for (const auto& x : ds.second) b.push_back(f3_string(x));
      row["first"] = a;
      row["second"] = b;
      sixes.push_back(row);
    }
    j["double_sixes"] = sixes;
  } else if (system == "e6") {
    const auto& m = E6Model::instance();
    for (int s : std::vector<int>{1, 3, 4, 5, 6}) {
      json row;
      row["s"] = s;
      json members = json::array();
      for (const auto& b : m.e6().stratum_positive(s)) {
        json mem;
        mem["root"] = root_json(b);
        mem["vector"] = digits(m.f(b));
        members.push_back(mem);
      }
      row["members"] = members;
      strata.push_back(row);
    }
  } else {
    auto rs = RootSystem::build(Family::E, 8);
    for (int s : std::vector<int>{1, 3, 4, 5, 6, 7, 8}) {
      json row;
      row["s"] = s;
      json members = json::array();
      for (const auto& b : rs.stratum_positive(s))
        members.push_back(root_json(b));
      row["members"] = members;
      strata.push_back(row);
    }
  }
  j["strata"] = strata;
  return j;
}

json export_ideals(int s) {
  const auto& sys = IdealSystem::instance();
  json j;
  j["s"] = s;
  json elems = json::array();
  for (const auto& b : sys.elements(s)) elems.push_back(root_json(b));
  j["elements"] = elems;
  json ideals = json::array();
  for (auto mask : sys.ideals(s)) {
    json members = json::array();
    for (size_t i = 0; i < sys.elements(s).size(); ++i)
      if (mask >> i & 1) members.push_back(i);
    json row;
    row["members"] = members;
    row["psi"] = root_json(sys.psi(s, mask));
    if (s == 7) row["class"] = sys.ideal_class(mask);
    ideals.push_back(row);
  }
  j["ideals"] = ideals;
  j["open_map_count"] = sys.open_map(s).count;
  if (sys.open_map(s).count >= 1) j["h_labels"] = sys.open_map(s).labels;
  if (s == 7) {
    json mu = json::array(), rho = json::array();
    for (const auto& b : sys.elements(7)) {
      mu.push_back(sys.element_index(7, sys.mu(b)));
      rho.push_back(sys.element_index(7, sys.rho(b)));
    }
    j["mu"] = mu;
    j["rho"] = rho;
  }
  return j;
}

json export_group() {
  const auto& m = E7Model::instance();
  json j;
  json verts = json::array();
  for (const auto& x : m.gamma7()) verts.push_back(f3_string(x));
  j["vertices"] = verts;
  json gens = json::array();
  for (int i = 1; i <= 6; ++i) {
    auto p = m.reflection_perm(m.e7().simple_root(i));
    gens.push_back(std::vector<int>(p.begin(), p.end()));
  }
  j["generators"] = gens;
  auto w = m.weyl_e6_closure();
  j["order"] = w.elements.size();
  json elems = json::array();
  for (const auto& p : w.elements)
    elems.push_back(std::vector<int>(p.begin(), p.end()));
  j["elements"] = elems;
  return j;
}

// -------------------------------------------------------------------- query

json query_code_e7(const F3Code& c) {
  const auto& m = E7Model::instance();
  json j;
  j["code"] = f3_string(c);
  const Root* b = m.root_of(c);
  j["root"] = b ? json(*b) : json(nullptr);
  if (b) j["stratum"] = stratum(*b);
  json link = json::array();
  for (const auto& x : m.link(c))
    if (m.in_gamma_plus(7, x)) link.push_back(f3_string(x));
  j["link_in_gamma7"] = link;
  if (b && stratum(*b) == 7) {
    const auto& sys = IdealSystem::instance();
    Root b8 = *b;
    b8.push_back(0);
    j["h7"] = sys.open_map(7).labels[sys.element_index(7, b8)];
    auto cell = m.cube_layout(c);
    j["cell"] = {{"face", cell.face}, {"row", cell.row}, {"col", cell.col}};
  }
  return j;
}

json query_vec_e6(const FpVec& v) {
  const auto& m = E6Model::instance();
  json j;
  j["vector"] = digits(v);
  const Root* b = m.root_of(v);
  j["root"] = b ? json(*b) : json(nullptr);
  if (b) j["stratum"] = stratum(*b);
  if (m.in_gamma_plus(6, v)) {
    json link = json::array();
    for (const auto& x : m.link_in_gamma6(v)) link.push_back(digits(x));
    j["link_in_gamma6"] = link;
    auto cell = m.square_layout(v);
    j["cell"] = {{"row", cell.row}, {"col", cell.col}};
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for simply laced root systems compressed "
               "into small finite-field spaces: verification, rendering, "
               "and export."};
  app.require_subcommand(1);

  // verify
  std::string scope = "all";
  auto* verify = app.add_subcommand(
      "verify", "Run the exhaustive structural checks (all or one by id)");
  verify->add_option("scope", scope,
                     "'all', 'list', or a check id (see 'list')");

  // render
  std::string target, format = "ascii", system = "e7", highlight, out_path;
  int stratum_opt = 7, p = 2;
  auto* render = app.add_subcommand("render", "Render a figure or graph");
  render->add_option("target", target,
                     "cube_corner | square | hasse | openmap7 | dynkin | "
                     "tgraph")
      ->required();
  render->add_option("--format", format, "svg | ascii | dot | json");
  render->add_option("--system", system, "root system, e.g. e7, e6, e8, d4");
  render->add_option("--s", stratum_opt, "stratum label (hasse)");
  render->add_option("--highlight", highlight,
                     "vertex whose link is shaded (cube_corner, square)");
  render->add_option("--p", p, "target modulus (tgraph: 2 or 3)");
  render->add_option("--out", out_path, "output file (default stdout)");

  // export
  std::string what, esystem = "e7", eout;
  int es = 7;
  auto* exp = app.add_subcommand("export", "Export data as JSON");
  exp->add_option("what", what, "roots | map | strata | ideals | group")
      ->required();
  exp->add_option("--system", esystem, "root system");
  exp->add_option("--s", es, "stratum label (ideals)");
  exp->add_option("--out", eout, "output file (default stdout)");

  // query
  std::string qsystem = "e7", qvertex, qout;
  auto* query = app.add_subcommand("query", "Look up a target-space vertex");
  query->add_option("vertex", qvertex,
                    "three letters over 0..3 (e7) or five digits over 0..2 "
                    "(e6)")
      ->required();
  query->add_option("--system", qsystem, "e7 | e6");
  query->add_option("--out", qout, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (scope == "list") {
        for (const auto& c : all_checks())
          std::cout << c.id << "  -  " << c.summary << "\n";
        return 0;
      }
      std::vector<const Check*> selected;
      if (scope == "all") {
        for (const auto& c : all_checks()) selected.push_back(&c);
      } else {
        const Check* c = find_check(scope);
        if (!c) return usage_error("unknown check id '" + scope + "'");
        selected.push_back(c);
      }
      int failures = 0;
      for (const Check* c : selected) {
        CheckResult r = c->run();
        if (!r.pass) ++failures;
        std::cout << report_line(r);
      }
      std::cout << selected.size() << " checks, " << failures
                << " failures\n";
      return failures == 0 ? 0 : 1;
    }

    if (render->parsed()) {
      auto fmt = format_from_string(format);
      if (!fmt) return usage_error("unknown format '" + format + "'");
      std::string content;
      if (target == "cube_corner") {
        std::optional<F3Code> hl;
        if (!highlight.empty()) {
          hl = parse_code(highlight);
          if (!hl || !E7Model::instance().in_gamma_plus(7, *hl))
            return usage_error("highlight must be a Gamma7+ code");
        }
        content = render_cube_corner(*fmt, hl);
      } else if (target == "openmap7") {
        content = render_openmap7(*fmt);
      } else if (target == "square") {
        std::optional<FpVec> hl;
        if (!highlight.empty()) {
          hl = parse_vec3(highlight);
          if (!hl || !E6Model::instance().in_gamma_plus(6, *hl))
            return usage_error("highlight must be a Gamma6+ vector");
        }
        content = render_square(*fmt, hl);
      } else if (target == "hasse" || target == "dynkin") {
        Family fam;
        int rank;
        if (!parse_system(system, fam, rank))
          return usage_error("unknown system '" + system + "'");
        auto rs = RootSystem::build(fam, rank);
        if (target == "hasse") {
          if (fam != Family::E)
            return usage_error("hasse rendering uses the stratum structure "
                               "of an E-family system");
          content = render_hasse(*fmt, rs, stratum_opt);
        } else {
          content = render_dynkin(*fmt, rs);
        }
      } else if (target == "tgraph") {
        content = render_tgraph(*fmt, p);
      } else {
        return usage_error("unknown render target '" + target + "'");
      }
      return emit(out_path, content);
    }

    if (exp->parsed()) {
      json j;
      if (what == "roots") {
        Family fam;
        int rank;
        if (!parse_system(esystem, fam, rank))
          return usage_error("unknown system '" + esystem + "'");
        j = export_roots(fam, rank);
      } else if (what == "map") {
        if (esystem != "e7" && esystem != "e6")
          return usage_error("map export supports e7 and e6");
        j = export_map(esystem);
      } else if (what == "strata") {
        if (esystem != "e7" && esystem != "e6" && esystem != "e8")
          return usage_error("strata export supports e6, e7, e8");
        j = export_strata(esystem);
      } else if (what == "ideals") {
        if (es < 3 || es > 7)
          return usage_error("ideals export supports s = 3..7");
        j = export_ideals(es);
      } else if (what == "group") {
        j = export_group();
      } else {
        return usage_error("unknown export selection '" + what + "'");
      }
      return emit(eout, j.dump(2) + "\n");
    }

    if (query->parsed()) {
      json j;
      if (qsystem == "e7") {
        auto c = parse_code(qvertex);
        if (!c) return usage_error("e7 vertex must be three letters 0..3");
        j = query_code_e7(*c);
      } else if (qsystem == "e6") {
        auto v = parse_vec3(qvertex);
        if (!v) return usage_error("e6 vertex must be five digits 0..2");
        j = query_vec_e6(*v);
      } else {
        return usage_error("query supports e7 and e6");
      }
      return emit(qout, j.dump(2) + "\n");
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  return 0;
}
