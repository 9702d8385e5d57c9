#include "eqschubert/cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "eqschubert/error.hpp"
#include "eqschubert/giambelli.hpp"
#include "eqschubert/json_io.hpp"
#include "eqschubert/restriction.hpp"

namespace eqschubert {

namespace {

const char* method_name(Method m) {
  switch (m) {
    case Method::det: return "det";
    case Method::paths: return "paths";
    case Method::chain: return "chain";
    case Method::solve: return "solve";
    case Method::both: return "both";
  }
  return "?";
}

std::size_t choose(std::size_t n, std::size_t k) {
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
  return r > static_cast<long double>(std::numeric_limits<std::size_t>::max())
             ? std::numeric_limits<std::size_t>::max()
             : static_cast<std::size_t>(r + 0.5L);
}

class Job {
 public:
  Job(const JobSpec& spec, std::ostream& out, std::ostream& err) : s_(spec), out_(out), err_(err) {}

  int run() {
    switch (s_.command) {
      case Command::restrict: return do_restrict();
      case Command::paths: return do_paths();
      case Command::giambelli: return do_giambelli();
      case Command::structconst: return do_structconst();
      case Command::gkm_check: return do_gkm_check();
      case Command::table: return do_table();
    }
    throw InvalidArgument("unknown command");
  }

 private:
  void check_dims() const {
    if (s_.d < 1 || s_.d > s_.n) throw InvalidArgument("need 1 <= d <= n");
    if (s_.n > Monomial::kMaxVars) {
      throw InvalidArgument("n is capped at " + std::to_string(Monomial::kMaxVars));
    }
  }

  // Commands that visit every fixed point refuse Grassmannians above the limit.
  void check_size() const {
    const std::size_t count = choose(s_.n, s_.d);
    if (count > s_.limit) {
      throw InvalidArgument("C(" + std::to_string(s_.n) + "," + std::to_string(s_.d) + ") = " +
                            std::to_string(count) + " exceeds --limit " +
                            std::to_string(s_.limit));
    }
  }

  GIndex index(const std::optional<std::string>& literal, const char* name) const {
    if (!literal) throw InvalidArgument(std::string("--") + name + " is required");
    return GIndex::parse(*literal, s_.d, s_.n);
  }

  Method method(std::initializer_list<Method> allowed, Method fallback) const {
    const Method m = s_.method.value_or(fallback);
    for (Method a : allowed) {
      if (a == m) return m;
    }
    throw InvalidArgument(std::string("--method ") + method_name(m) + " is not valid here");
  }

  void no_method() const {
    if (s_.method) throw InvalidArgument("--method is not valid here");
  }

  Polynomial shown(Polynomial p) const { return s_.specialize_zero ? specialize_zero(p) : p; }
  std::string text(const Polynomial& p) const { return to_string(shown(p)); }
  Json json(const Polynomial& p) const { return to_json(shown(p)); }

  EqClass shown(const EqClass& a) const {
    if (!s_.specialize_zero) return a;
    EqClass out(a.d(), a.n());
    for (const auto& v : a.indices()) out.set(v, specialize_zero(a.at(v)));
    return out;
  }

  static const char* verdict(bool match) { return match ? "MATCH" : "MISMATCH"; }
  int finish(bool match) const {
    if (match) return exit_code::ok;
    err_ << "error: methods disagree\n";
    return exit_code::internal_failure;
  }

  // Positivity of c_uv^w in y_i = e_{i+1} - e_i is expected but not proved
  // by anything computed here, so a failure is only reported.
  void warn_positivity(const GIndex& u, const GIndex& v, const GIndex& w,
                       const Polynomial& c) const {
    if (!is_graham_positive(c)) {
      err_ << "WARNING: c_uv^w for u=" << u.to_string() << " v=" << v.to_string()
           << " w=" << w.to_string() << " has a negative coefficient in the y_i = e_{i+1} - e_i basis\n";
    }
  }

  Polynomial restriction_by(Method m, const GIndex& u, const GIndex& v) const {
    return m == Method::det ? restrict_det(u, v) : path_sum(u, v);
  }

  int do_restrict() {
    check_dims();
    const Method m = method({Method::det, Method::paths, Method::both}, Method::det);
    const GIndex u = index(s_.u, "u");
    if (s_.v) {
      const GIndex v = index(s_.v, "v");
      if (m != Method::both) {
        const Polynomial p = restriction_by(m, u, v);
        if (s_.format == Format::json) {
          out_ << Json{{"u", u.to_string()}, {"v", v.to_string()}, {"method", method_name(m)},
                       {"restriction", json(p)}}.dump()
               << '\n';
        } else {
          out_ << text(p) << '\n';
        }
        return exit_code::ok;
      }
      const Polynomial a = restriction_by(Method::det, u, v);
      const Polynomial b = restriction_by(Method::paths, u, v);
      const bool match = a == b;
      if (s_.format == Format::json) {
        out_ << Json{{"u", u.to_string()}, {"v", v.to_string()}, {"method", "both"},
                     {"det", json(a)}, {"paths", json(b)}, {"verdict", verdict(match)}}.dump()
             << '\n';
      } else {
        out_ << "det: " << text(a) << "\npaths: " << text(b) << '\n' << verdict(match) << '\n';
      }
      return finish(match);
    }

    check_size();
    auto full = [&](Method which) {
      EqClass a(s_.d, s_.n);
      for (const auto& v : a.indices()) a.set(v, restriction_by(which, u, v));
      return a;
    };
    if (m != Method::both) {
      const EqClass a = full(m);
      if (s_.format == Format::json) {
        out_ << to_json(shown(a)).dump() << '\n';
      } else {
        for (const auto& v : a.indices()) out_ << v.to_string() << ": " << text(a.at(v)) << '\n';
      }
      return exit_code::ok;
    }
    const EqClass a = full(Method::det);
    const EqClass b = full(Method::paths);
    const bool match = a == b;
    if (s_.format == Format::json) {
      out_ << Json{{"u", u.to_string()}, {"det", to_json(shown(a))}, {"paths", to_json(shown(b))},
                   {"verdict", verdict(match)}}.dump()
           << '\n';
    } else {
      for (const auto& v : a.indices()) {
        out_ << v.to_string() << ": " << text(a.at(v));
        if (a.at(v) != b.at(v)) out_ << "  [paths: " << text(b.at(v)) << "]";
        out_ << '\n';
      }
      out_ << verdict(match) << '\n';
    }
    return finish(match);
  }

  std::string grid(const PathTuple& t, const GIndex& v) const {
    std::set<Cell> covered;
    for (const auto& p : t.paths) covered.insert(p.cells.begin(), p.cells.end());
    const int n = static_cast<int>(s_.n);
    std::string out;
    for (int r = 1; r <= n; ++r) {
      if (v.contains(r)) continue;
      std::string row = "    " + std::to_string(r);
      row.resize(8, ' ');
      for (int c : v.entries()) {
        const Cell cell{r, c};
        row += covered.count(cell) ? '#' : (r > c ? 'o' : '.');
      }
      out += row + '\n';
    }
    return out;
  }

  int do_paths() {
    check_dims();
    no_method();
    const GIndex u = index(s_.u, "u");
    const GIndex v = index(s_.v, "v");
    if (!leq(v, u)) {
      throw InvalidArgument("paths: need v <= u, got u=" + u.to_string() + " v=" + v.to_string());
    }
    const auto tuples = enumerate_tuples(u, v);
    Polynomial sum(s_.n);
    std::vector<Polynomial> faces;
    for (const auto& t : tuples) {
      faces.push_back(m_face(t, u, v));
      sum += faces.back();
    }

    if (s_.format == Format::json) {
      Json j{{"u", u.to_string()}, {"v", v.to_string()}, {"tuples", tuples.size()}};
      if (s_.show_tuples) {
        Json list = Json::array();
        for (std::size_t k = 0; k < tuples.size(); ++k) {
          list.push_back({{"paths", to_json(tuples[k])}, {"m_face", json(faces[k])}});
        }
        j["tuple_list"] = std::move(list);
      }
      j["sum"] = json(sum);
      out_ << j.dump() << '\n';
      return exit_code::ok;
    }
    out_ << "tuples: " << tuples.size() << '\n';
    if (s_.show_tuples || s_.show_grid) {
      for (std::size_t k = 0; k < tuples.size(); ++k) {
        out_ << "tuple " << k + 1 << ":";
        for (std::size_t p = 0; p < tuples[k].paths.size(); ++p) {
          if (p > 0) out_ << " |";
          for (const auto& cell : tuples[k].paths[p].cells) out_ << ' ' << to_string(cell);
        }
        out_ << "\n  m_face: " << text(faces[k]) << '\n';
        if (s_.show_grid) out_ << grid(tuples[k], v);
      }
    }
    out_ << "sum: " << text(sum) << '\n';
    return exit_code::ok;
  }

  int do_giambelli() {
    check_dims();
    no_method();
    check_size();
    const GIndex u = index(s_.u, "u");
    const std::size_t d = s_.d;
    std::vector<std::vector<EqClass>> entries(d);
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = 1; j <= d; ++j) entries[i - 1].push_back(giambelli_entry(u, i, j));
    }
    EqClass g(d, s_.n);
    for (const auto& v : g.indices()) {
      PolyMatrix m(d, std::vector<Polynomial>(d, Polynomial(s_.n)));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = entries[i][j].at(v);
      }
      g.set(v, det(m));
    }
    const bool match = g == schubert_class(u);

    std::vector<GIndex> shown_at;
    if (s_.v) {
      shown_at.push_back(index(s_.v, "v"));
    } else {
      shown_at = g.indices();
    }
    if (s_.format == Format::json) {
      Json matrices = Json::object();
      for (const auto& v : shown_at) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < d; ++i) {
          Json row = Json::array();
          for (std::size_t j = 0; j < d; ++j) row.push_back(json(entries[i][j].at(v)));
          rows.push_back(std::move(row));
        }
        matrices[v.to_string()] = std::move(rows);
      }
      out_ << Json{{"u", u.to_string()}, {"matrices", matrices}, {"verdict", verdict(match)}}.dump()
           << '\n';
    } else {
      for (const auto& v : shown_at) {
        out_ << "v=" << v.to_string() << ":\n";
        for (std::size_t i = 0; i < d; ++i) {
          out_ << "  [ ";
          for (std::size_t j = 0; j < d; ++j) {
            if (j > 0) out_ << " | ";
            out_ << text(entries[i][j].at(v));
          }
          out_ << " ]\n";
        }
        out_ << "  det: " << text(g.at(v)) << '\n';
      }
      out_ << "verdict: " << verdict(match) << '\n';
    }
    return finish(match);
  }

  ChainOptions chain_options() const {
    ChainOptions o;
    o.max_n = Monomial::kMaxVars;
    o.max_chains = s_.limit;
    return o;
  }

  Expansion consts_by(Method m, const GIndex& u, const GIndex& v, const SchubertBasis& basis) const {
    Expansion out;
    if (m == Method::solve) {
      out = struct_consts_solve(u, v, basis);
      for (const auto& [w, c] : out) warn_positivity(u, v, w, c);
      return out;
    }
    for (const auto& w : basis.indices()) {
      if (!leq(w, u) || !leq(w, v)) continue;
      Polynomial c = struct_const_chain(u, v, w, basis, chain_options());
      if (!c.is_zero()) out.emplace(w, std::move(c));
    }
    for (const auto& [w, c] : out) warn_positivity(u, v, w, c);
    return out;
  }

  Json json(const Expansion& e) const {
    Json out = Json::array();
    for (const auto& [w, c] : e) out.push_back({{"w", w.to_string()}, {"c", json(c)}});
    return out;
  }

  int do_structconst() {
    check_dims();
    const Method m = method({Method::solve, Method::chain, Method::both}, Method::solve);
    check_size();
    const GIndex u = index(s_.u, "u");
    const GIndex v = index(s_.v, "v");
    const SchubertBasis basis(s_.d, s_.n, s_.jobs);

    if (s_.w) {
      const GIndex w = index(s_.w, "w");
      auto single = [&](Method which) {
        if (which == Method::chain) return struct_const_chain(u, v, w, basis, chain_options());
        const auto e = struct_consts_solve(u, v, basis);
        auto it = e.find(w);
        Polynomial c = it == e.end() ? Polynomial(s_.n) : it->second;
        warn_positivity(u, v, w, c);
        return c;
      };
      Json j{{"u", u.to_string()}, {"v", v.to_string()}, {"w", w.to_string()}};
      if (m != Method::both) {
        const Polynomial c = single(m);
        if (s_.format == Format::json) {
          j["method"] = method_name(m);
          j["c"] = json(c);
          out_ << j.dump() << '\n';
        } else {
          out_ << text(c) << '\n';
        }
        return exit_code::ok;
      }
      const Polynomial a = single(Method::solve);
      const Polynomial b = single(Method::chain);
      const bool match = a == b;
      if (s_.format == Format::json) {
        j["method"] = "both";
        j["solve"] = json(a);
        j["chain"] = json(b);
        j["verdict"] = verdict(match);
        out_ << j.dump() << '\n';
      } else {
        out_ << "solve: " << text(a) << "\nchain: " << text(b) << '\n' << verdict(match) << '\n';
      }
      return finish(match);
    }

    Json j{{"u", u.to_string()}, {"v", v.to_string()}};
    auto print = [&](const Expansion& e) {
      for (const auto& [w, c] : e) out_ << w.to_string() << ": " << text(c) << '\n';
    };
    if (m != Method::both) {
      const Expansion e = consts_by(m, u, v, basis);
      if (s_.format == Format::json) {
        j["method"] = method_name(m);
        j["constants"] = json(e);
        out_ << j.dump() << '\n';
      } else {
        print(e);
      }
      return exit_code::ok;
    }
    const Expansion a = consts_by(Method::solve, u, v, basis);
    const Expansion b = consts_by(Method::chain, u, v, basis);
    const bool match = a == b;
    if (s_.format == Format::json) {
      j["method"] = "both";
      j["solve"] = json(a);
      j["chain"] = json(b);
      j["verdict"] = verdict(match);
      out_ << j.dump() << '\n';
    } else {
      print(a);
      out_ << verdict(match) << '\n';
    }
    return finish(match);
  }

  int do_gkm_check() {
    no_method();
    if (s_.file.empty()) throw InvalidArgument("--file is required");
    std::ifstream in(s_.file);
    if (!in) throw InvalidArgument("cannot open " + s_.file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw InvalidArgument(std::string("bad JSON in ") + s_.file + ": " + e.what());
    }
    if (j.contains("d") && j.contains("n") && j["d"].is_number_unsigned() &&
        j["n"].is_number_unsigned()) {
      JobSpec dims = s_;
      dims.d = j["d"].get<std::size_t>();
      dims.n = j["n"].get<std::size_t>();
      if ((s_.d != 0 && s_.d != dims.d) || (s_.n != 0 && s_.n != dims.n)) {
        throw InvalidArgument("--d/--n disagree with the file");
      }
      Job(dims, out_, err_).check_dims();
      Job(dims, out_, err_).check_size();
    }
    const EqClass a = eqclass_from_json(j);
    const GkmReport report = gkm_check(a);
    if (s_.format == Format::json) {
      Json list = Json::array();
      for (const auto& x : report.violations) {
        list.push_back({{"w", x.w.to_string()}, {"x", x.x.to_string()}, {"i", x.i}, {"j", x.j}});
      }
      out_ << Json{{"ok", report.ok}, {"violations", list}}.dump() << '\n';
    } else if (report.ok) {
      out_ << "pass\n";
    } else {
      out_ << "fail: " << report.violations.size() << " violation"
           << (report.violations.size() == 1 ? "" : "s") << '\n';
      for (const auto& x : report.violations) {
        out_ << "  w=" << x.w.to_string() << " x=" << x.x.to_string() << ": e" << x.j << " - e"
             << x.i << " does not divide the difference\n";
      }
    }
    return exit_code::ok;
  }

  int do_table() {
    check_dims();
    const Method m = method({Method::solve, Method::chain}, Method::solve);
    check_size();
    const auto table = struct_const_table(
        s_.d, s_.n, m == Method::chain ? StructConstMethod::chain : StructConstMethod::solve, s_.jobs,
        chain_options());
    for (const auto& e : table) warn_positivity(e.u, e.v, e.w, e.c);
    if (s_.format == Format::json) {
      auto shown_table = table;
      for (auto& e : shown_table) e.c = shown(e.c);
      out_ << to_json(shown_table).dump() << '\n';
    } else {
      for (const auto& e : table) {
        out_ << e.u.to_string() << " * " << e.v.to_string() << " -> " << e.w.to_string() << ": "
             << text(e.c) << '\n';
      }
    }
    return exit_code::ok;
  }

  const JobSpec& s_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    return Job(spec, out, err).run();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_argument;
  } catch (const Error& e) {
    err << "internal failure: " << e.what() << '\n';
    return exit_code::internal_failure;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << '\n';
    return exit_code::internal_failure;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Schubert calculus on Gr(d,n)", "eqschubert"};
  app.require_subcommand(1);
  JobSpec spec;
  std::string method, format = "text";

  const std::map<std::string, Method> methods{{"det", Method::det},
                                               {"paths", Method::paths},
                                               {"chain", Method::chain},
                                               {"solve", Method::solve},
                                               {"both", Method::both}};

  auto common = [&](CLI::App* sub, bool dims_required) {
    auto* d = sub->add_option("--d", spec.d, "Dimension of the subspaces");
    auto* n = sub->add_option("--n", spec.n, "Dimension of the ambient space");
    if (dims_required) {
      d->required();
      n->required();
    }
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--specialize-zero", spec.specialize_zero, "Set every e_i to 0 in the output");
    sub->add_option("--limit", spec.limit, "Cap on C(n,d) and on the number of chains");
    sub->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto with_method = [&](CLI::App* sub) {
    sub->add_option("--method", method, "det, paths, chain, solve or both")
        ->check(CLI::IsMember({"det", "paths", "chain", "solve", "both"}));
  };

  auto* restrict = app.add_subcommand("restrict", "Restriction of [X(u)] to the fixed point v");
  common(restrict, true);
  with_method(restrict);
  restrict->add_option("--u", spec.u)->required();
  restrict->add_option("--v", spec.v, "Omit to print every fixed point");

  auto* paths = app.add_subcommand("paths", "Lattice-path tuples for (u, v)");
  common(paths, true);
  paths->add_option("--u", spec.u)->required();
  paths->add_option("--v", spec.v)->required();
  paths->add_flag("--show-tuples", spec.show_tuples, "Print every tuple and its m_face");
  paths->add_flag("--grid", spec.show_grid, "Draw every tuple on the grid of roots");

  auto* giambelli = app.add_subcommand("giambelli", "Giambelli entry matrix and verdict");
  common(giambelli, true);
  giambelli->add_option("--u", spec.u)->required();
  giambelli->add_option("--v", spec.v, "Only print the matrix at this fixed point");

  auto* structconst = app.add_subcommand("structconst", "Structure constants c_uv^w");
  common(structconst, true);
  with_method(structconst);
  structconst->add_option("--u", spec.u)->required();
  structconst->add_option("--v", spec.v)->required();
  structconst->add_option("--w", spec.w, "Omit to print every nonzero c_uv^w");

  auto* gkm = app.add_subcommand("gkm-check", "Check the GKM edge condition on a class file");
  common(gkm, false);
  gkm->add_option("--file", spec.file, "Class JSON file")->required();

  auto* table = app.add_subcommand("table", "Every nonzero structure constant of Gr(d,n)");
  common(table, true);
  with_method(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::invalid_argument;
  }

  if (restrict->parsed()) spec.command = Command::restrict;
  if (paths->parsed()) spec.command = Command::paths;
  if (giambelli->parsed()) spec.command = Command::giambelli;
  if (structconst->parsed()) spec.command = Command::structconst;
  if (gkm->parsed()) spec.command = Command::gkm_check;
  if (table->parsed()) spec.command = Command::table;
  if (!method.empty()) spec.method = methods.at(method);
  spec.format = format == "json" ? Format::json : Format::text;
  return run(spec, out, err);
}

}  // namespace eqschubert
