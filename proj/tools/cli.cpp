#include "cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "latticeforge/algebra.hpp"
#include "latticeforge/congruence.hpp"
#include "latticeforge/duality.hpp"
#include "latticeforge/hom.hpp"
#include "latticeforge/io.hpp"
#include "latticeforge/relation.hpp"
#include "latticeforge/reproduce.hpp"

namespace latticeforge::cli {

namespace {

constexpr std::size_t kSubGuard = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t n = 1;
  std::size_t k = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  bool have_i = false, have_j = false;
  std::size_t gens = 1;
  std::string route = "single";
  std::string of = "J", from = "J", to = "J";
  std::string only;
  std::string out_file;
  bool json = false, dot = false, count = false, shape = false, force = false;
  unsigned threads = 1;
};

// "J" -> J_n, "M0" -> M_0, "M<k>" -> M_k (all over V_n).
FiniteAlgebra parse_algebra(const std::string& sel, std::size_t n) {
  if (sel == "J" || sel == "j") return make_jn(n);
  if (sel.size() >= 2 && (sel[0] == 'M' || sel[0] == 'm')) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(sel.substr(1), &used);
      if (used != sel.size() - 1) throw std::invalid_argument(sel);
    } catch (const std::exception&) {
      throw UsageError("bad algebra '" + sel + "' (expected J, M0 or M<k>)");
    }
    if (k == 0) return n == 0 ? make_jn(0) : make_m0(n);
    if (k > n) throw UsageError("M" + std::to_string(k) + " needs k <= n");
    return make_mk(n, k);
  }
  throw UsageError("bad algebra '" + sel + "' (expected J, M0 or M<k>)");
}

std::string alg_name(const FiniteAlgebra& a, const std::string& sel) {
  if (sel == "J" || sel == "j") return "J_" + std::to_string(a.n());
  std::string s = sel;
  s[0] = 'M';
  return s.substr(0, 1) + "_" + s.substr(1);
}

class Sink {
 public:
  Sink(const Options& o, std::ostream& out) : file_(o.out_file), out_(out) {}
  // Artifacts (JSON/DOT or the default text) go to --out when given.
  void emit(const std::string& text) {
    if (file_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(file_);
    if (!f) throw std::runtime_error("cannot write " + file_);
    f << text;
  }

 private:
  std::string file_;
  std::ostream& out_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string relation_text(const BinRel& r, const std::vector<std::pair<std::string, BinRel>>& names) {
  if (auto name = lookup_name(names, r)) return *name;
  std::string s = "{";
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    if (!first) s += ",";
    first = false;
    s += pair_name(r, {x, y});
  }
  return s + "}";
}

std::vector<std::pair<std::string, BinRel>> names_for(const Options& o) {
  if ((o.from == "J" || o.from == "j") && (o.to == "J" || o.to == "j")) return named_relations_jn(o.n);
  return {};
}

// ---- verbs ----

int cmd_algebra(const Options& o, std::ostream&, Sink& sink) {
  auto a = parse_algebra(o.of, o.n);
  auto problem = check_bilattice(a);
  if (o.json) {
    sink.emit(dump(algebra_to_json(a)));
  } else {
    std::ostringstream s;
    s << alg_name(a, o.of) << ": " << a.size() << " elements\n";
    s << "elements:";
    for (std::size_t x = 0; x < a.size(); ++x) s << ' ' << a.element_name(static_cast<Element>(x));
    s << "\nbilattice: " << (problem.empty() ? "ok" : problem) << "\n";
    s << "interlaced: " << (is_interlaced(a) ? "yes" : "no") << "\n";
    sink.emit(s.str());
  }
  return problem.empty() ? 0 : 1;
}

SubLattice sub_for(const Options& o) {
  if (o.n > kSubGuard && !o.force)
    throw UsageError("refusing Sub for n > " + std::to_string(kSubGuard) + " without --force");
  auto a = parse_algebra(o.from, o.n);
  auto b = parse_algebra(o.to, o.n);
  return enumerate_sub(a, b, {default_max_bits(), o.threads});
}

int cmd_sub(const Options& o, std::ostream&, Sink& sink) {
  auto lat = sub_for(o);
  auto names = names_for(o);
  if (o.count) {
    sink.emit(std::to_string(lat.size()) + "\n");
  } else if (o.dot) {
    sink.emit(sub_lattice_dot(lat, names));
  } else if (o.json) {
    Json j;
    j["size"] = lat.size();
    Json members = Json::array();
    for (std::size_t m = 0; m < lat.size(); ++m) {
      Json r = relation_to_json(lat[m]);
      if (auto name = lookup_name(names, lat[m])) r["name"] = *name;
      r["meet_irreducible"] = lat.upper_covers(m).size() == 1;
      r["upper_covers"] = lat.upper_covers(m);
      members.push_back(std::move(r));
    }
    j["members"] = std::move(members);
    sink.emit(dump(j));
  } else {
    std::ostringstream s;
    s << "|Sub(" << alg_name(lat.dom(), o.from) << " x " << alg_name(lat.cod(), o.to)
      << ")| = " << lat.size() << "\n";
    for (std::size_t m = 0; m < lat.size(); ++m) {
      s << std::setw(4) << m << "  " << std::setw(3) << lat[m].size();
      if (auto name = lookup_name(names, lat[m])) s << "  " << *name;
      if (lat.upper_covers(m).size() == 1) s << "  (mi)";
      s << "\n";
    }
    sink.emit(s.str());
  }
  return 0;
}

int cmd_mi(const Options& o, std::ostream&, Sink& sink) {
  auto lat = sub_for(o);
  auto names = names_for(o);
  auto mi = meet_irreducibles(lat);
  if (o.count) {
    sink.emit(std::to_string(mi.size()) + "\n");
  } else if (o.json) {
    Json arr = Json::array();
    for (const auto& r : mi) {
      Json j = relation_to_json(r);
      if (auto name = lookup_name(names, r)) j["name"] = *name;
      arr.push_back(std::move(j));
    }
    sink.emit(dump(arr));
  } else {
    std::ostringstream s;
    for (const auto& r : mi) s << r.size() << "  " << relation_text(r, names) << "\n";
    sink.emit(s.str());
  }
  return 0;
}

int cmd_con(const Options& o, std::ostream&, Sink& sink) {
  auto a = parse_algebra(o.of, o.n);
  auto con = con_lattice(a);
  if (o.shape) {
    if (o.of != "J" && o.of != "j") throw UsageError("--shape applies to J_n only");
    bool ok = poset_isomorphism(poset_of(con), boolean_plus_top(o.n)).has_value();
    sink.emit("2^" + std::to_string(o.n) + " (+) 1: " + (ok ? "ok" : "FAIL") + "\n");
    return ok ? 0 : 1;
  }
  if (o.dot) {
    sink.emit(con_lattice_dot(con, a));
    return 0;
  }
  if (o.json) {
    Json j;
    j["algebra"] = a.label();
    Json members = Json::array();
    for (std::size_t c = 0; c < con.size(); ++c) {
      Json m;
      m["blocks"] = con[c].blocks();
      m["upper_covers"] = con.upper_covers(c);
      members.push_back(std::move(m));
    }
    j["congruences"] = std::move(members);
    j["subdirectly_irreducible"] = is_subdirectly_irreducible(a);
    sink.emit(dump(j));
    return 0;
  }
  std::ostringstream s;
  s << "|Con(" << alg_name(a, o.of) << ")| = " << con.size() << "\n";
  for (std::size_t c = 0; c < con.size(); ++c) {
    s << std::setw(3) << c << "  ";
    for (const auto& block : con[c].blocks()) {
      s << '{';
      for (std::size_t b = 0; b < block.size(); ++b) s << (b ? "," : "") << a.element_name(block[b]);
      s << '}';
    }
    s << "\n";
  }
  s << "subdirectly irreducible: " << (is_subdirectly_irreducible(a) ? "yes" : "no") << "\n";
  sink.emit(s.str());
  return 0;
}

int cmd_homs(const Options& o, std::ostream&, Sink& sink) {
  auto a = parse_algebra(o.from, o.n);
  auto b = parse_algebra(o.to, o.n);
  auto homs = enumerate_homs(a, b);
  if (o.count) {
    sink.emit(std::to_string(homs.size()) + "\n");
  } else if (o.json) {
    Json arr = Json::array();
    for (const auto& h : homs) arr.push_back(hom_to_json(h));
    sink.emit(dump(arr));
  } else {
    std::ostringstream s;
    s << "|hom(" << alg_name(a, o.from) << ", " << alg_name(b, o.to) << ")| = " << homs.size() << "\n";
    for (const auto& h : homs) {
      for (std::size_t x = 0; x < a.size(); ++x)
        s << (x ? " " : "") << a.element_name(static_cast<Element>(x)) << "->"
          << b.element_name(h(static_cast<Element>(x)));
      s << "\n";
    }
    sink.emit(s.str());
  }
  return 0;
}

MultiAlterEgo ego_for(const Options& o) {
  if (o.route == "single") return single_alter_ego(o.n).as_multi();
  if (o.route == "multi") {
    if (o.n == 0) throw UsageError("the multi-sorted route needs n >= 1");
    return multi_alter_ego(o.n);
  }
  throw UsageError("--route must be single or multi here");
}

// --of names a J_n relation (S_n,i, R_n,i,j, ...) or an algebra selector.
FiniteAlgebra dual_target(const Options& o) {
  for (const auto& [name, r] : named_relations_jn(o.n))
    if (name == o.of) return algebra_of(r).algebra;
  return parse_algebra(o.of, o.n);
}

int cmd_dual(const Options& o, std::ostream&, Sink& sink) {
  auto ego = ego_for(o);
  auto a = dual_target(o);
  auto rep = duality_report(a, ego);
  if (o.json) {
    Json j;
    j["algebra"] = o.of;
    j["route"] = o.route;
    j["algebra_size"] = rep.algebra_size;
    j["double_dual_size"] = rep.double_dual_size;
    j["points_per_sort"] = rep.points_per_sort;
    j["evaluations_preserve"] = rep.evaluations_preserve;
    j["injective"] = rep.injective;
    j["surjective"] = rep.surjective;
    j["holds"] = rep.holds();
    sink.emit(dump(j));
  } else {
    std::ostringstream s;
    s << "points per sort:";
    for (auto p : rep.points_per_sort) s << ' ' << p;
    s << "\n|A| = " << rep.algebra_size << ", |ED(A)| = " << rep.double_dual_size << "\n";
    s << "duality: " << (rep.holds() ? "holds" : "fails") << "\n";
    sink.emit(s.str());
  }
  return rep.holds() ? 0 : 1;
}

int cmd_free(const Options& o, std::ostream&, Sink& sink) {
  if (o.route != "single" && o.route != "multi" && o.route != "both")
    throw UsageError("--route must be single, multi or both");
  if (o.route != "single" && o.n == 0) throw UsageError("the multi-sorted route needs n >= 1");
  std::optional<FiniteAlgebra> single, multi;
  if (o.route != "multi") single = free_algebra(single_alter_ego(o.n), o.gens);
  if (o.route != "single") multi = free_algebra(multi_alter_ego(o.n), o.gens);
  bool agree = true;
  if (single && multi)
    agree = single->size() == multi->size() && is_isomorphic(*single, *multi).has_value();
  if (o.json) {
    Json j;
    j["n"] = o.n;
    j["gens"] = o.gens;
    if (single) j["single"] = single->size();
    if (multi) j["multi"] = multi->size();
    if (single && multi) j["agree"] = agree;
    sink.emit(dump(j));
  } else {
    std::string s;
    if (single) s += "single=" + std::to_string(single->size());
    if (multi) s += std::string(s.empty() ? "" : " ") + "multi=" + std::to_string(multi->size());
    if (single && multi) s += std::string(" agree=") + (agree ? "true" : "false");
    sink.emit(s + "\n");
  }
  return agree ? 0 : 1;
}

int cmd_entail(const Options& o, std::ostream&, Sink& sink) {
  if (!o.have_i) throw UsageError("entail needs --i (and --j for R_n,i,j)");
  BinRel target = o.have_j ? make_rnij(o.n, o.i, o.j) : make_sni(o.n, o.i);
  std::string target_name = "S_" + std::to_string(o.n) + "," + std::to_string(o.i);
  if (o.have_j) target_name = "R_" + std::to_string(o.n) + "," + std::to_string(o.i) + "," + std::to_string(o.j);
  std::vector<BinRel> rest;
  for (const auto& [name, r] : single_alter_ego(o.n).named_relations)
    if (!(r == target)) rest.push_back(BinRel(target.dom(), target.cod(), r.bits()));
  auto test = algebra_of(target).algebra;
  auto witness = entails(rest, target, test);
  if (o.json) {
    Json j;
    j["target"] = target_name;
    j["entailed"] = !witness.has_value();
    j["witness"] = witness ? struct_map_to_json(*witness) : Json(nullptr);
    sink.emit(dump(j));
  } else {
    std::string s = target_name + ": ";
    if (witness) {
      s += "not entailed; witness on D(algebra of " + target_name + "):";
      for (auto v : witness->values[0]) s += " " + target.dom().element_name(v);
    } else {
      s += "entailed by the rest of R_(" + std::to_string(o.n) + ")";
    }
    sink.emit(s + "\n");
  }
  return 0;
}

int cmd_optimal(const Options& o, std::ostream&, Sink& sink) {
  std::vector<OptimalityRecord> recs;
  if (o.route == "single") {
    recs = single_optimality_suite(o.n);
  } else if (o.route == "multi") {
    if (o.n == 0) throw UsageError("the multi-sorted route needs n >= 1");
    recs = multi_optimality_suite(o.n);
  } else {
    throw UsageError("--route must be single or multi here");
  }
  bool ok = true;
  for (const auto& r : recs) ok = ok && r.witness_verified && r.search_agrees;
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : recs) arr.push_back(optimality_to_json(r));
    sink.emit(dump(arr));
  } else {
    std::ostringstream s;
    for (const auto& r : recs) {
      s << std::left << std::setw(10) << r.item << "  " << r.verdict() << "  (" << r.test_algebra;
      if (!r.search_agrees) s << "; search disagrees";
      if (!r.note.empty()) s << "; " << r.note;
      s << ")\n";
    }
    sink.emit(s.str());
  }
  return ok ? 0 : 1;
}

int cmd_reproduce(const Options& o, std::ostream& out, Sink& sink) {
  if (!o.only.empty()) {
    auto groups = criterion_groups();
    if (std::find(groups.begin(), groups.end(), o.only) == groups.end())
      throw UsageError("unknown group '" + o.only + "'");
  }
  std::ostringstream text;
  Json arr = Json::array();
  auto results = run_criteria(o.only, o.threads, [&](const CriterionResult& r) {
    if (o.json) return;
    std::ostringstream line;
    line << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left
         << std::setw(12) << r.group << "  " << r.title << "  [" << r.detail << "]  "
         << std::fixed << std::setprecision(1) << r.seconds << "s\n";
    text << line.str();
    if (o.out_file.empty()) out << line.str() << std::flush;
  });
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    Json j;
    j["id"] = r.id;
    j["group"] = r.group;
    j["title"] = r.title;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    // timings vary between runs; kept out of the record
    arr.push_back(std::move(j));
  }
  if (o.json) {
    sink.emit(dump(arr));
  } else {
    std::string summary = std::to_string(std::count_if(results.begin(), results.end(),
                                                       [](const auto& r) { return r.pass; })) +
                          "/" + std::to_string(results.size()) + " criteria passed\n";
    text << summary;
    if (o.out_file.empty()) out << summary;
    else sink.emit(text.str());
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"latticeforge: prioritised default bilattices, their relations and dualities",
               "latticeforge"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "index of J_n / V_n")->check(CLI::Range(0, 64)); };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", o.out_file, "write the artifact to FILE");
    c->add_flag("--json", o.json, "machine-readable output");
  };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  };
  auto add_pair = [&](CLI::App* c) {
    c->add_option("--from", o.from, "J, M0 or M<k>");
    c->add_option("--to", o.to, "J, M0 or M<k>");
  };

  auto* algebra = app.add_subcommand("algebra", "print an algebra and check the bilattice laws");
  add_n(algebra);
  algebra->add_option("--of", o.of, "J, M0 or M<k>");
  algebra->add_option("--k", o.k, "shorthand for --of M<k>");
  add_out(algebra);

  auto* sub = app.add_subcommand("sub", "enumerate Sub(A x B)");
  add_n(sub);
  add_pair(sub);
  sub->add_flag("--count", o.count, "print only the number of members");
  sub->add_flag("--dot", o.dot, "Hasse diagram in DOT");
  sub->add_flag("--force", o.force, "allow n > 6");
  add_threads(sub);
  add_out(sub);

  auto* mi = app.add_subcommand("mi", "meet-irreducibles of Sub(A x B)");
  add_n(mi);
  add_pair(mi);
  mi->add_flag("--count", o.count, "print only the number");
  mi->add_flag("--force", o.force, "allow n > 6");
  add_threads(mi);
  add_out(mi);

  auto* con = app.add_subcommand("con", "congruence lattice");
  add_n(con);
  con->add_option("--of", o.of, "J, M0 or M<k>");
  con->add_option("--k", o.k, "shorthand for --of M<k>");
  con->add_flag("--shape", o.shape, "check Con(J_n) against 2^n (+) 1");
  con->add_flag("--dot", o.dot, "Hasse diagram in DOT");
  add_out(con);

  auto* homs = app.add_subcommand("homs", "homomorphisms A -> B");
  add_n(homs);
  add_pair(homs);
  homs->add_flag("--count", o.count, "print only the number");
  add_out(homs);

  auto* dual = app.add_subcommand("dual", "check that e_A is an isomorphism");
  add_n(dual);
  dual->add_option("--of", o.of, "J, M0, M<k> or a named relation such as S_2,1");
  dual->add_option("--route", o.route, "single or multi");
  add_out(dual);

  auto* free = app.add_subcommand("free", "free algebra E(M^s)");
  add_n(free);
  free->add_option("--gens", o.gens, "number of free generators")->check(CLI::Range(0, 8));
  free->add_option("--route", o.route, "single, multi or both");
  add_out(free);

  auto* entail = app.add_subcommand("entail", "is S_n,i or R_n,i,j entailed by the rest of R_(n)");
  add_n(entail);
  entail->add_option("--i", o.i, "first index")->each([&](const std::string&) { o.have_i = true; });
  entail->add_option("--j", o.j, "second index (selects R_n,i,j)")->each([&](const std::string&) { o.have_j = true; });
  add_out(entail);

  auto* optimal = app.add_subcommand("optimal", "optimality witnesses for each item of the alter ego");
  add_n(optimal);
  optimal->add_option("--route", o.route, "single or multi");
  add_out(optimal);

  auto* reproduce = app.add_subcommand("reproduce", "run the acceptance criteria");
  reproduce->add_option("--only", o.only, "run one group of criteria");
  add_threads(reproduce);
  add_out(reproduce);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (o.k != 0) o.of = "M" + std::to_string(o.k);

  Sink sink(o, out);
  try {
    auto* chosen = app.get_subcommands().front();
    const std::string verb = chosen->get_name();
    if (verb == "algebra") return cmd_algebra(o, out, sink);
    if (verb == "sub") return cmd_sub(o, out, sink);
    if (verb == "mi") return cmd_mi(o, out, sink);
    if (verb == "con") return cmd_con(o, out, sink);
    if (verb == "homs") return cmd_homs(o, out, sink);
    if (verb == "dual") return cmd_dual(o, out, sink);
    if (verb == "free") return cmd_free(o, out, sink);
    if (verb == "entail") return cmd_entail(o, out, sink);
    if (verb == "optimal") return cmd_optimal(o, out, sink);
    if (verb == "reproduce") return cmd_reproduce(o, out, sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    // bad indices and the like from the library
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace latticeforge::cli
