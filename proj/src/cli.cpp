#include "hessgkm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "hessgkm/cache.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/theorems.hpp"

namespace hessgkm {

namespace {

using nlohmann::json;

std::vector<int> ints(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x + 1);
  return out;
}

std::vector<int> zero_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x - 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json root_list(const RootSystem& rs, const std::vector<int>& indices) {
  json out = json::array();
  for (int r : indices) {
    const IntVector& v = rs.positive_roots[std::size_t(r)];
    out.push_back(std::vector<std::int64_t>(v.data(), v.data() + v.size()));
  }
  return out;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

std::vector<int> all_elements(const WeylGroup& group) {
  std::vector<int> all(std::size_t(group.size()));
  for (int i = 0; i < group.size(); ++i) all[std::size_t(i)] = i;
  return all;
}

json graph_summary(GkmCohomology& h) {
  const RootSystem& rs = h.roots();
  json j;
  j["vertices"] = h.num_vertices();
  j["constraints"] = h.graph().edges.size();
  j["components"] = h.graph().connected_components();
  j["dimension"] = h.top_degree();
  j["betti"] = h.betti();
  j["betti_oracle"] = betti_oracle_cells(rs, h.group(), h.graph());
  return j;
}

struct Runner {
  const CaseSpec& spec;
  std::ostream& log;
  Workspace& ws;
  HessIdeal ideal;
  std::vector<int> xi;
  bool has_xi = false;
  bool want_full = true;
  bool want_partial = true;
  bool failed = false;

  std::vector<int> dot_group() {
    return has_xi ? ws.group().generated_by(xi) : all_elements(ws.group());
  }

  json betti_task() {
    json j;
    bool ok = true;
    auto one = [&](GkmCohomology& h) {
      json s = graph_summary(h);
      const bool match = s["betti"] == s["betti_oracle"] && sum(h.betti()) == h.num_vertices();
      const bool connected = h.graph().connected_components() == 1;
      auto b = h.betti();
      auto r = b;
      std::reverse(r.begin(), r.end());
      s["palindromic"] = b == r;
      s["oracle_match"] = match;
      if (!match || (connected && b != r)) ok = false;
      log << "betti " << to_string(h.graph().mode) << ":";
      for (int x : b) log << ' ' << x;
      log << '\n';
      return s;
    };
    if (want_full) j["full"] = one(ws.full(ideal));
    if (want_partial) j["partial"] = one(ws.partial(ideal));
    j["fiber"] = ws.levi(ideal.theta).betti();
    j["status"] = ok ? "pass" : "fail";
    if (!ok) failed = true;
    return j;
  }

  json equivariant_task() {
    json j;
    auto one = [&](GkmCohomology& h) {
      json s;
      std::vector<Index> dims, gens;
      for (int k = 0; k <= h.top_degree(); ++k) {
        dims.push_back(h.equivariant_dim(k));
        gens.push_back(Index(h.generators(k).size()));
      }
      s["solution_dims"] = ints(dims);
      s["generators"] = ints(gens);
      // Chern class of the sum of fundamental weights outside Theta.
      const RootSystem& rs = h.roots();
      QVector chi = QVector::Zero(rs.rank);
      for (int i = 0; i < rs.rank; ++i)
        if (h.graph().mode == GkmMode::Full || !ws.parabolic(ideal.theta).in_theta(i))
          chi += rs.fundamental_weights[std::size_t(i)];
      const PiecewisePolynomial c = chern_class(rs, h.group(), h.graph(), chi);
      s["chern_class_is_class"] = satisfies_constraints(h.graph(), c);
      if (spec.verbose) {
        json values = json::array();
        for (const auto& p : c.values) values.push_back(p.str());
        s["chern_class"] = values;
      }
      return s;
    };
    bool ok = true;
    if (want_full) {
      j["full"] = one(ws.full(ideal));
      ok = ok && j["full"]["chern_class_is_class"].get<bool>();
    }
    if (want_partial) {
      j["partial"] = one(ws.partial(ideal));
      ok = ok && j["partial"]["chern_class_is_class"].get<bool>();
    }
    j["status"] = ok ? "pass" : "fail";
    if (!ok) failed = true;
    return j;
  }

  std::vector<Index> star_dims() {
    return invariant_dims(star_rep(ws.full(ideal), ws.parabolic(ideal.theta).w_theta));
  }

  std::vector<Index> dot_dims(GkmCohomology& h) { return invariant_dims(dot_rep(h, dot_group())); }

  json actions_task() {
    json j;
    const WeylGroup& group = ws.group();
    const auto& par = ws.parabolic(ideal.theta);
    const auto dots = dot_group();
    bool ok = true;
    if (want_full) {
      GkmCohomology& full = ws.full(ideal);
      const GradedRepresentation star = star_rep(full, par.w_theta);
      const GradedRepresentation dot = dot_rep(full, dots);
      bool commute = true;
      for (int k = 0; k <= full.top_degree(); ++k)
        for (int u : star.group)
          for (int w : dot.group)
            if (star.matrix(k, u) * dot.matrix(k, w) != dot.matrix(k, w) * star.matrix(k, u)) commute = false;
      const bool mult = is_multiplicative(star, group) && is_multiplicative(dot, group);
      json f;
      f["star_invariant_dims"] = ints(invariant_dims(star));
      f["dot_invariant_dims"] = ints(invariant_dims(dot));
      f["dot_character"] = character(dot, group).to_json();
      f["star_character"] = character(star, group).to_json();
      f["commute"] = commute;
      f["multiplicative"] = mult;
      if (spec.verbose) {
        f["star_matrices"] = star.to_json();
        f["dot_matrices"] = dot.to_json();
      }
      ok = ok && commute && mult;
      j["full"] = f;
    }
    if (want_partial) {
      GkmCohomology& part = ws.partial(ideal);
      const GradedRepresentation dot = dot_rep(part, dots);
      json p;
      p["dot_invariant_dims"] = ints(invariant_dims(dot));
      p["dot_character"] = character(dot, group).to_json();
      p["multiplicative"] = is_multiplicative(dot, group);
      if (spec.verbose) p["dot_matrices"] = dot.to_json();
      ok = ok && p["multiplicative"].get<bool>();
      j["partial"] = p;
    }
    j["dot_group"] = has_xi ? json(one_based(xi)) : json("all");
    j["status"] = ok ? "pass" : "fail";
    if (!ok) failed = true;
    return j;
  }

  json verification(const VerificationReport& r) {
    json j = r.to_json(ws.roots());
    j.erase("case");
    if (!r.passed()) failed = true;
    return j;
  }

  json regular_task(RegularCohomology& reg) {
    json j = reg.to_json();
    j["xi"] = one_based(xi);
    j["note"] = "right-hand side only: W_Xi dot invariants of the regular semisimple ring";
    const bool peterson_case = ideal.theta.empty() && int(xi.size()) == ws.roots().rank &&
                               ideal.roots == simple_ideal(ws.roots(), ws.parabolic({})).roots;
    if (peterson_case) {
      const auto pattern = peterson_pattern(ws.roots().rank);
      const bool ok = pattern == reg.dims;
      j["peterson_pattern"] = ints(pattern);
      j["status"] = ok ? "pass" : "fail";
      if (!ok) failed = true;
    } else {
      j["status"] = "pass";
    }
    return j;
  }
};

template <class F>
json timed(json& timings, const std::string& name, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  json out = f();
  timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

const std::vector<std::string>& known_tasks() {
  static const std::vector<std::string> tasks{"betti",      "equivariant", "actions",  "verify-main", "verify-lh",
                                              "verify-wmod", "regular",     "pdhlhr",   "enumerate"};
  return tasks;
}

void set_ideal(CaseSpec& spec, const std::string& text) {
  if (text == "full" || text == "simple" || text == "minimal") {
    spec.ideal = text;
    spec.ideal_roots.clear();
    return;
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw InvalidSpec("ideal: expected full, simple, minimal or a list of coefficient vectors, got '" + text + "'");
  }
  if (!j.is_array()) throw InvalidSpec("ideal: expected a list of coefficient vectors");
  spec.ideal.clear();
  spec.ideal_roots.clear();
  for (const auto& r : j) {
    if (!r.is_array()) throw InvalidSpec("ideal: each root must be a list of integers");
    std::vector<std::int64_t> v;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw InvalidSpec("ideal: each root must be a list of integers");
      v.push_back(x.get<std::int64_t>());
    }
    spec.ideal_roots.push_back(std::move(v));
  }
}

std::vector<int> parse_index_list(const std::string& text, int rank, const std::string& field) {
  std::vector<int> out;
  if (text == "all") {
    for (int i = 1; i <= rank; ++i) out.push_back(i);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidSpec(field + ": '" + item + "' is not an index");
    }
    if (used != item.size()) throw InvalidSpec(field + ": '" + item + "' is not an index");
    if (v < 1 || v > rank)
      throw InvalidSpec(field + ": index " + std::to_string(v) + " outside 1.." + std::to_string(rank));
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json to_json(const CaseSpec& spec) {
  json j;
  j["type"] = spec.type;
  j["rank"] = spec.rank;
  j["theta"] = spec.theta;
  if (spec.ideal.empty())
    j["ideal"] = spec.ideal_roots;
  else
    j["ideal"] = spec.ideal;
  if (spec.xi) j["xi"] = *spec.xi;
  j["mode"] = spec.mode;
  j["tasks"] = spec.tasks;
  j["seed"] = spec.seed;
  return j;
}

CaseSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("config: expected a JSON object");
  CaseSpec spec;
  auto field = [&](const char* name, auto&& read) {
    if (!j.contains(name)) return;
    try {
      read(j.at(name));
    } catch (const json::exception& e) {
      throw InvalidSpec(std::string(name) + ": " + e.what());
    }
  };
  field("type", [&](const json& v) { spec.type = v.get<std::string>(); });
  field("rank", [&](const json& v) { spec.rank = v.get<int>(); });
  field("theta", [&](const json& v) { spec.theta = v.get<std::vector<int>>(); });
  field("ideal", [&](const json& v) { set_ideal(spec, v.is_string() ? v.get<std::string>() : v.dump()); });
  field("xi", [&](const json& v) {
    spec.xi = v.is_string() ? parse_index_list(v.get<std::string>(), spec.rank, "xi") : v.get<std::vector<int>>();
  });
  field("mode", [&](const json& v) { spec.mode = v.get<std::string>(); });
  field("tasks", [&](const json& v) { spec.tasks = v.get<std::vector<std::string>>(); });
  field("seed", [&](const json& v) { spec.seed = v.get<std::uint64_t>(); });
  field("cache_dir", [&](const json& v) { spec.cache_dir = v.get<std::string>(); });
  field("no_cache", [&](const json& v) { spec.no_cache = v.get<bool>(); });
  field("verbose", [&](const json& v) { spec.verbose = v.get<bool>(); });
  field("out", [&](const json& v) { spec.out_dir = v.get<std::string>(); });
  return spec;
}

RunResult run(const CaseSpec& spec, std::ostream& log) {
  if (spec.type.size() != 1) throw InvalidSpec("type: '" + spec.type + "' is not a Lie type letter");
  LieType type;
  try {
    type = lie_type_from_char(spec.type[0]);
  } catch (const UnsupportedType&) {
    throw InvalidSpec("type: unsupported Lie type '" + spec.type + "'");
  }
  try {
    build_root_system(type, spec.rank);
  } catch (const UnsupportedType&) {
    throw InvalidSpec("rank: " + spec.type + std::to_string(spec.rank) + " is not supported");
  }
  for (int t : spec.theta)
    if (t < 1 || t > spec.rank) throw InvalidSpec("theta: index " + std::to_string(t) + " out of range");
  if (spec.xi)
    for (int t : *spec.xi)
      if (t < 1 || t > spec.rank) throw InvalidSpec("xi: index " + std::to_string(t) + " out of range");
  if (spec.mode != "full" && spec.mode != "partial" && spec.mode != "both")
    throw InvalidSpec("mode: expected full, partial or both, got '" + spec.mode + "'");
  if (spec.tasks.empty()) throw InvalidSpec("tasks: no task requested");
  for (const auto& t : spec.tasks)
    if (std::find(known_tasks().begin(), known_tasks().end(), t) == known_tasks().end())
      throw InvalidSpec("tasks: unknown task '" + t + "'");

  std::unique_ptr<FileCache> cache;
  if (!spec.no_cache)
    cache = std::make_unique<FileCache>(spec.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(spec.cache_dir),
                                        &log);
  Workspace ws(type, spec.rank, cache.get());
  const std::vector<int> theta = zero_based(spec.theta);
  const ParabolicData& par = ws.parabolic(theta);

  HessIdeal ideal;
  try {
    if (spec.ideal == "full")
      ideal = full_ideal(ws.roots(), par);
    else if (spec.ideal == "simple")
      ideal = simple_ideal(ws.roots(), par);
    else if (spec.ideal == "minimal")
      ideal = minimal_ideal(ws.roots(), par);
    else {
      std::vector<IntVector> roots;
      for (const auto& r : spec.ideal_roots) {
        IntVector v(Index(r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) v(Index(i)) = r[i];
        roots.push_back(v);
      }
      ideal = ws.ideal(theta, root_indices(ws.roots(), roots));
    }
  } catch (const InvalidRoot& e) {
    throw InvalidSpec(std::string("ideal: ") + e.what());
  } catch (const InvalidIdeal& e) {
    throw InvalidSpec(std::string("ideal: ") + e.what());
  }

  Runner r{spec, log, ws, ideal, {}};
  r.has_xi = spec.xi.has_value();
  if (r.has_xi) r.xi = zero_based(*spec.xi);
  r.want_full = spec.mode != "partial";
  r.want_partial = spec.mode != "full";

  RunResult result;
  json& rep = result.report;
  rep["schema"] = 1;
  rep["spec"] = to_json(spec);
  CaseDescriptor desc = ws.descriptor(ideal);
  desc.xi = r.xi;
  desc.has_xi = r.has_xi;
  rep["case"] = desc.to_json(ws.roots());
  rep["root_system"] = {{"name", ws.roots().name()},
                        {"positive_roots", ws.roots().positive_roots.size()},
                        {"weyl_order", ws.group().size()}};
  json& tasks = rep["tasks"] = json::object();
  json& timings = result.timings["tasks"] = json::object();

  std::optional<RegularCohomology> regular;
  auto regular_ring = [&]() -> RegularCohomology& {
    if (!regular) regular = regular_cohomology(ws, ideal, r.xi);
    return *regular;
  };

  std::vector<std::string> done;
  for (const auto& task : spec.tasks) {
    if (std::find(done.begin(), done.end(), task) != done.end()) continue;
    done.push_back(task);
    json out = timed(timings, task, [&]() -> json {
      if (task == "betti") return r.betti_task();
      if (task == "equivariant") return r.equivariant_task();
      if (task == "actions") return r.actions_task();
      if (task == "verify-main") return r.verification(verify_pullback_invariants(ws, ideal));
      if (task == "verify-lh") return r.verification(verify_leray_hirsch(ws, ideal));
      if (task == "verify-wmod") return r.verification(verify_w_module_decomposition(ws, ideal));
      if (task == "regular") return r.regular_task(regular_ring());
      if (task == "pdhlhr") {
        RegularCohomology& reg = regular_ring();
        VerificationReport v = verify_pd_hl_hr(reg.ring, reg.omega_candidates, spec.seed);
        json j = r.verification(v);
        j["ring"] = r.has_xi ? "regular" : "partial";
        return j;
      }
      // enumerate
      json j;
      const auto ideals = enumerate_theta_ideals(ws.roots(), par);
      j["count"] = ideals.size();
      json list = json::array();
      for (const auto& h : ideals) list.push_back(root_list(ws.roots(), h.roots));
      j["ideals"] = list;
      j["status"] = "pass";
      return j;
    });
    tasks[task] = out;
    log << task << ": " << out.value("status", "pass") << '\n';
  }

  if (std::find(done.begin(), done.end(), "betti") != done.end()) {
    GkmCohomology& full = ws.full(ideal);
    GkmCohomology& part = ws.partial(ideal);
    const auto star = r.star_dims();
    const auto dot = r.dot_dims(part);
    std::ostringstream csv;
    csv << "degree,betti_full,betti_partial,dim_star_inv,dim_dot_inv\n";
    for (int k = 0; k <= full.top_degree(); ++k) {
      auto at = [k](const auto& v) { return std::size_t(k) < v.size() ? std::int64_t(v[std::size_t(k)]) : 0; };
      csv << k << ',' << at(full.betti()) << ',' << at(part.betti()) << ',' << at(star) << ',' << at(dot) << '\n';
    }
    result.csv = csv.str();
  }

  rep["status"] = r.failed ? "fail" : "pass";
  result.exit_code = r.failed ? 2 : 0;
  result.timings["cache_hits"] = ws.cache_hits();
  if (cache) result.timings["cache_evictions"] = cache->evictions();
  return result;
}

int run_and_write(const CaseSpec& spec, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    result = run(spec, out);
  } catch (const InvalidSpec& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const NegativeBetti& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  std::filesystem::create_directories(spec.out_dir);
  const std::filesystem::path dir(spec.out_dir);
  std::ofstream(dir / "report.json") << result.report.dump(2) << '\n';
  std::ofstream(dir / "timings.json") << result.timings.dump(2) << '\n';
  if (!result.csv.empty()) std::ofstream(dir / "betti.csv") << result.csv;
  out << "status: " << result.report["status"].get<std::string>() << '\n';
  return result.exit_code;
}

}  // namespace hessgkm
