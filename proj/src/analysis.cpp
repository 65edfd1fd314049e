#include "npcoh/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "npcoh/parse.hpp"

namespace npcoh {

using nlohmann::json;

AnalysisMode mode_from_name(const std::string& name) {
  if (name == "closed-form" || name == "closed_form")
    return AnalysisMode::closed_form;
  if (name == "brute-force" || name == "brute_force")
    return AnalysisMode::brute_force;
  if (name == "verify") return AnalysisMode::verify;
  throw InputError("unknown mode '" + name +
                   "' (expected closed-form, brute-force or verify)");
}

std::string mode_name(AnalysisMode m) {
  switch (m) {
    case AnalysisMode::closed_form: return "closed-form";
    case AnalysisMode::brute_force: return "brute-force";
    case AnalysisMode::verify: return "verify";
  }
  throw InputError("unknown mode");
}

namespace {

std::string kind_name(DimKind k) {
  switch (k) {
    case DimKind::finite: return "finite";
    case DimKind::infinite: return "infinite";
    case DimKind::sentinel: return "sentinel";
  }
  throw InputError("unknown dimension kind");
}

std::string verdict_for(const ClosedEntry& ce, const ProfileData& pd, long N,
                        int n, long q, long s_count) {
  if (ce.kind == DimKind::sentinel) return "SENTINEL";
  if (ce.kind == DimKind::finite) {
    if (!pd.stabilized) return "MISMATCH";
    if (pd.total != ce.dim) return "MISMATCH";
    if (pd.dims != ce.placement) return "MISMATCH";
    return "MATCH";
  }
  long beyond_half = 0;
  for (const auto& [m, d] : pd.dims)
    if (2 * m > pd.hi && d > 0) ++beyond_half;
  bool evidence = !pd.stabilized && beyond_half >= 3;
  if (ce.k == n - 1 && q == 2) {
    auto it = pd.dims.find(N);
    long at_n = it == pd.dims.end() ? 0 : it->second;
    if (at_n < s_count) evidence = false;
  }
  return evidence ? "INFINITE" : "MISMATCH";
}

}  // namespace

bool has_mismatch(const AnalysisResult& r) {
  for (const auto& rep : r.reports)
    for (const auto& v : rep.verdicts)
      if (v == "MISMATCH") return true;
  return false;
}

AnalysisResult run_analysis(const AnalysisRequest& req) {
  const WeightSystem& W = req.weights;
  W.validate();
  int n = W.nvars();
  if (n < 3) throw InputError("the ambient dimension must be at least 3");
  if (req.ps.empty()) throw InputError("the p-list must not be empty");
  std::vector<std::string> vars =
      req.var_names.empty() ? default_variable_names(n) : req.var_names;
  if (static_cast<int>(vars.size()) != n)
    throw InputError("variable name count does not match the weight count");

  MilnorAlgebra Q = milnor_algebra(req.f, W);

  AnalysisResult res;
  res.n = n;
  res.weights = W.w;
  res.N = Q.N;
  res.codimension = Q.codimension;
  for (const Monomial& b : Q.basis)
    res.basis.push_back(
        print_polynomial(Polynomial::term(b, Rational(1)), vars));

  std::vector<long> ps = req.ps;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  bool brute = req.mode != AnalysisMode::closed_form;
  for (long p : ps) {
    PerPReport rep;
    rep.p = p;
    long q = n - p;
    CountVector cv = count_vector(W, Q, q);
    rep.r = cv.r;
    rep.s = cv.s;
    ClosedReport closed = closed_form_report(req.f, W, Q, p);

    std::optional<TwistedComplex> tc;
    long lo = 0, hi = 0;
    if (brute) {
      tc.emplace(req.f, W, p);
      long dflt = tc->default_window_top();
      hi = dflt;
      if (req.window) {
        lo = req.window->first;
        hi = req.window->second;
        if (lo < 0 || hi < lo)
          throw InputError("window bounds must satisfy 0 <= lo <= hi");
        if (hi < dflt)
          throw InputError("window upper bound must be at least the default " +
                           std::to_string(dflt));
      }
    }

    for (int k = 0; k <= n; ++k) {
      EntryReport er;
      er.k = k;
      const ClosedEntry& ce = closed.at(k);
      if (req.mode != AnalysisMode::brute_force) {
        er.kind = kind_name(ce.kind);
        er.dim = ce.kind == DimKind::finite ? ce.dim : 0;
        for (const DifferentialForm& g : ce.generators)
          er.generators.push_back(print_form(g, vars));
      }
      if (brute) {
        DegreeProfile prof = tc->profile(k, lo, hi);
        ProfileData pd;
        pd.lo = lo;
        pd.hi = hi;
        for (long m = lo; m <= hi; ++m) {
          long d = prof.at(m);
          if (d != 0) {
            pd.dims[m] = d;
            pd.total += d;
          }
        }
        pd.stabilized = prof.stabilized(Q.N);
        er.profile = pd;
        if (req.mode == AnalysisMode::brute_force) {
          // A window total is only a dimension once the tail has stabilized;
          // otherwise the profile itself is the result.
          er.kind = pd.stabilized ? "finite" : "infinite";
          er.dim = pd.stabilized ? pd.total : 0;
        }
      }
      if (req.mode == AnalysisMode::verify) {
        er.verdict = verdict_for(ce, *er.profile, Q.N, n, q, cv.s);
        rep.verdicts.push_back(er.verdict);
      }
      rep.entries.push_back(std::move(er));
    }
    res.reports.push_back(std::move(rep));
  }
  return res;
}

std::string emit_json(const AnalysisResult& r) {
  json arr = json::array();
  for (const PerPReport& rep : r.reports) {
    json o;
    o["n"] = r.n;
    o["weights"] = r.weights;
    o["N"] = r.N;
    o["codimension"] = r.codimension;
    o["basis"] = r.basis;
    json rmap = json::object();
    for (const auto& [j, cnt] : rep.r) rmap[std::to_string(j)] = cnt;
    o["r"] = rmap;
    o["s"] = rep.s;
    o["p"] = rep.p;
    json coh = json::array();
    for (const EntryReport& e : rep.entries) {
      json eo;
      eo["k"] = e.k;
      if (e.kind == "finite")
        eo["dim"] = e.dim;
      else
        eo["dim"] = e.kind;
      eo["generators"] = e.generators;
      if (e.profile) {
        json po;
        po["lo"] = e.profile->lo;
        po["hi"] = e.profile->hi;
        json dm = json::object();
        for (const auto& [m, d] : e.profile->dims) dm[std::to_string(m)] = d;
        po["dims"] = dm;
        po["stabilized"] = e.profile->stabilized;
        po["total"] = e.profile->total;
        eo["profile"] = po;
      } else {
        eo["profile"] = nullptr;
      }
      coh.push_back(eo);
    }
    o["cohomology"] = coh;
    o["verdicts"] = rep.verdicts;
    arr.push_back(o);
  }
  return arr.dump(2);
}

AnalysisResult parse_json(const std::string& text) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed JSON: ") + ex.what());
  }
  if (!arr.is_array()) throw InputError("expected a JSON array of reports");
  AnalysisResult res;
  bool first = true;
  for (const json& o : arr) {
    if (first) {
      res.n = o.at("n").get<int>();
      res.weights = o.at("weights").get<std::vector<long>>();
      res.N = o.at("N").get<long>();
      res.codimension = o.at("codimension").get<long>();
      res.basis = o.at("basis").get<std::vector<std::string>>();
      first = false;
    }
    PerPReport rep;
    rep.p = o.at("p").get<long>();
    for (const auto& [key, val] : o.at("r").items())
      rep.r[std::stol(key)] = val.get<long>();
    rep.s = o.at("s").get<long>();
    rep.verdicts = o.at("verdicts").get<std::vector<std::string>>();
    for (const json& eo : o.at("cohomology")) {
      EntryReport e;
      e.k = eo.at("k").get<int>();
      const json& dim = eo.at("dim");
      if (dim.is_number()) {
        e.kind = "finite";
        e.dim = dim.get<long>();
      } else {
        e.kind = dim.get<std::string>();
        e.dim = 0;
      }
      e.generators = eo.at("generators").get<std::vector<std::string>>();
      const json& po = eo.at("profile");
      if (!po.is_null()) {
        ProfileData pd;
        pd.lo = po.at("lo").get<long>();
        pd.hi = po.at("hi").get<long>();
        for (const auto& [key, val] : po.at("dims").items())
          pd.dims[std::stol(key)] = val.get<long>();
        pd.stabilized = po.at("stabilized").get<bool>();
        pd.total = po.at("total").get<long>();
        e.profile = pd;
      }
      if (!rep.verdicts.empty() && e.k < static_cast<int>(rep.verdicts.size()))
        e.verdict = rep.verdicts[static_cast<size_t>(e.k)];
      rep.entries.push_back(std::move(e));
    }
    res.reports.push_back(std::move(rep));
  }
  return res;
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string weights_str(const std::vector<long>& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    os << w[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string render_text(const AnalysisResult& r) {
  std::ostringstream os;
  os << "n = " << r.n << "   weights = " << weights_str(r.weights)
     << "   N = " << r.N << "   codimension = " << r.codimension << "\n";
  os << "basis = { " << join(r.basis, ", ") << " }\n";
  for (const PerPReport& rep : r.reports) {
    os << "\np = " << rep.p << "   (q = " << (r.n - rep.p) << ")   s = "
       << rep.s;
    if (!rep.r.empty()) {
      os << "   r = {";
      bool first = true;
      for (const auto& [j, cnt] : rep.r) {
        os << (first ? " " : ", ") << j << ": " << cnt;
        first = false;
      }
      os << " }";
    }
    os << "\n";
    std::vector<std::string> dims_line;
    for (const EntryReport& e : rep.entries) {
      os << "  H^" << e.k << ": ";
      if (e.kind == "finite") {
        os << "dim = " << e.dim;
        dims_line.push_back(std::to_string(e.dim));
      } else {
        os << e.kind;
        dims_line.push_back(e.kind == "infinite" ? "inf" : "?");
      }
      if (!e.verdict.empty()) os << "   [" << e.verdict << "]";
      os << "\n";
      for (const std::string& g : e.generators) os << "      gen  " << g << "\n";
      if (e.profile) {
        const ProfileData& pd = *e.profile;
        os << "      profile  window = [" << pd.lo << ", " << pd.hi
           << "]   total = " << pd.total << "   stabilized = "
           << (pd.stabilized ? "yes" : "no") << "\n";
        if (!pd.dims.empty()) {
          os << "      nonzero  {";
          bool first = true;
          for (const auto& [m, d] : pd.dims) {
            os << (first ? " " : ", ") << m << ": " << d;
            first = false;
          }
          os << " }\n";
        }
      }
    }
    os << "  dims (k = 0.." << r.n << "): (" << join(dims_line, ", ") << ")\n";
  }
  return os.str();
}

}  // namespace npcoh
