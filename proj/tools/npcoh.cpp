#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "npcoh/analysis.hpp"
#include "npcoh/normal_forms.hpp"
#include "npcoh/parse.hpp"

using namespace npcoh;

namespace {

struct Options {
  std::string poly;
  std::string vars_csv;
  std::string weights_csv;
  std::string cls_label;
  std::string signs_csv;
  std::string window_str;
  std::string mode_str;
  std::string out_file;
  int n = 0;
  std::vector<long> ps;
  bool json = false;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<long> parse_csv_longs(const std::string& text,
                                  const std::string& what) {
  std::vector<long> out;
  for (const std::string& tok : split_csv(text)) {
    try {
      size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("cannot parse " + what + " entry '" + tok + "'");
    }
  }
  return out;
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const std::string& tok : split_csv(text)) {
    if (tok == "+" || tok == "+1" || tok == "1")
      out.push_back(1);
    else if (tok == "-" || tok == "-1")
      out.push_back(-1);
    else
      throw InputError("cannot parse sign '" + tok + "' (use + or -)");
  }
  return out;
}

std::pair<long, long> parse_window(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw InputError("window must be given as LO:HI");
  return {parse_csv_longs(text.substr(0, colon), "window")[0],
          parse_csv_longs(text.substr(colon + 1), "window")[0]};
}

void add_common(CLI::App* cmd, Options& o, bool with_mode) {
  cmd->add_option("--poly", o.poly, "polynomial, e.g. \"x1^3+x2^2+x3^2\"");
  cmd->add_option("--vars", o.vars_csv, "comma-separated variable names");
  cmd->add_option("--weights", o.weights_csv,
                  "comma-separated positive integer weights");
  cmd->add_option("--class", o.cls_label,
                  "catalog class: A2, D5, E7, regular, quadratic");
  cmd->add_option("--n", o.n, "ambient dimension for --class (default 3)");
  cmd->add_option("--signs", o.signs_csv,
                  "signs for the class tail, e.g. +,-,+");
  cmd->add_option("--p", o.ps, "twist parameter, repeatable (default 0, n-2)");
  cmd->add_option("--window", o.window_str, "degree window LO:HI");
  if (with_mode)
    cmd->add_option("--mode", o.mode_str,
                    "closed-form | brute-force | verify");
  cmd->add_flag("--json", o.json, "emit JSON instead of text");
  cmd->add_option("--out", o.out_file, "write output to a file");
}

AnalysisRequest build_request(const Options& o, AnalysisMode default_mode) {
  AnalysisRequest req;
  if (!o.cls_label.empty()) {
    if (!o.poly.empty() || !o.weights_csv.empty() || !o.vars_csv.empty())
      throw InputError("--class cannot be combined with --poly/--weights/--vars");
    SingularityClass cls = parse_class_label(o.cls_label, o.n > 0 ? o.n : 3);
    cls.signs = parse_signs(o.signs_csv);
    NormalForm nf = standard_polynomial(cls);
    req.f = nf.f;
    req.weights = nf.weights;
  } else {
    if (o.poly.empty() || o.weights_csv.empty())
      throw InputError("provide either --class or both --poly and --weights");
    req.weights.w = parse_csv_longs(o.weights_csv, "weights");
    req.weights.validate();
    int n = req.weights.nvars();
    if (!o.vars_csv.empty()) {
      req.var_names = split_csv(o.vars_csv);
      req.f = parse_polynomial(o.poly, req.var_names);
    } else {
      req.f = parse_polynomial_with_aliases(o.poly, n);
    }
  }
  int n = req.weights.nvars();
  req.ps = o.ps.empty() ? std::vector<long>{0, n - 2} : o.ps;
  req.mode = o.mode_str.empty() ? default_mode : mode_from_name(o.mode_str);
  if (!o.window_str.empty()) req.window = parse_window(o.window_str);
  return req;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(o.out_file);
  if (!out) throw InputError("cannot open output file '" + o.out_file + "'");
  out << text;
}

int run_single(const Options& o, AnalysisMode default_mode) {
  AnalysisRequest req = build_request(o, default_mode);
  AnalysisResult res = run_analysis(req);
  write_output(o, o.json ? emit_json(res) : render_text(res));
  return has_mismatch(res) ? 4 : 0;
}

int run_catalog(const Options& o) {
  int n = o.n > 0 ? o.n : 3;
  std::vector<NormalForm> entries;
  if (!o.cls_label.empty()) {
    for (const std::string& label : split_csv(o.cls_label)) {
      SingularityClass cls = parse_class_label(label, n);
      cls.signs = parse_signs(o.signs_csv);
      entries.push_back(standard_polynomial(cls));
    }
  } else {
    entries = catalog_sweep(
        n, n,
        {Family::A, Family::D, Family::E, Family::Regular, Family::Quadratic},
        5);
  }
  AnalysisMode mode =
      o.mode_str.empty() ? AnalysisMode::verify : mode_from_name(o.mode_str);
  bool mismatch = false;
  nlohmann::json jarr = nlohmann::json::array();
  std::ostringstream table;
  table << "class      n   N    c    p    dims                verdict\n";
  for (const NormalForm& nf : entries) {
    AnalysisRequest req;
    req.f = nf.f;
    req.weights = nf.weights;
    req.ps = o.ps.empty() ? std::vector<long>{0, nf.cls.n - 2} : o.ps;
    req.mode = mode;
    if (!o.window_str.empty()) req.window = parse_window(o.window_str);
    AnalysisResult res = run_analysis(req);
    if (has_mismatch(res)) mismatch = true;
    if (o.json) {
      nlohmann::json jo;
      jo["class"] = nf.cls.label();
      jo["result"] = nlohmann::json::parse(emit_json(res));
      jarr.push_back(jo);
      continue;
    }
    for (const PerPReport& rep : res.reports) {
      std::ostringstream dims;
      dims << "(";
      for (size_t k = 0; k < rep.entries.size(); ++k) {
        const EntryReport& e = rep.entries[k];
        if (k) dims << ",";
        if (e.kind == "finite")
          dims << e.dim;
        else
          dims << (e.kind == "infinite" ? "inf" : "?");
      }
      dims << ")";
      std::string verdict = "ok";
      for (const std::string& v : rep.verdicts)
        if (v == "MISMATCH") verdict = "MISMATCH";
      if (rep.verdicts.empty()) verdict = "-";
      std::ostringstream row;
      row.setf(std::ios::left);
      row.width(10);
      row << nf.cls.label();
      row << " " << nf.cls.n << "   ";
      std::ostringstream tail;
      tail.setf(std::ios::left);
      tail.width(4);
      tail << res.N;
      tail.width(5);
      tail << res.codimension;
      tail.width(5);
      tail << rep.p;
      tail.width(20);
      tail << dims.str();
      tail << verdict;
      table << row.str() << " " << tail.str() << "\n";
    }
  }
  write_output(o, o.json ? jarr.dump(2) : table.str());
  return mismatch ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact cohomology of twisted de Rham complexes of quasihomogeneous "
      "germs: closed-form dimensions, brute-force graded verification, and "
      "an ADE catalog."};
  app.require_subcommand(1);

  Options oa, ov, oc;
  CLI::App* analyze =
      app.add_subcommand("analyze", "compute cohomology for one germ");
  add_common(analyze, oa, true);
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check closed-form dimensions against brute force");
  add_common(verify, ov, false);
  CLI::App* catalog = app.add_subcommand(
      "catalog", "sweep the singularity catalog (default: verify each entry)");
  add_common(catalog, oc, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    configured_thread_count();
    if (analyze->parsed()) return run_single(oa, AnalysisMode::closed_form);
    if (verify->parsed()) return run_single(ov, AnalysisMode::verify);
    return run_catalog(oc);
  } catch (const InfiniteCodimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
