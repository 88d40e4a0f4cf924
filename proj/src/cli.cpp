#include "ktype/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ktype/blattner.hpp"
#include "ktype/params.hpp"
#include "ktype/verify.hpp"

namespace ktype::cli {

using json = nlohmann::json;

namespace {

std::string str(const auto& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

json weight_json(const Weight& w) {
  if (w.rank() == 1) return w[0];
  return w.coords();
}

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return str(v);
}

struct Failure {
  int code;
  std::string message;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{io_error, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_params_arg(const std::string& arg) {
  std::string text = arg;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || arg[first] != '{') text = read_text(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Failure{invalid_params, std::string("parameters are not valid JSON: ") + e.what()};
  }
}

RealGroupData load_group_or_fail(const std::string& name, CheckLog* log = nullptr) {
  try {
    return load_group_data_file(group_path(name), log);
  } catch (const DataIOError& e) {
    throw Failure{io_error, e.what()};
  } catch (const GroupDataError& e) {
    throw Failure{schema_error, e.what()};
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Failure{io_error, "cannot write " + out_path};
  f << text;
  if (!f) throw Failure{io_error, "cannot write " + out_path};
}

struct TableArgs {
  std::string group, params, format = "csv", out, mode = "partition";
  Coord window = 10;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  RealGroupData g = load_group_or_fail(a.group);
  TemperedParams p;
  try {
    p = parse_params(g, parse_params_arg(a.params));
  } catch (const ParamsError& e) {
    err << "verdict: invalid (" << e.what() << ")\n";
    return invalid_params;
  }
  auto verdict = validate_params(g, p);
  if (verdict.kind != Verdict::nonzero) {
    err << "verdict: " << to_string(verdict.kind) << " (" << verdict.reason << ")\n";
    return invalid_params;
  }
  if (a.window < 0) {
    err << "window must be nonnegative\n";
    return invalid_params;
  }
  KTypeTable t = a.mode == "series" ? ktype_table_mode(g, p, a.window, Mode::series) : ktype_table(g, p, a.window);
  const std::string mode = a.mode == "series" ? "series" : "partition+series-spot-checks";

  if (a.format == "json") {
    json doc{{"group", g.name},       {"params", params_to_json(p)}, {"window", t.window},
             {"sign", t.sign},        {"mode", mode},                {"verdict", to_string(verdict.kind)},
             {"rows", table_rows_json(t)}};
    emit(doc.dump(2) + "\n", a.out, out);
  } else {
    err << "group=" << g.name << "\nparams=" << params_to_json(p).dump() << "\nwindow=" << t.window
        << "\nsign=" << t.sign << "\nmode=" << mode << "\n";
    emit(table_csv(t), a.out, out);
  }
  return ok;
}

int cmd_verify(const std::string& suite, const VerifyConfig& cfg, const std::string& out_path, std::ostream& out) {
  json report;
  try {
    report = run_verify_suite(suite, cfg);
  } catch (const std::invalid_argument& e) {
    throw Failure{invalid_params, e.what()};
  }
  emit(report.dump(2) + "\n", out_path, out);
  return report["pass"].get<bool>() ? ok : verify_failed;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  CheckLog log;
  try {
    load_group_or_fail(path, &log);
  } catch (const Failure& f) {
    for (const auto& c : log) out << "ok   " << c << "\n";
    err << "invalid: " << f.message << "\n";
    return f.code;
  }
  for (const auto& c : log) out << "ok   " << c << "\n";
  out << "valid\n";
  return ok;
}

}  // namespace

std::string table_csv(const KTypeTable& t) {
  std::string s = "ktype_highest_weight,multiplicity\r\n";
  for (const auto& [k, v] : t.entries) {
    if (k.rank() == 1) {
      s += std::to_string(k[0]);
    } else {
      s += "\"(";
      for (std::size_t i = 0; i < k.rank(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
      s += ")\"";
    }
    s += "," + str(v) + "\r\n";
  }
  return s;
}

json table_rows_json(const KTypeTable& t) {
  json rows = json::array();
  for (const auto& [k, v] : t.entries)
    rows.push_back({{"ktype_highest_weight", weight_json(k)}, {"multiplicity", integer_json(v)}});
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-type multiplicities of tempered representations"};
  app.require_subcommand(1);

  TableArgs targs;
  auto* table = app.add_subcommand("table", "K-type table of a tempered representation");
  table->add_option("--group", targs.group, "builtin group name or group-data path")->required();
  table->add_option("--params", targs.params, "parameter JSON (inline or path)")->required();
  table->add_option("--window", targs.window, "max-norm window of K-types");
  table->add_option("--format", targs.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", targs.out, "output path (default stdout)");
  table->add_option("--mode", targs.mode)->check(CLI::IsMember({"partition", "series"}));

  std::string suite, vout;
  VerifyConfig cfg;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "sl2, su21, dirac or ring")->required();
  verify->add_option("--grid-L", cfg.grid.L, "oscillator half-width");
  verify->add_option("--grid-h", cfg.grid.h, "oscillator grid step");
  verify->add_option("--svd-tol", cfg.svd_tol, "singular value threshold");
  verify->add_option("--out", vout, "report path (default stdout)");

  std::string vpath;
  auto* validate = app.add_subcommand("validate", "validate a group-data file");
  validate->add_option("path", vpath, "builtin group name or group-data path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_params;
  }

  try {
    if (*table) return cmd_table(targs, out, err);
    if (*verify) {
      try {
        cfg.grid.validate();
      } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return invalid_params;
      }
      return cmd_verify(suite, cfg, vout, out);
    }
    if (*validate) return cmd_validate(vpath, out, err);
  } catch (const Failure& f) {
    err << f.message << "\n";
    return f.code;
  } catch (const InvalidParams& e) {
    err << "verdict: invalid (" << e.what() << ")\n";
    return invalid_params;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return verify_failed;
  }
  return invalid_params;
}

}  // namespace ktype::cli
