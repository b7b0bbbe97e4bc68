#include "fdwback/problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fdw {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void dump_impl(const ordered_json& j, std::string& out, int indent, int depth) {
  auto pad = [&](int d) {
    if (indent > 0) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent) * d, ' ');
    }
  };
  switch (j.type()) {
    case nlohmann::detail::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        out += ordered_json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        dump_impl(it.value(), out, indent, depth + 1);
      }
      pad(depth);
      out += '}';
      return;
    }
    case nlohmann::detail::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        dump_impl(v, out, indent, depth + 1);
      }
      pad(depth);
      out += ']';
      return;
    }
    case nlohmann::detail::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string dump_json(const ordered_json& j, int indent) {
  std::string out;
  dump_impl(j, out, indent, 0);
  return out;
}

Spectrum parse_spectrum(const ordered_json& j) {
  require(j.is_object(), "spectrum: expected an object");
  if (j.contains("kind")) {
    require(j.at("kind").get<std::string>() == "dirichlet_laplacian_1d",
            "spectrum: unknown kind");
    return dirichlet_laplacian_1d(j.at("length").get<double>(),
                                  j.at("n_modes").get<std::size_t>());
  }
  require(j.contains("eigenvalues"), "spectrum: missing eigenvalues");
  std::vector<double> eig = j.at("eigenvalues").get<std::vector<double>>();
  std::vector<std::size_t> mult(eig.size(), 1);
  if (j.contains("multiplicities")) mult = j.at("multiplicities").get<std::vector<std::size_t>>();
  return user_spectrum(std::move(eig), std::move(mult));
}

ordered_json spectrum_to_json(const Spectrum& s) {
  ordered_json j;
  if (s.kind == SpectrumKind::dirichlet_laplacian_1d) {
    j["kind"] = "dirichlet_laplacian_1d";
    j["length"] = s.length;
    j["n_modes"] = s.mode_count();
  }
  j["eigenvalues"] = s.eigenvalues;
  j["multiplicities"] = s.multiplicities;
  return j;
}

std::vector<double> flatten(const SpectralCoeffs& c) {
  std::vector<double> out;
  out.reserve(c.total());
  for (const auto& m : c.modes) out.insert(out.end(), m.begin(), m.end());
  return out;
}

SpectralCoeffs unflatten(const std::vector<double>& flat, const Spectrum& s) {
  require(flat.size() == s.coeff_count(),
          "coefficients: expected " + std::to_string(s.coeff_count()) + " values, got " +
              std::to_string(flat.size()));
  SpectralCoeffs c = SpectralCoeffs::zeros_like(s);
  std::size_t idx = 0;
  for (auto& m : c.modes)
    for (double& v : m) v = flat[idx++];
  return c;
}

ProblemSpec parse_problem(const ordered_json& j) {
  require(j.is_object(), "problem: expected a JSON object");
  ProblemSpec p;
  require(j.contains("alpha"), "problem: missing alpha");
  p.alpha = j.at("alpha").get<double>();
  if (j.contains("T")) p.T = j.at("T").get<double>();
  require(j.contains("spectrum"), "problem: missing spectrum");
  p.spectrum = parse_spectrum(j.at("spectrum"));
  if (j.contains("a") || j.contains("b")) {
    require(j.contains("a") && j.contains("b"), "problem: need both a and b");
    p.a = unflatten(j.at("a").get<std::vector<double>>(), p.spectrum);
    p.b = unflatten(j.at("b").get<std::vector<double>>(), p.spectrum);
    p.has_data = true;
  }
  if (j.contains("tolerances") && j.at("tolerances").contains("psi_floor"))
    p.psi_floor = j.at("tolerances").at("psi_floor").get<double>();
  return p;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("problem: cannot open " + path);
  ordered_json j;
  in >> j;
  return parse_problem(j);
}

ordered_json coeffs_to_json(const SpectralCoeffs& c) { return flatten(c); }

ordered_json zeroset_to_json(const ZeroSet& z) {
  ordered_json j;
  j["alpha"] = z.alpha;
  j["search_ceiling"] = z.search_ceiling;
  j["count"] = z.zeros.size();
  ordered_json zs = ordered_json::array();
  for (const auto& zb : z.zeros) {
    ordered_json e;
    e["eta"] = zb.eta;
    e["bracket"] = {zb.lo, zb.hi};
    e["residual"] = zb.residual;
    zs.push_back(e);
  }
  j["zeros"] = zs;
  j["notes"] = z.notes;
  return j;
}

ordered_json lambda_to_json(const Lambda& l) {
  ordered_json j;
  j["count"] = l.entries.size();
  ordered_json es = ordered_json::array();
  for (const auto& e : l.entries) {
    ordered_json o;
    o["T"] = e.T;
    o["mode"] = e.mode_index;
    o["zero"] = e.zero_index;
    es.push_back(o);
  }
  j["entries"] = es;
  return j;
}

ordered_json diagnostics_to_json(const BackwardDiagnostics& d) {
  ordered_json j;
  j["min_abs_psi"] = d.min_abs_psi;
  j["argmin_mode"] = d.argmin_mode;
  j["nearest_exceptional_T"] = d.nearest_exceptional_T;
  j["condition_estimate"] = d.condition_estimate;
  return j;
}

void validate_output(const std::string& command, const ordered_json& j) {
  auto need = [&](const char* key, bool cond) {
    if (!j.contains(key) || !cond)
      throw std::logic_error("output schema violation for '" + command + "': key " + key);
  };
  if (command == "ml") {
    need("value", j.value("value", ordered_json()).is_number());
    need("abs_error_estimate", j.value("abs_error_estimate", ordered_json()).is_number());
    need("regime", j.value("regime", ordered_json()).is_string());
  } else if (command == "psi-zeros") {
    need("alpha", j.value("alpha", ordered_json()).is_number());
    need("zeros", j.value("zeros", ordered_json()).is_array());
    need("search_ceiling", j.value("search_ceiling", ordered_json()).is_number());
  } else if (command == "bound") {
    for (const char* k : {"kappa1", "kappa2", "kappa3", "nu1", "nu2", "nu3", "eta_bound",
                          "theta", "safe_time_threshold_mu1"})
      need(k, j.value(k, ordered_json()).is_number());
  } else if (command == "lambda-set") {
    need("entries", j.value("entries", ordered_json()).is_array());
  } else if (command == "forward" || command == "roundtrip") {
    need("u", j.value("u", ordered_json()).is_array());
    need("du", j.value("du", ordered_json()).is_array());
  } else if (command == "backward") {
    need("diagnostics", j.value("diagnostics", ordered_json()).is_object());
  } else if (command == "nullmode") {
    need("a0", j.value("a0", ordered_json()).is_number());
    need("b0", j.value("b0", ordered_json()).is_number());
  } else if (command == "ode") {
    need("alpha", j.value("alpha", ordered_json()).is_number());
  }
}

void write_grid_csv(std::ostream& os, const GridFunction& f) {
  os << "x,value\n";
  const std::size_t m = f.samples.size();
  for (std::size_t i = 1; i <= m; ++i) {
    double x = f.length * static_cast<double>(i) / static_cast<double>(m + 1);
    os << format_double(x) << "," << format_double(f.samples[i - 1]) << "\n";
  }
}

GridFunction read_grid_csv(std::istream& is, double length) {
  GridFunction f;
  f.length = length;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto comma = line.find(',');
    require(comma != std::string::npos, "grid csv: malformed line: " + line);
    f.samples.push_back(std::stod(line.substr(comma + 1)));
  }
  return f;
}

}  // namespace fdw
