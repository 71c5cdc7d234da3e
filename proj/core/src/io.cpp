#include "jframe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "jframe/errors.hpp"
#include "jframe/optimize.hpp"
#include "jframe/potential.hpp"
#include "jframe/subspace.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace jframe::io {
namespace {

using njson = nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string jopt(const std::optional<double>& v) {
  return v ? fmt(*v) : "null";
}

std::string jarr(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt(v[i]);
  }
  return out + "]";
}

std::string jarr_idx(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string jarr_vectors(const std::vector<KVector>& vs,
                         const std::string& indent) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out += indent + "  " + jarr(vs[i]);
    out += (i + 1 < vs.size()) ? ",\n" : "\n";
  }
  return out + indent + "]";
}

void expect(bool cond, const char* code, const std::string& message) {
  if (!cond) fail_validation(code, message);
}

double number_at(const njson& j, const std::string& where) {
  expect(j.is_number(), "bad_number", where + " must be a number");
  double v = j.get<double>();
  expect(std::isfinite(v), "non_finite_entry", where + " must be finite");
  return v;
}

KVector vector_at(const njson& j, const std::string& where) {
  expect(j.is_array() && !j.empty(), "bad_vectors",
         where + " must be a non-empty array of numbers");
  KVector v;
  v.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    v.push_back(number_at(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return v;
}

}  // namespace

std::string format_number(double v) { return fmt(v); }

FrameDocument parse_frame_document(const std::string& text) {
  njson root;
  try {
    root = njson::parse(text);
  } catch (const njson::parse_error& e) {
    fail_validation("parse_error", std::string("invalid JSON: ") + e.what());
  }
  expect(root.is_object(), "bad_document", "document root must be an object");

  FrameDocument doc;
  const bool has_sig = root.contains("signature");
  const bool has_j = root.contains("J");
  expect(has_sig != has_j, "bad_space",
         "document must carry exactly one of \"signature\" or \"J\"");

  if (has_sig) {
    const njson& sig = root["signature"];
    expect(sig.is_object() && sig.contains("plus") && sig.contains("minus"),
           "bad_space",
           "\"signature\" must be an object with \"plus\" and \"minus\"");
    const njson& pl = sig["plus"];
    const njson& mi = sig["minus"];
    expect(pl.is_number_integer() && pl.get<long long>() >= 0, "bad_space",
           "\"signature.plus\" must be a non-negative integer");
    expect(mi.is_number_integer() && mi.get<long long>() >= 0, "bad_space",
           "\"signature.minus\" must be a non-negative integer");
    doc.signature = {static_cast<std::size_t>(pl.get<long long>()),
                     static_cast<std::size_t>(mi.get<long long>())};
  } else {
    const njson& jm = root["J"];
    expect(jm.is_array() && !jm.empty(), "bad_space",
           "\"J\" must be a non-empty array of rows");
    const std::size_t n = jm.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      const KVector row = vector_at(jm[r], "J[" + std::to_string(r) + "]");
      expect(row.size() == n, "bad_space", "\"J\" must be square");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    doc.j = num::Matrix(n, n, entries);
  }

  expect(root.contains("vectors"), "bad_vectors",
         "document must carry a \"vectors\" array");
  const njson& vecs = root["vectors"];
  expect(vecs.is_array() && !vecs.empty(), "bad_vectors",
         "\"vectors\" must be a non-empty array");
  const std::size_t dim = doc.signature
                              ? doc.signature->first + doc.signature->second
                              : doc.j->rows();
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    const std::string where = "vectors[" + std::to_string(i) + "]";
    doc.vectors.push_back(vector_at(vecs[i], where));
    expect(doc.vectors.back().size() == dim, "bad_vectors",
           where + " has length " + std::to_string(doc.vectors.back().size()) +
               " but the space has dimension " + std::to_string(dim));
  }

  if (root.contains("labels")) {
    const njson& labels = root["labels"];
    expect(labels.is_array() && labels.size() == doc.vectors.size(),
           "bad_labels", "\"labels\" must list one string per vector");
    for (const auto& l : labels) {
      expect(l.is_string(), "bad_labels", "\"labels\" entries must be strings");
      doc.labels.push_back(l.get<std::string>());
    }
  }

  if (root.contains("reference_values")) {
    const njson& refs = root["reference_values"];
    expect(refs.is_object(), "bad_reference_values",
           "\"reference_values\" must be an object of numbers");
    for (auto it = refs.begin(); it != refs.end(); ++it) {
      doc.reference_values.emplace_back(
          it.key(), number_at(it.value(), "reference_values." + it.key()));
    }
  }
  return doc;
}

KreinSpace space_from_document(const FrameDocument& doc,
                               const num::Tolerances& tol) {
  if (doc.signature) {
    return make_space_from_signature(doc.signature->first,
                                     doc.signature->second);
  }
  if (doc.j) return make_space_from_j(*doc.j, tol);
  fail_validation("bad_space", "document carries no space description");
}

std::pair<KreinSpace, FrameFamily> read_frame_document(
    const std::string& text, const num::Tolerances& tol) {
  const FrameDocument doc = parse_frame_document(text);
  KreinSpace space = space_from_document(doc, tol);
  FrameFamily family = partition(space, doc.vectors, tol);
  return {std::move(space), std::move(family)};
}

std::string write_frame_document(
    const KreinSpace& space, const std::vector<KVector>& vectors,
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, double>>& reference_values) {
  std::string out = "{\n";
  if (space.canonical) {
    out += "  \"signature\": {\"plus\": " + std::to_string(space.sig_plus) +
           ", \"minus\": " + std::to_string(space.sig_minus) + "},\n";
  } else {
    out += "  \"J\": [\n";
    for (std::size_t r = 0; r < space.dim; ++r) {
      KVector row(space.dim);
      for (std::size_t c = 0; c < space.dim; ++c) row[c] = space.j(r, c);
      out += "    " + jarr(row);
      out += (r + 1 < space.dim) ? ",\n" : "\n";
    }
    out += "  ],\n";
  }
  out += "  \"vectors\": " + jarr_vectors(vectors, "  ");
  if (!labels.empty()) {
    out += ",\n  \"labels\": [";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ", ";
      out += jstr(labels[i]);
    }
    out += "]";
  }
  if (!reference_values.empty()) {
    out += ",\n  \"reference_values\": {\n";
    for (std::size_t i = 0; i < reference_values.size(); ++i) {
      out += "    " + jstr(reference_values[i].first) + ": " +
             fmt(reference_values[i].second);
      out += (i + 1 < reference_values.size()) ? ",\n" : "\n";
    }
    out += "  }";
  }
  out += "\n}\n";
  return out;
}

AnalysisDocument build_analysis(const KreinSpace& space, const FrameFamily& f,
                                const FrameDocument& doc,
                                const num::Tolerances& tol) {
  AnalysisDocument a;
  a.signature = {space.sig_plus, space.sig_minus};
  for (std::size_t i : f.i_plus) a.i_plus.push_back(i + 1);
  for (std::size_t i : f.i_minus) a.i_minus.push_back(i + 1);

  const FrameAnalysis fa = analyze(f, tol);
  a.j_frame = fa.is_j_frame;
  a.zeta = fa.zeta;
  if (fa.m_plus) a.gamma_plus = gram_report(*fa.m_plus, tol).gamma;
  if (fa.m_minus) a.gamma_minus = gram_report(*fa.m_minus, tol).gamma;
  a.bound_plus = fa.bound_plus;
  a.bound_minus = fa.bound_minus;
  a.spectrum_plus = fa.spectrum_plus;
  a.spectrum_minus = fa.spectrum_minus;
  a.tight = fa.is_tight;
  a.parseval = fa.is_parseval;
  a.onb = fa.is_onb;
  a.weakly_normalized = fa.is_weakly_normalized;
  a.normalized = fa.is_normalized;
  a.a_plus = fa.a_plus;
  a.a_minus = fa.a_minus;
  try {
    const Disjointness d = disjointness(f, tol);
    a.disjoint = d.disjoint;
    a.strictly_disjoint = d.strictly_disjoint;
  } catch (const Error&) {
    a.disjoint = false;
    a.strictly_disjoint = false;
  }
  a.fp_j = frame_potential(f);
  a.floor = potential_floor(f);
  a.gap = a.fp_j - a.floor;

  for (const auto& [key, ref] : doc.reference_values) {
    std::optional<double> computed;
    if (key == "zeta") {
      computed = a.zeta;
    } else if (key == "gamma_plus") {
      computed = a.gamma_plus;
    } else if (key == "gamma_minus") {
      computed = a.gamma_minus;
    } else if (key == "fp_j") {
      computed = a.fp_j;
    } else if (key == "floor") {
      computed = a.floor;
    } else {
      a.discrepancy_notes.push_back("reference key \"" + key +
                                    "\" is not recognized");
      continue;
    }
    if (!computed) {
      a.discrepancy_notes.push_back("reference " + key + " = " + fmt(ref) +
                                    " but " + key +
                                    " is undefined for this family");
      continue;
    }
    const double scale = std::max(1.0, std::fabs(*computed));
    if (std::fabs(ref - *computed) > tol.verify_tol * scale) {
      a.discrepancy_notes.push_back("reference " + key + " = " + fmt(ref) +
                                    " but computed " + key + " = " +
                                    fmt(*computed));
    }
  }
  return a;
}

std::string to_json(const AnalysisDocument& a) {
  std::string out = "{\n";
  if (a.signature) {
    out += "  \"signature\": {\"plus\": " + std::to_string(a.signature->first) +
           ", \"minus\": " + std::to_string(a.signature->second) + "},\n";
  }
  out += "  \"i_plus\": " + jarr_idx(a.i_plus) + ",\n";
  out += "  \"i_minus\": " + jarr_idx(a.i_minus) + ",\n";
  out += "  \"j_frame\": " + std::string(jbool(a.j_frame)) + ",\n";
  out += "  \"zeta\": " + jopt(a.zeta) + ",\n";
  out += "  \"gamma_plus\": " + jopt(a.gamma_plus) + ",\n";
  out += "  \"gamma_minus\": " + jopt(a.gamma_minus) + ",\n";
  out += "  \"bound_plus\": " +
         (a.bound_plus ? "[" + fmt(a.bound_plus->first) + ", " +
                             fmt(a.bound_plus->second) + "]"
                       : std::string("null")) +
         ",\n";
  out += "  \"bound_minus\": " +
         (a.bound_minus ? "[" + fmt(a.bound_minus->first) + ", " +
                              fmt(a.bound_minus->second) + "]"
                        : std::string("null")) +
         ",\n";
  out += "  \"spectrum_plus\": " + jarr(a.spectrum_plus) + ",\n";
  out += "  \"spectrum_minus\": " + jarr(a.spectrum_minus) + ",\n";
  out += "  \"tight\": " + std::string(jbool(a.tight)) + ",\n";
  out += "  \"a_plus\": " + jopt(a.a_plus) + ",\n";
  out += "  \"a_minus\": " + jopt(a.a_minus) + ",\n";
  out += "  \"parseval\": " + std::string(jbool(a.parseval)) + ",\n";
  out += "  \"onb\": " + std::string(jbool(a.onb)) + ",\n";
  out +=
      "  \"weakly_normalized\": " + std::string(jbool(a.weakly_normalized)) +
      ",\n";
  out += "  \"normalized\": " + std::string(jbool(a.normalized)) + ",\n";
  out += "  \"disjoint\": " + std::string(jbool(a.disjoint)) + ",\n";
  out +=
      "  \"strictly_disjoint\": " + std::string(jbool(a.strictly_disjoint)) +
      ",\n";
  out += "  \"fp_j\": " + fmt(a.fp_j) + ",\n";
  out += "  \"floor\": " + fmt(a.floor) + ",\n";
  out += "  \"gap\": " + fmt(a.gap) + ",\n";
  out += "  \"discrepancy_notes\": [";
  for (std::size_t i = 0; i < a.discrepancy_notes.size(); ++i) {
    if (i) out += ", ";
    out += jstr(a.discrepancy_notes[i]);
  }
  out += "]\n}\n";
  return out;
}

std::string to_text(const AnalysisDocument& a) {
  std::ostringstream out;
  if (a.signature) {
    out << "signature: " << a.signature->first << "+" << a.signature->second
        << "\n";
  }
  auto idx_line = [&](const char* name, const std::vector<std::size_t>& v) {
    out << name << ":";
    for (std::size_t i : v) out << " " << i;
    out << "\n";
  };
  idx_line("i_plus", a.i_plus);
  idx_line("i_minus", a.i_minus);
  out << "j_frame: " << jbool(a.j_frame) << "\n";
  out << "zeta: " << (a.zeta ? fmt(*a.zeta) : "undefined") << "\n";
  out << "gamma_plus: " << (a.gamma_plus ? fmt(*a.gamma_plus) : "undefined")
      << "\n";
  out << "gamma_minus: " << (a.gamma_minus ? fmt(*a.gamma_minus) : "undefined")
      << "\n";
  if (a.bound_plus) {
    out << "bound_plus: [" << fmt(a.bound_plus->first) << ", "
        << fmt(a.bound_plus->second) << "]\n";
  }
  if (a.bound_minus) {
    out << "bound_minus: [" << fmt(a.bound_minus->first) << ", "
        << fmt(a.bound_minus->second) << "]\n";
  }
  auto num_line = [&](const char* name, const std::vector<double>& v) {
    out << name << ":";
    for (double x : v) out << " " << fmt(x);
    out << "\n";
  };
  num_line("spectrum_plus", a.spectrum_plus);
  num_line("spectrum_minus", a.spectrum_minus);
  out << "tight: " << jbool(a.tight) << "\n";
  if (a.a_plus) out << "a_plus: " << fmt(*a.a_plus) << "\n";
  if (a.a_minus) out << "a_minus: " << fmt(*a.a_minus) << "\n";
  out << "parseval: " << jbool(a.parseval) << "\n";
  out << "onb: " << jbool(a.onb) << "\n";
  out << "weakly_normalized: " << jbool(a.weakly_normalized) << "\n";
  out << "normalized: " << jbool(a.normalized) << "\n";
  out << "disjoint: " << jbool(a.disjoint) << "\n";
  out << "strictly_disjoint: " << jbool(a.strictly_disjoint) << "\n";
  out << "fp_j: " << fmt(a.fp_j) << "\n";
  out << "floor: " << fmt(a.floor) << "\n";
  out << "gap: " << fmt(a.gap) << "\n";
  if (a.discrepancy_notes.empty()) {
    out << "discrepancies: none\n";
  } else {
    out << "discrepancies:\n";
    for (const auto& n : a.discrepancy_notes) out << "  - " << n << "\n";
  }
  return out.str();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_validation("cannot_read", "cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int deliver(const std::string& report, const std::string& output_path,
            std::ostream& out) {
  if (output_path.empty()) {
    out << report;
    return 0;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) {
    fail_validation("cannot_write", "cannot write output file: " + output_path);
  }
  f << report;
  f.flush();
  if (!f) {
    fail_validation("cannot_write", "failed writing output file: " + output_path);
  }
  return 0;
}

std::pair<std::size_t, std::size_t> parse_signature_flag(
    const std::string& s) {
  const auto plus = s.find('+');
  if (plus == std::string::npos || plus == 0 || plus + 1 >= s.size()) {
    fail_validation("bad_signature",
                    "--signature expects the form m+n, e.g. 2+1");
  }
  try {
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    const std::string left = s.substr(0, plus);
    const std::string right = s.substr(plus + 1);
    const unsigned long long m = std::stoull(left, &used1);
    const unsigned long long n = std::stoull(right, &used2);
    if (used1 != left.size() || used2 != right.size()) {
      fail_validation("bad_signature",
                      "--signature expects the form m+n, e.g. 2+1");
    }
    return {static_cast<std::size_t>(m), static_cast<std::size_t>(n)};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail_validation("bad_signature",
                    "--signature expects the form m+n, e.g. 2+1");
  }
}

const char* pair_kind(const FrameFamily& f, std::size_t i, std::size_t j) {
  const Part pi = f.part_of(i);
  const Part pj = f.part_of(j);
  if (pi != pj) return "mixed_pair";
  return pi == Part::Plus ? "positive_pair" : "negative_pair";
}

int cmd_analyze(const std::string& input, const num::Tolerances& tol,
                const std::string& format, const std::string& output,
                std::ostream& out) {
  const FrameDocument doc = parse_frame_document(slurp(input));
  const KreinSpace space = space_from_document(doc, tol);
  const FrameFamily family = partition(space, doc.vectors, tol);
  const AnalysisDocument a = build_analysis(space, family, doc, tol);
  return deliver(format == "json" ? to_json(a) : to_text(a), output, out);
}

int cmd_potential(const std::string& input, const num::Tolerances& tol,
                  const std::string& format, const std::string& output,
                  std::ostream& out) {
  const FrameDocument doc = parse_frame_document(slurp(input));
  const KreinSpace space = space_from_document(doc, tol);
  const FrameFamily family = partition(space, doc.vectors, tol);

  const bool frame_ok =
      !family.i_plus.empty() && !family.i_minus.empty() &&
      is_j_frame(family, tol).ok;
  std::optional<double> zeta;
  if (frame_ok) zeta = compute_zeta(family, tol);
  std::optional<PotentialReport> report;
  if (frame_ok) report = potential_report(family, *zeta, tol);
  const double fp = frame_ok ? report->fp_j : frame_potential(family);
  const double floor = frame_ok ? report->floor : potential_floor(family);

  if (format == "json") {
    std::string s = "{\n";
    s += "  \"j_frame\": " + std::string(jbool(frame_ok)) + ",\n";
    s += "  \"zeta\": " + jopt(zeta) + ",\n";
    s += "  \"fp_j\": " + fmt(fp) + ",\n";
    s += "  \"floor\": " + fmt(floor) + ",\n";
    s += "  \"gap\": " + fmt(fp - floor) + ",\n";
    if (report) {
      s += "  \"tp_j\": " + fmt(report->tp_j) + ",\n";
      s += "  \"intrinsic_norms\": " + jarr(report->intrinsic_norms) + ",\n";
      s += "  \"pair_potentials\": [\n";
      const std::size_t n = family.size();
      for (std::size_t i = 0; i < n; ++i) {
        KVector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = report->pair_matrix(i, j);
        s += "    " + jarr(row);
        s += (i + 1 < n) ? ",\n" : "\n";
      }
      s += "  ]\n";
    } else {
      s += "  \"tp_j\": null,\n";
      s += "  \"intrinsic_norms\": null,\n";
      s += "  \"pair_potentials\": null\n";
    }
    s += "}\n";
    return deliver(s, output, out);
  }

  std::ostringstream s;
  s << "j_frame: " << jbool(frame_ok) << "\n";
  s << "zeta: " << (zeta ? fmt(*zeta) : "undefined") << "\n";
  s << "fp_j: " << fmt(fp) << "\n";
  s << "floor: " << fmt(floor) << "\n";
  s << "gap: " << fmt(fp - floor) << "\n";
  if (report) {
    s << "tp_j: " << fmt(report->tp_j) << "\n";
    s << "intrinsic_norms:";
    for (double a : report->intrinsic_norms) s << " " << fmt(a);
    s << "\n";
    s << "pair_potentials:\n";
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i) {
      s << " ";
      for (std::size_t j = 0; j < n; ++j)
        s << " " << fmt(report->pair_matrix(i, j));
      s << "\n";
    }
  }
  return deliver(s.str(), output, out);
}

int cmd_force(const std::string& input, long long flag_i, long long flag_j,
              const num::Tolerances& tol, const std::string& format,
              const std::string& output, std::ostream& out) {
  const FrameDocument doc = parse_frame_document(slurp(input));
  const KreinSpace space = space_from_document(doc, tol);
  const FrameFamily family = partition(space, doc.vectors, tol);
  const long long n = static_cast<long long>(family.size());
  if (flag_i < 1 || flag_i > n || flag_j < 1 || flag_j > n) {
    fail_validation("bad_index",
                    "--i and --j must be 1-based member indices in [1, " +
                        std::to_string(n) + "]");
  }
  const std::size_t i = static_cast<std::size_t>(flag_i - 1);
  const std::size_t j = static_cast<std::size_t>(flag_j - 1);
  const double zeta = compute_zeta(family, tol);
  const ForceResult fr = frame_force(family, zeta, i, j);
  const double pot = pair_potential(family, zeta, i, j);
  const char* kind = pair_kind(family, i, j);

  if (format == "json") {
    std::string s = "{\n";
    s += "  \"i\": " + std::to_string(flag_i) + ",\n";
    s += "  \"j\": " + std::to_string(flag_j) + ",\n";
    s += "  \"kind\": " + jstr(kind) + ",\n";
    s += "  \"zeta\": " + fmt(zeta) + ",\n";
    s += "  \"coefficient\": " + fmt(fr.coefficient) + ",\n";
    s += "  \"direction\": " + jarr(fr.direction) + ",\n";
    s += "  \"force\": " + jarr(fr.vector) + ",\n";
    s += "  \"pair_potential\": " + fmt(pot) + "\n";
    s += "}\n";
    return deliver(s, output, out);
  }
  std::ostringstream s;
  s << "pair: (" << flag_i << ", " << flag_j << ") " << kind << "\n";
  s << "zeta: " << fmt(zeta) << "\n";
  s << "coefficient: " << fmt(fr.coefficient) << "\n";
  s << "direction:";
  for (double x : fr.direction) s << " " << fmt(x);
  s << "\n";
  s << "force:";
  for (double x : fr.vector) s << " " << fmt(x);
  s << "\n";
  s << "pair_potential: " << fmt(pot) << "\n";
  return deliver(s.str(), output, out);
}

int cmd_minimize(const std::string& signature_flag, long long p, long long q,
                 std::uint64_t seed, long long max_iters, long long restarts,
                 const std::string& format, const std::string& output,
                 std::ostream& out) {
  const auto [m, n] = parse_signature_flag(signature_flag);
  if (p < 1 || q < 1) {
    fail_validation("bad_count", "--p and --q must be positive");
  }
  if (max_iters < 1) fail_validation("bad_config", "--max-iters must be positive");
  if (restarts < 1) fail_validation("bad_config", "--restarts must be positive");
  const KreinSpace space = make_space_from_signature(m, n);
  MinimizeConfig cfg;
  cfg.max_iters = static_cast<std::size_t>(max_iters);
  cfg.restarts = static_cast<std::size_t>(restarts);
  cfg.seed = seed;
  const MinimizeResult r = minimize_potential(
      space, static_cast<std::size_t>(p), static_cast<std::size_t>(q), cfg);

  std::string body;
  if (format == "json") {
    std::string s = "{\n";
    s += "  \"signature\": {\"plus\": " + std::to_string(m) +
         ", \"minus\": " + std::to_string(n) + "},\n";
    s += "  \"p\": " + std::to_string(p) + ",\n";
    s += "  \"q\": " + std::to_string(q) + ",\n";
    s += "  \"seed\": " + std::to_string(seed) + ",\n";
    s += "  \"fp_j\": " + fmt(r.fp_j) + ",\n";
    s += "  \"floor\": " + fmt(r.floor) + ",\n";
    s += "  \"gap\": " + fmt(r.gap) + ",\n";
    s += "  \"iterations\": " + std::to_string(r.iterations) + ",\n";
    s += "  \"converged\": " + std::string(jbool(r.converged)) + ",\n";
    s += "  \"lambda\": " + jarr(r.lambda) + ",\n";
    s += "  \"mu\": " + jarr(r.mu) + ",\n";
    s += "  \"vectors\": " + jarr_vectors(r.family.vectors, "  ") + "\n";
    s += "}\n";
    body = std::move(s);
  } else {
    std::ostringstream s;
    s << "signature: " << m << "+" << n << "\n";
    s << "p: " << p << "\n";
    s << "q: " << q << "\n";
    s << "seed: " << seed << "\n";
    s << "fp_j: " << fmt(r.fp_j) << "\n";
    s << "floor: " << fmt(r.floor) << "\n";
    s << "gap: " << fmt(r.gap) << "\n";
    s << "iterations: " << r.iterations << "\n";
    s << "converged: " << jbool(r.converged) << "\n";
    s << "lambda:";
    for (double x : r.lambda) s << " " << fmt(x);
    s << "\n";
    s << "mu:";
    for (double x : r.mu) s << " " << fmt(x);
    s << "\n";
    s << "vectors:\n";
    for (const auto& v : r.family.vectors) {
      s << " ";
      for (double x : v) s << " " << fmt(x);
      s << "\n";
    }
    body = s.str();
  }
  deliver(body, output, out);
  return r.converged ? 0 : 2;
}

int cmd_generate(const std::string& signature_flag, long long p, long long q,
                 std::uint64_t seed, const std::string& format,
                 const std::string& output, std::ostream& out) {
  const auto [m, n] = parse_signature_flag(signature_flag);
  if (p < 1 || q < 1) {
    fail_validation("bad_count", "--p and --q must be positive");
  }
  const KreinSpace space = make_space_from_signature(m, n);
  const FrameFamily family = generate_tight_j_frame(
      space, static_cast<std::size_t>(p), static_cast<std::size_t>(q), seed);
  if (format == "json") {
    return deliver(write_frame_document(space, family.vectors), output, out);
  }
  std::ostringstream s;
  s << "signature: " << m << "+" << n << "\n";
  s << "vectors:\n";
  for (const auto& v : family.vectors) {
    s << " ";
    for (double x : v) s << " " << fmt(x);
    s << "\n";
  }
  return deliver(s.str(), output, out);
}

int cmd_combine(const std::string& input, const num::Tolerances& tol,
                const std::string& format, const std::string& output,
                std::ostream& out) {
  njson root;
  try {
    root = njson::parse(slurp(input));
  } catch (const njson::parse_error& e) {
    fail_validation("parse_error", std::string("invalid JSON: ") + e.what());
  }
  expect(root.is_object(), "bad_document", "document root must be an object");
  expect(root.contains("f") && root.contains("g"), "bad_document",
         "combine document must carry \"f\" and \"g\" vector arrays");
  expect(root.contains("alpha") && root.contains("beta"), "bad_document",
         "combine document must carry \"alpha\" and \"beta\"");

  FrameDocument shim;
  const bool has_sig = root.contains("signature");
  const bool has_j = root.contains("J");
  expect(has_sig != has_j, "bad_space",
         "combine document must carry exactly one of \"signature\" or \"J\"");
  {
    njson probe = njson::object();
    if (has_sig) {
      probe["signature"] = root["signature"];
    } else {
      probe["J"] = root["J"];
    }
    probe["vectors"] = root["f"];
    shim = parse_frame_document(probe.dump());
  }
  const KreinSpace space = space_from_document(shim, tol);

  auto read_family = [&](const char* key) {
    const njson& arr = root[key];
    expect(arr.is_array() && !arr.empty(), "bad_vectors",
           std::string("\"") + key + "\" must be a non-empty array of vectors");
    std::vector<KVector> vecs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      vecs.push_back(
          vector_at(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return partition(space, vecs, tol);
  };
  const FrameFamily f = read_family("f");
  const FrameFamily g = read_family("g");
  const double alpha = number_at(root["alpha"], "alpha");
  const double beta = number_at(root["beta"], "beta");

  const CombineResult r = combine(f, g, alpha, beta, tol);

  if (format == "json") {
    std::string s = "{\n";
    s += "  \"alpha\": " + fmt(alpha) + ",\n";
    s += "  \"beta\": " + fmt(beta) + ",\n";
    s += "  \"conditions\": {\n";
    s += "    \"sign_preserved\": " + std::string(jbool(r.conditions.sign_preserved)) + ",\n";
    s += "    \"skew_plus\": " + std::string(jbool(r.conditions.skew_plus)) + ",\n";
    s += "    \"skew_minus\": " + std::string(jbool(r.conditions.skew_minus)) + ",\n";
    s += "    \"all\": " + std::string(jbool(r.conditions.all())) + "\n";
    s += "  },\n";
    s += "  \"combined_parseval\": " + std::string(jbool(r.combined_parseval)) + ",\n";
    s += "  \"combined_vectors\": " + jarr_vectors(r.combined.vectors, "  ") + "\n";
    s += "}\n";
    return deliver(s, output, out);
  }
  std::ostringstream s;
  s << "alpha: " << fmt(alpha) << "\n";
  s << "beta: " << fmt(beta) << "\n";
  s << "sign_preserved: " << jbool(r.conditions.sign_preserved) << "\n";
  s << "skew_plus: " << jbool(r.conditions.skew_plus) << "\n";
  s << "skew_minus: " << jbool(r.conditions.skew_minus) << "\n";
  s << "conditions_all: " << jbool(r.conditions.all()) << "\n";
  s << "combined_parseval: " << jbool(r.combined_parseval) << "\n";
  s << "combined_vectors:\n";
  for (const auto& v : r.combined.vectors) {
    s << " ";
    for (double x : v) s << " " << fmt(x);
    s << "\n";
  }
  return deliver(s.str(), output, out);
}

int cmd_corpus(const std::string& output, const std::string& format,
               std::ostream& out) {
  if (output.empty()) {
    fail_validation("bad_output", "corpus requires --output DIRECTORY");
  }
  const auto paths = emit_regression_corpus(output);
  if (format == "json") {
    std::string s = "{\n  \"files\": [";
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (i) s += ", ";
      s += jstr(paths[i].string());
    }
    s += "]\n}\n";
    out << s;
    return 0;
  }
  for (const auto& p : paths) out << p.string() << "\n";
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"finite-dimensional Krein space J-frame toolkit"};
  app.name("jframe");
  app.require_subcommand(0, 1);

  std::string input_path;
  std::string output_path;
  std::string format = "text";
  std::string signature_flag;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  long long max_iters = 50000;
  long long restarts = 8;
  long long p_count = 0;
  long long q_count = 0;
  long long flag_i = 0;
  long long flag_j = 0;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("--input", input_path, "path to a JSON frame document")
          ->required();
    }
    cmd->add_option("--tolerance", tolerance,
                    "verification tolerance (default 1e-9)");
    cmd->add_option("--format", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", output_path,
                    "write the report to this file instead of stdout");
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "classify a family and report all verdicts");
  add_common(analyze, true);

  CLI::App* potential = app.add_subcommand(
      "potential", "frame potential, total potential, and the pair matrix");
  add_common(potential, true);

  CLI::App* force =
      app.add_subcommand("force", "force between two members of a family");
  add_common(force, true);
  force->add_option("--i", flag_i, "first member (1-based)")->required();
  force->add_option("--j", flag_j, "second member (1-based)")->required();

  CLI::App* minimize = app.add_subcommand(
      "minimize", "minimize the frame potential over unit-sphere families");
  add_common(minimize, false);
  minimize->add_option("--signature", signature_flag, "space signature m+n")
      ->required();
  minimize->add_option("--p", p_count, "positive part size")->required();
  minimize->add_option("--q", q_count, "negative part size")->required();
  minimize->add_option("--seed", seed, "random seed (default 0)");
  minimize->add_option("--max-iters", max_iters,
                       "iteration cap per restart (default 50000)");
  minimize->add_option("--restarts", restarts, "restart count (default 8)");

  CLI::App* generate = app.add_subcommand(
      "generate", "emit a tight J-frame document for a signature");
  add_common(generate, false);
  generate->add_option("--signature", signature_flag, "space signature m+n")
      ->required();
  generate->add_option("--p", p_count, "positive part size")->required();
  generate->add_option("--q", q_count, "negative part size")->required();
  generate->add_option("--seed", seed,
                       "0 keeps the canonical layout, otherwise rotates parts");

  CLI::App* combine = app.add_subcommand(
      "combine", "combine two Parseval J-frames with coefficients alpha, beta");
  add_common(combine, true);

  CLI::App* corpus = app.add_subcommand(
      "corpus", "write the bundled example documents into a directory");
  corpus->add_option("--output", output_path, "target directory")->required();
  corpus->add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("jframe");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    num::Tolerances tol;
    tol.verify_tol = tolerance;
    tol.validate();
    if (*analyze) {
      return cmd_analyze(input_path, tol, format, output_path, out);
    }
    if (*potential) {
      return cmd_potential(input_path, tol, format, output_path, out);
    }
    if (*force) {
      return cmd_force(input_path, flag_i, flag_j, tol, format, output_path,
                       out);
    }
    if (*minimize) {
      return cmd_minimize(signature_flag, p_count, q_count, seed, max_iters,
                          restarts, format, output_path, out);
    }
    if (*generate) {
      return cmd_generate(signature_flag, p_count, q_count, seed, format,
                          output_path, out);
    }
    if (*combine) {
      return cmd_combine(input_path, tol, format, output_path, out);
    }
    if (*corpus) {
      return cmd_corpus(output_path, format, out);
    }
    err << "error: expected a subcommand (see --help)\n";
    return 1;
  } catch (const Error& e) {
    err << "error (" << e.code() << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Validation ? 1 : 2;
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}

std::vector<std::filesystem::path> emit_regression_corpus(
    const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    fail_validation("cannot_write",
                    "cannot create directory: " + dir.string());
  }

  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double s6 = std::sqrt(6.0);

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::filesystem::path& name, const std::string& text) {
    const auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      fail_validation("cannot_write", "cannot write file: " + path.string());
    }
    f << text;
    f.flush();
    if (!f) {
      fail_validation("cannot_write",
                      "failed writing file: " + path.string());
    }
    written.push_back(path);
  };

  {
    const KreinSpace space = make_space_from_signature(2, 1);
    const std::vector<KVector> vectors = {
        {-1.0 / s2, -1.0 / s6, 0.0},
        {1.0 / s2, -1.0 / s6, 0.0},
        {0.0, 2.0 / s6, 0.0},
        {1.0 / s2, 0.0, s3 / s2},
    };
    const std::vector<std::string> labels = {"v1", "v2", "v3", "v4"};
    const std::vector<std::pair<std::string, double>> refs = {
        {"fp_j", 3.0},
        {"gamma_minus", 0.5},
        {"gamma_plus", 1.0},
        {"zeta", (3.0 + s3) / (2.0 * s2)},
    };
    emit("ex35.json", write_frame_document(space, vectors, labels, refs));
  }

  {
    const KreinSpace space = make_space_from_signature(2, 1);
    const std::vector<KVector> vectors = {
        {1.0, 0.0, -1.0 / s6},
        {0.0, 1.0, -1.0 / s6},
        {1.0, 1.0, -s2 / s3},
        {1.0 / s5, 1.0 / s5, s3 / s5},
        {1.0, 1.0, s3},
    };
    const std::vector<std::string> labels = {"f1", "f2", "f3", "f4", "f5"};
    const std::vector<std::pair<std::string, double>> refs = {
        {"gamma_minus", 2.0 / s5},
        {"gamma_plus", s6 / std::sqrt(7.0)},
    };
    emit("ex314.json", write_frame_document(space, vectors, labels, refs));
  }

  emit("discrepancies.md", std::string(R"MD(# Reference value discrepancies

The bundled documents carry `reference_values` entries copied from a
circulated worked example. Several of those entries do not match what the
definitions implemented by this library produce. `jframe analyze` compares
every reference entry against the computed quantity and lists each mismatch
under `discrepancy_notes`; the values below are the computed ones the test
suite pins.

## Five-vector family (ex314.json)

1. Reduced minimum modulus of the part Gram operators.
   Reference: `gamma_plus = sqrt(6)/sqrt(7) ~ 0.9258201`,
   `gamma_minus = 2/sqrt(5) ~ 0.8944272`.
   Computed with `G_M = P_M J P_M`: `gamma_plus = 1/2`, `gamma_minus = 1/5`.
   The reference numbers behave like data of the plain Euclidean projector
   rather than of the compressed operator `P_M J P_M`.

2. Pair potential of the first two vectors.
   Reference: `-589/1296 ~ -0.4544753`.
   Computed: `[f1,f2]^2 - (a1^2 + a2^2)^2 / 4 = 1/36 - 25/36 = -2/3`.

3. Pair potential of the two negative vectors.
   Reference: `1/5 - 676/2500 = -0.0704`.
   Computed: `1/5 - (1/4)(6/5)^2 = -4/25`.

4. Weak normalization scale factors.
   Reference: `6/5`, `3/4`, and `5` for the first, third, and fourth vector.
   Computed: a member with self product `s` needs the scale `1/sqrt(|s|)`,
   which gives `sqrt(6/5)`, `sqrt(3/4)`, and `sqrt(5)`. The reference factors
   are the squares of the correct ones.

5. Frame potential of the rescaled family.
   Reference: `(3 + 72/625 + 36/25) + 26 = 30.5552`.
   Computed with the square root scalings: `217/25 = 8.68`, which also
   matches the trace identity `tr(S+^2) + tr(S-^2)`.

## Four-vector family (ex35.json)

All reference entries for this document match the computed values, so
`jframe analyze` reports no discrepancies for it. It is included as the
clean control case.
)MD"));

  return written;
}

}  // namespace jframe::io
