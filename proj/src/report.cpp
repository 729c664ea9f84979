#include "ideals3/report.hpp"

#include <cstdio>
#include <sstream>

namespace ideals3 {

namespace {

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string trim(std::string s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

Json approx_json(std::complex<double> z, bool real) {
  if (real) return decimal(z.real());
  return Json{{"re", decimal(z.real())}, {"im", decimal(z.imag())}};
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Scalar literal(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(Rational(v.dump()));
    if (v.is_object() && v.contains("re") && v.contains("im")) {
      Scalar re = literal(v.at("re"), where + ".re"), im = literal(v.at("im"), where + ".im");
      if (!re.is_real() || !im.is_real()) throw ParseError("nested complex literal");
      return Scalar(re.re(), im.re());
    }
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string, an integer or {\"re\", \"im\"}");
}

const char* yes(bool b) { return b ? "passed" : "failed"; }

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.contains("re")) return j.at("re").get<std::string>() + "+" + j.at("im").get<std::string>() + "*i";
  if (j.is_object() && j.contains("value")) return j.at("value").get<std::string>() + " ~ " + text_of(j.at("approx"));
  return j.dump();
}

std::string vec_text(const Json& j) {
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + text_of(j[i]);
  return s + ")";
}

Json param_solution_json(const TypeIIResult& r, const char* var) {
  Json j;
  const auto& s = r.solution;
  j["outcome"] = s.kind == ParamSolution::Kind::AllScalars ? "all" : s.kind == ParamSolution::Kind::Empty ? "empty" : "finite";
  j["count"] = s.kind == ParamSolution::Kind::AllScalars ? Json("infinite") : Json(s.count());
  j["gcd"] = s.gcd.to_string(var);
  Json k;
  k["verdict"] = to_string(r.k.verdict);
  if (r.k.i0) k["i0"] = r.k.i0;
  if (!r.k.case_tag.empty()) k["case"] = r.k.case_tag;
  if (r.k.D1) k["D1"] = scalar_json(*r.k.D1);
  if (r.k.D2) k["D2"] = scalar_json(*r.k.D2);
  if (r.k.x0) k["x0"] = scalar_json(*r.k.x0);
  j["k_condition"] = k;
  return j;
}

}  // namespace

Scalar parse_scalar(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw ParseError("empty scalar literal");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  std::size_t k = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;)
    if (s[p] == '+' || s[p] == '-') {
      k = p;
      break;
    }
  std::string re = k == std::string::npos ? "0" : s.substr(0, k);
  std::string im = k == std::string::npos ? s : s.substr(k);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return Scalar(parse_rational(re), parse_rational(im));
}

Json scalar_json(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  return Json{{"re", to_string(s.re())}, {"im", to_string(s.im())}};
}

Json algebraic_json(const Algebraic& a) {
  if (a.in_base()) return scalar_json(a.base_value());
  const auto& f = *a.field();
  Json j;
  j["value"] = a.to_string();
  j["minpoly"] = f.minpoly().to_string("t");
  if (f.region()) {
    const auto& r = *f.region();
    Json reg;
    reg["re"] = {decimal(Rational(r.re_lo).get_d()), decimal(Rational(r.re_hi).get_d())};
    if (r.box) reg["im"] = {decimal(Rational(r.im_lo).get_d()), decimal(Rational(r.im_hi).get_d())};
    j["root_region"] = reg;
  }
  auto z = a.approx();
  j["approx"] = approx_json(z, f.mode() == FieldMode::RealRational);
  return j;
}

Json vector_json(const Vec3<Algebraic>& v) { return Json::array({algebraic_json(v[0]), algebraic_json(v[1]), algebraic_json(v[2])}); }
Json vector_json(const Vec3<Scalar>& v) { return Json::array({scalar_json(v[0]), scalar_json(v[1]), scalar_json(v[2])}); }

TensorDocument parse_tensor_document(const std::string& text, std::optional<FieldMode> mode_override) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed document at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + e.what(),
                     l, c);
  }
  return parse_tensor_document(doc, mode_override);
}

TensorDocument parse_tensor_document(const Json& doc, std::optional<FieldMode> mode_override) {
  if (!doc.is_object()) throw ParseError("document must be an object");
  FieldMode mode = FieldMode::RealRational;
  if (doc.contains("field_mode")) {
    if (!doc["field_mode"].is_string()) throw ParseError("field_mode must be a string");
    mode = parse_field_mode(doc["field_mode"].get<std::string>());
  }
  if (mode_override) mode = *mode_override;
  if (!doc.contains("omega")) throw ParseError("missing omega");
  const Json& om = doc["omega"];
  TensorDocument d{StructureTensor(mode), "", ""};
  if (doc.contains("name") && doc["name"].is_string()) d.name = doc["name"].get<std::string>();
  if (doc.contains("provenance") && doc["provenance"].is_string()) d.provenance = doc["provenance"].get<std::string>();
  auto shape_err = [](const std::string& where) { return ParseError(where + ": expected an array of 3 entries"); };
  if (!om.is_array() || om.size() != 3) throw shape_err("omega");
  for (int i = 0; i < 3; ++i) {
    std::string wi = "omega[" + std::to_string(i + 1) + "]";
    if (!om[i].is_array() || om[i].size() != 3) throw shape_err(wi);
    for (int j = 0; j < 3; ++j) {
      std::string wj = wi + "[" + std::to_string(j + 1) + "]";
      if (!om[i][j].is_array() || om[i][j].size() != 3) throw shape_err(wj);
      for (int k = 0; k < 3; ++k) {
        std::string wk = wj + "[" + std::to_string(k + 1) + "]";
        Scalar v = literal(om[i][j][k], wk);
        try {
          d.tensor.set(i, j, k, v);
        } catch (const InvalidParameters& e) {
          throw ParseError(wk + ": " + e.what());
        }
      }
    }
  }
  return d;
}

Json tensor_document_json(const TensorDocument& d) {
  Json j;
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.provenance.empty()) j["provenance"] = d.provenance;
  j["field_mode"] = to_string(d.tensor.mode());
  Json om = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json a = Json::array();
    for (int jj = 0; jj < 3; ++jj) {
      Json b = Json::array();
      for (int k = 0; k < 3; ++k) b.push_back(scalar_json(d.tensor(i, jj, k)));
      a.push_back(b);
    }
    om.push_back(a);
  }
  j["omega"] = om;
  return j;
}

Analysis analyze(const StructureTensor& t) {
  Analysis a{t, annihilator(t), enumerate_onedim(t), {}, enumerate_twodim(t)};
  a.census = onedim_census(t, a.one);
  return a;
}

std::string IdealRef::describe() const { return line ? ideals3::describe(*line) : ideals3::describe(*plane); }

std::vector<IdealRef> listed_ideals(const Analysis& a) {
  std::vector<IdealRef> out;
  for (const auto& l : a.one.lines) out.push_back({l.line, std::nullopt});
  for (const auto& p : a.two.planes()) out.push_back({std::nullopt, p});
  return out;
}

bool recheck(const Analysis& a) {
  const auto& t = a.tensor;
  for (const auto& r : listed_ideals(a))
    if (r.line ? !is_ideal_line(t, *r.line) : !is_ideal_plane(t, *r.plane)) return false;
  if (a.one.family) {
    const auto& b = a.one.family->basis;
    for (const auto& v : {b[0], b[1], b[0] + b[1]})
      if (!is_ideal_line(t, make_line(v))) return false;
  }
  for (const auto& f : a.two.type_IV.families) {
    for (const auto& p : a.two.sis.polys)
      if (!component_satisfies(f, p)) return false;
    if (auto s = sample_point(f))
      if (!is_ideal_plane(t, make_plane(PlaneKind::TypeIV, s->x, s->y))) return false;
  }
  return true;
}

Json report_json(const TensorDocument& doc, const Analysis& a) {
  const auto& t = a.tensor;
  Json r;
  r["input"] = tensor_document_json(doc);
  r["commutative"] = t.is_commutative();
  r["zero_product"] = t.is_zero();
  if (t.is_zero()) r["note"] = "zero product: every subspace is an ideal";

  Json ann;
  ann["dimension"] = a.annihilator.dim;
  ann["basis"] = Json::array();
  for (const auto& v : a.annihilator.basis) ann["basis"].push_back(vector_json(v));
  r["annihilator"] = ann;

  int id = 0;
  Json one;
  one["outcome"] = a.one.infinite() ? "infinite" : "finite";
  one["count"] = a.one.infinite() ? Json("infinite") : Json(static_cast<int>(a.one.lines.size()));
  if (a.one.whole_space) one["family"] = Json{{"kind", "whole-space"}, {"description", "every line is an ideal"}};
  if (a.one.family) {
    const auto& f = *a.one.family;
    Json fj;
    fj["kind"] = "plane";
    fj["normal"] = vector_json(f.normal);
    fj["plane"] = describe(f.plane);
    fj["basis"] = Json::array({vector_json(f.basis[0]), vector_json(f.basis[1])});
    fj["description"] = "every line in this plane is an ideal";
    bool ok = true;
    for (const auto& v : {f.basis[0], f.basis[1], f.basis[0] + f.basis[1]}) ok = ok && is_ideal_line(t, make_line(v));
    fj["verification"] = yes(ok);
    one["family"] = fj;
  }
  one["lines"] = Json::array();
  for (const auto& l : a.one.lines) {
    Json lj;
    lj["id"] = ++id;
    lj["direction"] = vector_json(l.line.dir);
    Json ev;
    for (int q = 0; q < 6; ++q) ev[matrix_label(q)] = algebraic_json(l.eigenvalues[q]);
    lj["eigenvalues"] = ev;
    lj["verification"] = yes(is_ideal_line(t, l.line));
    one["lines"].push_back(lj);
  }
  r["one_dimensional"] = one;

  const auto& two = a.two;
  Json tj;
  tj["outcome"] = two.infinite ? "infinite" : "finite";
  tj["finite_total"] = two.finite_total;
  Json t1;
  t1["present"] = two.type_I;
  if (two.type_I) {
    t1["id"] = ++id;
    t1["verification"] = yes(is_ideal_plane(t, make_plane<Scalar>(PlaneKind::TypeI)));
  }
  tj["type_I"] = t1;
  auto param_type = [&](const TypeIIResult& res, PlaneKind kind) {
    Json j = param_solution_json(res, "x");
    j["ideals"] = Json::array();
    for (const auto& x : res.solution.values) {
      Json e;
      e["id"] = ++id;
      e["x"] = algebraic_json(x);
      e["verification"] = yes(is_ideal_plane(t, make_plane(kind, x)));
      j["ideals"].push_back(e);
    }
    return j;
  };
  tj["type_II"] = param_type(two.type_II, PlaneKind::TypeII);
  tj["type_III"] = param_type(two.type_III, PlaneKind::TypeIII);
  const auto& iv = two.type_IV;
  Json t4;
  t4["outcome"] = iv.kind == TypeIVResult::Kind::Infinite ? "infinite" : iv.kind == TypeIVResult::Kind::Empty ? "empty" : "finite";
  t4["path"] = iv.path;
  t4["ideals"] = Json::array();
  for (const auto& p : iv.points) {
    Json e;
    e["id"] = ++id;
    e["x"] = algebraic_json(p.x);
    e["y"] = algebraic_json(p.y);
    e["verification"] = yes(is_ideal_plane(t, make_plane(PlaneKind::TypeIV, p.x, p.y)));
    t4["ideals"].push_back(e);
  }
  t4["families"] = Json::array();
  for (const auto& f : iv.families) {
    Json e;
    e["shape"] = to_string(f.shape);
    e["description"] = describe(f);
    if (f.shape != CurveShape::WholePlane) e["polynomial"] = f.poly.to_string();
    if (f.value) e["value"] = algebraic_json(*f.value);
    bool ok = true;
    for (const auto& p : two.sis.polys) ok = ok && component_satisfies(f, p);
    if (auto s = sample_point(f)) {
      e["sample"] = Json{{"x", algebraic_json(s->x)}, {"y", algebraic_json(s->y)}};
      ok = ok && is_ideal_plane(t, make_plane(PlaneKind::TypeIV, s->x, s->y));
    }
    e["verification"] = yes(ok);
    t4["families"].push_back(e);
  }
  t4["discarded_y_zero"] = iv.discarded_y_zero;
  tj["type_IV"] = t4;
  r["two_dimensional"] = tj;

  Json d;
  d["commutative"] = t.is_commutative();
  d["rank_M"] = two.sis.rank;
  d["symmetrized"] = !iv.commutative;
  d["rank_T"] = iv.tsys.rank_T;
  d["rank_TV"] = iv.tsys.rank_TV;
  d["det_T"] = scalar_json(iv.tsys.det);
  if (iv.tsys.candidate) d["dt_holds"] = iv.tsys.dt_holds;
  d["k_condition_II"] = to_string(two.type_II.k.verdict);
  d["k_condition_III"] = to_string(two.type_III.k.verdict);
  d["annihilator_dimension"] = a.census.ann_dim;
  r["diagnostics"] = d;
  return r;
}

std::string report_text(const TensorDocument& doc, const Analysis& a) {
  Json r = report_json(doc, a);
  std::ostringstream o;
  if (!doc.name.empty()) o << "algebra: " << doc.name << "\n";
  o << "field: " << to_string(a.tensor.mode()) << ", commutative: " << (r["commutative"].get<bool>() ? "yes" : "no")
    << "\n";
  if (r.contains("note")) o << r["note"].get<std::string>() << "\n";
  o << "annihilator dimension: " << a.annihilator.dim << "\n";
  const auto& one = r["one_dimensional"];
  o << "one-dimensional ideals: " << (a.one.infinite() ? "infinitely many" : std::to_string(a.one.lines.size())) << "\n";
  if (one.contains("family")) o << "  family: " << one["family"]["description"].get<std::string>()
                                << (one["family"].contains("plane") ? " (" + one["family"]["plane"].get<std::string>() + ")" : "")
                                << "\n";
  for (const auto& l : one["lines"])
    o << "  [" << l["id"].get<int>() << "] span" << vec_text(l["direction"]) << "  " << l["verification"].get<std::string>() << "\n";
  const auto& two = r["two_dimensional"];
  o << "two-dimensional ideals: " << (a.two.infinite ? "infinitely many" : std::to_string(a.two.finite_total)) << "\n";
  o << "  type I: " << (a.two.type_I ? "present" : "absent");
  if (a.two.type_I) o << "  [" << two["type_I"]["id"].get<int>() << "]";
  o << "\n";
  for (const char* k : {"type_II", "type_III"}) {
    const auto& tt = two[k];
    o << "  " << (std::string(k) == "type_II" ? "type II" : "type III") << ": " << tt["outcome"].get<std::string>()
      << " (K: " << tt["k_condition"]["verdict"].get<std::string>() << ")\n";
    for (const auto& e : tt["ideals"]) o << "    [" << e["id"].get<int>() << "] x = " << text_of(e["x"]) << "\n";
  }
  const auto& t4 = two["type_IV"];
  o << "  type IV: " << t4["outcome"].get<std::string>() << " (path " << t4["path"].get<std::string>() << ")\n";
  for (const auto& e : t4["ideals"])
    o << "    [" << e["id"].get<int>() << "] x = " << text_of(e["x"]) << ", y = " << text_of(e["y"]) << "\n";
  for (const auto& f : t4["families"]) o << "    family: " << f["description"].get<std::string>() << "\n";
  const auto& d = r["diagnostics"];
  o << "diagnostics: rank M = " << d["rank_M"].get<int>() << ", rank T = " << d["rank_T"].get<int>()
    << ", rank (T|V) = " << d["rank_TV"].get<int>() << ", det T = " << text_of(d["det_T"]) << "\n";
  return o.str();
}

Json quotient_json(const QuotientAlgebra& q) {
  Json j;
  j["ideal"] = q.ideal_description();
  j["dimension"] = q.dim();
  j["complement"] = Json::array();
  for (const auto& c : q.complement()) j["complement"].push_back(vector_json(c));
  Json tab = Json::array();
  for (const auto& row : q.table()) {
    Json r = Json::array();
    for (const auto& cell : row) {
      Json c = Json::array();
      for (const auto& v : cell) c.push_back(algebraic_json(v));
      r.push_back(c);
    }
    tab.push_back(r);
  }
  j["table"] = tab;
  return j;
}

std::string quotient_text(const QuotientAlgebra& q) {
  std::ostringstream o;
  o << "quotient by " << q.ideal_description() << " (dimension " << q.dim() << ")\n";
  for (int a = 0; a < q.dim(); ++a)
    for (int b = 0; b < q.dim(); ++b) {
      o << "  f" << a + 1 << " f" << b + 1 << " =";
      bool any = false;
      for (int c = 0; c < q.dim(); ++c) {
        const auto& v = q.table()[a][b][c];
        if (v.is_zero()) continue;
        o << (any ? " + " : " ") << "(" << v.to_string() << ") f" << c + 1;
        any = true;
      }
      if (!any) o << " 0";
      o << "\n";
    }
  return o.str();
}

Json line_certificate_json(const LineCertificate<Algebraic>& c) {
  Json j;
  j["ideal"] = c.ideal;
  j["checks"] = Json::array();
  for (const auto& r : c.checks) {
    Json e;
    e["matrix"] = r.matrix;
    e["image"] = vector_json(r.image);
    e["minors"] = Json::array({algebraic_json(r.minors[0]), algebraic_json(r.minors[1]), algebraic_json(r.minors[2])});
    e["ok"] = r.ok();
    j["checks"].push_back(e);
  }
  return j;
}

Json plane_certificate_json(const PlaneCertificate<Algebraic>& c) {
  Json j;
  j["ideal"] = c.ideal;
  j["checks"] = Json::array();
  for (const auto& r : c.checks) {
    Json e;
    e["product"] = r.label;
    e["value"] = vector_json(r.product);
    e["det"] = algebraic_json(r.det);
    e["ok"] = r.det.is_zero();
    j["checks"].push_back(e);
  }
  return j;
}

}  // namespace ideals3
