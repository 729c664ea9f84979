// ideals3: enumerate and verify the ideals of a 3-dimensional algebra.
#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ideals3/families.hpp"
#include "ideals3/report.hpp"

namespace fs = std::filesystem;
using namespace ideals3;

namespace {

constexpr int kOk = 0, kFail = 1, kParse = 2, kInconsistent = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Common {
  std::string input;
  std::vector<std::string> family;
  std::string field;
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* c, Common& o, bool with_input) {
  if (with_input) c->add_option("input", o.input, "tensor document (JSON)");
  c->add_option("--family", o.family, "built-in family: NAME [PARAMS...]")->expected(1, -1);
  c->add_option("--field", o.field, "field mode override")->check(CLI::IsMember({"real", "complex"}));
  c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  c->add_option("-o,--output", o.output, "write output here instead of standard output");
}

std::optional<FieldMode> field_override(const Common& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_field_mode(o.field);
}

TensorDocument load(const Common& o) {
  auto mode = field_override(o);
  if (!o.family.empty()) {
    if (!o.input.empty()) throw ParseError("give either an input file or --family, not both");
    std::vector<Scalar> params;
    for (std::size_t i = 1; i < o.family.size(); ++i) params.push_back(parse_scalar(o.family[i]));
    FamilySpec spec;
    try {
      spec = family_from_name(o.family[0], params, mode.value_or(FieldMode::RealRational));
    } catch (const InvalidParameters& e) {
      throw ParseError(e.what());
    }
    std::string prov = o.family[0];
    for (std::size_t i = 1; i < o.family.size(); ++i) prov += " " + o.family[i];
    return {build(spec), o.family[0], "family " + prov};
  }
  if (o.input.empty()) throw ParseError("no input: give a tensor document or --family");
  return parse_tensor_document(read_file(o.input), mode);
}

void emit(const Common& o, const std::string& body) {
  if (o.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw ParseError("cannot write " + o.output);
  out << body;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const Common& o, bool check, int quotient_id) {
  TensorDocument doc = load(o);
  Analysis a = analyze(doc.tensor);
  Json report = report_json(doc, a);
  std::string text = o.format == "text" ? report_text(doc, a) : "";
  int rc = kOk;
  if (check) {
    bool ok = recheck(a);
    report["check"] = ok ? "passed" : "failed";
    text += std::string("check: ") + (ok ? "passed" : "failed") + "\n";
    if (!ok) rc = kInconsistent;
  }
  if (quotient_id > 0) {
    auto ideals = listed_ideals(a);
    if (quotient_id > static_cast<int>(ideals.size()))
      throw ParseError("--quotient " + std::to_string(quotient_id) + ": only " + std::to_string(ideals.size()) +
                       " isolated ideals are listed");
    const auto& ref = ideals[quotient_id - 1];
    QuotientAlgebra q = ref.line ? quotient(doc.tensor, *ref.line) : quotient(doc.tensor, *ref.plane);
    report["quotient"] = quotient_json(q);
    text += quotient_text(q);
  }
  emit(o, o.format == "text" ? text : dump(report));
  return rc;
}

int cmd_verify(const Common& o, const std::vector<std::string>& line, const std::vector<std::string>& plane) {
  TensorDocument doc = load(o);
  if (line.empty() == plane.empty()) throw ParseError("give exactly one of --line or --plane");
  Json out;
  bool ideal = false;
  std::ostringstream text;
  if (!line.empty()) {
    if (line.size() != 3) throw ParseError("--line takes three coordinates");
    Vec3<Algebraic> u{Algebraic(parse_scalar(line[0])), Algebraic(parse_scalar(line[1])), Algebraic(parse_scalar(line[2]))};
    Line l;
    try {
      l = make_line(u);
    } catch (const DependentVectors& e) {
      throw ParseError(e.what());
    }
    auto cert = check_line(doc.tensor, l.dir);
    ideal = cert.ideal;
    out["subspace"] = describe(l);
    out["ideal"] = ideal;
    out["certificate"] = line_certificate_json(cert);
    text << describe(l) << ": " << (ideal ? "ideal" : "not an ideal") << "\n";
    for (const auto& c : cert.checks)
      text << "  " << c.matrix << ": M u = (" << c.image[0].to_string() << ", " << c.image[1].to_string() << ", "
           << c.image[2].to_string() << "), minors " << c.minors[0].to_string() << " " << c.minors[1].to_string() << " "
           << c.minors[2].to_string() << (c.ok() ? "" : "  <- violation") << "\n";
  } else {
    PlaneKind kind = parse_plane_kind(plane[0]);
    std::size_t need = kind == PlaneKind::TypeI ? 1 : kind == PlaneKind::TypeIV ? 3 : 2;
    if (plane.size() != need) throw ParseError("--plane " + plane[0] + " takes " + std::to_string(need - 1) + " parameters");
    Algebraic x = need > 1 ? Algebraic(parse_scalar(plane[1])) : Algebraic();
    Algebraic y = need > 2 ? Algebraic(parse_scalar(plane[2])) : Algebraic();
    Plane p;
    try {
      p = make_plane(kind, x, y);
    } catch (const InvalidParameters& e) {
      throw ParseError(e.what());
    }
    auto cert = check_plane(doc.tensor, p);
    ideal = cert.ideal;
    out["subspace"] = describe(p);
    out["ideal"] = ideal;
    out["certificate"] = plane_certificate_json(cert);
    text << describe(p) << ": " << (ideal ? "ideal" : "not an ideal") << "\n";
    for (const auto& c : cert.checks)
      text << "  det(" << c.label << " | u | v) = " << c.det.to_string() << (c.det.is_zero() ? "" : "  <- violation") << "\n";
  }
  emit(o, o.format == "text" ? text.str() : dump(out));
  return ideal ? kOk : kFail;
}

std::vector<fs::path> batch_inputs(const std::string& where) {
  std::vector<fs::path> files;
  fs::path p(where);
  if (fs::is_directory(p)) {
    for (const auto& e : fs::directory_iterator(p))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
  }
  std::string text = read_file(where);
  fs::path base = p.parent_path();
  auto resolve = [&](const std::string& s) { return fs::path(s).is_absolute() ? fs::path(s) : base / s; };
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json arr;
    try {
      arr = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("manifest: ") + e.what());
    }
    for (const auto& s : arr) files.push_back(resolve(s.get<std::string>()));
  } else {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) {
      l.erase(std::remove(l.begin(), l.end(), '\r'), l.end());
      auto b = l.find_first_not_of(" \t");
      if (b == std::string::npos || l[b] == '#') continue;
      files.push_back(resolve(l.substr(b, l.find_last_not_of(" \t") - b + 1)));
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return files;
}

int cmd_batch(const Common& o, const std::string& where, const std::string& out_dir, int jobs) {
  auto files = batch_inputs(where);
  auto mode = field_override(o);
  std::vector<Json> rows(files.size());
  std::atomic<std::size_t> next{0};
  std::mutex fs_mutex;
  auto work = [&]() {
    for (std::size_t i; (i = next++) < files.size();) {
      Json row;
      row["file"] = files[i].filename().string();
      try {
        TensorDocument doc = parse_tensor_document(read_file(files[i].string()), mode);
        Analysis a = analyze(doc.tensor);
        row["status"] = "ok";
        row["one_dimensional"] = a.one.infinite() ? Json("infinite") : Json(static_cast<int>(a.one.lines.size()));
        row["two_dimensional"] = a.two.infinite ? Json("infinite") : Json(a.two.finite_total);
        row["annihilator_dimension"] = a.annihilator.dim;
        if (!out_dir.empty()) {
          std::string body = o.format == "text" ? report_text(doc, a) : dump(report_json(doc, a));
          fs::path target = fs::path(out_dir) / (files[i].stem().string() + (o.format == "text" ? ".report.txt" : ".report.json"));
          std::lock_guard<std::mutex> g(fs_mutex);
          std::ofstream(target, std::ios::binary) << body;
        }
      } catch (const ParseError& e) {
        row["status"] = "parse-error";
        row["message"] = e.what();
      } catch (const InconsistencyDetected& e) {
        row["status"] = "inconsistency";
        row["message"] = e.what();
      } catch (const std::exception& e) {
        row["status"] = "error";
        row["message"] = e.what();
      }
      rows[i] = row;
    }
  };
  if (!out_dir.empty()) fs::create_directories(out_dir);
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int failed = 0;
  Json summary;
  summary["total"] = files.size();
  summary["files"] = Json::array();
  for (auto& r : rows) {
    if (r["status"] != "ok") ++failed;
    summary["files"].push_back(r);
  }
  summary["failed"] = failed;
  if (o.format == "text") {
    std::ostringstream t;
    t << "file\tstatus\t1D\t2D\n";
    for (const auto& r : rows) {
      t << r["file"].get<std::string>() << "\t" << r["status"].get<std::string>() << "\t";
      if (r["status"] == "ok")
        t << r["one_dimensional"].dump() << "\t" << r["two_dimensional"].dump();
      else
        t << "-\t-\t" << r["message"].get<std::string>();
      t << "\n";
    }
    t << "total " << files.size() << ", failed " << failed << "\n";
    emit(o, t.str());
  } else {
    emit(o, dump(summary));
  }
  return failed ? kFail : kOk;
}

int cmd_family(const Common& o, const std::vector<std::string>& args) {
  Common c = o;
  c.family = args;
  TensorDocument doc = load(c);
  emit(o, dump(tensor_document_json(doc)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideals of three-dimensional algebras given by structure constants"};
  app.require_subcommand(1);

  Common classify_o, verify_o, batch_o, family_o;
  bool check = false;
  int quotient_id = 0;
  auto* classify = app.add_subcommand("classify", "enumerate all 1- and 2-dimensional ideals");
  add_common(classify, classify_o, true);
  classify->add_flag("--check", check, "re-verify every reported ideal");
  classify->add_option("--quotient", quotient_id, "print the quotient by the listed ideal with this id")->check(CLI::PositiveNumber);

  std::vector<std::string> line, plane;
  auto* verify = app.add_subcommand("verify", "check whether one subspace is an ideal");
  add_common(verify, verify_o, true);
  verify->add_option("--line", line, "three coordinates")->expected(3);
  verify->add_option("--plane", plane, "TYPE [x] [y] with TYPE in I, II, III, IV")->expected(1, 3);

  std::string where, out_dir;
  int jobs = 1;
  auto* batch = app.add_subcommand("batch", "classify every document in a directory or manifest");
  batch->add_option("source", where, "directory of .json documents, or a manifest file")->required();
  batch->add_option("--out-dir", out_dir, "write one report per input here");
  batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--field", batch_o.field, "field mode override")->check(CLI::IsMember({"real", "complex"}));
  batch->add_option("--format", batch_o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  batch->add_option("-o,--output", batch_o.output, "write the summary here");

  std::vector<std::string> fam_args;
  auto* family = app.add_subcommand("family", "print the tensor document of a built-in family");
  family->add_option("name", fam_args, "NAME [PARAMS...]")->required()->expected(1, -1);
  family->add_option("--field", family_o.field, "field mode")->check(CLI::IsMember({"real", "complex"}));
  family->add_option("-o,--output", family_o.output, "write the document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*classify) return cmd_classify(classify_o, check, quotient_id);
    if (*verify) return cmd_verify(verify_o, line, plane);
    if (*batch) return cmd_batch(batch_o, where, out_dir, jobs);
    if (*family) return cmd_family(family_o, fam_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InconsistencyDetected& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const NotAnIdeal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kOk;
}
