#pragma once
#include <json.hpp>
#include <optional>
#include <string>

#include "ideals3/onedim.hpp"
#include "ideals3/twodim.hpp"

namespace ideals3 {

using Json = nlohmann::ordered_json;

// "3/2", "-i", "1/2+3*i", "2-1/3*i".
Scalar parse_scalar(const std::string& text);

Json scalar_json(const Scalar& s);
Json algebraic_json(const Algebraic& a);
Json vector_json(const Vec3<Algebraic>& v);
Json vector_json(const Vec3<Scalar>& v);

struct TensorDocument {
  StructureTensor tensor;
  std::string name, provenance;
};

// omega[i][j][k] with e_i e_j = sum_k omega[i][j][k] e_k (1-based in the text, nested arrays here).
TensorDocument parse_tensor_document(const std::string& text, std::optional<FieldMode> mode_override = std::nullopt);
TensorDocument parse_tensor_document(const Json& doc, std::optional<FieldMode> mode_override = std::nullopt);
Json tensor_document_json(const TensorDocument& d);

struct Analysis {
  StructureTensor tensor;
  Subspace annihilator;
  OneDimEnumeration one;
  OneDimCensus census;
  TwoDimEnumeration two;
};
Analysis analyze(const StructureTensor& t);

// Every isolated ideal in report order: lines first, then planes by type.
struct IdealRef {
  std::optional<Line> line;
  std::optional<Plane> plane;
  std::string describe() const;
};
std::vector<IdealRef> listed_ideals(const Analysis& a);
// Re-runs the exact membership test on every listed ideal and family witness.
bool recheck(const Analysis& a);

Json report_json(const TensorDocument& doc, const Analysis& a);
std::string report_text(const TensorDocument& doc, const Analysis& a);

Json quotient_json(const QuotientAlgebra& q);
std::string quotient_text(const QuotientAlgebra& q);

Json line_certificate_json(const LineCertificate<Algebraic>& c);
Json plane_certificate_json(const PlaneCertificate<Algebraic>& c);

}  // namespace ideals3
