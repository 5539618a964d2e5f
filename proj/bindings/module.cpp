#include "paradec/harness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>

namespace py = pybind11;
using namespace paradec;

namespace {

DescPtr field_of(const std::string& name) { return field_from_shorthand(name); }

py::object magnitude_py(const std::string& field, const std::string& value) {
    DescPtr d = field_of(field);
    Magnitude m = FieldElement::parse(d, value).magnitude();
    if (m.is_zero()) return py::none();
    return py::make_tuple(m.base(), m.exp());
}

std::string arith_py(const std::string& field, const std::string& op, const std::string& x,
                     const std::string& y) {
    DescPtr d = field_of(field);
    FieldElement a = FieldElement::parse(d, x), b = FieldElement::parse(d, y);
    if (op == "add") return (a + b).str();
    if (op == "sub") return (a - b).str();
    if (op == "mul") return (a * b).str();
    if (op == "div") return (a / b).str();
    throw std::invalid_argument("op must be add, sub, mul or div");
}

py::dict make_field_py(const std::string& field) {
    DescPtr d = field_of(field);
    ValuationRing ring = make_field(d);
    py::dict out;
    out["descriptor"] = d->str();
    out["uniformizer"] = ring.uniformizer ? py::cast(ring.uniformizer->str()) : py::none();
    out["residue_cardinality"] =
        ring.residue_cardinality ? py::cast(ring.residue_cardinality->str()) : py::none();
    return out;
}

std::string reduce_concat_py(const std::string& u, const std::string& v) {
    return (Word::parse(u) * Word::parse(v)).str();
}

py::dict canonical_class_py(const std::string& w) {
    ConjClass cls = canonical_class(Word::parse(w));
    py::dict out;
    out["rep"] = cls.rep.str();
    out["syllables"] = cls.form.str();
    out["la"] = cls.la;
    out["lb"] = cls.lb;
    out["l"] = cls.l();
    return out;
}

std::vector<std::string> enumerate_reduced_py(int maxlen) {
    std::vector<std::string> out;
    for (const Word& w : enumerate_reduced(maxlen)) out.push_back(w.str());
    return out;
}

std::string phi_py(const std::string& w, long characteristic) {
    return phi(Word::parse(w), characteristic).str();
}

py::dict verify_fricke_py(const std::string& field, const std::string& w,
                          const std::vector<std::string>& a, const std::vector<std::string>& b) {
    DescPtr d = field_of(field);
    auto to_mat = [&](const std::vector<std::string>& entries) {
        std::vector<FieldElement> es;
        for (const auto& s : entries) es.push_back(FieldElement::parse(d, s));
        int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(es.size()))));
        return Mat::from_entries(d, n, std::move(es));
    };
    FrickeReport r = verify_fricke(Word::parse(w), to_mat(a), to_mat(b));
    py::dict out;
    out["lhs"] = r.lhs.str();
    out["rhs"] = r.rhs.str();
    out["equal"] = r.equal;
    return out;
}

std::vector<std::string> magnus_py(long i) {
    Mat m = magnus(field_of("q2"), i);
    return m.entry_strings();
}

std::vector<std::string> cover_ball_py(const std::string& field, int n, int i, int j) {
    DescPtr d = field_of(field);
    ValuationRing ring = make_field(d);
    std::vector<std::string> out;
    for (const Vec& v : cover_ball(i, j, n, ring)) out.push_back(vec_str(v));
    return out;
}

std::string build_certificate_py(const std::string& field, int n, const std::string& target,
                                 long long radius_exp, long long eps_exp) {
    BuildParams params;
    params.field = field_of(field);
    params.n = n;
    params.target_id = target;
    params.radius_exp = radius_exp;
    params.eps_exp = eps_exp;
    return build_certificate(params).to_json().dump(2);
}

std::string verify_certificate_py(const std::string& cert_json, int depth) {
    Report rep = run_verify_decomposition(Json::parse(cert_json), depth, "default");
    return rep.to_json().dump(2);
}

py::dict psi_magnitude_py(long characteristic, const std::string& cls_word) {
    PsiSetting s = eq_fgh_setting(characteristic);
    PsiReport r = psi_magnitude(canonical_class(Word::parse(cls_word)), s.f, s.g, s.h);
    py::dict out;
    out["actual"] = r.actual.str();
    out["predicted"] = r.predicted.str();
    out["equal"] = r.equal;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact non-Archimedean valuations, trace polynomials, and paradoxical-"
              "decomposition certificates";
    m.attr("__version__") = kToolVersion;

    m.def("make_field", &make_field_py, py::arg("field"),
          "uniformizer and residue data for a field shorthand");
    m.def("magnitude", &magnitude_py, py::arg("field"), py::arg("value"),
          "(base, exponent) with |x| = base**(-exponent), or None for 0");
    m.def("arith", &arith_py, py::arg("field"), py::arg("op"), py::arg("x"), py::arg("y"));

    m.def("reduce_concat", &reduce_concat_py, py::arg("u"), py::arg("v"));
    m.def("canonical_class", &canonical_class_py, py::arg("word"));
    m.def("enumerate_reduced", &enumerate_reduced_py, py::arg("maxlen"));

    m.def("phi", &phi_py, py::arg("word"), py::arg("characteristic") = 0,
          "trace polynomial of the conjugacy class, canonical rendering");
    m.def("verify_fricke", &verify_fricke_py, py::arg("field"), py::arg("word"), py::arg("a"),
          py::arg("b"));
    m.def("psi_magnitude", &psi_magnitude_py, py::arg("characteristic"), py::arg("cls"));

    m.def("magnus", &magnus_py, py::arg("i"));
    m.def("cover_ball", &cover_ball_py, py::arg("field"), py::arg("n"), py::arg("i"), py::arg("j"));

    m.def("build_certificate", &build_certificate_py, py::arg("field"), py::arg("n"),
          py::arg("target"), py::arg("radius_exp") = 0, py::arg("eps_exp") = 1,
          "certificate JSON for the target");
    m.def("verify_certificate", &verify_certificate_py, py::arg("certificate_json"),
          py::arg("depth") = 5, "verification report JSON");
}
