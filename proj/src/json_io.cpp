#include "quadstar/json_io.hpp"

#include "quadstar/errors.hpp"

namespace quadstar {

namespace {

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (!j.is_string()) throw InvalidParams("expected an integer or a decimal string, got " + j.dump());
    const auto& s = j.get_ref<const std::string&>();
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw InvalidParams("malformed integer '" + s + "'");
    return v;
}

std::string text(const mpz_class& v) { return v.get_str(); }

}  // namespace

Json to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(text(c));
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidParams("polynomial must be a coefficient array");
    std::vector<mpz_class> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(integer_from_json(c));
    return IntPoly(std::move(coeffs));
}

Json to_json(const FactoredPoly& f) {
    Json arr = Json::array();
    for (const auto& factor : f)
        arr.push_back({{"coeffs", to_json(factor.poly)}, {"multiplicity", factor.multiplicity}});
    return arr;
}

FactoredPoly factored_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidParams("factor list must be an array");
    FactoredPoly out;
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("coeffs") || !rec.contains("multiplicity") ||
            !rec["multiplicity"].is_number_unsigned())
            throw InvalidParams("malformed factor record " + rec.dump());
        out.push_back({poly_from_json(rec["coeffs"]), rec["multiplicity"].get<unsigned>()});
    }
    return out;
}

Json to_json(const QuadraticCertificate& c) {
    Json j;
    j["accepting"] = c.accepting();
    j["factors"] = to_json(c.factors);
    j["factored"] = to_factored_string(c.factors);
    j["residual"] = {{"coeffs", to_json(c.residual)}};
    return j;
}

Json to_json(const SpectralClass& c) {
    Json j;
    j["kind"] = std::string(to_string(c.kind));
    if (c.c) j["c"] = text(*c.c);
    if (c.a) j["a"] = text(*c.a);
    if (c.b) j["b"] = text(*c.b);
    if (const auto d = c.delta()) {
        j["delta"] = text(*d);
        j["delta_squarefree"] = *c.delta_squarefree();
    }
    const Json cert = to_json(c.certificate);
    for (const auto& [k, v] : cert.items()) j[k] = v;
    return j;
}

Json spec_json(const StarlikeSpec& s) { return Json(s.leg_counts()); }

Json to_json(const FamilyInstance& f) {
    Json j;
    j["id"] = std::string(to_string(f.id));
    j["form"] = is_form_one(f.id) ? "I" : "II";
    j["spec"] = spec_json(f.spec);
    j["vertices"] = f.spec.vertex_count();
    Json params = Json::object();
    for (const auto& [k, v] : f.params) params[k] = std::to_string(v);
    j["params"] = params;
    j["factors"] = to_json(f.predicted);
    j["factored"] = to_factored_string(f.predicted);
    j["delta"] = f.delta ? Json(text(*f.delta)) : Json(nullptr);
    j["delta_squarefree"] = f.delta_squarefree ? Json(*f.delta_squarefree) : Json(nullptr);
    j["integral"] = f.integral;
    return j;
}

Json to_json(const PellSolution& s) { return {{"x", text(s.x)}, {"y", text(s.y)}, {"N", text(s.N)}}; }

Json to_json(const CertificationReport& r) {
    Json j;
    j["max_vertices"] = r.max_vertices;
    j["total_specs"] = r.total_specs;
    j["quadratic_count"] = r.quadratic_specs.size();

    Json quad = Json::array();
    for (const auto& q : r.quadratic_specs) {
        Json e;
        e["spec"] = spec_json(q.spec);
        e["vertices"] = q.spec.vertex_count();
        e["tag"] = q.tag;
        e["class"] = to_json(q.cls);
        e["family"] = q.family ? to_json(*q.family) : Json(nullptr);
        e["diameter"] = q.diameter;
        quad.push_back(std::move(e));
    }
    j["quadratic_specs"] = std::move(quad);

    Json ce = Json::array();
    for (const auto& c : r.counterexamples) ce.push_back({{"spec", spec_json(c.spec)}, {"reason", c.reason}});
    j["counterexamples"] = std::move(ce);

    Json vi = Json::array();
    for (const auto& v : r.violations)
        vi.push_back({{"spec", spec_json(v.spec)}, {"check", v.check}, {"detail", v.detail}});
    j["violations"] = std::move(vi);

    Json notes = Json::array();
    for (const auto& n : r.discrepancy_notes)
        notes.push_back({{"spec", spec_json(n.spec)},
                         {"tag", n.tag},
                         {"kind", std::string(to_string(SpectralKind::formII))},
                         {"a", text(n.a)},
                         {"b", text(n.b)},
                         {"delta", text(n.delta)},
                         {"delta_squarefree", false},
                         {"text", n.text}});
    j["discrepancy_notes"] = std::move(notes);
    return j;
}

}  // namespace quadstar
