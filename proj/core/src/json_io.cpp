#include "hecke/json_io.hpp"

#include <json.hpp>

namespace hecke::json {

using nlohmann::json;
using ordered = nlohmann::json;  // object keys are kept sorted (std::map)

namespace {

json params_obj(const HeckeParams& p) {
    return json{{"m_minus", p.m_minus.str()},
                {"m_plus", p.m_plus.str()},
                {"base", p.base},
                {"rank", p.rank}};
}

json multiplicity_obj(const MultiplicityFn& m) {
    json o = json::object();
    for (auto& [x, v] : m.entries()) o[x.str()] = v;
    return o;
}

json partition_obj(const Partition& p) {
    json a = json::array();
    for (long x : p.parts()) a.push_back(x);
    return a;
}

json coords_obj(const CoordinateVector& c) {
    json a = json::array();
    for (auto& [s, e] : c) a.push_back(json::array({s > 0 ? "+" : "-", e}));
    return a;
}

json cyclo_obj(const CycloFactored& f) {
    json phi = json::object();
    for (auto& [d, e] : f.phi) phi[std::to_string(d)] = e;
    return json{{"coeff", rational_str(f.coeff)}, {"vexp", f.vexp}, {"phi", phi}};
}

json point_obj(const ResidualPoint& pt) {
    return json{{"params", params_obj(pt.params)},
                {"lambda_minus", partition_obj(pt.lambda_minus)},
                {"lambda_plus", partition_obj(pt.lambda_plus)},
                {"coords", coords_obj(pt.coords)}};
}

json residue_obj(const ResidueResult& r) {
    return json{{"canonical", cyclo_obj(r.canonical)},
                {"even_mult", multiplicity_obj(r.even_part)},
                {"odd_cycl", multiplicity_obj(r.odd_cycl)}};
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace

std::string params_json(const HeckeParams& p) { return dump(params_obj(p)); }
std::string cyclo_json(const CycloFactored& f) { return dump(cyclo_obj(f)); }
std::string multiplicity_json(const MultiplicityFn& m) { return dump(multiplicity_obj(m)); }
std::string partition_json(const Partition& p) { return dump(partition_obj(p)); }
std::string coords_json(const CoordinateVector& c) { return dump(coords_obj(c)); }
std::string point_json(const ResidualPoint& pt) { return dump(point_obj(pt)); }

std::string point_with_residue_json(const ResidualPoint& pt, const ResidueResult& r) {
    json o = point_obj(pt);
    o["residue"] = residue_obj(r);
    return dump(o);
}

std::string espair_json(const ESPair& p) {
    return dump(json{{"m", p.m.str()}, {"rho", partition_obj(p.rho)}});
}

std::string stm_step_json(const STMStep& s) {
    json o{{"kind", to_string(s.kind)},
           {"source", params_obj(s.source)},
           {"target", params_obj(s.target)}};
    if (s.kind == STMKind::Translate) {
        o["side"] = s.side > 0 ? "+" : "-";
        o["shift"] = s.shift.str();
    }
    return dump(o);
}

std::string report_json(const UniquenessReport& r) {
    json templates = json::array();
    for (auto& t : r.templates) {
        json orbits = json::array();
        for (auto& orbit : t.solution_orbits) {
            json o = json::array();
            for (auto& pt : orbit)
                o.push_back(json{{"lambda_minus", partition_obj(pt.lambda_minus)},
                                 {"lambda_plus", partition_obj(pt.lambda_plus)}});
            orbits.push_back(o);
        }
        templates.push_back(json{{"templates", t.labels},
                                 {"even_mult", multiplicity_obj(t.even_mult)},
                                 {"source", params_obj(t.source)},
                                 {"rank", t.expected_rank},
                                 {"orbits", orbits},
                                 {"pass", t.pass},
                                 {"note", t.note}});
    }
    json non_cuspidal = json::array();
    for (auto& pt : r.non_cuspidal_no_odd)
        non_cuspidal.push_back(json{{"lambda_minus", partition_obj(pt.lambda_minus)},
                                    {"lambda_plus", partition_obj(pt.lambda_plus)}});
    return dump(json{{"params", params_obj(r.params)},
                     {"templates", templates},
                     {"non_cuspidal_no_odd", non_cuspidal},
                     {"failures", r.failures},
                     {"pass", r.pass}});
}

}  // namespace hecke::json
