#include "gkzlift/jsonio.hpp"

namespace gkzlift::io {

json to_json(const QExpansion& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, c.str()}));
    json j;
    j["den"] = s.den();
    if (s.exact())
        j["prec"] = nullptr;
    else
        j["prec"] = s.prec();
    j["terms"] = std::move(terms);
    return j;
}

QExpansion qexpansion_from_json(const json& j) {
    long den = j.at("den").get<long>();
    long prec = j.at("prec").is_null() ? kInfPrec : j.at("prec").get<long>();
    QExpansion s(den, prec);
    for (const auto& t : j.at("terms"))
        s.set(t.at(0).get<long>(), Rat::parse(t.at(1).get<std::string>()));
    return s;
}

json to_json(const weil::VVForm& f) {
    json comps = json::array();
    for (const auto& [d, s] : f.comps) {
        json c;
        c["d"] = d;
        c["series"] = to_json(s);
        comps.push_back(std::move(c));
    }
    json j;
    j["N"] = f.N;
    j["weight2"] = f.weight2;
    j["rep"] = f.rep == weil::Rep::rho ? "rho" : "rho_dual";
    j["components"] = std::move(comps);
    return j;
}

weil::VVForm vvform_from_json(const json& j) {
    weil::VVForm f(j.at("N").get<long>(), j.at("weight2").get<long>(),
                   j.at("rep").get<std::string>() == "rho_dual" ? weil::Rep::rho_dual
                                                                : weil::Rep::rho);
    for (const auto& c : j.at("components"))
        f.comps[c.at("d").get<long>()] = qexpansion_from_json(c.at("series"));
    f.validate();
    return f;
}

json to_json(const weil::PlusForm& g) {
    json j;
    j["weight2"] = g.weight2;
    j["m"] = g.m;
    j["series"] = to_json(g.series);
    return j;
}

weil::PlusForm plusform_from_json(const json& j) {
    return weil::PlusForm(j.at("m").get<long>(), qexpansion_from_json(j.at("series")));
}

json to_json(const ah::AHSeries& F) {
    json comps = json::array();
    for (const auto& [d, terms] : F.comps) {
        json arr = json::array();
        for (const auto& [key, v] : terms)
            arr.push_back(json::array({key.e, key.k, v.str()}));
        json c;
        c["d"] = d;
        c["terms"] = std::move(arr);
        comps.push_back(std::move(c));
    }
    json j;
    j["N"] = F.N;
    j["weight2"] = F.weight2;
    j["rep"] = F.rep == weil::Rep::rho ? "rho" : "rho_dual";
    j["den"] = F.den;
    j["components"] = std::move(comps);
    return j;
}

json to_json(const lift::ExactReal& v) {
    json j;
    j["rat"] = v.rat.str();
    j["radicand"] = v.radicand;
    j["pi_power"] = v.pi_power;
    j["i_power"] = v.i_power;
    j["approx"] = v.to_double();
    return j;
}

json to_json(const lift::HeegnerPoint& p) {
    json j;
    j["N"] = p.N;
    j["n"] = p.n.str();
    j["form"] = json::array({p.A, p.B, p.C});
    j["gamma"] = p.gamma;
    j["matched_c"] = p.matched_c.str();
    j["x"] = p.x().str();
    j["ysq"] = p.ysq().str();
    return j;
}

json to_json(const lift::PoleData& p) {
    json contribs = json::array();
    for (const auto& [k, c] : p.contributions) contribs.push_back(json::array({k, c.str()}));
    json j;
    j["point"] = to_json(p.point);
    j["order"] = p.order;
    j["lead"] = to_json(p.lead);
    j["contributions"] = std::move(contribs);
    return j;
}

json to_json(const lift::LiftResult& r) {
    json poles = json::array();
    for (const auto& p : r.poles) poles.push_back(to_json(p));
    json j;
    j["m"] = r.m;
    j["N"] = r.N;
    j["positive_part"] = to_json(r.positive_part);
    j["poles"] = std::move(poles);
    j["constant"] = r.constant_unknown ? "UNKNOWN" : "0";
    return j;
}

json to_json(const lift::Certificate& c) {
    json coords = json::array();
    for (const auto& x : c.coords) coords.push_back(x.str());
    json j;
    j["weight"] = c.weight;
    j["e4_power"] = c.e4_power;
    j["e6_power"] = c.e6_power;
    j["coords"] = std::move(coords);
    j["verified_to"] = c.verified_to;
    return j;
}

json to_json(const cm::QuadElem& q) {
    json j;
    j["u"] = q.u.str();
    j["v"] = q.v.str();
    j["d"] = q.d;
    j["str"] = q.str();
    return j;
}

json to_json(const cm::Traceless& t) {
    return json::array({to_json(t.p), to_json(t.q), to_json(t.r)});
}

json to_json(const cm::WedgeForm& w) {
    const char* names[6] = {"ab", "ac", "ad", "bc", "bd", "cd"};
    json j;
    for (int i = 0; i < 6; ++i) j[names[i]] = to_json(w.w[i]);
    return j;
}

json to_json(const cm::FundamentalClass& f) {
    json j;
    j["wedge"] = to_json(f.form);
    j["scale"] = to_json(f.scale);
    j["iota_arg"] = to_json(f.iota_arg);
    if (f.has_itilde) j["itilde_arg"] = to_json(f.itilde_arg);
    return j;
}

json to_json(const gkz::RelationLattice& rl) {
    json rows = json::array();
    for (const auto& row : rl.rows) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        rows.push_back(std::move(r));
    }
    json j;
    j["m"] = rl.m;
    j["generators"] = rl.generators;
    j["relation_rows"] = std::move(rows);
    j["rank"] = rl.rank;
    j["quotient_rank"] = rl.quotient_rank;
    j["dim_cusp_forms"] = rl.dim_cusp_forms;
    return j;
}

} // namespace gkzlift::io
