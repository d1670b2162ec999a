#include "waldzeta/json_io.hpp"

#include <stdexcept>

namespace waldzeta {

namespace {

Rational rat_field(const Json& j, const char* key) {
    if (!j.contains(key)) return Rational(0);
    const Json& v = j.at(key);
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw std::invalid_argument(std::string("coefficient field '") + key +
                                "' must be a rational string or integer");
}

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Json coeff_to_json(const CoeffElem& v) {
    Json j;
    j["a"] = rat_to_string(v.a());
    j["b"] = rat_to_string(v.b());
    j["c"] = rat_to_string(v.c());
    j["d"] = rat_to_string(v.d());
    return j;
}

CoeffElem coeff_from_json(const Json& j, std::int64_t q) {
    if (j.is_string()) return CoeffElem::from_rational(q, rat_from_string(j.get<std::string>()));
    if (j.is_number_integer()) return CoeffElem::from_int(q, j.get<std::int64_t>());
    if (!j.is_object()) bad("coefficient must be an object, rational string, or integer");
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string k = it.key();
        if (k != "a" && k != "b" && k != "c" && k != "d") bad("unknown coefficient key '" + k + "'");
    }
    return CoeffElem(q, rat_field(j, "a"), rat_field(j, "b"), rat_field(j, "c"),
                     rat_field(j, "d"));
}

Json ratfunc_to_json(const RatFunc& f) {
    Json num = Json::array(), den = Json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(coeff_to_json(c));
    for (const auto& c : f.den().coeffs()) den.push_back(coeff_to_json(c));
    Json j;
    j["num"] = std::move(num);
    j["den"] = std::move(den);
    return j;
}

RatFunc ratfunc_from_json(const Json& j, std::int64_t q) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        bad("rational function must be {\"num\":[...],\"den\":[...]}");
    std::vector<CoeffElem> num, den;
    for (const auto& c : j.at("num")) num.push_back(coeff_from_json(c, q));
    for (const auto& c : j.at("den")) den.push_back(coeff_from_json(c, q));
    return RatFunc(Poly(q, std::move(num)), Poly(q, std::move(den)));
}

Json torus_char_to_json(const TorusChar& om) {
    Json j;
    j["conductor"] = om.conductor;
    switch (om.kind) {
        case Splitting::Inert: j["w"] = coeff_to_json(om.w()); break;
        case Splitting::Ramified: j["wL"] = coeff_to_json(om.wL()); break;
        case Splitting::Split:
            j["w1"] = coeff_to_json(om.w1());
            j["w2"] = coeff_to_json(om.w2());
            break;
    }
    return j;
}

TorusChar torus_char_from_json(const Json& j, const LocalField& f) {
    if (!j.is_object()) bad("torus character must be an object");
    int c = j.contains("conductor") ? j.at("conductor").get<int>() : 0;
    switch (f.legendre) {
        case Splitting::Inert:
            if (!j.contains("w")) bad("inert torus character needs \"w\"");
            return TorusChar::inert(c, coeff_from_json(j.at("w"), f.q));
        case Splitting::Ramified:
            if (!j.contains("wL")) bad("ramified torus character needs \"wL\"");
            return TorusChar::ramified(c, coeff_from_json(j.at("wL"), f.q));
        case Splitting::Split:
            if (!j.contains("w1") || !j.contains("w2"))
                bad("split torus character needs \"w1\" and \"w2\"");
            return TorusChar::split(c, coeff_from_json(j.at("w1"), f.q),
                                    coeff_from_json(j.at("w2"), f.q));
    }
    bad("unreachable");
}

Json local_setup_to_json(const LocalSetup& ls) {
    Json j;
    j["q"] = ls.field.q;
    j["legendre"] = ls.field.legendre_int();
    if (std::holds_alternative<UnramifiedPS>(ls.rep)) {
        const auto& ps = std::get<UnramifiedPS>(ls.rep);
        j["rep"] = Json{{"type", "unramified"},
                        {"alpha1", coeff_to_json(ps.alpha1)},
                        {"alpha2", coeff_to_json(ps.alpha2)}};
    } else {
        const auto& st = std::get<SteinbergTwist>(ls.rep);
        j["rep"] = Json{{"type", "steinberg"}, {"chi", coeff_to_json(st.chi)}};
    }
    j["omega"] = torus_char_to_json(ls.omega);
    if (ls.pair) {
        j["omega1"] = torus_char_to_json(ls.pair->omega1);
        j["omega2"] = torus_char_to_json(ls.pair->omega2);
    }
    return j;
}

LocalSetup local_setup_from_json(const Json& j) {
    if (!j.is_object()) bad("local setup must be an object");
    if (!j.contains("q") || !j.contains("legendre") || !j.contains("rep") ||
        !j.contains("omega"))
        bad("local setup needs \"q\", \"legendre\", \"rep\", \"omega\"");
    LocalSetup ls;
    ls.field.q = j.at("q").get<std::int64_t>();
    ls.field.legendre = splitting_from_int(j.at("legendre").get<int>());
    validate_local_field(ls.field);

    const Json& rep = j.at("rep");
    std::string type = rep.at("type").get<std::string>();
    if (type == "unramified") {
        ls.rep = UnramifiedPS{coeff_from_json(rep.at("alpha1"), ls.field.q),
                              coeff_from_json(rep.at("alpha2"), ls.field.q)};
    } else if (type == "steinberg") {
        ls.rep = SteinbergTwist{coeff_from_json(rep.at("chi"), ls.field.q)};
    } else {
        bad("rep type must be \"unramified\" or \"steinberg\"");
    }
    ls.omega = torus_char_from_json(j.at("omega"), ls.field);
    if (j.contains("omega1") != j.contains("omega2"))
        bad("omega1 and omega2 must be supplied together");
    if (j.contains("omega1"))
        ls.pair = InducedPair{torus_char_from_json(j.at("omega1"), ls.field),
                              torus_char_from_json(j.at("omega2"), ls.field)};
    return ls;
}

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j.at(0).get<double>(), j.at(1).get<double>()};
    bad("complex value must be a number or [re, im]");
}

GlobalConfig global_config_from_json(const Json& j) {
    if (!j.is_object()) bad("global config must be an object");
    GlobalConfig cfg;
    cfg.D = j.at("D").get<std::int64_t>();
    cfg.N = j.at("N").get<std::int64_t>();
    cfg.Nprime = j.contains("Nprime") ? j.at("Nprime").get<std::int64_t>() : 1;
    cfg.ell = j.contains("ell") ? j.at("ell").get<int>() : 2;
    cfg.prime_bound = j.contains("prime_bound") ? j.at("prime_bound").get<std::int64_t>() : 0;

    if (j.contains("locals"))
        for (auto it = j.at("locals").begin(); it != j.at("locals").end(); ++it)
            cfg.locals.emplace(std::stoll(it.key()), local_setup_from_json(it.value()));

    if (j.contains("satake")) {
        for (auto it = j.at("satake").begin(); it != j.at("satake").end(); ++it) {
            std::int64_t p = std::stoll(it.key());
            const Json& e = it.value();
            LocalField pf{p, splitting_from_int(legendre_of_prime(cfg.D, p))};
            SatakeEntry entry{coeff_from_json(e.at("alpha1"), p),
                              coeff_from_json(e.at("alpha2"), p), std::nullopt, std::nullopt};
            if (e.contains("omega1")) entry.omega1 = torus_char_from_json(e.at("omega1"), pf);
            if (e.contains("omega2")) entry.omega2 = torus_char_from_json(e.at("omega2"), pf);
            cfg.satake.emplace(p, std::move(entry));
        }
    }

    if (j.contains("l_values")) {
        const Json& lv = j.at("l_values");
        if (lv.contains("L_half_pi")) cfg.l_values.L_half_pi = complex_from_json(lv.at("L_half_pi"));
        if (lv.contains("L_one_chi")) cfg.l_values.L_one_chi = complex_from_json(lv.at("L_one_chi"));
        if (lv.contains("L_half_bc_twist_nonzero"))
            cfg.l_values.L_half_bc_twist_nonzero = lv.at("L_half_bc_twist_nonzero").get<bool>();
    }
    return cfg;
}

}  // namespace waldzeta
