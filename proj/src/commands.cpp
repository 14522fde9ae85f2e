#include "tworay/commands.hpp"

#include "tworay/error.hpp"
#include "tworay/game.hpp"
#include "tworay/sectionring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tworay::cli {

using cones::Cone2;
using cones::RayZ2;
using monomials::format_monomial;
using toric::GradingMatrix;

namespace {

Json vec(const Vec2& v) { return Json::array({v.x, v.y}); }
Json cone(const Cone2& c) { return Json::array({vec(c.lo()), vec(c.hi())}); }

std::string vstr(const Json& j) {
    return "(" + std::to_string(j[0].get<Int>()) + "," + std::to_string(j[1].get<Int>()) + ")";
}
std::string cstr(const Json& j) { return "<" + vstr(j[0]) + "," + vstr(j[1]) + ">"; }

std::string words(const Json& arr, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        s += i ? sep : "";
        s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return s;
}

std::string opt_str(const Json& j) { return j.is_null() ? "-" : j.is_string() ? j.get<std::string>() : j.dump(); }

Json header(const char* command, const ScenarioFile& s) {
    Json j;
    j["command"] = command;
    j["scenario"] = s.variety.name;
    return j;
}

std::string title(const Json& j) {
    return j["command"].get<std::string>() + " " + (j["scenario"].get<std::string>().empty() ? "(unnamed)" : j["scenario"].get<std::string>()) + "\n";
}

Json grading_json(const GradingMatrix& g) {
    Json cols = Json::object();
    for (std::size_t i = 0; i < g.size(); ++i) cols[g.var(i)] = vec(g.col(i));
    return cols;
}

const monomials::LinearSystem& need_system(const ScenarioFile& s, std::optional<monomials::LinearSystem>& holder,
                                           const char* cmd) {
    if (!s.hypersurface) throw PreconditionError(std::string(cmd) + " needs a [hypersurface] block");
    holder.emplace(s.system());
    return *holder;
}

std::string u_prefix(const std::string& u, int k) {
    if (k == 0) return "";
    return k == 1 ? u + "*" : u + "^" + std::to_string(k) + "*";
}

} // namespace

CommandResult cmd_describe(const ScenarioFile& s, const CommandOptions&) {
    const GradingMatrix g = s.grading();
    const auto model = s.model();
    const auto fan = toric::chamber_fan(g);
    Json j = header("describe", s);
    j["grading"] = grading_json(g);
    j["effective_cone"] = cone(toric::effective_cone(g));
    Json rays = Json::array();
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        rays.push_back({{"ray", vec(fan.rays[i])}, {"variables", fan.carriers[i]}});
    j["rays"] = rays;
    Json chambers = Json::array();
    for (const auto& c : fan.chambers)
        chambers.push_back({{"chamber", cone(c)}, {"irrelevant", toric::model_from_chamber(g, c).irrelevant.str()}});
    j["chambers"] = chambers;
    j["model"] = {{"chamber", cone(model.chamber)}, {"irrelevant", model.irrelevant.str()}};
    const auto fr = toric::fibration_ray(g);
    j["fibration_ray"] = fr ? vec(*fr) : Json(nullptr);
    j["anticanonical_ambient"] = vec(toric::anticanonical_ambient(g));
    try {
        j["mobile_cone_toric"] = cone(toric::mobile_cone_toric(g));
    } catch (const PreconditionError&) {
        j["mobile_cone_toric"] = nullptr; // a single ray
    }
    if (s.hypersurface) {
        const Vec2 d = s.hypersurface->degree;
        Json h;
        h["degree"] = vec(d);
        h["anticanonical"] = vec(toric::adjunction_anticanonical(g, d));
        try {
            const auto k = toric::k_condition(g, d);
            h["k_condition"] = toric::to_string(k.verdict);
            h["mobile_cone"] = cone(k.mobile);
            h["mobile_assumption_ok"] = k.mobile_assumption_ok;
        } catch (const PreconditionError& e) {
            h["k_condition"] = std::string("undefined: ") + e.what();
            h["mobile_cone"] = nullptr;
            h["mobile_assumption_ok"] = nullptr;
        }
        h["gorenstein"] = toric::to_string(toric::gorenstein_check(g, d));
        j["hypersurface"] = h;
    } else {
        j["hypersurface"] = nullptr;
    }

    std::ostringstream os;
    os << title(j);
    os << "variables       ";
    for (const auto& [name, col] : j["grading"].items()) os << ' ' << name << vstr(col);
    os << "\neffective cone   " << cstr(j["effective_cone"]) << '\n';
    os << "rays\n";
    for (const auto& r : j["rays"]) os << "  " << vstr(r["ray"]) << "  " << words(r["variables"]) << '\n';
    os << "chambers\n";
    for (const auto& c : j["chambers"]) os << "  " << cstr(c["chamber"]) << "  " << c["irrelevant"].get<std::string>() << '\n';
    os << "model            " << cstr(j["model"]["chamber"]) << "  " << j["model"]["irrelevant"].get<std::string>() << '\n';
    os << "fibration ray    " << (j["fibration_ray"].is_null() ? "none" : vstr(j["fibration_ray"])) << '\n';
    os << "-K ambient       " << vstr(j["anticanonical_ambient"]) << '\n';
    os << "toric mobile     " << (j["mobile_cone_toric"].is_null() ? "degenerate" : cstr(j["mobile_cone_toric"])) << '\n';
    if (j["hypersurface"].is_null()) {
        os << "hypersurface     none\n";
    } else {
        const auto& h = j["hypersurface"];
        os << "hypersurface     " << vstr(h["degree"]) << '\n';
        os << "-K hypersurface  " << vstr(h["anticanonical"]) << '\n';
        if (!h["mobile_cone"].is_null()) {
            os << "mobile cone      " << cstr(h["mobile_cone"]) << " (taken equal to the toric one; "
               << (h["mobile_assumption_ok"].get<bool>() ? "justified" : "not justified, class on the boundary") << ")\n";
        }
        os << "K-condition      " << h["k_condition"].get<std::string>() << '\n';
        os << "Gorenstein       " << h["gorenstein"].get<std::string>() << '\n';
    }
    return {os.str(), j, 0};
}

CommandResult cmd_monomials(const ScenarioFile& s, const CommandOptions& o) {
    const GradingMatrix g = s.grading();
    if (!o.degree && !s.hypersurface) throw PreconditionError("monomials needs --degree or a [hypersurface] block");
    const Vec2 d = o.degree ? *o.degree : s.hypersurface->degree;
    Json j = header("monomials", s);
    j["degree"] = vec(d);
    const auto basis = monomials::enumerate_monomials(g, d);
    j["dimension"] = basis.size();

    std::map<int, std::vector<std::string>> by_k;
    std::size_t n_fibres = 0;
    if (!basis.empty()) {
        for (const auto& c : monomials::fibre_classes(g, d)) {
            by_k[c.coeff_deg].push_back(format_monomial(g, c.fibre));
            ++n_fibres;
        }
    }
    j["fibre_monomials"] = n_fibres;
    Json table = Json::array();
    for (const auto& [k, fibres] : by_k) table.push_back({{"coeff_deg", k}, {"fibres", fibres}});
    j["by_coeff_deg"] = table;

    const bool constrained = s.hypersurface && s.hypersurface->degree == d;
    if (constrained) {
        const auto sys = s.system();
        const std::string& u = g.var(sys.base().designated);
        std::map<int, std::vector<std::string>> by_free;
        Json cons = Json::array();
        for (const auto& c : sys.classes()) {
            by_free[c.free_deg()].push_back(u_prefix(u, c.u_min) + format_monomial(g, c.fibre));
            if (c.u_min > 0) cons.push_back({{"monomial", format_monomial(g, c.fibre)}, {"u_min", c.u_min}});
        }
        Json ct = Json::array();
        for (const auto& [k, ms] : by_free) ct.push_back({{"free_deg", k}, {"classes", ms}});
        Json missing = Json::array();
        for (const auto& m : monomials::missing_monomials(sys)) missing.push_back(format_monomial(g, m));
        j["system"] = {{"designated", u},
                       {"classes", sys.classes().size()},
                       {"monomials", sys.expanded_monomials().size()},
                       {"by_free_deg", ct},
                       {"constraints", cons},
                       {"missing", missing}};
    } else {
        j["system"] = nullptr;
    }

    std::ostringstream os;
    os << title(j);
    os << "degree " << vstr(j["degree"]) << ": " << j["dimension"].get<std::size_t>() << " monomials, "
       << j["fibre_monomials"].get<std::size_t>() << " fibre monomials\n";
    os << "by coefficient degree\n";
    for (const auto& row : j["by_coeff_deg"])
        os << "  " << row["coeff_deg"].get<int>() << ": " << words(row["fibres"], ", ") << '\n';
    if (!j["system"].is_null()) {
        const auto& sy = j["system"];
        os << "constrained system: " << sy["classes"].get<std::size_t>() << " classes, "
           << sy["monomials"].get<std::size_t>() << " monomials\n";
        os << "by free coefficient degree\n";
        for (const auto& row : sy["by_free_deg"])
            os << "  " << row["free_deg"].get<int>() << ": " << words(row["classes"], ", ") << '\n';
        os << sy["designated"].get<std::string>() << "-power constraints\n";
        for (const auto& c : sy["constraints"])
            os << "  " << c["monomial"].get<std::string>() << "  " << c["u_min"].get<int>() << '\n';
        os << "missing: " << (sy["missing"].empty() ? "none" : words(sy["missing"], ", ")) << '\n';
    }
    return {os.str(), j, 0};
}

CommandResult cmd_baselocus(const ScenarioFile& s, const CommandOptions& o) {
    std::optional<monomials::LinearSystem> holder;
    const auto& sys = need_system(s, holder, "baselocus");
    const auto model = s.model();
    const GradingMatrix& g = model.grading;
    const auto poly = monomials::instantiate(sys, o.seed);
    Json j = header("baselocus", s);
    j["model"] = {{"chamber", cone(model.chamber)}, {"irrelevant", model.irrelevant.str()}};
    j["seed"] = o.seed;
    Json strata = Json::array();
    for (const auto& st : monomials::base_locus(model, sys)) {
        Json e;
        e["zeros"] = st.names(g);
        if (const auto w = monomials::smoothness_certificate(model, sys, st)) {
            const auto& c = sys.classes()[w->class_index];
            e["witness"] = {{"monomial", format_monomial(g, c.fibre)},
                            {"variable", g.var(w->variable)},
                            {"coeff_deg", c.coeff_deg},
                            {"u_min", c.u_min},
                            {"derivative_nonzero", monomials::derivative_survives(poly, w->variable, st)}};
        } else {
            e["witness"] = nullptr;
        }
        strata.push_back(e);
    }
    j["strata"] = strata;

    std::ostringstream os;
    os << title(j);
    os << "model " << cstr(j["model"]["chamber"]) << "  " << j["model"]["irrelevant"].get<std::string>() << '\n';
    for (const auto& e : j["strata"]) {
        os << "  V(" << words(e["zeros"], ",") << ")  ";
        if (e["witness"].is_null()) {
            os << "no certificate (singular candidate)\n";
        } else {
            const auto& w = e["witness"];
            os << "smooth: " << w["monomial"].get<std::string>() << " linear in " << w["variable"].get<std::string>()
               << ", derivative " << (w["derivative_nonzero"].get<bool>() ? "nonzero" : "ZERO") << " (seed "
               << j["seed"].get<std::uint64_t>() << ")\n";
        }
    }
    if (j["strata"].empty()) os << "  base point free\n";
    return {os.str(), j, 0};
}

CommandResult cmd_localchart(const ScenarioFile& s, const CommandOptions& o) {
    std::optional<monomials::LinearSystem> holder;
    const auto& sys = need_system(s, holder, "localchart");
    const auto model = s.model();
    const GradingMatrix& g = model.grading;

    std::string a, b;
    if (o.chart) {
        std::tie(a, b) = *o.chart;
    } else {
        for (const auto& st : monomials::base_locus(model, sys)) {
            if (st.zeros.size() + 2 != g.size() || monomials::smoothness_certificate(model, sys, st)) continue;
            std::vector<std::string> rest;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (!st.contains(i)) rest.push_back(g.var(i));
            a = rest[0];
            b = rest[1];
            break;
        }
        if (a.empty()) throw PreconditionError("no uncertified base point; pass --chart a,b");
    }
    std::vector<std::string> zeros;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.var(i) != a && g.var(i) != b) zeros.push_back(g.var(i));
    const auto point = monomials::stratum_from_names(g, zeros);
    const auto chart = monomials::local_chart(g, a, b, point);
    const auto rep = monomials::local_support(sys, chart, o.bound.value_or(6));

    Json j = header("localchart", s);
    j["chart"] = {a, b};
    j["point"] = zeros;
    Json coords = Json::array();
    for (const auto& c : chart.coords) coords.push_back({{"var", g.var(c.var)}, {"alpha", c.alpha}, {"beta", c.beta}});
    j["coordinates"] = coords;
    j["substitution"] = chart.describe(g);
    j["degree_bound"] = rep.degree_bound;
    j["min_degree"] = rep.min_degree ? Json(*rep.min_degree) : Json(nullptr);
    Json by = Json::array();
    for (const auto& [deg, ms] : rep.by_degree) {
        Json terms = Json::array();
        for (const auto& m : ms) terms.push_back(format_monomial(rep.coordinates, m));
        by.push_back({{"degree", deg}, {"monomials", terms}});
    }
    j["by_degree"] = by;
    Json pp = Json::object();
    for (const auto& [v, k] : rep.pure_powers) pp[v] = k;
    j["pure_powers"] = pp;
    j["note"] = rep.note ? Json(*rep.note) : Json(nullptr);

    std::ostringstream os;
    os << title(j);
    os << "point V(" << words(j["point"], ",") << "), chart " << words(j["chart"], ",") << " = 1\n";
    os << "coordinates\n";
    for (const auto& c : j["coordinates"])
        os << "  " << c["var"].get<std::string>() << "  (" << c["alpha"].get<Int>() << "," << c["beta"].get<Int>() << ")\n";
    os << "substitution " << j["substitution"].get<std::string>() << '\n';
    os << "lowest degree " << opt_str(j["min_degree"]) << '\n';
    for (const auto& row : j["by_degree"])
        os << "  degree " << row["degree"].get<int>() << ": " << words(row["monomials"], ", ") << '\n';
    os << "pure powers";
    for (const auto& [v, k] : j["pure_powers"].items()) os << ' ' << v << '^' << k.get<int>();
    os << '\n';
    if (!j["note"].is_null()) os << "note: " << j["note"].get<std::string>() << '\n';
    return {os.str(), j, 0};
}

CommandResult cmd_game(const ScenarioFile& s, const CommandOptions& o) {
    std::optional<monomials::LinearSystem> holder;
    const auto& sys = need_system(s, holder, "game");
    const auto model = s.model();
    const GradingMatrix& g = model.grading;
    game::GameOptions go;
    go.full_trace = o.full_trace;
    if (o.bound) go.section_bound = *o.bound;
    const auto t = game::run_game(model, sys, go);

    Json j = header("game", s);
    j["full_trace"] = o.full_trace;
    j["anticanonical"] = vec(toric::adjunction_anticanonical(g, sys.degree()));
    Json models = Json::array();
    for (const auto& m : t.models) models.push_back({{"chamber", cone(m.chamber)}, {"irrelevant", m.irrelevant.str()}});
    j["models"] = models;
    Json steps = Json::array();
    for (const auto& st : t.steps) {
        const auto& rc = st.crossing;
        const auto& wc = rc.parent;
        Json weights = Json::object();
        for (const auto& [v, w] : wc.weights) weights[v] = w;
        Json restricted = Json::object();
        for (const auto& [v, w] : rc.weights) restricted[v] = w;
        steps.push_back({{"wall", vec(wc.wall)},
                         {"kind", wc.kind_str()},
                         {"normalizer", {vec(wc.normalizer.row(0)), vec(wc.normalizer.row(1))}},
                         {"weights", weights},
                         {"type", wc.nonzero_weights()},
                         {"toric_k_sign", game::to_string(wc.toric_k_sign())},
                         {"restriction",
                          {{"result", game::to_string(rc.result)},
                           {"witness", rc.witness ? Json(*rc.witness) : Json(nullptr)},
                           {"eliminated", rc.eliminated ? Json(*rc.eliminated) : Json(nullptr)},
                           {"type", rc.weight_values()},
                           {"weights", restricted},
                           {"k_sign", game::to_string(rc.k_sign)},
                           {"inconclusive", rc.inconclusive}}},
                         {"mori", {{"ok", st.check.ok}, {"reason", st.check.reason}}}});
    }
    j["steps"] = steps;
    Json failures = Json::array();
    for (const auto& [i, why] : t.failures) failures.push_back({{"step", i}, {"wall", vec(t.steps[i].crossing.parent.wall)}, {"reason", why}});
    j["failures"] = failures;
    j["reflected"] = t.reflected;
    j["inconclusive"] = t.inconclusive;
    if (t.end) {
        const auto& e = *t.end;
        Json gens = Json::array();
        for (const auto& gen : e.presentation.generators)
            gens.push_back({{"monomial", format_monomial(g, gen.exps)}, {"weight", gen.weight}});
        Json end = {{"ray", vec(e.ray)},
                    {"kind", game::to_string(e.kind)},
                    {"generators", gens},
                    {"ambient", sections::format_weights(sections::ambient_weights(e.presentation))},
                    {"complete", e.presentation.complete_up_to_bound}};
        if (e.rewrite) {
            end["rewrite"] = {{"ok", e.rewrite->ok},
                              {"image_degree", e.rewrite->image_degree ? Json(*e.rewrite->image_degree) : Json(nullptr)},
                              {"failure", e.rewrite->failure}};
        } else {
            end["rewrite"] = nullptr;
        }
        end["fano_index"] = e.fano_index ? Json(*e.fano_index) : Json(nullptr);
        j["end"] = end;
    } else {
        j["end"] = nullptr;
    }
    j["verdict"] = game::to_string(t.verdict);
    j["fail_step"] = t.fail_step ? Json(*t.fail_step) : Json(nullptr);
    j["fail_reason"] = t.fail_reason;

    std::ostringstream os;
    os << title(j);
    os << "-K " << vstr(j["anticanonical"]) << (j["reflected"].get<bool>() ? ", walked from the far end" : "") << '\n';
    for (std::size_t i = 0; i < j["steps"].size(); ++i) {
        const auto& st = j["steps"][i];
        const auto& r = st["restriction"];
        os << "step " << i << "  wall " << vstr(st["wall"]) << "  " << st["kind"].get<std::string>() << '\n';
        os << "  normalizer [" << vstr(st["normalizer"][0]) << "," << vstr(st["normalizer"][1]) << "]  weights";
        for (const auto& [v, w] : st["weights"].items()) os << ' ' << v << ':' << w.get<Int>();
        os << '\n';
        os << "  toric type (" << words(st["type"], ",") << ") " << st["toric_k_sign"].get<std::string>() << '\n';
        os << "  restricted " << r["result"].get<std::string>();
        if (!r["witness"].is_null()) os << " via " << r["witness"].get<std::string>();
        if (!r["eliminated"].is_null()) os << ", eliminates " << r["eliminated"].get<std::string>();
        if (!r["type"].empty()) os << ", type (" << words(r["type"], ",") << ") " << r["k_sign"].get<std::string>();
        if (r["inconclusive"].get<bool>()) os << ", INCONCLUSIVE";
        os << '\n';
        os << "  mori " << (st["mori"]["ok"].get<bool>() ? "ok" : "FAIL");
        if (!st["mori"]["reason"].get<std::string>().empty()) os << ": " << st["mori"]["reason"].get<std::string>();
        os << '\n';
    }
    os << "models";
    for (const auto& m : j["models"]) os << "  " << cstr(m["chamber"]) << ' ' << m["irrelevant"].get<std::string>();
    os << '\n';
    for (const auto& f : j["failures"])
        os << "failure at step " << f["step"].get<std::size_t>() << " wall " << vstr(f["wall"]) << ": "
           << f["reason"].get<std::string>() << '\n';
    if (!j["end"].is_null()) {
        const auto& e = j["end"];
        os << "end " << vstr(e["ray"]) << " " << e["kind"].get<std::string>() << "  " << e["ambient"].get<std::string>()
           << (e["complete"].get<bool>() ? "" : " (incomplete)") << '\n';
        os << "  generators";
        for (const auto& gen : e["generators"])
            os << ' ' << gen["monomial"].get<std::string>() << '[' << gen["weight"].get<int>() << ']';
        os << '\n';
        if (!e["rewrite"].is_null()) {
            const auto& rw = e["rewrite"];
            if (rw["ok"].get<bool>())
                os << "  image hypersurface of degree " << opt_str(rw["image_degree"]) << ", index "
                   << opt_str(e["fano_index"]) << '\n';
            else
                os << "  rewrite failed: " << rw["failure"].get<std::string>() << '\n';
        }
    }
    if (j["inconclusive"].get<bool>()) os << "warning: a restriction was inconclusive\n";
    os << "verdict " << j["verdict"].get<std::string>();
    if (!j["fail_step"].is_null()) os << " at step " << j["fail_step"].get<std::size_t>() << ": " << j["fail_reason"].get<std::string>();
    os << '\n';
    return {os.str(), j, (o.strict && t.inconclusive) ? 4 : 0};
}

CommandResult cmd_sections(const ScenarioFile& s, const CommandOptions& o) {
    const GradingMatrix g = s.grading();
    const int bound = o.bound.value_or(12);
    std::vector<RayZ2> rays;
    if (o.ray) rays.push_back(cones::primitivize(*o.ray));
    else rays = toric::chamber_fan(g).rays;
    std::optional<monomials::LinearSystem> sys;
    if (s.hypersurface) sys.emplace(s.system());

    Json j = header("sections", s);
    j["bound"] = bound;
    Json out = Json::array();
    for (const auto& r : rays) {
        const auto p = sections::section_generators(g, r, bound);
        Json gens = Json::array();
        for (const auto& gen : p.generators) gens.push_back({{"monomial", format_monomial(g, gen.exps)}, {"weight", gen.weight}});
        const auto weights = sections::ambient_weights(p);
        Json e = {{"ray", vec(r)},
                  {"generators", gens},
                  {"weights", weights},
                  {"ambient", sections::format_weights(weights)},
                  {"hilbert_bound", p.hilbert_bound},
                  {"complete", p.complete_up_to_bound}};
        e["claim"] = nullptr;
        for (const auto& c : s.variety.claims) {
            if (!(cones::primitivize(c.ray) == r)) continue;
            const auto stated = sections::format_weights(c.weights);
            auto sorted = c.weights;
            std::sort(sorted.begin(), sorted.end());
            e["claim"] = {{"stated", stated},
                          {"agrees", sorted == weights},
                          {"note", "stated ambient " + stated + ", computed " + sections::format_weights(weights) +
                                       "; not reconciled"}};
        }
        e["rewrite"] = nullptr;
        if (sys && cones::cross(sys->degree(), r) == 0 && cones::dot(sys->degree(), r) > 0) {
            const auto rw = sections::rewrite_in_generators(*sys, p);
            e["rewrite"] = {{"ok", rw.ok},
                            {"image_degree", rw.image_degree ? Json(*rw.image_degree) : Json(nullptr)},
                            {"index", rw.ok && rw.image_degree ? Json(sections::wps_index(weights, *rw.image_degree)) : Json(nullptr)},
                            {"failure", rw.failure}};
        }
        out.push_back(e);
    }
    j["rays"] = out;

    std::ostringstream os;
    os << title(j);
    for (const auto& e : j["rays"]) {
        os << "ray " << vstr(e["ray"]) << "  " << e["ambient"].get<std::string>() << "  generator weights <= "
           << e["hilbert_bound"].get<int>() << (e["complete"].get<bool>() ? ", complete" : ", INCOMPLETE")
           << " at bound " << j["bound"].get<int>() << '\n';
        std::map<int, std::vector<std::string>> by_w;
        for (const auto& gen : e["generators"]) by_w[gen["weight"].get<int>()].push_back(gen["monomial"].get<std::string>());
        for (const auto& [w, ms] : by_w) {
            os << "  weight " << w << ":";
            for (const auto& m : ms) os << ' ' << m;
            os << '\n';
        }
        if (!e["claim"].is_null()) os << "  note: " << e["claim"]["note"].get<std::string>() << '\n';
        if (!e["rewrite"].is_null()) {
            const auto& rw = e["rewrite"];
            if (rw["ok"].get<bool>())
                os << "  hypersurface image degree " << opt_str(rw["image_degree"]) << ", index " << opt_str(rw["index"]) << '\n';
            else
                os << "  rewrite failed: " << rw["failure"].get<std::string>() << '\n';
        }
    }
    return {os.str(), j, 0};
}

CommandResult cmd_transform(const ScenarioFile& s, const CommandOptions&) {
    int cancelled = 0;
    const ScenarioFile t = transform_scenario(s, &cancelled);
    const auto sys = s.system();
    const std::string u = s.grading().var(sys.base().designated);
    const auto tsys = t.system();
    Json j = header("transform", s);
    j["target"] = t.variety.name;
    j["cancelled"] = {{"variable", u}, {"power", cancelled}};
    j["degree"] = vec(t.hypersurface->degree);
    j["classes"] = tsys.classes().size();
    const std::string text = serialize(t);
    j["scenario_text"] = text;

    std::ostringstream os;
    os << "# transform of " << (j["scenario"].get<std::string>().empty() ? "(unnamed)" : j["scenario"].get<std::string>())
       << ": cancelled " << u << '^' << cancelled << ", " << j["classes"].get<std::size_t>() << " classes in degree "
       << vstr(j["degree"]) << '\n';
    os << j["scenario_text"].get<std::string>();
    return {os.str(), j, 0};
}

std::vector<std::string> command_names() {
    return {"describe", "monomials", "baselocus", "localchart", "game", "sections", "transform"};
}

CommandResult run_command(const std::string& name, const ScenarioFile& s, const CommandOptions& o) {
    if (name == "describe") return cmd_describe(s, o);
    if (name == "monomials") return cmd_monomials(s, o);
    if (name == "baselocus") return cmd_baselocus(s, o);
    if (name == "localchart") return cmd_localchart(s, o);
    if (name == "game") return cmd_game(s, o);
    if (name == "sections") return cmd_sections(s, o);
    if (name == "transform") return cmd_transform(s, o);
    throw PreconditionError("unknown command '" + name + "'");
}

} // namespace tworay::cli
