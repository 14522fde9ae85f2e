#include "tworay/scenario.hpp"

#include "tworay/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace tworay::cli {

using monomials::format_monomial;
using monomials::grlex_less;
using toric::GradingMatrix;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
}

Int parse_int(std::string_view s, int line) {
    s = trim(s);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<Int> parse_ints(std::string_view s, int line) {
    std::vector<Int> out;
    for (const auto& tok : split_ws(s)) out.push_back(parse_int(tok, line));
    return out;
}

Vec2 parse_vec2(std::string_view s, int line) {
    s = trim(s);
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ParseError(line, "expected a pair '(a,b)', got '" + std::string(s) + "'");
    const auto inner = s.substr(1, s.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError(line, "expected a pair '(a,b)', got '" + std::string(s) + "'");
    return {parse_int(inner.substr(0, comma), line), parse_int(inner.substr(comma + 1), line)};
}

// "(a,b) (c,d)", spaces inside the parentheses allowed.
std::vector<Vec2> parse_vec2_list(std::string_view s, int line) {
    std::vector<Vec2> out;
    std::size_t pos = 0;
    while (true) {
        const auto open = s.find('(', pos);
        if (open == std::string_view::npos) break;
        const auto close = s.find(')', open);
        if (close == std::string_view::npos) throw ParseError(line, "unbalanced parenthesis");
        out.push_back(parse_vec2(s.substr(open, close - open + 1), line));
        pos = close + 1;
    }
    if (!trim(s.substr(std::min(pos, s.size()))).empty()) throw ParseError(line, "trailing text after pairs");
    return out;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

struct Entry {
    std::string value;
    int line = 0;
};

struct RawBlock {
    int header_line = 0;
    std::map<std::string, Entry> single;
    std::vector<std::pair<std::string, Entry>> repeated; // monomial / ambient_claim lines
};

const Entry& require(const RawBlock& b, const std::string& block, const std::string& key) {
    auto it = b.single.find(key);
    if (it == b.single.end()) throw ParseError(b.header_line, "[" + block + "] is missing '" + key + "'");
    return it->second;
}

const Entry* optional_key(const RawBlock& b, const std::string& key) {
    auto it = b.single.find(key);
    return it == b.single.end() ? nullptr : &it->second;
}

GradingMatrix make_grading(const std::vector<std::string>& vars, const std::vector<Int>& r1,
                           const std::vector<Int>& r2, int line) {
    if (r1.size() != vars.size() || r2.size() != vars.size())
        throw ParseError(line, "grading rows must have one entry per variable");
    std::vector<Vec2> cols;
    for (std::size_t i = 0; i < vars.size(); ++i) cols.push_back({r1[i], r2[i]});
    try {
        return GradingMatrix(vars, cols);
    } catch (const PreconditionError& e) {
        throw ParseError(line, e.what());
    }
}

void check_chamber(const GradingMatrix& g, const Vec2& lo, const Vec2& hi, int line) {
    try {
        toric::model_from_chamber(g, cones::Cone2(cones::primitivize(lo), cones::primitivize(hi)));
    } catch (const PreconditionError& e) {
        throw ParseError(line, std::string("chamber: ") + e.what());
    }
}

ExponentVector parse_mono(const GradingMatrix& g, std::string_view text, int line) {
    try {
        return monomials::parse_monomial(g, text);
    } catch (const ParseError& e) {
        throw ParseError(line, e.what());
    }
}

const std::vector<std::string> kVarietyKeys = {"name", "vars", "row1", "row2", "chamber"};
const std::vector<std::string> kHyperKeys = {"degree"};
const std::vector<std::string> kTransformKeys = {"shift",       "cancel",      "target_name",   "target_vars",
                                                 "target_row1", "target_row2", "target_chamber"};

} // namespace

ScenarioFile parse_scenario(std::string_view text) {
    std::map<std::string, RawBlock> blocks;
    std::string current;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "malformed block header");
            current = std::string(trim(line.substr(1, line.size() - 2)));
            if (current != "variety" && current != "hypersurface" && current != "transform")
                throw ParseError(line_no, "unknown block [" + current + "]");
            if (blocks.count(current)) throw ParseError(line_no, "duplicate block [" + current + "]");
            blocks[current].header_line = line_no;
            continue;
        }
        if (current.empty()) throw ParseError(line_no, "entry outside of any block");
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        auto& block = blocks[current];
        const bool repeated = (current == "hypersurface" && key == "monomial") ||
                              (current == "variety" && key == "ambient_claim");
        if (repeated) {
            block.repeated.emplace_back(key, Entry{value, line_no});
            continue;
        }
        const auto& allowed = current == "variety" ? kVarietyKeys : current == "hypersurface" ? kHyperKeys : kTransformKeys;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError(line_no, "unknown key '" + key + "' in [" + current + "]");
        if (!block.single.emplace(key, Entry{value, line_no}).second)
            throw ParseError(line_no, "duplicate key '" + key + "'");
    }
    if (!blocks.count("variety")) throw ParseError(0, "missing [variety] block");

    ScenarioFile sf;
    const RawBlock& vb = blocks["variety"];
    auto& v = sf.variety;
    if (const auto* e = optional_key(vb, "name")) v.name = e->value;
    const auto& vars_e = require(vb, "variety", "vars");
    v.vars = split_ws(vars_e.value);
    const auto& r1 = require(vb, "variety", "row1");
    const auto& r2 = require(vb, "variety", "row2");
    v.row1 = parse_ints(r1.value, r1.line);
    v.row2 = parse_ints(r2.value, r2.line);
    const GradingMatrix g = make_grading(v.vars, v.row1, v.row2, v.row1.size() != v.vars.size() ? r1.line : r2.line);
    const auto& ch = require(vb, "variety", "chamber");
    const auto pair = parse_vec2_list(ch.value, ch.line);
    if (pair.size() != 2) throw ParseError(ch.line, "chamber needs exactly two rays");
    v.chamber_lo = pair[0];
    v.chamber_hi = pair[1];
    check_chamber(g, v.chamber_lo, v.chamber_hi, ch.line);
    for (const auto& [key, e] : vb.repeated) {
        const auto close = e.value.find(')');
        if (close == std::string::npos) throw ParseError(e.line, "ambient_claim = (a,b) w1 w2 ...");
        AmbientClaim claim{parse_vec2(e.value.substr(0, close + 1), e.line), {}};
        for (Int w : parse_ints(e.value.substr(close + 1), e.line)) claim.weights.push_back(static_cast<int>(w));
        if (claim.weights.empty()) throw ParseError(e.line, "ambient_claim needs at least one weight");
        v.claims.push_back(std::move(claim));
    }

    if (blocks.count("hypersurface")) {
        const RawBlock& hb = blocks["hypersurface"];
        HypersurfaceBlock h;
        const auto& d = require(hb, "hypersurface", "degree");
        h.degree = parse_vec2(d.value, d.line);
        for (const auto& [key, e] : hb.repeated) {
            auto toks = split_ws(e.value);
            if (toks.size() < 2) throw ParseError(e.line, "expected 'monomial = <mono> u_min=<k>' or '<mono> absent'");
            const std::string tail = toks.back();
            const std::string mono = e.value.substr(0, e.value.rfind(tail));
            if (tail == "absent") {
                h.absent.push_back(parse_mono(g, mono, e.line));
            } else if (tail.rfind("u_min=", 0) == 0) {
                const Int k = parse_int(tail.substr(6), e.line);
                if (k < 0) throw ParseError(e.line, "u_min must be nonnegative");
                h.constraints.push_back({parse_mono(g, mono, e.line), static_cast<int>(k)});
            } else {
                throw ParseError(e.line, "expected 'u_min=<k>' or 'absent' after the monomial");
            }
        }
        std::sort(h.constraints.begin(), h.constraints.end(),
                  [](const ConstraintLine& a, const ConstraintLine& b) { return grlex_less(a.fibre, b.fibre); });
        std::sort(h.absent.begin(), h.absent.end(), grlex_less);
        sf.hypersurface = std::move(h);
    }

    if (blocks.count("transform")) {
        const RawBlock& tb = blocks["transform"];
        TransformBlock t;
        if (const auto* e = optional_key(tb, "shift")) {
            for (const auto& tok : split_ws(e->value)) {
                const auto colon = tok.find(':');
                if (colon == std::string::npos) throw ParseError(e->line, "shift entries look like 'x:4'");
                const std::string name = tok.substr(0, colon);
                if (!g.find(name)) throw ParseError(e->line, "unknown variable '" + name + "' in shift");
                const Int p = parse_int(tok.substr(colon + 1), e->line);
                if (p != 0) t.shifts.emplace_back(name, static_cast<int>(p));
            }
        }
        if (const auto* e = optional_key(tb, "cancel")) t.cancel = static_cast<int>(parse_int(e->value, e->line));
        if (const auto* e = optional_key(tb, "target_name")) t.target_name = e->value;
        const auto& tv = require(tb, "transform", "target_vars");
        t.target_vars = split_ws(tv.value);
        const auto& t1 = require(tb, "transform", "target_row1");
        const auto& t2 = require(tb, "transform", "target_row2");
        t.target_row1 = parse_ints(t1.value, t1.line);
        t.target_row2 = parse_ints(t2.value, t2.line);
        const GradingMatrix tg = make_grading(t.target_vars, t.target_row1, t.target_row2, t1.line);
        if (const auto* e = optional_key(tb, "target_chamber")) {
            const auto tp = parse_vec2_list(e->value, e->line);
            if (tp.size() != 2) throw ParseError(e->line, "target_chamber needs exactly two rays");
            check_chamber(tg, tp[0], tp[1], e->line);
            t.target_chamber = std::make_pair(tp[0], tp[1]);
        }
        sf.transform = std::move(t);
    }
    return sf;
}

std::string serialize(const ScenarioFile& s) {
    const GradingMatrix g = s.grading();
    std::ostringstream os;
    const auto& v = s.variety;
    os << "[variety]\n";
    if (!v.name.empty()) os << "name = " << v.name << '\n';
    os << "vars = " << join(v.vars) << '\n';
    os << "row1 = " << join_ints(v.row1) << '\n';
    os << "row2 = " << join_ints(v.row2) << '\n';
    os << "chamber = " << v.chamber_lo.str() << ' ' << v.chamber_hi.str() << '\n';
    for (const auto& c : v.claims) {
        os << "ambient_claim = " << c.ray.str();
        for (int w : c.weights) os << ' ' << w;
        os << '\n';
    }
    if (s.hypersurface) {
        const auto& h = *s.hypersurface;
        os << "\n[hypersurface]\n";
        os << "degree = " << h.degree.str() << '\n';
        for (const auto& c : h.constraints) os << "monomial = " << format_monomial(g, c.fibre) << " u_min=" << c.u_min << '\n';
        for (const auto& a : h.absent) os << "monomial = " << format_monomial(g, a) << " absent\n";
    }
    if (s.transform) {
        const auto& t = *s.transform;
        os << "\n[transform]\n";
        if (!t.shifts.empty()) {
            os << "shift =";
            for (const auto& [name, p] : t.shifts) os << ' ' << name << ':' << p;
            os << '\n';
        }
        if (t.cancel) os << "cancel = " << *t.cancel << '\n';
        if (!t.target_name.empty()) os << "target_name = " << t.target_name << '\n';
        os << "target_vars = " << join(t.target_vars) << '\n';
        os << "target_row1 = " << join_ints(t.target_row1) << '\n';
        os << "target_row2 = " << join_ints(t.target_row2) << '\n';
        if (t.target_chamber)
            os << "target_chamber = " << t.target_chamber->first.str() << ' ' << t.target_chamber->second.str() << '\n';
    }
    return os.str();
}

bool ScenarioFile::equivalent(const ScenarioFile& other) const {
    auto strip = [](ScenarioFile s) {
        s.variety.name.clear();
        s.variety.claims.clear();
        if (s.transform) s.transform->target_name.clear();
        return s;
    };
    return strip(*this) == strip(other);
}

GradingMatrix ScenarioFile::grading() const {
    std::vector<Vec2> cols;
    for (std::size_t i = 0; i < variety.vars.size(); ++i) cols.push_back({variety.row1.at(i), variety.row2.at(i)});
    return GradingMatrix(variety.vars, cols);
}

toric::ToricModel ScenarioFile::model() const {
    return toric::model_from_chamber(
        grading(), cones::Cone2(cones::primitivize(variety.chamber_lo), cones::primitivize(variety.chamber_hi)));
}

monomials::LinearSystem ScenarioFile::system() const {
    if (!hypersurface) throw PreconditionError("scenario has no [hypersurface] block");
    std::vector<monomials::Constraint> cons;
    for (const auto& c : hypersurface->constraints) cons.push_back({c.fibre, c.u_min});
    return monomials::build_system(grading(), hypersurface->degree, cons, hypersurface->absent);
}

ScenarioFile transform_scenario(const ScenarioFile& s, int* cancelled) {
    if (!s.transform) throw PreconditionError("scenario has no [transform] block");
    const auto& t = *s.transform;
    const auto sys = s.system();
    std::vector<Vec2> cols;
    for (std::size_t i = 0; i < t.target_vars.size(); ++i) cols.push_back({t.target_row1.at(i), t.target_row2.at(i)});
    const GradingMatrix target(t.target_vars, cols);
    monomials::Substitution subst;
    for (const auto& [name, p] : t.shifts) subst[name] = p;
    int amount = 0;
    const auto out = monomials::fibrewise_transform(sys, subst, target, t.cancel, &amount);
    if (cancelled) *cancelled = amount;

    ScenarioFile r;
    r.variety.name = t.target_name.empty() ? s.variety.name + "-transformed" : t.target_name;
    r.variety.vars = t.target_vars;
    r.variety.row1 = t.target_row1;
    r.variety.row2 = t.target_row2;
    if (t.target_chamber) {
        r.variety.chamber_lo = t.target_chamber->first;
        r.variety.chamber_hi = t.target_chamber->second;
    } else {
        const auto fan = toric::chamber_fan(target);
        r.variety.chamber_lo = fan.chambers.front().lo();
        r.variety.chamber_hi = fan.chambers.front().hi();
    }
    HypersurfaceBlock h;
    h.degree = out.degree();
    for (const auto& c : out.classes())
        if (c.u_min > 0) h.constraints.push_back({c.fibre, c.u_min});
    h.absent = monomials::missing_monomials(out);
    std::sort(h.absent.begin(), h.absent.end(), grlex_less);
    r.hypersurface = std::move(h);

    TransformBlock inv;
    for (const auto& [name, p] : t.shifts) inv.shifts.emplace_back(name, -p);
    inv.cancel = -amount;
    inv.target_name = s.variety.name;
    inv.target_vars = s.variety.vars;
    inv.target_row1 = s.variety.row1;
    inv.target_row2 = s.variety.row2;
    inv.target_chamber = std::make_pair(s.variety.chamber_lo, s.variety.chamber_hi);
    r.transform = std::move(inv);
    return r;
}

} // namespace tworay::cli
