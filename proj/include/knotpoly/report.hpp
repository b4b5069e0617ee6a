// Builds the per-link report (invariants, specialisations, and the built-in
// consistency checks) and renders it as JSON, CSV, or readable text.  JSON
// field order and term order are fixed, so identical inputs give identical
// bytes.

#pragma once

#include <string>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/oracles.hpp"
#include "knotpoly/polyring.hpp"

namespace knotpoly {

inline InvariantReport build_report(const std::string& name, const BraidWord& b,
                                    bool with_oracles = true) {
    InvariantReport rep;
    rep.name = name;
    rep.braid = b;
    rep.writhe = knotpoly::writhe(b);
    rep.components = closure_components(b);
    rep.omega_closed = knotpoly::omega_closed(b);
    rep.omega_open = knotpoly::omega_open(b);
    rep.jones_normalised = spec_jones(rep.omega_open);
    rep.alexander = spec_alex(rep.omega_open);

    {
        Check c{"closed_form", false, ""};
        c.passed = spec_alex(rep.omega_closed).is_zero() &&
                   rep.omega_closed == closed_from_jones(rep.jones_normalised);
        if (!c.passed) c.detail = "closed model does not factor as x^{1/2}(1+d) * jones";
        rep.checks.push_back(std::move(c));
    }
    {
        const InterpolationResult ir = interpolation_decompose(rep.omega_open);
        rep.checks.push_back({"interpolation", ir.residual_ok, ir.detail});
    }
    if (with_oracles) {
        {
            Check c{"jones_oracle", false, ""};
            c.passed = (jones_oracle(b) == rep.jones_normalised);
            if (!c.passed) c.detail = "bracket oracle disagrees with engine Jones value";
            rep.checks.push_back(std::move(c));
        }
        {
            Check c{"alexander_oracle", false, ""};
            try {
                c.passed = (alexander_oracle(b) == rep.alexander);
                if (!c.passed) c.detail = "Burau oracle disagrees with engine Alexander value";
            } catch (const DegenerateDeterminant& e) {
                c.passed = false;
                c.detail = e.what();
            }
            rep.checks.push_back(std::move(c));
        }
    }
    return rep;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace detail

inline std::string report_to_json(const InvariantReport& r) {
    std::string out = "{";
    out += "\"name\":\"" + detail::json_escape(r.name) + "\"";
    out += ",\"n\":" + std::to_string(r.braid.strands());
    out += ",\"word\":\"" + detail::json_escape(r.braid.word_text()) + "\"";
    out += ",\"writhe\":" + std::to_string(r.writhe);
    out += ",\"components\":" + std::to_string(r.components);
    out += ",\"omega_closed\":" + to_json(r.omega_closed);
    out += ",\"omega_open\":" + to_json(r.omega_open);
    out += ",\"jones\":" + to_json(r.jones_normalised);
    out += ",\"alexander\":" + to_json(r.alexander);
    out += ",\"checks\":[";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        if (i) out += ",";
        out += "{\"name\":\"" + detail::json_escape(r.checks[i].name) + "\"";
        out += ",\"passed\":" + std::string(r.checks[i].passed ? "true" : "false");
        if (!r.checks[i].detail.empty())
            out += ",\"detail\":\"" + detail::json_escape(r.checks[i].detail) + "\"";
        out += "}";
    }
    out += "]}";
    return out;
}

inline std::string report_csv_header() {
    return "name,n,word,writhe,components,jones,alexander,checks_passed";
}

inline std::string report_to_csv(const InvariantReport& r) {
    std::string out;
    out += r.name + "," + std::to_string(r.braid.strands()) + "," + r.braid.word_text() + ",";
    out += std::to_string(r.writhe) + "," + std::to_string(r.components) + ",";
    out += to_string(r.jones_normalised) + "," + to_string(r.alexander) + ",";
    out += r.all_checks_passed() ? "yes" : "no";
    return out;
}

inline std::string report_to_text(const InvariantReport& r) {
    std::string out;
    out += "name:        " + r.name + "\n";
    out += "braid:       n=" + std::to_string(r.braid.strands()) + "  word='" +
           r.braid.word_text() + "'\n";
    out += "writhe:      " + std::to_string(r.writhe) + "\n";
    out += "components:  " + std::to_string(r.components) + "\n";
    out += "omega_closed: " + to_string(r.omega_closed) + "\n";
    out += "omega_open:   " + to_string(r.omega_open) + "\n";
    out += "jones:       " + to_string(r.jones_normalised) + "\n";
    out += "alexander:   " + to_string(r.alexander) + "\n";
    for (const auto& c : r.checks) {
        out += "check " + c.name + ": " + (c.passed ? "pass" : "FAIL");
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

}  // namespace knotpoly
