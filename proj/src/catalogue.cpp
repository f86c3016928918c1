#include "gcs4/catalogue.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "gcs4/embedded_data.hpp"

namespace gcs4 {

using nlohmann::ordered_json;

Catalogue::Catalogue() {
    const ordered_json doc = ordered_json::parse(data::get("catalogue.json"));
    for (const auto& row : doc.at("families")) {
        CatalogueEntry e;
        e.name = row.at("name").get<std::string>();
        e.alias = row.value("alias", std::string{});
        for (const auto& p : row.at("params")) e.params.push_back(p.get<std::string>());
        e.domain = row.at("domain").get<std::string>();
        for (const auto& b : row.at("brackets")) {
            CatalogueEntry::BracketSpec spec;
            spec.u = b.at("u").get<std::size_t>() - 1;
            spec.v = b.at("v").get<std::size_t>() - 1;
            for (const auto& [key, expr] : b.at("value").items())
                spec.value[static_cast<std::size_t>(std::stoul(key)) - 1] =
                    expr.get<std::string>();
            e.brackets.push_back(std::move(spec));
        }
        e.unimodular = row.at("unimodular").get<bool>();
        const auto& admits = row.at("admits");
        e.admits_type2 = admits.at("type2").get<std::string>();
        e.admits_type1 = admits.at("type1").get<std::string>();
        e.admits_type0 = admits.at("type0").get<std::string>();
        e.source = row.at("source").get<std::string>();
        entries_.push_back(std::move(e));
    }
}

const Catalogue& Catalogue::instance() {
    static const Catalogue catalogue;
    return catalogue;
}

std::vector<const CatalogueEntry*> Catalogue::entries_for(const std::string& name) const {
    std::vector<const CatalogueEntry*> out;
    for (const auto& e : entries_)
        if (e.name == name) out.push_back(&e);
    return out;
}

Catalogue::Resolved Catalogue::build(const std::string& name, const ParamMap& params) const {
    const auto rows = entries_for(name);
    if (rows.empty()) {
        std::ostringstream msg;
        msg << "unknown Lie algebra family '" << name << "'; known families:";
        std::string last;
        for (const auto& e : entries_)
            if (e.name != last) {
                msg << ' ' << e.name;
                last = e.name;
            }
        throw CatalogueError(msg.str());
    }

    // All rows of one family share a parameter list; validate against the first.
    const auto& wanted = rows.front()->params;
    for (const auto& p : wanted)
        if (!params.count(p))
            throw CatalogueError("family '" + name + "' needs parameter '" + p + "'");
    for (const auto& [key, value] : params) {
        (void)value;
        if (std::find(wanted.begin(), wanted.end(), key) == wanted.end())
            throw CatalogueError("family '" + name + "' has no parameter '" + key + "'");
    }

    // The diagonal one-parameter-derivation family at (-1,-1) is isomorphic to
    // its (-1,1) row (swap the second and third basis vectors, negate the
    // fourth); keep a single representative to avoid duplicate classification.
    if (name == "A4_5" && params.at("alpha") == Rational(-1) && params.at("beta") == Rational(-1))
        throw CatalogueError(
            "A4_5 with alpha = beta = -1 is isomorphic to A4_5 with alpha = -1, beta = 1 "
            "(swap the first and second basis vectors and negate the fourth); "
            "use alpha = -1, beta = 1");

    const CatalogueEntry* match = nullptr;
    for (const auto* e : rows)
        if (eval_predicate(e->domain, params)) {
            match = e;
            break;
        }
    if (match == nullptr) {
        std::ostringstream msg;
        msg << "no '" << name << "' row accepts";
        for (const auto& p : wanted) msg << ' ' << p << " = " << params.at(p).str();
        msg << "; row domains:";
        for (const auto* e : rows) msg << " [" << e->domain << "]";
        throw CatalogueError(msg.str());
    }

    Resolved out;
    out.entry = match;
    out.params = params;
    out.algebra = LieAlgebra(4);
    for (const auto& spec : match->brackets) {
        QVec value(4, Rational(0));
        for (const auto& [index, expr] : spec.value) value[index] = eval_scalar(expr, params);
        out.algebra.set_bracket(spec.u, spec.v, value);
    }
    return out;
}

}  // namespace gcs4
