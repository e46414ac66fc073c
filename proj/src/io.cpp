// SPDX-License-Identifier: Apache-2.0
#include "combwalks/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace combwalks {

void ScanTable::add_row(std::vector<Json> cells) {
    if (cells.size() != columns.size())
        throw std::invalid_argument("row width does not match column count");
    rows.push_back(std::move(cells));
}

std::string float_repr(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const SparsePolynomial& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json exps = Json::object();
        for (const auto& [step, e] : mono) exps[std::to_string(step)] = e;
        terms.push_back(Json{{"exponents", std::move(exps)}, {"coeff", coeff.str()}});
    }
    return terms;
}

Json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json to_json(const SumResult& r) {
    Json j;
    if (std::holds_alternative<Rational>(r.value)) {
        j["value"] = std::get<Rational>(r.value).str();
    } else if (std::holds_alternative<std::complex<double>>(r.value)) {
        auto z = std::get<std::complex<double>>(r.value);
        j["value"] = Json{{"re", z.real()}, {"im", z.imag()}};
    } else {
        j["value"] = to_json(std::get<SparsePolynomial>(r.value));
    }
    j["exact"] = r.exact;
    j["walk_count"] = to_json(r.walk_count);
    j["truncated"] = r.truncated;
    if (r.truncation)
        j["truncation"] = Json{{"L", r.truncation->max_steps}, {"W", r.truncation->window}};
    return j;
}

Json to_json(const IdentityReport& rep) {
    Json params = Json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    Json j{{"id", rep.id},
           {"params", std::move(params)},
           {"lhs", rep.lhs},
           {"rhs", rep.rhs},
           {"verdict", to_string(rep.verdict)}};
    if (rep.constant) j["constant"] = rep.constant->str();
    j["ms"] = rep.ms;
    return j;
}

Json to_json(const RunManifest& m) {
    Json params = Json::object();
    for (const auto& [k, v] : m.params) params[k] = v;
    Json j{{"command", m.command}, {"params", std::move(params)}};
    if (m.seed) j["seed"] = *m.seed;
    j["version"] = m.version;
    if (!m.notes.empty()) j["notes"] = m.notes;
    j["wall_ms"] = m.wall_ms;
    return j;
}

Json to_json(const Walk& w) { return Json(w.steps); }

Json to_json(const WalkClass& c) {
    Json j{{"n", c.n},
           {"direction", to_string(c.direction)},
           {"steps", Json(c.step_set.steps())},
           {"sign_filter", to_string(c.sign_filter)}};
    if (c.kappa) j["kappa"] = *c.kappa;
    if (c.truncation)
        j["truncation"] = Json{{"L", c.truncation->max_steps}, {"W", c.truncation->window}};
    return j;
}

SparsePolynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a term array");
    SparsePolynomial p;
    try {
        for (const auto& term : j) {
            Monomial mono;
            for (const auto& [step, e] : term.at("exponents").items())
                mono.emplace_back(std::stoi(step), e.get<unsigned>());
            std::sort(mono.begin(), mono.end());
            p.add_term(mono, Rational::parse(term.at("coeff").get<std::string>()));
        }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
    return p;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return float_repr(v.get<double>());
    return v.dump();
}

void manifest_comment_block(std::ostream& os, const RunManifest& m) {
    os << "# command: " << m.command << "\n";
    for (const auto& [k, v] : m.params) os << "# param " << k << ": " << v << "\n";
    if (m.seed) os << "# seed: " << *m.seed << "\n";
    os << "# version: " << m.version << "\n";
    for (const auto& n : m.notes) os << "# note: " << n << "\n";
    os << "# wall_ms: " << float_repr(m.wall_ms) << "\n";
}

std::string table_csv(const RunManifest& m, const ScanTable& t) {
    std::ostringstream os;
    manifest_comment_block(os, m);
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << "\n";
    }
    return os.str();
}

std::string table_text(const RunManifest& m, const ScanTable& t) {
    std::vector<std::size_t> width(t.columns.size());
    auto widen = [&](std::size_t i, const std::string& s) {
        if (s.size() > width[i]) width[i] = s.size();
    };
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < t.columns.size(); ++i) widen(i, t.columns[i]);
    for (const auto& row : t.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell_text(row[i]));
            widen(i, line.back());
        }
        cells.push_back(std::move(line));
    }
    std::ostringstream os;
    manifest_comment_block(os, m);
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "  " : "") << t.columns[i]
           << std::string(width[i] - t.columns[i].size(), ' ');
    os << "\n";
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i)
            os << (i ? "  " : "") << line[i] << std::string(width[i] - line[i].size(), ' ');
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_table(const RunManifest& m, const ScanTable& t, OutputFormat f) {
    if (f == OutputFormat::json) {
        Json rows = Json::array();
        for (const auto& row : t.rows) {
            Json r = Json::object();
            for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
            rows.push_back(std::move(r));
        }
        return Json{{"manifest", to_json(m)}, {"rows", std::move(rows)}}.dump(2) + "\n";
    }
    return f == OutputFormat::csv ? table_csv(m, t) : table_text(m, t);
}

std::string render_reports(const RunManifest& m, const std::vector<IdentityReport>& reps,
                           OutputFormat f) {
    if (f == OutputFormat::json) {
        Json arr = Json::array();
        for (const auto& r : reps) arr.push_back(to_json(r));
        return Json{{"manifest", to_json(m)}, {"reports", std::move(arr)}}.dump(2) + "\n";
    }
    if (f == OutputFormat::csv) {
        ScanTable t;
        t.columns = {"id", "params", "lhs", "rhs", "verdict", "constant", "ms"};
        for (const auto& r : reps) {
            std::string params;
            for (const auto& [k, v] : r.params)
                params += (params.empty() ? "" : ";") + k + "=" + v;
            t.add_row({r.id, params, r.lhs, r.rhs, to_string(r.verdict),
                       r.constant ? Json(r.constant->str()) : Json(), r.ms});
        }
        return table_csv(m, t);
    }
    std::ostringstream os;
    manifest_comment_block(os, m);
    for (const auto& r : reps) {
        os << (r.passed() ? "[ok]  " : "[FAIL] ") << r.id;
        for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
        os << ": " << to_string(r.verdict);
        if (r.constant) os << " (c = " << r.constant->str() << ")";
        if (r.verdict == Verdict::mismatch) os << "  lhs=" << r.lhs << " rhs=" << r.rhs;
        os << "\n";
    }
    return os.str();
}

std::string render_result(const RunManifest& m, const SumResult& r,
                          const std::vector<std::pair<std::string, Json>>& extras,
                          OutputFormat f) {
    if (f == OutputFormat::json) {
        Json doc{{"manifest", to_json(m)}, {"result", to_json(r)}};
        for (const auto& [k, v] : extras) doc[k] = v;
        return doc.dump(2) + "\n";
    }
    if (f == OutputFormat::csv) {
        ScanTable t;
        Json rj = to_json(r);
        t.columns = {"value", "exact", "walk_count", "truncated", "L", "W"};
        std::vector<Json> row{rj["value"].is_string() ? rj["value"] : Json(rj["value"].dump()),
                              r.exact, to_json(r.walk_count), r.truncated,
                              r.truncation ? Json(r.truncation->max_steps) : Json(),
                              r.truncation ? Json(r.truncation->window) : Json()};
        for (const auto& [k, v] : extras) {
            t.columns.push_back(k);
            row.push_back(v.is_structured() ? Json(v.dump()) : v);
        }
        t.add_row(std::move(row));
        return table_csv(m, t);
    }
    std::ostringstream os;
    manifest_comment_block(os, m);
    if (std::holds_alternative<Rational>(r.value)) {
        os << "value: " << std::get<Rational>(r.value).str() << "\n";
    } else if (std::holds_alternative<SparsePolynomial>(r.value)) {
        os << "value: " << std::get<SparsePolynomial>(r.value).str() << "\n";
    } else {
        auto z = std::get<std::complex<double>>(r.value);
        os << "value: " << float_repr(z.real()) << " + " << float_repr(z.imag()) << "i\n";
    }
    os << "exact: " << (r.exact ? "true" : "false") << "\n";
    os << "walk_count: " << r.walk_count.get_str() << "\n";
    os << "truncated: " << (r.truncated ? "true" : "false") << "\n";
    if (r.truncation)
        os << "truncation: L=" << r.truncation->max_steps << " W=" << r.truncation->window
           << "\n";
    for (const auto& [k, v] : extras) os << k << ": " << cell_text(v) << "\n";
    return os.str();
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

}  // namespace combwalks
