#include "eqcoh/serialization.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqcoh {

Json poly_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        Json term;
        term["coeff"] = c.get_str();
        term["exps"] = mono;
        terms.push_back(std::move(term));
    }
    return terms;
}

namespace {

Rational rational_from_json(const Json& j) {
    Rational q;
    if (j.is_string()) {
        try {
            q = Rational(j.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("polynomial JSON: bad coefficient string '" +
                                        j.get<std::string>() + "'");
        }
    } else if (j.is_number_integer()) {
        q = Rational(j.get<long>());
    } else {
        throw std::invalid_argument("polynomial JSON: coefficient must be a string");
    }
    q.canonicalize();
    return q;
}

}  // namespace

Polynomial poly_from_json(const Json& j, std::size_t num_vars) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON: expected an array of terms");
    Polynomial p(num_vars);
    for (const Json& term : j) {
        if (!term.contains("coeff") || !term.contains("exps"))
            throw std::invalid_argument("polynomial JSON: term needs 'coeff' and 'exps'");
        Monomial exps = term["exps"].get<Monomial>();
        if (exps.size() != num_vars)
            throw std::invalid_argument("polynomial JSON: exponent vector has wrong length");
        p.add_term(exps, rational_from_json(term["coeff"]));
    }
    return p;
}

Json class_to_json(const LocalizedClass& c) {
    Json j;
    j["n"] = c.n();
    Json parts = Json::array();
    for (std::size_t k = 0; k <= c.n(); ++k) parts.push_back(poly_to_json(c[k]));
    j["parts"] = std::move(parts);
    return j;
}

LocalizedClass class_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("parts"))
        throw std::invalid_argument("class JSON: needs 'n' and 'parts'");
    const std::size_t n = j["n"].get<std::size_t>();
    const Json& parts_json = j["parts"];
    if (!parts_json.is_array() || parts_json.size() != n + 1)
        throw std::invalid_argument("class JSON: 'parts' must hold n+1 polynomials");
    std::vector<Polynomial> parts;
    parts.reserve(n + 1);
    for (const Json& part : parts_json) parts.push_back(poly_from_json(part, n + 1));
    return LocalizedClass(std::move(parts));
}

std::string poly_latex(const Polynomial& p, std::string_view var_prefix) {
    if (p.is_zero()) return "0";
    const bool alpha = var_prefix == "a";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << '-';
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool constant = std::accumulate(mono.begin(), mono.end(), 0) == 0;
        if (constant || a != 1) {
            if (is_integer(a))
                out << a.get_str();
            else
                out << "\\tfrac{" << a.get_num().get_str() << "}{" << a.get_den().get_str()
                    << "}";
        }
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0) continue;
            out << (alpha ? "\\alpha" : "t") << "_{" << v << '}';
            if (mono[v] > 1) out << "^{" << mono[v] << '}';
        }
    }
    return out.str();
}

namespace {

struct TableRow {
    std::size_t i, j, k;
    int degree;
    std::string poly_text, alpha_text;
    bool nonneg;
};

std::vector<TableRow> table_rows(const StructureTable& table) {
    std::vector<TableRow> rows;
    rows.reserve(table.items().size());
    for (const auto& item : table.items()) {
        PositivityCertificate cert = positivity_certificate(item.value);
        rows.push_back({item.i, item.j, item.k, item.value.degree(),
                        item.value.to_string(), cert.alpha_form.to_string("a"),
                        cert.nonnegative});
    }
    return rows;
}

}  // namespace

std::string table_csv(const StructureTable& table) {
    std::ostringstream out;
    out << "i,j,k,degree,polynomial,alpha,nonneg\n";
    for (const TableRow& r : table_rows(table)) {
        out << r.i << ',' << r.j << ',' << r.k << ',' << r.degree << ',' << r.poly_text
            << ',' << r.alpha_text << ',' << (r.nonneg ? "true" : "false") << '\n';
    }
    return out.str();
}

Json table_json(const StructureTable& table) {
    Json rows = Json::array();
    for (const TableRow& r : table_rows(table)) {
        Json row;
        row["i"] = r.i;
        row["j"] = r.j;
        row["k"] = r.k;
        row["degree"] = r.degree;
        row["polynomial"] = r.poly_text;
        row["alpha"] = r.alpha_text;
        row["nonneg"] = r.nonneg;
        rows.push_back(std::move(row));
    }
    Json j;
    j["n"] = table.n();
    j["entries"] = std::move(rows);
    return j;
}

std::string table_latex(const StructureTable& table) {
    std::ostringstream out;
    out << "\\begin{tabular}{rrrl}\n";
    out << "$i$ & $j$ & $k$ & $c_{ij}^{k}$ \\\\\n\\hline\n";
    for (const auto& item : table.items()) {
        out << item.i << " & " << item.j << " & " << item.k << " & $"
            << poly_latex(item.value) << "$ \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

}  // namespace eqcoh
