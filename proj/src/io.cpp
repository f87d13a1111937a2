#include "fubini/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace fubini {

using nlohmann::json;

Rational parse_rational(const std::string& text) {
    std::string s = text;
    auto slash = s.find('/');
    auto valid_integer = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) throw DomainError("malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

RationalMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw DomainError("matrix file: expected object with rows, cols, entries");
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    if (rows < 1 || cols < 1) throw DomainError("matrix file: rows and cols must be positive");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw DomainError("matrix file: entries must have `rows` rows");
    RationalMatrix m(rows, cols);
    for (int r = 1; r <= rows; ++r) {
        const json& row = entries[static_cast<std::size_t>(r - 1)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw DomainError("matrix file: row " + std::to_string(r) + " does not have `cols` entries");
        for (int c = 1; c <= cols; ++c) {
            const json& e = row[static_cast<std::size_t>(c - 1)];
            if (e.is_number_integer())
                m(r, c) = Rational(mpz_class(e.dump()));
            else if (e.is_string())
                m(r, c) = parse_rational(e.get<std::string>());
            else
                throw DomainError("matrix file: entry must be an integer or a \"p/q\" string");
        }
    }
    return m;
}

RationalMatrix parse_matrix(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("matrix file: ") + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const json::exception& e) {
        throw DomainError(std::string("matrix file: ") + e.what());
    }
}

RationalMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open matrix file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str());
}

json matrix_to_json(const RationalMatrix& m) {
    json entries = json::array();
    for (int r = 1; r <= m.rows(); ++r) {
        json row = json::array();
        for (int c = 1; c <= m.cols(); ++c) {
            const Rational& q = m(r, c);
            if (q.get_den() == 1 && q.get_num().fits_slong_p())
                row.push_back(q.get_num().get_si());
            else
                row.push_back(q.get_str());
        }
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

PosetFormat parse_poset_format(const std::string& text) {
    if (text == "dot") return PosetFormat::Dot;
    if (text == "json") return PosetFormat::Json;
    throw DomainError("unknown output format '" + text + "' (expected dot or json)");
}

json poset_to_json(const Poset& p, bool hasse_only) {
    json out;
    out["n"] = p.n;
    out["k"] = p.k;
    out["kind"] = to_string(p.kind);
    json elements = json::array();
    for (const auto& w : p.elements) elements.push_back(w.to_string());
    out["elements"] = std::move(elements);
    if (!hasse_only) {
        json relations = json::array();
        for (int i = 0; i < p.size(); ++i)
            p.up[static_cast<std::size_t>(i)].for_each([&](std::size_t j) {
                if (static_cast<int>(j) != i) relations.push_back({i, static_cast<int>(j)});
            });
        out["relations"] = std::move(relations);
    }
    json hasse = json::array();
    for (auto [lo, hi] : p.hasse) hasse.push_back({lo, hi});
    out["hasse"] = std::move(hasse);
    out["codim"] = p.codim;
    return out;
}

Poset poset_from_json(const json& j) {
    try {
        Poset p;
        p.n = j.at("n").get<int>();
        p.k = j.at("k").get<int>();
        p.kind = parse_order_kind(j.at("kind").get<std::string>());
        for (const auto& e : j.at("elements")) p.elements.push_back(parse_word(e.get<std::string>(), p.k));
        const std::size_t size = p.elements.size();
        auto check = [&](int i) {
            if (i < 0 || static_cast<std::size_t>(i) >= size) throw DomainError("poset json: index out of range");
            return static_cast<std::size_t>(i);
        };
        for (const auto& e : j.at("hasse")) p.hasse.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        std::sort(p.hasse.begin(), p.hasse.end());
        p.codim = j.at("codim").get<std::vector<int>>();
        if (p.codim.size() != size) throw DomainError("poset json: codim length mismatch");
        if (j.contains("relations")) {
            p.up.assign(size, Bitset(size));
            for (std::size_t i = 0; i < size; ++i) p.up[i].set(i);
            for (const auto& e : j.at("relations")) p.up[check(e.at(0).get<int>())].set(check(e.at(1).get<int>()));
        } else {
            std::vector<Bitset> generators(size, Bitset(size));
            for (auto [lo, hi] : p.hasse) generators[check(lo)].set(check(hi));
            p.up = close_and_reduce(generators).up;
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("poset json: ") + e.what());
    }
}

std::string poset_to_dot(const Poset& p) {
    std::ostringstream out;
    out << "digraph \"" << to_string(p.kind) << "_" << p.n << "_" << p.k << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=plaintext];\n";
    for (int i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=\"" << p.elements[static_cast<std::size_t>(i)].to_string() << "\"];\n";
    for (auto [lo, hi] : p.hasse) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_poset(const Poset& p, PosetFormat format, bool hasse_only) {
    if (format == PosetFormat::Dot) return poset_to_dot(p);
    return poset_to_json(p, hasse_only).dump(2) + "\n";
}

} // namespace fubini
