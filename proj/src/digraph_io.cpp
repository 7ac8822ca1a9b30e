#include <cctype>
#include <sstream>

#include <json.hpp>

#include "dgs/digraph.hpp"

namespace dgs {

std::string to_text(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << '\n';
    for (const Arc& a : d.arcs()) {
        out << a.from << ' ' << a.to;
        if (a.multiplicity != 1) out << ' ' << a.multiplicity;
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Digraph& d) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to, a.multiplicity});
    nlohmann::json j;
    j["n"] = d.order();
    j["arcs"] = std::move(arcs);
    return j.dump() + "\n";
}

Digraph parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Arc> arcs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> values;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
            }
        }
        if (values.empty()) continue;
        if (n < 0) {
            if (values.size() != 1) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected vertex count");
            n = static_cast<int>(values[0]);
            continue;
        }
        if (values.size() != 2 && values.size() != 3)
            fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'i j [mult]'");
        arcs.push_back({static_cast<int>(values[0]), static_cast<int>(values[1]),
                        values.size() == 3 ? static_cast<int>(values[2]) : 1});
    }
    if (n < 0) fail(ErrorKind::ParseError, "missing vertex count");
    return Digraph::build(n, arcs);
}

Digraph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        fail(ErrorKind::ParseError, "digraph JSON needs an integer \"n\"");
    std::vector<Arc> arcs;
    if (j.contains("arcs")) {
        if (!j["arcs"].is_array()) fail(ErrorKind::ParseError, "\"arcs\" must be an array");
        for (const auto& a : j["arcs"]) {
            if (!a.is_array() || (a.size() != 2 && a.size() != 3))
                fail(ErrorKind::ParseError, "each arc must be [i, j] or [i, j, mult]");
            for (const auto& v : a)
                if (!v.is_number_integer()) fail(ErrorKind::ParseError, "arc entries must be integers");
            arcs.push_back({a[0].get<int>(), a[1].get<int>(), a.size() == 3 ? a[2].get<int>() : 1});
        }
    }
    return Digraph::build(j["n"].get<int>(), arcs);
}

Digraph parse_digraph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_json(text) : parse_text(text);
    }
    fail(ErrorKind::ParseError, "empty digraph input");
}

}  // namespace dgs
