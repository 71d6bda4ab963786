#include "zm/io.hpp"

#include <json.hpp>

#include <ostream>

#include "zm/errors.hpp"

namespace zm {

using nlohmann::json;

namespace {

json partition_json(const Partition& p) {
    json arr = json::array();
    for (unsigned part : p.parts()) arr.push_back(part);
    return arr;
}

json entry_json(const Partition& lam, const GaussianRational& w) {
    json e;
    e["partition"] = partition_json(lam);
    e["num"] = w.re.get_num().get_str();
    e["den"] = w.re.get_den().get_str();
    e["im_num"] = w.im.get_num().get_str();
    e["im_den"] = w.im.get_den().get_str();
    e["decimal"] = to_double(w.re);
    return e;
}

}  // namespace

void write_csv(std::ostream& os, const MeasureTable& table) {
    os << "partition,numerator,denominator,im_numerator,im_denominator,decimal\n";
    for (const auto& [lam, w] : table.entries) {
        os << '"' << lam.to_string() << "\"," << w.re.get_num() << ',' << w.re.get_den() << ','
           << w.im.get_num() << ',' << w.im.get_den() << ',' << to_double(w.re) << '\n';
    }
}

void write_csv(std::ostream& os, const SphericalTable& table) {
    os << "lambda,rho,numerator,denominator,decimal\n";
    for (const auto& [key, v] : table.values) {
        os << '"' << key.first.to_string() << "\",\"" << key.second.to_string() << "\","
           << v.get_num() << ',' << v.get_den() << ',' << to_double(v) << '\n';
    }
}

void write_json(std::ostream& os, const MeasureTable& table) {
    json j;
    j["n"] = table.n;
    j["params"] = table.params;
    j["normalized"] = table.normalized;
    j["entries"] = json::array();
    for (const auto& [lam, w] : table.entries) j["entries"].push_back(entry_json(lam, w));
    os << j.dump(2) << '\n';
}

void write_text(std::ostream& os, const MeasureTable& table) {
    os << table.params << (table.normalized ? "  [sum = 1 exact]" : "") << '\n';
    for (const auto& [lam, w] : table.entries)
        os << "  " << lam.to_string() << "  " << to_string(w) << '\n';
}

std::string matching_to_json(const Matching& x) {
    json arr = json::array();
    for (auto [a, b] : x.pairs()) arr.push_back(json::array({a, b}));
    return arr.dump();
}

Matching matching_from_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad matching JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("matching JSON must be an array of pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2) throw ParseError("matching JSON must be an array of pairs");
        pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    const int level = static_cast<int>(pairs.size());
    return Matching(level, std::move(pairs));
}

std::string permutation_to_json(const SignedPermutation& g) {
    json arr = json::array();
    for (int v : g.images()) arr.push_back(v);
    return arr.dump();
}

SignedPermutation permutation_from_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad permutation JSON: ") + e.what());
    }
    if (!arr.is_array() || arr.size() % 2 != 0) throw ParseError("permutation JSON must list 2n images");
    std::vector<int> im;
    for (const auto& v : arr) im.push_back(v.get<int>());
    return SignedPermutation::from_images(static_cast<int>(im.size() / 2), im);
}

std::string symfunc_to_json(const SymFunc& f) {
    json j;
    j["basis"] = f.basis == Basis::Monomial ? "monomial" : "power-sum";
    j["degree"] = f.degree;
    j["terms"] = json::array();
    for (const auto& [key, c] : f.coeff) {
        j["terms"].push_back(json::array({partition_json(key), c.re.get_num().get_str(),
                                          c.re.get_den().get_str(), c.im.get_num().get_str(),
                                          c.im.get_den().get_str()}));
    }
    return j.dump();
}

SymFunc symfunc_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad symfunc JSON: ") + e.what());
    }
    SymFunc f;
    f.degree = j.at("degree").get<unsigned>();
    f.basis = j.at("basis").get<std::string>() == "monomial" ? Basis::Monomial : Basis::PowerSum;
    for (const auto& term : j.at("terms")) {
        std::vector<unsigned> parts;
        for (const auto& p : term.at(0)) parts.push_back(p.get<unsigned>());
        Rational re(Integer(term.at(1).get<std::string>()), Integer(term.at(2).get<std::string>()));
        Rational im(Integer(term.at(3).get<std::string>()), Integer(term.at(4).get<std::string>()));
        re.canonicalize();
        im.canonicalize();
        f.coeff[Partition(parts)] = GaussianRational(re, im);
    }
    return f;
}

Partition parse_partition(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parentheses in partition: " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) {
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("bad partition part: " + tok);
            parts.push_back(static_cast<unsigned>(std::stoul(tok)));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(parts);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid partition: ") + e.what());
    }
}

}  // namespace zm
