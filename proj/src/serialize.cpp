#include "gwkit/serialize.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace gwkit {

namespace {

using ojson = nlohmann::ordered_json;

// Positive rational content (gcd of numerators over lcm of denominators),
// sign-adjusted so the lex-leading coefficient of p / content is positive.
mpq_class content_of(const Poly2& p) {
    mpz_class g(0), l(1);
    for (const auto& [key, c] : p.terms()) {
        for (const mpq_class* part : {&c.re, &c.im}) {
            if (*part == 0) continue;
            mpz_class pn = part->get_num();
            mpz_class pd = part->get_den();
            if (pn < 0) pn = -pn;
            g = gcd(g, pn);
            l = lcm(l, pd);
        }
    }
    mpq_class r = rat(g, l);
    GaussRat lead = p.leading_coeff();
    const mpq_class& s = (lead.re != 0) ? lead.re : lead.im;
    if (s < 0) r = -r;
    return r;
}

bool all_imaginary(const Poly2& p) {
    for (const auto& [key, c] : p.terms())
        if (c.re != 0) return false;
    return !p.is_zero();
}

std::string var_monomial(const Poly2::Key& key) {
    std::string mono;
    if (key.first > 0) {
        mono += "t1";
        if (key.first > 1) mono += "^" + std::to_string(key.first);
    }
    if (key.second > 0) {
        mono += "t2";
        if (key.second > 1) mono += "^" + std::to_string(key.second);
    }
    return mono;
}

// Body of a content-free polynomial, terms in descending lex order.
std::string poly_body(const Poly2& p) {
    if (p.is_constant()) return to_string(p.constant_value());
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [key, c] = *it;
        std::string mono = var_monomial(key);
        bool neg = false;
        std::string text;
        if (c.im == 0) {
            neg = c.re < 0;
            mpq_class m = neg ? mpq_class(-c.re) : c.re;
            text = (m == 1 && !mono.empty()) ? mono : to_string(m) + mono;
        } else if (c.re == 0) {
            neg = c.im < 0;
            mpq_class m = neg ? mpq_class(-c.im) : c.im;
            text = (m == 1 ? std::string("i") : to_string(m) + "i") + mono;
        } else {
            text = "(" + to_string(c) + ")" + mono;
        }
        if (out.empty())
            out = (neg ? "-" : "") + text;
        else
            out += (neg ? "-" : "+") + text;
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += "\"";
    return out;
}

// Splits one CSV line honoring RFC 4180 quoting.
std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::string scalar_string(const Scalar& x) {
    if (x.is_zero()) return "0";
    if (x.is_constant()) return to_string(x.constant_value());

    mpq_class rn = content_of(x.num());
    mpq_class rd = content_of(x.den());
    bool imag = all_imaginary(x.num());
    GaussRat num_scale(mpq_class(1) / rn);
    if (imag) num_scale *= GaussRat(mpq_class(0), mpq_class(-1));
    Poly2 pn = x.num() * num_scale;
    Poly2 pd = x.den() * GaussRat(mpq_class(1) / rd);
    mpq_class q = rn / rd;
    mpz_class pnum = q.get_num();
    mpz_class pden = q.get_den();

    std::string prefix;
    if (pnum == -1) prefix = "-";
    else if (pnum != 1) prefix = pnum.get_str();
    if (imag) prefix += "i";

    std::string nstr;
    if (pn.is_constant()) {
        nstr = prefix.empty() ? "1" : (prefix == "-" ? "-1" : prefix);
    } else {
        std::string body = poly_body(pn);
        nstr = prefix + (pn.terms().size() > 1 ? "(" + body + ")" : body);
    }

    std::string dstr;
    if (pd.is_constant()) {
        if (pden != 1) dstr = "/" + pden.get_str();
    } else {
        Poly2 folded = pd * GaussRat(mpq_class(pden));
        dstr = "/(" + poly_body(folded) + ")";
    }
    return nstr + dstr;
}

std::string monomial_key(const SeriesKey& key, int ns, const std::string& s_name) {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += " ";
        out += piece;
    };
    if (key.u != 0) append("u^" + std::to_string(key.u));
    for (int k = 0; k < ns; ++k) {
        int e = (static_cast<size_t>(k) < key.s.size()) ? key.s[static_cast<size_t>(k)] : 0;
        if (e == 0) continue;
        std::string name = (ns == 1) ? s_name : s_name + std::to_string(k + 1);
        append(name + "^" + std::to_string(e));
    }
    return out.empty() ? "1" : out;
}

std::string window_string(const Series& f) {
    std::string u = (f.u_hi == Series::EXACT)
                        ? "u exact"
                        : "u [" + std::to_string(f.u_lo) + "," + std::to_string(f.u_hi) + ")";
    if (f.ns == 0) return u;
    std::string sv = (f.s_cap == Series::EXACT) ? f.s_name + " exact"
                                                : f.s_name + " <= " + std::to_string(f.s_cap);
    return u + "; " + sv;
}

std::vector<std::pair<std::string, std::string>> series_entries(const Series& f) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, c] : f.coef) {
        if (c.is_zero()) continue;
        out.emplace_back(monomial_key(key, f.ns, f.s_name), scalar_string(c));
    }
    return out;
}

ResultBlock scalar_block(const std::string& label, const Scalar& x) {
    return ResultBlock{label, {{"value", scalar_string(x)}}};
}

ResultBlock series_block(const std::string& label, const Series& f) {
    return ResultBlock{label, series_entries(f)};
}

std::string to_json(const OutputDocument& doc) {
    ojson j;
    j["command"] = doc.command;
    j["surface"] = doc.surface;
    j["window"] = doc.window;
    ojson results = ojson::array();
    for (const ResultBlock& blk : doc.results) {
        ojson e;
        e["label"] = blk.label;
        ojson entries = ojson::object();
        for (const auto& [k, v] : blk.entries) entries[k] = v;
        e["entries"] = entries;
        results.push_back(e);
    }
    j["results"] = results;
    ojson verdicts = ojson::array();
    for (const CheckResult& c : doc.verdicts) {
        ojson e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        verdicts.push_back(e);
    }
    j["verdicts"] = verdicts;
    return j.dump(2) + "\n";
}

OutputDocument from_json(const std::string& text) {
    ojson j = ojson::parse(text);
    OutputDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.surface = j.at("surface").get<std::string>();
    doc.window = j.at("window").get<std::string>();
    for (const ojson& e : j.at("results")) {
        ResultBlock blk;
        blk.label = e.at("label").get<std::string>();
        for (const auto& [k, v] : e.at("entries").items())
            blk.entries.emplace_back(k, v.get<std::string>());
        doc.results.push_back(std::move(blk));
    }
    for (const ojson& e : j.at("verdicts")) {
        CheckResult c;
        c.name = e.at("name").get<std::string>();
        c.pass = e.at("pass").get<bool>();
        c.detail = e.at("detail").get<std::string>();
        doc.verdicts.push_back(std::move(c));
    }
    return doc;
}

std::string to_csv(const OutputDocument& doc) {
    std::string out;
    if (!doc.results.empty()) {
        out += "label,monomial,value\n";
        for (const ResultBlock& blk : doc.results)
            for (const auto& [k, v] : blk.entries)
                out += csv_escape(blk.label) + "," + csv_escape(k) + "," + csv_escape(v) + "\n";
    }
    if (!doc.verdicts.empty()) {
        out += "suite,pass,detail\n";
        for (const CheckResult& c : doc.verdicts)
            out += csv_escape(c.name) + "," + (c.pass ? "1" : "0") + "," + csv_escape(c.detail) +
                   "\n";
    }
    return out;
}

OutputDocument from_csv(const std::string& text) {
    OutputDocument doc;
    std::istringstream in(text);
    std::string line;
    int section = 0; // 0 none, 1 results, 2 verdicts
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line == "label,monomial,value") {
            section = 1;
            continue;
        }
        if (line == "suite,pass,detail") {
            section = 2;
            continue;
        }
        std::vector<std::string> f = csv_split(line);
        if (f.size() != 3) throw std::invalid_argument("csv row needs 3 fields: " + line);
        if (section == 1) {
            if (doc.results.empty() || doc.results.back().label != f[0])
                doc.results.push_back(ResultBlock{f[0], {}});
            doc.results.back().entries.emplace_back(f[1], f[2]);
        } else if (section == 2) {
            doc.verdicts.push_back(CheckResult{f[0], f[1] == "1", f[2]});
        } else {
            throw std::invalid_argument("csv row before any section header");
        }
    }
    return doc;
}

std::string to_text(const OutputDocument& doc) {
    std::string out;
    if (!doc.command.empty()) out += "command: " + doc.command + "\n";
    if (!doc.surface.empty()) out += "surface: " + doc.surface + "\n";
    if (!doc.window.empty()) out += "window: " + doc.window + "\n";
    for (const ResultBlock& blk : doc.results) {
        if (!out.empty()) out += "\n";
        if (!blk.label.empty()) out += "[" + blk.label + "]\n";
        for (const auto& [k, v] : blk.entries) out += k + " = " + v + "\n";
    }
    if (!doc.verdicts.empty()) {
        if (!out.empty()) out += "\n";
        for (const CheckResult& c : doc.verdicts) {
            out += std::string(c.pass ? "PASS" : "FAIL") + " " + c.name;
            if (!c.detail.empty()) out += " — " + c.detail;
            out += "\n";
        }
    }
    return out;
}

} // namespace gwkit
