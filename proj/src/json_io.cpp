#include "kschur/json_io.hpp"

namespace kschur {

Json json_of(const Partition& p) {
    Json arr = Json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

Json json_of(const TPoly& c) {
    Json arr = Json::array();
    if (c.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const Int& v : c.coeffs()) arr.push_back(v.get_str());
    return arr;
}

Json json_of(const SymFunc& f) {
    Json out;
    out["basis"] = f.basis().label();
    if (f.basis().kind == Basis::Kind::g || f.basis().kind == Basis::Kind::kschur)
        out["k"] = f.basis().k;
    Json terms = Json::array();
    for (const auto& [p, c] : f.terms()) {
        Json term;
        term["partition"] = json_of(p);
        term["coeff"] = json_of(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json json_of(const Straightened& st) {
    Json out;
    if (st.sign == 0) {
        out["zero"] = true;
        return out;
    }
    out["zero"] = false;
    out["sign"] = st.sign;
    if (st.is_partition()) {
        out["partition"] = json_of(st.partition());
    } else {
        Json arr = Json::array();
        for (int v : st.parts) arr.push_back(v);
        out["vector"] = std::move(arr);
        out["negative_tail"] = true;
    }
    return out;
}

Json json_of(const KSplit& sp) {
    Json out;
    Json blocks = Json::array();
    for (const Partition& b : sp.blocks) blocks.push_back(json_of(b));
    out["blocks"] = std::move(blocks);
    return out;
}

Json json_of(const Reduction& red) {
    Json out;
    out["c"] = red.c;
    Json rects = Json::array();
    for (const Partition& r : red.rectangles) rects.push_back(json_of(r));
    out["rectangles"] = std::move(rects);
    out["irreducible"] = json_of(red.irreducible);
    return out;
}

Json json_of(const VerifyReport& rep, bool timings) {
    Json out;
    out["id"] = rep.id;
    out["params"] = rep.params;
    out["pass"] = rep.pass;
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    if (timings) out["millis"] = rep.millis;
    return out;
}

namespace {

std::string superscript(int e) {
    static const char* digits[] = {"⁰", "¹", "²", "³",
                                   "⁴", "⁵", "⁶", "⁷",
                                   "⁸", "⁹"};
    std::string dec = std::to_string(e);
    std::string out;
    for (char ch : dec) out += digits[ch - '0'];
    return out;
}

std::string pretty_monomial(const Int& v, int e, bool first) {
    Int a = v;
    std::string out;
    if (a < 0) {
        out += first ? "-" : " - ";
        a = -a;
    } else if (!first) {
        out += " + ";
    }
    const bool unit = a == 1;
    if (!unit || e == 0) out += a.get_str();
    if (e > 0) {
        out += "t";
        if (e > 1) out += superscript(e);
    }
    return out;
}

}  // namespace

std::string pretty_poly(const TPoly& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int e = c.degree(); e >= 0; --e) {
        const Int& v = c.coeff(e);
        if (v == 0) continue;
        out += pretty_monomial(v, e, first);
        first = false;
    }
    return out;
}

std::string pretty_symfunc(const SymFunc& f) {
    if (f.is_zero()) return "0";
    const std::string label = f.basis().label();
    std::string out;
    bool first = true;
    for (const auto& [p, c] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        if (c.is_one()) {
            out += label + p.str();
        } else {
            size_t nonzero = 0;
            bool neg = false;
            for (const Int& v : c.coeffs()) {
                if (v != 0) ++nonzero;
                if (v < 0) neg = true;
            }
            /* a single positive monomial needs no parentheses */
            if (nonzero == 1 && !neg)
                out += pretty_poly(c) + "·" + label + p.str();
            else
                out += "(" + pretty_poly(c) + ")·" + label + p.str();
        }
    }
    return out;
}

}  // namespace kschur
