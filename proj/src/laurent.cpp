#include "pretzelpoly/laurent.hpp"

#include <stdexcept>
#include <utility>

namespace pretzel {

std::string_view var_name(Var v) {
    return v == Var::A ? "A" : "z";
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exp, Var var) {
    LaurentPoly p(var);
    if (coeff != 0)
        p.terms_.emplace(exp, std::move(coeff));
    return p;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::max_exponent() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

void LaurentPoly::require_same_var(const LaurentPoly& rhs) const {
    if (var_ != rhs.var_)
        throw std::invalid_argument("LaurentPoly: mixing variables A and z");
}

void LaurentPoly::insert_term(int exp, const BigInt& coeff) {
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    require_same_var(rhs);
    for (const auto& [exp, c] : rhs.terms_)
        insert_term(exp, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    require_same_var(rhs);
    for (const auto& [exp, c] : rhs.terms_)
        insert_term(exp, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_var(b);
    LaurentPoly out(a.var_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.insert_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(var_);
    for (const auto& [exp, c] : terms_)
        out.terms_.emplace(exp, -c);
    return out;
}

LaurentPoly substitute_inverse(const LaurentPoly& p) {
    LaurentPoly out(p.var());
    for (const auto& [exp, c] : p.terms())
        out += LaurentPoly::monomial(c, -exp, p.var());
    return out;
}

namespace {

void append_term(std::string& out, const BigInt& coeff, int exp,
                 std::string_view var, bool first, bool latex) {
    const bool neg = coeff < 0;
    if (first) {
        if (neg) out += '-';
    } else {
        out += neg ? " - " : " + ";
    }
    const BigInt mag = abs(coeff);
    if (exp == 0) {
        out += mag.str();
        return;
    }
    if (mag != 1)
        out += mag.str();
    out += var;
    if (exp != 1) {
        if (latex) {
            out += "^{";
            out += std::to_string(exp);
            out += '}';
        } else {
            out += '^';
            out += std::to_string(exp);
        }
    }
}

std::string render(const LaurentPoly& p, bool latex) {
    if (p.is_zero())
        return "0";
    std::string out;
    const auto name = var_name(p.var());
    bool first = true;
    if (p.var() == Var::A) {
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            append_term(out, it->second, it->first, name, first, latex);
            first = false;
        }
    } else {
        for (const auto& [exp, c] : p.terms()) {
            append_term(out, c, exp, name, first, latex);
            first = false;
        }
    }
    return out;
}

}  // namespace

std::string to_text(const LaurentPoly& p) { return render(p, false); }
std::string to_latex(const LaurentPoly& p) { return render(p, true); }

std::string to_json(const LaurentPoly& p) {
    std::string out = "{\"variable\":\"";
    out += var_name(p.var());
    out += "\",\"terms\":[";
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) out += ',';
        first = false;
        out += "{\"exp\":";
        out += std::to_string(it->first);
        out += ",\"coeff\":\"";
        out += it->second.str();
        out += "\"}";
    }
    out += "]}";
    return out;
}

}  // namespace pretzel
