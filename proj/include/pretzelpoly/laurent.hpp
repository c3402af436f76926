#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>

namespace pretzel {

using BigInt = boost::multiprecision::cpp_int;

// The two rings used in this project: Z[A^{±1}] for bracket polynomials and
// Z[z^{±1}] for Conway polynomials. The tag only affects rendering and is
// checked in arithmetic to catch accidental mixing.
enum class Var : unsigned char { A, Z };

std::string_view var_name(Var v);

/// Sparse single-variable Laurent polynomial with exact integer coefficients.
/// Canonical form: no zero coefficient is ever stored; the zero polynomial
/// has an empty term map.
class LaurentPoly {
public:
    explicit LaurentPoly(Var var = Var::A) : var_(var) {}

    static LaurentPoly zero(Var var) { return LaurentPoly(var); }
    static LaurentPoly one(Var var) { return monomial(1, 0, var); }
    static LaurentPoly monomial(BigInt coeff, int exp, Var var);

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int exp) const;
    /// Largest exponent with a nonzero coefficient; 0 for the zero polynomial.
    int max_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& rhs) const {
        return var_ == rhs.var_ && terms_ == rhs.terms_;
    }

private:
    void insert_term(int exp, const BigInt& coeff);
    void require_same_var(const LaurentPoly& rhs) const;

    Var var_;
    std::map<int, BigInt> terms_;
};

/// The exponent map x -> x^{-1}: negates every exponent.
LaurentPoly substitute_inverse(const LaurentPoly& p);

// Rendering. Bracket polynomials (variable A) print highest exponent first,
// Conway polynomials (variable z) lowest first; JSON is always sorted by
// descending exponent with coefficients as decimal strings, e.g.
//   {"variable":"A","terms":[{"exp":7,"coeff":"1"}, ...]}
std::string to_text(const LaurentPoly& p);
std::string to_latex(const LaurentPoly& p);
std::string to_json(const LaurentPoly& p);

}  // namespace pretzel
