#include "zm/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace zm {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    Rational n = o.norm();
    GaussianRational num = *this * o.conj();
    re = num.re / n;
    im = num.im / n;
    return *this;
}

GaussianRational pow(const GaussianRational& base, unsigned long exp) {
    GaussianRational acc(1);
    GaussianRational b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

Rational pow(const Rational& base, unsigned long exp) {
    Rational acc(1);
    Rational b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::size_t i = 0;
    auto take_int = [&](bool sign_ok) -> std::string {
        std::string out;
        if (sign_ok && i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') out.push_back('-');  // mpz rejects a leading '+'
            ++i;
        }
        std::size_t start = out.size();
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
        if (out.size() == start) throw ParseError("expected digits in rational literal: " + text);
        return out;
    };
    std::string num = take_int(true);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = take_int(false);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational literal: " + text);
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator: " + text);
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

GaussianRational parse_gaussian(const std::string& text) {
    if (text.empty()) throw ParseError("empty number literal");
    // Split at the last top-level '+'/'-' that is not the leading sign and not
    // directly after '/'; the trailing factor must end in 'i' for a complex part.
    auto parse_part = [&](std::string s, bool imaginary) -> Rational {
        if (imaginary) {
            if (s.empty() || s.back() != 'i') throw ParseError("malformed imaginary part: " + text);
            s.pop_back();
            if (s.empty() || s == "+") s = "1";
            else if (s == "-") s = "-1";
        }
        return parse_rational(s);
    };
    if (text.back() == 'i') {
        // Either pure imaginary or re±im·i. Find the split sign.
        std::size_t split = std::string::npos;
        for (std::size_t i = text.size() - 1; i > 0; --i) {
            char c = text[i];
            if ((c == '+' || c == '-') && text[i - 1] != '/' && text[i - 1] != '+' && text[i - 1] != '-') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            return {Rational(0), parse_part(text, true)};
        }
        return {parse_rational(text.substr(0, split)), parse_part(text.substr(split), true)};
    }
    return {parse_rational(text), Rational(0)};
}

std::string to_string(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string to_string(const GaussianRational& v) {
    if (v.is_real()) return to_string(v.re);
    std::ostringstream os;
    if (v.re != 0) {
        os << v.re;
        if (v.im > 0) os << '+';
    }
    os << v.im << 'i';
    return os.str();
}

double to_double(const Rational& v) { return mpq_get_d(v.get_mpq_t()); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << to_string(v); }

}  // namespace zm
