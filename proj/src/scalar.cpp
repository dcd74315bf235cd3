#include "fedosov/scalar.hpp"

namespace fedosov {

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("Scalar::ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    Rational n2 = o.re_ * o.re_ + o.im_ * o.im_;
    if (n2 == 0) throw std::domain_error("Scalar: division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / n2;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
    std::string out = rational_str(re_);
    if (im_ >= 0) {
        out += "+" + rational_str(im_);
    } else {
        out += "-" + rational_str(Rational(-im_));
    }
    out += "*i";
    return out;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    try {
        Rational q(text);  // accepts "n" and "n/d"
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    }
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Scalar::parse: empty string");
    // Split at the last top-level '+' or '-' that is not the leading sign.
    // The grammar is simple enough that scanning once suffices.
    std::string s = text;
    bool has_i = false;
    std::string re_part, im_part;
    // locate "*i" suffix if present
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
        has_i = true;
        s = s.substr(0, s.size() - 2);
    } else if (s == "i") {
        return Scalar(Rational(0), Rational(1));
    } else if (s == "-i") {
        return Scalar(Rational(0), Rational(-1));
    }
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
        if (s[k] == '/') {
            // signs inside a denominator are not split points; keep scanning
            continue;
        }
    }
    if (has_i) {
        if (split == std::string::npos) {
            // pure imaginary "c/d*i"
            return Scalar(Rational(0), parse_rational(s));
        }
        re_part = s.substr(0, split);
        im_part = s.substr(split);  // keep the sign
        if (!im_part.empty() && im_part[0] == '+') im_part = im_part.substr(1);
        return Scalar(parse_rational(re_part), parse_rational(im_part));
    }
    return Scalar(parse_rational(s));
}

}  // namespace fedosov
