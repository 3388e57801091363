#include "tropimpl/rational.hpp"

#include "tropimpl/errors.hpp"

#include <limits>

namespace tropimpl {

namespace {

bool is_decimal_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Int parse_int(std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Int(s, 10);
}

}  // namespace

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_decimal_integer(text)) fail(ErrorCode::Parse, "not a rational: '" + text + "'");
        return Rat(parse_int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-')
        fail(ErrorCode::Parse, "not a rational: '" + text + "'");
    Int d = parse_int(den);
    if (d == 0) fail(ErrorCode::Parse, "zero denominator: '" + text + "'");
    Rat r(parse_int(num), d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int gcd_of(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int lcm_of_denominators(const RatVector& v) {
    Int l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVector primitive(IntVector v) {
    Int g = gcd_of(v);
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVector canonical_scale(IntVector v) {
    v = primitive(std::move(v));
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

IntVector canonical_scale(const RatVector& v) {
    Int l = lcm_of_denominators(v);
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * l;
        out[i] = s.get_num();
    }
    return canonical_scale(std::move(out));
}

Int dot(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVector& a, const RatVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector to_rat(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

bool is_integral(const RatVector& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

IntVector to_int(const RatVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) fail(ErrorCode::InvalidArgument, "non-integral vector entry");
        out[i] = v[i].get_num();
    }
    return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVector scale(const IntVector& a, const Int& s) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

IntVector negate(IntVector a) {
    for (auto& x : a) x = -x;
    return a;
}

RatVector add(const RatVector& a, const RatVector& b) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVector int_vector(std::initializer_list<long> values) {
    IntVector out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector out(n, Int(0));
    out[i] = 1;
    return out;
}

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

Int floor_of(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int ceil_of(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

std::int64_t to_int64(const Int& value) {
    if (!mpz_fits_slong_p(value.get_mpz_t()))
        fail(ErrorCode::InvalidArgument, "integer does not fit in 64 bits");
    return static_cast<std::int64_t>(value.get_si());
}

}  // namespace tropimpl
