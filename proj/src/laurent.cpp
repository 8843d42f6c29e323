#include "rimsurg/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rimsurg {

LaurentPolynomial::LaurentPolynomial(std::vector<mpz_class> coeffs, long low) : c_(std::move(coeffs)), low_(low) {
    trim();
}

void LaurentPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        low_ += static_cast<long>(lead);
    }
    if (c_.empty()) low_ = 0;
}

mpz_class LaurentPolynomial::coefficient(long exp) const {
    if (is_zero() || exp < low_ || exp > high()) return 0;
    return c_[static_cast<std::size_t>(exp - low_)];
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const long lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
    return LaurentPolynomial(std::move(out), lo);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const { return *this + (-o); }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return LaurentPolynomial(std::move(out), low_ + o.low_);
}

LaurentPolynomial LaurentPolynomial::exact_div(const LaurentPolynomial& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    if (c_.size() < o.c_.size()) throw std::domain_error("inexact Laurent division");
    std::vector<mpz_class> rem = c_;
    const std::size_t qn = c_.size() - o.c_.size() + 1;
    std::vector<mpz_class> q(qn);
    const mpz_class& lead = o.c_.back();
    for (std::size_t k = qn; k-- > 0;) {
        const mpz_class& top = rem[k + o.c_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw std::domain_error("inexact Laurent division");
        mpz_class f = top / lead;
        q[k] = f;
        for (std::size_t j = 0; j < o.c_.size(); ++j) rem[k + j] -= f * o.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("inexact Laurent division");
    return LaurentPolynomial(std::move(q), low_ - o.low_);
}

LaurentPolynomial LaurentPolynomial::normalized() const {
    if (is_zero()) return {};
    LaurentPolynomial r(c_, 0);
    if (r.c_.back() < 0) r = -r;
    return r;
}

mpz_class LaurentPolynomial::evaluate(long t) const {
    if (is_zero()) return 0;
    if (t == 0 && low_ < 0) throw std::domain_error("negative power at t = 0");
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    // acc = sum c_i t^i; multiply by t^low.
    if (low_ >= 0) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mpz_class(t).get_mpz_t(), static_cast<unsigned long>(low_));
        return acc * p;
    }
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), mpz_class(t).get_mpz_t(), static_cast<unsigned long>(-low_));
    if (!mpz_divisible_p(acc.get_mpz_t(), p.get_mpz_t())) throw std::domain_error("non-integral value");
    return acc / p;
}

bool LaurentPolynomial::is_palindromic() const {
    const std::size_t n = c_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (c_[i] != c_[n - 1 - i]) return false;
    return true;
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        const long e = low_ + static_cast<long>(i);
        mpz_class mag = abs(c);
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        if (mag != 1 || e == 0) out << mag.get_str();
        if (e != 0) {
            out << 't';
            if (e != 1) out << '^' << e;
        }
        first = false;
    }
    return out.str();
}

nlohmann::json LaurentPolynomial::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& c : c_) {
        if (c.fits_slong_p())
            arr.push_back(c.get_si());
        else
            arr.push_back(c.get_str());
    }
    return {{"base_exponent", low_}, {"coefficients", arr}};
}

LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPolynomial::constant(1);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    LaurentPolynomial prev = LaurentPolynomial::constant(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace rimsurg
