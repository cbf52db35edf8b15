#ifndef BKP_POLY_HPP
#define BKP_POLY_HPP

#include <vector>

#include "bkp/rational.hpp"

namespace bkp {

// Dense univariate polynomial over Rat, ascending coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& c) { return Poly({c}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rat coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rat(0);
    }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const { return *this + o * Rat(-1); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Poly(std::move(c));
    }
    Poly operator*(const Rat& s) const {
        std::vector<Rat> c = coeffs_;
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }

    // p(x + shift)
    Poly shifted(const Rat& shift) const {
        Poly r;
        Poly base = constant(Rat(1));
        Poly lin({shift, Rat(1)});
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            r = r + base * coeffs_[i];
            base = base * lin;
        }
        return r;
    }

    // p(a x + b)
    Poly composed_affine(const Rat& a, const Rat& b) const {
        Poly r;
        Poly base = constant(Rat(1));
        Poly lin({b, a});
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            r = r + base * coeffs_[i];
            base = base * lin;
        }
        return r;
    }

    bool operator==(const Poly&) const = default;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

// Falling factorial x(x-1)...(x-n+1) evaluated at an integer.
inline Rat falling(long x, int n) {
    Rat r = 1;
    for (int i = 0; i < n; ++i) r *= Rat(x - i);
    return r;
}

// Falling factorial as a polynomial in x.
inline Poly falling_poly(int n, const Rat& offset = Rat(0)) {
    Poly r = Poly::constant(Rat(1));
    for (int i = 0; i < n; ++i) r = r * Poly({offset - i, Rat(1)});
    return r;
}

}  // namespace bkp

#endif
