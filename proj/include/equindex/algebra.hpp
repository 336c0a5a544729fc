#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "equindex/errors.hpp"
#include "equindex/modp.hpp"

namespace equindex {

enum class GenKind { exterior, truncated, rewrite };

// One generator of a presented graded-commutative F_p-algebra.
//   exterior      g^2 = 0
//   truncated(t)  g^t = 0
//   rewrite       g^2 -> rewrite_coeff * (monomial of the same degree as g^2)
struct GeneratorSpec {
    std::string name;
    int degree = 1;
    GenKind kind = GenKind::exterior;
    int truncation = 0;
    int rewrite_coeff = 0;
    std::vector<int> rewrite_target;  // exponents over generators 0 .. own index

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// An ordered list of generators with their relations. Immutable once elements
// have been built on it; share via shared_ptr<const AlgebraPresentation>.
class AlgebraPresentation {
public:
    AlgebraPresentation(std::int64_t p, std::string name) : prime_(p), name_(std::move(name)) {
        require_prime(p);
    }

    std::int64_t prime() const { return prime_; }
    const std::string& name() const { return name_; }
    const std::vector<GeneratorSpec>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }

    // Free-form note carried along for reports (e.g. a Bockstein pairing).
    const std::string& annotation() const { return annotation_; }
    void set_annotation(std::string a) { annotation_ = std::move(a); }

    int index_of(const std::string& gname) const {
        for (std::size_t i = 0; i < generators_.size(); ++i)
            if (generators_[i].name == gname) return static_cast<int>(i);
        throw structural_error("no generator named '" + gname + "' in " + name_);
    }

    void add_exterior(const std::string& gname, int degree) {
        check_new(gname, degree);
        generators_.push_back({gname, degree, GenKind::exterior, 0, 0, {}});
    }

    void add_truncated(const std::string& gname, int degree, int truncation) {
        check_new(gname, degree);
        if (truncation < 1) throw parameter_error("truncation must be >= 1");
        if (prime_ != 2 && degree % 2 != 0 && truncation > 2)
            throw parameter_error(
                "odd-degree generator over an odd prime squares to zero; truncation > 2 is inconsistent");
        generators_.push_back({gname, degree, GenKind::truncated, truncation, 0, {}});
    }

    // Installs g^2 -> coeff * target. The target may mention g itself with
    // exponent at most 1; every other factor must be a strictly earlier
    // generator, which is what makes the rewriting terminate.
    void add_rewrite(const std::string& gname, int degree, std::int64_t coeff,
                     const std::vector<std::pair<std::string, int>>& target) {
        check_new(gname, degree);
        if (prime_ != 2 && degree % 2 != 0)
            throw parameter_error("rewrite generator of odd degree over an odd prime: g^2 vanishes identically");
        const int self = static_cast<int>(generators_.size());
        std::vector<int> exps(self + 1, 0);
        int target_degree = 0;
        for (const auto& [tname, e] : target) {
            if (e < 0) throw parameter_error("negative exponent in rewrite target");
            const int idx = (tname == gname) ? self : index_of(tname);
            exps[idx] += e;
            target_degree += e * (idx == self ? degree : generators_[idx].degree);
        }
        if (exps[self] > 1)
            throw parameter_error("rewrite target may contain the generator itself at most once");
        if (target_degree != 2 * degree)
            throw parameter_error("rewrite target must have the degree of g^2");
        std::int64_t c = coeff % prime_;
        if (c < 0) c += prime_;
        generators_.push_back({gname, degree, GenKind::rewrite, 0, static_cast<int>(c), std::move(exps)});
    }

    friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
        return a.prime_ == b.prime_ && a.generators_ == b.generators_;
    }

private:
    void check_new(const std::string& gname, int degree) {
        if (gname.empty()) throw parameter_error("generator name must be nonempty");
        if (degree < 1) throw parameter_error("generator degree must be positive");
        for (const auto& g : generators_)
            if (g.name == gname) throw parameter_error("duplicate generator name '" + gname + "'");
    }

    std::int64_t prime_;
    std::string name_;
    std::string annotation_;
    std::vector<GeneratorSpec> generators_;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

// Exponent vector aligned with the presentation's generator order.
struct Monomial {
    std::vector<int> exponents;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; }
};

inline int monomial_degree(const AlgebraPresentation& pres, const Monomial& m) {
    if (m.exponents.size() != pres.size())
        throw structural_error("monomial width does not match presentation " + pres.name());
    int d = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        d += m.exponents[i] * pres.generators()[i].degree;
    return d;
}

namespace detail {

// Koszul sign of the concatenation a.b once re-sorted into generator order:
// each odd-degree occurrence of b crossing an odd-degree occurrence of a at a
// larger index contributes a factor of -1.
inline int koszul_sign(const AlgebraPresentation& pres, const std::vector<int>& a,
                       const std::vector<int>& b) {
    if (pres.prime() == 2) return 1;
    long long crossings = 0;
    long long odd_above = 0;
    for (int j = static_cast<int>(pres.size()) - 1; j >= 0; --j) {
        if (pres.generators()[j].degree % 2 != 0) {
            crossings += static_cast<long long>(b[j]) * odd_above;
            odd_above += a[j];
        }
    }
    return (crossings % 2 == 0) ? 1 : -1;
}

// Reduce a raw exponent vector to normal form. Relations are principal, so
// every intermediate is a single scaled monomial: the result is one term or
// zero. Each rewrite lowers the exponent of its generator by one net and adds
// only earlier factors, so the loop stays within the degree^2 budget.
inline std::optional<std::pair<Monomial, int>> normalize_monomial(const AlgebraPresentation& pres,
                                                                  Monomial m, std::int64_t coeff) {
    const std::int64_t p = pres.prime();
    coeff %= p;
    if (coeff < 0) coeff += p;
    if (coeff == 0) return std::nullopt;
    if (m.exponents.size() != pres.size())
        throw structural_error("monomial width does not match presentation " + pres.name());

    const auto& gens = pres.generators();
    const long long deg = monomial_degree(pres, m);
    const long long budget = deg * deg + 16;

    for (long long step = 0;; ++step) {
        if (step > budget)
            throw internal_error("rewriting exceeded the degree^2 step budget in " + pres.name());
        int rw = -1;
        for (int i = static_cast<int>(gens.size()) - 1; i >= 0; --i) {
            const int e = m.exponents[i];
            switch (gens[i].kind) {
                case GenKind::exterior:
                    if (e >= 2) return std::nullopt;
                    break;
                case GenKind::truncated:
                    if (e >= gens[i].truncation) return std::nullopt;
                    break;
                case GenKind::rewrite:
                    if (e >= 2 && rw < 0) rw = i;
                    break;
            }
        }
        if (rw < 0) return std::make_pair(std::move(m), static_cast<int>(coeff));

        // g^2 has even total degree, so splitting it off costs no sign; the
        // Koszul sign shows up when the target is merged back in.
        const GeneratorSpec& g = gens[rw];
        m.exponents[rw] -= 2;
        coeff = coeff * g.rewrite_coeff % p;
        if (coeff == 0) return std::nullopt;
        std::vector<int> target(pres.size(), 0);
        std::copy(g.rewrite_target.begin(), g.rewrite_target.end(), target.begin());
        if (koszul_sign(pres, m.exponents, target) < 0) coeff = p - coeff;
        for (std::size_t i = 0; i < target.size(); ++i) m.exponents[i] += target[i];
    }
}

}  // namespace detail

// A finitely supported F_p-linear combination of normal-form monomials.
// Immutable value type; all operations are pure.
class AlgebraElement {
public:
    static AlgebraElement zero(PresentationPtr pres) { return AlgebraElement(std::move(pres)); }

    static AlgebraElement unit(PresentationPtr pres) {
        AlgebraElement a(std::move(pres));
        a.terms_.emplace(Monomial{std::vector<int>(a.pres_->size(), 0)}, 1);
        return a;
    }

    static AlgebraElement generator(PresentationPtr pres, const std::string& name) {
        AlgebraElement a(std::move(pres));
        Monomial m{std::vector<int>(a.pres_->size(), 0)};
        m.exponents[a.pres_->index_of(name)] = 1;
        a.terms_.emplace(std::move(m), 1);
        return a;
    }

    // c * m, reduced to normal form.
    static AlgebraElement term(PresentationPtr pres, const Monomial& m, std::int64_t c) {
        AlgebraElement a(std::move(pres));
        if (auto nf = detail::normalize_monomial(*a.pres_, m, c))
            a.terms_.emplace(std::move(nf->first), nf->second);
        return a;
    }

    const PresentationPtr& presentation() const { return pres_; }
    const std::map<Monomial, int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            (void)c;
            const int dm = monomial_degree(*pres_, m);
            if (!d)
                d = dm;
            else if (*d != dm)
                return false;
        }
        return true;
    }

    // Degree of a nonzero homogeneous element; nullopt for zero or mixed sums.
    std::optional<int> degree() const {
        if (terms_.empty() || !is_homogeneous()) return std::nullopt;
        return monomial_degree(*pres_, terms_.begin()->first);
    }

    AlgebraElement scaled(std::int64_t c) const {
        AlgebraElement out(pres_);
        for (const auto& [m, tc] : terms_) out.accumulate(m, tc * c);
        return out;
    }

    AlgebraElement operator-() const { return scaled(pres_->prime() - 1); }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        require_same_presentation(a, b);
        AlgebraElement out = a;
        for (const auto& [m, c] : b.terms_) out.accumulate(m, c);
        return out;
    }

    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        return a + (-b);
    }

    friend AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
        require_same_presentation(a, b);
        const AlgebraPresentation& pres = *a.pres_;
        const std::int64_t p = pres.prime();
        AlgebraElement out(a.pres_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                std::int64_t c = static_cast<std::int64_t>(ca) * cb % p;
                if (detail::koszul_sign(pres, ma.exponents, mb.exponents) < 0) c = (p - c) % p;
                Monomial raw;
                raw.exponents.resize(pres.size());
                for (std::size_t i = 0; i < pres.size(); ++i)
                    raw.exponents[i] = ma.exponents[i] + mb.exponents[i];
                if (auto nf = detail::normalize_monomial(pres, std::move(raw), c))
                    out.accumulate(nf->first, nf->second);
            }
        }
        return out;
    }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        return multiply(a, b);
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.pres_ != b.pres_ && !(*a.pres_ == *b.pres_)) return false;
        return a.terms_ == b.terms_;
    }

    // Canonical text form "c1*mono1 + c2*mono2 + ..." in monomial order;
    // exponent 1 prints bare, the unit monomial prints as the coefficient.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (std::size_t i = 0; i < m.exponents.size(); ++i) {
                const int e = m.exponents[i];
                if (e == 0) continue;
                os << '*' << pres_->generators()[i].name;
                if (e >= 2) os << '^' << e;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) {
        return os << a.str();
    }

private:
    explicit AlgebraElement(PresentationPtr pres) : pres_(std::move(pres)) {
        if (!pres_) throw parameter_error("element requires a presentation");
    }

    static void require_same_presentation(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.pres_ == b.pres_) return;
        if (*a.pres_ == *b.pres_) return;
        throw structural_error("elements live in different presentations (" + a.pres_->name() +
                               " vs " + b.pres_->name() + ")");
    }

    void accumulate(const Monomial& m, std::int64_t c) {
        const std::int64_t p = pres_->prime();
        c %= p;
        if (c < 0) c += p;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, static_cast<int>(c));
            return;
        }
        it->second = static_cast<int>((it->second + c) % p);
        if (it->second == 0) terms_.erase(it);
    }

    PresentationPtr pres_;
    std::map<Monomial, int> terms_;
};

inline AlgebraElement power(const AlgebraElement& a, std::int64_t n) {
    if (n < 0) throw parameter_error("power: exponent must be non-negative");
    AlgebraElement out = AlgebraElement::unit(a.presentation());
    for (std::int64_t i = 0; i < n; ++i) {
        out = multiply(out, a);
        if (out.is_zero()) break;
    }
    return out;
}

// min{n >= 1 : a^n = 0}, or nullopt once the cap is exceeded. Defined for
// homogeneous elements of positive degree only.
inline std::optional<int> height(const AlgebraElement& a, int cap) {
    if (cap < 1) throw parameter_error("height: cap must be positive");
    const auto d = a.degree();
    if (!d || *d < 1)
        throw parameter_error("height requires a homogeneous element of positive degree");
    AlgebraElement pw = a;
    for (int n = 1; n <= cap; ++n) {
        if (pw.is_zero()) return n;
        pw = multiply(pw, a);
    }
    return std::nullopt;
}

}  // namespace equindex
